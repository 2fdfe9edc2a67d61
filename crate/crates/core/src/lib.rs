//! Exact algebra for convolutional codes over the finite ring Z_{p^r}.
//!
//! The crate is organized bottom-up:
//!
//! - [`ring`]: residues mod p^r, units, p-adic digits and element order;
//! - [`poly`] and [`series`]: polynomials in `d` and truncated power series;
//! - [`linsys`]: scalar matrices and exact linear solving over Z_{p^r};
//! - [`polymat`]: polynomial matrices, Smith form over Z_p[d] and the lifts
//!   that carry Z_p constructions back to Z_{p^r};
//! - [`primeness`]: left zero-prime / factor-prime analysis;
//! - [`convcode`]: encoders, noncatastrophicity, parity checks and b-degree;
//! - [`distances`]: free and column distances, Singleton/MDP criteria and
//!   lifts of Z_p codes.

pub mod convcode;
pub mod distances;
pub mod error;
pub mod linsys;
pub mod poly;
pub mod polymat;
pub mod primeness;
pub mod ring;
pub mod series;

pub use convcode::{Codeword, ConvCode};
pub use error::{Error, Result};
pub use poly::Poly;
pub use polymat::PolyMatrix;
pub use ring::{RingSpec, ZprElem};
pub use series::TruncatedSeries;
