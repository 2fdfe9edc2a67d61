//! Convolutional codes over Z_{p^r}: encoder admission, encoding, module
//! membership, equivalence, parity checks and the b-degree.

use crate::error::{Error, Result};
use crate::linsys::{self, Matrix};
use crate::poly::{ord_vector, Poly};
use crate::polymat::{reduce_to_identity_zero, right_inverse, PolyMatrix};
use crate::primeness::minor_gcd;
use crate::series::{series_inverse, TruncatedSeries};

/// A free code given by a k × n encoder whose rows are independent.
///
/// Facts about the encoder are computed once at admission.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvCode {
    g: PolyMatrix,
    noncatastrophic: bool,
    b_degree: usize,
    right_inverse: Option<PolyMatrix>,
    parity_check: Option<PolyMatrix>,
}

/// A codeword, optionally with the information word that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    pub w: Vec<Poly>,
    pub source_u: Option<Vec<Poly>>,
}

/// Finite output from an infinite input on a catastrophic encoder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatastrophicDemo {
    /// Monic gcd of the projected encoder row, over Z_p.
    pub gcd: Poly,
    pub horizon: usize,
    pub input: Vec<TruncatedSeries>,
    pub output: Vec<TruncatedSeries>,
    pub input_weight: usize,
    pub output_weight: usize,
    /// Every output coefficient above the encoder degree vanishes.
    pub tail_is_zero: bool,
}

impl ConvCode {
    pub fn new(g: PolyMatrix) -> Result<Self> {
        let (k, n) = (g.rows(), g.cols());
        if k > n {
            return Err(Error::DimensionMismatch(format!(
                "encoder must have k <= n, got {k}x{n}"
            )));
        }
        let rank = g.projected_rank();
        if rank < k {
            return Err(Error::NotFullRowRank { rank, rows: k });
        }
        let b_degree = g
            .project_p()
            .full_size_minors(k)?
            .iter()
            .filter_map(|m| m.value.degree())
            .max()
            .expect("full row rank leaves a nonzero minor");
        let right_inverse = right_inverse(&g);
        let noncatastrophic = right_inverse.is_some();
        let parity_check = if noncatastrophic && k < n {
            Some(build_parity_check(&g)?)
        } else {
            None
        };
        Ok(Self {
            g,
            noncatastrophic,
            b_degree,
            right_inverse,
            parity_check,
        })
    }

    pub fn encoder(&self) -> &PolyMatrix {
        &self.g
    }

    pub fn ring(&self) -> crate::ring::RingSpec {
        self.g.ring()
    }

    pub fn k(&self) -> usize {
        self.g.rows()
    }

    pub fn n(&self) -> usize {
        self.g.cols()
    }

    pub fn is_noncatastrophic(&self) -> bool {
        self.noncatastrophic
    }

    /// Degree of the projected code: the largest degree among the full-size
    /// minors of `[G]_p`.
    pub fn b_degree(&self) -> usize {
        self.b_degree
    }

    /// Polynomial right inverse of the encoder, present iff noncatastrophic.
    pub fn right_inverse(&self) -> Option<&PolyMatrix> {
        self.right_inverse.as_ref()
    }

    /// Largest entry degree of the encoder.
    pub fn memory(&self) -> usize {
        self.g.max_degree().unwrap_or(0)
    }

    pub fn encode(&self, u: &[Poly]) -> Result<Codeword> {
        let w = self.g.left_mul_vec(u)?;
        debug_assert_eq!(ord_vector(&w), ord_vector(u), "encoding changed the order");
        Ok(Codeword {
            w,
            source_u: Some(u.to_vec()),
        })
    }

    /// n × (n-k) matrix `H` with `C = { w : w·H = 0 }`.
    pub fn parity_check(&self) -> Result<&PolyMatrix> {
        if !self.noncatastrophic {
            return Err(Error::Catastrophic);
        }
        self.parity_check
            .as_ref()
            .ok_or_else(|| Error::UnsupportedShape("a k = n code has no parity-check columns".into()))
    }

    /// Whether `w · H = 0`. A k = n noncatastrophic code contains every word.
    pub fn kernel_membership(&self, w: &[Poly]) -> Result<bool> {
        if !self.noncatastrophic {
            return Err(Error::Catastrophic);
        }
        check_len(w, self.n())?;
        match &self.parity_check {
            None => Ok(true),
            Some(h) => Ok(h.left_mul_vec(w)?.iter().all(Poly::is_zero)),
        }
    }

    /// Degree bound on `u` used when deciding `u · G = w` for `deg w = t`.
    ///
    /// With a right inverse `X`, `u = w · X` so `t + deg X` suffices;
    /// the encoder-size bound `t + k · deg G` is always included.
    pub fn membership_degree_bound(&self, target_degree: usize) -> usize {
        let generic = target_degree + self.k() * self.memory();
        match &self.right_inverse {
            Some(x) => generic.max(target_degree + x.max_degree().unwrap_or(0)),
            None => generic,
        }
    }

    /// Some `u` with `u · G = w`, searched with the default degree bound.
    pub fn membership(&self, w: &[Poly]) -> Result<Option<Vec<Poly>>> {
        check_len(w, self.n())?;
        let t = w.iter().filter_map(Poly::degree).max().unwrap_or(0);
        self.membership_with_bound(w, self.membership_degree_bound(t))
    }

    /// Some `u` with `deg u <= deg_bound` and `u · G = w`, by an exact linear
    /// solve over the coefficients of `u`.
    pub fn membership_with_bound(&self, w: &[Poly], deg_bound: usize) -> Result<Option<Vec<Poly>>> {
        check_len(w, self.n())?;
        let ring = self.ring();
        for p in w {
            ring.check_same(&p.ring())?;
        }
        let (k, n) = (self.k(), self.n());
        let unknowns_per_row = deg_bound + 1;
        let w_deg = w.iter().filter_map(Poly::degree).max().unwrap_or(0);
        let top = w_deg.max(deg_bound + self.memory());
        let mut a = Matrix::zeros(ring, n * (top + 1), k * unknowns_per_row);
        let mut b = vec![0; n * (top + 1)];
        for j in 0..n {
            for e in 0..=top {
                let eq = j * (top + 1) + e;
                b[eq] = w[j].coeff(e);
                for i in 0..k {
                    let g = self.g.get(i, j);
                    for t in 0..=deg_bound.min(e) {
                        let c = g.coeff(e - t);
                        if c != 0 {
                            a.set(eq, i * unknowns_per_row + t, c);
                        }
                    }
                }
            }
        }
        Ok(linsys::solve(&a, &b).map(|x| {
            x.chunks(unknowns_per_row)
                .map(|c| Poly::from_coeffs(ring, c.to_vec()))
                .collect()
        }))
    }

    /// `k × k` matrix `U` with `U · self = other`, if every row of `other`
    /// lies in this code.
    fn combining_matrix(&self, other: &Self) -> Result<Option<PolyMatrix>> {
        let mut rows = Vec::with_capacity(self.k());
        for i in 0..other.k() {
            let target = other.g.row(i);
            let t = target.iter().filter_map(Poly::degree).max().unwrap_or(0);
            let bound = self.membership_degree_bound(t);
            match self.membership_with_bound(target, bound)? {
                Some(u) => rows.push(u),
                None => return Ok(None),
            }
        }
        Ok(Some(PolyMatrix::from_rows(self.ring(), rows)?))
    }

    /// Whether the two encoders generate the same module.
    pub fn equivalent(&self, other: &Self) -> Result<bool> {
        self.ring().check_same(&other.ring())?;
        if self.k() != other.k() || self.n() != other.n() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{} encoders",
                self.k(),
                self.n(),
                other.k(),
                other.n()
            )));
        }
        let Some(u) = self.combining_matrix(other)? else { return Ok(false) };
        let Some(v) = other.combining_matrix(self)? else { return Ok(false) };
        assert_eq!(u.mul(&self.g)?, other.g);
        assert_eq!(v.mul(&other.g)?, self.g);
        assert!(u.is_unimodular()?, "combining matrix of equivalent encoders must be unimodular");
        Ok(true)
    }

    /// Feeds `p^{r-1} / g(d)` into a catastrophic single-row encoder, where
    /// `g` is the gcd of the projected row.
    pub fn catastrophic_demo(&self, horizon: usize) -> Result<CatastrophicDemo> {
        if self.noncatastrophic {
            return Err(Error::NotCatastrophic);
        }
        if self.k() != 1 {
            return Err(Error::UnsupportedShape(format!(
                "demo needs k = 1, got k = {}",
                self.k()
            )));
        }
        let ring = self.ring();
        let gcd = minor_gcd(&self.g.project_p())?;
        if gcd.coeff(0) == 0 {
            return Err(Error::NonUnitConstantGcd);
        }
        let scale = ring.p_pow(ring.r() - 1);
        let input = series_inverse(&gcd.lift_to(ring)?, horizon)?.scale(scale);
        let output = self
            .g
            .row(0)
            .iter()
            .map(|g| input.mul_poly(g))
            .collect::<Result<Vec<_>>>()?;
        let memory = self.memory();
        let tail_is_zero = output
            .iter()
            .all(|s| s.support_degree().is_none_or(|d| d <= memory));
        Ok(CatastrophicDemo {
            gcd,
            horizon,
            input_weight: input.weight(),
            output_weight: output.iter().map(TruncatedSeries::weight).sum(),
            input: vec![input],
            output,
            tail_is_zero,
        })
    }
}

fn check_len(w: &[Poly], n: usize) -> Result<()> {
    if w.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "word of length {} for a code of length {n}",
            w.len()
        )));
    }
    Ok(())
}

/// Trailing n-k columns of `V1` from `U1 G V1 = [I 0]`.
fn build_parity_check(g: &PolyMatrix) -> Result<PolyMatrix> {
    let (k, n) = (g.rows(), g.cols());
    let red = reduce_to_identity_zero(g)?;
    let h = red.v1.block(0, n, k, n);
    assert!(g.mul(&h)?.is_zero(), "parity check failed to annihilate the encoder");
    debug_assert_eq!(h.projected_rank(), n - k);
    Ok(h)
}
