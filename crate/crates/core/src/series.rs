//! Formal power series over Z_{p^r} truncated at a fixed horizon.
//!
//! Used as a finite window onto rational functions p(d)/q(d) whose
//! denominator has a unit constant term.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::RingSpec;

/// Coefficients of d^0 … d^T; products discard every power above T.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<u64>,
    ring: RingSpec,
}

impl TruncatedSeries {
    pub fn zero(ring: RingSpec, horizon: usize) -> Self {
        Self {
            coeffs: vec![0; horizon + 1],
            ring,
        }
    }

    pub fn from_poly(p: &Poly, horizon: usize) -> Self {
        let coeffs = (0..=horizon).map(|i| p.coeff(i)).collect();
        Self {
            coeffs,
            ring: p.ring(),
        }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn horizon(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero coefficients within the horizon.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// The window as a polynomial.
    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.ring, self.coeffs.clone())
    }

    /// Largest index with a nonzero coefficient, if any.
    pub fn support_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|&c| c != 0)
    }

    pub fn truncate(&self, horizon: usize) -> Self {
        assert!(horizon <= self.horizon(), "cannot extend a truncated series");
        Self {
            coeffs: self.coeffs[..=horizon].to_vec(),
            ring: self.ring,
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&a| self.ring.mul(a, c)).collect(),
            ring: self.ring,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| self.ring.add(a, b))
                .collect(),
            ring: self.ring,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let t = self.horizon();
        let mut coeffs = vec![0; t + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs[..=t - i].iter().enumerate() {
                coeffs[i + j] = self.ring.mul_add(coeffs[i + j], a, b);
            }
        }
        Ok(Self {
            coeffs,
            ring: self.ring,
        })
    }

    pub fn mul_poly(&self, p: &Poly) -> Result<Self> {
        self.mul(&Self::from_poly(p, self.horizon()))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.ring.check_same(&other.ring)?;
        if self.horizon() != other.horizon() {
            return Err(Error::DimensionMismatch(format!(
                "series horizons {} and {}",
                self.horizon(),
                other.horizon()
            )));
        }
        Ok(())
    }
}

/// Inverse of `q` modulo d^{T+1}; requires a unit constant term.
pub fn series_inverse(q: &Poly, horizon: usize) -> Result<TruncatedSeries> {
    let ring = q.ring();
    let c0_inv = ring.inv(q.coeff(0)).map_err(|_| Error::ConstantTermNotUnit)?;
    let mut inv = vec![0u64; horizon + 1];
    inv[0] = c0_inv;
    for t in 1..=horizon {
        // Σ_{i=0}^{t} q_i inv_{t-i} = 0
        let mut acc = 0;
        for i in 1..=t {
            acc = ring.mul_add(acc, q.coeff(i), inv[t - i]);
        }
        inv[t] = ring.mul(ring.neg(acc), c0_inv);
    }
    Ok(TruncatedSeries { coeffs: inv, ring })
}

/// Equality of rational functions n1/q1 and n2/q2 as the cross-multiplied
/// polynomial identity n1·q2 = n2·q1.
pub fn rational_equivalent(n1: &Poly, q1: &Poly, n2: &Poly, q2: &Poly) -> Result<bool> {
    Ok(n1.checked_mul(q2)? == n2.checked_mul(q1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, r: u32) -> RingSpec {
        RingSpec::new(p, r).unwrap()
    }

    fn poly(s: &str, ring: RingSpec) -> Poly {
        Poly::parse(s, ring).unwrap()
    }

    #[test]
    fn geometric_series() {
        let z2 = ring(2, 1);
        let inv = series_inverse(&poly("1+d", z2), 4).unwrap();
        assert_eq!(inv.coeffs(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn self_inverse_in_z4() {
        let z4 = ring(2, 2);
        let q = poly("1+2*d", z4);
        let inv = series_inverse(&q, 2).unwrap();
        assert_eq!(inv.to_poly(), poly("1+2*d", z4));
        let prod = inv.mul_poly(&q).unwrap();
        assert_eq!(prod.coeffs(), &[1, 0, 0]);
    }

    #[test]
    fn zero_constant_term_rejected() {
        let z2 = ring(2, 1);
        assert_eq!(
            series_inverse(&poly("d", z2), 4),
            Err(Error::ConstantTermNotUnit)
        );
        assert_eq!(
            series_inverse(&poly("2+d", ring(2, 2)), 4),
            Err(Error::ConstantTermNotUnit)
        );
    }

    #[test]
    fn rational_equivalence_predicate() {
        let z4 = ring(2, 2);
        // (1+d)/(1+3d) ~ (1+d)^2/((1+3d)(1+d))
        let n1 = poly("1+d", z4);
        let q1 = poly("1+3*d", z4);
        let n2 = &n1 * &n1;
        let q2 = &q1 * &n1;
        assert!(rational_equivalent(&n1, &q1, &n2, &q2).unwrap());
        assert!(!rational_equivalent(&n1, &q1, &Poly::one(z4), &Poly::one(z4)).unwrap());
    }

    #[test]
    fn horizon_mismatch() {
        let z4 = ring(2, 2);
        let a = TruncatedSeries::zero(z4, 3);
        let b = TruncatedSeries::zero(z4, 4);
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch(_))));
    }
}
