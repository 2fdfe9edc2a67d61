//! Dense univariate polynomials over Z_{p^r} in the indeterminate `d`.
//!
//! Text syntax (shared with the CLI): terms `c`, `c*d`, `c*d^k`, `d^k`, `d`
//! joined by `+` or `-`; whitespace is ignored, coefficients are decimal
//! integers reduced mod p^r and repeated powers are summed.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{RingSpec, ZprElem};

/// A polynomial with coefficients in Z_{p^r}, lowest power first.
///
/// Always normalized: the last stored coefficient is nonzero, and the zero
/// polynomial stores no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<u64>,
    ring: RingSpec,
}

impl Poly {
    pub fn zero(ring: RingSpec) -> Self {
        Self {
            coeffs: Vec::new(),
            ring,
        }
    }

    pub fn one(ring: RingSpec) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: RingSpec, c: u64) -> Self {
        Self::from_coeffs(ring, vec![c])
    }

    /// `c * d^k`
    pub fn monomial(ring: RingSpec, c: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::from_coeffs(ring, coeffs)
    }

    /// Builds a polynomial from raw coefficients (lowest power first),
    /// reducing each mod p^r.
    pub fn from_coeffs(ring: RingSpec, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| ring.reduce(c)).collect();
        normalize(&mut coeffs);
        Self { coeffs, ring }
    }

    pub fn from_signed(ring: RingSpec, coeffs: &[i64]) -> Self {
        Self::from_coeffs(ring, coeffs.iter().map(|&c| ring.reduce_signed(c)).collect())
    }

    pub fn from_elems(ring: RingSpec, coeffs: &[ZprElem]) -> Result<Self> {
        let mut raw = Vec::with_capacity(coeffs.len());
        for c in coeffs {
            ring.check_same(&c.ring())?;
            raw.push(c.value());
        }
        Ok(Self::from_coeffs(ring, raw))
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    /// `None` stands for the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `d^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeff_elem(&self, i: usize) -> ZprElem {
        ZprElem::new(self.ring, self.coeff(i))
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.add_raw(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.sub_raw(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.mul_raw(other))
    }

    fn add_raw(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.ring.add(self.coeff(i), other.coeff(i)))
            .collect();
        Self::normalized(self.ring, coeffs)
    }

    fn sub_raw(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.ring.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Self::normalized(self.ring, coeffs)
    }

    fn mul_raw(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring);
        }
        let mut coeffs = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.ring.mul_add(coeffs[i + j], a, b);
            }
        }
        Self::normalized(self.ring, coeffs)
    }

    fn normalized(ring: RingSpec, mut coeffs: Vec<u64>) -> Self {
        normalize(&mut coeffs);
        Self { coeffs, ring }
    }

    pub fn scale(&self, c: u64) -> Self {
        let c = self.ring.reduce(c);
        let coeffs = self.coeffs.iter().map(|&a| self.ring.mul(a, c)).collect();
        Self::normalized(self.ring, coeffs)
    }

    /// Multiplies by `d^s`.
    pub fn shift(&self, s: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; s];
        coeffs.extend_from_slice(&self.coeffs);
        Self {
            coeffs,
            ring: self.ring,
        }
    }

    /// Drops every power above `d^t`.
    pub fn truncate(&self, t: usize) -> Self {
        let coeffs = self.coeffs.iter().take(t + 1).copied().collect();
        Self::normalized(self.ring, coeffs)
    }

    /// Coefficientwise reduction mod p into Z_p[d].
    pub fn project_p(&self) -> Self {
        let field = self.ring.residue_field();
        Self::from_coeffs(field, self.coeffs.iter().map(|&c| c % field.p()).collect())
    }

    /// Reinterprets the coefficients in another ring with the same prime.
    ///
    /// Coefficients are kept verbatim, so a Z_p polynomial maps through the
    /// digit set {0, …, p-1} ⊂ Z_{p^r}. Going to a smaller ring reduces.
    pub fn lift_to(&self, target: RingSpec) -> Result<Self> {
        if target.p() != self.ring.p() {
            return Err(Error::PrimeMismatch {
                source_p: self.ring.p(),
                target_p: target.p(),
            });
        }
        Ok(Self::from_coeffs(target, self.coeffs.clone()))
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = self.ring.reduce(x);
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| self.ring.add(self.ring.mul(acc, x), c))
    }

    /// Order: the least ℓ with p^ℓ · self = 0.
    pub fn ord(&self) -> u32 {
        self.coeffs.iter().map(|&c| self.ring.ord(c)).max().unwrap_or(0)
    }

    /// Scales so that the leading coefficient is 1. Requires a unit leading
    /// coefficient.
    pub fn monic(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let inv = self
            .ring
            .inv(self.leading_coeff())
            .map_err(|_| Error::NonUnitLeadingCoefficient)?;
        Ok(self.scale(inv))
    }

    /// Euclidean division by a divisor whose leading coefficient is a unit.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.ring.check_same(&divisor.ring)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::NonUnitLeadingCoefficient);
        };
        let lead_inv = self
            .ring
            .inv(divisor.leading_coeff())
            .map_err(|_| Error::NonUnitLeadingCoefficient)?;
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree().filter(|&sd| sd >= dd) else {
            return Ok((Self::zero(self.ring), self.clone()));
        };
        let mut quot = vec![0; sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = self.ring.mul(rem[i + dd], lead_inv);
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = self.ring.sub(rem[i + j], self.ring.mul(c, b));
            }
        }
        Ok((
            Self::normalized(self.ring, quot),
            Self::normalized(self.ring, rem),
        ))
    }

    /// Parses the text syntax described in the module docs.
    pub fn parse(s: &str, ring: RingSpec) -> Result<Self> {
        parse_poly(s, ring, 1, 1)
    }

    /// Like [`Poly::parse`] but reporting errors relative to a position in
    /// a larger document.
    pub fn parse_at(s: &str, ring: RingSpec, line: usize, column: usize) -> Result<Self> {
        parse_poly(s, ring, line, column)
    }
}

fn normalize(coeffs: &mut Vec<u64>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

/// Monic gcd over the residue field Z_p.
pub fn gcd_over_field(a: &Poly, b: &Poly) -> Result<Poly> {
    a.ring.check_same(&b.ring)?;
    if !a.ring.is_field() {
        return Err(Error::NotAField(a.ring.modulus()));
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y)?;
        x = y;
        y = r;
    }
    x.monic()
}

/// Order of a polynomial vector: max order over all of its coefficients.
pub fn ord_vector(w: &[Poly]) -> u32 {
    w.iter().map(Poly::ord).max().unwrap_or(0)
}

/// Hamming weight of a polynomial vector: nonzero coefficients summed over
/// every power of `d`.
pub fn weight_vector(w: &[Poly]) -> usize {
    w.iter().map(Poly::weight).sum()
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    /// Panics on ring mismatch; use [`Poly::checked_add`] to get an error.
    fn add(self, rhs: &'a Poly) -> Poly {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &'a Poly) -> Poly {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &'a Poly) -> Poly {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::normalized(
            self.ring,
            self.coeffs.iter().map(|&c| self.ring.neg(c)).collect(),
        )
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "d")?,
                (1, c) => write!(f, "{c}*d")?,
                (i, 1) => write!(f, "d^{i}")?,
                (i, c) => write!(f, "{c}*d^{i}")?,
            }
        }
        Ok(())
    }
}

fn parse_poly(s: &str, ring: RingSpec, line: usize, column: usize) -> Result<Poly> {
    let chars: Vec<(usize, char)> = s
        .chars()
        .enumerate()
        .filter(|(_, ch)| !ch.is_whitespace())
        .collect();
    let err = |idx: usize, message: &str| Error::Parse {
        line,
        column: column + chars.get(idx).map_or(s.chars().count(), |&(pos, _)| pos),
        message: message.to_string(),
    };
    if chars.is_empty() {
        return Err(err(0, "empty polynomial"));
    }

    let mut coeffs: Vec<u64> = Vec::new();
    let mut i = 0;
    let mut negative = false;
    let mut expect_term = true;
    while i < chars.len() {
        let ch = chars[i].1;
        if !expect_term {
            match ch {
                '+' => negative = false,
                '-' => negative = true,
                _ => return Err(err(i, "expected '+' or '-' between terms")),
            }
            i += 1;
            expect_term = true;
            continue;
        }
        if ch == '-' && i == 0 {
            negative = true;
            i += 1;
            continue;
        }

        let term_start = i;
        let mut coeff: Option<u64> = None;
        let mut wants_d = true;
        if ch.is_ascii_digit() {
            wants_d = false;
            let mut value: u64 = 0;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                let digit = chars[i].1 as u64 - '0' as u64;
                value = ring.reduce(value * 10 + digit);
                i += 1;
            }
            coeff = Some(value);
            if i < chars.len() && chars[i].1 == '*' {
                i += 1;
                if i >= chars.len() || chars[i].1 != 'd' {
                    return Err(err(i, "expected 'd' after '*'"));
                }
                wants_d = true;
            }
        }
        let mut power = 0usize;
        if wants_d && i < chars.len() && chars[i].1 == 'd' {
            i += 1;
            power = 1;
            if i < chars.len() && chars[i].1 == '^' {
                i += 1;
                let exp_start = i;
                let mut exp: usize = 0;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    exp = exp
                        .checked_mul(10)
                        .and_then(|e| e.checked_add(chars[i].1 as usize - '0' as usize))
                        .filter(|&e| e <= 4096)
                        .ok_or_else(|| err(exp_start, "exponent too large"))?;
                    i += 1;
                }
                if i == exp_start {
                    return Err(err(i, "expected exponent after '^'"));
                }
                power = exp;
            }
        } else if coeff.is_none() {
            return Err(err(term_start, "expected a coefficient or 'd'"));
        }
        let mut value = coeff.unwrap_or(1);
        if negative {
            value = ring.neg(value);
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, 0);
        }
        coeffs[power] = ring.add(coeffs[power], value);
        negative = false;
        expect_term = false;
    }
    if expect_term {
        return Err(err(chars.len(), "dangling operator"));
    }
    Ok(Poly::from_coeffs(ring, coeffs))
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
    fn arithmetic_examples() {
        let z4 = ring(2, 2);
        assert_eq!(&poly("1+d", z4) * &poly("1+d", z4), poly("1+2*d+d^2", z4));
        // 1+4d+3d^2 reduced mod 4
        assert_eq!(&poly("1+d", z4) * &poly("1+3*d", z4), poly("1+3*d^2", z4));
        let z2 = ring(2, 1);
        assert!((&poly("1+d", z2) + &poly("1+d", z2)).is_zero());
    }

    #[test]
    fn zero_degree_is_minus_infinity() {
        let z4 = ring(2, 2);
        assert_eq!(Poly::zero(z4).degree(), None);
        assert_eq!(Poly::one(z4).degree(), Some(0));
        assert_eq!(poly("2*d^2+2*d^2", z4).degree(), None);
    }

    #[test]
    fn projection_examples() {
        let z4 = ring(2, 2);
        let z2 = ring(2, 1);
        assert_eq!(poly("1+2*d", z4).project_p(), poly("1", z2));
        assert_eq!(poly("1+3*d", z4).project_p(), poly("1+d", z2));
        assert!(poly("3+6*d", ring(3, 2)).project_p().is_zero());
    }

    #[test]
    fn gcd_examples() {
        let z2 = ring(2, 1);
        assert_eq!(gcd_over_field(&poly("1+d", z2), &poly("1+d", z2)).unwrap(), poly("1+d", z2));
        assert_eq!(gcd_over_field(&poly("1+d", z2), &poly("d", z2)).unwrap(), poly("1", z2));
        assert_eq!(gcd_over_field(&poly("1+d^2", z2), &poly("1+d", z2)).unwrap(), poly("1+d", z2));
        let zero = Poly::zero(z2);
        assert_eq!(gcd_over_field(&zero, &zero), Err(Error::BothZero));
        assert_eq!(gcd_over_field(&zero, &poly("d+1", z2)).unwrap(), poly("1+d", z2));
        let z4 = ring(2, 2);
        assert_eq!(
            gcd_over_field(&poly("1", z4), &poly("1", z4)),
            Err(Error::NotAField(4))
        );
        // Z_5: monic normalization
        let z5 = ring(5, 1);
        assert_eq!(
            gcd_over_field(&poly("2+2*d", z5), &poly("3+3*d", z5)).unwrap(),
            poly("1+d", z5)
        );
    }

    #[test]
    fn ord_vector_examples() {
        let z4 = ring(2, 2);
        assert_eq!(ord_vector(&[poly("2", z4), poly("2*d", z4)]), 1);
        assert_eq!(ord_vector(&[poly("1+2*d", z4), Poly::zero(z4)]), 2);
        assert_eq!(ord_vector(&[poly("4*d^2", ring(2, 3))]), 1);
        assert_eq!(ord_vector(&[Poly::zero(z4)]), 0);
    }

    #[test]
    fn parse_syntax() {
        let z4 = ring(2, 2);
        assert_eq!(poly(" 1 + 3 * d ", z4).coeffs(), &[1, 3]);
        assert_eq!(poly("2*d^3", z4).coeffs(), &[0, 0, 0, 2]);
        assert_eq!(poly("d^2+d+d", z4).coeffs(), &[0, 2, 1]);
        assert_eq!(poly("d+1", z4), poly("1+d", z4));
        assert_eq!(poly("7", z4).coeffs(), &[3]);
        assert_eq!(poly("1-d", z4).coeffs(), &[1, 3]);
        assert_eq!(poly("-1", z4).coeffs(), &[3]);
        assert!(poly("0", z4).is_zero());
        for bad in ["", "1+", "d^", "x", "1**d", "2d", "1+*d", "d^99999"] {
            assert!(
                matches!(Poly::parse(bad, z4), Err(Error::Parse { .. })),
                "accepted {bad:?}"
            );
        }
        match Poly::parse("1+3*x", z4) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn display_round_trips() {
        let z9 = ring(3, 2);
        for s in ["0", "1", "d", "2*d", "1+d^3", "4+7*d+d^2+8*d^5"] {
            let p = poly(s, z9);
            assert_eq!(p.to_string(), s);
            assert_eq!(poly(&p.to_string(), z9), p);
        }
    }

    #[test]
    fn div_rem_requires_unit_leading() {
        let z4 = ring(2, 2);
        let (q, r) = poly("1+3*d^2", z4).div_rem(&poly("1+d", z4)).unwrap();
        assert_eq!(&(&q * &poly("1+d", z4)) + &r, poly("1+3*d^2", z4));
        assert!(r.degree().unwrap_or(0) < 1);
        assert_eq!(
            poly("1+d", z4).div_rem(&poly("1+2*d", z4)),
            Err(Error::NonUnitLeadingCoefficient)
        );
    }

    #[test]
    fn lift_keeps_digits() {
        let z2 = ring(2, 1);
        let lifted = poly("1+d", z2).lift_to(ring(2, 3)).unwrap();
        assert_eq!(lifted.coeffs(), &[1, 1]);
        assert!(poly("1", z2).lift_to(ring(3, 2)).is_err());
    }

    #[test]
    fn checked_ops_report_mismatch() {
        let a = poly("1+d", ring(2, 2));
        let b = poly("1+d", ring(2, 3));
        assert!(matches!(a.checked_add(&b), Err(Error::RingMismatch { .. })));
        assert!(matches!(a.checked_mul(&b), Err(Error::RingMismatch { .. })));
    }
}
