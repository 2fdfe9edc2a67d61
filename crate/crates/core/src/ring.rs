//! Arithmetic in the finite chain ring Z_{p^r}.
//!
//! [`RingSpec`] is a small `Copy` descriptor of the ring; polynomial and
//! matrix code keeps raw `u64` residues and calls the descriptor's
//! arithmetic helpers. [`ZprElem`] is the checked element type for callers
//! that want the ring carried along with the value.

use std::fmt;

use crate::error::{Error, Result};

const MAX_MODULUS: u64 = 1 << 31;

/// The ring Z_{p^r} with p prime and p^r <= 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingSpec {
    p: u64,
    r: u32,
    modulus: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

impl RingSpec {
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::InvalidExponent);
        }
        let mut modulus: u64 = 1;
        for _ in 0..r {
            modulus = modulus
                .checked_mul(p)
                .filter(|&m| m <= MAX_MODULUS)
                .ok_or(Error::ModulusTooLarge { p, r })?;
        }
        Ok(Self { p, r, modulus })
    }

    /// Parses a prime power modulus such as `8`, or the explicit form `2^3`.
    pub fn from_modulus_str(s: &str) -> Result<Self> {
        let bad = |message: &str| Error::Parse {
            line: 1,
            column: 1,
            message: format!("{message}: '{s}'"),
        };
        let s = s.trim();
        if let Some((p, r)) = s.split_once('^') {
            let p = p.trim().parse().map_err(|_| bad("invalid prime"))?;
            let r = r.trim().parse().map_err(|_| bad("invalid exponent"))?;
            return Self::new(p, r);
        }
        let m: u64 = s.parse().map_err(|_| bad("invalid modulus"))?;
        let p = (2..=m).find(|q| m.is_multiple_of(*q)).ok_or_else(|| bad("modulus must be > 1"))?;
        let mut rest = m;
        let mut r = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            r += 1;
        }
        if rest != 1 {
            return Err(bad("modulus is not a prime power"));
        }
        Self::new(p, r)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_field(&self) -> bool {
        self.r == 1
    }

    /// The residue field Z_p.
    pub fn residue_field(&self) -> RingSpec {
        RingSpec {
            p: self.p,
            r: 1,
            modulus: self.p,
        }
    }

    /// p^e reduced into the ring (zero once e >= r).
    pub fn p_pow(&self, e: u32) -> u64 {
        if e >= self.r {
            0
        } else {
            self.p.pow(e)
        }
    }

    pub fn reduce(&self, a: u64) -> u64 {
        a % self.modulus
    }

    /// Reduces a signed integer into [0, p^r).
    pub fn reduce_signed(&self, a: i64) -> u64 {
        a.rem_euclid(self.modulus as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.modulus
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.modulus - b) % self.modulus
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.modulus - a) % self.modulus
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.modulus
    }

    /// `acc + a*b` without an intermediate reduction of the product.
    pub fn mul_add(&self, acc: u64, a: u64, b: u64) -> u64 {
        (acc + a * b) % self.modulus
    }

    pub fn is_unit(&self, a: u64) -> bool {
        !a.is_multiple_of(self.p)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if !self.is_unit(a) {
            return Err(Error::NotAUnit {
                value: a,
                modulus: self.modulus,
            });
        }
        // Extended Euclid on (a, p^r).
        let (mut old_r, mut r) = (a as i64, self.modulus as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        Ok(self.reduce_signed(old_s))
    }

    /// p-adic valuation of a nonzero residue; `r` for zero.
    pub fn valuation(&self, a: u64) -> u32 {
        if a == 0 {
            return self.r;
        }
        let mut v = 0;
        let mut a = a;
        while a.is_multiple_of(self.p) {
            a /= self.p;
            v += 1;
        }
        v
    }

    /// Order of an element: |a Z_{p^r}| = p^ord. ord(0) = 0.
    pub fn ord(&self, a: u64) -> u32 {
        if a == 0 {
            0
        } else {
            self.r - self.valuation(a)
        }
    }

    /// Digits [α_0, …, α_{r-1}] with a = Σ α_i p^i.
    pub fn padic_digits(&self, a: u64) -> Vec<u64> {
        let mut a = self.reduce(a);
        (0..self.r)
            .map(|_| {
                let digit = a % self.p;
                a /= self.p;
                digit
            })
            .collect()
    }

    pub fn padic_recompose(&self, digits: &[u64]) -> u64 {
        digits
            .iter()
            .rev()
            .fold(0, |acc, &digit| self.reduce(acc * self.p + digit))
    }

    pub(crate) fn check_same(&self, other: &RingSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.modulus,
                right: other.modulus,
            })
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.modulus)
    }
}

/// An element of Z_{p^r} tagged with its ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZprElem {
    value: u64,
    ring: RingSpec,
}

impl ZprElem {
    pub fn new(ring: RingSpec, value: u64) -> Self {
        Self {
            value: ring.reduce(value),
            ring,
        }
    }

    pub fn from_signed(ring: RingSpec, value: i64) -> Self {
        Self {
            value: ring.reduce_signed(value),
            ring,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(Self::new(self.ring, self.ring.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(Self::new(self.ring, self.ring.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(Self::new(self.ring, self.ring.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.ring, self.ring.neg(self.value))
    }

    pub fn padic_expand(&self) -> Vec<u64> {
        self.ring.padic_digits(self.value)
    }

    pub fn is_unit(&self) -> bool {
        self.ring.is_unit(self.value)
    }

    pub fn inv_unit(&self) -> Result<Self> {
        Ok(Self::new(self.ring, self.ring.inv(self.value)?))
    }

    pub fn ord(&self) -> u32 {
        self.ring.ord(self.value)
    }

    /// Reduction mod p as an element of the residue field.
    pub fn project_p(&self) -> Self {
        Self::new(self.ring.residue_field(), self.value % self.ring.p)
    }
}

impl fmt::Display for ZprElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, r: u32) -> RingSpec {
        RingSpec::new(p, r).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert_eq!(RingSpec::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(RingSpec::new(1, 1), Err(Error::NotPrime(1)));
        assert_eq!(RingSpec::new(2, 0), Err(Error::InvalidExponent));
        assert!(RingSpec::new(2, 31).is_ok());
        assert!(matches!(RingSpec::new(2, 32), Err(Error::ModulusTooLarge { .. })));
        assert_eq!(ring(3, 2).modulus(), 9);
    }

    #[test]
    fn modulus_strings() {
        assert_eq!(RingSpec::from_modulus_str("8").unwrap(), ring(2, 3));
        assert_eq!(RingSpec::from_modulus_str("3^2").unwrap(), ring(3, 2));
        assert_eq!(RingSpec::from_modulus_str("7").unwrap(), ring(7, 1));
        assert!(RingSpec::from_modulus_str("12").is_err());
        assert!(RingSpec::from_modulus_str("1").is_err());
    }

    #[test]
    fn padic_examples() {
        assert_eq!(ZprElem::new(ring(2, 2), 3).padic_expand(), vec![1, 1]);
        assert_eq!(ZprElem::new(ring(2, 3), 6).padic_expand(), vec![0, 1, 1]);
        assert_eq!(ZprElem::new(ring(3, 2), 5).padic_expand(), vec![2, 1]);
    }

    #[test]
    fn unit_examples() {
        assert!(!ZprElem::new(ring(2, 2), 2).is_unit());
        assert!(ZprElem::new(ring(2, 2), 3).is_unit());
        assert!(!ZprElem::new(ring(3, 2), 6).is_unit());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(ZprElem::new(ring(2, 2), 3).inv_unit().unwrap().value(), 3);
        assert_eq!(ZprElem::new(ring(2, 3), 1).inv_unit().unwrap().value(), 1);
        // brute-force oracle for Z_9
        let z9 = ring(3, 2);
        let brute = (0..9).find(|x| (2 * x) % 9 == 1).unwrap();
        assert_eq!(brute, 5);
        assert_eq!(ZprElem::new(z9, 2).inv_unit().unwrap().value(), brute);
        assert_eq!(
            ZprElem::new(z9, 6).inv_unit(),
            Err(Error::NotAUnit { value: 6, modulus: 9 })
        );
    }

    #[test]
    fn ord_examples() {
        let z4 = ring(2, 2);
        assert_eq!(ZprElem::new(z4, 2).ord(), 1);
        assert_eq!(ZprElem::new(z4, 3).ord(), 2);
        assert_eq!(ZprElem::new(z4, 0).ord(), 0);
    }

    #[test]
    fn cross_ring_ops_fail() {
        let a = ZprElem::new(ring(2, 2), 1);
        let b = ZprElem::new(ring(2, 3), 1);
        assert_eq!(a.add(&b), Err(Error::RingMismatch { left: 4, right: 8 }));
        assert!(a.mul(&b).is_err());
        assert!(a.sub(&b).is_err());
    }

    fn small_rings() -> Vec<RingSpec> {
        let mut out = Vec::new();
        for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23] {
            for r in 1..=9 {
                if let Ok(ring) = RingSpec::new(p, r) {
                    if ring.modulus() <= 512 {
                        out.push(ring);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn exhaustive_small_ring_properties() {
        for ring in small_rings() {
            for a in 0..ring.modulus() {
                let e = ZprElem::new(ring, a);
                let digits = e.padic_expand();
                assert!(digits.iter().all(|&dgt| dgt < ring.p()));
                assert_eq!(ring.padic_recompose(&digits), a);

                let unit = e.is_unit();
                assert_eq!(unit, e.ord() == ring.r());
                assert_eq!(unit, e.inv_unit().is_ok());
                if unit {
                    let inv = e.inv_unit().unwrap();
                    assert_eq!(e.mul(&inv).unwrap().value(), 1);
                }
                if a != 0 {
                    assert_eq!(e.ord(), ring.r() - ring.valuation(a));
                }
                // Literal definition: |a Z| = p^ord.
                let image: std::collections::BTreeSet<u64> =
                    (0..ring.modulus()).map(|x| ring.mul(a, x)).collect();
                assert_eq!(image.len() as u64, ring.p().pow(e.ord()));
            }
        }
    }
}
