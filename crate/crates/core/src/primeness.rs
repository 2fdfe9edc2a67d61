//! Left zero-primeness, field-level left primeness, and a bounded search
//! for non-unimodular left factors.
//!
//! Zero-primeness is decided exactly through the projection onto Z_p.
//! Factor-primeness has no decision procedure here: [`lfp_search`]
//! enumerates candidate square factors up to a degree bound, and an empty
//! search is inconclusive.

use crate::error::{Error, Result};
use crate::linsys::{self, Matrix};
use crate::poly::{gcd_over_field, Poly};
use crate::polymat::{right_inverse, smith_form, PolyMatrix};

/// Cap on the number of candidate left factors enumerated by [`lfp_search`].
pub const LFP_SEARCH_LIMIT: u128 = 10_000_000;

/// Outcome of the bounded factor-primeness search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LfpVerdict {
    /// `delta · quotient = A` with `delta` square and not unimodular.
    FactorFound { delta: PolyMatrix, quotient: PolyMatrix },
    /// No non-unimodular factor with entry degrees up to the bound.
    NoFactorUpToBound(usize),
    /// Zero-prime matrices are factor-prime; no search needed.
    ImpliedByLzp,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimenessReport {
    pub is_lzp: bool,
    /// Verified polynomial right inverse when `is_lzp`.
    pub lzp_certificate: Option<PolyMatrix>,
    /// Monic gcd of the full-size minors of the projection (zero when they
    /// all vanish).
    pub field_gcd: Poly,
    /// Rank of the projection over Z_p(d).
    pub projected_rank: usize,
    pub lfp_verdict: LfpVerdict,
}

fn check_wide(a: &PolyMatrix) -> Result<()> {
    if a.rows() > a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "left primeness needs rows <= cols, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(())
}

/// Monic gcd of all full-size minors of a matrix over Z_p.
pub fn minor_gcd(a: &PolyMatrix) -> Result<Poly> {
    let ring = a.ring();
    if !ring.is_field() {
        return Err(Error::NotAField(ring.modulus()));
    }
    check_wide(a)?;
    let mut g = Poly::zero(ring);
    for minor in a.full_size_minors(a.rows())? {
        if minor.value.is_zero() {
            continue;
        }
        g = if g.is_zero() {
            minor.value.monic()?
        } else {
            gcd_over_field(&g, &minor.value)?
        };
    }
    Ok(g)
}

/// Left primeness over the field Z_p: the full-size minors generate Z_p[d],
/// i.e. their gcd is a nonzero constant.
pub fn is_left_prime_field(a: &PolyMatrix) -> Result<bool> {
    let ring = a.ring();
    if !ring.is_field() {
        return Err(Error::NotAField(ring.modulus()));
    }
    check_wide(a)?;
    let rank = smith_form(a)?.rank;
    if rank < a.rows() {
        return Err(Error::RankDeficient {
            rank,
            rows: a.rows(),
        });
    }
    Ok(minor_gcd(a)?.degree() == Some(0))
}

/// Left zero-primeness over Z_{p^r}: decided on the projection.
pub fn is_lzp(a: &PolyMatrix) -> Result<bool> {
    let prime = is_left_prime_field(&a.project_p())?;
    if prime {
        let cert = right_inverse(a).expect("left prime projection has a right inverse");
        debug_assert_eq!(a.mul(&cert)?, PolyMatrix::identity(a.ring(), a.rows()));
    }
    Ok(prime)
}

/// Bounded search for a non-unimodular left factor, short-circuiting on
/// zero-prime inputs.
pub fn lfp_search(a: &PolyMatrix, deg_bound: usize) -> Result<LfpVerdict> {
    check_wide(a)?;
    match is_lzp(a) {
        Ok(true) => return Ok(LfpVerdict::ImpliedByLzp),
        Ok(false) | Err(Error::RankDeficient { .. }) => {}
        Err(e) => return Err(e),
    }
    Ok(match search_left_factor(a, deg_bound)? {
        Some((delta, quotient)) => LfpVerdict::FactorFound { delta, quotient },
        None => LfpVerdict::NoFactorUpToBound(deg_bound),
    })
}

/// Number of candidate factors `(p^r)^{k^2 (bound+1)}`, saturating.
fn search_size(modulus: u64, k: usize, deg_bound: usize) -> u128 {
    let exp = (k * k * (deg_bound + 1)) as u32;
    (modulus as u128).checked_pow(exp).unwrap_or(u128::MAX)
}

/// Exhaustive search, without the zero-prime short cut, for square `delta`
/// with entry degrees `<= deg_bound`, `delta` not unimodular, and
/// `delta · quotient = A` for some `quotient` with entry degrees `<= deg A`.
///
/// Candidates are visited in lexicographic order of their coefficient
/// tuples (row-major entries, ascending powers); the first hit is returned.
pub fn search_left_factor(a: &PolyMatrix, deg_bound: usize) -> Result<Option<(PolyMatrix, PolyMatrix)>> {
    check_wide(a)?;
    let ring = a.ring();
    let k = a.rows();
    let size = search_size(ring.modulus(), k, deg_bound);
    if size > LFP_SEARCH_LIMIT {
        return Err(Error::SearchTooLarge {
            size,
            limit: LFP_SEARCH_LIMIT,
        });
    }
    let q = ring.modulus();
    let slots = k * k * (deg_bound + 1);
    let mut digits = vec![0u64; slots];
    loop {
        let delta = delta_from_digits(a, &digits, deg_bound);
        if !delta.is_unimodular()? {
            if let Some(quotient) = divide_left(&delta, a)? {
                debug_assert_eq!(delta.mul(&quotient)?, *a);
                return Ok(Some((delta, quotient)));
            }
        }
        // odometer: last slot fastest
        let mut pos = slots;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < q {
                break;
            }
            digits[pos] = 0;
        }
    }
}

fn delta_from_digits(a: &PolyMatrix, digits: &[u64], deg_bound: usize) -> PolyMatrix {
    let ring = a.ring();
    let k = a.rows();
    let entries = digits
        .chunks(deg_bound + 1)
        .map(|c| Poly::from_coeffs(ring, c.to_vec()))
        .collect();
    PolyMatrix::new(ring, k, k, entries).expect("k x k factor")
}

/// Solves `delta · quotient = a` for `quotient` with entry degrees at most
/// `deg a`, one column at a time.
fn divide_left(delta: &PolyMatrix, a: &PolyMatrix) -> Result<Option<PolyMatrix>> {
    let ring = a.ring();
    let (k, n) = (a.rows(), a.cols());
    let quot_len = a.max_degree().unwrap_or(0) + 1;
    let delta_len = delta.max_degree().unwrap_or(0) + 1;
    let eq_len = quot_len + delta_len - 1;

    // unknown (l, s) -> column l*quot_len + s; equation (i, t) -> row i*eq_len + t
    let mut system = Matrix::zeros(ring, k * eq_len, k * quot_len);
    for i in 0..k {
        for l in 0..k {
            let entry = delta.get(i, l);
            for (e, &c) in entry.coeffs().iter().enumerate() {
                for s in 0..quot_len {
                    system.set(i * eq_len + e + s, l * quot_len + s, c);
                }
            }
        }
    }
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        let mut rhs = vec![0u64; k * eq_len];
        for i in 0..k {
            let target = a.get(i, j);
            if target.degree().unwrap_or(0) >= eq_len {
                return Ok(None);
            }
            for (t, &c) in target.coeffs().iter().enumerate() {
                rhs[i * eq_len + t] = c;
            }
        }
        match linsys::solve(&system, &rhs) {
            Some(x) => columns.push(x),
            None => return Ok(None),
        }
    }
    let mut entries = Vec::with_capacity(k * n);
    for l in 0..k {
        for col in &columns {
            entries.push(Poly::from_coeffs(ring, col[l * quot_len..(l + 1) * quot_len].to_vec()));
        }
    }
    Ok(Some(PolyMatrix::new(ring, k, n, entries)?))
}

/// Full primeness report with every certificate re-verified.
pub fn analyze(a: &PolyMatrix, deg_bound: usize) -> Result<PrimenessReport> {
    check_wide(a)?;
    let proj = a.project_p();
    let projected_rank = smith_form(&proj)?.rank;
    let field_gcd = minor_gcd(&proj)?;
    let is_lzp = match is_lzp(a) {
        Ok(v) => v,
        Err(Error::RankDeficient { .. }) => false,
        Err(e) => return Err(e),
    };
    let lzp_certificate = if is_lzp {
        let cert = right_inverse(a).expect("zero-prime matrix has a right inverse");
        assert_eq!(a.mul(&cert)?, PolyMatrix::identity(a.ring(), a.rows()));
        Some(cert)
    } else {
        None
    };
    let lfp_verdict = lfp_search(a, deg_bound)?;
    if let LfpVerdict::FactorFound { delta, quotient } = &lfp_verdict {
        assert!(!delta.is_unimodular()?);
        assert_eq!(delta.mul(quotient)?, *a);
    }
    Ok(PrimenessReport {
        is_lzp,
        lzp_certificate,
        field_gcd,
        projected_rank,
        lfp_verdict,
    })
}

/// Right primeness via the transpose.
pub fn analyze_right(a: &PolyMatrix, deg_bound: usize) -> Result<PrimenessReport> {
    analyze(&a.transpose(), deg_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingSpec;

    fn ring(p: u64, r: u32) -> RingSpec {
        RingSpec::new(p, r).unwrap()
    }

    fn mat(ring: RingSpec, rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::parse_rows(ring, rows).unwrap()
    }

    #[test]
    fn field_primeness_examples() {
        let z2 = ring(2, 1);
        assert!(!is_left_prime_field(&mat(z2, &[&["1+d", "1+d"]])).unwrap());
        assert!(is_left_prime_field(&mat(z2, &[&["1", "d"]])).unwrap());
        assert!(is_left_prime_field(&mat(z2, &[&["1", "d", "0"], &["0", "1", "d"]])).unwrap());
        assert_eq!(
            is_left_prime_field(&mat(z2, &[&["1", "d"], &["1", "d"]])),
            Err(Error::RankDeficient { rank: 1, rows: 2 })
        );
        assert!(is_left_prime_field(&mat(ring(2, 2), &[&["1"]])).is_err());
    }

    #[test]
    fn lzp_examples() {
        let z4 = ring(2, 2);
        assert!(!is_lzp(&mat(z4, &[&["1+3*d", "1+d"]])).unwrap());
        assert!(is_lzp(&mat(z4, &[&["1", "d"]])).unwrap());
        assert!(is_lzp(&mat(z4, &[&["1+2*d", "d"]])).unwrap());
        assert!(matches!(
            is_lzp(&mat(z4, &[&["2", "2*d"]])),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn lfp_examples() {
        let z4 = ring(2, 2);
        assert_eq!(
            lfp_search(&mat(z4, &[&["1+3*d", "1+d"]]), 2).unwrap(),
            LfpVerdict::NoFactorUpToBound(2)
        );
        assert_eq!(
            lfp_search(&mat(z4, &[&["2+2*d", "2"]]), 0).unwrap(),
            LfpVerdict::FactorFound {
                delta: mat(z4, &[&["2"]]),
                quotient: mat(z4, &[&["1+d", "1"]]),
            }
        );
        for bound in [0, 1, 5] {
            assert_eq!(
                lfp_search(&mat(z4, &[&["1", "d"]]), bound).unwrap(),
                LfpVerdict::ImpliedByLzp
            );
        }
    }

    #[test]
    fn lfp_search_guard() {
        let z4 = ring(2, 2);
        let a = mat(z4, &[&["1+3*d", "1+d", "d"], &["1", "d", "1+d"]]);
        assert!(matches!(search_left_factor(&a, 2), Err(Error::SearchTooLarge { .. })));
    }

    #[test]
    fn example_is_not_divisible_by_projection_gcd() {
        // 1+3d is not a Z_4[d]-multiple of 1+d
        let z4 = ring(2, 2);
        let (_, r) = Poly::parse("1+3*d", z4).unwrap().div_rem(&Poly::parse("1+d", z4).unwrap()).unwrap();
        assert!(!r.is_zero());
    }

    #[test]
    fn analyze_examples() {
        let z4 = ring(2, 2);
        let z2 = ring(2, 1);
        let rep = analyze(&mat(z4, &[&["1+3*d", "1+d"]]), 2).unwrap();
        assert!(!rep.is_lzp);
        assert_eq!(rep.field_gcd, Poly::parse("1+d", z2).unwrap());
        assert_eq!(rep.lfp_verdict, LfpVerdict::NoFactorUpToBound(2));
        assert!(rep.lzp_certificate.is_none());

        let rep = analyze(&mat(z4, &[&["1", "d"]]), 2).unwrap();
        assert!(rep.is_lzp);
        assert_eq!(rep.lfp_verdict, LfpVerdict::ImpliedByLzp);
        assert_eq!(rep.lzp_certificate, Some(mat(z4, &[&["1"], &["0"]])));

        let rep = analyze(&mat(z4, &[&["2+2*d", "2"]]), 0).unwrap();
        assert!(!rep.is_lzp);
        assert!(rep.field_gcd.is_zero());
        assert_eq!(rep.projected_rank, 0);
        match rep.lfp_verdict {
            LfpVerdict::FactorFound { delta, quotient } => {
                assert_eq!(delta.mul(&quotient).unwrap(), mat(z4, &[&["2+2*d", "2"]]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn right_variant_uses_transpose() {
        let z4 = ring(2, 2);
        let rep = analyze_right(&mat(z4, &[&["1"], &["d"]]), 1).unwrap();
        assert!(rep.is_lzp);
    }
}
