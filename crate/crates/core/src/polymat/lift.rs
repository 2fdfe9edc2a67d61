//! Lifting Z_p[d] reductions to Z_{p^r}[d].
//!
//! A matrix `X` with `[X]_p = I` is `I - N` with every entry of `N` divisible
//! by p, so `N^r = 0` and `X^{-1} = I + N + … + N^{r-1}`. All inverses here
//! are assembled this way from Smith transforms; nothing is inverted through
//! the adjugate.

use super::{smith_form, PolyMatrix};
use crate::error::{Error, Result};

/// `I + N + N^2 + … + N^{r-1}` where `N = I - x`; the inverse of `x` when
/// `[x]_p = I`.
fn geometric_inverse(x: &PolyMatrix) -> Result<PolyMatrix> {
    let ring = x.ring();
    let id = PolyMatrix::identity(ring, x.rows());
    let n = id.sub(x)?;
    debug_assert!(n.project_p().is_zero(), "geometric inverse needs [x]_p = I");
    let mut acc = id.clone();
    let mut power = id;
    for _ in 1..ring.r() {
        power = power.mul(&n)?;
        if power.is_zero() {
            break;
        }
        acc = acc.add(&power)?;
    }
    Ok(acc)
}

/// Given `m` over Z_{p^r} and a Z_p inverse of its projection (lifted
/// verbatim), returns the exact right inverse of `m`.
fn lift_inverse(m: &PolyMatrix, approx_inv: &PolyMatrix) -> Result<PolyMatrix> {
    let prod = m.mul(approx_inv)?;
    approx_inv.mul(&geometric_inverse(&prod)?)
}

/// Polynomial right inverse `B` with `A · B = I_k`, if one exists.
///
/// Exists exactly when the projection `[A]_p` is left prime over Z_p[d].
pub fn right_inverse(a: &PolyMatrix) -> Option<PolyMatrix> {
    let ring = a.ring();
    let (k, n) = (a.rows(), a.cols());
    if k > n {
        return None;
    }
    let sd = smith_form(&a.project_p()).ok()?;
    if !sd.is_identity_zero() {
        return None;
    }
    // U [A]_p V = [I 0]  =>  [A]_p · (V[:, :k] U) = I over Z_p.
    let b_p = sd.v.block(0, n, 0, k).mul(&sd.u).ok()?;
    let b = b_p.lift_to(ring).ok()?;
    let result = lift_inverse(a, &b).ok()?;
    let check = a.mul(&result).ok()?;
    assert_eq!(check, PolyMatrix::identity(ring, k), "right inverse failed to verify");
    Some(result)
}

/// Unimodular `U1`, `V1` with `U1 · A · V1 = [I_k 0]`, plus `V1^{-1}`
/// assembled from the same factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReduction {
    pub u1: PolyMatrix,
    pub v1: PolyMatrix,
    pub v1_inv: PolyMatrix,
}

/// Reduces a left zero-prime matrix to `[I_k 0]` by lifting the Smith
/// transforms of its projection and correcting with `X_1^{-1}`.
pub fn reduce_to_identity_zero(a: &PolyMatrix) -> Result<IdentityReduction> {
    let ring = a.ring();
    let (k, n) = (a.rows(), a.cols());
    if k > n {
        return Err(Error::DimensionMismatch(format!("{k}x{n} matrix has more rows than columns")));
    }
    let sd = smith_form(&a.project_p())?;
    if !sd.is_identity_zero() {
        return Err(Error::NotLeftZeroPrime);
    }
    let u = sd.u.lift_to(ring)?;
    let v = sd.v.lift_to(ring)?;
    let x = u.mul(a)?.mul(&v)?;
    let x1 = x.block(0, k, 0, k);
    let x1_inv = geometric_inverse(&x1)?;
    let u1 = x1_inv.mul(&u)?;

    let correction = if k < n {
        let x2 = x.block(0, k, k, n);
        let top = PolyMatrix::identity(ring, k).concat_horizontal(&x1_inv.mul(&x2)?.neg())?;
        let bottom = PolyMatrix::zeros(ring, n - k, k).concat_horizontal(&PolyMatrix::identity(ring, n - k))?;
        top.stack_vertical(&bottom)?
    } else {
        PolyMatrix::identity(ring, n)
    };
    let v1 = v.mul(&correction)?;

    // correction^{-1} flips the sign of the off-diagonal block.
    let correction_inv = PolyMatrix::identity(ring, n)
        .sub(&correction)?
        .add(&PolyMatrix::identity(ring, n))?;
    let v_inv = lift_inverse(&v, &sd.v_inv.lift_to(ring)?)?;
    let v1_inv = correction_inv.mul(&v_inv)?;

    let reduced = u1.mul(a)?.mul(&v1)?;
    assert_eq!(reduced, PolyMatrix::identity_zero(ring, k, n), "reduction failed to verify");
    debug_assert_eq!(v1.mul(&v1_inv)?, PolyMatrix::identity(ring, n));
    Ok(IdentityReduction { u1, v1, v1_inv })
}

/// A `(n-k) × n` matrix `B` such that `[A; B]` is unimodular.
pub fn unimodular_completion(a: &PolyMatrix) -> Result<PolyMatrix> {
    let (k, n) = (a.rows(), a.cols());
    if k == n {
        return Err(Error::DimensionMismatch("square matrix has no completion rows".into()));
    }
    let red = reduce_to_identity_zero(a)?;
    let b = red.v1_inv.block(k, n, 0, n);
    debug_assert!(a.stack_vertical(&b)?.is_unimodular()?);
    Ok(b)
}
