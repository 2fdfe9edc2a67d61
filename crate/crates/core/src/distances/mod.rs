//! Distance analysis: column distances from the generator and parity
//! sliding matrices, free distance, Singleton and column bounds, MDS/MDP
//! verdicts, and lifting Z_p encoders to Z_{p^r}.
//!
//! Weights count nonzero coefficients in Z_{p^r}, summed over all
//! coefficient vectors, so `2 ∈ Z_4` has weight one.

pub mod free;
pub mod search;
pub mod sliding;

pub use free::{
    free_distance, free_distance_bounded, free_distance_report, trellis_free_distance, FreeDistanceMethod,
    FreeDistanceReport,
};
pub use search::{MinWeight, SEARCH_LIMIT};
pub use sliding::{SlidingKind, SlidingMatrix};

use crate::convcode::ConvCode;
use crate::error::{Error, Result};
use crate::linsys::Matrix;
use crate::polymat::PolyMatrix;
use crate::ring::RingSpec;

/// Cap on the number of column subsets examined by the minor criterion.
pub const MINOR_LIMIT: u128 = 1_000_000;

fn require_noncatastrophic(code: &ConvCode) -> Result<()> {
    if code.is_noncatastrophic() {
        Ok(())
    } else {
        Err(Error::Catastrophic)
    }
}

/// `d_j^c` with the lexicographically first minimizing input and its output.
pub fn column_distance_witness(code: &ConvCode, j: usize) -> Result<MinWeight> {
    require_noncatastrophic(code)?;
    let s = SlidingMatrix::generator(code, j);
    search::min_generator_weight(code.ring(), s.blocks(), j + 1, false)
}

pub fn column_distance(code: &ConvCode, j: usize) -> Result<usize> {
    Ok(column_distance_witness(code, j)?.weight)
}

/// `d_j^c` as the minimum weight of a window `[w_0 … w_j]` with `w_0 != 0`
/// annihilated by `H_j^c`.
pub fn column_distance_via_parity(code: &ConvCode, j: usize) -> Result<usize> {
    require_noncatastrophic(code)?;
    if code.k() == code.n() {
        // every window is a codeword window
        return Ok(1);
    }
    let s = SlidingMatrix::parity(code, j)?;
    Ok(search::min_parity_weight(code.ring(), s.blocks(), j + 1)?.weight)
}

/// `(n-k)(j+1) + 1`.
pub fn column_distance_bound(code: &ConvCode, j: usize) -> usize {
    (code.n() - code.k()) * (j + 1) + 1
}

/// `(n-k)(⌊δ/k⌋ + 1) + δ + 1` with δ the b-degree.
pub fn singleton_bound(code: &ConvCode) -> usize {
    let (k, n, delta) = (code.k(), code.n(), code.b_degree());
    (n - k) * (delta / k + 1) + delta + 1
}

/// `⌊δ/k⌋ + ⌊δ/(n-k)⌋`, the second term taken as zero when k = n.
pub fn l_index(code: &ConvCode) -> usize {
    let (k, n, delta) = (code.k(), code.n(), code.b_degree());
    delta / k + if n > k { delta / (n - k) } else { 0 }
}

pub fn is_mds(code: &ConvCode) -> Result<bool> {
    Ok(free_distance(code)? == singleton_bound(code))
}

/// Whether `d_j^c` meets its bound for every `j <= L`.
pub fn is_mdp(code: &ConvCode) -> Result<bool> {
    require_noncatastrophic(code)?;
    for j in 0..=l_index(code) {
        if column_distance(code, j)? != column_distance_bound(code, j) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every full-size minor of `[G_j^c]_p` on columns
/// `t_1 < … < t_{(j+1)k}` with `t_{sk+1} > sn` (1-based, s = 1..j) is
/// nonzero; equivalent to `d_j^c` meeting its bound.
pub fn mdp_minor_criterion(code: &ConvCode, j: usize) -> Result<bool> {
    require_noncatastrophic(code)?;
    let (k, n) = (code.k(), code.n());
    let m = SlidingMatrix::generator(code, j).matrix().project_p();
    // the (s k + 1)-th chosen column, 0-based index s k, must exceed s n
    every_minor_nonzero(&m, k * (j + 1), |pos, col| pos % k != 0 || col + 1 > (pos / k) * n)
}

/// Parity-check form of [`mdp_minor_criterion`]: the full-size minors of the
/// `(n-k)(j+1) × n(j+1)` matrix `(H_j^c)^T` projected to Z_p, on columns
/// `r_1 < …` with `r_{s(n-k)} <= sn`.
pub fn mdp_minor_criterion_parity(code: &ConvCode, j: usize) -> Result<bool> {
    require_noncatastrophic(code)?;
    let (k, n) = (code.k(), code.n());
    if k == n {
        return Ok(true);
    }
    let c = n - k;
    let m = SlidingMatrix::parity(code, j)?.matrix().project_p().transpose();
    // the s c-th chosen column, 0-based index s c - 1, must not exceed s n
    every_minor_nonzero(&m, c * (j + 1), |pos, col| (pos + 1) % c != 0 || col < ((pos + 1) / c) * n)
}

/// Checks every `size`-column subset admitted position by position by
/// `allowed(position, column)` (both 0-based).
fn every_minor_nonzero(m: &Matrix, size: usize, allowed: impl Fn(usize, usize) -> bool) -> Result<bool> {
    let total = binomial(m.cols(), size);
    if total > MINOR_LIMIT {
        return Err(Error::SearchTooLarge {
            size: total,
            limit: MINOR_LIMIT,
        });
    }
    let mut cols = Vec::with_capacity(size);
    let mut ok = true;
    visit_subsets(m.cols(), size, 0, &mut cols, &allowed, &mut |chosen| {
        ok = m.select_columns(chosen).det_over_field().expect("projection is over a field") != 0;
        ok
    });
    Ok(ok)
}

/// Calls `f` on each admissible subset in lexicographic order until it
/// returns false.
fn visit_subsets(
    n: usize,
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    allowed: &impl Fn(usize, usize) -> bool,
    f: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if chosen.len() == size {
        return f(chosen);
    }
    let pos = chosen.len();
    for col in start..=n - (size - pos) {
        if !allowed(pos, col) {
            continue;
        }
        chosen.push(col);
        let go_on = visit_subsets(n, size, col + 1, chosen, allowed, f);
        chosen.pop();
        if !go_on {
            return false;
        }
    }
    true
}

fn binomial(n: usize, m: usize) -> u128 {
    if m > n {
        return 0;
    }
    let m = m.min(n - m);
    (0..m).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Embeds a Z_p encoder into Z_{p^r} digit by digit.
pub fn lift_code(gp: &PolyMatrix, target: RingSpec) -> Result<ConvCode> {
    let source = gp.ring();
    if !source.is_field() {
        return Err(Error::NotAField(source.modulus()));
    }
    ConvCode::new(gp.lift_to(target)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnEntry {
    pub j: usize,
    pub distance: usize,
    pub bound: usize,
    pub meets_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    pub d_free: usize,
    pub column: Vec<ColumnEntry>,
    pub l_index: usize,
    pub singleton_bound: usize,
    pub is_mds: bool,
    pub is_mdp: bool,
}

/// Column distances for `j = 0..=max_j` together with the free distance
/// and both optimality verdicts.
pub fn distance_profile(code: &ConvCode, max_j: usize) -> Result<DistanceProfile> {
    require_noncatastrophic(code)?;
    let l = l_index(code);
    let mut column = Vec::new();
    for j in 0..=max_j.max(l) {
        let distance = column_distance(code, j)?;
        let bound = column_distance_bound(code, j);
        column.push(ColumnEntry {
            j,
            distance,
            bound,
            meets_bound: distance == bound,
        });
    }
    let is_mdp = column[..=l].iter().all(|e| e.meets_bound);
    column.truncate(max_j + 1);
    let d_free = free_distance(code)?;
    let singleton = singleton_bound(code);
    Ok(DistanceProfile {
        d_free,
        column,
        l_index: l,
        singleton_bound: singleton,
        is_mds: d_free == singleton,
        is_mdp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, r: u32) -> RingSpec {
        RingSpec::new(p, r).unwrap()
    }

    fn code(ring: RingSpec, rows: &[&[&str]]) -> ConvCode {
        ConvCode::new(PolyMatrix::parse_rows(ring, rows).unwrap()).unwrap()
    }

    #[test]
    fn column_distances_of_small_codes() {
        let c = code(ring(2, 1), &[&["1+d", "1"]]);
        assert_eq!(column_distance(&c, 0).unwrap(), 2);
        assert_eq!(column_distance(&c, 1).unwrap(), 3);
        assert_eq!(column_distance(&c, 1).unwrap(), column_distance_bound(&c, 1));
        assert_eq!(column_distance_via_parity(&c, 0).unwrap(), 2);
        assert_eq!(column_distance_via_parity(&c, 1).unwrap(), 3);

        let c = code(ring(2, 2), &[&["1", "1"]]);
        for j in 0..4 {
            assert_eq!(column_distance(&c, j).unwrap(), 2);
            assert_eq!(column_distance_via_parity(&c, j).unwrap(), 2);
        }
    }

    #[test]
    fn column_distance_rejects_catastrophic() {
        let c = code(ring(2, 2), &[&["1+3*d", "1+d"]]);
        assert_eq!(column_distance(&c, 1), Err(Error::Catastrophic));
        assert_eq!(column_distance_via_parity(&c, 1), Err(Error::Catastrophic));
        assert_eq!(mdp_minor_criterion(&c, 1), Err(Error::Catastrophic));
        assert_eq!(distance_profile(&c, 2), Err(Error::Catastrophic));
    }

    #[test]
    fn bounds() {
        let z2 = ring(2, 1);
        let c21 = code(z2, &[&["1", "1"]]);
        assert_eq!(column_distance_bound(&c21, 0), 2);
        assert_eq!(column_distance_bound(&c21, 2), 4);
        assert_eq!(column_distance_bound(&code(z2, &[&["1", "1", "1"]]), 1), 5);

        assert_eq!(singleton_bound(&c21), 2);
        assert_eq!(singleton_bound(&code(z2, &[&["1+d", "1"]])), 4);
        assert_eq!(singleton_bound(&code(z2, &[&["1+d^2", "1", "1"]])), 9);

        assert_eq!(l_index(&c21), 0);
        assert_eq!(l_index(&code(z2, &[&["1+d", "1"]])), 2);
        // k = 2, n = 3, δ = 3
        let c = code(z2, &[&["1+d", "d", "1"], &["d^2", "1", "1+d"]]);
        assert_eq!(c.b_degree(), 3);
        assert_eq!(l_index(&c), 4);
    }

    #[test]
    fn mds_verdicts() {
        assert!(is_mds(&code(ring(3, 2), &[&["1", "1"]])).unwrap());
        assert!(!is_mds(&code(ring(2, 1), &[&["1+d", "1"]])).unwrap());
        // [1+d, 1+2d] over Z_3 reaches the bound 4
        let gp = PolyMatrix::parse_rows(ring(3, 1), &[&["1+d", "1+2*d"]]).unwrap();
        assert!(is_mds(&ConvCode::new(gp.clone()).unwrap()).unwrap());
        assert!(is_mds(&lift_code(&gp, ring(3, 2)).unwrap()).unwrap());
    }

    #[test]
    fn mdp_verdicts() {
        let c = code(ring(2, 1), &[&["1+d", "1"]]);
        assert_eq!(l_index(&c), 2);
        assert_eq!(column_distance(&c, 2).unwrap(), 3);
        assert!(!is_mdp(&c).unwrap());

        // δ = 0: MDP iff d_0 = n - k + 1
        assert!(is_mdp(&code(ring(2, 2), &[&["1", "1"]])).unwrap());
        let c = code(ring(2, 2), &[&["1", "0", "1"], &["0", "1", "1"]]);
        assert_eq!(column_distance(&c, 0).unwrap(), 2);
        assert!(is_mdp(&c).unwrap());

        // [1+d, 1+2d] over Z_3
        let gp = PolyMatrix::parse_rows(ring(3, 1), &[&["1+d", "1+2*d"]]).unwrap();
        let base = ConvCode::new(gp.clone()).unwrap();
        let lifted = lift_code(&gp, ring(3, 2)).unwrap();
        assert_eq!(is_mdp(&base).unwrap(), is_mdp(&lifted).unwrap());
    }

    #[test]
    fn minor_criterion_examples() {
        let c = code(ring(2, 1), &[&["1+d", "1"]]);
        assert!(mdp_minor_criterion(&c, 0).unwrap());
        assert!(mdp_minor_criterion(&c, 1).unwrap());
        assert!(!mdp_minor_criterion(&c, 2).unwrap());
        for j in 0..3 {
            assert_eq!(mdp_minor_criterion_parity(&c, j).unwrap(), mdp_minor_criterion(&c, j).unwrap());
        }
        // j = 0 reduces to the k x k minors of G_0
        let c = code(ring(2, 2), &[&["1", "0", "1"], &["0", "1", "1"]]);
        assert!(mdp_minor_criterion(&c, 0).unwrap());
        let c = code(ring(2, 2), &[&["1", "0", "0"], &["0", "1", "1+d"]]);
        assert!(!mdp_minor_criterion(&c, 0).unwrap());
    }

    #[test]
    fn lifting() {
        let z2 = ring(2, 1);
        let gp = PolyMatrix::parse_rows(z2, &[&["1+d", "1"]]).unwrap();
        let base = ConvCode::new(gp.clone()).unwrap();
        let lifted = lift_code(&gp, ring(2, 2)).unwrap();
        assert_eq!(lifted.b_degree(), 1);
        assert_eq!(distance_profile(&base, 3).unwrap(), distance_profile(&lifted, 3).unwrap());

        let id = lift_code(&PolyMatrix::identity(z2, 2), ring(2, 3)).unwrap();
        assert_eq!(id.encoder(), &PolyMatrix::identity(ring(2, 3), 2));

        let cat = lift_code(&PolyMatrix::parse_rows(z2, &[&["1+d", "1+d"]]).unwrap(), ring(2, 3)).unwrap();
        assert!(!cat.is_noncatastrophic());

        assert_eq!(
            lift_code(&gp, ring(3, 2)),
            Err(Error::PrimeMismatch { source_p: 2, target_p: 3 })
        );
    }

    #[test]
    fn profile_shape() {
        let c = code(ring(2, 1), &[&["1+d", "1"]]);
        let prof = distance_profile(&c, 1).unwrap();
        assert_eq!(prof.column.len(), 2);
        assert_eq!(prof.d_free, 3);
        assert_eq!(prof.singleton_bound, 4);
        assert!(!prof.is_mds);
        assert!(!prof.is_mdp);
        assert!(prof.column.iter().all(|e| e.meets_bound));
    }
}
