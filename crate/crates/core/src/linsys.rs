//! Dense scalar matrices over Z_{p^r} and exact linear-system solving.
//!
//! Solving uses full pivoting on p-adic valuation: at every step the pivot is
//! an entry of least valuation in the remaining block, so each pivot row has
//! all trailing entries divisible by its pivot. A system is then consistent
//! iff every transformed right-hand side is divisible by the matching pivot
//! power and the rows past the rank have zero right-hand side.

use crate::error::{Error, Result};
use crate::ring::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
    ring: RingSpec,
}

impl Matrix {
    pub fn zeros(ring: RingSpec, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
            ring,
        }
    }

    pub fn from_rows(ring: RingSpec, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&x| ring.reduce(x)).collect(),
            ring,
        })
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        self.data[i * self.cols + j] = self.ring.reduce(value);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    pub fn project_p(&self) -> Self {
        let field = self.ring.residue_field();
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| x % field.p()).collect(),
            ring: field,
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.ring, self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.data[i * cols.len() + jj] = self.get(i, j);
            }
        }
        out
    }

    /// Row vector times matrix: `x · self`.
    pub fn left_mul_vec(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o = self.ring.mul_add(*o, xi, a);
            }
        }
        out
    }

    /// Matrix times column vector: `self · x`.
    pub fn mul_vec(&self, x: &[u64]) -> Vec<u64> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(0, |acc, (&a, &b)| self.ring.mul_add(acc, a, b))
            })
            .collect()
    }

    /// Rank over the field Z_p.
    pub fn rank_over_field(&self) -> Result<usize> {
        if !self.ring.is_field() {
            return Err(Error::NotAField(self.ring.modulus()));
        }
        let mut m = self.clone();
        Ok(m.eliminate(None).pivot_valuations.len())
    }

    /// Determinant over the field Z_p.
    pub fn det_over_field(&self) -> Result<u64> {
        if !self.ring.is_field() {
            return Err(Error::NotAField(self.ring.modulus()));
        }
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let ring = self.ring;
        let mut m = self.clone();
        let mut det = 1u64;
        for c in 0..m.cols {
            let Some(pr) = (c..m.rows).find(|&r| m.get(r, c) != 0) else {
                return Ok(0);
            };
            if pr != c {
                m.swap_rows(pr, c);
                det = ring.neg(det);
            }
            let pivot = m.get(c, c);
            det = ring.mul(det, pivot);
            let inv = ring.inv(pivot)?;
            for r in c + 1..m.rows {
                let factor = ring.mul(m.get(r, c), inv);
                if factor != 0 {
                    m.sub_row_multiple(r, c, factor, None);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] -= factor * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: u64, rhs: Option<&mut [u64]>) {
        let ring = self.ring;
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j];
            if s != 0 {
                let t = &mut self.data[target * self.cols + j];
                *t = ring.sub(*t, ring.mul(factor, s));
            }
        }
        if let Some(rhs) = rhs {
            rhs[target] = ring.sub(rhs[target], ring.mul(factor, rhs[source]));
        }
    }

    /// Full-pivoting elimination to upper-triangular form with pivots p^v.
    fn eliminate(&mut self, mut rhs: Option<&mut [u64]>) -> Elimination {
        let ring = self.ring;
        let mut col_perm: Vec<usize> = (0..self.cols).collect();
        let mut pivot_valuations = Vec::new();
        for step in 0..self.rows.min(self.cols) {
            let mut best: Option<(u32, usize, usize)> = None;
            'search: for i in step..self.rows {
                for j in step..self.cols {
                    let a = self.get(i, j);
                    if a == 0 {
                        continue;
                    }
                    let v = ring.valuation(a);
                    if best.is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v, i, j));
                        if v == 0 {
                            break 'search;
                        }
                    }
                }
            }
            let Some((v, pi, pj)) = best else { break };
            self.swap_rows(step, pi);
            if let Some(rhs) = rhs.as_deref_mut() {
                rhs.swap(step, pi);
            }
            self.swap_cols(step, pj);
            col_perm.swap(step, pj);

            let p_v = ring.p().pow(v);
            let unit = self.get(step, step) / p_v;
            let unit_inv = ring.inv(unit).expect("cofactor of minimal valuation is a unit");
            for j in step..self.cols {
                let idx = step * self.cols + j;
                self.data[idx] = ring.mul(self.data[idx], unit_inv);
            }
            if let Some(rhs) = rhs.as_deref_mut() {
                rhs[step] = ring.mul(rhs[step], unit_inv);
            }
            for i in step + 1..self.rows {
                let a = self.get(i, step);
                if a != 0 {
                    let factor = a / p_v;
                    self.sub_row_multiple(i, step, factor, rhs.as_deref_mut());
                }
            }
            pivot_valuations.push(v);
        }
        Elimination {
            col_perm,
            pivot_valuations,
        }
    }
}

struct Elimination {
    col_perm: Vec<usize>,
    pivot_valuations: Vec<u32>,
}

/// Finds some `x` with `a · x = b` over Z_{p^r}, or `None` if the system is
/// inconsistent. Free variables are set to zero.
pub fn solve(a: &Matrix, b: &[u64]) -> Option<Vec<u64>> {
    assert_eq!(a.rows, b.len(), "right-hand side length");
    let ring = a.ring;
    let mut m = a.clone();
    let mut rhs: Vec<u64> = b.iter().map(|&x| ring.reduce(x)).collect();
    let elim = m.eliminate(Some(&mut rhs));
    let rank = elim.pivot_valuations.len();
    if rhs[rank..].iter().any(|&x| x != 0) {
        return None;
    }
    let mut y = vec![0u64; m.cols];
    for i in (0..rank).rev() {
        let mut acc = rhs[i];
        for j in i + 1..rank {
            acc = ring.sub(acc, ring.mul(m.get(i, j), y[j]));
        }
        let p_v = ring.p().pow(elim.pivot_valuations[i]);
        if !acc.is_multiple_of(p_v) {
            return None;
        }
        y[i] = acc / p_v;
    }
    let mut x = vec![0u64; m.cols];
    for (pos, &col) in elim.col_perm.iter().enumerate() {
        x[col] = y[pos];
    }
    debug_assert_eq!(a.mul_vec(&x), rhs_original(b, ring));
    Some(x)
}

fn rhs_original(b: &[u64], ring: RingSpec) -> Vec<u64> {
    b.iter().map(|&x| ring.reduce(x)).collect()
}
