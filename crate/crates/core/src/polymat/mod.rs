//! Matrices over Z_{p^r}[d].
//!
//! Besides plain matrix algebra this module carries the Smith form over
//! Z_p[d] ([`smith`]) and the machinery that lifts Z_p reductions back into
//! Z_{p^r} ([`lift`]): polynomial right inverses, reduction to `[I 0]` and
//! unimodular completion.

pub mod lift;
pub mod smith;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linsys::Matrix;
use crate::poly::Poly;
use crate::ring::RingSpec;

pub use lift::{reduce_to_identity_zero, right_inverse, unimodular_completion, IdentityReduction};
pub use smith::{smith_form, SmithDecomposition};

/// Largest size accepted by the cofactor determinant.
pub const MAX_DET_SIZE: usize = 8;

/// A dense `rows × cols` matrix of polynomials sharing one ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
    ring: RingSpec,
}

/// A minor together with the row and column indices it was taken from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub value: Poly,
}

impl PolyMatrix {
    pub fn new(ring: RingSpec, rows: usize, cols: usize, entries: Vec<Poly>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "matrix must be at least 1x1, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        for e in &entries {
            ring.check_same(&e.ring())?;
        }
        Ok(Self {
            rows,
            cols,
            entries,
            ring,
        })
    }

    pub fn from_rows(ring: RingSpec, rows: Vec<Vec<Poly>>) -> Result<Self> {
        let k = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(ring, k, n, rows.into_iter().flatten().collect())
    }

    /// Parses rows of polynomial strings.
    pub fn parse_rows(ring: RingSpec, rows: &[&[&str]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|s| Poly::parse(s, ring)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(ring, rows)
    }

    pub fn zeros(ring: RingSpec, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Poly::zero(ring); rows * cols],
            ring,
        }
    }

    pub fn identity(ring: RingSpec, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Poly::one(ring);
        }
        m
    }

    /// `[I_k 0]` of shape k × n.
    pub fn identity_zero(ring: RingSpec, k: usize, n: usize) -> Self {
        let mut m = Self::zeros(ring, k, n);
        for i in 0..k.min(n) {
            m.entries[i * n + i] = Poly::one(ring);
        }
        m
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Poly) {
        assert_eq!(value.ring(), self.ring, "ring mismatch");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    /// Largest entry degree, `None` for the zero matrix.
    pub fn max_degree(&self) -> Option<usize> {
        self.entries.iter().filter_map(Poly::degree).max()
    }

    /// Largest entry degree in row `i`.
    pub fn row_degree(&self, i: usize) -> Option<usize> {
        self.row(i).iter().filter_map(Poly::degree).max()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(self.ring);
                for t in 0..self.cols {
                    let a = self.get(i, t);
                    let b = other.get(t, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.entries[i * other.cols + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Poly, &Poly) -> Poly) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
            ring: self.ring,
        })
    }

    pub fn neg(&self) -> Self {
        self.map(|p| -p)
    }

    pub fn scale(&self, c: u64) -> Self {
        self.map(|p| p.scale(c))
    }

    fn map(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
            ring: self.ring,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            entries,
            ring: self.ring,
        }
    }

    pub fn stack_vertical(&self, below: &Self) -> Result<Self> {
        self.ring.check_same(&below.ring)?;
        if self.cols != below.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot stack {} columns over {}",
                self.cols, below.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        Ok(Self {
            rows: self.rows + below.rows,
            cols: self.cols,
            entries,
            ring: self.ring,
        })
    }

    pub fn concat_horizontal(&self, right: &Self) -> Result<Self> {
        self.ring.check_same(&right.ring)?;
        if self.rows != right.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot concatenate {} rows with {}",
                self.rows, right.rows
            )));
        }
        let mut entries = Vec::with_capacity(self.entries.len() + right.entries.len());
        for i in 0..self.rows {
            entries.extend(self.row(i).iter().cloned());
            entries.extend(right.row(i).iter().cloned());
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols + right.cols,
            entries,
            ring: self.ring,
        })
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut entries = Vec::with_capacity((r1 - r0) * (c1 - c0));
        for i in r0..r1 {
            entries.extend(self.row(i)[c0..c1].iter().cloned());
        }
        Self {
            rows: r1 - r0,
            cols: c1 - c0,
            entries,
            ring: self.ring,
        }
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                entries.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: rows.len(),
            cols: cols.len(),
            entries,
            ring: self.ring,
        }
    }

    pub fn project_p(&self) -> Self {
        let mut out = self.map(Poly::project_p);
        out.ring = self.ring.residue_field();
        out
    }

    /// Coefficientwise embedding into another ring with the same prime.
    pub fn lift_to(&self, target: RingSpec) -> Result<Self> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.lift_to(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
            ring: target,
        })
    }

    /// The scalar coefficient matrix of `d^i`.
    pub fn coefficient_block(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.ring, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).coeff(i));
            }
        }
        m
    }

    /// Row vector of polynomials times this matrix.
    pub fn left_mul_vec(&self, u: &[Poly]) -> Result<Vec<Poly>> {
        if u.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {}x{} matrix",
                u.len(),
                self.rows,
                self.cols
            )));
        }
        for p in u {
            self.ring.check_same(&p.ring())?;
        }
        Ok((0..self.cols)
            .map(|j| {
                u.iter().enumerate().fold(Poly::zero(self.ring), |acc, (i, ui)| {
                    let g = self.get(i, j);
                    if ui.is_zero() || g.is_zero() {
                        acc
                    } else {
                        &acc + &(ui * g)
                    }
                })
            })
            .collect())
    }

    pub fn determinant(&self) -> Result<Poly> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows > MAX_DET_SIZE {
            return Err(Error::DeterminantTooLarge(self.rows));
        }
        let full_mask = (1u32 << self.cols) - 1;
        let mut memo = HashMap::new();
        Ok(self.cofactor_det(0, full_mask, &mut memo))
    }

    /// Laplace expansion along row `row` over the columns in `mask`.
    fn cofactor_det(&self, row: usize, mask: u32, memo: &mut HashMap<u32, Poly>) -> Poly {
        if mask == 0 {
            return Poly::one(self.ring);
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let mut acc = Poly::zero(self.ring);
        let mut sign_positive = true;
        for j in 0..self.cols {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = self.get(row, j);
            if !entry.is_zero() {
                let sub = self.cofactor_det(row + 1, mask & !(1 << j), memo);
                let term = entry * &sub;
                acc = if sign_positive { &acc + &term } else { &acc - &term };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// A square matrix is unimodular iff its determinant is a unit of
    /// Z_{p^r}[d], i.e. the determinant projects to a nonzero constant mod p
    /// (a unit constant term plus nilpotent higher coefficients).
    pub fn is_unimodular(&self) -> Result<bool> {
        let det = self.determinant()?.project_p();
        Ok(det.degree() == Some(0))
    }

    /// All `m × m` minors, ordered lexicographically by (rows, cols).
    pub fn full_size_minors(&self, m: usize) -> Result<Vec<Minor>> {
        let max = self.rows.min(self.cols);
        if m == 0 || m > max {
            return Err(Error::SizeTooLarge { size: m, max });
        }
        let row_sets = combinations(self.rows, m);
        let col_sets = combinations(self.cols, m);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rows in &row_sets {
            for cols in &col_sets {
                let value = self.select(rows, cols).determinant()?;
                out.push(Minor {
                    rows: rows.clone(),
                    cols: cols.clone(),
                    value,
                });
            }
        }
        Ok(out)
    }

    /// Rank over Z_p(d) of the projection, read off the Smith form.
    pub fn projected_rank(&self) -> usize {
        smith_form(&self.project_p())
            .expect("projection lives over a field")
            .rank
    }
}

/// All `m`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    fn rec(start: usize, n: usize, m: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            if n - i < m - current.len() {
                break;
            }
            current.push(i);
            rec(i + 1, n, m, current, out);
            current.pop();
        }
    }
    rec(0, n, m, &mut current, &mut out);
    out
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(Poly::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
