//! Smith normal form over Z_p[d] with recorded unimodular transforms.
//!
//! Every elementary operation is mirrored on `U`, `V` and on their inverses,
//! so the inverses come out of the factorization itself.

use super::PolyMatrix;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// `U · A · V = S` with `S` diagonal, monic invariant factors and
/// `S[i][i] | S[i+1][i+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: PolyMatrix,
    pub s: PolyMatrix,
    pub v: PolyMatrix,
    pub u_inv: PolyMatrix,
    pub v_inv: PolyMatrix,
    /// Number of nonzero invariant factors.
    pub rank: usize,
}

impl SmithDecomposition {
    pub fn invariant_factors(&self) -> Vec<Poly> {
        (0..self.rank).map(|i| self.s.get(i, i).clone()).collect()
    }

    /// True when `S = [I_k 0]`.
    pub fn is_identity_zero(&self) -> bool {
        self.rank == self.s.rows() && self.invariant_factors().iter().all(|f| f.degree() == Some(0))
    }
}

struct Reducer {
    a: PolyMatrix,
    u: PolyMatrix,
    u_inv: PolyMatrix,
    v: PolyMatrix,
    v_inv: PolyMatrix,
}

fn swap_rows_of(m: &mut PolyMatrix, x: usize, y: usize) {
    if x == y {
        return;
    }
    for j in 0..m.cols {
        m.entries.swap(x * m.cols + j, y * m.cols + j);
    }
}

fn swap_cols_of(m: &mut PolyMatrix, x: usize, y: usize) {
    if x == y {
        return;
    }
    for i in 0..m.rows {
        m.entries.swap(i * m.cols + x, i * m.cols + y);
    }
}

/// row[target] += q * row[source]
fn add_row_multiple(m: &mut PolyMatrix, target: usize, source: usize, q: &Poly) {
    for j in 0..m.cols {
        let s = &m.entries[source * m.cols + j];
        if s.is_zero() {
            continue;
        }
        let term = q * s;
        let idx = target * m.cols + j;
        m.entries[idx] = &m.entries[idx] + &term;
    }
}

/// col[target] += q * col[source]
fn add_col_multiple(m: &mut PolyMatrix, target: usize, source: usize, q: &Poly) {
    for i in 0..m.rows {
        let s = &m.entries[i * m.cols + source];
        if s.is_zero() {
            continue;
        }
        let term = q * s;
        let idx = i * m.cols + target;
        m.entries[idx] = &m.entries[idx] + &term;
    }
}

fn scale_row_of(m: &mut PolyMatrix, i: usize, c: u64) {
    for j in 0..m.cols {
        let idx = i * m.cols + j;
        m.entries[idx] = m.entries[idx].scale(c);
    }
}

fn scale_col_of(m: &mut PolyMatrix, j: usize, c: u64) {
    for i in 0..m.rows {
        let idx = i * m.cols + j;
        m.entries[idx] = m.entries[idx].scale(c);
    }
}

impl Reducer {
    fn swap_rows(&mut self, x: usize, y: usize) {
        swap_rows_of(&mut self.a, x, y);
        swap_rows_of(&mut self.u, x, y);
        swap_cols_of(&mut self.u_inv, x, y);
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        swap_cols_of(&mut self.a, x, y);
        swap_cols_of(&mut self.v, x, y);
        swap_rows_of(&mut self.v_inv, x, y);
    }

    fn add_row(&mut self, target: usize, source: usize, q: &Poly) {
        add_row_multiple(&mut self.a, target, source, q);
        add_row_multiple(&mut self.u, target, source, q);
        add_col_multiple(&mut self.u_inv, source, target, &-q);
    }

    fn add_col(&mut self, target: usize, source: usize, q: &Poly) {
        add_col_multiple(&mut self.a, target, source, q);
        add_col_multiple(&mut self.v, target, source, q);
        add_row_multiple(&mut self.v_inv, source, target, &-q);
    }

    fn scale_row(&mut self, i: usize, c: u64) {
        let ring = self.a.ring;
        let c_inv = ring.inv(c).expect("scaling by a unit");
        scale_row_of(&mut self.a, i, c);
        scale_row_of(&mut self.u, i, c);
        scale_col_of(&mut self.u_inv, i, c_inv);
    }

    /// Lowest-degree nonzero entry in the trailing block, ties broken by
    /// smallest (row, col).
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                if let Some(deg) = self.a.get(i, j).degree() {
                    if best.is_none_or(|(bd, _, _)| deg < bd) {
                        best = Some((deg, i, j));
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }
}

/// Smith form of a matrix over the field Z_p.
pub fn smith_form(a: &PolyMatrix) -> Result<SmithDecomposition> {
    let ring = a.ring;
    if !ring.is_field() {
        return Err(Error::NotAField(ring.modulus()));
    }
    let (k, n) = (a.rows, a.cols);
    let mut red = Reducer {
        a: a.clone(),
        u: PolyMatrix::identity(ring, k),
        u_inv: PolyMatrix::identity(ring, k),
        v: PolyMatrix::identity(ring, n),
        v_inv: PolyMatrix::identity(ring, n),
    };
    let mut rank = 0;
    for t in 0..k.min(n) {
        let mut found = false;
        while let Some((pi, pj)) = red.find_pivot(t) {
            found = true;
            red.swap_rows(t, pi);
            red.swap_cols(t, pj);
            let pivot = red.a.get(t, t).clone();

            let mut dirty = false;
            for i in t + 1..k {
                let entry = red.a.get(i, t);
                if entry.is_zero() {
                    continue;
                }
                let (q, r) = entry.div_rem(&pivot)?;
                red.add_row(i, t, &-&q);
                dirty |= !r.is_zero();
            }
            for j in t + 1..n {
                let entry = red.a.get(t, j);
                if entry.is_zero() {
                    continue;
                }
                let (q, r) = entry.div_rem(&pivot)?;
                red.add_col(j, t, &-&q);
                dirty |= !r.is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..k).find(|&i| {
                (t + 1..n).any(|j| {
                    let e = red.a.get(i, j);
                    !e.is_zero() && !e.div_rem(&pivot).map(|(_, r)| r.is_zero()).unwrap_or(false)
                })
            });
            match offender {
                Some(i) => red.add_row(t, i, &Poly::one(ring)),
                None => break,
            }
        }
        if !found {
            break;
        }
        let lead = red.a.get(t, t).leading_coeff();
        if lead != 1 {
            red.scale_row(t, ring.inv(lead)?);
        }
        rank += 1;
    }
    Ok(SmithDecomposition {
        u: red.u,
        s: red.a,
        v: red.v,
        u_inv: red.u_inv,
        v_inv: red.v_inv,
        rank,
    })
}
