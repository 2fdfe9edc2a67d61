//! Free distance by a shortest-path search on the trellis of the projected
//! encoder, with bounded enumeration over Z_{p^r} as an independent check.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::search::{check_space, min_generator_weight};
use crate::convcode::ConvCode;
use crate::error::{Error, Result};
use crate::linsys::Matrix;
use crate::polymat::PolyMatrix;

/// Cap on the number of trellis states.
pub const STATE_LIMIT: u128 = 1_000_000;

/// Input degree used when the trellis search does not apply.
pub const FALLBACK_DEGREE: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreeDistanceMethod {
    /// Exact shortest path over the trellis of `[G]_p`.
    StateSpace,
    /// Minimum over inputs of degree at most `deg_bound` over Z_{p^r}.
    BoundedEnumeration { deg_bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeDistanceReport {
    pub value: usize,
    pub method: FreeDistanceMethod,
    /// The value is the weight of some codeword, so it bounds the free
    /// distance from above but is not known to be exact.
    pub upper_bound_only: bool,
}

/// Free distance of a noncatastrophic code, computed on its projection.
pub fn free_distance(code: &ConvCode) -> Result<usize> {
    if !code.is_noncatastrophic() {
        return Err(Error::Catastrophic);
    }
    trellis_free_distance(&code.encoder().project_p())
}

/// Free distance with a bounded-enumeration fallback for catastrophic codes.
pub fn free_distance_report(code: &ConvCode) -> Result<FreeDistanceReport> {
    if code.is_noncatastrophic() {
        return Ok(FreeDistanceReport {
            value: free_distance(code)?,
            method: FreeDistanceMethod::StateSpace,
            upper_bound_only: false,
        });
    }
    Ok(FreeDistanceReport {
        value: free_distance_bounded(code, FALLBACK_DEGREE)?,
        method: FreeDistanceMethod::BoundedEnumeration {
            deg_bound: FALLBACK_DEGREE,
        },
        upper_bound_only: true,
    })
}

/// Minimum codeword weight over nonzero inputs with `deg u <= deg_bound`,
/// enumerated directly over Z_{p^r}.
pub fn free_distance_bounded(code: &ConvCode, deg_bound: usize) -> Result<usize> {
    let g = code.encoder();
    let blocks: Vec<Matrix> = (0..=code.memory()).map(|i| g.coefficient_block(i)).collect();
    // a shift d^s u has the same weight, so u_0 != 0 loses nothing
    Ok(min_generator_weight(code.ring(), &blocks, deg_bound + 1, true)?.weight)
}

/// Minimum weight of a nonzero path from the zero state back to it, where
/// row `i` of `g` (over a field) keeps its last `deg row_i` inputs as state.
pub fn trellis_free_distance(g: &PolyMatrix) -> Result<usize> {
    let ring = g.ring();
    if !ring.is_field() {
        return Err(Error::NotAField(ring.modulus()));
    }
    let p = ring.p();
    let (k, n) = (g.rows(), g.cols());
    let nu: Vec<usize> = (0..k).map(|i| g.row_degree(i).unwrap_or(0)).collect();
    let digits: usize = nu.iter().sum();
    check_space(p, digits, STATE_LIMIT)?;
    let states = p.pow(digits as u32) as usize;
    let coeff: Vec<Matrix> = (0..=g.max_degree().unwrap_or(0)).map(|l| g.coefficient_block(l)).collect();

    // state digits: row i occupies offsets[i]..offsets[i]+nu[i], most recent first
    let mut offsets = Vec::with_capacity(k);
    let mut acc = 0;
    for &v in &nu {
        offsets.push(acc);
        acc += v;
    }
    let decode = |s: usize| -> Vec<u64> {
        let mut out = vec![0u64; digits];
        let mut s = s as u64;
        for d in out.iter_mut() {
            *d = s % p;
            s /= p;
        }
        out
    };
    let encode = |d: &[u64]| -> usize { d.iter().rev().fold(0u64, |a, &x| a * p + x) as usize };

    // (output weight, next state) for input x from state s
    let step = |state: &[u64], x: &[u64]| -> (usize, usize) {
        let mut weight = 0;
        for j in 0..n {
            let mut v = 0;
            for i in 0..k {
                v = ring.mul_add(v, x[i], coeff[0].get(i, j));
                for l in 1..=nu[i] {
                    v = ring.mul_add(v, state[offsets[i] + l - 1], coeff[l].get(i, j));
                }
            }
            if v != 0 {
                weight += 1;
            }
        }
        let mut next = vec![0u64; digits];
        for i in 0..k {
            if nu[i] == 0 {
                continue;
            }
            next[offsets[i]] = x[i];
            for l in 1..nu[i] {
                next[offsets[i] + l] = state[offsets[i] + l - 1];
            }
        }
        (weight, encode(&next))
    };

    let inputs: Vec<Vec<u64>> = {
        let mut all = Vec::with_capacity(p.pow(k as u32) as usize);
        let mut x = vec![0u64; k];
        loop {
            all.push(x.clone());
            let mut carry = true;
            for slot in x.iter_mut().rev() {
                *slot += 1;
                if *slot < p {
                    carry = false;
                    break;
                }
                *slot = 0;
            }
            if carry {
                break;
            }
        }
        all
    };

    let mut dist = vec![usize::MAX; states];
    let mut best_return = usize::MAX;
    let mut heap = BinaryHeap::new();
    let zero_state = vec![0u64; digits];
    for x in inputs.iter().skip(1) {
        let (w, next) = step(&zero_state, x);
        if next == 0 {
            best_return = best_return.min(w);
        } else if w < dist[next] {
            dist[next] = w;
            heap.push(Reverse((w, next)));
        }
    }
    while let Some(Reverse((d, s))) = heap.pop() {
        if d > dist[s] || d >= best_return {
            continue;
        }
        let state = decode(s);
        for x in &inputs {
            let (w, next) = step(&state, x);
            let nd = d + w;
            if next == 0 {
                best_return = best_return.min(nd);
            } else if nd < dist[next] {
                dist[next] = nd;
                heap.push(Reverse((nd, next)));
            }
        }
    }
    Ok(best_return)
}
