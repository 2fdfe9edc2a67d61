//! Exhaustive minimum-weight searches over block-triangular encodings.
//!
//! Both the generator and the parity searches walk the blocks `x_0, x_1, …`
//! in lexicographic order (last coordinate fastest) and keep, for every
//! later block, the running sum of contributions already fixed. A branch is
//! cut as soon as its partial weight reaches the best weight found so far,
//! so the first witness recorded at the final weight is the
//! lexicographically smallest one.

use crate::error::{Error, Result};
use crate::linsys::Matrix;
use crate::ring::RingSpec;

/// Cap on the size of any enumeration space, and on the number of nodes
/// visited by the parity search.
pub const SEARCH_LIMIT: u128 = 100_000_000;

/// A minimum weight together with the lexicographically first input and
/// output that attain it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinWeight {
    pub weight: usize,
    pub input: Vec<u64>,
    pub output: Vec<u64>,
}

/// `modulus^exponent`, saturating.
pub(crate) fn space_size(modulus: u64, exponent: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exponent {
        acc = acc.saturating_mul(modulus as u128);
    }
    acc
}

pub(crate) fn check_space(modulus: u64, exponent: usize, limit: u128) -> Result<()> {
    let size = space_size(modulus, exponent);
    if size > limit {
        return Err(Error::SearchTooLarge { size, limit });
    }
    Ok(())
}

fn hamming(v: &[u64]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Advances `x` to the next vector of Z_m^len; false after the last one.
fn next_vector(x: &mut [u64], modulus: u64) -> bool {
    for slot in x.iter_mut().rev() {
        *slot += 1;
        if *slot < modulus {
            return true;
        }
        *slot = 0;
    }
    false
}

/// acc += x · m
fn add_product(ring: RingSpec, acc: &mut [u64], x: &[u64], m: &Matrix) {
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (a, &c) in acc.iter_mut().zip(m.row(i)) {
            *a = ring.mul_add(*a, xi, c);
        }
    }
}

/// Minimum of `wt([u_0 … u_{levels-1}] · G)` over `u_0 != 0`, where `G` is
/// the sliding matrix of the coefficient blocks `blocks`.
///
/// With `include_tail`, the output blocks past the last input block (the
/// full codeword of a polynomial input of degree `< levels`) are counted
/// too; otherwise only the first `levels` output blocks are.
pub(crate) fn min_generator_weight(
    ring: RingSpec,
    blocks: &[Matrix],
    levels: usize,
    include_tail: bool,
) -> Result<MinWeight> {
    let k = blocks[0].rows();
    let n = blocks[0].cols();
    check_space(ring.modulus(), k * levels, SEARCH_LIMIT)?;
    let out_blocks = if include_tail { levels + blocks.len() - 1 } else { levels };
    let mut search = GeneratorSearch {
        ring,
        blocks,
        k,
        n,
        levels,
        out_blocks,
        best: n * out_blocks + 1,
        witness: None,
        input: vec![0; k * levels],
    };
    let acc = vec![0u64; n * out_blocks];
    search.descend(0, 0, acc);
    let (input, output) = search.witness.expect("some nonzero input exists");
    Ok(MinWeight {
        weight: search.best,
        input,
        output,
    })
}

struct GeneratorSearch<'a> {
    ring: RingSpec,
    blocks: &'a [Matrix],
    k: usize,
    n: usize,
    levels: usize,
    out_blocks: usize,
    best: usize,
    witness: Option<(Vec<u64>, Vec<u64>)>,
    input: Vec<u64>,
}

impl GeneratorSearch<'_> {
    /// `acc` holds the output contributed by blocks `< t`.
    fn descend(&mut self, t: usize, weight: usize, acc: Vec<u64>) {
        let (k, n, m) = (self.k, self.n, self.ring.modulus());
        let mut x = vec![0u64; k];
        if t == 0 {
            x[k - 1] = 1;
        }
        loop {
            let mut next = acc.clone();
            for s in t..self.out_blocks {
                let lag = s - t;
                if lag >= self.blocks.len() {
                    break;
                }
                add_product(self.ring, &mut next[s * n..(s + 1) * n], &x, &self.blocks[lag]);
            }
            let w = weight + hamming(&next[t * n..(t + 1) * n]);
            if w < self.best {
                self.input[t * k..(t + 1) * k].copy_from_slice(&x);
                if t + 1 == self.levels {
                    let total = w + hamming(&next[self.levels * n..]);
                    if total < self.best {
                        self.best = total;
                        self.witness = Some((self.input.clone(), next));
                    }
                } else {
                    self.descend(t + 1, w, next);
                }
            }
            if !next_vector(&mut x, m) {
                break;
            }
        }
    }
}

/// Minimum of `wt([w_0 … w_j])` over `w_0 != 0` with `[w_0 … w_j] · H_j^c = 0`,
/// where `blocks` are the n × (n-k) coefficient blocks of `H`.
pub(crate) fn min_parity_weight(ring: RingSpec, blocks: &[Matrix], levels: usize) -> Result<MinWeight> {
    let n = blocks[0].rows();
    let c = blocks[0].cols();
    check_space(ring.modulus(), n, SEARCH_LIMIT)?;
    let mut search = ParitySearch {
        ring,
        blocks,
        n,
        c,
        levels,
        best: n * levels + 1,
        witness: None,
        word: vec![0; n * levels],
        visited: 0,
    };
    search.descend(0, 0, vec![0u64; c * levels])?;
    let (input, output) = search.witness.expect("a codeword with w_0 != 0 exists");
    Ok(MinWeight {
        weight: search.best,
        input,
        output,
    })
}

struct ParitySearch<'a> {
    ring: RingSpec,
    blocks: &'a [Matrix],
    n: usize,
    c: usize,
    levels: usize,
    best: usize,
    witness: Option<(Vec<u64>, Vec<u64>)>,
    word: Vec<u64>,
    visited: u128,
}

impl ParitySearch<'_> {
    /// `acc` holds the syndrome contributed by blocks `< t`.
    fn descend(&mut self, t: usize, weight: usize, acc: Vec<u64>) -> Result<()> {
        let (n, c, m) = (self.n, self.c, self.ring.modulus());
        let mut x = vec![0u64; n];
        if t == 0 {
            x[n - 1] = 1;
        }
        loop {
            self.visited += 1;
            if self.visited > SEARCH_LIMIT {
                return Err(Error::SearchTooLarge {
                    size: self.visited,
                    limit: SEARCH_LIMIT,
                });
            }
            let w = weight + hamming(&x);
            if w < self.best {
                let mut syndrome = acc[t * c..(t + 1) * c].to_vec();
                add_product(self.ring, &mut syndrome, &x, &self.blocks[0]);
                if syndrome.iter().all(|&s| s == 0) {
                    self.word[t * n..(t + 1) * n].copy_from_slice(&x);
                    if t + 1 == self.levels {
                        self.best = w;
                        self.witness = Some((self.word.clone(), self.word.clone()));
                    } else {
                        let mut next = acc.clone();
                        for s in t..self.levels {
                            let lag = s - t;
                            if lag >= self.blocks.len() {
                                break;
                            }
                            add_product(self.ring, &mut next[s * c..(s + 1) * c], &x, &self.blocks[lag]);
                        }
                        self.descend(t + 1, w, next)?;
                    }
                }
            }
            if !next_vector(&mut x, m) {
                break;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blocks(ring: RingSpec, bs: &[&[&[u64]]]) -> Vec<Matrix> {
        bs.iter()
            .map(|b| Matrix::from_rows(ring, &b.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap())
            .collect()
    }

    /// Plain enumeration of every input, no pruning.
    fn brute(ring: RingSpec, bs: &[Matrix], levels: usize, tail: bool) -> usize {
        let (k, n) = (bs[0].rows(), bs[0].cols());
        let out = if tail { levels + bs.len() - 1 } else { levels };
        let mut u = vec![0u64; k * levels];
        let mut best = usize::MAX;
        while next_vector(&mut u, ring.modulus()) {
            if u[..k].iter().all(|&x| x == 0) {
                continue;
            }
            let mut w = vec![0u64; n * out];
            for s in 0..levels {
                for t in s..out {
                    if t - s < bs.len() {
                        add_product(ring, &mut w[t * n..(t + 1) * n], &u[s * k..(s + 1) * k], &bs[t - s]);
                    }
                }
            }
            best = best.min(hamming(&w));
        }
        best
    }

    #[test]
    fn generator_search_matches_brute_force() {
        let z4 = RingSpec::new(2, 2).unwrap();
        let bs = blocks(z4, &[&[&[1, 2, 3], &[0, 1, 1]], &[&[3, 0, 2], &[2, 1, 0]], &[&[0, 1, 0], &[1, 0, 0]]]);
        for levels in 1..=3 {
            for tail in [false, true] {
                let got = min_generator_weight(z4, &bs, levels, tail).unwrap();
                assert_eq!(got.weight, brute(z4, &bs, levels, tail), "levels {levels} tail {tail}");
                assert_eq!(hamming(&got.output), got.weight);
            }
        }
    }

    #[test]
    fn witness_is_lexicographically_first() {
        let z2 = RingSpec::new(2, 1).unwrap();
        // G = [1+d, 1]: d_1 = 3 is reached by u = (1, 0) and (1, 1)
        let bs = blocks(z2, &[&[&[1, 1]], &[&[1, 0]]]);
        let got = min_generator_weight(z2, &bs, 2, false).unwrap();
        assert_eq!(got.weight, 3);
        assert_eq!(got.input, vec![1, 0]);
        assert_eq!(got.output, vec![1, 1, 1, 0]);
    }

    #[test]
    fn guard_trips() {
        let z9 = RingSpec::new(3, 2).unwrap();
        let bs = blocks(z9, &[&[&[1, 1]]]);
        assert!(matches!(
            min_generator_weight(z9, &bs, 9, false),
            Err(Error::SearchTooLarge { .. })
        ));
    }

    #[test]
    fn space_sizes_saturate() {
        assert_eq!(space_size(4, 3), 64);
        assert_eq!(space_size(1 << 31, 10), u128::MAX);
    }
}
