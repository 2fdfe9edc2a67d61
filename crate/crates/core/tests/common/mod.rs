#![allow(dead_code)]

use rand::Rng;
use zpr_codes::{ConvCode, Poly, PolyMatrix, RingSpec};

pub fn ring(p: u64, r: u32) -> RingSpec {
    RingSpec::new(p, r).unwrap()
}

pub fn random_poly<R: Rng>(rng: &mut R, ring: RingSpec, max_deg: usize) -> Poly {
    let coeffs = (0..=max_deg).map(|_| rng.gen_range(0..ring.modulus())).collect();
    Poly::from_coeffs(ring, coeffs)
}

pub fn random_matrix<R: Rng>(rng: &mut R, ring: RingSpec, k: usize, n: usize, max_deg: usize) -> PolyMatrix {
    let entries = (0..k * n).map(|_| random_poly(rng, ring, max_deg)).collect();
    PolyMatrix::new(ring, k, n, entries).unwrap()
}

/// Random unit of Z_{p^r}: residue not divisible by p.
pub fn random_unit<R: Rng>(rng: &mut R, ring: RingSpec) -> u64 {
    loop {
        let c = rng.gen_range(1..ring.modulus());
        if ring.is_unit(c) {
            return c;
        }
    }
}

/// Product of random elementary operations, including multiplication of a
/// row by a non-constant unit `c + p·q(d)`.
pub fn random_unimodular<R: Rng>(rng: &mut R, ring: RingSpec, n: usize, steps: usize) -> PolyMatrix {
    let mut rows = PolyMatrix::identity(ring, n).to_rows();
    for _ in 0..steps {
        match rng.gen_range(0..4) {
            0 if n > 1 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                let q = random_poly(rng, ring, 1);
                let add: Vec<Poly> = rows[j].iter().map(|x| x * &q).collect();
                for (a, b) in rows[i].iter_mut().zip(add) {
                    *a = &*a + &b;
                }
            }
            1 if n > 1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                rows.swap(i, j);
            }
            2 => {
                let i = rng.gen_range(0..n);
                let c = random_unit(rng, ring);
                for a in rows[i].iter_mut() {
                    *a = a.scale(c);
                }
            }
            _ => {
                let i = rng.gen_range(0..n);
                let unit = &Poly::constant(ring, random_unit(rng, ring))
                    + &random_poly(rng, ring, 1).scale(ring.p());
                for a in rows[i].iter_mut() {
                    *a = &*a * &unit;
                }
            }
        }
    }
    PolyMatrix::from_rows(ring, rows).unwrap()
}

/// `[I_k 0] · U` for a random unimodular `U`.
pub fn random_lzp<R: Rng>(rng: &mut R, ring: RingSpec, k: usize, n: usize) -> PolyMatrix {
    let u = random_unimodular(rng, ring, n, 2 * n);
    u.block(0, k, 0, n)
}

/// Rejection-samples an admitted noncatastrophic code with entry degrees at
/// most `max_deg`.
pub fn random_noncatastrophic<R: Rng>(rng: &mut R, ring: RingSpec, k: usize, n: usize, max_deg: usize) -> ConvCode {
    loop {
        let g = random_matrix(rng, ring, k, n, max_deg);
        if let Ok(code) = ConvCode::new(g) {
            if code.is_noncatastrophic() {
                return code;
            }
        }
    }
}

/// Every polynomial vector of length `len` over `ring` with degree at most
/// `max_deg`, in lexicographic coefficient order.
pub fn all_vectors(ring: RingSpec, len: usize, max_deg: usize) -> Vec<Vec<Poly>> {
    let per = max_deg + 1;
    let m = ring.modulus();
    let mut digits = vec![0u64; len * per];
    let mut out = Vec::new();
    loop {
        out.push(
            digits
                .chunks(per)
                .map(|c| Poly::from_coeffs(ring, c.to_vec()))
                .collect(),
        );
        let mut carry = true;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < m {
                carry = false;
                break;
            }
            *d = 0;
        }
        if carry {
            return out;
        }
    }
}
