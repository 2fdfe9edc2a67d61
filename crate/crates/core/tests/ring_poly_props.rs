mod common;

use common::{random_matrix, random_poly, ring};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use zpr_codes::poly::{gcd_over_field, ord_vector};
use zpr_codes::series::series_inverse;
use zpr_codes::{Poly, PolyMatrix, RingSpec};

const RINGS: [(u64, u32); 5] = [(2, 2), (2, 3), (3, 2), (5, 2), (7, 1)];

fn pick(i: usize) -> RingSpec {
    let (p, r) = RINGS[i % RINGS.len()];
    ring(p, r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn projection_is_a_ring_morphism(seed in any::<u64>(), ri in 0..RINGS.len()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = pick(ri);
        let a = random_poly(&mut rng, z, 4);
        let b = random_poly(&mut rng, z, 4);
        prop_assert_eq!((&a + &b).project_p(), &a.project_p() + &b.project_p());
        prop_assert_eq!((&a * &b).project_p(), &a.project_p() * &b.project_p());
    }
}

proptest! {
    #[test]
    fn series_inverse_truncates_consistently(seed in any::<u64>(), ri in 0..RINGS.len(), t in 1usize..12, cut in 0usize..12) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = pick(ri);
        let mut q = random_poly(&mut rng, z, 3);
        q = &q + &Poly::constant(z, common::random_unit(&mut rng, z) + z.modulus() - q.coeff(0));
        let cut = cut.min(t);
        let long = series_inverse(&q, t).unwrap();
        prop_assert_eq!(long.truncate(cut), series_inverse(&q, cut).unwrap());
        let one = long.mul_poly(&q).unwrap();
        prop_assert_eq!(one.to_poly(), Poly::one(z));
    }

    #[test]
    fn field_gcd_divides_and_is_monic(seed in any::<u64>(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = ring(p, 1);
        let common_factor = random_poly(&mut rng, z, 2);
        let a = &random_poly(&mut rng, z, 3) * &common_factor;
        let b = &random_poly(&mut rng, z, 3) * &common_factor;
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = gcd_over_field(&a, &b).unwrap();
        prop_assert_eq!(g.leading_coeff(), 1);
        prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
        prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
        if !common_factor.is_zero() {
            prop_assert!(g.div_rem(&common_factor.monic().unwrap()).unwrap().1.is_zero());
        }
    }

    #[test]
    fn vector_order_matches_definition(seed in any::<u64>(), ri in 0..RINGS.len(), shift in 0u32..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = pick(ri);
        let scale = z.p_pow(shift.min(z.r()));
        let w: Vec<Poly> = (0..3).map(|_| random_poly(&mut rng, z, 2).scale(scale)).collect();
        let l = ord_vector(&w);
        let times = |e: u32| w.iter().all(|x| x.scale(z.p_pow(e)).is_zero());
        prop_assert!(times(l));
        prop_assert!(l == 0 || !times(l - 1));
    }

    #[test]
    fn display_parses_back(seed in any::<u64>(), ri in 0..RINGS.len()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = pick(ri);
        let a = random_poly(&mut rng, z, 6);
        prop_assert_eq!(Poly::parse(&a.to_string(), z).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn determinant_is_multiplicative(seed in any::<u64>(), ri in 0..RINGS.len(), k in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z = pick(ri);
        let a = random_matrix(&mut rng, z, k, k, 3);
        let b = random_matrix(&mut rng, z, k, k, 3);
        let ab: PolyMatrix = a.mul(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), &a.determinant().unwrap() * &b.determinant().unwrap());
    }
}
