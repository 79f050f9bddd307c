use hopfcd::actions::{s3_act, SphereParam};
use hopfcd::frames::in_h_eps_perp;
use hopfcd::sample::{self, rng_for, Subspace};
use hopfcd::{associator, build_table, mul_via_table, Element, Scalar};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn element(level: u32) -> impl Strategy<Value = Element> {
    prop::collection::vec(scalar(), 1usize << level).prop_map(move |c| Element::new(level, c).unwrap())
}

fn pair_at(levels: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = (Element, Element)> {
    levels.prop_flat_map(|n| (element(n), element(n)))
}

fn triple_at(levels: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = (Element, Element, Element)> {
    levels.prop_flat_map(|n| (element(n), element(n), element(n)))
}

fn doubly_pure(level: u32, seed: u64) -> Element {
    sample::random_element(&mut rng_for(seed, 0), level, Subspace::DoublyPure)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_string_round_trip(x in scalar()) {
        prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x);
    }

    #[test]
    fn conj_is_an_involution(x in (0u32..=5).prop_flat_map(element)) {
        prop_assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn conj_reverses_products((x, y) in pair_at(0..=5)) {
        prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
    }

    #[test]
    fn tilde_is_right_multiplication_by_e0_tilde(x in (1u32..=5).prop_flat_map(element)) {
        let t = Element::e0_tilde(x.level()).unwrap();
        prop_assert_eq!(x.tilde().unwrap(), &x * &t);
    }

    #[test]
    fn norm_is_multiplicative_up_to_octonions((x, y) in pair_at(0..=3)) {
        prop_assert_eq!((&x * &y).norm_sq(), x.norm_sq() * y.norm_sq());
    }

    #[test]
    fn every_level_is_flexible((x, y) in pair_at(0..=5)) {
        prop_assert_eq!(&(&x * &y) * &x, &x * &(&y * &x));
    }

    #[test]
    fn alternative_up_to_octonions((x, y, z) in triple_at(0..=3)) {
        prop_assert!(associator(&x, &x, &y).unwrap().is_zero());
        prop_assert!(associator(&x, &y, &y).unwrap().is_zero());
        let s = &associator(&x, &y, &z).unwrap() + &associator(&y, &x, &z).unwrap();
        prop_assert!(s.is_zero());
    }

    #[test]
    fn table_agrees_with_recursive_product((x, y) in pair_at(0..=5)) {
        let t = build_table(x.level()).unwrap();
        prop_assert_eq!(mul_via_table(&t, &x, &y).unwrap(), &x * &y);
    }

    #[test]
    fn inner_product_is_half_trace_of_x_conj_y((x, y) in pair_at(0..=5)) {
        let half = Scalar::ratio(1, 2);
        prop_assert_eq!(x.try_inner(&y).unwrap(), half * (&x * &y.conj()).trace());
    }

    #[test]
    fn sphere_action_preserves_norm(n in 3u32..=4, seed in any::<u64>()) {
        let alpha = Element::double(&doubly_pure(n, seed), &doubly_pure(n, seed ^ 1)).unwrap();
        prop_assume!(in_h_eps_perp(&alpha));
        let g = SphereParam::random(&mut rng_for(seed, 7));
        prop_assert_eq!(s3_act(&alpha, &g).unwrap().norm_sq(), alpha.norm_sq());
    }

    #[test]
    fn doubly_pure_anticommutes_with_e0_tilde(n in 2u32..=5, seed in any::<u64>()) {
        let a = doubly_pure(n, seed);
        let t = Element::e0_tilde(n).unwrap();
        prop_assert_eq!(&a * &t, -(&t * &a));
    }
}
