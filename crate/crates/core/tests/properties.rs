//! Randomized checks of the algebraic laws on small exact inputs.

use compsums::algebra::{rat, Rational, Series};
use compsums::compositions;
use compsums::compsum;
use compsums::InputSequence;
use num_traits::{One, Zero};
use proptest::prelude::*;

const ORDER: usize = 6;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(p, q)| rat(p, q))
}

fn coeffs(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), len)
}

/// Series with the given constant term.
fn series_with(c0: Rational) -> impl Strategy<Value = Series> {
    coeffs(ORDER).prop_map(move |rest| {
        let mut c = vec![c0.clone()];
        c.extend(rest);
        Series::new(c, ORDER)
    })
}

fn unit_series() -> impl Strategy<Value = Series> {
    (
        (1i64..=4).prop_flat_map(|a| prop_oneof![Just(a), Just(-a)]),
        coeffs(ORDER),
    )
        .prop_map(|(a, rest)| {
            let mut c = vec![rat(a, 1)];
            c.extend(rest);
            Series::new(c, ORDER)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reciprocal_is_inverse(s in unit_series()) {
        let r = s.reciprocal().unwrap();
        prop_assert_eq!(s.mul(&r), Series::one(ORDER));
    }

    #[test]
    fn composition_is_associative(
        f in series_with(Rational::one()),
        g in series_with(Rational::zero()),
        h in series_with(Rational::zero()),
    ) {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn exp_and_log_invert(s in series_with(Rational::zero())) {
        let e = s.exp().unwrap();
        prop_assert_eq!(e.log().unwrap(), s);
    }

    #[test]
    fn composition_sum_inversion(g in coeffs(ORDER)) {
        let x = compsum::comp_sum(&InputSequence::from_table("g", g.clone()), ORDER);
        let back = compsum::comp_sum_inverse(&InputSequence::from_table("x", x), ORDER);
        prop_assert_eq!(back, g);
    }

    #[test]
    fn sign_exchange(g in coeffs(ORDER)) {
        // negating the outputs and summing again gives -g
        let x = compsum::comp_sum(&InputSequence::from_table("g", g.clone()), ORDER);
        let minus_x: Vec<Rational> = x.iter().map(|v| -v).collect();
        let y = compsum::comp_sum(&InputSequence::from_table("-x", minus_x), ORDER);
        prop_assert_eq!(y, g.iter().map(|v| -v).collect::<Vec<_>>());
    }

    #[test]
    fn brute_force_matches_series(g in coeffs(ORDER)) {
        let input = InputSequence::from_table("g", g);
        let fast = compsum::comp_sum(&input, ORDER);
        for n in 1..=ORDER {
            prop_assert_eq!(&compsum::comp_sum_brute(&input, n).unwrap(), &fast[n - 1]);
        }
    }

    #[test]
    fn masks_round_trip(n in 1usize..=12, seed in any::<u64>()) {
        let mask = seed % (1u64 << (n - 1));
        let c = compositions::from_mask(n, mask).unwrap();
        prop_assert_eq!(c.total(), n);
        prop_assert_eq!(c.mask(), mask);
        prop_assert_eq!(c.len() as u32, compositions::digit_sum_s2(mask) + 1);
    }
}
