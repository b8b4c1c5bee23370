use num_traits::Zero;
use proptest::prelude::*;

use giftcount::arith::{rat, PowerSeries};
use giftcount::output::{parse_bfile, render, OutputFormat};
use giftcount::sequences::{builtin_recurrence, g_by_sum, g_moments, run_recurrence, RecurrenceKind};
use giftcount::stirling::{e_miller, e_multinomial, e_table_vertical};

fn series(coeffs: Vec<(i64, i64)>, order: usize) -> PowerSeries {
    PowerSeries::new(coeffs.into_iter().map(|(n, d)| rat(n, d)).collect(), order)
}

fn small_rational() -> impl Strategy<Value = (i64, i64)> {
    (-20i64..=20, 1i64..=6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_mul_commutes_and_distributes(
        a in prop::collection::vec(small_rational(), 1..8),
        b in prop::collection::vec(small_rational(), 1..8),
        c in prop::collection::vec(small_rational(), 1..8),
    ) {
        let (a, b, c) = (series(a, 7), series(b, 7), series(c, 7));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn exp_of_sum_is_product_of_exps(
        a in prop::collection::vec(small_rational(), 1..6),
        b in prop::collection::vec(small_rational(), 1..6),
    ) {
        let mut a = series(a, 6);
        let mut b = series(b, 6);
        a = &a - &PowerSeries::new(vec![a.coeff(0).clone()], 6);
        b = &b - &PowerSeries::new(vec![b.coeff(0).clone()], 6);
        let lhs = (&a + &b).exp().unwrap();
        let rhs = &a.exp().unwrap() * &b.exp().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sqrt_squares_back(tail in prop::collection::vec(small_rational(), 0..6)) {
        let mut coeffs = vec![(1, 1)];
        coeffs.extend(tail);
        let s = series(coeffs, 6);
        let r = s.sqrt().unwrap();
        prop_assert_eq!(&r * &r, s.clone());
        let inv = s.reciprocal().unwrap();
        prop_assert_eq!(&s * &inv, PowerSeries::one(6));
    }

    #[test]
    fn e_methods_agree(sigma in 0u32..4, n in 0i64..7, k in -1i64..30) {
        let t = e_table_vertical(sigma, 7).unwrap();
        prop_assert_eq!(e_multinomial(sigma, n, k), t.get(n, k));
        prop_assert_eq!(e_miller(sigma, n, k).unwrap(), t.get(n, k));
    }

    #[test]
    fn e_rows_are_supported_on_n_to_s1n(sigma in 0u32..4, n in 0i64..7, k in 0i64..30) {
        let v = e_multinomial(sigma, n, k);
        let inside = n <= k && k <= (sigma as i64 + 1) * n;
        prop_assert_eq!(v.is_zero(), !inside);
    }

    #[test]
    fn moments_match_sum(sigma in 0u32..5, n in 0u32..10) {
        prop_assert_eq!(g_moments(sigma, n).unwrap(), g_by_sum(sigma, n).unwrap().values[n as usize].clone());
    }

    #[test]
    fn recurrences_extend_any_valid_prefix(sigma in 1u32..5, extra in 0usize..25) {
        for kind in [RecurrenceKind::TypeC, RecurrenceKind::TypeD] {
            let spec = builtin_recurrence(kind, sigma).unwrap();
            let start = spec.valid_from() as usize;
            let want = g_by_sum(sigma, (start + extra) as u32).unwrap().values;
            let got = run_recurrence(&spec, &want[..start], start + extra).unwrap();
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn bfile_round_trips(values in prop::collection::vec(any::<u64>(), 0..20), offset in -5i64..5) {
        let nats: Vec<_> = values.into_iter().map(num_bigint::BigUint::from).collect();
        let text = render(&nats, offset, OutputFormat::Bfile);
        let (o, back) = parse_bfile(&text).unwrap();
        prop_assert_eq!(&back, &nats);
        if !nats.is_empty() {
            prop_assert_eq!(o, offset);
        }
    }
}
