use num_bigint::{BigInt, BigUint};
use parthooks_core::identities::{verify_hook_counts, verify_multiplicity_threshold};
use parthooks_core::partitions::{
    aggregate_vectors, enumerate_partitions, hook_length_count, hook_type_count,
    multiplicity_vector, partition_count, HookType, Partition,
};
use parthooks_core::series::TruncatedSeries;
use proptest::prelude::*;

/// Random partition with content at most `max`.
fn partition(max: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max, 0..=max).prop_map(move |mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut total = 0;
        parts.retain(|&p| {
            total += p;
            total <= max
        });
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(-1000i64..1000, order + 1)
        .prop_map(move |c| TruncatedSeries::from_i64s(&c, order))
}

fn unit_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (prop::bool::ANY, series(order)).prop_map(|(neg, s)| {
        let mut c = s.into_coefficients();
        c[0] = BigInt::from(if neg { -1 } else { 1 });
        let order = c.len() - 1;
        TruncatedSeries::from_coeffs(c, order)
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition(30)) {
        let c = p.conjugate();
        prop_assert_eq!(c.content(), p.content());
        prop_assert_eq!(c.conjugate(), p);
    }

    #[test]
    fn hooks_transpose_under_conjugation(p in partition(20), arm in 0usize..=6, leg in 0usize..=6) {
        prop_assert_eq!(
            hook_type_count(&p, HookType::new(arm, leg)),
            hook_type_count(&p.conjugate(), HookType::new(leg, arm))
        );
    }

    #[test]
    fn one_hook_per_cell(p in partition(30)) {
        let total: usize = (1..=p.content()).map(|k| hook_length_count(&p, k)).sum();
        prop_assert_eq!(total, p.content());
    }

    #[test]
    fn part_differences_are_conjugate_multiplicities(p in partition(25)) {
        let n = p.content();
        let nu_t = multiplicity_vector(&p.conjugate(), n).unwrap();
        for k in 1..=n {
            prop_assert_eq!(p.part(k) - p.part(k + 1), nu_t.get(k));
        }
    }

    #[test]
    fn multiplicity_vector_round_trip(p in partition(30)) {
        let v = multiplicity_vector(&p, p.content()).unwrap();
        prop_assert_eq!(v.weight(), p.content());
        prop_assert_eq!(v.to_partition(), p);
    }

    #[test]
    fn ring_laws(a in series(50), b in series(50), c in series(50)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert_eq!(&a - &b, &a + &(-&b));
    }

    #[test]
    fn inverse_is_two_sided(a in unit_series(50)) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(&a * &inv, TruncatedSeries::one(50));
        prop_assert_eq!(&inv * &a, TruncatedSeries::one(50));
        prop_assert_eq!(inv.invert().unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in series(20)) {
        let json = serde_json::to_string(&a).unwrap();
        let back: TruncatedSeries = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn aggregate_recursions_and_content_up_to_thirty() {
    for n in 1..=30 {
        let agg = aggregate_vectors(n).unwrap();
        let total = BigUint::from(n) * partition_count(n);
        assert_eq!(agg.lambda.iter().sum::<BigUint>(), total, "n={n}");
        let weighted: BigUint = agg.nu.iter().enumerate().map(|(i, v)| v * (i + 1)).sum();
        assert_eq!(weighted, total, "n={n}");
        for k in 1..n {
            assert_eq!(
                agg.lambda_k(k),
                &(agg.nu_k(k) + agg.lambda_k(k + 1)),
                "n={n} k={k}"
            );
            assert_eq!(
                agg.nu_k(k),
                &(agg.gamma_k(k) + agg.nu_k(k + 1)),
                "n={n} k={k}"
            );
        }
        for v in [&agg.lambda, &agg.nu, &agg.gamma] {
            assert_eq!(v[n - 1], BigUint::from(1u8));
        }
    }
}

#[test]
fn hook_totals_do_not_depend_on_type() {
    for n in 1..=25 {
        let agg = aggregate_vectors(n).unwrap();
        let parts: Vec<_> = enumerate_partitions(n).collect();
        for k in 1..=6.min(n) {
            for t in HookType::of_length(k) {
                let total: usize = parts.iter().map(|p| hook_type_count(p, t)).sum();
                assert_eq!(BigUint::from(total), *agg.nu_k(k), "n={n} type={t}");
            }
        }
    }
    assert!(verify_hook_counts(6, 12).unwrap().passed());
}

#[test]
fn multiplicity_threshold_lemma() {
    assert!(verify_multiplicity_threshold(25).unwrap().passed());
}

#[test]
fn series_consistency_to_order_one_hundred() {
    use parthooks_core::series::{gamma_series, lambda_series, nu_series};
    let order = 100;
    for k in 1..=5 {
        assert_eq!(
            &lambda_series(k, order).unwrap() - &lambda_series(k + 1, order).unwrap(),
            nu_series(k, order).unwrap()
        );
        assert_eq!(
            &nu_series(k, order).unwrap() - &nu_series(k + 1, order).unwrap(),
            gamma_series(k, order).unwrap()
        );
    }
}
