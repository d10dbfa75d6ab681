//! Library results against independent oracles: closed forms, recurrences
//! and direct geometric counting that share no code with the crate.

use num_bigint::{BigInt, BigUint};
use parthooks_core::partitions::{
    aggregate_vectors, enumerate_partitions, hook_type_count, partition_count, HookType, Partition,
};
use parthooks_core::series::{
    euler_product, gamma_series, lambda_series, nu_series, q_binomial, s_series, sigma_series,
    stirling2, TruncatedSeries,
};

/// `p(n)` from Euler's pentagonal-number recurrence.
fn pentagonal_counts(max: usize) -> Vec<i128> {
    let mut p = vec![0i128; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut acc = 0i128;
        for j in 1i64.. {
            let g1 = (j * (3 * j - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc += sign * p[n - g1];
            let g2 = (j * (3 * j + 1) / 2) as usize;
            if g2 <= n {
                acc += sign * p[n - g2];
            }
        }
        p[n] = acc;
    }
    p
}

/// Hook types read off a boolean Young diagram by walking right and down.
fn geometric_hooks(parts: &[usize]) -> Vec<HookType> {
    let rows = parts.len();
    let cols = parts.first().copied().unwrap_or(0);
    let filled = |r: usize, c: usize| r < rows && c < parts[r];
    let mut out = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if !filled(r, c) {
                continue;
            }
            let arm = (c + 1..).take_while(|&cc| filled(r, cc)).count();
            let leg = (r + 1..).take_while(|&rr| filled(rr, c)).count();
            out.push(HookType::new(arm, leg));
        }
    }
    out
}

/// Partitions of `m` inside a box of `height` rows and `width` columns,
/// counted by recursion on the largest part.
fn box_count(m: usize, height: usize, width: usize) -> u64 {
    if m == 0 {
        return 1;
    }
    if height == 0 || width == 0 {
        return 0;
    }
    (1..=width.min(m))
        .map(|first| box_count(m - first, height - 1, first))
        .sum()
}

fn binom(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn euler_product_matches_pentagonal_recurrence_and_enumeration() {
    let oracle = pentagonal_counts(40);
    let e = euler_product(40);
    for (n, &want) in oracle.iter().enumerate() {
        assert_eq!(e.coeff(n), &BigInt::from(want), "n = {n}");
        assert_eq!(
            BigInt::from(partition_count(n)),
            BigInt::from(want),
            "n = {n}"
        );
    }
    assert_eq!(oracle[10], 42);
}

#[test]
fn euler_product_at_larger_order() {
    let oracle = pentagonal_counts(120);
    let e = euler_product(120);
    assert_eq!(e.coeff(100), &BigInt::from(oracle[100]));
    assert_eq!(e.coeff(100).to_string(), "190569292");
}

#[test]
fn hook_types_match_geometric_walk() {
    for n in 0..=14 {
        for p in enumerate_partitions(n) {
            let mut mine: Vec<_> = p.hook_types().collect();
            let mut theirs = geometric_hooks(p.parts());
            mine.sort();
            theirs.sort();
            assert_eq!(mine, theirs, "{p}");
        }
    }
}

#[test]
fn hook_count_of_square_by_cells() {
    let square = Partition::new(vec![2, 2]).unwrap();
    let all = geometric_hooks(square.parts());
    let want = all.iter().filter(|&&h| h == HookType::new(1, 1)).count();
    assert_eq!(want, 1);
    assert_eq!(hook_type_count(&square, HookType::new(1, 1)), want);
}

#[test]
fn q_binomial_counts_box_partitions() {
    for alpha in 0..=6 {
        for beta in 0..=6 {
            let poly = q_binomial(alpha, beta);
            assert_eq!(poly.degree(), alpha * beta);
            for m in 0..=alpha * beta {
                assert_eq!(
                    poly.coefficients()[m],
                    BigInt::from(box_count(m, beta, alpha)),
                    "alpha={alpha} beta={beta} m={m}"
                );
            }
        }
    }
}

#[test]
fn sigma_matches_divisor_closed_form() {
    // (x/(1-x))^r = Σ_{m>=r} C(m-1, r-1) x^m, so [z^n] σ_r(k) sums
    // C(n/i - 1, r - 1) over divisors i >= k of n.
    let order = 40;
    for r in 1..=4 {
        for k in 1..=5 {
            let s = sigma_series(r, k, order).unwrap();
            for n in 0..=order {
                let want: u64 = (k..=n)
                    .filter(|i| n % i == 0)
                    .map(|i| binom((n / i) as u64 - 1, r as u64 - 1))
                    .sum();
                assert_eq!(s.coeff(n), &BigInt::from(want), "r={r} k={k} n={n}");
            }
        }
    }
}

#[test]
fn sigma_one_counts_divisors() {
    let s = sigma_series(1, 1, 4).unwrap();
    assert_eq!(s, TruncatedSeries::from_i64s(&[0, 1, 2, 2, 3], 4));
}

#[test]
fn stirling_matches_inclusion_exclusion() {
    // S(d, i) = (1/i!) Σ_j (-1)^{i-j} C(i, j) j^d
    for d in 0..=10u32 {
        for i in 0..=10u64 {
            let mut acc = BigInt::from(0);
            for j in 0..=i {
                let term = BigInt::from(binom(i, j)) * BigInt::from(j).pow(d);
                if (i - j) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            let fact: BigInt = (1..=i).map(BigInt::from).product();
            let want = acc / fact;
            assert_eq!(
                BigInt::from(stirling2(d as usize, i as usize)),
                want,
                "d={d} i={i}"
            );
        }
    }
}

#[test]
fn part_statistics_series_match_brute_force() {
    let order = 30;
    for k in 1..=4 {
        let nu = nu_series(k, order).unwrap();
        let lambda = lambda_series(k, order).unwrap();
        let gamma = gamma_series(k, order).unwrap();
        for n in 1..=order {
            let agg = aggregate_vectors(n).unwrap();
            let at = |v: &[BigUint]| BigInt::from(v.get(k - 1).cloned().unwrap_or_default());
            assert_eq!(nu.coeff(n), &at(&agg.nu), "nu k={k} n={n}");
            assert_eq!(lambda.coeff(n), &at(&agg.lambda), "lambda k={k} n={n}");
            assert_eq!(gamma.coeff(n), &at(&agg.gamma), "gamma k={k} n={n}");
        }
    }
}

#[test]
fn cycle_index_degree_three_by_hand() {
    let order = 30;
    for k in 1..=3 {
        let s1 = sigma_series(1, k, order).unwrap();
        let s2 = sigma_series(2, k, order).unwrap();
        let s3 = sigma_series(3, k, order).unwrap();
        let want = &(&(&s1 * &s1) * &s1)
            + &(&(&s1 * &s2).scale(&BigInt::from(3)) + &s3.scale(&BigInt::from(2)));
        assert_eq!(s_series(3, k, order).unwrap().series, want, "k={k}");
    }
}
