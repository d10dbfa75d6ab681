//! Coefficient-by-coefficient comparison of brute-force statistics against
//! their generating functions.
//!
//! A verifier never panics on disagreement. Each checked point either
//! passes silently or is recorded as a [`Mismatch`] carrying the brute-force
//! value as `expected` and the series value as `actual` (for relations
//! between two brute-force quantities, the left- and right-hand sides).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::factorial;
use crate::error::{Error, Result};
use crate::partitions::{
    aggregate_binomial, aggregate_power_moment, aggregate_vectors, enumerate_partitions,
    hook_type_totals, multiplicity_at_least_totals, partition_count, Family, HookType,
};
use crate::series::{
    binomial_series, euler_product, gamma_series, lambda_series, nu_binomial_series, nu_series,
    power_moment_series, q_binomial, q_binomial_inverse_form, s_series,
};

/// Box-counting of Gaussian binomial coefficients is limited to boxes of at
/// most this size on each side; larger boxes reach `p(64)` territory.
pub const BOX_COUNT_MAX: usize = 6;

/// Wire labels for the verifiable identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    /// Hooks of a fixed type vs parts of the hook's length.
    #[serde(rename = "THM_1_1")]
    HookCounts,
    /// Gaussian binomial vs its inverse-series form.
    #[serde(rename = "PROP_1_2")]
    QBinomialInverse,
    /// `λ_k = ν_k + λ_{k+1}` and `ν_k = γ_k + ν_{k+1}`.
    #[serde(rename = "THM_1_3")]
    AggregateRecursions,
    /// `m_k(n) = ν_k(n)`.
    #[serde(rename = "LEMMA_MK_NU")]
    MultiplicityThreshold,
    /// Generating functions of `λ_k(n)` and `γ_k(n)`.
    #[serde(rename = "COR_1_4")]
    PartAndGammaSeries,
    /// Generating functions of the binomial moments of `λ_k` and `ν_k`.
    #[serde(rename = "PROP_1_5")]
    BinomialMoments,
    /// Power moments through Stirling numbers.
    #[serde(rename = "REM_1_6")]
    PowerMoments,
    /// Binomial moments of `λ_k` through the cycle-index series `S_d(k)`.
    #[serde(rename = "THM_1_7")]
    CycleIndex,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::HookCounts,
        IdentityId::QBinomialInverse,
        IdentityId::AggregateRecursions,
        IdentityId::MultiplicityThreshold,
        IdentityId::PartAndGammaSeries,
        IdentityId::BinomialMoments,
        IdentityId::PowerMoments,
        IdentityId::CycleIndex,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            IdentityId::HookCounts => "THM_1_1",
            IdentityId::QBinomialInverse => "PROP_1_2",
            IdentityId::AggregateRecursions => "THM_1_3",
            IdentityId::MultiplicityThreshold => "LEMMA_MK_NU",
            IdentityId::PartAndGammaSeries => "COR_1_4",
            IdentityId::BinomialMoments => "PROP_1_5",
            IdentityId::PowerMoments => "REM_1_6",
            IdentityId::CycleIndex => "THM_1_7",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameter(format!("unknown identity {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub point: BTreeMap<String, Value>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: IdentityId,
    pub parameters: BTreeMap<String, usize>,
    pub status: Status,
    /// Total parameter points compared, passing or not.
    pub points_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Sweep bounds shared by all verifiers; each uses the subset it needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyParams {
    pub k_max: usize,
    pub n_max: usize,
    pub d_max: usize,
    pub alpha_max: usize,
    pub beta_max: usize,
    /// Truncation order of the series side.
    pub order: usize,
}

impl Default for VerifyParams {
    fn default() -> Self {
        Self {
            k_max: 6,
            n_max: 25,
            d_max: 4,
            alpha_max: 8,
            beta_max: 8,
            order: 60,
        }
    }
}

struct Recorder {
    id: IdentityId,
    parameters: BTreeMap<String, usize>,
    points: usize,
    mismatches: Vec<Mismatch>,
}

impl Recorder {
    fn new(id: IdentityId, parameters: &[(&str, usize)]) -> Self {
        Self {
            id,
            parameters: parameters
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
            points: 0,
            mismatches: Vec::new(),
        }
    }

    fn check(
        &mut self,
        relation: &str,
        coords: &[(&str, usize)],
        expected: &BigInt,
        actual: &BigInt,
    ) {
        self.points += 1;
        if expected != actual {
            let mut point: BTreeMap<String, Value> = coords
                .iter()
                .map(|&(k, v)| (k.to_string(), Value::from(v)))
                .collect();
            point.insert("relation".into(), Value::from(relation));
            self.mismatches.push(Mismatch {
                point,
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    fn finish(self) -> VerificationReport {
        let status = if self.mismatches.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            identity_id: self.id,
            parameters: self.parameters,
            status,
            points_checked: self.points,
            mismatches: self.mismatches,
        }
    }
}

fn int(x: &BigUint) -> BigInt {
    BigInt::from(x.clone())
}

fn require(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::InvalidParameter(format!(
            "{name} must be at least {min}, got {value}"
        )));
    }
    Ok(())
}

/// Every hook type `(α, k-1-α)` of length `k <= k_max` occurs, over the
/// partitions of `n`, as often as parts equal to `k` do.
pub fn verify_hook_counts(k_max: usize, n_max: usize) -> Result<VerificationReport> {
    require("k_max", k_max, 1)?;
    require("n_max", n_max, 1)?;
    let mut rec = Recorder::new(
        IdentityId::HookCounts,
        &[("k_max", k_max), ("n_max", n_max)],
    );
    let series = (1..=k_max)
        .map(|k| nu_series(k, n_max))
        .collect::<Result<Vec<_>>>()?;
    for n in 1..=n_max {
        let totals = hook_type_totals(n, k_max);
        for (k, s) in (1..=k_max).zip(&series) {
            for t in HookType::of_length(k) {
                rec.check(
                    "hook-type-total",
                    &[("k", k), ("arm", t.arm), ("leg", t.leg), ("n", n)],
                    &int(&totals[&t]),
                    s.coeff(n),
                );
            }
        }
    }
    Ok(rec.finish())
}

/// Gaussian binomials against the inverse-series form up to `order`, and
/// against a direct count of partitions in an `α×β` box for small boxes.
pub fn verify_q_binomial_inverse(
    alpha_max: usize,
    beta_max: usize,
    order: usize,
) -> Result<VerificationReport> {
    let mut rec = Recorder::new(
        IdentityId::QBinomialInverse,
        &[
            ("alpha_max", alpha_max),
            ("beta_max", beta_max),
            ("order", order),
        ],
    );
    for alpha in 0..=alpha_max {
        for beta in 0..=beta_max {
            let poly = q_binomial(alpha, beta).to_series(order);
            let inverse = q_binomial_inverse_form(alpha, beta, order);
            for n in 0..=order {
                rec.check(
                    "inverse-form",
                    &[("alpha", alpha), ("beta", beta), ("n", n)],
                    poly.coeff(n),
                    inverse.coeff(n),
                );
            }
        }
    }

    let a_box = alpha_max.min(BOX_COUNT_MAX);
    let b_box = beta_max.min(BOX_COUNT_MAX);
    // counts[a][b][m]: partitions of m with largest part <= a and length <= b.
    let max_m = a_box * b_box;
    let mut counts = vec![vec![vec![0u64; max_m + 1]; b_box + 1]; a_box + 1];
    for m in 0..=max_m {
        for p in enumerate_partitions(m) {
            let (width, height) = (p.part(1), p.len());
            if width > a_box || height > b_box {
                continue;
            }
            for row in &mut counts[width..] {
                for cell in &mut row[height..] {
                    cell[m] += 1;
                }
            }
        }
    }
    for (alpha, row) in counts.iter().enumerate() {
        for (beta, cell) in row.iter().enumerate() {
            let poly = q_binomial(alpha, beta);
            for (m, &count) in cell.iter().enumerate().take(alpha * beta + 1) {
                rec.check(
                    "box-count",
                    &[("alpha", alpha), ("beta", beta), ("n", m)],
                    &BigInt::from(count),
                    &poly.coefficients().get(m).cloned().unwrap_or_default(),
                );
            }
        }
    }
    Ok(rec.finish())
}

/// The two aggregate recursions and the boundary values
/// `λ_n(n) = ν_n(n) = γ_n(n) = 1`, on brute-force aggregates.
pub fn verify_aggregate_recursions(n_max: usize) -> Result<VerificationReport> {
    require("n_max", n_max, 1)?;
    let mut rec = Recorder::new(IdentityId::AggregateRecursions, &[("n_max", n_max)]);
    let one = BigInt::from(1);
    for n in 1..=n_max {
        let agg = aggregate_vectors(n)?;
        for k in 1..n {
            let at = [("n", n), ("k", k)];
            rec.check(
                "lambda",
                &at,
                &int(agg.lambda_k(k)),
                &int(&(agg.nu_k(k) + agg.lambda_k(k + 1))),
            );
            rec.check(
                "nu",
                &at,
                &int(agg.nu_k(k)),
                &int(&(agg.gamma_k(k) + agg.nu_k(k + 1))),
            );
        }
        rec.check("lambda-boundary", &[("n", n)], &one, &int(agg.lambda_k(n)));
        rec.check("nu-boundary", &[("n", n)], &one, &int(agg.nu_k(n)));
        rec.check("gamma-boundary", &[("n", n)], &one, &int(agg.gamma_k(n)));
    }
    Ok(rec.finish())
}

/// Part lengths of multiplicity at least `k`, counted over all partitions
/// of `n`, match the number of parts equal to `k`.
pub fn verify_multiplicity_threshold(n_max: usize) -> Result<VerificationReport> {
    require("n_max", n_max, 1)?;
    let mut rec = Recorder::new(IdentityId::MultiplicityThreshold, &[("n_max", n_max)]);
    for n in 1..=n_max {
        let m = multiplicity_at_least_totals(n);
        let agg = aggregate_vectors(n)?;
        for k in 1..=n {
            rec.check(
                "m-equals-nu",
                &[("n", n), ("k", k)],
                &int(&m[k - 1]),
                &int(agg.nu_k(k)),
            );
        }
    }
    Ok(rec.finish())
}

/// Series for `λ_k(n)` and `γ_k(n)` against brute force for
/// `n <= min(order, n_max)`, plus the difference relations
/// `λ_k - λ_{k+1} = ν_k` and `ν_k - ν_{k+1} = γ_k` between series up to `order`.
pub fn verify_part_and_gamma_series(
    k_max: usize,
    n_max: usize,
    order: usize,
) -> Result<VerificationReport> {
    require("k_max", k_max, 1)?;
    require("n_max", n_max, 1)?;
    let mut rec = Recorder::new(
        IdentityId::PartAndGammaSeries,
        &[("k_max", k_max), ("n_max", n_max), ("order", order)],
    );
    let lambda = (1..=k_max + 1)
        .map(|k| lambda_series(k, order))
        .collect::<Result<Vec<_>>>()?;
    let nu = (1..=k_max + 1)
        .map(|k| nu_series(k, order))
        .collect::<Result<Vec<_>>>()?;
    let gamma = (1..=k_max)
        .map(|k| gamma_series(k, order))
        .collect::<Result<Vec<_>>>()?;

    let zero = BigInt::from(0);
    for n in 1..=n_max.min(order) {
        let agg = aggregate_vectors(n)?;
        for k in 1..=k_max {
            let (bl, bg) = if k <= n {
                (int(agg.lambda_k(k)), int(agg.gamma_k(k)))
            } else {
                (zero.clone(), zero.clone())
            };
            let at = [("k", k), ("n", n)];
            rec.check("lambda", &at, &bl, lambda[k - 1].coeff(n));
            rec.check("gamma", &at, &bg, gamma[k - 1].coeff(n));
        }
    }
    for k in 1..=k_max {
        let lambda_diff = &lambda[k - 1] - &lambda[k];
        let nu_diff = &nu[k - 1] - &nu[k];
        for n in 0..=order {
            let at = [("k", k), ("n", n)];
            rec.check(
                "lambda-difference",
                &at,
                nu[k - 1].coeff(n),
                lambda_diff.coeff(n),
            );
            rec.check(
                "nu-difference",
                &at,
                gamma[k - 1].coeff(n),
                nu_diff.coeff(n),
            );
        }
    }
    Ok(rec.finish())
}

/// Binomial-moment series for both families against brute force, for
/// `k <= k_max`, `d <= d_max`, `n <= min(order, n_max)`.
pub fn verify_binomial_moments(
    k_max: usize,
    d_max: usize,
    n_max: usize,
    order: usize,
) -> Result<VerificationReport> {
    require("k_max", k_max, 1)?;
    require("n_max", n_max, 1)?;
    let mut rec = Recorder::new(
        IdentityId::BinomialMoments,
        &[
            ("k_max", k_max),
            ("d_max", d_max),
            ("n_max", n_max),
            ("order", order),
        ],
    );
    let top = n_max.min(order);
    for which in [Family::Lambda, Family::Nu] {
        for d in 0..=d_max {
            let series = (1..=k_max)
                .map(|k| binomial_series(which, k, d, order))
                .collect::<Result<Vec<_>>>()?;
            for n in 1..=top {
                let brute = aggregate_binomial(n, d, which)?;
                // Coordinates past n are C(0, d), once per partition.
                let padding = if d == 0 {
                    partition_count(n)
                } else {
                    BigUint::from(0u8)
                };
                for k in 1..=k_max {
                    let expected = brute.get(k - 1).unwrap_or(&padding);
                    rec.check(
                        which.as_str(),
                        &[("k", k), ("d", d), ("n", n)],
                        &int(expected),
                        series[k - 1].coeff(n),
                    );
                }
            }
        }
    }
    Ok(rec.finish())
}

/// Stirling conversion of binomial-moment series against directly summed
/// power moments `Σ x_k^d`, both families.
pub fn verify_power_moments(
    k_max: usize,
    d_max: usize,
    n_max: usize,
) -> Result<VerificationReport> {
    require("k_max", k_max, 1)?;
    require("n_max", n_max, 1)?;
    let mut rec = Recorder::new(
        IdentityId::PowerMoments,
        &[("k_max", k_max), ("d_max", d_max), ("n_max", n_max)],
    );
    for which in [Family::Lambda, Family::Nu] {
        for k in 1..=k_max {
            for d in 0..=d_max {
                let series = power_moment_series(which, k, d, n_max)?;
                for n in k..=n_max {
                    let direct = aggregate_power_moment(n, d, k, which)?;
                    rec.check(
                        which.as_str(),
                        &[("k", k), ("d", d), ("n", n)],
                        &int(&direct),
                        series.coeff(n),
                    );
                }
            }
        }
    }
    Ok(rec.finish())
}

/// `d!·Σ_n C(λ_k(n), d) z^n = S_d(k)·Π 1/(1-z^j)` up to `order`, multiplied
/// through by `d!` so both sides stay integral. The multiplicity analogue
/// is only checked at `d = 1`, where it says the binomial-moment series
/// reproduces the plain multiplicity series.
pub fn verify_cycle_index(k_max: usize, d_max: usize, order: usize) -> Result<VerificationReport> {
    require("k_max", k_max, 1)?;
    require("d_max", d_max, 1)?;
    let mut rec = Recorder::new(
        IdentityId::CycleIndex,
        &[("k_max", k_max), ("d_max", d_max), ("order", order)],
    );
    let euler = euler_product(order);
    for k in 1..=k_max {
        for d in 1..=d_max {
            let lhs =
                binomial_series(Family::Lambda, k, d, order)?.scale(&BigInt::from(factorial(d)));
            let rhs = &s_series(d, k, order)?.series * &euler;
            for n in 0..=order {
                rec.check(
                    "lambda",
                    &[("k", k), ("d", d), ("n", n)],
                    lhs.coeff(n),
                    rhs.coeff(n),
                );
            }
        }
        let nu_d1 = nu_binomial_series(k, 1, order)?;
        let nu = nu_series(k, order)?;
        for n in 0..=order {
            rec.check("nu-d1", &[("k", k), ("n", n)], nu.coeff(n), nu_d1.coeff(n));
        }
    }
    Ok(rec.finish())
}

/// Runs one verifier with the bounds it uses from `params`.
pub fn run(id: IdentityId, params: &VerifyParams) -> Result<VerificationReport> {
    let p = params;
    match id {
        IdentityId::HookCounts => verify_hook_counts(p.k_max, p.n_max),
        IdentityId::QBinomialInverse => verify_q_binomial_inverse(p.alpha_max, p.beta_max, p.order),
        IdentityId::AggregateRecursions => verify_aggregate_recursions(p.n_max),
        IdentityId::MultiplicityThreshold => verify_multiplicity_threshold(p.n_max),
        IdentityId::PartAndGammaSeries => verify_part_and_gamma_series(p.k_max, p.n_max, p.order),
        IdentityId::BinomialMoments => verify_binomial_moments(p.k_max, p.d_max, p.n_max, p.order),
        IdentityId::PowerMoments => verify_power_moments(p.k_max, p.d_max, p.n_max),
        IdentityId::CycleIndex => verify_cycle_index(p.k_max, p.d_max, p.order),
    }
}

/// Runs every verifier in [`IdentityId::ALL`] order.
pub fn run_all(params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    IdentityId::ALL.iter().map(|&id| run(id, params)).collect()
}
