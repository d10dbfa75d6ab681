use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use parthooks_core::identities::{self, IdentityId, VerificationReport, VerifyParams};
use parthooks_core::partitions::{
    aggregate_binomial, aggregate_power_moment, aggregate_vectors, enumerate_partitions,
    gamma_vector, hook_type_totals, multiplicity_vector, Family, HookType, BRUTE_FORCE_GUARD,
};
use parthooks_core::series::{self, TruncatedSeries};

use crate::output::{join, Format, OutputConfig};
use crate::{
    CliError, GlobalOpts, Kind, SeriesName, SeriesParams, VerifyOverrides, Which, DEFAULT_ORDER,
};

fn order(g: &GlobalOpts) -> usize {
    g.order.map_or(DEFAULT_ORDER, |o| o as usize)
}

fn check_brute_force_n(g: &GlobalOpts, name: &str, n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Invalid(format!("{name} must be at least 1")));
    }
    if n > BRUTE_FORCE_GUARD && !g.force {
        return Err(CliError::Invalid(format!(
            "{name} = {n} exceeds the brute-force limit {BRUTE_FORCE_GUARD}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn strings<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

#[derive(Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vectors {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<String>>,
}

impl Vectors {
    fn select(which: Which, lambda: Vec<String>, nu: Vec<String>, gamma: Vec<String>) -> Self {
        let pick = |w: Which, v: Vec<String>| (which == w || which == Which::All).then_some(v);
        Vectors {
            lambda: pick(Which::Lambda, lambda),
            nu: pick(Which::Nu, nu),
            gamma: pick(Which::Gamma, gamma),
        }
    }

    fn cells(&self) -> Vec<String> {
        [&self.lambda, &self.nu, &self.gamma]
            .into_iter()
            .flatten()
            .map(|v| v.join(","))
            .collect()
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TableRow {
    pub partition: Vec<usize>,
    #[serde(flatten)]
    pub vectors: Vectors,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Table {
    pub n: usize,
    pub rows: Vec<TableRow>,
    pub total: Vectors,
}

pub fn table(g: &GlobalOpts, n: usize, which: Which) -> Result<(), CliError> {
    check_brute_force_n(g, "n", n)?;
    // Rows run from (1,…,1) up to (n), the reverse of enumeration order.
    let mut parts: Vec<_> = enumerate_partitions(n).collect();
    parts.reverse();
    let rows = parts
        .iter()
        .map(|p| {
            let lambda: Vec<usize> = (1..=n).map(|k| p.part(k)).collect();
            let nu = multiplicity_vector(p, n)?;
            let gamma = gamma_vector(&nu);
            Ok(TableRow {
                partition: p.parts().to_vec(),
                vectors: Vectors::select(
                    which,
                    strings(&lambda),
                    strings(nu.multiplicities()),
                    strings(gamma.gammas()),
                ),
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let agg = aggregate_vectors(n)?;
    let total = Vectors::select(
        which,
        strings(&agg.lambda),
        strings(&agg.nu),
        strings(&agg.gamma),
    );
    let table = Table { n, rows, total };

    let mut out = OutputConfig::new(g, Format::Tsv)?;
    match out.format {
        Format::Json => out.json(&table)?,
        Format::Tsv => {
            let mut header = vec!["partition"];
            for (name, present) in [
                ("lambda", table.total.lambda.is_some()),
                ("nu", table.total.nu.is_some()),
                ("gamma", table.total.gamma.is_some()),
            ] {
                if present {
                    header.push(name);
                }
            }
            let body = table
                .rows
                .iter()
                .map(|r| {
                    let mut cells = vec![format!("({})", join(&r.partition))];
                    cells.extend(r.vectors.cells());
                    cells
                })
                .chain(std::iter::once({
                    let mut cells = vec!["total".to_string()];
                    cells.extend(table.total.cells());
                    cells
                }));
            out.tsv(&header, body)?;
        }
    }
    out.finish()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HookRow {
    pub arm: usize,
    pub leg: usize,
    pub count: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HookReport {
    pub n: usize,
    pub k: usize,
    pub hook_types: Vec<HookRow>,
    pub total: String,
    /// `k·[z^n] nu_series(k)`.
    pub series_total: String,
}

pub fn hooks(g: &GlobalOpts, n: usize, k: usize) -> Result<(), CliError> {
    check_brute_force_n(g, "n", n)?;
    if k == 0 {
        return Err(CliError::Invalid("k must be at least 1".into()));
    }
    let totals = hook_type_totals(n, k);
    let per_type: Vec<(HookType, BigUint)> = HookType::of_length(k)
        .map(|t| (t, totals[&t].clone()))
        .collect();
    let total: BigUint = per_type.iter().map(|(_, c)| c).sum();
    let nu_k = series::nu_series(k, n)?.coeff(n).clone();
    let series_total = &nu_k * BigInt::from(k);

    let report = HookReport {
        n,
        k,
        hook_types: per_type
            .iter()
            .map(|(t, c)| HookRow {
                arm: t.arm,
                leg: t.leg,
                count: c.to_string(),
            })
            .collect(),
        total: total.to_string(),
        series_total: series_total.to_string(),
    };
    let mut out = OutputConfig::new(g, Format::Tsv)?;
    match out.format {
        Format::Json => out.json(&report)?,
        Format::Tsv => {
            let body = report
                .hook_types
                .iter()
                .map(|r| vec![format!("({},{})", r.arm, r.leg), r.count.clone()])
                .chain([
                    vec!["total".to_string(), report.total.clone()],
                    vec!["series".to_string(), report.series_total.clone()],
                ]);
            out.tsv(&["hooktype", "count"], body)?;
        }
    }
    out.finish()?;

    let disagree = per_type
        .iter()
        .any(|(_, c)| BigInt::from(c.clone()) != nu_k);
    if disagree || BigInt::from(total) != series_total {
        return Err(CliError::Mismatch(format!(
            "hook totals for n={n}, k={k} disagree with the series"
        )));
    }
    Ok(())
}

#[derive(Debug, Serialize, Deserialize)]
pub struct MomentReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub which: Family,
    pub kind: String,
    pub value: String,
    /// Whether the series value was also confirmed by enumeration.
    pub brute_force_checked: bool,
}

pub fn moments(
    g: &GlobalOpts,
    n: usize,
    k: usize,
    d: usize,
    which: Family,
    kind: Kind,
) -> Result<(), CliError> {
    if n == 0 || k == 0 || k > n {
        return Err(CliError::Invalid(format!(
            "need 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    let series = match kind {
        Kind::Binomial => series::binomial_series(which, k, d, n)?,
        Kind::Power => series::power_moment_series(which, k, d, n)?,
    };
    let value = series.coeff(n).clone();
    let checked = n <= BRUTE_FORCE_GUARD || g.force;
    let brute = if checked {
        let b = match kind {
            Kind::Binomial => aggregate_binomial(n, d, which)?.swap_remove(k - 1),
            Kind::Power => aggregate_power_moment(n, d, k, which)?,
        };
        Some(BigInt::from(b))
    } else {
        None
    };

    let kind_name = match kind {
        Kind::Binomial => "binomial",
        Kind::Power => "power",
    };
    let report = MomentReport {
        n,
        k,
        d,
        which,
        kind: kind_name.to_string(),
        value: value.to_string(),
        brute_force_checked: checked,
    };
    let mut out = OutputConfig::new(g, Format::Tsv)?;
    match out.format {
        Format::Json => out.json(&report)?,
        Format::Tsv => out.tsv(
            &["n", "k", "d", "which", "kind", "value"],
            [vec![
                n.to_string(),
                k.to_string(),
                d.to_string(),
                which.to_string(),
                kind_name.to_string(),
                report.value.clone(),
            ]],
        )?,
    }
    out.finish()?;

    match brute {
        Some(b) if b != value => Err(CliError::Mismatch(format!(
            "series gives {value} but enumeration gives {b}"
        ))),
        _ => Ok(()),
    }
}

fn verify_params(g: &GlobalOpts, o: &VerifyOverrides) -> Result<VerifyParams, CliError> {
    let d = VerifyParams::default();
    let params = VerifyParams {
        k_max: o.k_max.unwrap_or(d.k_max),
        n_max: o.n_max.unwrap_or(d.n_max),
        d_max: o.d_max.unwrap_or(d.d_max),
        alpha_max: o.alpha_max.unwrap_or(d.alpha_max),
        beta_max: o.beta_max.unwrap_or(d.beta_max),
        order: order(g),
    };
    check_brute_force_n(g, "--n-max", params.n_max)?;
    if params.k_max == 0 {
        return Err(CliError::Invalid("--k-max must be at least 1".into()));
    }
    if params.d_max == 0 {
        return Err(CliError::Invalid("--d-max must be at least 1".into()));
    }
    Ok(params)
}

pub fn verify(g: &GlobalOpts, suite: &str, overrides: &VerifyOverrides) -> Result<(), CliError> {
    let ids: Vec<IdentityId> = if suite.eq_ignore_ascii_case("all") {
        IdentityId::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let params = verify_params(g, overrides)?;
    let reports = ids
        .iter()
        .map(|&id| identities::run(id, &params))
        .collect::<Result<Vec<VerificationReport>, _>>()?;

    let mut out = OutputConfig::new(g, Format::Json)?;
    match out.format {
        Format::Json => out.json(&reports)?,
        Format::Tsv => out.tsv(
            &["identity", "status", "points", "mismatches"],
            reports.iter().map(|r| {
                vec![
                    r.identity_id.to_string(),
                    if r.passed() { "pass" } else { "fail" }.to_string(),
                    r.points_checked.to_string(),
                    r.mismatches.len().to_string(),
                ]
            }),
        )?,
    }
    out.finish()?;

    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.identity_id.to_string())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!("failed: {}", failed.join(", "))))
    }
}

fn need(value: Option<usize>, flag: &str, name: SeriesName) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Invalid(format!("series {name:?} requires --{flag}")))
}

pub fn build_series(
    name: SeriesName,
    p: &SeriesParams,
    order: Option<usize>,
) -> Result<TruncatedSeries, CliError> {
    let n = order.unwrap_or(DEFAULT_ORDER);
    let k = || need(p.k, "k", name);
    let d = || need(p.d, "d", name);
    let s = match name {
        SeriesName::Euler => series::euler_product(n),
        SeriesName::Nu => series::nu_series(k()?, n)?,
        SeriesName::Lambda => series::lambda_series(k()?, n)?,
        SeriesName::Gamma => series::gamma_series(k()?, n)?,
        SeriesName::Sigma => series::sigma_series(need(p.r, "r", name)?, k()?, n)?,
        SeriesName::S => series::s_series(d()?, k()?, n)?.series,
        SeriesName::Qbinom => {
            let q = series::q_binomial(need(p.alpha, "alpha", name)?, need(p.beta, "beta", name)?);
            q.to_series(order.unwrap_or(q.degree()))
        }
        SeriesName::Prop12rhs => series::q_binomial_inverse_form(
            need(p.alpha, "alpha", name)?,
            need(p.beta, "beta", name)?,
            n,
        ),
        SeriesName::LambdaBinom => series::lambda_binomial_series(k()?, d()?, n)?,
        SeriesName::NuBinom => series::nu_binomial_series(k()?, d()?, n)?,
    };
    Ok(s)
}

pub fn series(g: &GlobalOpts, name: SeriesName, params: &SeriesParams) -> Result<(), CliError> {
    let s = build_series(name, params, g.order.map(|o| o as usize))?;
    let mut out = OutputConfig::new(g, Format::Tsv)?;
    match out.format {
        Format::Json => out.json(&s)?,
        Format::Tsv => out.tsv(
            &["n", "coefficient"],
            s.coefficients()
                .iter()
                .enumerate()
                .map(|(i, c)| vec![i.to_string(), c.to_string()]),
        )?,
    }
    out.finish()
}
