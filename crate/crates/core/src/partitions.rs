//! Brute-force partition statistics.
//!
//! Everything here is computed by walking the partitions of `n` one at a
//! time, so it serves as the reference side for every generating-function
//! check in [`crate::identities`]. Parts are indexed from 1 and a part index
//! beyond the length of a partition reads as 0.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::binomial;
use crate::error::{Error, Result};

/// Largest `n` the brute-force routines are meant for. `p(60)` is just under
/// a million partitions; the CLI refuses anything larger without `--force`.
pub const BRUTE_FORCE_GUARD: usize = 60;

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.last() == Some(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Self { parts })
    }

    /// The empty partition, the only partition of 0.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn content(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `k`-th part (1-based), or 0 past the end.
    pub fn part(&self, k: usize) -> usize {
        match k {
            0 => panic!("parts are indexed from 1"),
            _ => self.parts.get(k - 1).copied().unwrap_or(0),
        }
    }

    /// Reflection of the Young diagram through its main diagonal:
    /// the `j`-th part of the result is the number of parts `>= j`.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let mut columns = vec![0; width];
        for &p in &self.parts {
            for c in &mut columns[..p] {
                *c += 1;
            }
        }
        Partition { parts: columns }
    }

    /// Arm and leg of every cell, row by row.
    pub fn hook_types(&self) -> impl Iterator<Item = HookType> + '_ {
        let conj = self.conjugate();
        self.parts.iter().enumerate().flat_map(move |(i, &row)| {
            let column_heights: Vec<usize> = conj.parts[..row].to_vec();
            column_heights
                .into_iter()
                .enumerate()
                .map(move |(j, height)| HookType {
                    arm: row - j - 1,
                    leg: height - i - 1,
                })
        })
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Streams the partitions of `n` in reverse-lexicographic order, starting
/// from `(n)` and ending at `(1,…,1)`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Self {
            current: Some(first),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        // Successor: lower the last part above 1 and refill greedily.
        if let Some(i) = parts.iter().rposition(|&p| p > 1) {
            let mut next = parts[..i].to_vec();
            let cap = parts[i] - 1;
            let mut rest = parts[i] + (parts.len() - i - 1);
            while rest > 0 {
                let take = rest.min(cap);
                next.push(take);
                rest -= take;
            }
            self.current = Some(next);
        }
        Some(Partition { parts })
    }
}

impl std::iter::FusedIterator for Partitions {}

pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions::new(n)
}

/// `p(n)` by counting the enumeration.
pub fn partition_count(n: usize) -> BigUint {
    let mut count = BigUint::zero();
    for _ in enumerate_partitions(n) {
        count += 1u32;
    }
    count
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

/// `ν_i` = number of parts equal to `i`, for `i = 1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityVector {
    multiplicities: Vec<usize>,
}

impl MultiplicityVector {
    pub fn new(multiplicities: Vec<usize>) -> Self {
        Self { multiplicities }
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    /// The ambient `n`; the vector has this many coordinates.
    pub fn ambient(&self) -> usize {
        self.multiplicities.len()
    }

    /// `Σ i·ν_i`.
    pub fn weight(&self) -> usize {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(i, &m)| (i + 1) * m)
            .sum()
    }

    /// Multiplicity of parts equal to `k` (1-based), 0 out of range.
    pub fn get(&self, k: usize) -> usize {
        match k {
            0 => panic!("part lengths are indexed from 1"),
            _ => self.multiplicities.get(k - 1).copied().unwrap_or(0),
        }
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for (i, &m) in self.multiplicities.iter().enumerate().rev() {
            parts.extend(std::iter::repeat_n(i + 1, m));
        }
        Partition { parts }
    }

    /// Number of distinct part lengths occurring at least `k` times.
    pub fn count_at_least(&self, k: usize) -> usize {
        assert!(k >= 1, "multiplicity threshold must be positive");
        self.multiplicities.iter().filter(|&&m| m >= k).count()
    }
}

pub fn multiplicity_vector(p: &Partition, n: usize) -> Result<MultiplicityVector> {
    let content = p.content();
    if content != n {
        return Err(Error::ContentMismatch {
            expected: n,
            actual: content,
        });
    }
    let mut multiplicities = vec![0; n];
    for &part in p.parts() {
        multiplicities[part - 1] += 1;
    }
    Ok(MultiplicityVector { multiplicities })
}

pub fn count_multiplicity_at_least(v: &MultiplicityVector, k: usize) -> usize {
    v.count_at_least(k)
}

/// Multiplicities of multiplicities: `γ_i` is the number of part lengths
/// occurring exactly `i` times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaVector {
    gammas: Vec<usize>,
}

impl GammaVector {
    pub fn gammas(&self) -> &[usize] {
        &self.gammas
    }

    pub fn ambient(&self) -> usize {
        self.gammas.len()
    }
}

pub fn gamma_vector(v: &MultiplicityVector) -> GammaVector {
    let mut gammas = vec![0; v.ambient()];
    for &m in v.multiplicities() {
        if m > 0 {
            gammas[m - 1] += 1;
        }
    }
    GammaVector { gammas }
}

/// The `(armlength, leglength)` pair of a hook.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HookType {
    pub arm: usize,
    pub leg: usize,
}

impl HookType {
    pub fn new(arm: usize, leg: usize) -> Self {
        Self { arm, leg }
    }

    /// Total number of cells in the hook.
    pub fn length(&self) -> usize {
        self.arm + self.leg + 1
    }

    /// The `k` hook types of length `k`, by increasing arm.
    pub fn of_length(k: usize) -> impl Iterator<Item = HookType> {
        (0..k).map(move |arm| HookType::new(arm, k - 1 - arm))
    }
}

impl fmt::Display for HookType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.arm, self.leg)
    }
}

pub fn hook_type_count(p: &Partition, t: HookType) -> usize {
    p.hook_types().filter(|&h| h == t).count()
}

pub fn hook_length_count(p: &Partition, k: usize) -> usize {
    assert!(k >= 1, "hook length must be positive");
    HookType::of_length(k).map(|t| hook_type_count(p, t)).sum()
}

/// Totals of every hook type of length at most `max_len` over all
/// partitions of `n`.
pub fn hook_type_totals(n: usize, max_len: usize) -> BTreeMap<HookType, BigUint> {
    let mut totals: BTreeMap<HookType, BigUint> = (1..=max_len)
        .flat_map(HookType::of_length)
        .map(|t| (t, BigUint::zero()))
        .collect();
    for p in enumerate_partitions(n) {
        for h in p.hook_types() {
            if let Some(slot) = totals.get_mut(&h) {
                *slot += 1u32;
            }
        }
    }
    totals
}

/// `m_k(n)` for `k = 1..=n`: the number of part lengths with multiplicity
/// at least `k`, summed over the partitions of `n`.
pub fn multiplicity_at_least_totals(n: usize) -> Vec<BigUint> {
    let mut totals = vec![BigUint::zero(); n];
    for p in enumerate_partitions(n) {
        let v = multiplicity_vector(&p, n).expect("enumerated partition has content n");
        for (k, slot) in totals.iter_mut().enumerate() {
            *slot += v.count_at_least(k + 1);
        }
    }
    totals
}

/// Which per-partition vector a moment is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// Parts `λ_k`.
    Lambda,
    /// Multiplicities `ν_k`.
    Nu,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Lambda => "lambda",
            Family::Nu => "nu",
        }
    }

    fn coordinates(&self, p: &Partition, n: usize) -> Vec<usize> {
        match self {
            Family::Lambda => (1..=n).map(|k| p.part(k)).collect(),
            Family::Nu => {
                multiplicity_vector(p, n)
                    .expect("enumerated partition has content n")
                    .multiplicities
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lambda" => Ok(Family::Lambda),
            "nu" => Ok(Family::Nu),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

/// `λ(n)`, `ν(n)` and `γ(n)`: coordinate-wise sums over all partitions of `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AggregateVectors {
    pub n: usize,
    pub lambda: Vec<BigUint>,
    pub nu: Vec<BigUint>,
    pub gamma: Vec<BigUint>,
}

impl AggregateVectors {
    /// `λ_k(n)`, 1-based.
    pub fn lambda_k(&self, k: usize) -> &BigUint {
        &self.lambda[k - 1]
    }

    pub fn nu_k(&self, k: usize) -> &BigUint {
        &self.nu[k - 1]
    }

    pub fn gamma_k(&self, k: usize) -> &BigUint {
        &self.gamma[k - 1]
    }
}

fn require_positive(name: &str, value: usize) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter(format!(
            "{name} must be at least 1"
        )));
    }
    Ok(())
}

pub fn aggregate_vectors(n: usize) -> Result<AggregateVectors> {
    require_positive("n", n)?;
    let mut lambda = vec![BigUint::zero(); n];
    let mut nu = vec![BigUint::zero(); n];
    let mut gamma = vec![BigUint::zero(); n];
    for p in enumerate_partitions(n) {
        for (slot, &part) in lambda.iter_mut().zip(p.parts()) {
            *slot += part;
        }
        let v = multiplicity_vector(&p, n)?;
        for (slot, &m) in nu.iter_mut().zip(v.multiplicities()) {
            *slot += m;
        }
        for (slot, &g) in gamma.iter_mut().zip(gamma_vector(&v).gammas()) {
            *slot += g;
        }
    }
    Ok(AggregateVectors {
        n,
        lambda,
        nu,
        gamma,
    })
}

/// Coordinate `k` is `Σ_{|λ|=n} C(x_k, d)` where `x` is the part vector
/// (padded with zeros to length `n`) or the multiplicity vector.
pub fn aggregate_binomial(n: usize, d: usize, which: Family) -> Result<Vec<BigUint>> {
    require_positive("n", n)?;
    let table: Vec<BigUint> = (0..=n as u64).map(|x| binomial(x, d as u64)).collect();
    let mut out = vec![BigUint::zero(); n];
    for p in enumerate_partitions(n) {
        for (slot, x) in out.iter_mut().zip(which.coordinates(&p, n)) {
            *slot += &table[x];
        }
    }
    Ok(out)
}

/// `Σ_{|λ|=n} x_k^d`, summed directly. `0^0` counts as 1.
pub fn aggregate_power_moment(n: usize, d: usize, k: usize, which: Family) -> Result<BigUint> {
    require_positive("n", n)?;
    if k == 0 || k > n {
        return Err(Error::InvalidParameter(format!(
            "k must lie in 1..={n}, got {k}"
        )));
    }
    let exponent = u32::try_from(d)
        .map_err(|_| Error::InvalidParameter(format!("exponent {d} is too large")))?;
    let mut total = BigUint::zero();
    for p in enumerate_partitions(n) {
        let x = which.coordinates(&p, n)[k - 1];
        total += if exponent == 0 {
            BigUint::one()
        } else {
            BigUint::from(x).pow(exponent)
        };
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    // Counts partitions of n with parts at most m, by the usual recursion.
    fn count_bounded(n: usize, m: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        if m == 0 {
            return 0;
        }
        (1..=m.min(n))
            .map(|first| count_bounded(n - first, first))
            .sum()
    }

    #[test]
    fn rejects_bad_part_lists() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn zero_has_one_empty_partition() {
        let all: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(all, vec![Partition::empty()]);
    }

    #[test]
    fn four_in_reverse_lex_order() {
        let all: Vec<Vec<usize>> = enumerate_partitions(4).map(Vec::from).collect();
        assert_eq!(
            all,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn counts_match_recursive_oracle() {
        for n in 0..=30 {
            assert_eq!(
                partition_count(n),
                BigUint::from(count_bounded(n, n)),
                "n = {n}"
            );
        }
        assert_eq!(partition_count(10), BigUint::from(42u32));
    }

    #[test]
    fn enumeration_is_strictly_decreasing() {
        let all: Vec<_> = enumerate_partitions(12).collect();
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert!(all.iter().all(|q| q.content() == 12));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[5, 4, 3, 1]).conjugate(), p(&[4, 3, 3, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[6]).conjugate(), p(&[1; 6]));
    }

    #[test]
    fn part_indexing_pads_with_zero() {
        let q = p(&[3, 1]);
        assert_eq!(q.part(1), 3);
        assert_eq!(q.part(2), 1);
        assert_eq!(q.part(3), 0);
    }

    #[test]
    fn multiplicity_vectors_from_table() {
        let v = multiplicity_vector(&p(&[3, 1]), 4).unwrap();
        assert_eq!(v.multiplicities(), &[1, 0, 1, 0]);
        let v = multiplicity_vector(&p(&[1, 1, 1, 1]), 4).unwrap();
        assert_eq!(v.multiplicities(), &[4, 0, 0, 0]);
        let v = multiplicity_vector(&Partition::empty(), 0).unwrap();
        assert!(v.multiplicities().is_empty());
        assert_eq!(
            multiplicity_vector(&p(&[3, 1]), 5),
            Err(Error::ContentMismatch {
                expected: 5,
                actual: 4
            })
        );
    }

    #[test]
    fn multiplicity_vector_round_trips() {
        for n in 0..=15 {
            for q in enumerate_partitions(n) {
                let v = multiplicity_vector(&q, n).unwrap();
                assert_eq!(v.weight(), n);
                assert_eq!(v.to_partition(), q);
            }
        }
    }

    #[test]
    fn gamma_vectors_from_table() {
        let g = |parts: &[usize], n| gamma_vector(&multiplicity_vector(&p(parts), n).unwrap());
        assert_eq!(g(&[2, 1, 1], 4).gammas(), &[1, 1, 0, 0]);
        assert_eq!(g(&[1, 1, 1, 1], 4).gammas(), &[0, 0, 0, 1]);
        assert_eq!(g(&[3, 2], 5).gammas(), &[2, 0, 0, 0, 0]);
        assert_eq!(g(&[4, 1], 5), g(&[3, 2], 5));
    }

    #[test]
    fn gamma_sums_to_distinct_part_count() {
        for q in enumerate_partitions(14) {
            let v = multiplicity_vector(&q, 14).unwrap();
            let mut distinct = q.parts().to_vec();
            distinct.dedup();
            assert_eq!(
                gamma_vector(&v).gammas().iter().sum::<usize>(),
                distinct.len()
            );
        }
    }

    #[test]
    fn hook_counts() {
        assert!(hook_type_count(&p(&[5, 4, 3, 1]), HookType::new(2, 1)) >= 1);
        assert_eq!(hook_type_count(&p(&[1]), HookType::new(0, 0)), 1);
        assert_eq!(hook_type_count(&p(&[2, 2]), HookType::new(1, 1)), 1);
        assert_eq!(hook_length_count(&p(&[1]), 1), 1);
        assert_eq!(hook_length_count(&p(&[2, 1]), 3), 1);
    }

    #[test]
    fn hook_types_of_figure_partition() {
        // Row-by-row (arm, leg) of (5,4,3,1), worked by hand.
        let got: Vec<(usize, usize)> = p(&[5, 4, 3, 1])
            .hook_types()
            .map(|h| (h.arm, h.leg))
            .collect();
        let want = vec![
            (4, 3),
            (3, 2),
            (2, 2),
            (1, 1),
            (0, 0),
            (3, 2),
            (2, 1),
            (1, 1),
            (0, 0),
            (2, 1),
            (1, 0),
            (0, 0),
            (0, 0),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn multiplicity_threshold_counts() {
        let v = MultiplicityVector::new(vec![4, 0, 0, 0]);
        assert_eq!(count_multiplicity_at_least(&v, 2), 1);
        let v = MultiplicityVector::new(vec![2, 1, 0, 0]);
        assert_eq!(count_multiplicity_at_least(&v, 1), 2);
        let v = MultiplicityVector::new(vec![]);
        assert_eq!(count_multiplicity_at_least(&v, 3), 0);
    }

    #[test]
    fn aggregates_for_four() {
        let agg = aggregate_vectors(4).unwrap();
        assert_eq!(agg.lambda, big(&[12, 5, 2, 1]));
        assert_eq!(agg.nu, big(&[7, 3, 1, 1]));
        assert_eq!(agg.gamma, big(&[4, 2, 0, 1]));
        assert!(aggregate_vectors(0).is_err());
    }

    #[test]
    fn aggregate_of_one() {
        let agg = aggregate_vectors(1).unwrap();
        assert_eq!(agg.lambda, big(&[1]));
        assert_eq!(agg.nu, big(&[1]));
        assert_eq!(agg.gamma, big(&[1]));
    }

    #[test]
    fn binomial_aggregates_for_four() {
        assert_eq!(
            aggregate_binomial(4, 1, Family::Lambda).unwrap(),
            big(&[12, 5, 2, 1])
        );
        assert_eq!(
            aggregate_binomial(4, 2, Family::Lambda).unwrap(),
            big(&[11, 1, 0, 0])
        );
        assert_eq!(
            aggregate_binomial(4, 3, Family::Lambda).unwrap(),
            big(&[5, 0, 0, 0])
        );
        assert_eq!(
            aggregate_binomial(4, 1, Family::Nu).unwrap(),
            big(&[7, 3, 1, 1])
        );
        assert_eq!(
            aggregate_binomial(4, 2, Family::Nu).unwrap(),
            big(&[7, 1, 0, 0])
        );
        assert_eq!(
            aggregate_binomial(4, 3, Family::Nu).unwrap(),
            big(&[4, 0, 0, 0])
        );
        assert_eq!(
            aggregate_binomial(4, 0, Family::Lambda).unwrap(),
            big(&[5, 5, 5, 5])
        );
    }

    #[test]
    fn power_moments() {
        let pm = |n, d, k, f| aggregate_power_moment(n, d, k, f).unwrap();
        assert_eq!(pm(4, 1, 1, Family::Lambda), BigUint::from(12u32));
        assert_eq!(pm(4, 2, 1, Family::Lambda), BigUint::from(34u32));
        for n in 1..=10 {
            assert_eq!(pm(n, 0, 1, Family::Nu), partition_count(n));
            assert_eq!(pm(n, 0, n, Family::Lambda), partition_count(n));
        }
        assert!(aggregate_power_moment(4, 1, 5, Family::Lambda).is_err());
        assert!(aggregate_power_moment(4, 1, 0, Family::Lambda).is_err());
    }

    #[test]
    fn family_parses() {
        assert_eq!("nu".parse::<Family>().unwrap(), Family::Nu);
        assert!("gamma".parse::<Family>().is_err());
    }
}
