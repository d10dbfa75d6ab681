//! Truncated power series with big-integer coefficients, and the generating
//! functions of the partition statistics.
//!
//! A [`TruncatedSeries`] of order `N` holds `c_0..=c_N`; every product is
//! reduced modulo `z^{N+1}` and binary operations truncate to the smaller
//! order. Infinite sums and products are cut at the first index whose
//! lowest-degree term lies above `N`; each constructor states its cut.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, factorial};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, multiplicity_vector, Family, Partition};

pub use crate::arith::stirling2;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SeriesJson", try_from = "SeriesJson")]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

/// Wire form: `{"order": N, "coefficients": ["c0", …, "cN"]}`.
#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coefficients: Vec<String>,
}

impl From<TruncatedSeries> for SeriesJson {
    fn from(s: TruncatedSeries) -> Self {
        SeriesJson {
            order: s.order(),
            coefficients: s.coeffs.iter().map(BigInt::to_string).collect(),
        }
    }
}

impl TryFrom<SeriesJson> for TruncatedSeries {
    type Error = String;

    fn try_from(j: SeriesJson) -> std::result::Result<Self, String> {
        if j.coefficients.len() != j.order + 1 {
            return Err(format!(
                "order {} needs {} coefficients, got {}",
                j.order,
                j.order + 1,
                j.coefficients.len()
            ));
        }
        let coeffs = j
            .coefficients
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(|e| format!("{c:?}: {e}")))
            .collect::<std::result::Result<_, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, BigInt::one(), order)
    }

    /// `c·z^exp`, or zero if `exp > order`.
    pub fn monomial(exp: usize, c: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        if exp <= order {
            s.coeffs[exp] = c;
        }
        s
    }

    /// Pads with zeros or drops terms above `order`.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `z^n`. Panics if `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &BigInt {
        assert!(
            n <= self.order(),
            "coefficient z^{n} requested from a series of order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-truncates at `order`, which must not exceed the current order.
    pub fn truncate(mut self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot raise the order of a truncated series"
        );
        self.coeffs.truncate(order + 1);
        self
    }

    /// Multiplies by `z^k`.
    pub fn shift(mut self, k: usize) -> Self {
        let order = self.order();
        if k > order {
            return Self::zero(order);
        }
        self.coeffs.truncate(order + 1 - k);
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.append(&mut self.coeffs);
        Self { coeffs }
    }

    pub fn scale(mut self, c: &BigInt) -> Self {
        for x in &mut self.coeffs {
            *x *= c;
        }
        self
    }

    /// Multiplies in place by `1 - z^k`.
    pub fn mul_one_minus_z_pow(mut self, k: usize) -> Self {
        assert!(k >= 1);
        for n in (k..self.coeffs.len()).rev() {
            let (low, high) = self.coeffs.split_at_mut(n);
            high[0] -= &low[n - k];
        }
        self
    }

    /// Multiplies in place by `1/(1 - z^k)`, i.e. a stride-`k` prefix sum.
    pub fn div_one_minus_z_pow(mut self, k: usize) -> Self {
        assert!(k >= 1);
        for n in k..self.coeffs.len() {
            let (low, high) = self.coeffs.split_at_mut(n);
            high[0] += &low[n - k];
        }
        self
    }

    /// Multiplicative inverse modulo `z^{N+1}`; the constant term must be ±1.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.abs() != BigInt::one() {
            return Err(Error::NotInvertible(a0.to_string()));
        }
        let order = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(order + 1);
        // a0 = ±1 is its own inverse.
        inv.push(a0.clone());
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &inv[n - i];
                }
            }
            inv.push(-(acc * a0));
        }
        Ok(Self { coeffs: inv })
    }

    /// `self^e` at this order.
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O(z^{})", self.order() + 1)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let mag = c.abs();
            match n {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "z^{n}")?,
                _ => write!(f, "{mag}*z^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    // Schoolbook convolution; orders here stay in the low hundreds.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait for TruncatedSeries {
            type Output = TruncatedSeries;

            fn $method(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Neg for TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(mut self) -> TruncatedSeries {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
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

/// `Π_{i≥1} 1/(1-z^i)`, the partition generating function. Factors with
/// `i > N` do not contribute.
pub fn euler_product(order: usize) -> TruncatedSeries {
    (1..=order).fold(TruncatedSeries::one(order), |s, i| s.div_one_minus_z_pow(i))
}

/// `z^k/(1-z^k)`.
pub fn geometric_factor(k: usize, order: usize) -> Result<TruncatedSeries> {
    require_positive("k", k)?;
    Ok(TruncatedSeries::one(order).div_one_minus_z_pow(k).shift(k))
}

/// Gaussian binomial `[α+β choose α]_q`, the generating polynomial of
/// partitions fitting in a box with at most `β` parts, each at most `α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QBinomial {
    pub alpha: usize,
    pub beta: usize,
    coefficients: Vec<BigInt>,
}

impl QBinomial {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// The polynomial as a series of the given order, padded or truncated.
    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.coefficients.clone(), order)
    }
}

/// Builds `[α+β choose α]_q` from
/// `G(α, β) = G(α-1, β) + q^α G(α, β-1)` with `G(0, β) = G(α, 0) = 1`.
pub fn q_binomial(alpha: usize, beta: usize) -> QBinomial {
    // row[b] holds G(a, b) for the current a.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]; beta + 1];
    for a in 1..=alpha {
        for b in 1..=beta {
            let mut next = row[b].clone();
            let shifted = &row[b - 1];
            next.resize(next.len().max(shifted.len() + a), BigInt::zero());
            for (i, c) in shifted.iter().enumerate() {
                next[i + a] += c;
            }
            row[b] = next;
        }
    }
    QBinomial {
        alpha,
        beta,
        coefficients: row.swap_remove(beta),
    }
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact polynomial division over the integers. Fails unless the divisor's
/// leading coefficient divides every step and the remainder vanishes.
pub fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Result<Vec<BigInt>> {
    let den_len = den.iter().rposition(|c| !c.is_zero()).map(|i| i + 1);
    let Some(den_len) = den_len else {
        return Err(Error::InvalidParameter(
            "division by the zero polynomial".into(),
        ));
    };
    let den = &den[..den_len];
    let lead = &den[den_len - 1];
    let mut rem: Vec<BigInt> = num.to_vec();
    if rem.len() < den_len {
        return if rem.iter().all(Zero::is_zero) {
            Ok(vec![BigInt::zero()])
        } else {
            Err(Error::InexactDivision)
        };
    }
    let mut quot = vec![BigInt::zero(); rem.len() - den_len + 1];
    for shift in (0..quot.len()).rev() {
        let top = &rem[shift + den_len - 1];
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        for (i, d) in den.iter().enumerate() {
            rem[shift + i] -= &q * d;
        }
        quot[shift] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Err(Error::InexactDivision);
    }
    Ok(quot)
}

/// `Π_{j=from}^{to} (q^j - 1)` as a dense polynomial.
fn q_minus_one_product(from: usize, to: usize) -> Vec<BigInt> {
    (from..=to).fold(vec![BigInt::one()], |acc, j| {
        let mut factor = vec![BigInt::zero(); j + 1];
        factor[0] = -BigInt::one();
        factor[j] = BigInt::one();
        poly_mul(&acc, &factor)
    })
}

/// `[α+β choose α]_q` from its quotient-of-products form, by exact division.
pub fn q_binomial_by_quotient(alpha: usize, beta: usize) -> Result<QBinomial> {
    let num = q_minus_one_product(1, alpha + beta);
    let den = poly_mul(
        &q_minus_one_product(1, alpha),
        &q_minus_one_product(1, beta),
    );
    let mut coefficients = poly_div_exact(&num, &den)?;
    let len = coefficients
        .iter()
        .rposition(|c| !c.is_zero())
        .map_or(1, |i| i + 1);
    coefficients.truncate(len);
    Ok(QBinomial {
        alpha,
        beta,
        coefficients,
    })
}

/// The inverse-series expression for the Gaussian binomial:
///
/// ```text
/// 1/(1 - q^{α+β+1}) · ( Σ_{i≥0} q^{i(β+1)} Π_{j=i+1}^{i+α} (1 - q^j) )^{-1}
/// ```
///
/// The inner sum keeps the terms with `i(β+1) <= N`.
pub fn q_binomial_inverse_form(alpha: usize, beta: usize, order: usize) -> TruncatedSeries {
    let mut inner = TruncatedSeries::zero(order);
    let step = beta + 1;
    for i in (0..).take_while(|i| i * step <= order) {
        let term = (i + 1..=(i + alpha).min(order))
            .fold(TruncatedSeries::one(order), |s, j| s.mul_one_minus_z_pow(j))
            .shift(i * step);
        inner = &inner + &term;
    }
    inner
        .invert()
        .expect("inner sum has constant term 1")
        .div_one_minus_z_pow(alpha + beta + 1)
}

/// `Σ_n ν_k(n) z^n = z^k/(1-z^k) · Π 1/(1-z^i)`; also the generating
/// function of hooks of any one type of length `k`.
pub fn nu_series(k: usize, order: usize) -> Result<TruncatedSeries> {
    require_positive("k", k)?;
    Ok(euler_product(order).div_one_minus_z_pow(k).shift(k))
}

/// `Σ_n λ_k(n) z^n = Π 1/(1-z^i) · Σ_{j≥k} z^j/(1-z^j)`, tail cut at `j > N`.
pub fn lambda_series(k: usize, order: usize) -> Result<TruncatedSeries> {
    require_positive("k", k)?;
    // Coefficient n of the tail counts the divisors of n that are >= k.
    let mut tail = vec![BigInt::zero(); order + 1];
    for j in k..=order {
        for m in (j..=order).step_by(j) {
            tail[m] += 1u32;
        }
    }
    Ok(&euler_product(order) * &TruncatedSeries::from_coeffs(tail, order))
}

/// `Σ_n γ_k(n) z^n = (1-z) z^k / ((1-z^k)(1-z^{k+1})) · Π 1/(1-z^i)`.
pub fn gamma_series(k: usize, order: usize) -> Result<TruncatedSeries> {
    require_positive("k", k)?;
    Ok(euler_product(order)
        .div_one_minus_z_pow(k)
        .div_one_minus_z_pow(k + 1)
        .mul_one_minus_z_pow(1)
        .shift(k))
}

/// `Σ_n Σ_{|λ|=n} C(λ_k, d) z^n`, assembled from the decomposition of a
/// partition around its `k`-th part `i`:
///
/// ```text
/// Π_{j<k} 1/(1-z^j) · Σ_{i≥0} C(i,d) z^{ik} Π_{j≤i} 1/(1-z^j)
/// ```
///
/// The outer sum keeps `i` with `ik <= N`.
pub fn lambda_binomial_series(k: usize, d: usize, order: usize) -> Result<TruncatedSeries> {
    require_positive("k", k)?;
    let mut sum = TruncatedSeries::zero(order);
    let mut running = TruncatedSeries::one(order);
    for i in (0..).take_while(|i| i * k <= order) {
        if i > 0 {
            running = running.div_one_minus_z_pow(i);
        }
        let weight = binomial(i as u64, d as u64);
        if weight.is_zero() {
            continue;
        }
        let term = running.clone().shift(i * k).scale(&BigInt::from(weight));
        sum = &sum + &term;
    }
    Ok((1..k).fold(sum, |s, j| s.div_one_minus_z_pow(j)))
}

/// `Σ_n Σ_{|λ|=n} C(ν_k, d) z^n = (z^k/(1-z^k))^d · Π 1/(1-z^i)`.
pub fn nu_binomial_series(k: usize, d: usize, order: usize) -> Result<TruncatedSeries> {
    require_positive("k", k)?;
    Ok((0..d).fold(euler_product(order), |s, _| {
        s.div_one_minus_z_pow(k).shift(k)
    }))
}

pub fn binomial_series(which: Family, k: usize, d: usize, order: usize) -> Result<TruncatedSeries> {
    match which {
        Family::Lambda => lambda_binomial_series(k, d, order),
        Family::Nu => nu_binomial_series(k, d, order),
    }
}

/// `Σ_n Σ_{|λ|=n} x_k^d z^n` via `x^d = Σ_i i!·S(d,i)·C(x,i)`, with `S` the
/// Stirling numbers of the second kind.
pub fn power_moment_series(
    which: Family,
    k: usize,
    d: usize,
    order: usize,
) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::zero(order);
    for i in 0..=d {
        let weight = factorial(i) * stirling2(d, i);
        if weight.is_zero() {
            continue;
        }
        let term = binomial_series(which, k, i, order)?.scale(&BigInt::from(weight));
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `σ_r(k) = Σ_{i≥k} (z^i/(1-z^i))^r`, keeping the `i` with `ir <= N`.
pub fn sigma_series(r: usize, k: usize, order: usize) -> Result<TruncatedSeries> {
    require_positive("r", r)?;
    require_positive("k", k)?;
    let mut sum = TruncatedSeries::zero(order);
    for i in (k..).take_while(|i| i * r <= order) {
        let term = (0..r).fold(TruncatedSeries::one(order).shift(i * r), |s, _| {
            s.div_one_minus_z_pow(i)
        });
        sum = &sum + &term;
    }
    Ok(sum)
}

/// Size of the conjugacy class of `S_d` with the given cycle type:
/// `d! / Π_j (j^{ν_j} ν_j!)`.
pub fn cycle_class_size(cycle_type: &Partition) -> BigUint {
    let d = cycle_type.content();
    let v = multiplicity_vector(cycle_type, d).expect("content is d by construction");
    let mut centralizer = BigUint::one();
    for (j, &m) in v.multiplicities().iter().enumerate() {
        centralizer *= BigUint::from(j + 1).pow(m as u32) * factorial(m);
    }
    let (q, r) = factorial(d).div_rem(&centralizer);
    debug_assert!(r.is_zero(), "centralizer order divides d!");
    q
}

/// Every cycle type of degree `d` (in enumeration order) with its class size.
pub fn cycle_type_weights(d: usize) -> Vec<(Partition, BigUint)> {
    enumerate_partitions(d)
        .map(|ct| {
            let w = cycle_class_size(&ct);
            (ct, w)
        })
        .collect()
}

/// `S_d(k)`, the degree-`d` cycle-index combination of the `σ_r(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleIndexSeries {
    pub d: usize,
    pub k: usize,
    pub series: TruncatedSeries,
}

/// `S_d(k) = Σ_{cycle types ρ of d} |class(ρ)| · Π_j σ_j(k)^{ν_j(ρ)}`.
pub fn s_series(d: usize, k: usize, order: usize) -> Result<CycleIndexSeries> {
    require_positive("k", k)?;
    let sigmas = (1..=d)
        .map(|r| sigma_series(r, k, order))
        .collect::<Result<Vec<_>>>()?;
    let mut series = TruncatedSeries::zero(order);
    for (ct, weight) in cycle_type_weights(d) {
        let mut term = TruncatedSeries::one(order).scale(&BigInt::from(weight));
        for &j in ct.parts() {
            term = &term * &sigmas[j - 1];
        }
        series = &series + &term;
    }
    Ok(CycleIndexSeries { d, k, series })
}
