//! Numerical checks of bounds and asymptotic formulas against exact counts.
//!
//! Inequalities are decided with [`HighPrecision`] logarithms of the exact
//! table values so that a near-tight bound is never misjudged by double
//! rounding. Ratio tables only need double precision.

use std::fmt;
use std::str::FromStr;

use astro_float::BigFloat;
use num_bigint::BigUint;
use serde::Serialize;

use crate::enumeration::{p_table, q_table, s_table, t_value, CountTable};
use crate::error::{AbacusError, Result};
use crate::precision::{ln_f64, HighPrecision};

/// Acceptance tolerances and the values an independent run produced.
///
/// The reference values were computed outside this crate with Python integers
/// (Euler-product coefficients) and `mpmath` at 60 digits.
pub mod tolerances {
    /// |p(n) / estimate - 1| at the largest sample point.
    pub const P_RATIO: f64 = 0.02;
    /// Same for t, s, q and the two proportions.
    pub const OTHER_RATIO: f64 = 0.05;
    /// |S_m / limit - 1| for the Gaussian sum at m = 10^6.
    pub const GAUSSIAN_SUM: f64 = 0.01;

    pub const SAMPLE_POINTS: [usize; 5] = [100, 500, 1000, 2000, 5000];

    /// Reference ratios at [`SAMPLE_POINTS`].
    pub const REFERENCE_P: [f64; 5] = [0.956284813846, 0.980300947622, 0.986045057611, 0.990119434237, 0.993743668588];
    pub const REFERENCE_T: [f64; 5] = [0.935658403042, 0.970628176698, 0.979128136473, 0.985189476378, 0.990603677783];
    pub const REFERENCE_S: [f64; 5] = [0.969724143743, 0.985660358082, 0.989875104129, 0.992847939538, 0.995480613136];
    pub const REFERENCE_Q: [f64; 5] = [0.98235327464, 0.992295013305, 0.99458270966, 0.996184827457, 0.997595711703];
    pub const REFERENCE_SP: [f64; 5] = [1.01405368955, 1.00546710729, 1.00388425102, 1.00275573351, 1.00174787986];
    pub const REFERENCE_QP: [f64; 5] = [1.02726014302, 1.01223508527, 1.00865848065, 1.00612592078, 1.0038762945];

    /// Gaussian sum ratios at m = 10^3, 10^4, 10^5, 10^6 for the
    /// (β, θ, γ) = (3/4, 1/4, c/4) and (1/4, 1/4, c/√2) parameterizations.
    pub const REFERENCE_GAUSSIAN_WIDE: [f64; 4] = [1.00254066355, 1.00045180100, 1.00008034284, 1.00001428720];
    pub const REFERENCE_GAUSSIAN_NARROW: [f64; 4] = [1.13512001548, 1.07598356857, 1.04272870064, 1.02402811414];

    /// Smallest slack of ln(14 p(n)) - 2 sqrt(n) over 1 ≤ n ≤ 5000.
    pub const REFERENCE_MAROTI_MIN_SLACK: f64 = 0.03115943963960815;
}

/// `c = 2 sqrt(π²/6)` and `b = 4 sqrt(3)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticConstants {
    pub c: f64,
    pub b: f64,
}

impl AsymptoticConstants {
    pub fn standard() -> Self {
        Self { c: 2.0 * (std::f64::consts::PI.powi(2) / 6.0).sqrt(), b: 4.0 * 3f64.sqrt() }
    }
}

impl Default for AsymptoticConstants {
    fn default() -> Self {
        Self::standard()
    }
}

fn c() -> f64 {
    AsymptoticConstants::standard().c
}

fn b() -> f64 {
    AsymptoticConstants::standard().b
}

/// Which asymptotic formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EstimateKind {
    P,
    T,
    S,
    Q,
    /// s(n) / p(n).
    SOverP,
    /// q(n) / p(n).
    QOverP,
}

impl EstimateKind {
    pub const ALL: [EstimateKind; 6] = [
        EstimateKind::P,
        EstimateKind::T,
        EstimateKind::S,
        EstimateKind::Q,
        EstimateKind::SOverP,
        EstimateKind::QOverP,
    ];

    /// Natural log of the formula value at `n ≥ 1`.
    pub fn ln_estimate(self, n: f64) -> f64 {
        let (c, b) = (c(), b());
        let root = n.sqrt();
        match self {
            EstimateKind::P => c * root - (b * n).ln(),
            EstimateKind::T => c * (2.0 * n).sqrt() - 1.25 * n.ln() + (4.0 * 3f64.powf(0.25) / (b * b)).ln(),
            EstimateKind::S => 0.5 * c * root - (2f64.powf(1.75) * 3f64.powf(0.25)).ln() - 0.75 * n.ln(),
            EstimateKind::Q => c / std::f64::consts::SQRT_2 * root - (4.0 * 3f64.powf(0.25)).ln() - 0.75 * n.ln(),
            EstimateKind::SOverP => 0.25 * (6.0 * n).ln() - 0.5 * c * root,
            EstimateKind::QOverP => 0.25 * (3.0 * n).ln() - c * root * (1.0 - std::f64::consts::FRAC_1_SQRT_2),
        }
    }

    pub fn estimate(self, n: f64) -> f64 {
        self.ln_estimate(n).exp()
    }
}

impl fmt::Display for EstimateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EstimateKind::P => "p",
            EstimateKind::T => "t",
            EstimateKind::S => "s",
            EstimateKind::Q => "q",
            EstimateKind::SOverP => "sp",
            EstimateKind::QOverP => "qp",
        };
        f.write_str(s)
    }
}

impl FromStr for EstimateKind {
    type Err = AbacusError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p" => Ok(EstimateKind::P),
            "t" => Ok(EstimateKind::T),
            "s" => Ok(EstimateKind::S),
            "q" => Ok(EstimateKind::Q),
            "sp" | "s/p" => Ok(EstimateKind::SOverP),
            "qp" | "q/p" => Ok(EstimateKind::QOverP),
            other => Err(AbacusError::MalformedInput(format!("unknown estimate kind {other:?}"))),
        }
    }
}

/// `e^(c √n) / (4√3 n)`.
pub fn hr_estimate(n: f64) -> f64 {
    EstimateKind::P.estimate(n)
}

/// `e^(c √(2n)) / n^(5/4) · 2² 3^(1/4) / b²`.
pub fn t_estimate(n: f64) -> f64 {
    EstimateKind::T.estimate(n)
}

/// `e^(c √n / 2) / (2^(7/4) 3^(1/4) n^(3/4))`.
pub fn s_estimate(n: f64) -> f64 {
    EstimateKind::S.estimate(n)
}

/// `e^(c √n / √2) / (2² 3^(1/4) n^(3/4))`.
pub fn q_estimate(n: f64) -> f64 {
    EstimateKind::Q.estimate(n)
}

/// The pair-count prefactor `2² 3^(1/4) / b²`.
pub fn t_prefactor() -> f64 {
    4.0 * 3f64.powf(0.25) / (b() * b())
}

/// `e^(c √(32m)) / (32m) · 2² 3^(1/2) / b²`; coincides with
/// [`hr_estimate`]`(32m)` once `b = 4√3`.
pub fn p32_estimate(m: f64) -> f64 {
    let n = 32.0 * m;
    (c() * n.sqrt()).exp() / n * 4.0 * 3f64.sqrt() / (b() * b())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BoundVerdict {
    Holds,
    Violated { first_n: usize },
}

/// Outcome of checking one inequality over an index range.
///
/// Slack is measured in log space as (allowed side) − (checked side), so a
/// negative slack is a violation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound_name: String,
    pub n_lo: usize,
    pub n_hi: usize,
    pub verdict: BoundVerdict,
    pub min_slack: f64,
    pub max_slack: f64,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.verdict == BoundVerdict::Holds
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.verdict {
            BoundVerdict::Holds => write!(
                f,
                "HOLDS {} on [{}, {}] (min slack {:.6e}, max slack {:.6e})",
                self.bound_name, self.n_lo, self.n_hi, self.min_slack, self.max_slack
            ),
            BoundVerdict::Violated { first_n } => write!(
                f,
                "VIOLATED {} on [{}, {}]: first violation at n = {} (min slack {:.6e})",
                self.bound_name, self.n_lo, self.n_hi, first_n, self.min_slack
            ),
        }
    }
}

/// Folds per-index slacks into a report. `violated` overrides the sign test
/// when an exact comparison is available.
struct SlackAccumulator {
    name: String,
    lo: usize,
    hi: usize,
    first_violation: Option<usize>,
    min_slack: f64,
    max_slack: f64,
}

impl SlackAccumulator {
    fn new(name: impl Into<String>, lo: usize, hi: usize) -> Self {
        Self {
            name: name.into(),
            lo,
            hi,
            first_violation: None,
            min_slack: f64::INFINITY,
            max_slack: f64::NEG_INFINITY,
        }
    }

    fn record(&mut self, n: usize, slack: f64, violated: bool) {
        if violated && self.first_violation.is_none() {
            self.first_violation = Some(n);
        }
        self.min_slack = self.min_slack.min(slack);
        self.max_slack = self.max_slack.max(slack);
    }

    fn finish(self) -> BoundReport {
        let (min_slack, max_slack) =
            if self.min_slack.is_finite() { (self.min_slack, self.max_slack) } else { (0.0, 0.0) };
        BoundReport {
            bound_name: self.name,
            n_lo: self.lo,
            n_hi: self.hi,
            verdict: match self.first_violation {
                None => BoundVerdict::Holds,
                Some(first_n) => BoundVerdict::Violated { first_n },
            },
            min_slack,
            max_slack,
        }
    }
}

fn is_negative(x: &BigFloat) -> bool {
    x.is_negative() && !x.is_zero()
}

fn check_p_table(table: &CountTable, n_max: usize) -> Result<()> {
    if table.kind() != crate::enumeration::CountKind::P {
        return Err(AbacusError::InvalidParameter(format!("expected a p table, got {}", table.kind())));
    }
    table.ensure_covers(n_max)
}

/// `ln p(n) ≤ c √n` for `1 ≤ n ≤ n_max`.
pub fn check_erdos_upper(table: &CountTable, n_max: usize) -> Result<BoundReport> {
    check_p_table(table, n_max)?;
    let mut hp = HighPrecision::default();
    let c = hp.hardy_ramanujan_c();
    let mut acc = SlackAccumulator::new("log p(n) <= c sqrt(n)", 1, n_max);
    for n in 1..=n_max {
        let rhs = hp.mul(&c, &hp.sqrt(&hp.uint(n as u64)));
        let lhs = hp.ln_int(table.get(n)?);
        let slack = hp.sub(&rhs, &lhs);
        acc.record(n, hp.to_f64(&slack), is_negative(&slack));
    }
    Ok(acc.finish())
}

/// `p(n) ≥ e^(2√n) / 14` for `1 ≤ n ≤ n_max`.
pub fn check_maroti_lower(table: &CountTable, n_max: usize) -> Result<BoundReport> {
    check_p_table(table, n_max)?;
    let mut hp = HighPrecision::default();
    let mut acc = SlackAccumulator::new("p(n) >= exp(2 sqrt(n)) / 14", 1, n_max);
    for n in 1..=n_max {
        let lhs = hp.ln_int(&(table.get(n)? * 14u32));
        let rhs = hp.mul(&hp.uint(2), &hp.sqrt(&hp.uint(n as u64)));
        let slack = hp.sub(&lhs, &rhs);
        acc.record(n, hp.to_f64(&slack), is_negative(&slack));
    }
    Ok(acc.finish())
}

/// `p(4m) ≥ p(m)²` for `4m ≤ n_max`, and `ln p(n) ≥ (ln 5 / 4) √n` for
/// `4 ≤ n ≤ n_max`.
pub fn check_combinatorial_lower(table: &CountTable, n_max: usize) -> Result<[BoundReport; 2]> {
    check_p_table(table, n_max)?;
    let mut hp = HighPrecision::default();

    let m_max = n_max / 4;
    let mut doubling = SlackAccumulator::new("p(4m) >= p(m)^2", 1, m_max);
    for m in 1..=m_max {
        let big = table.get(4 * m)?;
        let small = table.get(m)?;
        let square = small * small;
        let (ln_big, ln_square) = (hp.ln_int(big), hp.ln_int(&square));
        let slack = hp.sub(&ln_big, &ln_square);
        doubling.record(m, hp.to_f64(&slack), *big < square);
    }

    let ln5_4 = {
        let ln5 = hp.ln(&hp.uint(5));
        hp.div(&ln5, &hp.uint(4))
    };
    let mut root = SlackAccumulator::new("log p(n) >= (log 5 / 4) sqrt(n)", 4, n_max);
    for n in 4..=n_max {
        let rhs = hp.mul(&ln5_4, &hp.sqrt(&hp.uint(n as u64)));
        let lhs = hp.ln_int(table.get(n)?);
        let slack = hp.sub(&lhs, &rhs);
        root.record(n, hp.to_f64(&slack), is_negative(&slack));
    }
    Ok([doubling.finish(), root.finish()])
}

/// `ln p(n) ≤ A n^β` with `β = 1/2 + ε`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EpsilonBound {
    pub epsilon: f64,
    pub beta: f64,
    pub a: f64,
}

impl EpsilonBound {
    pub fn new(epsilon: f64, a: f64) -> Result<Self> {
        validate_epsilon(epsilon)?;
        Ok(Self { epsilon, beta: 0.5 + epsilon, a })
    }

    /// Checks `ln p(n) ≤ A n^β` on `1 ≤ n ≤ n_max`.
    pub fn certify(&self, table: &CountTable, n_max: usize) -> Result<BoundReport> {
        check_p_table(table, n_max)?;
        let mut hp = HighPrecision::default();
        let a = hp.float(self.a);
        let beta = hp.float(self.beta);
        let name = format!("log p(n) <= {} n^{}", self.a, self.beta);
        let mut acc = SlackAccumulator::new(name, 1, n_max);
        for n in 1..=n_max {
            let power = hp.powf(&hp.uint(n as u64), &beta);
            let rhs = hp.mul(&a, &power);
            let lhs = hp.ln_int(table.get(n)?);
            let slack = hp.sub(&rhs, &lhs);
            acc.record(n, hp.to_f64(&slack), is_negative(&slack));
        }
        Ok(acc.finish())
    }
}

fn validate_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon < 0.5 {
        Ok(())
    } else {
        Err(AbacusError::InvalidParameter(format!("epsilon must lie in (0, 1/2), got {epsilon}")))
    }
}

/// Search bracket and stopping width for [`fit_epsilon_constant`].
pub const EPSILON_FIT_BRACKET: (f64, f64) = (1.0, 1.0e6);
pub const EPSILON_FIT_RELATIVE_WIDTH: f64 = 1.0e-6;

/// Exponent offsets `⌊n/2 - s⌋^β + s^β - n^β` for each admissible `s`, per `n`.
///
/// With `f(x) = e^(A x^β)` the summation condition at `n` reads
/// `ln n + ln Σ_s e^(A · offset_s) ≤ 0`; every offset is negative, so the
/// left side decreases in `A`.
struct LemmaCondition {
    offsets: Vec<(f64, Vec<f64>)>,
}

impl LemmaCondition {
    fn new(beta: f64, n_max: usize) -> Self {
        let offsets = (1..=n_max)
            .map(|n| {
                let half = n / 2;
                let top = (n as f64).powf(beta);
                let diffs = (0..=half).map(|s| ((half - s) as f64).powf(beta) + (s as f64).powf(beta) - top).collect();
                ((n as f64).ln(), diffs)
            })
            .collect();
        Self { offsets }
    }

    fn holds(&self, a: f64) -> bool {
        self.offsets.iter().all(|(ln_n, diffs)| {
            // e^(A·d) ≤ e^(A·d_max); factor the largest out to avoid underflow.
            let peak = diffs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let sum: f64 = diffs.iter().map(|d| (a * (d - peak)).exp()).sum();
            ln_n + a * peak + sum.ln() <= 0.0
        })
    }
}

/// Does `f(x) = e^(A x^β)` satisfy
/// `Σ_{0 ≤ s ≤ n/2} f(⌊n/2 - s⌋) f(s) ≤ f(n) / n` for all `1 ≤ n ≤ n_max`?
pub fn lemma_condition_holds(a: f64, beta: f64, n_max: usize) -> bool {
    LemmaCondition::new(beta, n_max).holds(a)
}

/// A fitted constant and its check against the exact table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EpsilonFit {
    pub bound: EpsilonBound,
    pub certificate: BoundReport,
}

/// Bisects for the least `A` in [`EPSILON_FIT_BRACKET`] for which
/// `e^(A x^β)` satisfies the recursive summation condition up to `n_max`,
/// then checks `ln p(n) ≤ A n^β` against `table` on the same range.
pub fn fit_epsilon_constant(epsilon: f64, table: &CountTable, n_max: usize) -> Result<EpsilonFit> {
    let a = fit_epsilon_a(epsilon, n_max)?;
    let bound = EpsilonBound::new(epsilon, a)?;
    let certificate = bound.certify(table, n_max)?;
    Ok(EpsilonFit { bound, certificate })
}

/// The bisection half of [`fit_epsilon_constant`].
pub fn fit_epsilon_a(epsilon: f64, n_max: usize) -> Result<f64> {
    validate_epsilon(epsilon)?;
    if n_max == 0 {
        return Err(AbacusError::InvalidParameter("n_max must be at least 1".into()));
    }
    let condition = LemmaCondition::new(0.5 + epsilon, n_max);
    let (mut lo, mut hi) = EPSILON_FIT_BRACKET;
    if condition.holds(lo) {
        return Ok(lo);
    }
    if !condition.holds(hi) {
        return Err(AbacusError::NoConvergence(format!(
            "the summation condition fails at A = {hi} for epsilon = {epsilon}"
        )));
    }
    while (hi - lo) > EPSILON_FIT_RELATIVE_WIDTH * hi {
        let mid = 0.5 * (lo + hi);
        if condition.holds(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussianSum {
    pub terms: u64,
    pub sum: f64,
    pub limit: f64,
    pub ratio: f64,
}

/// `S_m = Σ_{r=0}^{⌊α m^(β+θ)⌋} e^(-γ r² / m^(2β))` against its limit
/// `sqrt(π / 4γ) m^β`.
pub fn gaussian_sum_check(alpha: f64, beta: f64, gamma: f64, theta: f64, m: u64) -> Result<GaussianSum> {
    for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma), ("theta", theta)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(AbacusError::InvalidParameter(format!("{name} must be positive, got {v}")));
        }
    }
    if m == 0 {
        return Err(AbacusError::InvalidParameter("m must be at least 1".into()));
    }
    let mf = m as f64;
    let upper = (alpha * mf.powf(beta + theta)).floor() as u64;
    let scale = mf.powf(2.0 * beta);
    let sum: f64 = (0..=upper).map(|r| (-gamma * (r as f64).powi(2) / scale).exp()).sum();
    let limit = (std::f64::consts::PI / (4.0 * gamma)).sqrt() * mf.powf(beta);
    Ok(GaussianSum { terms: upper + 1, sum, limit, ratio: sum / limit })
}

/// The two parameterizations used for pair counts and for p(32m):
/// `(α, β, γ, θ) = (1, 3/4, c/4, 1/4)` and `(1, 1/4, c/√2, 1/4)`.
pub fn gaussian_parameterizations() -> [(f64, f64, f64, f64); 2] {
    let c = c();
    [(1.0, 0.75, c / 4.0, 0.25), (1.0, 0.25, c / std::f64::consts::SQRT_2, 0.25)]
}

/// Exact p, s and q tables on a common range.
#[derive(Debug, Clone)]
pub struct ExactTables {
    pub p: CountTable,
    pub s: CountTable,
    pub q: CountTable,
}

impl ExactTables {
    pub fn build(n_max: usize) -> Self {
        Self::from_p(p_table(n_max))
    }

    pub fn from_p(p: CountTable) -> Self {
        let n_max = p.max_n();
        let s = s_table(&p, n_max).expect("p covers n_max / 4");
        let q = q_table(&p, n_max).expect("p covers n_max / 2");
        Self { p, s, q }
    }

    pub fn max_n(&self) -> usize {
        self.p.max_n()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactValue {
    Integer(BigUint),
    Ratio(BigUint, BigUint),
}

impl ExactValue {
    fn ln(&self) -> f64 {
        match self {
            ExactValue::Integer(v) => ln_f64(v),
            ExactValue::Ratio(a, b) => ln_f64(a) - ln_f64(b),
        }
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Integer(v) => write!(f, "{v}"),
            ExactValue::Ratio(a, b) => write!(f, "{a}/{b}"),
        }
    }
}

impl Serialize for ExactValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioRow {
    pub n: usize,
    pub exact: ExactValue,
    pub estimate: f64,
    pub ratio: f64,
}

/// Exact value, formula value and their ratio at each sample point.
pub fn ratio_table(kind: EstimateKind, points: &[usize], tables: &ExactTables) -> Result<Vec<RatioRow>> {
    points
        .iter()
        .map(|&n| {
            if n == 0 {
                return Err(AbacusError::InvalidParameter("sample points must be at least 1".into()));
            }
            tables.p.ensure_covers(n)?;
            let exact = match kind {
                EstimateKind::P => ExactValue::Integer(tables.p.get(n)?.clone()),
                EstimateKind::T => ExactValue::Integer(t_value(&tables.p, n)?),
                EstimateKind::S => ExactValue::Integer(tables.s.get(n)?.clone()),
                EstimateKind::Q => ExactValue::Integer(tables.q.get(n)?.clone()),
                EstimateKind::SOverP => ExactValue::Ratio(tables.s.get(n)?.clone(), tables.p.get(n)?.clone()),
                EstimateKind::QOverP => ExactValue::Ratio(tables.q.get(n)?.clone(), tables.p.get(n)?.clone()),
            };
            let ln_est = kind.ln_estimate(n as f64);
            Ok(RatioRow { n, estimate: ln_est.exp(), ratio: (exact.ln() - ln_est).exp(), exact })
        })
        .collect()
}

/// True when `|ratio - 1|` strictly decreases along the rows.
pub fn approaches_one(rows: &[RatioRow]) -> bool {
    rows.windows(2).all(|w| (w[1].ratio - 1.0).abs() < (w[0].ratio - 1.0).abs())
}

/// `x` rounded to `digits` significant figures, in plain or scientific form.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-4..10).contains(&exponent) {
        let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{:.*e}", digits - 1, x)
    }
}

/// CSV with columns `n,exact,estimate,ratio`.
pub fn ratio_table_csv(rows: &[RatioRow]) -> String {
    let mut out = String::from("n,exact,estimate,ratio\n");
    for row in rows {
        out.push_str(&format!("{},{},{:.9e},{}\n", row.n, row.exact, row.estimate, format_significant(row.ratio, 10)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        let k = AsymptoticConstants::standard();
        assert!((k.c - 2.56510).abs() < 1e-5);
        assert!((k.b - 6.92820).abs() < 1e-5);
        assert!((k.c * k.c - 2.0 * std::f64::consts::PI.powi(2) / 3.0).abs() < 1e-14);
        assert!((k.b * k.b - 48.0).abs() < 1e-12);
    }

    #[test]
    fn estimate_values() {
        let expected = c().exp() / (4.0 * 3f64.sqrt());
        assert!((hr_estimate(1.0) - expected).abs() < 1e-12);
        assert!((hr_estimate(1.0) - 1.876).abs() < 1e-3);
        assert!((t_prefactor() - 4.0 * 3f64.powf(0.25) / 48.0).abs() < 1e-15);
        let n: f64 = 40.0;
        let direct_t = (c() * (2.0 * n).sqrt()).exp() / n.powf(1.25) * t_prefactor();
        assert!((t_estimate(n) / direct_t - 1.0).abs() < 1e-12);
        let direct_s = (c() / 2.0 * n.sqrt()).exp() / (2f64.powf(1.75) * 3f64.powf(0.25) * n.powf(0.75));
        assert!((s_estimate(n) / direct_s - 1.0).abs() < 1e-12);
        let direct_q = (c() / 2f64.sqrt() * n.sqrt()).exp() / (4.0 * 3f64.powf(0.25) * n.powf(0.75));
        assert!((q_estimate(n) / direct_q - 1.0).abs() < 1e-12);
    }

    #[test]
    fn proportions_are_quotients_of_estimates() {
        for n in [10.0, 100.0, 1000.0] {
            let sp = EstimateKind::SOverP.estimate(n);
            let qp = EstimateKind::QOverP.estimate(n);
            assert!((sp / (s_estimate(n) / hr_estimate(n)) - 1.0).abs() < 1e-12);
            assert!((qp / (q_estimate(n) / hr_estimate(n)) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn p32_formula_matches_general_one() {
        for m in [1.0, 10.0, 100.0] {
            assert!((p32_estimate(m) / hr_estimate(32.0 * m) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn small_bound_cases() {
        let table = p_table(16);
        let erdos = check_erdos_upper(&table, 1).unwrap();
        assert!(erdos.holds());
        assert!((erdos.min_slack - c()).abs() < 1e-12);
        let maroti = check_maroti_lower(&table, 4).unwrap();
        assert!(maroti.holds());
        let [doubling, root] = check_combinatorial_lower(&table, 16).unwrap();
        assert!(doubling.holds() && root.holds());
        assert_eq!((doubling.n_lo, doubling.n_hi), (1, 4));
        // m = 4: ln 231 - 2 ln 5.
        assert!((doubling.max_slack - (231f64.ln() - 2.0 * 5f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn violated_bound_reports_first_index() {
        let fake =
            CountTable::new(crate::enumeration::CountKind::P, [1u32, 1, 2, 3, 5, 6, 11].map(BigUint::from).to_vec());
        let r = check_maroti_lower(&fake, 6).unwrap();
        // e^(2√5)/14 ≈ 6.26 > 6.
        assert_eq!(r.verdict, BoundVerdict::Violated { first_n: 5 });
        assert!(r.min_slack < 0.0);
        assert!(r.to_string().starts_with("VIOLATED"));
    }

    #[test]
    fn table_must_cover_range() {
        let table = p_table(10);
        assert_eq!(check_erdos_upper(&table, 11), Err(AbacusError::IndexOutOfRange { n: 11, max: 10 }));
        let q = q_table(&table, 10).unwrap();
        assert!(matches!(check_erdos_upper(&q, 5), Err(AbacusError::InvalidParameter(_))));
    }

    #[test]
    fn epsilon_validation() {
        assert!(matches!(fit_epsilon_a(0.6, 10), Err(AbacusError::InvalidParameter(_))));
        assert!(matches!(fit_epsilon_a(0.0, 10), Err(AbacusError::InvalidParameter(_))));
        assert!(EpsilonBound::new(0.5, 1.0).is_err());
    }

    #[test]
    fn lemma_condition_small_n() {
        // n = 2 requires A (2^β - 1) ≥ ln 4.
        let beta = 0.75;
        let threshold = 4f64.ln() / (2f64.powf(beta) - 1.0);
        assert!(!lemma_condition_holds(threshold * 0.999, beta, 2));
        assert!(lemma_condition_holds(threshold * 1.001, beta, 2));
        let a = fit_epsilon_a(0.25, 2).unwrap();
        assert!((a / threshold - 1.0).abs() < 2e-6);
    }

    #[test]
    fn epsilon_bracket_failure() {
        // For tiny epsilon the condition needs A far above the bracket.
        assert!(matches!(fit_epsilon_a(1e-9, 50), Err(AbacusError::NoConvergence(_))));
    }

    #[test]
    fn gaussian_sum_degenerate_gamma() {
        // With m^(2β) = 100 every term past r = 0 is below e^-10.
        let g = gaussian_sum_check(1.0, 0.25, 1.0e3, 0.25, 10_000).unwrap();
        assert!((g.sum - 1.0).abs() < 1e-4);
        assert_eq!(g.terms, 101);
        let limit = (std::f64::consts::PI / 4.0e3).sqrt() * 1e4f64.powf(0.25);
        assert!((g.limit - limit).abs() < 1e-9);
        assert!(gaussian_sum_check(0.0, 1.0, 1.0, 1.0, 10).is_err());
        assert!(gaussian_sum_check(1.0, 1.0, 1.0, 1.0, 0).is_err());
    }

    #[test]
    fn ratio_rows_and_csv() {
        let tables = ExactTables::build(200);
        let rows = ratio_table(EstimateKind::P, &[100, 200], &tables).unwrap();
        assert_eq!(rows[0].exact.to_string(), "190569292");
        assert!((rows[0].ratio - tolerances::REFERENCE_P[0]).abs() < 1e-9);
        let csv = ratio_table_csv(&rows);
        assert!(csv.starts_with("n,exact,estimate,ratio\n100,190569292,"));
        assert!(matches!(
            ratio_table(EstimateKind::Q, &[201], &tables),
            Err(AbacusError::IndexOutOfRange { n: 201, max: 200 })
        ));
        let sp = ratio_table(EstimateKind::SOverP, &[100], &tables).unwrap();
        assert!(sp[0].exact.to_string().ends_with("/190569292"));
    }

    #[test]
    fn significant_figures() {
        assert_eq!(format_significant(0.993743668588, 10), "0.9937436686");
        assert_eq!(format_significant(1.00387629451, 10), "1.003876295");
        assert_eq!(format_significant(1.5e20, 3), "1.50e20");
    }

    #[test]
    fn kind_names_roundtrip() {
        for kind in EstimateKind::ALL {
            assert_eq!(kind.to_string().parse::<EstimateKind>().unwrap(), kind);
        }
        assert!("z".parse::<EstimateKind>().is_err());
    }
}
