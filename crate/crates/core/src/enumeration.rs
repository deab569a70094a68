//! Exact partition counts.
//!
//! `p(n)` is computed from the core/quotient bijection: every partition of
//! `n` is a staircase of size `r(r+1)/2` plus an ordered pair of partitions of
//! total size `(n - r(r+1)/2) / 2`, so
//! `p(n) = Σ_r t((n - r(r+1)/2) / 2)` with `t = p * p`. The brute-force
//! generators here are the independent oracles for those tables.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AbacusError, Result};
use crate::partition::Partition;

/// Largest `n` accepted by [`partitions_of`]; p(60) is already 966467.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 60;

/// Largest `n` accepted by the brute-force counters.
pub const BRUTE_COUNT_LIMIT: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CountKind {
    /// All partitions.
    P,
    /// Ordered pairs of partitions with total size n.
    T,
    /// Self-conjugate partitions.
    S,
    /// Partitions with distinct parts.
    Q,
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CountKind::P => "p",
            CountKind::T => "t",
            CountKind::S => "s",
            CountKind::Q => "q",
        };
        f.write_str(s)
    }
}

impl FromStr for CountKind {
    type Err = AbacusError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p" => Ok(CountKind::P),
            "t" => Ok(CountKind::T),
            "s" => Ok(CountKind::S),
            "q" => Ok(CountKind::Q),
            other => Err(AbacusError::MalformedInput(format!("unknown count kind {other:?}"))),
        }
    }
}

/// Exact values of one counting function on `0..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    kind: CountKind,
    values: Vec<BigUint>,
}

impl CountTable {
    pub fn new(kind: CountKind, values: Vec<BigUint>) -> Self {
        Self { kind, values }
    }

    pub fn kind(&self) -> CountKind {
        self.kind
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn max_n(&self) -> usize {
        self.values.len().saturating_sub(1)
    }

    pub fn get(&self, n: usize) -> Result<&BigUint> {
        self.values.get(n).ok_or(AbacusError::IndexOutOfRange { n, max: self.max_n() })
    }

    pub fn ensure_covers(&self, n: usize) -> Result<()> {
        self.get(n).map(|_| ())
    }

    /// `n,value` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{v}\n"));
        }
        out
    }

    /// A JSON array of decimal strings.
    pub fn to_json(&self) -> String {
        let strings: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        serde_json::to_string(&strings).expect("string arrays always serialize")
    }
}

fn collect_partitions(n: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::from_parts_unchecked(prefix.clone()));
        return;
    }
    for first in 1..=n.min(max_part) {
        prefix.push(first);
        collect_partitions(n - first, first, prefix, out);
        prefix.pop();
    }
}

/// All partitions of `n` in increasing lexicographic order.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    partitions_of_with_limit(n, DEFAULT_ENUMERATION_LIMIT)
}

pub fn partitions_of_with_limit(n: usize, limit: usize) -> Result<Vec<Partition>> {
    if n > limit {
        return Err(AbacusError::LimitExceeded { n, limit });
    }
    let mut out = Vec::new();
    collect_partitions(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

fn brute_count(n: usize, keep: impl Fn(&Partition) -> bool) -> Result<u64> {
    if n > BRUTE_COUNT_LIMIT {
        return Err(AbacusError::LimitExceeded { n, limit: BRUTE_COUNT_LIMIT });
    }
    Ok(partitions_of(n)?.iter().filter(|lam| keep(lam)).count() as u64)
}

pub fn count_self_conjugate_brute(n: usize) -> Result<u64> {
    brute_count(n, Partition::is_self_conjugate)
}

pub fn count_distinct_parts_brute(n: usize) -> Result<u64> {
    brute_count(n, Partition::has_distinct_parts)
}

fn triangular(r: usize) -> usize {
    r * (r + 1) / 2
}

/// `(r, (n - r(r+1)/2) / divisor)` for every `r ≥ 0` where the division is exact.
pub fn staircase_terms(n: usize, divisor: usize) -> Vec<(usize, usize)> {
    (0..)
        .map(|r| (r, triangular(r)))
        .take_while(|&(_, tri)| tri <= n)
        .filter(|&(_, tri)| (n - tri).is_multiple_of(divisor))
        .map(|(r, tri)| (r, (n - tri) / divisor))
        .collect()
}

fn convolve_at(p: &[BigUint], n: usize) -> BigUint {
    (0..=n).map(|m| &p[m] * &p[n - m]).sum()
}

/// p(0..=n_max) together with t(0..=n_max/2), built bottom-up.
fn joint_tables(n_max: usize) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut p: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    let mut t: Vec<BigUint> = Vec::with_capacity(n_max / 2 + 1);
    p.push(BigUint::one());
    for n in 1..=n_max {
        // t(k) only needs p(0..=k) and k ≤ n/2 < n.
        while t.len() <= n / 2 {
            let k = t.len();
            t.push(convolve_at(&p, k));
        }
        let value = staircase_terms(n, 2).into_iter().map(|(_, k)| &t[k]).sum();
        p.push(value);
    }
    if t.is_empty() {
        t.push(BigUint::one());
    }
    (p, t)
}

/// p(0..=n_max) via the bijection recurrence.
pub fn p_table(n_max: usize) -> CountTable {
    CountTable::new(CountKind::P, joint_tables(n_max).0)
}

/// t(0..=n_max), where t(n) = Σ p(m) p(n - m).
pub fn t_table(n_max: usize) -> CountTable {
    let (p, mut t) = joint_tables(n_max);
    t.truncate(n_max + 1);
    for n in t.len()..=n_max {
        t.push(convolve_at(&p, n));
    }
    CountTable::new(CountKind::T, t)
}

/// A single t(n) from a p table covering `0..=n`.
pub fn t_value(p: &CountTable, n: usize) -> Result<BigUint> {
    p.ensure_covers(n)?;
    Ok(convolve_at(p.values(), n))
}

/// The summands of p(n) in the bijection recurrence, as `(r, k)` pairs with
/// p(n) = Σ t(k).
pub fn bijection_decomposition(n: usize) -> Vec<(usize, usize)> {
    staircase_terms(n, 2)
}

fn staircase_sum(p: &CountTable, n_max: usize, divisor: usize, kind: CountKind) -> Result<CountTable> {
    p.ensure_covers(n_max / divisor)?;
    let values = (0..=n_max)
        .map(|n| staircase_terms(n, divisor).into_iter().fold(BigUint::zero(), |acc, (_, k)| acc + &p.values()[k]))
        .collect();
    Ok(CountTable::new(kind, values))
}

/// s(n) = Σ_r p((n - r(r+1)/2) / 4); needs `p` up to `n_max / 4`.
pub fn s_table(p: &CountTable, n_max: usize) -> Result<CountTable> {
    staircase_sum(p, n_max, 4, CountKind::S)
}

/// q(n) = Σ_r p((n - r(r+1)/2) / 2); needs `p` up to `n_max / 2`.
pub fn q_table(p: &CountTable, n_max: usize) -> Result<CountTable> {
    staircase_sum(p, n_max, 2, CountKind::Q)
}

/// Builds the requested table, computing p as needed.
pub fn table(kind: CountKind, n_max: usize) -> CountTable {
    match kind {
        CountKind::P => p_table(n_max),
        CountKind::T => t_table(n_max),
        CountKind::S => s_table(&p_table(n_max / 4), n_max).expect("p covers n_max / 4"),
        CountKind::Q => q_table(&p_table(n_max / 2), n_max).expect("p covers n_max / 2"),
    }
}
