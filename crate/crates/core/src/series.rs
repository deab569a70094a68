//! Truncated power series over exact integers and the generating-function
//! identities that follow from the core/quotient bijection.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{AbacusError, Result};

/// `c0 + c1 x + ... + cN x^N`, with arithmetic carried out modulo `x^(N+1)`.
///
/// Binary operations on series of different orders truncate to the smaller order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Pads with zeros or truncates `coeffs` to exactly `order + 1` terms.
    pub fn from_coeffs<T: Into<BigInt>>(order: usize, coeffs: impl IntoIterator<Item = T>) -> Self {
        let mut c: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        c.resize(order + 1, BigInt::zero());
        Self { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn set_coeff(&mut self, i: usize, value: BigInt) {
        self.coeffs[i] = value;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    /// Multiplies in place by `1 + sign * x^k`.
    pub fn mul_binomial(&mut self, k: usize, negative: bool) {
        assert!(k > 0, "binomial factor needs a positive exponent");
        for i in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if negative {
                hi[0] -= &lo[i - k];
            } else {
                hi[0] += &lo[i - k];
            }
        }
    }

    /// Multiplies in place by `1 / (1 - x^k)`.
    pub fn div_one_minus(&mut self, k: usize) {
        assert!(k > 0, "geometric factor needs a positive exponent");
        for i in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            hi[0] += &lo[i - k];
        }
    }

    /// `s(x^k)`, truncated to the same order.
    pub fn substitute(&self, k: usize) -> Self {
        assert!(k > 0, "substitution needs a positive exponent");
        let order = self.order();
        let mut out = Self::zero(order);
        for (j, c) in self.coeffs.iter().enumerate().take(order / k + 1) {
            out.coeffs[j * k] = c.clone();
        }
        out
    }

    /// Multiplicative inverse; the constant term must be ±1.
    pub fn invert(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(AbacusError::NotInvertible(c0.to_string()));
        }
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = c0.clone();
        // Σ_{j=0}^{n} s_j b_{n-j} = 0 for n ≥ 1, and 1/c0 = c0 for c0 = ±1.
        for n in 1..=order {
            let acc: BigInt = (1..=n).map(|j| &self.coeffs[j] * &inv.coeffs[n - j]).sum();
            inv.coeffs[n] = -(acc * c0);
        }
        Ok(inv)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Coefficients as decimal strings, as a JSON array.
    pub fn to_json(&self) -> String {
        let strings: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        serde_json::to_string(&strings).expect("string arrays always serialize")
    }
}

impl fmt::Display for TruncatedSeries {
    /// Every term is printed, zeros included: `1 + 1*x + 2*x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        TruncatedSeries { coeffs }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        TruncatedSeries { coeffs }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

/// `P(x) = Π 1/(1 - x^n)`, the partition generating function.
pub fn euler_product(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for n in 1..=order {
        s.div_one_minus(n);
    }
    s
}

/// `Σ_m x^(m(m+1)/2)`.
pub fn theta_series(order: usize) -> TruncatedSeries {
    theta_series_dilated(order, 1)
}

/// `Σ_r x^(r(r+1)/2 · scale)`.
fn theta_series_dilated(order: usize, scale: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    let mut r = 0;
    while r * (r + 1) / 2 * scale <= order {
        s.coeffs[r * (r + 1) / 2 * scale] = BigInt::one();
        r += 1;
    }
    s
}

/// `Q(x) = Π (1 + x^n)`, the generating function for distinct parts.
pub fn distinct_parts_product(order: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(order);
    for n in 1..=order {
        s.mul_binomial(n, false);
    }
    s
}

/// Outcome of an exact coefficient comparison up to `order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    Mismatch {
        index: usize,
        #[serde(serialize_with = "serialize_decimal")]
        lhs: BigInt,
        #[serde(serialize_with = "serialize_decimal")]
        rhs: BigInt,
    },
}

fn serialize_decimal<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }

    pub fn mismatch_index(&self) -> Option<usize> {
        match self {
            Verdict::Equal => None,
            Verdict::Mismatch { index, .. } => Some(*index),
        }
    }
}

/// Compares coefficients `0..=min(order)`; reports the first difference.
pub fn compare(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Verdict {
    lhs.coeffs
        .iter()
        .zip(&rhs.coeffs)
        .enumerate()
        .find(|(_, (a, b))| a != b)
        .map_or(Verdict::Equal, |(index, (a, b))| Verdict::Mismatch { index, lhs: a.clone(), rhs: b.clone() })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: &'static str,
    pub order: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl IdentityReport {
    fn new(identity: &'static str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Self {
        Self { identity, order: lhs.order().min(rhs.order()), verdict: compare(lhs, rhs) }
    }

    pub fn is_equal(&self) -> bool {
        self.verdict.is_equal()
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.verdict {
            Verdict::Equal => write!(f, "OK: identical to x^{}", self.order),
            Verdict::Mismatch { index, lhs, rhs } => {
                write!(f, "MISMATCH at x^{index}: lhs = {lhs}, rhs = {rhs}")
            }
        }
    }
}

/// `Π(1 - x^(2k)) / Π(1 - x^(2k-1))` and `θ(x)`.
pub fn gauss_sides(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let mut even = TruncatedSeries::one(order);
    let mut odd = TruncatedSeries::one(order);
    for k in 1..=order {
        if k % 2 == 0 {
            even.mul_binomial(k, true);
        } else {
            odd.mul_binomial(k, true);
        }
    }
    let lhs = &even * &odd.invert().expect("constant term is 1");
    (lhs, theta_series(order))
}

pub fn verify_gauss(order: usize) -> IdentityReport {
    let (lhs, rhs) = gauss_sides(order);
    IdentityReport::new("gauss", &lhs, &rhs)
}

/// `P(x)` and `P(x^2)^2 θ(x)`.
pub fn quotient_identity_sides(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let p = euler_product(order);
    let p2 = p.substitute(2);
    let rhs = &(&p2 * &p2) * &theta_series(order);
    (p, rhs)
}

pub fn verify_quotient_identity(order: usize) -> IdentityReport {
    let (lhs, rhs) = quotient_identity_sides(order);
    IdentityReport::new("quotient", &lhs, &rhs)
}

/// `Π_{m=0}^{levels-1} (Σ_r x^(r(r+1)/2 · 2^m))^(2^m)`.
pub fn tree_product(order: usize, levels: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for m in 0..levels {
        let Some(scale) = 1usize.checked_shl(m as u32).filter(|&s| s <= order) else {
            // x^(2^m) vanishes mod x^(order+1), so the factor is 1.
            continue;
        };
        let factor = theta_series_dilated(order, scale).pow(scale as u32);
        acc = &acc * &factor;
    }
    acc
}

/// Number of factors in the tree product that are not 1 mod `x^(order+1)`.
pub fn tree_product_levels(order: usize) -> usize {
    if order == 0 {
        1
    } else {
        order.ilog2() as usize + 1
    }
}

pub fn tree_product_sides(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    (euler_product(order), tree_product(order, tree_product_levels(order)))
}

pub fn verify_tree_product(order: usize) -> IdentityReport {
    let (lhs, rhs) = tree_product_sides(order);
    IdentityReport::new("tree-product", &lhs, &rhs)
}

/// `Q(x)` against `P(x) / P(x^2)`.
pub fn q_ratio_sides(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let p = euler_product(order);
    let rhs = &p * &p.substitute(2).invert().expect("constant term is 1");
    (distinct_parts_product(order), rhs)
}

/// `Q(x)` against `P(x^2) θ(x)`.
pub fn q_theta_sides(order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let rhs = &euler_product(order).substitute(2) * &theta_series(order);
    (distinct_parts_product(order), rhs)
}

pub fn verify_q_identities(order: usize) -> Vec<IdentityReport> {
    let (a, b) = q_ratio_sides(order);
    let (c, d) = q_theta_sides(order);
    vec![IdentityReport::new("q-ratio", &a, &b), IdentityReport::new("q-theta", &c, &d)]
}
