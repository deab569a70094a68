//! Multi-precision real arithmetic for comparisons close to a bound.
//!
//! A thin wrapper over `astro-float` that carries the precision, rounding
//! mode and constant cache so call sites stay short.

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigUint;

/// 256 bits, about 77 significant decimal digits.
pub const DEFAULT_PRECISION_BITS: usize = 256;

pub struct HighPrecision {
    bits: usize,
    rm: RoundingMode,
    consts: Consts,
}

impl HighPrecision {
    pub fn new(bits: usize) -> Self {
        Self { bits, rm: RoundingMode::ToEven, consts: Consts::new().expect("constant cache allocation") }
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn decimal_digits(&self) -> usize {
        (self.bits as f64 * std::f64::consts::LOG10_2).floor() as usize
    }

    pub fn int(&mut self, v: &BigUint) -> BigFloat {
        BigFloat::parse(&v.to_string(), Radix::Dec, self.bits, self.rm, &mut self.consts)
    }

    pub fn uint(&self, v: u64) -> BigFloat {
        BigFloat::from_u64(v, self.bits)
    }

    /// Exact conversion: every finite f64 is a dyadic rational.
    pub fn float(&self, v: f64) -> BigFloat {
        BigFloat::from_f64(v, self.bits)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.consts.pi(self.bits, self.rm)
    }

    pub fn ln(&mut self, x: &BigFloat) -> BigFloat {
        x.ln(self.bits, self.rm, &mut self.consts)
    }

    pub fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.bits, self.rm, &mut self.consts)
    }

    pub fn sqrt(&self, x: &BigFloat) -> BigFloat {
        x.sqrt(self.bits, self.rm)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, self.rm)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.bits, self.rm)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, self.rm)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, self.rm)
    }

    /// `x^y = exp(y ln x)` for `x > 0`.
    pub fn powf(&mut self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        let l = self.ln(x);
        let e = self.mul(&l, y);
        self.exp(&e)
    }

    pub fn ln_int(&mut self, v: &BigUint) -> BigFloat {
        let x = self.int(v);
        self.ln(&x)
    }

    /// `c = 2 sqrt(π²/6) = π sqrt(2/3)`.
    pub fn hardy_ramanujan_c(&mut self) -> BigFloat {
        let pi = self.pi();
        let two_thirds = self.div(&self.uint(2), &self.uint(3));
        self.mul(&pi, &self.sqrt(&two_thirds))
    }

    pub fn to_f64(&mut self, x: &BigFloat) -> f64 {
        if x.is_zero() {
            return 0.0;
        }
        x.format(Radix::Dec, self.rm, &mut self.consts).ok().and_then(|s| s.parse().ok()).unwrap_or(f64::NAN)
    }

    pub fn to_decimal(&mut self, x: &BigFloat) -> String {
        x.format(Radix::Dec, self.rm, &mut self.consts).unwrap_or_else(|_| "NaN".into())
    }
}

impl Default for HighPrecision {
    fn default() -> Self {
        Self::new(DEFAULT_PRECISION_BITS)
    }
}

/// `ln v` in double precision without overflowing for huge `v`.
pub fn ln_f64(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return big_to_f64(v).ln();
    }
    let shift = bits - 64;
    let top = big_to_f64(&(v >> shift));
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

fn big_to_f64(v: &BigUint) -> f64 {
    num_traits::ToPrimitive::to_f64(v).unwrap_or(f64::INFINITY)
}
