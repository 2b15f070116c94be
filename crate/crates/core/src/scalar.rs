//! Coefficient domains.
//!
//! Everything in the crate is generic over [`Scalar`], which has two
//! implementations: `f64` for float mode and [`Rational`] (arbitrary
//! precision) for exact mode. The only operation that can fail in one domain
//! and not the other is the square root: in exact mode it succeeds only on
//! perfect rational squares.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};

/// Exact arbitrary-precision rational.
pub type Rational = num::BigRational;

/// Default tolerance for float-mode tangency verdicts.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Relative threshold below which float coefficients are treated as zero.
pub const FLOAT_ZERO_RELATIVE: f64 = 1e-14;

pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// `true` for the rational domain.
    const EXACT: bool;

    fn from_i64(n: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// Converts a double. The rational domain parses the shortest decimal
    /// representation, so `0.1` becomes `1/10` rather than its binary value.
    fn from_f64(x: f64) -> Option<Self>;

    fn to_f64(&self) -> f64;

    /// Principal square root. `None` for negative input, and in the exact
    /// domain also for values that are not perfect rational squares.
    fn sqrt(&self) -> Option<Self>;

    fn abs(&self) -> Self;

    /// `true` if `self` should be treated as zero relative to `scale`.
    /// Exact zero test in the rational domain.
    fn negligible(&self, scale: &Self) -> bool;

    /// `p/q` text for exact values, `None` for floats.
    fn rational_repr(&self) -> Option<String>;

    /// Parses `p/q`, an integer, or a decimal.
    fn parse_scalar(s: &str) -> Option<Self>;

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }

    fn max_of(a: Self, b: Self) -> Self {
        if b > a {
            b
        } else {
            a
        }
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_f64(x: f64) -> Option<Self> {
        x.is_finite().then_some(x)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| f64::sqrt(*self))
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn negligible(&self, scale: &Self) -> bool {
        f64::abs(*self) <= FLOAT_ZERO_RELATIVE * f64::abs(*scale)
    }

    fn rational_repr(&self) -> Option<String> {
        None
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: f64 = p.trim().parse().ok()?;
                let q: f64 = q.trim().parse().ok()?;
                (q != 0.0).then(|| p / q)
            }
            None => s.parse().ok().filter(|x: &f64| x.is_finite()),
        }
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        parse_decimal(&format!("{x}")).or_else(|| Rational::from_float(x))
    }

    fn to_f64(&self) -> f64 {
        // Ratio<BigInt>::to_f64 is correctly rounded.
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_isqrt(self.numer())?;
        let d = exact_isqrt(self.denom())?;
        Some(Rational::new(n, d))
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn negligible(&self, _scale: &Self) -> bool {
        self.is_zero()
    }

    fn rational_repr(&self) -> Option<String> {
        Some(if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        })
    }

    fn parse_scalar(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).ok()?;
                let q = BigInt::from_str(q.trim()).ok()?;
                (!q.is_zero()).then(|| Rational::new(p, q))
            }
            None => parse_decimal(s),
        }
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Parses `[-]digits[.digits][e[+-]digits]` into an exact rational.
fn parse_decimal(s: &str) -> Option<Rational> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((a, b)) => (a, b),
        None => (mantissa, ""),
    };
    if frac_part.chars().any(|c| !c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return None;
    }
    let numer = BigInt::from_str(&digits).ok()?;
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Rational::from_integer(numer * num::pow(ten, scale as usize))
    } else {
        Rational::new(numer, num::pow(ten, (-scale) as usize))
    };
    Some(value)
}

/// Division with the convention `x / 0 = 0`.
pub fn dbz_div<S: Scalar>(num: &S, den: &S) -> S {
    if den.is_zero() {
        S::zero()
    } else {
        num.clone() / den.clone()
    }
}

/// Reciprocal with the convention `1/0 = 0`. Total.
pub fn dbz_inv<S: Scalar>(x: &S) -> S {
    dbz_div(&S::one(), x)
}

/// Rounds to 15 significant digits for stable JSON and SVG output.
pub fn round_sig15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

#[cfg(test)]
pub(crate) fn rat(num: i64, den: i64) -> Rational {
    Rational::from_ratio(num, den)
}
