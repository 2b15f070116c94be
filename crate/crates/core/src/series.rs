//! Truncated Laurent series and the division by zero calculus.
//!
//! A [`LaurentSeries`] stores `C_n` for `n_min ≤ n ≤ n_max` around a center
//! `a`, in powers of `w = z − a`. A series is either an exact Laurent
//! polynomial (every coefficient outside the table is zero) or truncated at
//! an order `N`, meaning the coefficients above `w^N` are unknown.
//!
//! The value of a function at its isolated singular point is its constant
//! coefficient: [`LaurentSeries::dbz_eval`] returns `C_0`, and
//! [`LaurentSeries::dbz_derivative`] returns `k!·C_k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Truncation order used when the caller does not pick one.
pub const DEFAULT_ORDER: usize = 8;

/// Float series report a warning when a coefficient is computed with a
/// condition number above this.
pub const CANCELLATION_WARN: f64 = 1e12;

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<S> {
    center: S,
    n_min: i32,
    coeffs: Vec<S>,
    order: Option<i32>,
    condition: f64,
}

/// One `{"n": .., "c": ..}` entry of the JSON fixture format.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub n: i32,
    pub c: f64,
}

fn min_order(a: Option<i32>, b: Option<i32>) -> Option<i32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl<S: Scalar> LaurentSeries<S> {
    /// Exact Laurent polynomial `Σ coeffs[i]·w^(n_min + i)` around `center`.
    pub fn new(center: S, n_min: i32, coeffs: Vec<S>) -> Self {
        Self::build(center, n_min, coeffs, None, 1.0)
    }

    /// Series known only through `w^order`.
    pub fn truncated(center: S, n_min: i32, coeffs: Vec<S>, order: i32) -> Self {
        Self::build(center, n_min, coeffs, Some(order), 1.0)
    }

    pub fn constant(center: S, c: S) -> Self {
        Self::new(center, 0, vec![c])
    }

    /// `w^n` (exactly).
    pub fn monomial(center: S, n: i32, c: S) -> Self {
        Self::new(center, n, vec![c])
    }

    pub fn zero(center: S) -> Self {
        Self::new(center, 0, Vec::new())
    }

    fn build(center: S, n_min: i32, coeffs: Vec<S>, order: Option<i32>, condition: f64) -> Self {
        let mut s = LaurentSeries { center, n_min, coeffs, order, condition };
        s.trim();
        if !S::EXACT && s.condition > CANCELLATION_WARN {
            log::warn!("Laurent coefficient computed with condition {:e}; C_0 may be unreliable", s.condition);
        }
        s
    }

    /// Drops coefficients past the order and zero coefficients at both ends.
    fn trim(&mut self) {
        if let Some(order) = self.order {
            let keep = (order - self.n_min + 1).max(0) as usize;
            self.coeffs.truncate(keep);
        }
        let scale = self.coeffs.iter().map(Scalar::abs).fold(S::zero(), S::max_of);
        let is_zero = |c: &S| c.is_zero() || c.negligible(&scale);
        while self.coeffs.last().is_some_and(is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| is_zero(c)).count();
        self.coeffs.drain(..lead);
        self.n_min += lead as i32;
        if self.coeffs.is_empty() {
            self.n_min = self.order.map_or(0, |o| o.min(0));
            self.coeffs.push(S::zero());
        }
    }

    pub fn center(&self) -> &S {
        &self.center
    }

    /// Lowest stored exponent. For a nonzero series `C_{n_min} ≠ 0`.
    pub fn n_min(&self) -> i32 {
        self.n_min
    }

    /// Highest stored exponent.
    pub fn n_max(&self) -> i32 {
        self.n_min + self.coeffs.len() as i32 - 1
    }

    /// Truncation order; `None` for exact Laurent polynomials.
    pub fn order(&self) -> Option<i32> {
        self.order
    }

    /// Largest coefficient condition number seen while building this series
    /// (always 1 in the exact domain).
    pub fn condition(&self) -> f64 {
        self.condition
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// `C_n`, or `None` when `n` lies past the truncation order.
    pub fn coeff(&self, n: i32) -> Option<S> {
        if self.order.is_some_and(|o| n > o) {
            return None;
        }
        let idx = n - self.n_min;
        if idx < 0 {
            return Some(S::zero());
        }
        Some(self.coeffs.get(idx as usize).cloned().unwrap_or_else(S::zero))
    }

    /// `(n, C_n)` for every stored coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &S)> + '_ {
        (self.n_min..).zip(self.coeffs.iter())
    }

    fn check_center(&self, other: &Self) -> Result<()> {
        if self.center == other.center {
            Ok(())
        } else {
            Err(Error::CenterMismatch(self.center.to_string(), other.center.to_string()))
        }
    }

    /// Coefficientwise sum; the result is known up to the smaller order.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_center(other)?;
        let lo = self.n_min.min(other.n_min);
        let hi = self.n_max().max(other.n_max());
        let mut condition = self.condition.max(other.condition);
        let coeffs = (lo..=hi)
            .map(|n| {
                let a = self.stored(n);
                let b = other.stored(n);
                let sum = a.clone() + b.clone();
                if !S::EXACT {
                    condition = condition.max(cancellation(a.to_f64().abs() + b.to_f64().abs(), sum.to_f64()));
                }
                sum
            })
            .collect();
        Ok(Self::build(self.center.clone(), lo, coeffs, min_order(self.order, other.order), condition))
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &S) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.clone() * k.clone()).collect();
        Self::build(self.center.clone(), self.n_min, coeffs, self.order, self.condition)
    }

    /// Cauchy product. Exponents add; the known window of the product
    /// ends at `min(p.n_min + q.order, q.n_min + p.order)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_center(other)?;
        let order = min_order(self.order.map(|o| o + other.n_min), other.order.map(|o| o + self.n_min));
        let n_min = self.n_min + other.n_min;
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(o) = order {
            // terms past the known window would be trimmed anyway
            len = len.min((o - n_min + 1).max(0) as usize);
        }
        let mut coeffs = vec![S::zero(); len];
        let mut magnitude = vec![0.0_f64; if S::EXACT { 0 } else { len }];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] = std::mem::replace(&mut coeffs[i + j], S::zero()) + a.clone() * b.clone();
                if !S::EXACT {
                    magnitude[i + j] += (a.to_f64() * b.to_f64()).abs();
                }
            }
        }
        let condition = magnitude
            .iter()
            .zip(&coeffs)
            .map(|(m, c)| cancellation(*m, c.to_f64()))
            .fold(self.condition.max(other.condition), f64::max);
        Ok(Self::build(self.center.clone(), n_min, coeffs, order, condition))
    }

    /// Coefficients `a_0, a_1, ..` after the leading one, limited to
    /// `rel_order + 1` entries and to what the truncation order allows.
    fn leading_window(&self, rel_order: usize) -> Result<(Vec<S>, usize)> {
        if self.is_zero() {
            return Err(Error::ZeroSeries);
        }
        let known = match self.order {
            Some(o) => ((o - self.n_min).max(0) as usize).min(rel_order),
            None => rel_order,
        };
        let a = (0..=known).map(|i| self.stored(self.n_min + i as i32)).collect();
        Ok((a, known))
    }

    /// `1/p` through `rel_order` terms past its leading term `w^(-n_min)`.
    pub fn recip(&self, rel_order: usize) -> Result<Self> {
        let (a, known) = self.leading_window(rel_order)?;
        let a0 = a[0].clone();
        let mut b: Vec<S> = Vec::with_capacity(known + 1);
        b.push(S::one() / a0.clone());
        for j in 1..=known {
            let acc = (1..=j).fold(S::zero(), |acc, i| acc + a[i].clone() * b[j - i].clone());
            b.push(-acc / a0.clone());
        }
        let lead = -self.n_min;
        Ok(Self::build(self.center.clone(), lead, b, Some(lead + known as i32), self.condition))
    }

    /// Principal square root (positive leading coefficient) through
    /// `rel_order` terms past its leading term `w^(n_min/2)`.
    pub fn sqrt(&self, rel_order: usize) -> Result<Self> {
        let (a, known) = self.leading_window(rel_order)?;
        if self.n_min % 2 != 0 {
            return Err(Error::OddLeadingExponent(self.n_min));
        }
        if a[0] < S::zero() {
            return Err(Error::NegativeLeadingCoefficient(a[0].to_string()));
        }
        let b0 = a[0].sqrt().ok_or_else(|| Error::InexactSqrt(a[0].to_string()))?;
        let two_b0 = S::two() * b0.clone();
        let mut b: Vec<S> = Vec::with_capacity(known + 1);
        b.push(b0);
        for j in 1..=known {
            let cross = (1..j).fold(S::zero(), |acc, i| acc + b[i].clone() * b[j - i].clone());
            b.push((a[j].clone() - cross) / two_b0.clone());
        }
        let lead = self.n_min / 2;
        Ok(Self::build(self.center.clone(), lead, b, Some(lead + known as i32), self.condition))
    }

    /// Multiplies by `w^(-k)`: every exponent drops by `k`.
    pub fn shift_divide(&self, k: i32) -> Self {
        LaurentSeries {
            center: self.center.clone(),
            n_min: self.n_min - k,
            coeffs: self.coeffs.clone(),
            order: self.order.map(|o| o - k),
            condition: self.condition,
        }
    }

    /// The value at the center under the division by zero calculus: `C_0`.
    pub fn dbz_eval(&self) -> Result<S> {
        self.required(0)
    }

    /// `k`-th derivative at the center: `k!·C_k`.
    pub fn dbz_derivative(&self, k: u32) -> Result<S> {
        let c = self.required(k as i32)?;
        let factorial = (1..=k as i64).fold(S::one(), |acc, i| acc * S::from_i64(i));
        Ok(factorial * c)
    }

    fn required(&self, n: i32) -> Result<S> {
        self.coeff(n).ok_or(Error::InsufficientOrder { needed: n, order: self.order.unwrap_or(i32::MAX) })
    }

    /// Sum of the known terms at `w = h` (`h ≠ 0` when there is a principal part).
    pub fn partial_sum(&self, h: &S) -> S {
        self.terms().fold(S::zero(), |acc, (n, c)| acc + c.clone() * pow_i(h, n))
    }

    fn stored(&self, n: i32) -> S {
        let idx = n - self.n_min;
        if idx < 0 {
            return S::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(S::zero)
    }

    pub fn to_terms(&self) -> Vec<Term> {
        self.terms().filter(|(_, c)| !c.is_zero()).map(|(n, c)| Term { n, c: c.to_f64() }).collect()
    }

    pub fn from_terms(center: S, terms: &[Term]) -> Result<Self> {
        let mut sum = Self::zero(center.clone());
        for t in terms {
            let c = S::from_f64(t.c).ok_or_else(|| Error::Parse(format!("bad coefficient {}", t.c)))?;
            sum = sum.add(&Self::monomial(center.clone(), t.n, c))?;
        }
        Ok(sum)
    }

    /// Parses the `c*w^n + ... [+ O(w^m)]` text form.
    pub fn parse(center: S, text: &str) -> Result<Self> {
        let bad = |t: &str| Error::Parse(format!("bad series term {t:?}"));
        let mut sum = Self::zero(center.clone());
        let mut order = None;
        for term in text.split(" + ").map(str::trim) {
            if let Some(rest) = term.strip_prefix("O(w^") {
                let m: i32 = rest.strip_suffix(')').and_then(|m| m.parse().ok()).ok_or_else(|| bad(term))?;
                order = Some(m - 1);
                continue;
            }
            let (c, n) = match term.split_once("*w^") {
                Some((c, n)) => (c, n.parse::<i32>().map_err(|_| bad(term))?),
                None => match term.strip_suffix("*w") {
                    Some(c) => (c, 1),
                    None => (term, 0),
                },
            };
            let c = S::parse_scalar(c).ok_or_else(|| bad(term))?;
            sum = sum.add(&Self::monomial(center.clone(), n, c))?;
        }
        Ok(match order {
            Some(o) => Self::truncated(center, sum.n_min, sum.coeffs, o),
            None => sum,
        })
    }
}

fn cancellation(magnitude: f64, value: f64) -> f64 {
    if value == 0.0 || magnitude == 0.0 {
        1.0
    } else {
        magnitude / value.abs()
    }
}

fn pow_i<S: Scalar>(h: &S, n: i32) -> S {
    let p = (0..n.unsigned_abs()).fold(S::one(), |acc, _| acc * h.clone());
    if n < 0 {
        S::one() / p
    } else {
        p
    }
}

impl<S: Scalar> fmt::Display for LaurentSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> =
            self.terms().filter(|(_, c)| !c.is_zero()).map(|(n, c)| format!("{c}*w^{n}")).collect();
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        if let Some(o) = self.order {
            parts.push(format!("O(w^{})", o + 1));
        }
        f.write_str(&parts.join(" + "))
    }
}
