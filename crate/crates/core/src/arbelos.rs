//! Circles touching two tangent circles `C1: (x + r1)² + y² = r1²` and
//! `C2: (x − r2)² + y² = r2²` at the origin, and what the division by zero
//! calculus extracts when the third circle of the family shrinks to the
//! origin.
//!
//! The family `C3(z)` passes through `(0, 2√(r1r2)/(z ± 1))`. With `w = 1/z`
//! the fourth circle `C4(w)` touching `C1`, `C2`, `C3` has
//!
//! ```text
//! x4 = r1r2(r1 − r2)w² / D
//! y4 = 2r1r2(√(r1r2) + (r1 + r2)w)w / D
//! r4 = r1r2(r1 + r2)w² / D
//! D  = r1r2 + 2√(r1r2)(r1 + r2)w + (r1² + r1r2 + r2²)w²
//! ```
//!
//! and multiplying its equation by `D` gives `f0 + f1·w + f2·w² = 0`. Taking
//! `C_0`, `C_1`, `C_2` of that identity at `w = 0` yields the origin, the
//! Bankoff circle and the incircle of the arbelos.

use crate::error::{Error, Result};
use crate::geometry::{equation_to_circle, CircleEquation, GeneralizedCircle, Point};
use crate::scalar::Scalar;
use crate::series::LaurentSeries;

#[derive(Clone, Debug, PartialEq)]
pub struct ArbelosConfig<S> {
    r1: S,
    r2: S,
    sqrt_r1r2: Option<S>,
}

impl<S: Scalar> ArbelosConfig<S> {
    pub fn new(r1: S, r2: S) -> Result<Self> {
        for r in [&r1, &r2] {
            if *r <= S::zero() {
                return Err(Error::InvalidRadius(r.to_string()));
            }
        }
        let sqrt_r1r2 = (r1.clone() * r2.clone()).sqrt();
        Ok(ArbelosConfig { r1, r2, sqrt_r1r2 })
    }

    /// `r1 = s1²`, `r2 = s2²`; keeps `√(r1r2)` rational.
    pub fn from_roots(s1: S, s2: S) -> Result<Self> {
        let cfg = Self::new(s1.square(), s2.square())?;
        Ok(ArbelosConfig { sqrt_r1r2: Some(s1.abs() * s2.abs()), ..cfg })
    }

    pub fn r1(&self) -> &S {
        &self.r1
    }

    pub fn r2(&self) -> &S {
        &self.r2
    }

    /// `√(r1r2)`; fails in exact mode when it is irrational.
    pub fn sqrt_r1r2(&self) -> Result<S> {
        self.sqrt_r1r2
            .clone()
            .ok_or_else(|| Error::InexactSqrt((self.r1.clone() * self.r2.clone()).to_string()))
    }

    pub fn c1(&self) -> GeneralizedCircle<S> {
        GeneralizedCircle::Circle { center: Point::new(-self.r1.clone(), S::zero()), radius: self.r1.clone() }
    }

    pub fn c2(&self) -> GeneralizedCircle<S> {
        GeneralizedCircle::Circle { center: Point::new(self.r2.clone(), S::zero()), radius: self.r2.clone() }
    }

    /// Circle with center `(r2 − r1, 0)` and radius `r1 + r2`, touching
    /// `C1` and `C2` internally.
    pub fn outer(&self) -> GeneralizedCircle<S> {
        GeneralizedCircle::Circle {
            center: Point::new(self.r2.clone() - self.r1.clone(), S::zero()),
            radius: self.r1.clone() + self.r2.clone(),
        }
    }

    fn r1r2(&self) -> S {
        self.r1.clone() * self.r2.clone()
    }

    /// `r1² + r1r2 + r2²`
    fn m(&self) -> S {
        self.r1.square() + self.r1r2() + self.r2.square()
    }

    /// Bankoff radius `r1r2/(r1 + r2)`, evaluated directly.
    pub fn bankoff_radius(&self) -> S {
        self.r1r2() / (self.r1.clone() + self.r2.clone())
    }

    /// Incircle radius `r1r2(r1 + r2)/(r1² + r1r2 + r2²)`, evaluated directly.
    pub fn incircle_radius(&self) -> S {
        self.r1r2() * (self.r1.clone() + self.r2.clone()) / self.m()
    }
}

/// Member `z` of the family of circles through `V_{z±1}` touching `C1` and
/// `C2`. For `|z| < 1` the circle encloses both.
pub fn ow_circle<S: Scalar>(z: &S, cfg: &ArbelosConfig<S>) -> Result<GeneralizedCircle<S>> {
    let q = z.square() - S::one();
    if q.is_zero() {
        return Err(Error::DegenerateParameter(z.to_string()));
    }
    let s = cfg.sqrt_r1r2()?;
    let center = Point::new(
        (cfg.r1.clone() - cfg.r2.clone()) / q.clone(),
        S::two() * z.clone() * s / q.clone(),
    );
    GeneralizedCircle::circle(center, (cfg.r1.clone() + cfg.r2.clone()) / q.abs())
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyMember<S> {
    pub w: S,
    pub x4: S,
    pub y4: S,
    /// Signed; negative when `D < 0`.
    pub r4: S,
    pub d: S,
}

impl<S: Scalar> FamilyMember<S> {
    /// The circle `(x − x4)² + (y − y4)² = r4²`; the origin point circle at
    /// `w = 0`.
    pub fn circle(&self) -> GeneralizedCircle<S> {
        let center = Point::new(self.x4.clone(), self.y4.clone());
        GeneralizedCircle::circle_or_point(center, self.r4.abs()).expect("|r4| is nonnegative")
    }
}

/// The fourth circle for parameter `w = 1/z`.
pub fn family_member<S: Scalar>(w: &S, cfg: &ArbelosConfig<S>) -> Result<FamilyMember<S>> {
    let s = cfg.sqrt_r1r2()?;
    let r1r2 = cfg.r1r2();
    let sum = cfg.r1.clone() + cfg.r2.clone();
    let w2 = w.square();
    let middle = S::two() * s.clone() * sum.clone() * w.clone();
    let tail = cfg.m() * w2.clone();
    let d = r1r2.clone() + middle.clone() + tail.clone();
    let scale = r1r2.clone() + middle.abs() + tail;
    if d.is_zero() || d.negligible(&scale) {
        return Err(Error::VanishingDenominator(w.to_string()));
    }
    let x4 = r1r2.clone() * (cfg.r1.clone() - cfg.r2.clone()) * w2.clone() / d.clone();
    let y4 = S::two() * r1r2.clone() * (s + sum.clone() * w.clone()) * w.clone() / d.clone();
    let r4 = r1r2 * sum * w2 / d.clone();
    Ok(FamilyMember { w: w.clone(), x4, y4, r4, d })
}

/// `(f0, f1, f2)` with their scalar prefactors.
pub fn family_equation_coeffs<S: Scalar>(cfg: &ArbelosConfig<S>) -> Result<[CircleEquation<S>; 3]> {
    let s = cfg.sqrt_r1r2()?;
    let r1r2 = cfg.r1r2();
    let sum = cfg.r1.clone() + cfg.r2.clone();
    let zero = S::zero;
    let four = S::from_i64(4);
    let f0 = CircleEquation::new(r1r2.clone(), zero(), zero(), zero());
    let two_s = S::two() * s;
    let f1 = CircleEquation::new(
        two_s.clone() * sum.clone(),
        zero(),
        -(two_s * S::two() * r1r2.clone()),
        zero(),
    );
    let f2 = CircleEquation::new(
        cfg.m(),
        S::two() * r1r2.clone() * (cfg.r2.clone() - cfg.r1.clone()),
        -(four.clone() * r1r2.clone() * sum),
        four * r1r2.square(),
    );
    Ok([f0, f1, f2])
}

/// What the cascade reads off at `w = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ArbelosExtraction<S> {
    /// `C_0`: the origin.
    pub point: GeneralizedCircle<S>,
    /// `C_1`: the Bankoff circle.
    pub bankoff: GeneralizedCircle<S>,
    /// `C_2`: the incircle of the arbelos.
    pub incircle: GeneralizedCircle<S>,
    /// `C_0, C_1, C_2` of the cascade as quadratic forms, in the rescaled
    /// parameter `t = √(r1r2)·w` (form `k` equals `f_k / √(r1r2)^k`).
    pub forms: [CircleEquation<S>; 3],
}

/// Runs the division by zero calculus on `D·((x − x4)² + (y − y4)² − r4²)`
/// at `w = 0`, expanding `1/D` as a Laurent series, and converts each
/// extracted coefficient form to a circle.
///
/// The expansion is carried out in `t = √(r1r2)·w`, whose coefficients are
/// rational for every rational `r1, r2`. Rescaling the parameter multiplies
/// `C_k` by a nonzero constant, so the extracted loci are unchanged.
pub fn dbz_family_extract<S: Scalar>(cfg: &ArbelosConfig<S>, order: usize) -> Result<ArbelosExtraction<S>> {
    let at = S::zero();
    let poly = |coeffs: Vec<S>| LaurentSeries::new(at.clone(), 0, coeffs);
    let r1r2 = cfg.r1r2();
    let sum = cfg.r1.clone() + cfg.r2.clone();
    let two = S::two();

    let d = poly(vec![r1r2.clone(), two.clone() * sum.clone(), cfg.m() / r1r2.clone()]);
    let nx = poly(vec![S::zero(), S::zero(), cfg.r1.clone() - cfg.r2.clone()]);
    let ny = poly(vec![S::zero(), two.clone() * r1r2.clone(), two.clone() * sum.clone()]);
    let nr = poly(vec![S::zero(), S::zero(), sum]);

    let inv_d = d.recip(order)?;
    let x4 = nx.mul(&inv_d)?;
    let y4 = ny.mul(&inv_d)?;
    let r4 = nr.mul(&inv_d)?;

    let a = d.clone();
    let b = d.mul(&x4)?.scale(&-two.clone());
    let c = d.mul(&y4)?.scale(&-two);
    let e = d.mul(&x4.mul(&x4)?.add(&y4.mul(&y4)?)?.sub(&r4.mul(&r4)?)?)?;

    let cascade = |k: i32| -> Result<CircleEquation<S>> {
        Ok(CircleEquation::new(
            a.shift_divide(k).dbz_eval()?,
            b.shift_divide(k).dbz_eval()?,
            c.shift_divide(k).dbz_eval()?,
            e.shift_divide(k).dbz_eval()?,
        ))
    };
    let forms = [cascade(0)?, cascade(1)?, cascade(2)?];
    Ok(ArbelosExtraction {
        point: equation_to_circle(&forms[0])?,
        bankoff: equation_to_circle(&forms[1])?,
        incircle: equation_to_circle(&forms[2])?,
        forms,
    })
}

/// `C_0` in `ξ` of
/// `1/r1 + 1/r2 + 1/ξ² ± (2/ξ)·√(ξ²/(r1r2) + 1/r1 + 1/r2)`,
/// i.e. the curvature that the division by zero calculus assigns to the
/// fourth circle when `r3 = ξ² → 0`.
///
/// The square root is expanded to `order` terms; `order ≥ 1` is needed for
/// the constant coefficient to be known. In exact mode `1/r1 + 1/r2` must
/// be a rational square.
pub fn xi_substitution_dbz<S: Scalar>(r1: &S, r2: &S, plus: bool, order: usize) -> Result<S> {
    for r in [r1, r2] {
        if *r <= S::zero() {
            return Err(Error::InvalidRadius(r.to_string()));
        }
    }
    let at = S::zero();
    let k = r1.recip() + r2.recip();
    let radicand = LaurentSeries::new(at.clone(), 0, vec![k.clone(), S::zero(), (r1.clone() * r2.clone()).recip()]);
    let sign = if plus { S::two() } else { -S::two() };
    let root_term = LaurentSeries::monomial(at.clone(), -1, sign).mul(&radicand.sqrt(order)?)?;
    let total = LaurentSeries::constant(at.clone(), k)
        .add(&LaurentSeries::monomial(at, -2, S::one()))?
        .add(&root_term)?;
    total.dbz_eval()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{exact_tangency, TangencyKind};
    use crate::scalar::{rat, Rational};

    fn cfg(r1: (i64, i64), r2: (i64, i64)) -> ArbelosConfig<Rational> {
        ArbelosConfig::new(rat(r1.0, r1.1), rat(r2.0, r2.1)).unwrap()
    }

    fn circle(x: Rational, y: Rational, r: Rational) -> GeneralizedCircle<Rational> {
        GeneralizedCircle::Circle { center: Point::new(x, y), radius: r }
    }

    #[test]
    fn config_tangencies_are_exact() {
        let c = cfg((7, 3), (2, 5));
        assert_eq!(exact_tangency(&c.c1(), &c.c2()), Some(TangencyKind::External));
        assert_eq!(exact_tangency(&c.c1(), &c.outer()), Some(TangencyKind::Internal));
        assert_eq!(exact_tangency(&c.c2(), &c.outer()), Some(TangencyKind::Internal));
        assert!(ArbelosConfig::new(rat(0, 1), rat(1, 1)).is_err());
    }

    #[test]
    fn ow_circle_examples() {
        let unit = cfg((1, 1), (1, 1));
        assert_eq!(ow_circle(&rat(2, 1), &unit).unwrap(), circle(rat(0, 1), rat(4, 3), rat(2, 3)));
        assert_eq!(ow_circle(&rat(3, 1), &unit).unwrap(), circle(rat(0, 1), rat(3, 4), rat(1, 4)));
        let c41 = cfg((4, 1), (1, 1));
        assert_eq!(ow_circle(&rat(2, 1), &c41).unwrap(), circle(rat(1, 1), rat(8, 3), rat(5, 3)));
        assert!(matches!(ow_circle(&rat(1, 1), &unit), Err(Error::DegenerateParameter(_))));
        assert!(matches!(ow_circle(&rat(-1, 1), &unit), Err(Error::DegenerateParameter(_))));
        // √2 is irrational
        assert!(matches!(ow_circle(&rat(2, 1), &cfg((2, 1), (1, 1))), Err(Error::InexactSqrt(_))));
    }

    #[test]
    fn family_member_examples() {
        let unit = cfg((1, 1), (1, 1));
        let m = family_member(&rat(1, 2), &unit).unwrap();
        assert_eq!((m.d.clone(), m.x4.clone(), m.y4.clone(), m.r4.clone()), (rat(15, 4), rat(0, 1), rat(8, 15), rat(2, 15)));
        assert_eq!(exact_tangency(&m.circle(), &ow_circle(&rat(2, 1), &unit).unwrap()), Some(TangencyKind::External));

        let m = family_member(&rat(0, 1), &cfg((9, 1), (4, 1))).unwrap();
        assert_eq!(m.circle(), GeneralizedCircle::point(rat(0, 1), rat(0, 1)));

        let m = family_member(&rat(1, 1), &unit).unwrap();
        assert_eq!((m.d, m.x4, m.y4, m.r4.clone()), (rat(8, 1), rat(0, 1), rat(3, 4), rat(1, 4)));
    }

    #[test]
    fn family_member_rejects_vanishing_denominator() {
        // D = 1 + 4w + 3w² = (1 + w)(1 + 3w)
        let unit = cfg((1, 1), (1, 1));
        assert!(matches!(family_member(&rat(-1, 1), &unit), Err(Error::VanishingDenominator(_))));
        assert!(matches!(family_member(&rat(-1, 3), &unit), Err(Error::VanishingDenominator(_))));
    }

    #[test]
    fn equation_coeff_examples() {
        let [f0, f1, f2] = family_equation_coeffs(&cfg((1, 1), (1, 1))).unwrap();
        assert_eq!(f0.to_circle().unwrap(), GeneralizedCircle::point(rat(0, 1), rat(0, 1)));
        assert_eq!(f1.scale(&rat(1, 2)), CircleEquation::new(rat(2, 1), rat(0, 1), rat(-2, 1), rat(0, 1)));
        assert_eq!(f1.to_circle().unwrap(), circle(rat(0, 1), rat(1, 2), rat(1, 2)));
        assert_eq!(f2, CircleEquation::new(rat(3, 1), rat(0, 1), rat(-8, 1), rat(4, 1)));
        assert_eq!(f2.to_circle().unwrap(), circle(rat(0, 1), rat(4, 3), rat(2, 3)));
    }

    #[test]
    fn extraction_examples() {
        let x = dbz_family_extract(&cfg((2, 1), (1, 1)), 8).unwrap();
        assert_eq!(x.point, GeneralizedCircle::point(rat(0, 1), rat(0, 1)));
        assert_eq!(x.bankoff, circle(rat(0, 1), rat(2, 3), rat(2, 3)));
        assert_eq!(x.incircle, circle(rat(2, 7), rat(12, 7), rat(6, 7)));

        let x = dbz_family_extract(&cfg((1, 1), (1, 1)), 8).unwrap();
        assert_eq!(x.bankoff, circle(rat(0, 1), rat(1, 2), rat(1, 2)));
        assert_eq!(x.incircle, circle(rat(0, 1), rat(4, 3), rat(2, 3)));

        let x = dbz_family_extract(&cfg((2, 1), (2, 1)), 8).unwrap();
        assert_eq!(x.bankoff.radius(), rat(1, 1));
    }

    #[test]
    fn extraction_forms_match_closed_form_up_to_scale() {
        let c = ArbelosConfig::from_roots(rat(3, 2), rat(1, 3)).unwrap();
        let s = c.sqrt_r1r2().unwrap();
        let x = dbz_family_extract(&c, 4).unwrap();
        let closed = family_equation_coeffs(&c).unwrap();
        let mut sk = rat(1, 1);
        for (form, want) in x.forms.iter().zip(&closed) {
            assert_eq!(&form.scale(&sk), want);
            sk *= s.clone();
        }
    }

    #[test]
    fn xi_substitution_examples() {
        assert_eq!(xi_substitution_dbz(&rat(2, 1), &rat(2, 1), true, 4).unwrap(), rat(1, 1));
        assert_eq!(xi_substitution_dbz(&rat(1, 2), &rat(1, 2), false, 4).unwrap(), rat(4, 1));
        let k = xi_substitution_dbz(&2.0, &1.0, true, 8).unwrap();
        assert!((k - 1.5).abs() < 1e-12);
        assert!(matches!(xi_substitution_dbz(&rat(2, 1), &rat(2, 1), true, 0), Err(Error::InsufficientOrder { .. })));
        assert!(matches!(xi_substitution_dbz(&rat(2, 1), &rat(1, 1), true, 4), Err(Error::InexactSqrt(_))));
    }
}
