//! Rational functions stored as a constant times a product of integer
//! powers of primitive affine forms.

use super::linear_form::{Affine, LinearForm};
use super::{parse_rational, rational_string, Rational};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Evaluation hit a vanishing factor with negative exponent.
///
/// This is a typed outcome, not a failure: `order` is the (positive) pole
/// order contributed by the reported factor, `net_order` the total order of
/// the function at the point (zeros minus poles); `net_order < 0` means a
/// genuine pole, `net_order >= 0` an indeterminate 0·∞ product that a plain
/// evaluation cannot resolve.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("pole at vanishing factor {form} (order {order}, net order {net_order})")]
pub struct PoleSignal {
    pub form: LinearForm,
    pub order: i64,
    pub net_order: i64,
}

/// `coeff * prod_i form_i^{e_i}` with primitive pairwise non-proportional
/// forms and nonzero exponents.  The zero function is `coeff = 0` with no
/// factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRatFunc {
    coeff: Rational,
    factors: BTreeMap<LinearForm, i64>,
}

impl FactoredRatFunc {
    pub fn one() -> Self {
        FactoredRatFunc {
            coeff: Rational::one(),
            factors: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        FactoredRatFunc {
            coeff: Rational::zero(),
            factors: BTreeMap::new(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FactoredRatFunc {
            coeff: c,
            factors: BTreeMap::new(),
        }
    }

    /// A single affine factor to the given power.  Constant forms fold into
    /// the coefficient.
    pub fn from_affine(f: &Affine, exp: i64) -> Self {
        if exp == 0 {
            return Self::one();
        }
        match LinearForm::from_affine(f) {
            None => {
                if f.c0.is_zero() {
                    assert!(exp > 0, "zero constant factor with negative exponent");
                    return Self::zero();
                }
                let mut c = Rational::one();
                let p = f.c0.clone();
                if exp > 0 {
                    for _ in 0..exp {
                        c *= &p;
                    }
                } else {
                    for _ in 0..(-exp) {
                        c /= &p;
                    }
                }
                Self::from_rational(c)
            }
            Some((form, scale)) => {
                let mut c = Rational::one();
                if exp > 0 {
                    for _ in 0..exp {
                        c *= &scale;
                    }
                } else {
                    for _ in 0..(-exp) {
                        c /= &scale;
                    }
                }
                let mut factors = BTreeMap::new();
                factors.insert(form, exp);
                FactoredRatFunc { coeff: c, factors }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.coeff.is_one() && self.factors.is_empty()
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn factors(&self) -> impl Iterator<Item = (&LinearForm, i64)> {
        self.factors.iter().map(|(f, e)| (f, *e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.coeff *= &other.coeff;
        for (f, e) in &other.factors {
            let slot = out.factors.entry(f.clone()).or_insert(0);
            *slot += e;
            if *slot == 0 {
                out.factors.remove(f);
            }
        }
        out
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverting the zero function");
        FactoredRatFunc {
            coeff: self.coeff.recip(),
            factors: self.factors.iter().map(|(f, e)| (f.clone(), -e)).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        if self.is_zero() {
            assert!(e > 0, "negative power of zero");
            return Self::zero();
        }
        let base = if e > 0 { self.clone() } else { self.inv() };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.coeff *= c;
        out
    }

    /// Exact value, or the typed pole outcome.  A vanishing factor with
    /// positive exponent yields exact 0 provided no negative-exponent
    /// factor vanishes at the same point.
    pub fn eval(&self, l0: &Rational, m0: &Rational) -> Result<Rational, PoleSignal> {
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        let mut zero_order = 0i64;
        let mut pole_order = 0i64;
        let mut pole_form: Option<(LinearForm, i64)> = None;
        let mut value = self.coeff.clone();
        for (f, e) in &self.factors {
            let v = f.eval(l0, m0);
            if v.is_zero() {
                if *e > 0 {
                    zero_order += e;
                } else {
                    pole_order -= e;
                    if pole_form.is_none() {
                        pole_form = Some((f.clone(), -e));
                    }
                }
            } else if *e > 0 {
                for _ in 0..*e {
                    value *= &v;
                }
            } else {
                for _ in 0..(-*e) {
                    value /= &v;
                }
            }
        }
        match pole_form {
            Some((form, order)) => Err(PoleSignal {
                form,
                order,
                net_order: zero_order - pole_order,
            }),
            None => {
                if zero_order > 0 {
                    Ok(Rational::zero())
                } else {
                    Ok(value)
                }
            }
        }
    }

    /// Order of vanishing at a point: positive for zeros, negative for
    /// poles, 0 for a finite nonzero value.
    pub fn order_at(&self, l0: &Rational, m0: &Rational) -> i64 {
        assert!(!self.is_zero(), "order of the zero function");
        self.factors
            .iter()
            .filter(|(f, _)| f.eval(l0, m0).is_zero())
            .map(|(_, e)| *e)
            .sum()
    }

    /// Every factor with its signed exponent, in canonical order.
    pub fn zeros_and_poles(&self) -> Vec<(LinearForm, i64)> {
        self.factors.iter().map(|(f, e)| (f.clone(), *e)).collect()
    }

    /// Substitutes λ = l0, leaving μ symbolic.  Factors not involving μ
    /// become scalars; a vanishing one with negative exponent is a pole.
    pub fn eval_lambda(&self, l0: &Rational) -> Result<FactoredRatFunc, PoleSignal> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = Self::from_rational(self.coeff.clone());
        let mut zero_order = 0i64;
        let mut pole: Option<(LinearForm, i64, i64)> = None;
        for (f, e) in &self.factors {
            if f.uses_mu() {
                let c0 = Rational::from_integer(f.c0.clone())
                    + Rational::from_integer(f.cl.clone()) * l0;
                let sub = Affine::new(
                    Rational::zero(),
                    Rational::from_integer(f.cm.clone()),
                    c0,
                );
                out = out.mul(&Self::from_affine(&sub, *e));
            } else {
                let v = f.eval(l0, &Rational::zero());
                if v.is_zero() {
                    if *e > 0 {
                        zero_order += *e;
                    } else if pole.is_none() {
                        pole = Some((f.clone(), -*e, 0));
                    } else if let Some((_, ord, _)) = pole.as_mut() {
                        *ord -= *e;
                    }
                } else {
                    let mut c = Rational::one();
                    if *e > 0 {
                        for _ in 0..*e {
                            c *= &v;
                        }
                    } else {
                        for _ in 0..(-*e) {
                            c /= &v;
                        }
                    }
                    out = out.scale(&c);
                }
            }
        }
        if let Some((form, order, _)) = pole {
            return Err(PoleSignal {
                form,
                order,
                net_order: zero_order - order,
            });
        }
        if zero_order > 0 {
            return Ok(Self::zero());
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct FactorSchema {
    form: String,
    exp: i64,
}

#[derive(Serialize, Deserialize)]
struct FrfSchema {
    coeff: String,
    factors: Vec<FactorSchema>,
}

impl Serialize for FactoredRatFunc {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        FrfSchema {
            coeff: rational_string(&self.coeff),
            factors: self
                .factors
                .iter()
                .map(|(f, e)| FactorSchema {
                    form: f.schema_string(),
                    exp: *e,
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for FactoredRatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let schema = FrfSchema::deserialize(de)?;
        let coeff = parse_rational(&schema.coeff).map_err(serde::de::Error::custom)?;
        let mut factors = BTreeMap::new();
        for fac in schema.factors {
            let form = LinearForm::parse_schema(&fac.form).map_err(serde::de::Error::custom)?;
            if fac.exp != 0 {
                factors.insert(form, fac.exp);
            }
        }
        if coeff.is_zero() && !factors.is_empty() {
            return Err(serde::de::Error::custom("zero coefficient with factors"));
        }
        Ok(FactoredRatFunc { coeff, factors })
    }
}

impl fmt::Display for FactoredRatFunc {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut wrote = false;
        if !self.coeff.is_one() || self.factors.is_empty() {
            write!(out, "{}", rational_string(&self.coeff))?;
            wrote = true;
        }
        for (f, e) in &self.factors {
            if wrote {
                write!(out, " * ")?;
            }
            wrote = true;
            if *e == 1 {
                write!(out, "({f})")?;
            } else {
                write!(out, "({f})^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat2};

    fn lam() -> Affine {
        Affine::lambda()
    }

    #[test]
    fn eval_simple_inverse() {
        let f = FactoredRatFunc::from_affine(&lam(), -1);
        assert_eq!(f.eval(&rat(2), &rat(0)).unwrap(), rat2(1, 2));
        let err = f.eval(&rat(0), &rat(0)).unwrap_err();
        assert_eq!(err.order, 1);
        assert_eq!(err.net_order, -1);
    }

    #[test]
    fn eval_zero_factor_wins() {
        // λ(λ+1)(λ-1) at λ=1 is exactly 0
        let f = FactoredRatFunc::from_affine(&lam(), 1)
            .mul(&FactoredRatFunc::from_affine(&lam().add_const(&rat(1)), 1))
            .mul(&FactoredRatFunc::from_affine(&lam().add_const(&rat(-1)), 1));
        assert_eq!(f.eval(&rat(1), &rat(0)).unwrap(), rat(0));
        assert_eq!(f.eval(&rat(2), &rat(0)).unwrap(), rat(6));
    }

    #[test]
    fn multiplication_is_order_independent() {
        let a = FactoredRatFunc::from_affine(&Affine::new(rat2(1, 2), rat(0), rat(-1)), 2);
        let b = FactoredRatFunc::from_affine(&Affine::new(rat(0), rat(3), rat(1)), -1);
        assert_eq!(a.mul(&b), b.mul(&a));
        assert!(a.mul(&b).mul(&a.inv()).mul(&b.inv()).is_one());
    }

    #[test]
    fn proportional_factors_merge() {
        // (λ/2 - 1) * (2λ - 4) = 1/2 * (λ-2)^2 * 2 = (λ-2)^2
        let a = FactoredRatFunc::from_affine(&Affine::new(rat2(1, 2), rat(0), rat(-1)), 1);
        let b = FactoredRatFunc::from_affine(&Affine::new(rat(2), rat(0), rat(-4)), 1);
        let p = a.mul(&b);
        assert_eq!(p.zeros_and_poles().len(), 1);
        assert_eq!(p.coeff(), &rat(1));
        assert_eq!(p.eval(&rat(5), &rat(0)).unwrap(), rat(9));
    }

    #[test]
    fn json_round_trip() {
        let f = FactoredRatFunc::from_affine(&Affine::new(rat(1), rat(1), rat2(-3, 2)), -2)
            .scale(&rat2(7, 3));
        let s = serde_json::to_string(&f).unwrap();
        let g: FactoredRatFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn eval_lambda_partial() {
        // 1 / (λ + μ - 1) at λ = 1 is 1/μ
        let f = FactoredRatFunc::from_affine(&Affine::new(rat(1), rat(1), rat(-1)), -1);
        let g = f.eval_lambda(&rat(1)).unwrap();
        let h = FactoredRatFunc::from_affine(&Affine::mu(), -1);
        assert_eq!(g, h);
    }
}
