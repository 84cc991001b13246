//! Expanded bivariate polynomials in (λ, μ), used to compare rational
//! functions built along different routes and to refactor oracle output
//! into products of affine forms.

use super::factored::FactoredRatFunc;
use super::linear_form::Affine;
use super::{rat, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Dense-degree sparse polynomial in λ and μ.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RatPoly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl RatPoly2 {
    pub fn zero() -> Self {
        RatPoly2::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = RatPoly2::default();
        if !c.is_zero() {
            p.terms.insert((0, 0), c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_affine(f: &Affine) -> Self {
        let mut p = RatPoly2::default();
        p.insert((1, 0), f.cl.clone());
        p.insert((0, 1), f.cm.clone());
        p.insert((0, 0), f.c0.clone());
        p
    }

    fn insert(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(*k, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = RatPoly2::default();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.insert((ka.0 + kb.0, ka.1 + kb.1), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatPoly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn eval(&self, l0: &Rational, m0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((a, b), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..*a {
                t *= l0;
            }
            for _ in 0..*b {
                t *= m0;
            }
            acc += t;
        }
        acc
    }

    /// Expands the numerator part (nonnegative exponents) of `f`.  Panics
    /// on negative exponents.
    pub fn expand_product(f: &FactoredRatFunc) -> Self {
        let mut out = Self::constant(f.coeff().clone());
        for (form, e) in f.factors() {
            assert!(e > 0, "expand_product needs a polynomial input");
            let lin = Self::from_affine(&form.to_affine());
            for _ in 0..e {
                out = out.mul(&lin);
            }
        }
        out
    }

    /// Expands `f` as (numerator, denominator) polynomials.
    pub fn expand_fraction(f: &FactoredRatFunc) -> (Self, Self) {
        let mut num = Self::constant(f.coeff().clone());
        let mut den = Self::constant(Rational::one());
        for (form, e) in f.factors() {
            let lin = Self::from_affine(&form.to_affine());
            if e > 0 {
                for _ in 0..e {
                    num = num.mul(&lin);
                }
            } else {
                for _ in 0..(-e) {
                    den = den.mul(&lin);
                }
            }
        }
        (num, den)
    }

    /// Coefficients of a polynomial that only involves λ, lowest degree
    /// first.  Returns `None` when μ occurs.
    pub fn lambda_coeffs(&self) -> Option<Vec<Rational>> {
        let mut deg = 0;
        for ((a, b), _) in &self.terms {
            if *b != 0 {
                return None;
            }
            deg = deg.max(*a);
        }
        let mut coeffs = vec![Rational::zero(); deg as usize + 1];
        for ((a, _), c) in &self.terms {
            coeffs[*a as usize] = c.clone();
        }
        Some(coeffs)
    }

    /// Substitutes λ -> s, μ -> 0 and reads the result as a univariate
    /// coefficient vector; then verifies self == that polynomial applied
    /// to λ+μ.  Returns the coefficient vector on success.
    pub fn as_function_of_lambda_plus_mu(&self) -> Option<Vec<Rational>> {
        let restricted = RatPoly2 {
            terms: self
                .terms
                .iter()
                .filter(|((_, b), _)| *b == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        };
        let coeffs = restricted.lambda_coeffs()?;
        let s = Self::from_affine(&Affine::lambda_plus_mu());
        let mut rebuilt = Self::zero();
        let mut power = Self::constant(Rational::one());
        for c in &coeffs {
            rebuilt = rebuilt.add(&power.scale(c));
            power = power.mul(&s);
        }
        if rebuilt == *self {
            Some(coeffs)
        } else {
            None
        }
    }
}

/// Factors a univariate rational-coefficient polynomial (lowest degree
/// first) into linear factors over the rationals by root search on the
/// lattice (1/den)·Z for small denominators.  Returns `None` when a
/// nontrivial remainder resists all candidate roots.
fn factor_univariate(coeffs: &[Rational], make_form: impl Fn(&Rational) -> Affine) -> Option<FactoredRatFunc> {
    let mut c: Vec<Rational> = coeffs.to_vec();
    while c.last().map(|x| x.is_zero()).unwrap_or(false) {
        c.pop();
    }
    if c.is_empty() {
        return Some(FactoredRatFunc::zero());
    }
    let mut out = FactoredRatFunc::one();
    // strip powers of the variable itself (root 0)
    while c[0].is_zero() {
        out = out.mul(&FactoredRatFunc::from_affine(&make_form(&Rational::zero()), 1));
        c.remove(0);
    }
    'outer: while c.len() > 1 {
        let lead = c.last().unwrap().clone();
        let bound: Rational = c
            .iter()
            .map(|x| (x / &lead).abs())
            .fold(Rational::zero(), |a, b| if b > a { b } else { a })
            + Rational::one();
        for den in [1i64, 2, 4, 3, 6, 8, 12] {
            let max_num = (bound.clone() * rat(den)).ceil().to_integer();
            let max_num: i64 = i64::try_from(max_num).ok()?;
            for num in -max_num..=max_num {
                let root = Rational::new(num.into(), den.into());
                // Horner evaluation
                let mut v = Rational::zero();
                for coeff in c.iter().rev() {
                    v = v * &root + coeff;
                }
                if v.is_zero() {
                    // synthetic division by (x - root)
                    let mut q = vec![Rational::zero(); c.len() - 1];
                    let mut carry = Rational::zero();
                    for i in (0..c.len() - 1).rev() {
                        carry = c[i + 1].clone() + &carry * &root;
                        q[i] = carry.clone();
                    }
                    c = q;
                    let neg = -root;
                    out = out.mul(&FactoredRatFunc::from_affine(&make_form(&neg), 1));
                    continue 'outer;
                }
            }
        }
        return None;
    }
    Some(out.scale(&c[0]))
}

/// Factors a polynomial in λ alone into `c · prod (λ - root_i)`.
pub fn factor_in_lambda(p: &RatPoly2) -> Option<FactoredRatFunc> {
    let coeffs = p.lambda_coeffs()?;
    factor_univariate(&coeffs, |minus_root| {
        Affine::lambda().add_const(minus_root)
    })
}

/// Factors a polynomial that depends only on λ+μ into
/// `c · prod (λ + μ - root_i)`.
pub fn factor_in_lambda_mu_sum(p: &RatPoly2) -> Option<FactoredRatFunc> {
    let coeffs = p.as_function_of_lambda_plus_mu()?;
    factor_univariate(&coeffs, |minus_root| {
        Affine::lambda_plus_mu().add_const(minus_root)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{pochhammer, rat2};

    #[test]
    fn expand_and_refactor_pochhammer() {
        let p = pochhammer(&Affine::lambda().add_const(&rat2(-1, 2)), 3);
        let expanded = RatPoly2::expand_product(&p);
        let refactored = factor_in_lambda(&expanded).unwrap();
        assert_eq!(refactored, p);
    }

    #[test]
    fn lambda_plus_mu_detection() {
        let p = pochhammer(&Affine::lambda_plus_mu().add_const(&rat(-1)), 2);
        let expanded = RatPoly2::expand_product(&p);
        let refactored = factor_in_lambda_mu_sum(&expanded).unwrap();
        assert_eq!(refactored, p);
        // something genuinely asymmetric is rejected
        let q = RatPoly2::from_affine(&Affine::lambda());
        assert!(q.as_function_of_lambda_plus_mu().is_none());
    }
}
