//! Exact rational scalars and factored rational functions in the two
//! spectral parameters.
//!
//! Every branching constant in this crate is a rational constant times a
//! product of integer powers of affine forms `c0 + cl·λ + cm·μ`.  Keeping
//! the factored shape (instead of expanded numerator/denominator pairs)
//! makes zero/pole bookkeeping and cross-form comparisons exact and cheap.

mod linear_form;
mod factored;
mod pochhammer;
mod ratpoly;

pub use factored::{FactoredRatFunc, PoleSignal};
pub use linear_form::{Affine, LinearForm};
pub use pochhammer::{pochhammer, pochhammer_d, rising_factorial};
pub use ratpoly::{factor_in_lambda, factor_in_lambda_mu_sum, RatPoly2};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational scalar; always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat2(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "p/q" or "p" into a rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
            let q: BigInt = q.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
            if q.is_zero() {
                return Err("zero denominator".into());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|e| format!("bad integer: {e}"))?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Renders a rational as "p/q", or "p" when the denominator is 1.
pub fn rational_string(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// True when `x` is an integer.
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Floor of a rational as a BigInt.
pub fn floor_big(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// x! for small x.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Exact conversion to i64 when the rational is a small integer.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if !is_integer(x) {
        return None;
    }
    let n = x.numer();
    if n.abs() > BigInt::from(i64::MAX) {
        None
    } else {
        Some(i64::try_from(n.clone()).ok()?)
    }
}
