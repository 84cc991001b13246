//! Affine forms in the spectral parameters and their canonical integer
//! representatives.

use super::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An affine form `c0 + cl·λ + cm·μ` with rational coefficients.  This is
/// the working representation used while assembling products; factors are
/// canonicalized into [`LinearForm`] keys only when stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    pub cl: Rational,
    pub cm: Rational,
    pub c0: Rational,
}

impl Affine {
    pub fn new(cl: Rational, cm: Rational, c0: Rational) -> Self {
        Affine { cl, cm, c0 }
    }

    /// The parameter λ.
    pub fn lambda() -> Self {
        Affine::new(Rational::one(), Rational::zero(), Rational::zero())
    }

    /// The parameter μ.
    pub fn mu() -> Self {
        Affine::new(Rational::zero(), Rational::one(), Rational::zero())
    }

    /// λ + μ.
    pub fn lambda_plus_mu() -> Self {
        Affine::new(Rational::one(), Rational::one(), Rational::zero())
    }

    pub fn constant(c: Rational) -> Self {
        Affine::new(Rational::zero(), Rational::zero(), c)
    }

    pub fn add_const(&self, c: &Rational) -> Self {
        Affine::new(self.cl.clone(), self.cm.clone(), &self.c0 + c)
    }

    pub fn is_constant(&self) -> bool {
        self.cl.is_zero() && self.cm.is_zero()
    }

    pub fn eval(&self, l0: &Rational, m0: &Rational) -> Rational {
        &self.c0 + &self.cl * l0 + &self.cm * m0
    }
}

/// Canonical integer representative of a nonconstant affine form.
///
/// Invariants: `gcd(|cl|, |cm|, |c0|) = 1`, `(cl, cm) != (0, 0)`, and the
/// first nonzero coefficient in the order (cl, cm, c0) is positive.  Two
/// affine forms that are proportional over the rationals canonicalize to
/// the same `LinearForm`; the dropped scale is returned alongside.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LinearForm {
    pub cl: BigInt,
    pub cm: BigInt,
    pub c0: BigInt,
}

impl LinearForm {
    /// Canonicalizes `f`, returning the primitive form and the scale such
    /// that `f = scale * form`.  Returns `None` for constant forms.
    pub fn from_affine(f: &Affine) -> Option<(LinearForm, Rational)> {
        if f.is_constant() {
            return None;
        }
        let den_lcm = f
            .cl
            .denom()
            .lcm(f.cm.denom())
            .lcm(f.c0.denom());
        let a = f.cl.numer() * (&den_lcm / f.cl.denom());
        let b = f.cm.numer() * (&den_lcm / f.cm.denom());
        let c = f.c0.numer() * (&den_lcm / f.c0.denom());
        let mut g = a.gcd(&b).gcd(&c);
        if g.is_zero() {
            g = BigInt::one();
        }
        let lead_negative = if !a.is_zero() {
            a.is_negative()
        } else if !b.is_zero() {
            b.is_negative()
        } else {
            c.is_negative()
        };
        let sign = if lead_negative { -BigInt::one() } else { BigInt::one() };
        let unit = &g * &sign;
        let form = LinearForm {
            cl: &a / &unit,
            cm: &b / &unit,
            c0: &c / &unit,
        };
        // f = (unit / den_lcm) * form
        let scale = Rational::new(unit, den_lcm);
        Some((form, scale))
    }

    pub fn lambda() -> LinearForm {
        LinearForm {
            cl: BigInt::one(),
            cm: BigInt::zero(),
            c0: BigInt::zero(),
        }
    }

    pub fn eval(&self, l0: &Rational, m0: &Rational) -> Rational {
        Rational::from_integer(self.c0.clone())
            + Rational::from_integer(self.cl.clone()) * l0
            + Rational::from_integer(self.cm.clone()) * m0
    }

    pub fn to_affine(&self) -> Affine {
        Affine::new(
            Rational::from_integer(self.cl.clone()),
            Rational::from_integer(self.cm.clone()),
            Rational::from_integer(self.c0.clone()),
        )
    }

    /// Whether the form involves μ.
    pub fn uses_mu(&self) -> bool {
        !self.cm.is_zero()
    }

    /// Fixed serialization layout `c0 + cl*L + cm*M`.
    pub fn schema_string(&self) -> String {
        format!("{} + {}*L + {}*M", self.c0, self.cl, self.cm)
    }

    pub fn parse_schema(s: &str) -> Result<LinearForm, String> {
        let parts: Vec<&str> = s.split('+').map(|t| t.trim()).collect();
        if parts.len() != 3 {
            return Err(format!("expected `c0 + cl*L + cm*M`, got `{s}`"));
        }
        let c0: BigInt = parts[0].parse().map_err(|e| format!("bad c0: {e}"))?;
        let cl: BigInt = parts[1]
            .strip_suffix("*L")
            .ok_or("missing *L")?
            .trim()
            .parse()
            .map_err(|e| format!("bad cl: {e}"))?;
        let cm: BigInt = parts[2]
            .strip_suffix("*M")
            .ok_or("missing *M")?
            .trim()
            .parse()
            .map_err(|e| format!("bad cm: {e}"))?;
        Ok(LinearForm { cl, cm, c0 })
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut term = |out: &mut fmt::Formatter<'_>, c: &BigInt, sym: &str| -> fmt::Result {
            if c.is_zero() {
                return Ok(());
            }
            if first {
                first = false;
                if *c == BigInt::one() && !sym.is_empty() {
                    write!(out, "{sym}")?;
                } else if *c == -BigInt::one() && !sym.is_empty() {
                    write!(out, "-{sym}")?;
                } else if sym.is_empty() {
                    write!(out, "{c}")?;
                } else {
                    write!(out, "{c}{sym}")?;
                }
            } else if c.is_negative() {
                let a = -c;
                if a.is_one() && !sym.is_empty() {
                    write!(out, " - {sym}")?;
                } else if sym.is_empty() {
                    write!(out, " - {a}")?;
                } else {
                    write!(out, " - {a}{sym}")?;
                }
            } else if c.is_one() && !sym.is_empty() {
                write!(out, " + {sym}")?;
            } else if sym.is_empty() {
                write!(out, " + {c}")?;
            } else {
                write!(out, " + {c}{sym}")?;
            }
            Ok(())
        };
        term(out, &self.cl, "L")?;
        term(out, &self.cm, "M")?;
        term(out, &self.c0, "")?;
        if first {
            write!(out, "0")?;
        }
        Ok(())
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat2};

    #[test]
    fn canonicalization_divides_gcd_and_fixes_sign() {
        // -2λ + 1  ->  form 2λ - 1 with scale -1
        let f = Affine::new(rat(-2), rat(0), rat(1));
        let (form, scale) = LinearForm::from_affine(&f).unwrap();
        assert_eq!(form.cl, BigInt::from(2));
        assert_eq!(form.c0, BigInt::from(-1));
        assert_eq!(scale, rat(-1));
    }

    #[test]
    fn proportional_forms_share_a_key() {
        let f = Affine::new(rat2(1, 2), rat2(1, 2), rat(-1));
        let g = Affine::new(rat(3), rat(3), rat(-6));
        let (kf, sf) = LinearForm::from_affine(&f).unwrap();
        let (kg, sg) = LinearForm::from_affine(&g).unwrap();
        assert_eq!(kf, kg);
        assert_eq!(sf, rat2(1, 2));
        assert_eq!(sg, rat(3));
    }

    #[test]
    fn schema_round_trip() {
        let f = Affine::new(rat(2), rat(0), rat(-1));
        let (form, _) = LinearForm::from_affine(&f).unwrap();
        let s = form.schema_string();
        assert_eq!(LinearForm::parse_schema(&s).unwrap(), form);
    }
}
