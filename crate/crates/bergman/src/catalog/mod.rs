//! Classification data: the six families of simple Hermitian positive
//! Jordan triple systems with their structure constants, the symmetric
//! pair case lists of the four treated regimes, and the Wallach-set and
//! submodule predicates.

use crate::exactnum::{is_integer, rat, Rational};
use crate::partitions::Partition;
use num_traits::Zero;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown family")]
    UnknownFamily,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown case ({0:?}, {1})")]
    UnknownCase(Section, u32),
    #[error("λ = {0} is not a reducibility point for level {1}")]
    NotAReducibilityPoint(String, u32),
}

/// The six simple families.  `Cn` covers both the rank-1 line (n = 1) and
/// the rank-2 quadratic family (n >= 3); n = 2 is not simple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    Cn { n: u32 },
    Sym { r: u32 },
    MatQS { q: u32, s: u32 },
    Alt { s: u32 },
    HermO3,
    MatO12,
}

impl fmt::Display for Family {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cn { n } => write!(out, "C^{n}"),
            Family::Sym { r } => write!(out, "Sym({r})"),
            Family::MatQS { q, s } => write!(out, "M({q},{s})"),
            Family::Alt { s } => write!(out, "Alt({s})"),
            Family::HermO3 => write!(out, "Herm(3,O)"),
            Family::MatO12 => write!(out, "M(1,2;O)"),
        }
    }
}

/// A simple Jordan triple system with its structure constants
/// (n, r, d, b, p).  For rank 1 the off-diagonal multiplicity d is not
/// determined by the structure; the stored value is the convention used by
/// the surrounding formulas and `d_conventional` is set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimpleJTS {
    pub family: Family,
    /// complex dimension
    pub n: u32,
    /// rank
    pub r: u32,
    pub d: Rational,
    pub b: u32,
    pub p: u32,
    pub tube: bool,
    pub d_conventional: bool,
}

impl SimpleJTS {
    /// n/r as an exact rational; equals (d/2)(r-1) + 1 on tube type.
    pub fn n_over_r(&self) -> Rational {
        rat(self.n as i64) / rat(self.r as i64)
    }

    pub fn half_d(&self) -> Rational {
        &self.d / rat(2)
    }
}

/// Looks up the structure constants of a simple family member.
pub fn jts_lookup(family: Family) -> Result<SimpleJTS, CatalogError> {
    let entry = |n: u32, r: u32, d: i64, b: u32, p: u32, d_conventional: bool| SimpleJTS {
        family,
        n,
        r,
        d: rat(d),
        b,
        p,
        tube: b == 0,
        d_conventional,
    };
    match family {
        Family::Cn { n } => match n {
            0 | 2 => Err(CatalogError::InvalidParams(format!(
                "C^{n} is not a simple triple system"
            ))),
            1 => Ok(entry(1, 1, 2, 0, 2, true)),
            n => Ok(entry(n, 2, n as i64 - 2, 0, n, false)),
        },
        Family::Sym { r } => {
            if r == 0 {
                return Err(CatalogError::InvalidParams("Sym needs r >= 1".into()));
            }
            Ok(entry(r * (r + 1) / 2, r, 1, 0, r + 1, r == 1))
        }
        Family::MatQS { q, s } => {
            if q == 0 || s == 0 {
                return Err(CatalogError::InvalidParams("M(q,s) needs q, s >= 1".into()));
            }
            let r = q.min(s);
            Ok(entry(q * s, r, 2, q.abs_diff(s), q + s, r == 1))
        }
        Family::Alt { s } => {
            if s < 2 {
                return Err(CatalogError::InvalidParams("Alt needs s >= 2".into()));
            }
            let r = s / 2;
            let b = if s % 2 == 0 { 0 } else { 2 };
            Ok(entry(s * (s - 1) / 2, r, 4, b, 2 * (s - 1), r == 1))
        }
        Family::HermO3 => Ok(entry(27, 3, 8, 0, 18, false)),
        Family::MatO12 => Ok(entry(16, 2, 6, 4, 12, false)),
    }
}

/// Position of a parameter relative to the Wallach set
/// {0, d/2, ..., (d/2)(r-1)} ∪ ((d/2)(r-1), ∞).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WallachStratum {
    NotUnitarizable,
    /// λ = (d/2)(j-1) for this 1-based j
    DiscretePoint(u32),
    Continuous,
}

pub fn wallach_stratum(jts: &SimpleJTS, lambda: &Rational) -> WallachStratum {
    let half_d = jts.half_d();
    let edge = &half_d * rat(jts.r as i64 - 1);
    if *lambda > edge {
        return WallachStratum::Continuous;
    }
    for j in 1..=jts.r {
        if *lambda == &half_d * rat(j as i64 - 1) {
            return WallachStratum::DiscretePoint(j);
        }
    }
    WallachStratum::NotUnitarizable
}

/// Membership of the K-type labelled `m` in the level-`j` submodule at a
/// reducibility point: requires λ ∈ (d/2)(j-1) - Z_{>=0} and holds iff
/// `m_j <= (d/2)(j-1) - λ`.
pub fn submodule_member(
    jts: &SimpleJTS,
    lambda: &Rational,
    m: &Partition,
    j: u32,
) -> Result<bool, CatalogError> {
    assert!(j >= 1 && j <= jts.r, "level out of range");
    let bound = jts.half_d() * rat(j as i64 - 1) - lambda;
    if !is_integer(&bound) || bound < Rational::zero() {
        return Err(CatalogError::NotAReducibilityPoint(
            crate::exactnum::rational_string(lambda),
            j,
        ));
    }
    Ok(rat(m.part(j as usize) as i64) <= bound)
}

mod pairs;
pub use pairs::{
    default_pairs, pair_lookup, pair_table, CaseDescriptor, Section, SubRanks, SymmetricPairCase,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat2;

    #[test]
    fn table_rows() {
        let m23 = jts_lookup(Family::MatQS { q: 2, s: 3 }).unwrap();
        assert_eq!((m23.n, m23.r, m23.b, m23.p), (6, 2, 1, 5));
        assert_eq!(m23.d, rat(2));
        assert!(!m23.tube);

        let s3 = jts_lookup(Family::Sym { r: 3 }).unwrap();
        assert_eq!((s3.n, s3.r, s3.b, s3.p), (6, 3, 0, 4));
        assert_eq!(s3.d, rat(1));
        assert!(s3.tube);

        let h = jts_lookup(Family::HermO3).unwrap();
        assert_eq!((h.n, h.r, h.b, h.p), (27, 3, 0, 18));
        assert_eq!(h.d, rat(8));
    }

    #[test]
    fn structure_identities_hold_for_every_family() {
        let mut all: Vec<Family> = vec![Family::HermO3, Family::MatO12, Family::Cn { n: 1 }];
        for n in 3..=10 {
            all.push(Family::Cn { n });
        }
        for r in 1..=6 {
            all.push(Family::Sym { r });
        }
        for q in 1..=5 {
            for s in 1..=5 {
                all.push(Family::MatQS { q, s });
            }
        }
        for s in 2..=9 {
            all.push(Family::Alt { s });
        }
        for fam in all {
            let j = jts_lookup(fam).unwrap();
            // p = 2 + d(r-1) + b
            assert_eq!(
                rat(j.p as i64),
                rat(2) + &j.d * rat(j.r as i64 - 1) + rat(j.b as i64),
                "{fam}"
            );
            // n = r + (d/2) r (r-1) + b r
            assert_eq!(
                rat(j.n as i64),
                rat(j.r as i64)
                    + j.half_d() * rat(j.r as i64) * rat(j.r as i64 - 1)
                    + rat((j.b * j.r) as i64),
                "{fam}"
            );
            if j.tube {
                // p = 2n/r on tube type
                assert_eq!(rat(j.p as i64) * rat(j.r as i64), rat(2 * j.n as i64), "{fam}");
            }
        }
    }

    #[test]
    fn wallach_examples() {
        let s2 = jts_lookup(Family::Sym { r: 2 }).unwrap();
        assert_eq!(wallach_stratum(&s2, &rat2(1, 2)), WallachStratum::DiscretePoint(2));
        assert_eq!(wallach_stratum(&s2, &rat(2)), WallachStratum::Continuous);
        let m22 = jts_lookup(Family::MatQS { q: 2, s: 2 }).unwrap();
        assert_eq!(wallach_stratum(&m22, &rat(-1)), WallachStratum::NotUnitarizable);
        assert_eq!(wallach_stratum(&m22, &rat(0)), WallachStratum::DiscretePoint(1));
    }

    #[test]
    fn submodule_examples() {
        let m22 = jts_lookup(Family::MatQS { q: 2, s: 2 }).unwrap();
        assert_eq!(
            submodule_member(&m22, &rat(0), &Partition::new(vec![0, 0]), 1).unwrap(),
            true
        );
        assert_eq!(
            submodule_member(&m22, &rat(0), &Partition::new(vec![1, 0]), 1).unwrap(),
            false
        );
        let s3 = jts_lookup(Family::Sym { r: 3 }).unwrap();
        assert_eq!(
            submodule_member(&s3, &rat2(-1, 2), &Partition::new(vec![1, 1, 0]), 2).unwrap(),
            true
        );
        assert!(submodule_member(&s3, &rat2(1, 3), &Partition::new(vec![1]), 2).is_err());
    }
}
