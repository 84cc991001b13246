//! The symmetric pair case lists: ambient triple system, ranks of the
//! anti-fixed part, pairing ratios, and oracle realizability, one record
//! per instantiated case.

use super::{jts_lookup, CatalogError, Family, SimpleJTS};
use crate::exactnum::{rat, Rational};
use serde::Serialize;

/// Which of the four treated regimes a case belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Section {
    /// the anti-fixed part shares its full Peirce 2-space with the ambient
    Easy4,
    /// the anti-fixed part splits into two simple factors
    NonSimple5,
    /// the anti-fixed part is simple with a strictly smaller Peirce frame
    Simple6,
    /// doubled algebra with the swap involution
    Tensor8,
}

impl Section {
    pub fn label(&self) -> &'static str {
        match self {
            Section::Easy4 => "easy",
            Section::NonSimple5 => "nonsimple",
            Section::Simple6 => "simple",
            Section::Tensor8 => "tensor",
        }
    }
}

/// Ranks of the anti-fixed part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubRanks {
    Simple { r2: u32 },
    NonSimple { rp: u32, rpp: u32 },
}

impl SubRanks {
    pub fn total(&self) -> u32 {
        match self {
            SubRanks::Simple { r2 } => *r2,
            SubRanks::NonSimple { rp, rpp } => rp + rpp,
        }
    }
}

/// One instantiated symmetric pair case.
#[derive(Clone, Debug, Serialize)]
pub struct SymmetricPairCase {
    pub section: Section,
    pub case_id: u32,
    /// raw size parameters the case family was instantiated with
    pub params: Vec<u32>,
    /// ambient triple system (the single factor, for the tensor regime)
    pub jts: SimpleJTS,
    pub ranks: SubRanks,
    /// structure constant of the anti-fixed part
    pub d2: Rational,
    pub eps1: u8,
    pub eps2: u8,
    pub oracle_realizable: bool,
    /// human-readable shape, e.g. "(M(3,3), Alt(3), Sym(3))"
    pub shape: String,
}

impl SymmetricPairCase {
    pub fn r(&self) -> u32 {
        self.jts.r
    }

    pub fn d(&self) -> &Rational {
        &self.jts.d
    }

    pub fn r2(&self) -> u32 {
        match self.ranks {
            SubRanks::Simple { r2 } => r2,
            SubRanks::NonSimple { .. } => panic!("non-simple case has two ranks"),
        }
    }

    pub fn sub_ranks(&self) -> (u32, u32) {
        match self.ranks {
            SubRanks::NonSimple { rp, rpp } => (rp, rpp),
            SubRanks::Simple { .. } => panic!("simple case has a single rank"),
        }
    }

    pub fn key(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        format!("{}:{}[{}]", self.section.label(), self.case_id, params.join(","))
    }
}

/// Descriptor of a case family, for table dumps.
#[derive(Clone, Debug, Serialize)]
pub struct CaseDescriptor {
    pub section: Section,
    pub case_id: u32,
    pub shape: &'static str,
    pub params: &'static str,
    pub notes: &'static str,
}

pub fn pair_table() -> Vec<CaseDescriptor> {
    use Section::*;
    vec![
        CaseDescriptor { section: Easy4, case_id: 1, shape: "(M(q,s'+s''), M(q,s'), M(q,s''))", params: "q,s',s''", notes: "r2=min{q,s''}, d=2" },
        CaseDescriptor { section: Easy4, case_id: 2, shape: "(Alt(s), Alt(s-1), M(s-1,1))", params: "s", notes: "r2=1, d=4" },
        CaseDescriptor { section: Easy4, case_id: 3, shape: "(Alt(s), M(s-1,1), Alt(s-1))", params: "s", notes: "r2=floor((s-1)/2), d=4" },
        CaseDescriptor { section: Easy4, case_id: 4, shape: "(C^{2s}, M(1,s), M(1,s))", params: "s", notes: "r2=1, d=2s-2" },
        CaseDescriptor { section: Easy4, case_id: 5, shape: "(M(1,2;O), C^8, C^8)", params: "", notes: "r2=2, d=6" },
        CaseDescriptor { section: NonSimple5, case_id: 1, shape: "(C^{d+2}, C^d, C ⊕ C)", params: "d", notes: "(r,r',r'')=(2,1,1)" },
        CaseDescriptor { section: NonSimple5, case_id: 2, shape: "(Sym(r), M(r',r''), Sym(r') ⊕ Sym(r''))", params: "r',r''", notes: "d=1" },
        CaseDescriptor { section: NonSimple5, case_id: 3, shape: "(M(q,s), M(q',s'') ⊕ M(q'',s'), M(q',s') ⊕ M(q'',s''))", params: "q',q'',s',s''", notes: "d=2" },
        CaseDescriptor { section: NonSimple5, case_id: 4, shape: "(Alt(s), M(s',s''), Alt(s') ⊕ Alt(s''))", params: "s',s''", notes: "d=4" },
        CaseDescriptor { section: NonSimple5, case_id: 5, shape: "(Herm(3,O), M(1,2;O), C ⊕ Herm(2,O))", params: "", notes: "(3,1,2), d=8" },
        CaseDescriptor { section: NonSimple5, case_id: 6, shape: "(M(1,2;O), Alt(5), C ⊕ M(1,5))", params: "", notes: "(2,1,1), d=6" },
        CaseDescriptor { section: Simple6, case_id: 1, shape: "(C^n, C^{n'}, C^{n''})", params: "n,n''", notes: "n''>=3: (2,2,n-2,n''-2,1); n''=1: (2,1,n-2,-,2)" },
        CaseDescriptor { section: Simple6, case_id: 2, shape: "(Sym(r), Sym(r') ⊕ Sym(r''), M(r',r''))", params: "r',r''", notes: "(r,min,1,2,2)" },
        CaseDescriptor { section: Simple6, case_id: 3, shape: "(Alt(s), Alt(s') ⊕ Alt(s''), M(s',s''))", params: "s',s''", notes: "(floor(s/2),min,4,2,1)" },
        CaseDescriptor { section: Simple6, case_id: 4, shape: "(M(r,r), Alt(r), Sym(r))", params: "r", notes: "(r,r,2,1,1)" },
        CaseDescriptor { section: Simple6, case_id: 5, shape: "(M(r,r), Sym(r), Alt(r))", params: "r", notes: "(r,floor(r/2),2,4,2)" },
        CaseDescriptor { section: Simple6, case_id: 6, shape: "(Herm(3,O), M(2,6), Alt(6))", params: "", notes: "(3,3,8,4,1)" },
        CaseDescriptor { section: Simple6, case_id: 7, shape: "(Herm(3,O), Alt(6), M(2,6))", params: "", notes: "(3,2,8,2,1)" },
        CaseDescriptor { section: Simple6, case_id: 8, shape: "(Herm(3,O), C ⊕ Herm(2,O), M(1,2;O))", params: "", notes: "(3,2,8,6,1)" },
        CaseDescriptor { section: Simple6, case_id: 9, shape: "(M(1,2;O), M(2,4), M(4,2))", params: "", notes: "(2,2,6,2,1)" },
        CaseDescriptor { section: Simple6, case_id: 10, shape: "(M(1,2;O), C ⊕ M(1,5), Alt(5))", params: "", notes: "(2,2,6,4,1)" },
        CaseDescriptor { section: Tensor8, case_id: 1, shape: "(p ⊕ p, diag, antidiag)", params: "family of p", notes: "swap involution" },
    ]
}

fn realizable_jts(jts: &SimpleJTS) -> bool {
    match jts.family {
        Family::Cn { n } => n <= 8,
        Family::Sym { r } => r <= 3,
        Family::MatQS { q, s } => q * s <= 16,
        Family::Alt { s } => s <= 6,
        Family::HermO3 | Family::MatO12 => false,
    }
}

fn case(
    section: Section,
    case_id: u32,
    params: &[u32],
    jts: SimpleJTS,
    ranks: SubRanks,
    d2: Rational,
    eps1: u8,
    eps2: u8,
    shape: String,
) -> SymmetricPairCase {
    let oracle_realizable = realizable_jts(&jts)
        && !matches!(
            (section, case_id),
            (Section::Easy4, 4) | (Section::Easy4, 5)
        );
    SymmetricPairCase {
        section,
        case_id,
        params: params.to_vec(),
        jts,
        ranks,
        d2,
        eps1,
        eps2,
        oracle_realizable,
        shape,
    }
}

/// Instantiates a case family at concrete size parameters.
pub fn pair_lookup(
    section: Section,
    case_id: u32,
    params: &[u32],
) -> Result<SymmetricPairCase, CatalogError> {
    let bad = |msg: &str| CatalogError::InvalidParams(msg.into());
    match (section, case_id) {
        (Section::Easy4, 1) => {
            let [q, sp, spp] = *params else {
                return Err(bad("need q, s', s''"));
            };
            let jts = jts_lookup(Family::MatQS { q, s: sp + spp })?;
            let r2 = q.min(spp);
            Ok(case(
                section, 1, params, jts,
                SubRanks::Simple { r2 },
                rat(2),
                1, 1,
                format!("(M({q},{}), M({q},{sp}), M({q},{spp}))", sp + spp),
            ))
        }
        (Section::Easy4, 2) => {
            let [s] = *params else { return Err(bad("need s")) };
            let jts = jts_lookup(Family::Alt { s })?;
            Ok(case(
                section, 2, params, jts,
                SubRanks::Simple { r2: 1 },
                rat(8),
                1, 1,
                format!("(Alt({s}), Alt({}), M({},1))", s - 1, s - 1),
            ))
        }
        (Section::Easy4, 3) => {
            let [s] = *params else { return Err(bad("need s")) };
            let jts = jts_lookup(Family::Alt { s })?;
            Ok(case(
                section, 3, params, jts,
                SubRanks::Simple { r2: (s - 1) / 2 },
                rat(4),
                1, 1,
                format!("(Alt({s}), M({},1), Alt({}))", s - 1, s - 1),
            ))
        }
        (Section::Easy4, 4) => {
            let [s] = *params else { return Err(bad("need s")) };
            if s < 2 {
                return Err(bad("need s >= 2"));
            }
            let jts = jts_lookup(Family::Cn { n: 2 * s })?;
            Ok(case(
                section, 4, params, jts,
                SubRanks::Simple { r2: 1 },
                rat(2 * s as i64 - 2) * rat(2),
                1, 1,
                format!("(C^{}, M(1,{s}), M(1,{s}))", 2 * s),
            ))
        }
        (Section::Easy4, 5) => {
            let jts = jts_lookup(Family::MatO12)?;
            Ok(case(
                section, 5, params, jts,
                SubRanks::Simple { r2: 2 },
                rat(6),
                1, 1,
                "(M(1,2;O), C^8, C^8)".into(),
            ))
        }
        (Section::NonSimple5, 1) => {
            let [d] = *params else { return Err(bad("need d")) };
            if d < 1 {
                return Err(bad("need d >= 1"));
            }
            let jts = jts_lookup(Family::Cn { n: d + 2 })?;
            Ok(case(
                section, 1, params, jts,
                SubRanks::NonSimple { rp: 1, rpp: 1 },
                rat(d as i64),
                1, 1,
                format!("(C^{}, C^{d}, C ⊕ C)", d + 2),
            ))
        }
        (Section::NonSimple5, 2) => {
            let [rp, rpp] = *params else { return Err(bad("need r', r''")) };
            if rp == 0 || rpp == 0 {
                return Err(bad("need r', r'' >= 1"));
            }
            let jts = jts_lookup(Family::Sym { r: rp + rpp })?;
            Ok(case(
                section, 2, params, jts,
                SubRanks::NonSimple { rp, rpp },
                rat(1),
                2, 1,
                format!("(Sym({}), M({rp},{rpp}), Sym({rp}) ⊕ Sym({rpp}))", rp + rpp),
            ))
        }
        (Section::NonSimple5, 3) => {
            let [qp, qpp, sp, spp] = *params else {
                return Err(bad("need q', q'', s', s''"));
            };
            if qp.min(sp) == 0 || qpp.min(spp) == 0 {
                return Err(bad("all four block sizes must be >= 1"));
            }
            let jts = jts_lookup(Family::MatQS { q: qp + qpp, s: sp + spp })?;
            Ok(case(
                section, 3, params, jts,
                SubRanks::NonSimple { rp: qp.min(sp), rpp: qpp.min(spp) },
                rat(2),
                1, 1,
                format!(
                    "(M({},{}), M({qp},{spp}) ⊕ M({qpp},{sp}), M({qp},{sp}) ⊕ M({qpp},{spp}))",
                    qp + qpp, sp + spp
                ),
            ))
        }
        (Section::NonSimple5, 4) => {
            let [sp, spp] = *params else { return Err(bad("need s', s''")) };
            if sp < 2 || spp < 2 {
                return Err(bad("need s', s'' >= 2"));
            }
            let jts = jts_lookup(Family::Alt { s: sp + spp })?;
            Ok(case(
                section, 4, params, jts,
                SubRanks::NonSimple { rp: sp / 2, rpp: spp / 2 },
                rat(4),
                1, 1,
                format!("(Alt({}), M({sp},{spp}), Alt({sp}) ⊕ Alt({spp}))", sp + spp),
            ))
        }
        (Section::NonSimple5, 5) => {
            let jts = jts_lookup(Family::HermO3)?;
            Ok(case(
                section, 5, params, jts,
                SubRanks::NonSimple { rp: 1, rpp: 2 },
                rat(8),
                1, 1,
                "(Herm(3,O), M(1,2;O), C ⊕ Herm(2,O))".into(),
            ))
        }
        (Section::NonSimple5, 6) => {
            let jts = jts_lookup(Family::MatO12)?;
            Ok(case(
                section, 6, params, jts,
                SubRanks::NonSimple { rp: 1, rpp: 1 },
                rat(6),
                1, 1,
                "(M(1,2;O), Alt(5), C ⊕ M(1,5))".into(),
            ))
        }
        (Section::Simple6, 1) => {
            let [n, npp] = *params else { return Err(bad("need n, n''")) };
            if npp != 1 && npp < 3 {
                return Err(bad("need n'' = 1 or n'' >= 3"));
            }
            if npp + 1 > n {
                return Err(bad("need n'' < n"));
            }
            let jts = jts_lookup(Family::Cn { n })?;
            if npp >= 3 {
                Ok(case(
                    section, 1, params, jts,
                    SubRanks::Simple { r2: 2 },
                    rat(npp as i64 - 2),
                    1, 1,
                    format!("(C^{n}, C^{}, C^{npp})", n - npp),
                ))
            } else {
                let d2 = rat(2) * &jts.d; // rank 1: conventional value 2d
                Ok(case(
                    section, 1, params, jts,
                    SubRanks::Simple { r2: 1 },
                    d2,
                    1, 2,
                    format!("(C^{n}, C^{}, C)", n - 1),
                ))
            }
        }
        (Section::Simple6, 2) => {
            let [rp, rpp] = *params else { return Err(bad("need r', r''")) };
            if rp == 0 || rpp == 0 {
                return Err(bad("need r', r'' >= 1"));
            }
            let jts = jts_lookup(Family::Sym { r: rp + rpp })?;
            Ok(case(
                section, 2, params, jts,
                SubRanks::Simple { r2: rp.min(rpp) },
                rat(2),
                1, 2,
                format!("(Sym({}), Sym({rp}) ⊕ Sym({rpp}), M({rp},{rpp}))", rp + rpp),
            ))
        }
        (Section::Simple6, 3) => {
            let [sp, spp] = *params else { return Err(bad("need s', s''")) };
            if sp < 2 || spp < 2 {
                return Err(bad("need s', s'' >= 2"));
            }
            let jts = jts_lookup(Family::Alt { s: sp + spp })?;
            Ok(case(
                section, 3, params, jts,
                SubRanks::Simple { r2: sp.min(spp) },
                rat(2),
                1, 1,
                format!("(Alt({}), Alt({sp}) ⊕ Alt({spp}), M({sp},{spp}))", sp + spp),
            ))
        }
        (Section::Simple6, 4) => {
            let [r] = *params else { return Err(bad("need r")) };
            if r == 0 {
                return Err(bad("need r >= 1"));
            }
            let jts = jts_lookup(Family::MatQS { q: r, s: r })?;
            Ok(case(
                section, 4, params, jts,
                SubRanks::Simple { r2: r },
                rat(1),
                2, 1,
                format!("(M({r},{r}), Alt({r}), Sym({r}))"),
            ))
        }
        (Section::Simple6, 5) => {
            let [r] = *params else { return Err(bad("need r")) };
            if r < 2 {
                return Err(bad("need r >= 2"));
            }
            let jts = jts_lookup(Family::MatQS { q: r, s: r })?;
            Ok(case(
                section, 5, params, jts,
                SubRanks::Simple { r2: r / 2 },
                rat(4),
                1, 2,
                format!("(M({r},{r}), Sym({r}), Alt({r}))"),
            ))
        }
        (Section::Simple6, 6) => Ok(case(
            section, 6, params, jts_lookup(Family::HermO3)?,
            SubRanks::Simple { r2: 3 }, rat(4), 1, 1,
            "(Herm(3,O), M(2,6), Alt(6))".into(),
        )),
        (Section::Simple6, 7) => Ok(case(
            section, 7, params, jts_lookup(Family::HermO3)?,
            SubRanks::Simple { r2: 2 }, rat(2), 1, 1,
            "(Herm(3,O), Alt(6), M(2,6))".into(),
        )),
        (Section::Simple6, 8) => Ok(case(
            section, 8, params, jts_lookup(Family::HermO3)?,
            SubRanks::Simple { r2: 2 }, rat(6), 1, 1,
            "(Herm(3,O), C ⊕ Herm(2,O), M(1,2;O))".into(),
        )),
        (Section::Simple6, 9) => Ok(case(
            section, 9, params, jts_lookup(Family::MatO12)?,
            SubRanks::Simple { r2: 2 }, rat(2), 1, 1,
            "(M(1,2;O), M(2,4), M(4,2))".into(),
        )),
        (Section::Simple6, 10) => Ok(case(
            section, 10, params, jts_lookup(Family::MatO12)?,
            SubRanks::Simple { r2: 2 }, rat(4), 1, 1,
            "(M(1,2;O), C ⊕ M(1,5), Alt(5))".into(),
        )),
        (Section::Tensor8, 1) => {
            // params encode the factor family:
            //   [0, n] -> C^n, [1, r] -> Sym(r), [2, q, s] -> M(q,s), [3, s] -> Alt(s)
            let fam = match params {
                [0, n] => Family::Cn { n: *n },
                [1, r] => Family::Sym { r: *r },
                [2, q, s] => Family::MatQS { q: *q, s: *s },
                [3, s] => Family::Alt { s: *s },
                [4] => Family::HermO3,
                [5] => Family::MatO12,
                _ => return Err(bad("tensor factor encoding")),
            };
            let jts = jts_lookup(fam)?;
            let r2 = jts.r;
            let d2 = jts.d.clone();
            let shape = format!("({fam} ⊕ {fam}, diag, antidiag)");
            let mut c = case(
                section, 1, params, jts,
                SubRanks::Simple { r2 },
                d2,
                2, 2,
                shape,
            );
            // doubled coordinates: keep the oracle within the sparse budget
            c.oracle_realizable = c.oracle_realizable && c.jts.n <= 8;
            Ok(c)
        }
        (s, id) => Err(CatalogError::UnknownCase(s, id)),
    }
}

/// The instantiated cases exercised by the default verification grid.
pub fn default_pairs() -> Vec<SymmetricPairCase> {
    let mut out = Vec::new();
    let mut push = |s, id, params: &[u32]| {
        out.push(pair_lookup(s, id, params).expect("default case"));
    };
    use Section::*;
    push(Easy4, 1, &[2, 1, 2]);
    push(NonSimple5, 1, &[2]);
    push(NonSimple5, 1, &[3]);
    push(NonSimple5, 2, &[1, 1]);
    push(NonSimple5, 2, &[1, 2]);
    push(NonSimple5, 3, &[1, 1, 1, 1]);
    push(NonSimple5, 3, &[1, 2, 1, 2]);
    push(NonSimple5, 4, &[2, 2]);
    push(NonSimple5, 4, &[2, 4]);
    push(Simple6, 1, &[4, 3]);
    push(Simple6, 1, &[4, 1]);
    push(Simple6, 2, &[1, 1]);
    push(Simple6, 2, &[1, 2]);
    push(Simple6, 3, &[2, 2]);
    push(Simple6, 4, &[2]);
    push(Simple6, 4, &[3]);
    push(Simple6, 5, &[2]);
    push(Simple6, 5, &[4]);
    push(Tensor8, 1, &[0, 1]);
    push(Tensor8, 1, &[1, 2]);
    push(Tensor8, 1, &[2, 2, 2]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn simple6_table_rows() {
        let c4 = pair_lookup(Section::Simple6, 4, &[3]).unwrap();
        assert_eq!(c4.r(), 3);
        assert_eq!(c4.r2(), 3);
        assert_eq!(c4.d(), &rat(2));
        assert_eq!(c4.d2, rat(1));
        assert_eq!(c4.eps2, 1);

        let c5 = pair_lookup(Section::Simple6, 5, &[4]).unwrap();
        assert_eq!((c5.r(), c5.r2()), (4, 2));
        assert_eq!((c5.d().clone(), c5.d2.clone()), (rat(2), rat(4)));
        assert_eq!(c5.eps2, 2);

        let c2 = pair_lookup(Section::NonSimple5, 2, &[1, 2]).unwrap();
        assert_eq!(c2.d(), &rat(1));
        assert_eq!(c2.sub_ranks(), (1, 2));
    }

    #[test]
    fn eps2_closing_remark() {
        // ε2 = 1 forces d2 = d/2 or r2 = 2; ε2 = 2 forces d2 = 2d or r2 = 1
        for c in default_pairs() {
            if c.section != Section::Simple6 {
                continue;
            }
            let d = c.d().clone();
            let r2 = c.r2();
            if c.eps2 == 1 {
                assert!(c.d2 == d / rat(2) || r2 == 2, "{}", c.key());
            } else {
                assert!(c.d2 == rat(2) * c.d() || r2 == 1, "{}", c.key());
            }
        }
    }

    #[test]
    fn exceptional_cases_not_realizable_but_present() {
        for id in 6..=10 {
            let c = pair_lookup(Section::Simple6, id, &[]).unwrap();
            assert!(!c.oracle_realizable);
            assert!(!c.d2.is_zero());
        }
        assert!(!pair_lookup(Section::NonSimple5, 5, &[]).unwrap().oracle_realizable);
        assert!(pair_lookup(Section::Simple6, 11, &[]).is_err());
    }
}
