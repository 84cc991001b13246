//! Involutions realizing each symmetric pair case on a concrete model:
//! the eigenspace split, the projections, and the embedded model(s) of the
//! anti-fixed part with correctly rescaled pairings.

use super::{realize_kind, JordanError, ModelKind, Realization};
use crate::catalog::{jts_lookup, Family, Section, SymmetricPairCase};
use crate::exactnum::{rat, rat2, Rational};
use crate::partitions::Partition;
use crate::poly::SparsePoly;
use num_traits::{One, Zero};

/// A sub triple system in its own model, with the linear embedding into
/// ambient coordinates and the extraction map reading the anti-fixed
/// component of an ambient element.
#[derive(Clone, Debug)]
pub struct SubEmbed {
    pub real: Realization,
    /// ambient_nvars x sub_nvars
    pub embed: Vec<Vec<Rational>>,
    /// sub_nvars x ambient_nvars; extract ∘ embed = id and
    /// extract ∘ proj1 = 0
    pub extract: Vec<Vec<Rational>>,
}

impl SubEmbed {
    /// The sub coordinates as linear polynomials in ambient variables.
    pub fn extract_subs(&self, ambient_nvars: usize) -> Vec<SparsePoly> {
        self.extract
            .iter()
            .map(|row| SparsePoly::linear(ambient_nvars, row))
            .collect()
    }

    /// Δ_m of the sub model, as a polynomial on the ambient space.
    pub fn delta_ambient(&self, m: &Partition, ambient_nvars: usize) -> SparsePoly {
        self.real.delta(m).substitute(&self.extract_subs(ambient_nvars))
    }

    /// det of the sub model on the ambient space.
    pub fn det_ambient(&self, ambient_nvars: usize) -> SparsePoly {
        self.real
            .det()
            .clone()
            .substitute(&self.extract_subs(ambient_nvars))
    }

    /// Maps a sub coordinate vector into ambient coordinates.
    pub fn embed_vec(&self, v: &[Rational]) -> Vec<Rational> {
        self.embed
            .iter()
            .map(|row| row.iter().zip(v).map(|(c, x)| c * x).sum())
            .collect()
    }
}

#[derive(Clone, Debug)]
pub enum SubSide {
    Simple(SubEmbed),
    NonSimple { s11: SubEmbed, s22: SubEmbed },
}

/// An instantiated involution on an ambient realization.
#[derive(Clone, Debug)]
pub struct SplitData {
    pub case: SymmetricPairCase,
    pub ambient: Realization,
    /// matrix of the involution on coordinates
    pub sigma: Vec<Vec<Rational>>,
    pub sub: SubSide,
}

impl SplitData {
    /// Projection onto the anti-fixed part, (1 - σ)/2, as substitution
    /// polynomials.
    pub fn proj2_subs(&self) -> Vec<SparsePoly> {
        let n = self.ambient.nvars;
        (0..n)
            .map(|alpha| {
                let mut coeffs = vec![Rational::zero(); n];
                for (beta, c) in coeffs.iter_mut().enumerate() {
                    let mut v = -&self.sigma[alpha][beta];
                    if alpha == beta {
                        v += Rational::one();
                    }
                    *c = v / rat(2);
                }
                SparsePoly::linear(n, &coeffs)
            })
            .collect()
    }

    /// Restriction of a polynomial to the anti-fixed part (the fixed
    /// coordinates set to zero).
    pub fn restrict_to_p2(&self, f: &SparsePoly) -> SparsePoly {
        f.substitute(&self.proj2_subs())
    }

    pub fn sub_simple(&self) -> &SubEmbed {
        match &self.sub {
            SubSide::Simple(s) => s,
            _ => panic!("case has a non-simple anti-fixed part"),
        }
    }

    pub fn sub_pair(&self) -> (&SubEmbed, &SubEmbed) {
        match &self.sub {
            SubSide::NonSimple { s11, s22 } => (s11, s22),
            _ => panic!("case has a simple anti-fixed part"),
        }
    }

    /// Highest-weight vector of the labelled component of polynomials on
    /// the anti-fixed part, as an ambient polynomial.
    pub fn highest_weight_vector(&self, k: &Partition, l: Option<&Partition>) -> SparsePoly {
        let n = self.ambient.nvars;
        match (&self.sub, l) {
            (SubSide::Simple(s), None) => s.delta_ambient(k, n),
            (SubSide::NonSimple { s11, s22 }, Some(l)) => {
                s11.delta_ambient(k, n).mul(&s22.delta_ambient(l, n))
            }
            _ => panic!("partition arguments do not match the case shape"),
        }
    }
}

fn identity_embed(ambient_n: usize, map: &[(usize, Vec<(usize, Rational)>)]) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    // map: sub index -> list of (ambient index, coefficient) giving the
    // embedded basis vector; extraction is the pairing-dual read-back,
    // provided separately by callers when not the plain transpose.
    let sub_n = map.len();
    let mut embed = vec![vec![Rational::zero(); sub_n]; ambient_n];
    for (sub_idx, cols) in map {
        for (amb_idx, c) in cols {
            embed[*amb_idx][*sub_idx] = c.clone();
        }
    }
    let extract = vec![vec![Rational::zero(); ambient_n]; sub_n];
    (embed, extract)
}

fn diag_sigma(signs: &[i64]) -> Vec<Vec<Rational>> {
    let n = signs.len();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (i, &s) in signs.iter().enumerate() {
        m[i][i] = rat(s);
    }
    m
}

fn mat_index(s: usize, i: usize, j: usize) -> usize {
    i * s + j
}

fn sym_index(r: usize, i: usize, j: usize) -> usize {
    assert!(i <= j);
    i * r - i * (i + 1) / 2 + j
}

fn alt_index(s: usize, i: usize, j: usize) -> usize {
    assert!(i < j);
    i * s - i * (i + 1) / 2 - i + (j - 1)
}

fn realize_model(kind: ModelKind) -> Realization {
    let family = match kind {
        ModelKind::Mat { q, s } => Family::MatQS { q: q as u32, s: s as u32 },
        ModelKind::Sym { r } => Family::Sym { r: r as u32 },
        ModelKind::Alt { s } => Family::Alt { s: s as u32 },
        ModelKind::Quad { n } => Family::Cn { n: n as u32 },
    };
    realize_kind(jts_lookup(family).expect("valid sub model"), kind)
}

/// Builds the coordinate-level involution data for a realizable case.
pub fn split_involution(case: &SymmetricPairCase) -> Result<SplitData, JordanError> {
    if !case.oracle_realizable {
        return Err(JordanError::NotRealizable);
    }
    let ambient = super::realize(&case.jts)?;
    let n = ambient.nvars;
    let p = case.params.clone();
    match (case.section, case.case_id) {
        (Section::Easy4, 1) => {
            let (q, sp, spp) = (p[0] as usize, p[1] as usize, p[2] as usize);
            let s = sp + spp;
            let mut signs = vec![1i64; n];
            for i in 0..q {
                for j in sp..s {
                    signs[mat_index(s, i, j)] = -1;
                }
            }
            let sub_real = realize_model(ModelKind::Mat { q, s: spp });
            let mut map = Vec::new();
            for i in 0..q {
                for j in 0..spp {
                    map.push((
                        mat_index(spp, i, j),
                        vec![(mat_index(s, i, sp + j), Rational::one())],
                    ));
                }
            }
            let (embed, mut extract) = identity_embed(n, &map);
            for (sub_idx, cols) in &map {
                for (amb_idx, c) in cols {
                    extract[*sub_idx][*amb_idx] = c.clone();
                }
            }
            Ok(SplitData {
                case: case.clone(),
                ambient,
                sigma: diag_sigma(&signs),
                sub: SubSide::Simple(SubEmbed { real: sub_real, embed, extract }),
            })
        }
        (Section::Easy4, 2) | (Section::Easy4, 3) => {
            let s = p[0] as usize;
            // D = diag(1,...,1,-1); case 2 uses σ = D·D conjugation with the
            // off-column anti-fixed, case 3 the negated version
            let case2 = case.case_id == 2;
            let mut signs = vec![0i64; n];
            for i in 0..s {
                for j in (i + 1)..s {
                    let d = if j == s - 1 { -1 } else { 1 };
                    signs[alt_index(s, i, j)] = if case2 { d } else { -d };
                }
            }
            let sub = if case2 {
                // anti-fixed part: last column, model M(s-1, 1)
                let sub_real = realize_model(ModelKind::Mat { q: s - 1, s: 1 });
                let mut map = Vec::new();
                for i in 0..(s - 1) {
                    map.push((i, vec![(alt_index(s, i, s - 1), Rational::one())]));
                }
                let (embed, mut extract) = identity_embed(n, &map);
                for (sub_idx, cols) in &map {
                    for (amb_idx, c) in cols {
                        extract[*sub_idx][*amb_idx] = c.clone();
                    }
                }
                SubEmbed { real: sub_real, embed, extract }
            } else {
                // anti-fixed part: leading Alt(s-1)
                let sub_real = realize_model(ModelKind::Alt { s: s - 1 });
                let mut map = Vec::new();
                for i in 0..(s - 1) {
                    for j in (i + 1)..(s - 1) {
                        map.push((
                            alt_index(s - 1, i, j),
                            vec![(alt_index(s, i, j), Rational::one())],
                        ));
                    }
                }
                let (embed, mut extract) = identity_embed(n, &map);
                for (sub_idx, cols) in &map {
                    for (amb_idx, c) in cols {
                        extract[*sub_idx][*amb_idx] = c.clone();
                    }
                }
                SubEmbed { real: sub_real, embed, extract }
            };
            Ok(SplitData {
                case: case.clone(),
                ambient,
                sigma: diag_sigma(&signs),
                sub: SubSide::Simple(sub),
            })
        }
        (Section::NonSimple5, 1) => {
            // hyperbolic model; the anti-fixed part is the two frame lines
            let mut signs = vec![1i64; n];
            signs[0] = -1;
            signs[1] = -1;
            let line = |idx: usize| {
                let sub_real = realize_model(ModelKind::Quad { n: 1 });
                let map = vec![(0usize, vec![(idx, Rational::one())])];
                let (embed, mut extract) = identity_embed(n, &map);
                extract[0][idx] = Rational::one();
                SubEmbed { real: sub_real, embed, extract }
            };
            Ok(SplitData {
                case: case.clone(),
                ambient,
                sigma: diag_sigma(&signs),
                sub: SubSide::NonSimple { s11: line(0), s22: line(1) },
            })
        }
        (Section::NonSimple5, 2) => {
            let (rp, rpp) = (p[0] as usize, p[1] as usize);
            let r = rp + rpp;
            let d = |i: usize| if i < rp { 1i64 } else { -1 };
            let mut signs = vec![0i64; n];
            for i in 0..r {
                for j in i..r {
                    signs[sym_index(r, i, j)] = -(d(i) * d(j));
                }
            }
            let corner = |off: usize, size: usize| {
                let sub_real = realize_model(ModelKind::Sym { r: size });
                let mut map = Vec::new();
                for i in 0..size {
                    for j in i..size {
                        map.push((
                            sym_index(size, i, j),
                            vec![(sym_index(r, off + i, off + j), Rational::one())],
                        ));
                    }
                }
                let (embed, mut extract) = identity_embed(n, &map);
                for (sub_idx, cols) in &map {
                    for (amb_idx, c) in cols {
                        extract[*sub_idx][*amb_idx] = c.clone();
                    }
                }
                SubEmbed { real: sub_real, embed, extract }
            };
            Ok(SplitData {
                case: case.clone(),
                ambient,
                sigma: diag_sigma(&signs),
                sub: SubSide::NonSimple { s11: corner(0, rp), s22: corner(rp, rpp) },
            })
        }
        (Section::NonSimple5, 3) => {
            let (qp, qpp, sp, spp) =
                (p[0] as usize, p[1] as usize, p[2] as usize, p[3] as usize);
            let (q, s) = (qp + qpp, sp + spp);
            let dq = |i: usize| if i < qp { 1i64 } else { -1 };
            let ds = |j: usize| if j < sp { -1i64 } else { 1 };
            let mut signs = vec![0i64; n];
            for i in 0..q {
                for j in 0..s {
                    signs[mat_index(s, i, j)] = dq(i) * ds(j);
                }
            }
            let block = |ri: usize, cj: usize, h: usize, w: usize| {
                let sub_real = realize_model(ModelKind::Mat { q: h, s: w });
                let mut map = Vec::new();
                for i in 0..h {
                    for j in 0..w {
                        map.push((
                            mat_index(w, i, j),
                            vec![(mat_index(s, ri + i, cj + j), Rational::one())],
                        ));
                    }
                }
                let (embed, mut extract) = identity_embed(n, &map);
                for (sub_idx, cols) in &map {
                    for (amb_idx, c) in cols {
                        extract[*sub_idx][*amb_idx] = c.clone();
                    }
                }
                SubEmbed { real: sub_real, embed, extract }
            };
            Ok(SplitData {
                case: case.clone(),
                ambient,
                sigma: diag_sigma(&signs),
                sub: SubSide::NonSimple {
                    s11: block(0, 0, qp, sp),
                    s22: block(qp, sp, qpp, spp),
                },
            })
        }
        (Section::NonSimple5, 4) => {
            let (sp, spp) = (p[0] as usize, p[1] as usize);
            let s = sp + spp;
            let d = |i: usize| if i < sp { 1i64 } else { -1 };
            let mut signs = vec![0i64; n];
            for i in 0..s {
                for j in (i + 1)..s {
                    signs[alt_index(s, i, j)] = -(d(i) * d(j));
                }
            }
            let corner = |off: usize, size: usize| {
                let sub_real = realize_model(ModelKind::Alt { s: size });
                let mut map = Vec::new();
                for i in 0..size {
                    for j in (i + 1)..size {
                        map.push((
                            alt_index(size, i, j),
                            vec![(alt_index(s, off + i, off + j), Rational::one())],
                        ));
                    }
                }
                let (embed, mut extract) = identity_embed(n, &map);
                for (sub_idx, cols) in &map {
                    for (amb_idx, c) in cols {
                        extract[*sub_idx][*amb_idx] = c.clone();
                    }
                }
                SubEmbed { real: sub_real, embed, extract }
            };
            Ok(SplitData {
                case: case.clone(),
                ambient,
                sigma: diag_sigma(&signs),
                sub: SubSide::NonSimple { s11: corner(0, sp), s22: corner(sp, spp) },
            })
        }
        (Section::Simple6, 1) => {
            let (nn, npp) = (p[0] as usize, p[1] as usize);
            assert_eq!(nn, n);
            if npp >= 3 {
                // anti-fixed: (u1, u2, w_3 .. w_{n''})
                let mut signs = vec![1i64; n];
                for s in signs.iter_mut().take(npp) {
                    *s = -1;
                }
                let sub_real = realize_model(ModelKind::Quad { n: npp });
                let mut map = Vec::new();
                for i in 0..npp {
                    map.push((i, vec![(i, Rational::one())]));
                }
                let (embed, mut extract) = identity_embed(n, &map);
                for (sub_idx, cols) in &map {
                    for (amb_idx, c) in cols {
                        extract[*sub_idx][*amb_idx] = c.clone();
                    }
                }
                Ok(SplitData {
                    case: case.clone(),
                    ambient,
                    sigma: diag_sigma(&signs),
                    sub: SubSide::Simple(SubEmbed { real: sub_real, embed, extract }),
                })
            } else {
                // n'' = 1: swap involution; anti-fixed line spanned by e1 - e2
                let mut sigma = vec![vec![Rational::zero(); n]; n];
                sigma[0][1] = Rational::one();
                sigma[1][0] = Rational::one();
                for i in 2..n {
                    sigma[i][i] = Rational::one();
                }
                let sub_real = realize_model(ModelKind::Quad { n: 1 });
                let mut embed = vec![vec![Rational::zero(); 1]; n];
                embed[0][0] = Rational::one();
                embed[1][0] = -Rational::one();
                let mut extract = vec![vec![Rational::zero(); n]; 1];
                extract[0][0] = rat2(1, 2);
                extract[0][1] = rat2(-1, 2);
                Ok(SplitData {
                    case: case.clone(),
                    ambient,
                    sigma,
                    sub: SubSide::Simple(SubEmbed { real: sub_real, embed, extract }),
                })
            }
        }
        (Section::Simple6, 2) => {
            let (rp, rpp) = (p[0] as usize, p[1] as usize);
            let r = rp + rpp;
            let d = |i: usize| if i < rp { 1i64 } else { -1 };
            let mut signs = vec![0i64; n];
            for i in 0..r {
                for j in i..r {
                    signs[sym_index(r, i, j)] = d(i) * d(j);
                }
            }
            let sub_real = realize_model(ModelKind::Mat { q: rp, s: rpp });
            let mut map = Vec::new();
            for i in 0..rp {
                for j in 0..rpp {
                    map.push((
                        mat_index(rpp, i, j),
                        vec![(sym_index(r, i, rp + j), Rational::one())],
                    ));
                }
            }
            let (embed, mut extract) = identity_embed(n, &map);
            for (sub_idx, cols) in &map {
                for (amb_idx, c) in cols {
                    extract[*sub_idx][*amb_idx] = c.clone();
                }
            }
            Ok(SplitData {
                case: case.clone(),
                ambient,
                sigma: diag_sigma(&signs),
                sub: SubSide::Simple(SubEmbed { real: sub_real, embed, extract }),
            })
        }
        (Section::Simple6, 3) => {
            let (sp, spp) = (p[0] as usize, p[1] as usize);
            let s = sp + spp;
            let d = |i: usize| if i < sp { 1i64 } else { -1 };
            let mut signs = vec![0i64; n];
            for i in 0..s {
                for j in (i + 1)..s {
                    signs[alt_index(s, i, j)] = d(i) * d(j);
                }
            }
            let sub_real = realize_model(ModelKind::Mat { q: sp, s: spp });
            let mut map = Vec::new();
            for i in 0..sp {
                for j in 0..spp {
                    map.push((
                        mat_index(spp, i, j),
                        vec![(alt_index(s, i, sp + j), Rational::one())],
                    ));
                }
            }
            let (embed, mut extract) = identity_embed(n, &map);
            for (sub_idx, cols) in &map {
                for (amb_idx, c) in cols {
                    extract[*sub_idx][*amb_idx] = c.clone();
                }
            }
            Ok(SplitData {
                case: case.clone(),
                ambient,
                sigma: diag_sigma(&signs),
                sub: SubSide::Simple(SubEmbed { real: sub_real, embed, extract }),
            })
        }
        (Section::Simple6, 4) | (Section::Simple6, 5) => {
            let r = p[0] as usize;
            // σ(x) = ∓ x^T: case 4 anti-fixes the symmetric part, case 5
            // the alternating part
            let neg = case.case_id == 4;
            let mut sigma = vec![vec![Rational::zero(); n]; n];
            for i in 0..r {
                for j in 0..r {
                    let v = if neg { -Rational::one() } else { Rational::one() };
                    sigma[mat_index(r, i, j)][mat_index(r, j, i)] = v;
                }
            }
            let sub = if neg {
                let sub_real = realize_model(ModelKind::Sym { r });
                let mut embed = vec![vec![Rational::zero(); sub_real.nvars]; n];
                let mut extract = vec![vec![Rational::zero(); n]; sub_real.nvars];
                for i in 0..r {
                    for j in i..r {
                        let sidx = sym_index(r, i, j);
                        embed[mat_index(r, i, j)][sidx] = Rational::one();
                        if i != j {
                            embed[mat_index(r, j, i)][sidx] = Rational::one();
                            extract[sidx][mat_index(r, i, j)] = rat2(1, 2);
                            extract[sidx][mat_index(r, j, i)] = rat2(1, 2);
                        } else {
                            extract[sidx][mat_index(r, i, j)] = Rational::one();
                        }
                    }
                }
                SubEmbed { real: sub_real, embed, extract }
            } else {
                let sub_real = realize_model(ModelKind::Alt { s: r });
                let mut embed = vec![vec![Rational::zero(); sub_real.nvars]; n];
                let mut extract = vec![vec![Rational::zero(); n]; sub_real.nvars];
                for i in 0..r {
                    for j in (i + 1)..r {
                        let aidx = alt_index(r, i, j);
                        embed[mat_index(r, i, j)][aidx] = Rational::one();
                        embed[mat_index(r, j, i)][aidx] = -Rational::one();
                        extract[aidx][mat_index(r, i, j)] = rat2(1, 2);
                        extract[aidx][mat_index(r, j, i)] = rat2(-1, 2);
                    }
                }
                SubEmbed { real: sub_real, embed, extract }
            };
            Ok(SplitData {
                case: case.clone(),
                ambient,
                sigma,
                sub: SubSide::Simple(sub),
            })
        }
        _ => Err(JordanError::NotRealizable),
    }
}
