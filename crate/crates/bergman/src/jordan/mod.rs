//! Concrete rational realizations of the classical simple Jordan triple
//! systems, with every structural map the closed-form verifications need:
//! frames, principal minor polynomials, triple products, the Bessel
//! operator, adjugates, and the Fischer inner product.
//!
//! Elements of a realization are coordinate vectors over an orthogonal
//! rational basis; the pairing is diagonalized with rational weights
//! rather than orthonormalized, so everything stays inside the rationals.

mod split;

pub use split::{split_involution, SplitData, SubEmbed, SubSide};

use crate::catalog::{jts_lookup, Family, SimpleJTS};
use crate::exactnum::{rat, Rational};
use crate::partitions::{GenPartition, Partition};
use crate::poly::{det_poly, pfaffian_poly, SparsePoly};
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum JordanError {
    #[error("no rational realization for the exceptional family {0}")]
    ExceptionalNotRealizable(String),
    #[error("negative determinant power outside tube type")]
    NegativePowerOutsideTube,
    #[error("adjugate unsupported for this realization")]
    UnsupportedRank,
    #[error("this case has no rational oracle realization")]
    NotRealizable,
}

/// Coordinate model backing a realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelKind {
    /// q x s complex matrices
    Mat { q: usize, s: usize },
    /// symmetric r x r matrices
    Sym { r: usize },
    /// alternating s x s matrices
    Alt { s: usize },
    /// quadratic-form model on C^n (n = 1 is the line)
    Quad { n: usize },
}

/// A simple triple system in explicit rational coordinates.
#[derive(Clone, Debug)]
pub struct Realization {
    pub jts: SimpleJTS,
    pub kind: ModelKind,
    pub nvars: usize,
    pub labels: Vec<String>,
    /// diagonal pairing weights (b_a | conj b_a)
    pub weights: Vec<Rational>,
    /// grading vector of each coordinate under the diagonal torus
    pub torus: Vec<Vec<i32>>,
    pub torus_dim: usize,
    /// Jordan frame e_1 .. e_r as coordinate vectors
    pub frame: Vec<Vec<Rational>>,
    /// leading principal minors Δ_1 .. Δ_r (Δ_r = det)
    pub minors: Vec<SparsePoly>,
    /// trailing principal minors
    pub cominors: Vec<SparsePoly>,
    /// matrix of the symmetric bilinear form (x|y) on the unit Peirce space
    pub nform: Vec<Vec<Rational>>,
    pub nform_inv: Vec<Vec<Rational>>,
}

impl Realization {
    pub fn rank(&self) -> usize {
        self.jts.r as usize
    }

    pub fn det(&self) -> &SparsePoly {
        self.minors.last().expect("rank >= 1")
    }

    pub fn frame_sum(&self) -> Vec<Rational> {
        let mut e = vec![Rational::zero(); self.nvars];
        for f in &self.frame {
            for (slot, v) in e.iter_mut().zip(f) {
                *slot += v;
            }
        }
        e
    }

    /// Δ_m = prod_k Δ_k^{m_k - m_{k+1}} for a partition m with at most r
    /// parts.
    pub fn delta(&self, m: &Partition) -> SparsePoly {
        self.delta_from(&GenPartition::from_partition(m), false)
            .expect("nonnegative partition")
            .0
    }

    /// Trailing-minor variant.
    pub fn delta_check(&self, m: &Partition) -> SparsePoly {
        self.delta_from(&GenPartition::from_partition(m), true)
            .expect("nonnegative partition")
            .0
    }

    /// General version allowing negative last parts on tube type: returns
    /// (polynomial, determinant power) with value = polynomial * det^power
    /// and power <= 0.
    pub fn delta_from(
        &self,
        m: &GenPartition,
        trailing: bool,
    ) -> Result<(SparsePoly, i64), JordanError> {
        let r = self.rank();
        assert!(m.0.len() <= r, "partition longer than rank");
        let (pos, power) = m.split_det_power();
        if power < 0 && !self.jts.tube {
            return Err(JordanError::NegativePowerOutsideTube);
        }
        let minors = if trailing { &self.cominors } else { &self.minors };
        let mut out = SparsePoly::one(self.nvars);
        let parts = pos.padded(r);
        for k in 1..=r {
            let e = parts.part(k) - parts.part(k + 1);
            if e > 0 {
                out = out.mul(&minors[k - 1].pow(e));
            }
        }
        Ok((out, power))
    }

    /// Matrix view of an element given as a coordinate vector of
    /// polynomials.  Quadratic models have no matrix view.
    fn to_matrix(&self, v: &[SparsePoly]) -> Vec<Vec<SparsePoly>> {
        let arity = v[0].arity();
        let zero = SparsePoly::zero(arity);
        match self.kind {
            ModelKind::Mat { q, s } => (0..q)
                .map(|i| (0..s).map(|j| v[i * s + j].clone()).collect())
                .collect(),
            ModelKind::Sym { r } => {
                let mut m = vec![vec![zero.clone(); r]; r];
                for i in 0..r {
                    for j in i..r {
                        let c = v[sym_index(r, i, j)].clone();
                        m[i][j] = c.clone();
                        m[j][i] = c;
                    }
                }
                m
            }
            ModelKind::Alt { s } => {
                let mut m = vec![vec![zero.clone(); s]; s];
                for i in 0..s {
                    for j in (i + 1)..s {
                        let c = v[alt_index(s, i, j)].clone();
                        m[i][j] = c.clone();
                        m[j][i] = c.neg();
                    }
                }
                m
            }
            ModelKind::Quad { .. } => panic!("no matrix view for quadratic models"),
        }
    }

    fn from_matrix(&self, m: &[Vec<SparsePoly>]) -> Vec<SparsePoly> {
        match self.kind {
            ModelKind::Mat { q, s } => {
                let mut v = Vec::with_capacity(q * s);
                for i in 0..q {
                    for j in 0..s {
                        v.push(m[i][j].clone());
                    }
                }
                v
            }
            ModelKind::Sym { r } => {
                let mut v = Vec::with_capacity(r * (r + 1) / 2);
                for i in 0..r {
                    for j in i..r {
                        debug_assert_eq!(m[i][j], m[j][i], "symmetric output expected");
                        v.push(m[i][j].clone());
                    }
                }
                v
            }
            ModelKind::Alt { s } => {
                let mut v = Vec::with_capacity(s * (s - 1) / 2);
                for i in 0..s {
                    for j in (i + 1)..s {
                        debug_assert_eq!(m[i][j], m[j][i].neg(), "alternating output expected");
                        v.push(m[i][j].clone());
                    }
                }
                v
            }
            ModelKind::Quad { .. } => panic!("no matrix view for quadratic models"),
        }
    }

    /// Triple product {x, y, z} with x, z on one side and y on the other;
    /// all three as coordinate vectors of polynomials in a common ambient
    /// polynomial ring.
    pub fn triple(
        &self,
        x: &[SparsePoly],
        y: &[SparsePoly],
        z: &[SparsePoly],
    ) -> Vec<SparsePoly> {
        match self.kind {
            ModelKind::Mat { .. } | ModelKind::Sym { .. } | ModelKind::Alt { .. } => {
                let xm = self.to_matrix(x);
                let ym = self.to_matrix(y);
                let zm = self.to_matrix(z);
                let yt = transpose(&ym);
                let a = matmul(&matmul(&xm, &yt), &zm);
                let b = matmul(&matmul(&zm, &yt), &xm);
                let sum: Vec<Vec<SparsePoly>> = a
                    .iter()
                    .zip(&b)
                    .map(|(ra, rb)| ra.iter().zip(rb).map(|(p, q)| p.add(q)).collect())
                    .collect();
                self.from_matrix(&sum)
            }
            ModelKind::Quad { n } => quad_triple(n, x, y, z),
        }
    }

    /// Jordan product x ∘ y = (1/2){x, conj e, y} on the unit Peirce space;
    /// for our rational models the conjugate of the unit frame sum is the
    /// same coordinate vector.
    pub fn jordan_product(&self, x: &[SparsePoly], y: &[SparsePoly]) -> Vec<SparsePoly> {
        let arity = x[0].arity();
        let e: Vec<SparsePoly> = self
            .frame_sum()
            .iter()
            .map(|c| SparsePoly::constant(arity, c.clone()))
            .collect();
        let t = self.triple(x, &e, y);
        t.iter().map(|p| p.scale(&crate::exactnum::rat2(1, 2))).collect()
    }

    /// The generic symbolic element: coordinate i is the variable x_i.
    pub fn generic_element(&self) -> Vec<SparsePoly> {
        (0..self.nvars).map(|i| SparsePoly::var(self.nvars, i)).collect()
    }

    /// Lifts a rational coordinate vector to constant polynomials.
    pub fn lift(&self, v: &[Rational], arity: usize) -> Vec<SparsePoly> {
        v.iter().map(|c| SparsePoly::constant(arity, c.clone())).collect()
    }

    /// Adjugate of the generic element: the gradient of the determinant
    /// normalized against the unit-Peirce bilinear form.  Defined for tube
    /// type of rank at most 3.
    pub fn adjugate(&self) -> Result<Vec<SparsePoly>, JordanError> {
        if !self.jts.tube || self.rank() > 3 {
            return Err(JordanError::UnsupportedRank);
        }
        let det = self.det();
        let grad: Vec<SparsePoly> = (0..self.nvars).map(|i| det.partial(i)).collect();
        // v = M^{-1} grad
        let mut out = Vec::with_capacity(self.nvars);
        for row in &self.nform_inv {
            let mut acc = SparsePoly::zero(self.nvars);
            for (c, g) in row.iter().zip(&grad) {
                if !c.is_zero() {
                    acc = acc.add(&g.scale(c));
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Applies the adjugate map to an explicit element (vector of
    /// polynomials) by substitution.
    pub fn adjugate_of(&self, v: &[SparsePoly]) -> Result<Vec<SparsePoly>, JordanError> {
        let adj = self.adjugate()?;
        Ok(adj.iter().map(|p| p.substitute(v)).collect())
    }

    /// (x|y) under the unit-Peirce bilinear form.
    pub fn nform_pair(&self, x: &[SparsePoly], y: &[SparsePoly]) -> SparsePoly {
        let arity = x[0].arity();
        let mut acc = SparsePoly::zero(arity);
        for (a, row) in self.nform.iter().enumerate() {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&x[a].mul(&y[b]).scale(c));
                }
            }
        }
        acc
    }

    /// Directions for a differential operator normalized against the
    /// unit-Peirce form: coordinate a maps to sum_b (M^{-1})_{ab} ∂_b.
    pub fn nform_diff_directions(&self) -> Vec<Vec<Rational>> {
        self.nform_inv.clone()
    }

    /// Applies `op(∂/∂x)` to `f` with the unit-Peirce normalization.
    pub fn apply_nform_diff(&self, op: &SparsePoly, f: &SparsePoly) -> SparsePoly {
        f.apply_diff(op, &self.nform_inv)
    }

    /// Fischer inner product of two polynomials on this realization.
    pub fn fischer(&self, f: &SparsePoly, g: &SparsePoly) -> Rational {
        f.fischer(g, &self.weights)
    }

    /// The two graded pieces of the Bessel operator: `B_λ f = snd + λ·fst`
    /// componentwise over the dual coordinates.
    pub fn bessel_parts(&self, f: &SparsePoly) -> (Vec<SparsePoly>, Vec<SparsePoly>) {
        let n = self.nvars;
        let arity = f.arity();
        assert_eq!(arity, n);
        // first-order part: e_a ∂_a f with e_a = b_a / w_a
        let mut fst = vec![SparsePoly::zero(n); n];
        for a in 0..n {
            fst[a] = f.partial(a).scale(&self.weights[a].recip());
        }
        // second-order part: (1/2) {e_a, z, e_b} ∂_a ∂_b f
        let mut snd = vec![SparsePoly::zero(n); n];
        let z = self.generic_element();
        for a in 0..n {
            let fa = f.partial(a);
            if fa.is_zero() {
                continue;
            }
            let mut ea = vec![SparsePoly::zero(n); n];
            ea[a] = SparsePoly::constant(n, self.weights[a].recip());
            for b in a..n {
                let fab = fa.partial(b);
                if fab.is_zero() {
                    continue;
                }
                let mut eb = vec![SparsePoly::zero(n); n];
                eb[b] = SparsePoly::constant(n, self.weights[b].recip());
                let q = self.triple(&ea, &z, &eb);
                let mult = if a == b { crate::exactnum::rat2(1, 2) } else { Rational::one() };
                for (slot, qq) in snd.iter_mut().zip(&q) {
                    *slot = slot.add(&qq.mul(&fab).scale(&mult));
                }
            }
        }
        (snd, fst)
    }

    /// B_λ f at a rational λ.
    pub fn bessel_at(&self, lambda: &Rational, f: &SparsePoly) -> Vec<SparsePoly> {
        let (snd, fst) = self.bessel_parts(f);
        snd.iter()
            .zip(&fst)
            .map(|(s, t)| s.add(&t.scale(lambda)))
            .collect()
    }

    /// A rational point in the symmetric cone: the unit frame sum plus a
    /// small spread perturbation, validated through positivity of every
    /// leading minor.
    pub fn omega_point(&self, salt: u64) -> Vec<Rational> {
        let mut x = self.frame_sum();
        for (i, slot) in x.iter_mut().enumerate() {
            let num = ((salt + i as u64 * 7 + 3) % 11) as i64 - 5;
            *slot += Rational::new(num.into(), (10 + i as i64).into());
        }
        loop {
            let ok = self.minors.iter().all(|m| m.eval(&x) > Rational::zero());
            if ok {
                return x;
            }
            // contract toward the frame sum until inside the cone
            let e = self.frame_sum();
            for (slot, ei) in x.iter_mut().zip(&e) {
                *slot = (&*slot + ei) / rat(2);
                // exact midpoint; terminates because the cone is open around e
            }
        }
    }
}

fn transpose(m: &[Vec<SparsePoly>]) -> Vec<Vec<SparsePoly>> {
    let rows = m.len();
    let cols = m[0].len();
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

fn matmul(a: &[Vec<SparsePoly>], b: &[Vec<SparsePoly>]) -> Vec<Vec<SparsePoly>> {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    let arity = a[0][0].arity();
    let mut out = vec![vec![SparsePoly::zero(arity); m]; n];
    for i in 0..n {
        for (l, brow) in b.iter().enumerate().take(k) {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if brow[j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&a[i][l].mul(&brow[j]));
            }
        }
    }
    out
}

fn sym_index(r: usize, i: usize, j: usize) -> usize {
    assert!(i <= j && j < r);
    // row-major over the upper triangle including the diagonal
    i * r - i * (i + 1) / 2 + j
}

fn alt_index(s: usize, i: usize, j: usize) -> usize {
    assert!(i < j && j < s);
    i * s - i * (i + 1) / 2 - i + (j - 1)
}

/// Triple product in the quadratic-form model, via the Jordan algebra of
/// the norm N(u) = u_1 u_2 - sum_{i>2} u_i^2 (n >= 3) or N(u) = u_1
/// (n = 1).
fn quad_triple(n: usize, x: &[SparsePoly], y: &[SparsePoly], z: &[SparsePoly]) -> Vec<SparsePoly> {
    let arity = x[0].arity();
    if n == 1 {
        return vec![x[0].mul(&y[0]).mul(&z[0]).scale(&rat(2))];
    }
    let trace = |v: &[SparsePoly]| v[0].add(&v[1]);
    let bform = |u: &[SparsePoly], v: &[SparsePoly]| {
        let mut acc = u[0].mul(&v[1]).add(&u[1].mul(&v[0]));
        for i in 2..n {
            acc = acc.sub(&u[i].mul(&v[i]).scale(&rat(2)));
        }
        acc
    };
    let half = crate::exactnum::rat2(1, 2);
    let prod = |u: &[SparsePoly], v: &[SparsePoly]| -> Vec<SparsePoly> {
        let tu = trace(u);
        let tv = trace(v);
        let b = bform(u, v);
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut t = tu.mul(&v[i]).add(&tv.mul(&u[i]));
            if i < 2 {
                t = t.sub(&b);
            }
            out.push(t.scale(&half));
        }
        out
    };
    // {x,y,z} = 2( (x∘y)∘z + (z∘y)∘x − (x∘z)∘y )
    let xy = prod(x, y);
    let zy = prod(z, y);
    let xz = prod(x, z);
    let mut out = Vec::with_capacity(n);
    let t1 = prod(&xy, z);
    let t2 = prod(&zy, x);
    let t3 = prod(&xz, y);
    for i in 0..n {
        out.push(t1[i].add(&t2[i]).sub(&t3[i]).scale(&rat(2)));
    }
    let _ = arity;
    out
}

fn invert_matrix(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&row| !a[row][col].is_zero())
            .expect("nonsingular pairing matrix");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].recip();
        for j in 0..n {
            a[col][j] *= &scale;
            inv[col][j] *= &scale;
        }
        for row in 0..n {
            if row != col && !a[row][col].is_zero() {
                let f = a[row][col].clone();
                for j in 0..n {
                    let sub_a = &a[col][j] * &f;
                    let sub_i = &inv[col][j] * &f;
                    a[row][j] -= sub_a;
                    inv[row][j] -= sub_i;
                }
            }
        }
    }
    inv
}

/// Builds the rational realization of a simple family member.
pub fn realize(jts: &SimpleJTS) -> Result<Realization, JordanError> {
    let kind = match jts.family {
        Family::MatQS { q, s } => ModelKind::Mat {
            q: q as usize,
            s: s as usize,
        },
        Family::Sym { r } => ModelKind::Sym { r: r as usize },
        Family::Alt { s } => ModelKind::Alt { s: s as usize },
        Family::Cn { n } => ModelKind::Quad { n: n as usize },
        Family::HermO3 => {
            return Err(JordanError::ExceptionalNotRealizable("Herm(3,O)".into()))
        }
        Family::MatO12 => {
            return Err(JordanError::ExceptionalNotRealizable("M(1,2;O)".into()))
        }
    };
    Ok(realize_kind(jts.clone(), kind))
}

pub fn realize_family(family: Family) -> Result<Realization, JordanError> {
    let jts = jts_lookup(family).map_err(|_| JordanError::NotRealizable)?;
    realize(&jts)
}

fn realize_kind(jts: SimpleJTS, kind: ModelKind) -> Realization {
    let one = Rational::one();
    let two = rat(2);
    let (nvars, labels, weights, torus, torus_dim, frame): (
        usize,
        Vec<String>,
        Vec<Rational>,
        Vec<Vec<i32>>,
        usize,
        Vec<Vec<Rational>>,
    ) = match kind {
        ModelKind::Mat { q, s } => {
            let n = q * s;
            let mut labels = Vec::with_capacity(n);
            let mut torus = Vec::with_capacity(n);
            for i in 0..q {
                for j in 0..s {
                    labels.push(format!("x{}{}", i + 1, j + 1));
                    let mut t = vec![0i32; q + s];
                    t[i] = 1;
                    t[q + j] = 1;
                    torus.push(t);
                }
            }
            let r = q.min(s);
            let mut frame = Vec::with_capacity(r);
            for i in 0..r {
                let mut e = vec![Rational::zero(); n];
                e[i * s + i] = one.clone();
                frame.push(e);
            }
            (n, labels, vec![one.clone(); n], torus, q + s, frame)
        }
        ModelKind::Sym { r } => {
            let n = r * (r + 1) / 2;
            let mut labels = Vec::with_capacity(n);
            let mut weights = Vec::with_capacity(n);
            let mut torus = Vec::with_capacity(n);
            for i in 0..r {
                for j in i..r {
                    labels.push(format!("x{}{}", i + 1, j + 1));
                    weights.push(if i == j { one.clone() } else { two.clone() });
                    let mut t = vec![0i32; r];
                    t[i] += 1;
                    t[j] += 1;
                    torus.push(t);
                }
            }
            let mut frame = Vec::with_capacity(r);
            for i in 0..r {
                let mut e = vec![Rational::zero(); n];
                e[sym_index(r, i, i)] = one.clone();
                frame.push(e);
            }
            (n, labels, weights, torus, r, frame)
        }
        ModelKind::Alt { s } => {
            let n = s * (s - 1) / 2;
            let mut labels = Vec::with_capacity(n);
            let mut torus = Vec::with_capacity(n);
            for i in 0..s {
                for j in (i + 1)..s {
                    labels.push(format!("x{}{}", i + 1, j + 1));
                    let mut t = vec![0i32; s];
                    t[i] += 1;
                    t[j] += 1;
                    torus.push(t);
                }
            }
            let r = s / 2;
            let mut frame = Vec::with_capacity(r);
            for i in 0..r {
                let mut e = vec![Rational::zero(); n];
                e[alt_index(s, 2 * i, 2 * i + 1)] = one.clone();
                frame.push(e);
            }
            (n, labels, vec![one.clone(); n], torus, s, frame)
        }
        ModelKind::Quad { n } => {
            if n == 1 {
                (
                    1,
                    vec!["u1".into()],
                    vec![one.clone()],
                    vec![vec![1]],
                    1,
                    vec![vec![one.clone()]],
                )
            } else {
                let mut labels = vec!["u1".into(), "u2".into()];
                let mut weights = vec![one.clone(), one.clone()];
                let mut torus = vec![vec![1], vec![-1]];
                for i in 2..n {
                    labels.push(format!("w{}", i + 1));
                    weights.push(two.clone());
                    torus.push(vec![0]);
                }
                let mut e1 = vec![Rational::zero(); n];
                e1[0] = one.clone();
                let mut e2 = vec![Rational::zero(); n];
                e2[1] = one.clone();
                (n, labels, weights, torus, 1, vec![e1, e2])
            }
        }
    };

    let minors = build_minors(kind, nvars, false);
    let cominors = build_minors(kind, nvars, true);

    let mut real = Realization {
        jts,
        kind,
        nvars,
        labels,
        weights,
        torus,
        torus_dim,
        frame,
        minors,
        cominors,
        nform: Vec::new(),
        nform_inv: Vec::new(),
    };
    let nform = build_nform(&real);
    real.nform_inv = invert_matrix(&nform);
    real.nform = nform;
    real
}

fn build_minors(kind: ModelKind, nvars: usize, trailing: bool) -> Vec<SparsePoly> {
    match kind {
        ModelKind::Mat { q, s } => {
            let r = q.min(s);
            (1..=r)
                .map(|k| {
                    let mat: Vec<Vec<SparsePoly>> = (0..k)
                        .map(|i| {
                            (0..k)
                                .map(|j| {
                                    let (ri, cj) = if trailing {
                                        (q - k + i, s - k + j)
                                    } else {
                                        (i, j)
                                    };
                                    SparsePoly::var(nvars, ri * s + cj)
                                })
                                .collect()
                        })
                        .collect();
                    det_poly(&mat)
                })
                .collect()
        }
        ModelKind::Sym { r } => (1..=r)
            .map(|k| {
                let mat: Vec<Vec<SparsePoly>> = (0..k)
                    .map(|i| {
                        (0..k)
                            .map(|j| {
                                let (a, b) = if trailing {
                                    (r - k + i, r - k + j)
                                } else {
                                    (i, j)
                                };
                                let (a, b) = if a <= b { (a, b) } else { (b, a) };
                                SparsePoly::var(nvars, sym_index(r, a, b))
                            })
                            .collect()
                    })
                    .collect();
                det_poly(&mat)
            })
            .collect(),
        ModelKind::Alt { s } => {
            let r = s / 2;
            (1..=r)
                .map(|k| {
                    let m = 2 * k;
                    let mat: Vec<Vec<SparsePoly>> = (0..m)
                        .map(|i| {
                            (0..m)
                                .map(|j| {
                                    let (a, b) = if trailing {
                                        (s - m + i, s - m + j)
                                    } else {
                                        (i, j)
                                    };
                                    if a < b {
                                        SparsePoly::var(nvars, alt_index(s, a, b))
                                    } else if a > b {
                                        SparsePoly::var(nvars, alt_index(s, b, a)).neg()
                                    } else {
                                        SparsePoly::zero(nvars)
                                    }
                                })
                                .collect()
                        })
                        .collect();
                    pfaffian_poly(&mat)
                })
                .collect()
        }
        ModelKind::Quad { n } => {
            if n == 1 {
                vec![SparsePoly::var(1, 0)]
            } else {
                let norm = {
                    let mut p = SparsePoly::var(n, 0).mul(&SparsePoly::var(n, 1));
                    for i in 2..n {
                        p = p.sub(&SparsePoly::var(n, i).pow(2));
                    }
                    p
                };
                let lin = if trailing {
                    SparsePoly::var(n, 1)
                } else {
                    SparsePoly::var(n, 0)
                };
                vec![lin, norm]
            }
        }
    }
}

fn build_nform(real: &Realization) -> Vec<Vec<Rational>> {
    let n = real.nvars;
    // (x|y)_unit = (x | Q(conj e) y), with Q(w)y = (1/2){w, y, w}
    let e = real.frame_sum();
    let e_poly = real.lift(&e, n);
    let mut m = vec![vec![Rational::zero(); n]; n];
    for b in 0..n {
        let mut eb = vec![SparsePoly::zero(n); n];
        eb[b] = SparsePoly::one(n);
        let q = real.triple(&e_poly, &eb, &e_poly);
        for (a, row) in m.iter_mut().enumerate() {
            // (b_a | (1/2){e, b_b, e}) = w_a * coeff_a
            let half = crate::exactnum::rat2(1, 2);
            let c = q[a]
                .coeff(&vec![0u16; n])
                * &half
                * &real.weights[a];
            row[b] = c;
        }
    }
    m
}

#[cfg(test)]
mod tests;
