//! Exact sparse multivariate polynomials over the rationals.

use crate::exactnum::{factorial, rat, Rational};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Mono = Vec<u16>;

/// Sparse polynomial with a fixed number of variables.  No zero
/// coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    arity: usize,
    terms: BTreeMap<Mono, Rational>,
}

impl SparsePoly {
    pub fn zero(arity: usize) -> Self {
        SparsePoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: Rational) -> Self {
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            p.terms.insert(vec![0; arity], c);
        }
        p
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, Rational::one())
    }

    pub fn var(arity: usize, i: usize) -> Self {
        Self::monomial(arity, i, 1, Rational::one())
    }

    pub fn monomial(arity: usize, i: usize, e: u16, c: Rational) -> Self {
        assert!(i < arity);
        let mut p = Self::zero(arity);
        if !c.is_zero() {
            let mut m = vec![0; arity];
            m[i] = e;
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a linear polynomial from a coordinate vector.
    pub fn linear(arity: usize, coeffs: &[Rational]) -> Self {
        assert_eq!(coeffs.len(), arity);
        let mut p = Self::zero(arity);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut m = vec![0; arity];
                m[i] = 1;
                p.terms.insert(m, c.clone());
            }
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn insert_term(&mut self, m: Mono, c: Rational) {
        assert_eq!(m.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        SparsePoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_capped(other, u32::MAX)
    }

    /// Product keeping only monomials of total degree at most `cap`.
    pub fn mul_capped(&self, other: &Self, cap: u32) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity);
        for (ma, ca) in &self.terms {
            let da: u32 = ma.iter().map(|&e| e as u32).sum();
            for (mb, cb) in &other.terms {
                let db: u32 = mb.iter().map(|&e| e as u32).sum();
                if da + db > cap {
                    continue;
                }
                let m: Mono = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.insert_term(m, ca * cb);
            }
        }
        out
    }

    /// Product dropping monomials whose grading exceeds `cap` componentwise,
    /// where the grading of a monomial is the sum of per-variable weight
    /// vectors.  Gradings must be componentwise nonnegative for the pruning
    /// to be sound.
    pub fn mul_weight_capped(&self, other: &Self, weights: &[Vec<i32>], cap: &[i32]) -> Self {
        assert_eq!(self.arity, other.arity);
        let grade = |m: &Mono| -> Vec<i32> {
            let mut g = vec![0; cap.len()];
            for (i, &e) in m.iter().enumerate() {
                for (slot, w) in g.iter_mut().zip(&weights[i]) {
                    *slot += w * e as i32;
                }
            }
            g
        };
        let mut out = Self::zero(self.arity);
        for (ma, ca) in &self.terms {
            let ga = grade(ma);
            for (mb, cb) in &other.terms {
                let gb = grade(mb);
                if ga.iter().zip(&gb).zip(cap).any(|((a, b), c)| a + b > *c) {
                    continue;
                }
                let m: Mono = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.insert_term(m, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.arity);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().map(|&e| e as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().map(|&e| e as u32).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Splits into homogeneous components by total degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, SparsePoly> {
        let mut out: BTreeMap<u32, SparsePoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let d: u32 = m.iter().map(|&e| e as u32).sum();
            out.entry(d)
                .or_insert_with(|| SparsePoly::zero(self.arity))
                .insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.arity);
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes each variable by the given polynomial.
    pub fn substitute(&self, subs: &[SparsePoly]) -> SparsePoly {
        assert_eq!(subs.len(), self.arity);
        let out_arity = subs
            .first()
            .map(|s| s.arity)
            .unwrap_or(self.arity);
        let mut acc = SparsePoly::zero(out_arity);
        for (m, c) in &self.terms {
            let mut t = SparsePoly::constant(out_arity, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&subs[i].pow(e as u32));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Sets the selected variables to zero.
    pub fn zero_out(&self, kill: &[bool]) -> SparsePoly {
        assert_eq!(kill.len(), self.arity);
        let mut out = SparsePoly::zero(self.arity);
        for (m, c) in &self.terms {
            if m.iter().enumerate().all(|(i, &e)| e == 0 || !kill[i]) {
                out.insert_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn partial(&self, i: usize) -> SparsePoly {
        let mut out = SparsePoly::zero(self.arity);
        for (m, c) in &self.terms {
            if m[i] == 0 {
                continue;
            }
            let mut mm = m.clone();
            mm[i] -= 1;
            out.insert_term(mm, c * rat(m[i] as i64));
        }
        out
    }

    /// Applies the differential operator obtained from `op` by replacing
    /// coordinate `i` with the first-order operator `sum_j dirs[i][j] ∂_j`.
    /// `dirs` is the matrix of the coordinate-to-operator substitution.
    pub fn apply_diff(&self, op: &SparsePoly, dirs: &[Vec<Rational>]) -> SparsePoly {
        let mut acc = SparsePoly::zero(self.arity);
        for (m, c) in &op.terms {
            let mut t = self.clone();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    if t.is_zero() {
                        break;
                    }
                    let mut step = SparsePoly::zero(self.arity);
                    for (j, w) in dirs[i].iter().enumerate() {
                        if !w.is_zero() {
                            step = step.add(&t.partial(j).scale(w));
                        }
                    }
                    t = step;
                }
            }
            acc = acc.add(&t.scale(c));
        }
        acc
    }

    /// Exact division; `None` when the remainder is nonzero.  Uses plain
    /// lexicographic leading-term elimination.
    pub fn divide_exact(&self, divisor: &SparsePoly) -> Option<SparsePoly> {
        assert_eq!(self.arity, divisor.arity);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (lead_m, lead_c) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(self.arity);
        while !rem.is_zero() {
            let (rm, rc) = rem.terms.iter().next_back().unwrap();
            let mut q = Vec::with_capacity(self.arity);
            for (a, b) in rm.iter().zip(lead_m) {
                if a < b {
                    return None;
                }
                q.push(a - b);
            }
            let qc = rc / lead_c;
            let mut qpoly = SparsePoly::zero(self.arity);
            qpoly.terms.insert(q, qc);
            rem = rem.sub(&qpoly.mul(divisor));
            quot = quot.add(&qpoly);
        }
        Some(quot)
    }

    /// If `self == c * other` for a scalar c, returns c.  Zero `other`
    /// matches only zero `self`.
    pub fn proportionality(&self, other: &SparsePoly) -> Option<Rational> {
        if other.is_zero() {
            return self.is_zero().then(Rational::zero);
        }
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let (m0, c0) = other.terms.iter().next().unwrap();
        let mine = self.terms.get(m0)?;
        let ratio = mine / c0;
        if self == &other.scale(&ratio) {
            Some(ratio)
        } else {
            None
        }
    }

    /// Clears denominators and content: returns the primitive integer-
    /// coefficient multiple (as rationals) and ignores the scale.
    pub fn primitive_part(&self) -> SparsePoly {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            let int = c.numer() * (&lcm / c.denom());
            gcd = gcd.gcd(&int.abs());
        }
        if gcd.is_zero() {
            gcd = BigInt::one();
        }
        let factor = Rational::new(lcm, gcd);
        self.scale(&factor)
    }

    /// The Fischer weight of a monomial: `prod_i a_i! / w_i^{a_i}` for
    /// coordinate pairing weights `w`.
    pub fn fischer_weight(m: &Mono, weights: &[Rational]) -> Rational {
        let mut t = Rational::one();
        for (i, &e) in m.iter().enumerate() {
            if e > 0 {
                t *= Rational::from_integer(factorial(e as u64));
                for _ in 0..e {
                    t /= &weights[i];
                }
            }
        }
        t
    }

    /// Fischer inner product with diagonalized coordinate pairing.
    pub fn fischer(&self, other: &SparsePoly, weights: &[Rational]) -> Rational {
        assert_eq!(self.arity, other.arity);
        let (small, big) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Rational::zero();
        for (m, c) in &small.terms {
            if let Some(d) = big.terms.get(m) {
                acc += c * d * Self::fischer_weight(m, weights);
            }
        }
        acc
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(out, "-")?;
                }
                first = false;
            } else if neg {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            let is_const = m.iter().all(|&e| e == 0);
            if !abs.is_one() || is_const {
                write!(out, "{}", crate::exactnum::rational_string(&abs))?;
                if !is_const {
                    write!(out, "*")?;
                }
            }
            let mut sep = "";
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                write!(out, "{sep}x{i}")?;
                if e > 1 {
                    write!(out, "^{e}")?;
                }
                sep = "*";
            }
        }
        Ok(())
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub fn det_poly(mat: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = mat.len();
    assert!(n > 0 && mat.iter().all(|row| row.len() == n));
    let arity = mat[0][0].arity();
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = SparsePoly::zero(arity);
    // expand along the first row, recursing on column-deleted minors
    for (j, entry) in mat[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<SparsePoly>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let sub = det_poly(&minor);
        let signed = if j % 2 == 0 { sub } else { sub.neg() };
        acc = acc.add(&entry.mul(&signed));
    }
    acc
}

/// Pfaffian of an even alternating matrix of polynomials, normalized so
/// that the block-diagonal standard form has Pfaffian 1.
pub fn pfaffian_poly(mat: &[Vec<SparsePoly>]) -> SparsePoly {
    let n = mat.len();
    assert!(n % 2 == 0 && mat.iter().all(|row| row.len() == n));
    let arity = mat[0][0].arity();
    if n == 0 {
        return SparsePoly::one(arity);
    }
    if n == 2 {
        return mat[0][1].clone();
    }
    let mut acc = SparsePoly::zero(arity);
    for j in 1..n {
        if mat[0][j].is_zero() {
            continue;
        }
        let keep: Vec<usize> = (1..n).filter(|&k| k != j).collect();
        let minor: Vec<Vec<SparsePoly>> = keep
            .iter()
            .map(|&a| keep.iter().map(|&b| mat[a][b].clone()).collect())
            .collect();
        let sub = pfaffian_poly(&minor);
        let signed = if j % 2 == 1 { sub } else { sub.neg() };
        acc = acc.add(&mat[0][j].mul(&signed));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat2;

    fn x(i: usize) -> SparsePoly {
        SparsePoly::var(4, i)
    }

    #[test]
    fn ring_ops() {
        let p = x(0).add(&x(1)).mul(&x(0).sub(&x(1)));
        let q = x(0).mul(&x(0)).sub(&x(1).mul(&x(1)));
        assert_eq!(p, q);
        assert_eq!(p.total_degree(), 2);
    }

    #[test]
    fn division_and_proportionality() {
        let p = x(0).add(&x(1));
        let q = x(0).sub(&x(1));
        let prod = p.mul(&q);
        assert_eq!(prod.divide_exact(&p).unwrap(), q);
        assert!(prod.divide_exact(&x(2)).is_none());
        assert_eq!(p.scale(&rat2(3, 7)).proportionality(&p).unwrap(), rat2(3, 7));
        assert!(p.proportionality(&q).is_none());
    }

    #[test]
    fn derivative_and_diff_application() {
        // op = x0^2 applied with identity direction = ∂0^2
        let f = x(0).pow(3).mul(&x(1));
        let op = x(0).pow(2);
        let dirs: Vec<Vec<Rational>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        let got = f.apply_diff(&op, &dirs);
        assert_eq!(got, x(0).mul(&x(1)).scale(&rat(6)));
    }

    #[test]
    fn determinant_of_generic_2x2() {
        let m = vec![vec![x(0), x(1)], vec![x(2), x(3)]];
        let d = det_poly(&m);
        assert_eq!(d, x(0).mul(&x(3)).sub(&x(1).mul(&x(2))));
    }

    #[test]
    fn pfaffian_standard_form() {
        // 4x4 standard alternating block matrix has Pfaffian x01*x23 - ... ;
        // with the unit block values it is 1
        let zero = SparsePoly::zero(1);
        let one = SparsePoly::one(1);
        let m = vec![
            vec![zero.clone(), one.clone(), zero.clone(), zero.clone()],
            vec![one.neg(), zero.clone(), zero.clone(), zero.clone()],
            vec![zero.clone(), zero.clone(), zero.clone(), one.clone()],
            vec![zero.clone(), zero.clone(), one.neg(), zero.clone()],
        ];
        assert_eq!(pfaffian_poly(&m), SparsePoly::one(1));
    }

    #[test]
    fn fischer_on_monomials() {
        // <x^a, x^b> = δ a!/w^a
        let w = vec![rat(1), rat(2), rat(1), rat(1)];
        let f = x(1).pow(2);
        assert_eq!(f.fischer(&f, &w), rat2(2, 4));
        assert_eq!(x(0).fischer(&x(1), &w), rat(0));
    }
}
