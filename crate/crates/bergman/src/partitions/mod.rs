//! Partition combinatorics: the pole-bound functions phi0/phi1/phi2,
//! enumeration of K-type labels by degree, and Littlewood-Richardson
//! predicates and coefficients for unitary groups.

mod lr;

pub use lr::{lr_coefficient, lr_necessary, weyl_dim_gl};

use serde::{Deserialize, Serialize};
use std::fmt;

/// Weakly decreasing tuple of nonnegative integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {parts:?}"
        );
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn zeros(len: usize) -> Self {
        Partition(vec![0; len])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Σ parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part at 1-based index `j`; zero beyond the stored length.
    pub fn part(&self, j: usize) -> u32 {
        assert!(j >= 1, "parts are 1-indexed");
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&p| p == 0)
    }

    /// Number of nonzero parts.
    pub fn nonzero_len(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// Same parts padded or truncated (only of zeros) to length `len`.
    pub fn padded(&self, len: usize) -> Partition {
        let mut v = self.0.clone();
        if v.len() > len {
            assert!(v[len..].iter().all(|&p| p == 0), "cannot truncate nonzero parts");
            v.truncate(len);
        } else {
            v.resize(len, 0);
        }
        Partition(v)
    }

    /// Componentwise `self <= other` after padding both to a common length.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        (1..=n).all(|j| self.part(j) <= other.part(j))
    }

    /// Componentwise maximum.
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition((1..=n).map(|j| self.part(j).max(other.part(j))).collect())
    }

    /// Subtracts a constant from every part; fails if any part would go
    /// negative or the result stops being weakly decreasing.
    pub fn minus_constant(&self, a: u32) -> Option<Partition> {
        let mut v = Vec::with_capacity(self.len());
        for &p in &self.0 {
            v.push(p.checked_sub(a)?);
        }
        Some(Partition(v))
    }

    /// The constant partition (k, ..., k) of length r.
    pub fn constant(k: u32, r: usize) -> Partition {
        Partition(vec![k; r])
    }

    /// Reversed parts (m_r, ..., m_1) — only a partition when constant, so
    /// this returns the raw vector.
    pub fn reversed(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.reverse();
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(out, ",")?;
            }
            write!(out, "{p}")?;
        }
        write!(out, ")")
    }
}

/// Weakly decreasing integer tuple, possibly with negative parts; used for
/// twists by negative determinant powers on tube-type algebras.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenPartition(pub Vec<i64>);

impl GenPartition {
    pub fn new(parts: Vec<i64>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {parts:?}"
        );
        GenPartition(parts)
    }

    pub fn from_partition(p: &Partition) -> Self {
        GenPartition(p.parts().iter().map(|&x| x as i64).collect())
    }

    pub fn min_part(&self) -> i64 {
        self.0.last().copied().unwrap_or(0)
    }

    /// Splits into (nonnegative partition, determinant power) so that the
    /// tuple equals partition + power·(1,...,1).
    pub fn split_det_power(&self) -> (Partition, i64) {
        let shift = self.min_part().min(0);
        let parts = self.0.iter().map(|&p| (p - shift) as u32).collect();
        (Partition(parts), shift)
    }
}

/// All partitions of `total` into at most `len` parts, in descending
/// lexicographic order, each padded to length `len`.
pub fn hks_enumerate(len: usize, total: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(out: &mut Vec<Partition>, cur: &mut Vec<u32>, len: usize, left: u32, cap: u32) {
        if left == 0 {
            let mut v = cur.clone();
            v.resize(len, 0);
            out.push(Partition(v));
            return;
        }
        if cur.len() == len {
            return;
        }
        let hi = cap.min(left);
        let lo = left.div_ceil((len - cur.len()) as u32);
        let mut p = hi;
        while p >= lo.max(1) {
            cur.push(p);
            rec(out, cur, len, left - p, p);
            cur.pop();
            if p == 0 {
                break;
            }
            p -= 1;
        }
    }
    if len == 0 {
        if total == 0 {
            out.push(Partition::empty());
        }
        return out;
    }
    rec(&mut out, &mut cur, len, total, total);
    out
}

/// All partitions with at most `len` parts and every part at most `cap`.
pub fn partitions_under_box(len: usize, cap: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; len];
    fn rec(out: &mut Vec<Partition>, cur: &mut Vec<u32>, i: usize, max: u32) {
        if i == cur.len() {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (0..=max).rev() {
            cur[i] = p;
            rec(out, cur, i + 1, p);
        }
        cur[i] = 0;
    }
    rec(&mut out, &mut cur, 0, cap);
    out
}

/// The combined pole-bound partition for a pair of component partitions:
/// entry `a` is the minimum of `k_i + l_j` over `i + j = a + 1` with the
/// conventions `k_{r'+1} = l_{r''+1} = 0`.  Output length is r' + r''.
pub fn phi0(k: &Partition, l: &Partition) -> Partition {
    let rp = k.len();
    let rpp = l.len();
    let mut parts = Vec::with_capacity(rp + rpp);
    for a in 1..=(rp + rpp) {
        let mut best: Option<u32> = None;
        for i in 1..=(rp + 1) {
            let j = (a + 1).checked_sub(i);
            let j = match j {
                Some(j) if (1..=rpp + 1).contains(&j) => j,
                _ => continue,
            };
            let v = k.part_padded(i, rp) + l.part_padded(j, rpp);
            best = Some(best.map_or(v, |b| b.min(v)));
        }
        parts.push(best.expect("index range is never empty"));
    }
    Partition::new(parts)
}

impl Partition {
    /// 1-based part with the explicit `p_{r+1} = 0` padding convention.
    fn part_padded(&self, j: usize, r: usize) -> u32 {
        if j <= r {
            self.part(j)
        } else {
            0
        }
    }
}

/// The pole-bound partition for a single component partition, in the two
/// pairing-ratio regimes.  For `eps2 = 1` the output has length r2 with
/// entry `a = min over i < j <= r2+1, i + j = 2a + 1 of k_i + k_j`; for
/// `eps2 = 2` it has length 2·r2 with entry
/// `a = min over i <= j <= r2+1, i + j = a + 1 of floor((k_i + k_j)/2)`.
pub fn phi_eps(k: &Partition, eps2: u8) -> Partition {
    let r2 = k.len();
    match eps2 {
        1 => {
            let mut parts = Vec::with_capacity(r2);
            for a in 1..=r2 {
                let mut best: Option<u32> = None;
                for i in 1..=(r2 + 1) {
                    let target = 2 * a + 1;
                    let j = match target.checked_sub(i) {
                        Some(j) if j > i && j <= r2 + 1 => j,
                        _ => continue,
                    };
                    let v = k.part_padded(i, r2) + k.part_padded(j, r2);
                    best = Some(best.map_or(v, |b| b.min(v)));
                }
                parts.push(best.expect("pair range is never empty"));
            }
            Partition::new(parts)
        }
        2 => {
            let mut parts = Vec::with_capacity(2 * r2);
            for a in 1..=(2 * r2) {
                let mut best: Option<u32> = None;
                for i in 1..=(r2 + 1) {
                    let j = match (a + 1).checked_sub(i) {
                        Some(j) if j >= i && j <= r2 + 1 => j,
                        _ => continue,
                    };
                    let v = (k.part_padded(i, r2) + k.part_padded(j, r2)) / 2;
                    best = Some(best.map_or(v, |b| b.min(v)));
                }
                parts.push(best.expect("pair range is never empty"));
            }
            Partition::new(parts)
        }
        _ => panic!("eps2 must be 1 or 2"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi0_examples() {
        assert_eq!(
            phi0(&Partition::new(vec![2, 1]), &Partition::new(vec![1])),
            Partition::new(vec![3, 2, 1])
        );
        assert_eq!(
            phi0(&Partition::new(vec![0, 0]), &Partition::new(vec![0])),
            Partition::new(vec![0, 0, 0])
        );
        // degenerate second factor reduces to the first argument
        assert_eq!(
            phi0(&Partition::new(vec![4]), &Partition::empty()),
            Partition::new(vec![4])
        );
    }

    #[test]
    fn phi_eps_examples() {
        assert_eq!(phi_eps(&Partition::new(vec![2, 1]), 1), Partition::new(vec![3, 1]));
        assert_eq!(
            phi_eps(&Partition::new(vec![2, 1]), 2),
            Partition::new(vec![2, 1, 1, 0])
        );
    }

    #[test]
    fn phi1_rank3_closed_form() {
        // at rank 3, phi1(k) = (k1+k2, min{k1, k2+k3}, k3)
        for k1 in 0..=6u32 {
            for k2 in 0..=k1 {
                for k3 in 0..=k2 {
                    let k = Partition::new(vec![k1, k2, k3]);
                    let expected =
                        Partition::new(vec![k1 + k2, k1.min(k2 + k3), k3]);
                    assert_eq!(phi_eps(&k, 1), expected, "k = {k}");
                }
            }
        }
    }

    #[test]
    fn hks_small_lists() {
        assert_eq!(
            hks_enumerate(2, 2),
            vec![Partition::new(vec![2, 0]), Partition::new(vec![1, 1])]
        );
        assert_eq!(hks_enumerate(1, 3), vec![Partition::new(vec![3])]);
        assert_eq!(
            hks_enumerate(3, 3),
            vec![
                Partition::new(vec![3, 0, 0]),
                Partition::new(vec![2, 1, 0]),
                Partition::new(vec![1, 1, 1]),
            ]
        );
    }

    #[test]
    fn phi_outputs_are_bounded() {
        for k1 in 0..=4u32 {
            for k2 in 0..=k1 {
                let k = Partition::new(vec![k1, k2]);
                for l1 in 0..=4u32 {
                    let l = Partition::new(vec![l1]);
                    let p = phi0(&k, &l);
                    assert!(p.part(1) <= k1 + l1);
                    assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
                }
                let p1 = phi_eps(&k, 1);
                let p2 = phi_eps(&k, 2);
                assert!(p2.part(1) <= k1);
                assert!(p1.parts().windows(2).all(|w| w[0] >= w[1]));
                assert!(p2.parts().windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }
}
