//! Littlewood-Richardson coefficients by direct tableau enumeration, the
//! two necessary inequality families, and the unitary-group Weyl dimension
//! formula used as a consistency oracle.

use super::Partition;
use num_bigint::BigInt;
use num_traits::One;

/// The multiplicity of `V_n` in `V_k ⊗ V_l` for GL(s), counted as the
/// number of skew semistandard tableaux of shape n/k and weight l whose
/// reverse reading word is a lattice word.  Zero when sizes mismatch or
/// the shapes do not nest.
pub fn lr_coefficient(k: &Partition, l: &Partition, n: &Partition, s: usize) -> u64 {
    assert!(k.len() <= s && l.len() <= s && n.len() <= s, "lengths exceed s");
    if k.size() + l.size() != n.size() {
        return 0;
    }
    if !k.dominated_by(n) {
        return 0;
    }
    let k = k.padded(s);
    let n = n.padded(s);
    let l = l.padded(s);

    // Cells of the skew shape in row-major order.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for row in 0..s {
        for col in k.parts()[row]..n.parts()[row] {
            cells.push((row, col as usize));
        }
    }
    if cells.is_empty() {
        return 1; // empty tableau, weight must be zero (checked above)
    }

    // entries[row][col] for placed cells; counts[v] = multiplicity of v+1.
    let mut grid: Vec<Vec<u32>> = (0..s).map(|r| vec![0; n.parts()[r] as usize]).collect();
    let mut counts = vec![0u32; s];
    let target: Vec<u32> = l.parts().to_vec();

    fn lattice_ok(grid: &[Vec<u32>], k: &[u32], n: &[u32], s: usize) -> bool {
        // reverse reading word: each row right to left, top to bottom
        let mut seen = vec![0i64; s + 2];
        for row in 0..s {
            for col in (k[row]..n[row]).rev() {
                let v = grid[row][col as usize] as usize;
                seen[v] += 1;
                if v >= 2 && seen[v] > seen[v - 1] {
                    return false;
                }
            }
        }
        true
    }

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        counts: &mut Vec<u32>,
        target: &[u32],
        kparts: &[u32],
        nparts: &[u32],
        s: usize,
        found: &mut u64,
    ) {
        if idx == cells.len() {
            if counts.iter().zip(target).all(|(c, t)| c == t)
                && lattice_ok(grid, kparts, nparts, s)
            {
                *found += 1;
            }
            return;
        }
        let (row, col) = cells[idx];
        // weakly increasing along the row (left neighbour, if filled)
        let min_from_row = if col >= kparts[row] as usize + 1 {
            grid[row][col - 1]
        } else {
            1
        };
        // strictly increasing down the column (upper neighbour, if filled)
        let min_from_col = if row > 0
            && col < nparts[row - 1] as usize
            && (col as u32) >= kparts[row - 1]
        {
            grid[row - 1][col] + 1
        } else {
            1
        };
        let lo = min_from_row.max(min_from_col);
        for v in lo..=(s as u32) {
            if counts[(v - 1) as usize] + 1 > target[(v - 1) as usize] {
                continue;
            }
            grid[row][col] = v;
            counts[(v - 1) as usize] += 1;
            rec(idx + 1, cells, grid, counts, target, kparts, nparts, s, found);
            counts[(v - 1) as usize] -= 1;
            grid[row][col] = 0;
        }
    }

    let mut found = 0u64;
    let kparts: Vec<u32> = k.parts().to_vec();
    let nparts: Vec<u32> = n.parts().to_vec();
    rec(
        0, &cells, &mut grid, &mut counts, &target, &kparts, &nparts, s, &mut found,
    );
    found
}

/// The two inequality families that a nonzero multiplicity forces:
/// `n_{s-i-j} >= k_{s-i} + l_{s-j}` for `i, j >= 0`, `i + j < s`, and
/// `n_{i+j-1} <= k_i + l_j` for `i, j >= 1`, `i + j <= s + 1`.
pub fn lr_necessary(k: &Partition, l: &Partition, n: &Partition, s: usize) -> bool {
    assert!(k.len() <= s && l.len() <= s && n.len() <= s, "lengths exceed s");
    let kp = k.padded(s);
    let lp = l.padded(s);
    let np = n.padded(s);
    for i in 0..s {
        for j in 0..s {
            if i + j >= s {
                continue;
            }
            if np.part(s - i - j) < kp.part(s - i) + lp.part(s - j) {
                return false;
            }
        }
    }
    for i in 1..=s {
        for j in 1..=s {
            if i + j > s + 1 {
                continue;
            }
            if np.part(i + j - 1) > kp.part(i) + lp.part(j) {
                return false;
            }
        }
    }
    true
}

/// Weyl dimension formula for GL(s):
/// `dim V_m = prod_{i<j} (m_i - m_j + j - i) / (j - i)`.
pub fn weyl_dim_gl(s: usize, m: &Partition) -> BigInt {
    assert!(m.len() <= s, "partition longer than s");
    let mp = m.padded(s);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 1..=s {
        for j in (i + 1)..=s {
            let a = mp.part(i) as i64 - mp.part(j) as i64 + (j as i64 - i as i64);
            num *= BigInt::from(a);
            den *= BigInt::from(j as i64 - i as i64);
        }
    }
    &num / &den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::hks_enumerate;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn basic_coefficients() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2, 0]), 2), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1]), 2), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3, 0]), 2), 0);
        // standard multiplicity-2 example: (2,1) x (2,1) contains (3,2,1) twice
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1]), 3), 2);
    }

    #[test]
    fn necessary_conditions_hold_and_fail_as_expected() {
        assert!(lr_necessary(&p(&[]), &p(&[]), &p(&[]), 2));
        // violated at (i,j) = (1,0) in the first family: n_1 < k_1 + l_2
        assert!(!lr_necessary(&p(&[2, 0]), &p(&[2, 0]), &p(&[1, 1]), 2));
    }

    #[test]
    fn dimension_sum_identity_small() {
        // Σ_n c_{k,l}^n dim(n) = dim(k)·dim(l)
        let s = 3;
        let k = p(&[2, 1]);
        let l = p(&[1, 1]);
        let lhs: BigInt = hks_enumerate(s, k.size() + l.size())
            .iter()
            .map(|n| BigInt::from(lr_coefficient(&k, &l, n, s)) * weyl_dim_gl(s, n))
            .sum();
        let rhs = weyl_dim_gl(s, &k) * weyl_dim_gl(s, &l);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn weyl_dims() {
        assert_eq!(weyl_dim_gl(2, &p(&[1])), BigInt::from(2));
        assert_eq!(weyl_dim_gl(3, &p(&[2, 1, 0])), BigInt::from(8));
        assert_eq!(weyl_dim_gl(4, &p(&[1, 1])), BigInt::from(6));
    }
}
