//! Rising factorials of affine forms.

use super::factored::FactoredRatFunc;
use super::linear_form::Affine;
use super::{rat, Rational};
use crate::partitions::Partition;

/// `(base)_m = base (base+1) ... (base+m-1)` in canonical factored form.
/// The empty product (`m = 0`) is 1.
pub fn pochhammer(base: &Affine, m: u32) -> FactoredRatFunc {
    let mut out = FactoredRatFunc::one();
    for i in 0..m {
        let shifted = base.add_const(&rat(i as i64));
        out = out.mul(&FactoredRatFunc::from_affine(&shifted, 1));
    }
    out
}

/// The rank-`r` rising factorial `prod_j (base - (d/2)(j-1))_{m_j}` for a
/// partition `m` of length at most r (trailing parts are zero and
/// contribute empty factors).
pub fn pochhammer_d(base: &Affine, m: &Partition, d: &Rational) -> FactoredRatFunc {
    let half_d = d / rat(2);
    let mut out = FactoredRatFunc::one();
    for (j, &mj) in m.parts().iter().enumerate() {
        if mj == 0 {
            continue;
        }
        let shift = -&half_d * rat(j as i64);
        out = out.mul(&pochhammer(&base.add_const(&shift), mj));
    }
    out
}

/// Numeric rising factorial `(x)_m` for a rational x.
pub fn rising_factorial(x: &Rational, m: u32) -> Rational {
    let mut acc = Rational::from_integer(1.into());
    for i in 0..m {
        acc *= x + rat(i as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat2};

    #[test]
    fn empty_product_is_one() {
        assert!(pochhammer(&Affine::lambda(), 0).is_one());
        assert!(pochhammer_d(&Affine::lambda(), &Partition::new(vec![]), &rat(2)).is_one());
    }

    #[test]
    fn lambda_squared_shift() {
        // (λ)_2 = λ(λ+1)
        let p = pochhammer(&Affine::lambda(), 2);
        assert_eq!(p.eval(&rat(3), &rat(0)).unwrap(), rat(12));
        assert_eq!(p.zeros_and_poles().len(), 2);
    }

    #[test]
    fn shifted_base_three_factors() {
        // (λ-1)_3 = (λ-1)λ(λ+1)
        let p = pochhammer(&Affine::lambda().add_const(&rat(-1)), 3);
        let q = pochhammer(&Affine::lambda().add_const(&rat(-1)), 1)
            .mul(&pochhammer(&Affine::lambda(), 2));
        assert_eq!(p, q);
    }

    #[test]
    fn pochhammer_d_examples() {
        // (λ)_{(1,0),2} = λ
        let p = pochhammer_d(&Affine::lambda(), &Partition::new(vec![1, 0]), &rat(2));
        assert_eq!(p, pochhammer(&Affine::lambda(), 1));
        // (λ)_{(2,1),2} = (λ)_2 (λ-1)_1 = λ(λ+1)(λ-1)
        let p = pochhammer_d(&Affine::lambda(), &Partition::new(vec![2, 1]), &rat(2));
        let q = pochhammer(&Affine::lambda(), 2)
            .mul(&pochhammer(&Affine::lambda().add_const(&rat(-1)), 1));
        assert_eq!(p, q);
    }

    #[test]
    fn pochhammer_d_random_points_match_direct_product() {
        // definition check on a grid of rational sample points
        let d = rat2(3, 2);
        let m = Partition::new(vec![3, 2, 2, 1]);
        let p = pochhammer_d(&Affine::lambda(), &m, &d);
        let mut samples = Vec::new();
        for num in -20..=20i64 {
            for den in [1i64, 2, 3, 4, 7] {
                samples.push(rat2(3 * num + 1, den));
                if samples.len() >= 200 {
                    break;
                }
            }
        }
        for x in samples.iter().take(200) {
            let direct: Rational = m
                .parts()
                .iter()
                .enumerate()
                .map(|(j, &mj)| rising_factorial(&(x - &d / rat(2) * rat(j as i64)), mj))
                .product();
            match p.eval(x, &rat(0)) {
                Ok(v) => assert_eq!(v, direct),
                Err(_) => assert_eq!(direct, rat(0)),
            }
        }
    }
}
