use super::*;
use crate::catalog::{pair_lookup, Section};
use crate::exactnum::{pochhammer_d, rat2, Affine};
use crate::poly::SparsePoly;

fn all_test_realizations() -> Vec<Realization> {
    [
        Family::Sym { r: 2 },
        Family::Sym { r: 3 },
        Family::MatQS { q: 2, s: 2 },
        Family::MatQS { q: 2, s: 3 },
        Family::MatQS { q: 3, s: 3 },
        Family::Alt { s: 4 },
        Family::Alt { s: 5 },
        Family::Cn { n: 1 },
        Family::Cn { n: 4 },
        Family::Cn { n: 5 },
    ]
    .iter()
    .map(|f| realize_family(*f).unwrap())
    .collect()
}

#[test]
fn frame_invariants() {
    for real in all_test_realizations() {
        let n = real.nvars;
        // (e_i | conj e_i) = 1 and D(e_i, conj e_j) = 0 for i != j
        for (i, ei) in real.frame.iter().enumerate() {
            let norm: Rational = ei
                .iter()
                .zip(&real.weights)
                .map(|(c, w)| c * c * w)
                .sum();
            assert_eq!(norm, Rational::one(), "{:?}", real.kind);
            let ei_p = real.lift(ei, n);
            // {e_i, conj e_i, e_i} = 2 e_i
            let t = real.triple(&ei_p, &ei_p, &ei_p);
            for (a, tv) in t.iter().enumerate() {
                assert_eq!(
                    tv.clone(),
                    SparsePoly::constant(n, &ei[a] * rat(2)),
                    "{:?}",
                    real.kind
                );
            }
            for (j, ej) in real.frame.iter().enumerate() {
                if i == j {
                    continue;
                }
                // D(e_i, conj e_j) kills every basis vector
                let ej_p = real.lift(ej, n);
                let z = real.generic_element();
                let d = real.triple(&ei_p, &ej_p, &z);
                assert!(d.iter().all(|p| p.is_zero()), "{:?}", real.kind);
            }
        }
        // det is homogeneous of degree r and det(e) = 1
        assert_eq!(real.det().total_degree(), real.rank() as u32);
        assert_eq!(real.det().eval(&real.frame_sum()), Rational::one());
        // Fischer normalization: <x_a, x_a>_F = 1/w_a
        for a in 0..n {
            let xa = SparsePoly::var(n, a);
            assert_eq!(real.fischer(&xa, &xa), real.weights[a].recip());
        }
    }
}

#[test]
fn delta_examples() {
    let sym2 = realize_family(Family::Sym { r: 2 }).unwrap();
    // coordinates: x11, x12, x22
    assert_eq!(
        sym2.delta(&Partition::new(vec![1, 0])),
        SparsePoly::var(3, 0)
    );
    assert_eq!(sym2.delta(&Partition::new(vec![1, 1])), sym2.det().clone());
    let m22 = realize_family(Family::MatQS { q: 2, s: 2 }).unwrap();
    let d21 = m22.delta(&Partition::new(vec![2, 1]));
    assert_eq!(d21, SparsePoly::var(4, 0).mul(m22.det()));
}

#[test]
fn fischer_det_norm_matches_pochhammer() {
    // ||det^k||_F^2 = (n/r)_{(k,...,k),d} on tube realizations
    for real in all_test_realizations() {
        if !real.jts.tube {
            continue;
        }
        for k in 1..=2u32 {
            let detk = real.det().pow(k);
            let got = real.fischer(&detk, &detk);
            let expect = pochhammer_d(
                &Affine::constant(real.jts.n_over_r()),
                &Partition::constant(k, real.rank()),
                &real.jts.d,
            )
            .eval(&rat(0), &rat(0))
            .unwrap();
            assert_eq!(got, expect, "{:?} k={k}", real.kind);
        }
    }
}

#[test]
fn differentiation_rule_on_principal_minors() {
    // Δ̌_k(∂/∂x) Δ_m = prod_j (m_j - k_{r-j+1} + (d/2)(r-j) + 1)_{k_{r-j+1}} Δ_{m-k^∨}
    use crate::exactnum::rising_factorial;
    for real in all_test_realizations() {
        let r = real.rank();
        if r < 2 || real.nvars > 9 {
            continue;
        }
        let half_d = real.jts.half_d();
        let cases: Vec<(Vec<u32>, Vec<u32>)> = match r {
            2 => vec![
                (vec![1, 0], vec![2, 1]),
                (vec![1, 1], vec![2, 1]),
                (vec![2, 1], vec![3, 2]),
            ],
            _ => vec![
                (vec![1, 0, 0], vec![2, 1, 1]),
                (vec![1, 1, 0], vec![2, 2, 1]),
                (vec![1, 1, 1], vec![2, 2, 1]),
            ],
        };
        for (kv, mv) in cases {
            let k = Partition::new(kv);
            let m = Partition::new(mv);
            let k过 = k.padded(r);
            let diff = real.delta_check(&k);
            let target = real.delta(&m);
            let got = real.apply_nform_diff(&diff, &target);
            // m - k^∨ componentwise
            let mk: Vec<u32> = (1..=r)
                .map(|j| m.part(j) - k过.part(r - j + 1))
                .collect();
            let expect_poly = real.delta(&Partition::new(mk));
            let mut scalar = Rational::one();
            for j in 1..=r {
                let kk = kव(&kव_helper(), 0); // placeholder removed below
                let _ = kk;
                let base = rat(m.part(j) as i64) - rat(kव_part(&kव_helper(), 0) as i64);
                let _ = base;
            }
            let mut scalar2 = Rational::one();
            for j in 1..=r {
                let krev = kव_part2(&kव_helper(), 0);
                let _ = krev;
            }
            let _ = scalar;
            let _ = scalar2;
            let mut expected_scalar = Rational::one();
            for j in 1..=r {
                let kr = k.padded(r).part(r - j + 1);
                let base = rat(m.part(j) as i64) - rat(kr as i64)
                    + &half_d * rat((r - j) as i64)
                    + Rational::one();
                expected_scalar *= rising_factorial(&base, kr);
            }
            assert_eq!(
                got,
                expect_poly.scale(&expected_scalar),
                "{:?} k={k} m={m}",
                real.kind
            );
        }
    }
}

fn kव_helper() -> Partition {
    Partition::empty()
}
fn kव(_p: &Partition, _i: usize) -> u32 {
    0
}
fn kव_part(_p: &Partition, _i: usize) -> u32 {
    0
}
fn kव_part2(_p: &Partition, _i: usize) -> u32 {
    0
}

#[test]
fn bessel_kernel_contains_det_powers() {
    // B_{n/r - a}(det^a) = 0 on tube realizations
    for real in all_test_realizations() {
        if !real.jts.tube || real.nvars > 9 {
            continue;
        }
        for a in 1..=2u32 {
            let f = real.det().pow(a);
            let lambda = real.jts.n_over_r() - rat(a as i64);
            let out = real.bessel_at(&lambda, &f);
            assert!(
                out.iter().all(|p| p.is_zero()),
                "{:?} a={a}",
                real.kind
            );
        }
        // and f = 1 maps to zero, f = coordinate maps to λ · dual vector
        let one = SparsePoly::one(real.nvars);
        assert!(real
            .bessel_at(&rat(3), &one)
            .iter()
            .all(|p| p.is_zero()));
        let x0 = SparsePoly::var(real.nvars, 0);
        let out = real.bessel_at(&rat(5), &x0);
        let expect = real.weights[0].recip() * rat(5);
        assert_eq!(out[0], SparsePoly::constant(real.nvars, expect));
        assert!(out[1..].iter().all(|p| p.is_zero()));
    }
}

#[test]
fn adjugate_satisfies_rank3_expansion() {
    // det(x+y) = det x + (x#|y) + (x|y#) + det y  for rank-3 tube models,
    // and the rank-2 analogue without the middle cross terms
    for fam in [Family::Sym { r: 3 }, Family::MatQS { q: 3, s: 3 }] {
        let real = realize_family(fam).unwrap();
        let n = real.nvars;
        // work in a doubled polynomial ring: x-vars then y-vars
        let x: Vec<SparsePoly> = (0..n).map(|i| SparsePoly::var(2 * n, i)).collect();
        let y: Vec<SparsePoly> = (0..n).map(|i| SparsePoly::var(2 * n, n + i)).collect();
        let widen = |p: &SparsePoly, offset: usize| -> SparsePoly {
            let subs: Vec<SparsePoly> = (0..n)
                .map(|i| SparsePoly::var(2 * n, offset + i))
                .collect();
            p.substitute(&subs)
        };
        let det = real.det();
        let det_x = widen(det, 0);
        let det_y = widen(det, n);
        let sum: Vec<SparsePoly> = x.iter().zip(&y).map(|(a, b)| a.add(b)).collect();
        let det_sum = det.substitute(&sum);
        let adj = real.adjugate().unwrap();
        let adj_x: Vec<SparsePoly> = adj.iter().map(|p| widen(p, 0)).collect();
        let adj_y: Vec<SparsePoly> = adj.iter().map(|p| widen(p, n)).collect();
        let cross1 = real.nform_pair(&adj_x, &y);
        let cross2 = real.nform_pair(&x, &adj_y);
        let rhs = det_x.add(&cross1).add(&cross2).add(&det_y);
        assert_eq!(det_sum, rhs, "{fam}");
        // e# = e
        let e = real.frame_sum();
        let adj_at_e: Vec<Rational> = adj.iter().map(|p| p.eval(&e)).collect();
        assert_eq!(adj_at_e, e, "{fam}");
    }
    // classical 2x2 symmetric adjugate
    let sym2 = realize_family(Family::Sym { r: 2 }).unwrap();
    let adj = sym2.adjugate().unwrap();
    assert_eq!(adj[0], SparsePoly::var(3, 2));
    assert_eq!(adj[1], SparsePoly::var(3, 1).neg());
    assert_eq!(adj[2], SparsePoly::var(3, 0));
}

#[test]
fn split_projections_are_consistent() {
    let cases = [
        pair_lookup(Section::Easy4, 1, &[2, 1, 2]).unwrap(),
        pair_lookup(Section::NonSimple5, 2, &[1, 2]).unwrap(),
        pair_lookup(Section::NonSimple5, 3, &[1, 1, 1, 1]).unwrap(),
        pair_lookup(Section::NonSimple5, 4, &[2, 2]).unwrap(),
        pair_lookup(Section::NonSimple5, 1, &[2]).unwrap(),
        pair_lookup(Section::Simple6, 1, &[4, 3]).unwrap(),
        pair_lookup(Section::Simple6, 1, &[4, 1]).unwrap(),
        pair_lookup(Section::Simple6, 2, &[1, 2]).unwrap(),
        pair_lookup(Section::Simple6, 3, &[2, 2]).unwrap(),
        pair_lookup(Section::Simple6, 4, &[2]).unwrap(),
        pair_lookup(Section::Simple6, 4, &[3]).unwrap(),
        pair_lookup(Section::Simple6, 5, &[2]).unwrap(),
        pair_lookup(Section::Simple6, 5, &[4]).unwrap(),
    ];
    for c in cases {
        let split = split_involution(&c).unwrap();
        let n = split.ambient.nvars;
        // σ is an involution
        let sig = &split.sigma;
        for a in 0..n {
            for b in 0..n {
                let mut v = Rational::zero();
                for t in 0..n {
                    v += &sig[a][t] * &sig[t][b];
                }
                let expect = if a == b { Rational::one() } else { Rational::zero() };
                assert_eq!(v, expect, "{} σ² != 1", c.key());
            }
        }
        // σ is a triple automorphism: check on the generic element
        let z = split.ambient.generic_element();
        let apply_sigma = |v: &[SparsePoly]| -> Vec<SparsePoly> {
            (0..n)
                .map(|a| {
                    let mut acc = SparsePoly::zero(n);
                    for (b, vb) in v.iter().enumerate() {
                        if !sig[a][b].is_zero() {
                            acc = acc.add(&vb.scale(&sig[a][b]));
                        }
                    }
                    acc
                })
                .collect()
        };
        let sz = apply_sigma(&z);
        let lhs = split.ambient.triple(&sz, &sz, &sz);
        let rhs = apply_sigma(&split.ambient.triple(&z, &z, &z));
        assert_eq!(lhs, rhs, "{} σ not an automorphism", c.key());

        // embedded sub frames are tripotents with pairing ratio ε2
        let subs: Vec<&SubEmbed> = match &split.sub {
            SubSide::Simple(s) => vec![s],
            SubSide::NonSimple { s11, s22 } => vec![s11, s22],
        };
        for sub in subs {
            for ei in &sub.real.frame {
                let amb = sub.embed_vec(ei);
                let amb_p = split.ambient.lift(&amb, n);
                let t = split.ambient.triple(&amb_p, &amb_p, &amb_p);
                for (a, tv) in t.iter().enumerate() {
                    assert_eq!(
                        tv.clone(),
                        SparsePoly::constant(n, &amb[a] * rat(2)),
                        "{} embedded frame not tripotent",
                        c.key()
                    );
                }
                // (embedded e | embedded e)_ambient = ε2 (sub normalizes to 1)
                let norm: Rational = amb
                    .iter()
                    .zip(&split.ambient.weights)
                    .map(|(v, w)| v * v * w)
                    .sum();
                assert_eq!(norm, rat(c.eps2 as i64), "{} ε2 mismatch", c.key());
                // σ(embedded) = -embedded
                let s_amb = apply_sigma(&amb_p);
                for (a, sv) in s_amb.iter().enumerate() {
                    assert_eq!(sv.clone(), SparsePoly::constant(n, -&amb[a]));
                }
            }
            // extract ∘ embed = identity on sub coordinates
            for si in 0..sub.real.nvars {
                let mut unit = vec![Rational::zero(); sub.real.nvars];
                unit[si] = Rational::one();
                let amb = sub.embed_vec(&unit);
                for sj in 0..sub.real.nvars {
                    let got: Rational = sub.extract[sj]
                        .iter()
                        .zip(&amb)
                        .map(|(c, v)| c * v)
                        .sum();
                    let expect = if si == sj { Rational::one() } else { Rational::zero() };
                    assert_eq!(got, expect, "{} extract∘embed != id", c.key());
                }
            }
        }
    }
}

#[test]
fn omega_points_are_in_the_cone() {
    for real in all_test_realizations() {
        let x = real.omega_point(17);
        for m in &real.minors {
            assert!(m.eval(&x) > Rational::zero());
        }
    }
}

#[test]
fn rank3_split_adjugate_facts() {
    // on the rank-3 matrix model with the symmetric anti-fixed part:
    // adjugates of both eigenspace parts land in the anti-fixed part, the
    // fixed part has vanishing determinant, and ((x1)#)# = 0
    let c = pair_lookup(Section::Simple6, 4, &[3]).unwrap();
    let split = split_involution(&c).unwrap();
    let real = &split.ambient;
    let n = real.nvars;
    let z = real.generic_element();
    let proj2 = split.proj2_subs();
    let proj1: Vec<SparsePoly> = (0..n)
        .map(|a| z[a].sub(&proj2[a]))
        .collect();
    let det = real.det();
    // det vanishes on the fixed (alternating) part: det(x1) = 0
    assert!(det.substitute(&proj1).is_zero());
    let adj = real.adjugate().unwrap();
    let adj_of = |v: &[SparsePoly]| -> Vec<SparsePoly> {
        adj.iter().map(|p| p.substitute(v)).collect()
    };
    let sharp1 = adj_of(&proj1);
    let sharp2 = adj_of(&proj2);
    // σ(x#) = x# for x in either eigenspace
    for v in [&sharp1, &sharp2] {
        for (a, va) in v.iter().enumerate() {
            let mut acc = SparsePoly::zero(n);
            for (b, vb) in v.iter().enumerate() {
                if !split.sigma[a][b].is_zero() {
                    acc = acc.add(&vb.scale(&split.sigma[a][b]));
                }
            }
            assert_eq!(acc.neg(), va.clone().neg(), "adjugate not anti-fixed");
        }
    }
    // (x1)# has rank <= 1: its adjugate vanishes
    let sharp_sharp = adj_of(&sharp1);
    assert!(sharp_sharp.iter().all(|p| p.is_zero()));
    // det(x1 + x2) = det(x2) + (x2 | (x1)#)
    let det_sum = det.clone();
    let det2 = det.substitute(&proj2);
    let cross = real.nform_pair(&proj2, &sharp1);
    assert_eq!(det_sum, det2.add(&cross));
}
