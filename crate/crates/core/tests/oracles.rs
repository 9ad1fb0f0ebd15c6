mod common;

use common::*;
use fcompare_core::lattice::{disjoint_pairs, gv_scan, verify_phi_with};
use fcompare_core::macaulay::m_sequence_violation;
use fcompare_core::minors::{scan_minors, MinorOrder};
use fcompare_core::{
    binom_det, binomial, del_k, f_to_h, g_to_f, h_to_f, is_M_sequence, is_m_sequence_upper, macaulay_expand, phi_minor,
    sandwich_simplicial, Execution, FVector, Family, FamilySpec, HVector,
};
use num_traits::ToPrimitive;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn family_f(family: Family, n: u64, d: i64) -> Vec<i64> {
    FamilySpec::new(family, n, dim(d))
        .unwrap()
        .f_vector()
        .entries()
        .iter()
        .map(|x| x.to_i64().unwrap())
        .collect()
}

#[test]
fn cyclic_matches_gale_evenness() {
    for d in 3..=6 {
        for n in d + 1..=10 {
            let expected: Vec<i64> = gale_cyclic_f(n, d).into_iter().map(|x| x as i64).collect();
            assert_eq!(family_f(Family::Cyclic, n as u64, d as i64), expected, "C({n},{d})");
        }
    }
}

#[test]
fn stacked_matches_subdivision_recurrence() {
    for d in 3..=12 {
        for n in d + 1..=d + 20 {
            assert_eq!(
                family_f(Family::Stacked, n as u64, d as i64),
                stacked_f_by_subdivision(n, d)
            );
        }
    }
}

#[test]
fn cs_stacked_matches_subdivision_recurrence() {
    for d in 3..=12 {
        for n in d..=d + 15 {
            assert_eq!(
                family_f(Family::CsStacked, n as u64, d as i64),
                cs_stacked_f_by_subdivision(n, d)
            );
        }
    }
}

#[test]
fn f_to_h_agrees_with_polynomial_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for d in 3..=12usize {
        for _ in 0..200 {
            let f: Vec<_> = (0..d).map(|_| int(rng.random_range(0..1_000_000))).collect();
            let fv = FVector::new(dim(d as i64), f.clone()).unwrap();
            let h = f_to_h(&fv);
            assert_eq!(f_polynomial(d, &f), h_polynomial(d, h.entries()));
            assert_eq!(h_to_f(&h), fv);
        }
    }
}

#[test]
fn macaulay_representation_is_unique() {
    for k in 1..=5 {
        let counts = representation_counts(300, k);
        for n in 1..=300i64 {
            assert_eq!(counts[n as usize], 1, "n={n}, k={k}");
            let e = macaulay_expand(&int(n), k as u32).unwrap();
            assert_eq!(e.value(), int(n));
        }
    }
}

#[test]
fn del_k_of_pure_binomial() {
    for k in 1..=8i64 {
        for m in k..=24 {
            assert_eq!(del_k(&binomial(m, k), k as u32).unwrap(), binomial(m - 1, k - 1));
        }
    }
}

#[test]
fn m_sequence_matches_literal_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20_000 {
        let len = rng.random_range(2..=6);
        let mut v = vec![1i64];
        for _ in 1..len {
            v.push(if rng.random_bool(0.2) {
                0
            } else {
                rng.random_range(0..40)
            });
        }
        let lit = literal_m_sequence(&v);
        assert_eq!(is_m_sequence_upper(&ints(&v)).unwrap(), lit, "{v:?}");
        assert_eq!(m_sequence_violation(&ints(&v)).unwrap().is_none(), lit);
        if is_M_sequence(&ints(&v)).unwrap() {
            assert!(lit, "M-sequence {v:?} fails the m-sequence condition");
        }
    }
}

#[test]
fn m_sequence_positive_entries_form_a_prefix() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20_000 {
        let v: Vec<i64> = std::iter::once(1)
            .chain((0..5).map(|_| rng.random_range(0..4)))
            .collect();
        if is_m_sequence_upper(&ints(&v)).unwrap() {
            if let Some(j) = v.iter().rposition(|&x| x > 0) {
                assert!(v[..=j].iter().all(|&x| x > 0), "{v:?}");
            }
        }
    }
}

#[test]
fn phi_minor_equals_path_count_decomposition() {
    for d in 3..=12i64 {
        let delta = d / 2;
        for a in 0..=delta {
            for b in a + 1..=delta {
                for s in 1..d {
                    for r in 0..s {
                        let (rb, sb) = (d - r, d - s);
                        let (at, bt) = (d + 1 - a, d + 1 - b);
                        let rhs = binom_det(a, bt, sb, rb) + binom_det(bt, at, sb, rb)
                            - binom_det(a, b, sb, rb)
                            - binom_det(b, at, sb, rb);
                        let lhs = phi_minor(dim(d), a as usize, b as usize, r as usize, s as usize).unwrap();
                        assert_eq!(lhs, rhs, "d={d} a={a} b={b} r={r} s={s}");
                    }
                }
            }
        }
    }
}

#[test]
fn adjacent_minor_equals_codomain_excess() {
    for d in 3..=9i64 {
        for p in fcompare_core::PhiParams::all(dim(d)) {
            let cod = disjoint_pairs(&p.codomain_low()).len() + disjoint_pairs(&p.codomain_high()).len();
            let dom = disjoint_pairs(&p.domain_low()).len() + disjoint_pairs(&p.domain_high()).len();
            let minor = phi_minor(dim(d), p.a as usize, p.a as usize + 1, p.r as usize, p.s as usize).unwrap();
            assert_eq!(int(cod as i64 - dom as i64), minor, "{p:?}");
        }
    }
}

#[test]
fn sandwich_contains_random_m_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for d in 3..=10i64 {
        for _ in 0..200 {
            let g = random_m_sequence(&mut rng, dim(d), 25);
            let f = g_to_f(&g);
            for r in 0..(d as usize - 1) {
                let rep = sandwich_simplicial(dim(d), r, &f.entries()[r]).unwrap();
                for (s, iv) in &rep.bounds {
                    assert!(iv.contains(&f.entries()[*s]), "g={:?} r={r} s={s}", g.entries());
                }
            }
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    for d in [5i64, 8] {
        assert_eq!(
            verify_phi_with(dim(d), Execution::Sequential),
            verify_phi_with(dim(d), Execution::Parallel)
        );
        assert_eq!(
            scan_minors(dim(d), MinorOrder::All, Execution::Sequential),
            scan_minors(dim(d), MinorOrder::All, Execution::Parallel)
        );
    }
    assert_eq!(gv_scan(4, Execution::Sequential), gv_scan(4, Execution::Parallel));
}

proptest! {
    #[test]
    fn h_f_roundtrip(d in 3i64..=14, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h: Vec<_> = (0..=d).map(|i| if i == 0 { int(1) } else { int(rng.random_range(-1_000_000..1_000_000)) }).collect();
        let hv = HVector::new(dim(d), h).unwrap();
        prop_assert_eq!(f_to_h(&h_to_f(&hv)), hv);
    }

    #[test]
    fn g_f_roundtrip(d in 3i64..=14, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_m_sequence(&mut rng, dim(d), 1000);
        prop_assert_eq!(fcompare_core::f_to_g(&g_to_f(&g)), g);
    }
}
