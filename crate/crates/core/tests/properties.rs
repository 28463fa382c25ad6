mod common;

use catlattice::conjugacy::quadratic_form;
use catlattice::lattice::reduce;
use catlattice::*;
use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn mat(range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = Mat2Z> {
    (range.clone(), range.clone(), range.clone(), range).prop_map(|(a, b, c, d)| m(a, b, c, d))
}

fn gl2z(max_len: usize) -> impl Strategy<Value = Mat2Z> {
    (any::<u64>(), 1..max_len).prop_map(|(seed, len)| {
        let w = gl2z_word(&mut rng(seed), len);
        m(w[0], w[1], w[2], w[3])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn power_is_repeated_multiplication(x in mat(-1000..=1000), k in 0i64..=30) {
        let mut want = Mat2Z::identity();
        for _ in 0..k {
            want = &want * &x;
        }
        prop_assert_eq!(x.power(k).unwrap(), want);
    }

    #[test]
    fn negative_powers_invert(a in gl2z(10), k in 1i64..=12) {
        prop_assert_eq!(&a.power(k).unwrap() * &a.power(-k).unwrap(), Mat2Z::identity());
    }

    #[test]
    fn mgcd_identities(x in mat(-50..=50), k in -9i64..=9) {
        let g = x.mgcd();
        prop_assert_eq!(&(-x.clone()).mgcd(), &g);
        prop_assert_eq!(&x.transpose().mgcd(), &g);
        prop_assert_eq!(x.scale(&BigInt::from(k)).mgcd(), BigInt::from(k.abs()) * &g);
        prop_assert_eq!(&(x.clone() + Mat2Z::scalar(BigInt::from(k))).mgcd(), &g);
    }

    #[test]
    fn mgcd_of_inverse(a in gl2z(12)) {
        prop_assert_eq!(a.inverse().unwrap().mgcd(), a.mgcd());
    }

    #[test]
    fn conjugation_preserves_invariants_and_local_graphs(x in mat(-8..=8), a in gl2z(8), n in 2u64..=7) {
        let y = &(&a * &x) * &a.inverse().unwrap();
        prop_assert_eq!(y.invariants(), x.invariants());
        prop_assert_eq!(canonical_graph(&x, n).unwrap(), canonical_graph(&y, n).unwrap());
    }

    #[test]
    fn mgcd_transform_inverts(a in gl2z(10)) {
        let n = mgcd_transform(&a).unwrap();
        let ni = mgcd_transform(&a.inverse().unwrap()).unwrap();
        prop_assert_eq!(n.inverse().unwrap(), ni);
    }

    #[test]
    fn semi_conjugacy_identity(x in mat(-20..=20), al in -30i64..=30, ga in -30i64..=30) {
        let (al, ga) = (BigInt::from(al), BigInt::from(ga));
        let (be, de) = x.apply(&al, &ga);
        let a = Mat2Z::new(al.clone(), be, ga.clone(), de);
        prop_assert_eq!(&x * &a, &a * &x.companion());
        prop_assert_eq!(a.det(), quadratic_form(&x).eval(&al, &ga));
    }

    #[test]
    fn constructed_certificates_verify(x in mat(-9..=9), a in gl2z(8), n in 2u64..=40) {
        prop_assume!(!x.mgcd().is_zero());
        let y = &(&a * &x) * &a.inverse().unwrap();
        let cert = build_conjugator(&x, &y, n).unwrap();
        prop_assert!(cert.verified && cert.check().unwrap());
        let (_, nf) = normal_form_mod(&x, n).unwrap();
        prop_assert!(nf.check().unwrap());
        if x.mgcd().gcd(&BigInt::from(n)).is_one() {
            prop_assert!(conjugator_to_companion(&x, n).unwrap().check().unwrap());
        }
    }

    #[test]
    fn orbit_round_trip(x in mat(-6..=6)) {
        let a: Vec<BigInt> = (1..=12).map(|k| fixed_count(&x, k).value).collect();
        let c = orbit_counts_from_fixed(&a);
        if let Ok(c) = c.into_iter().collect::<Result<Vec<_>, _>>() {
            prop_assert_eq!(fixed_from_orbit(&c), a);
        }
    }
}

#[test]
fn zeta_series_times_euler_inverse_is_one() {
    for x in entry_pool(1, 60, 20) {
        let a: Vec<BigInt> = (1..=12).map(|k| fixed_count(&x, k).value).collect();
        let Ok(c) = orbit_counts_from_fixed(&a).into_iter().collect::<Result<Vec<_>, _>>() else {
            continue;
        };
        let z = zeta::integer_series(&zeta_series(&x, 12)).expect("integral zeta series");
        let inv = zeta::euler_product_inverse(&c, 12);
        assert_eq!(z.mul_trunc(&inv, 12), Poly::one(), "{x}");
    }
}

#[test]
fn hyperbolic_counts_through_traces() {
    for x in hyperbolic_gl2z_pool(2, 40, 200) {
        let sigma = if x.trace().is_negative() { -1 } else { 1 };
        for k in 1..=12u64 {
            let p = x.power(k as i64).unwrap();
            let s = BigInt::from(if k % 2 == 1 { sigma } else { 1 });
            let via_trace = s * (p.trace() - (BigInt::one() + num_traits::pow(x.det(), k as usize)));
            assert_eq!(via_trace, fixed_count(&x, k).value, "{x}^{k}");
        }
    }
}

#[test]
fn orientation_reversing_counts_match_negation() {
    for x in hyperbolic_gl2z_pool(3, 40, 200) {
        if x.det() != BigInt::from(-1) {
            continue;
        }
        let neg = -x.clone();
        for k in 1..=12 {
            assert_eq!(fixed_count(&x, k), fixed_count(&neg, k), "{x}^{k}");
        }
    }
}

#[test]
fn lattice_polynomials() {
    for x in hyperbolic_gl2z_pool(4, 12, 40) {
        let zs: Vec<_> = (1..=24u64)
            .map(|n| if n == 1 { Poly::new(vec![BigInt::one(), -BigInt::one()]) } else { orbit_census(&x, n).unwrap().zn_poly() })
            .collect();
        for n in 2..=24u64 {
            let c = orbit_census(&x, n).unwrap();
            assert_eq!(fixed_count_mod(&x, c.per, n).unwrap(), BigInt::from(n * n));
            for d in 1..n {
                if n % d == 0 {
                    assert!(zs[d as usize - 1].divides(&zs[n as usize - 1]), "{x}: Z_{d} ∤ Z_{n}");
                }
            }
        }
    }
}

#[test]
fn recurrence_time_bounds() {
    // ≤ 3n for det 1; for det −1 only ≤ 6n holds (golden: per(10) = 60)
    for x in hyperbolic_gl2z_pool(5, 60, 100) {
        let factor = if x.det().is_one() { 3 } else { 6 };
        for n in 2..=60u64 {
            let per = orbit_census(&x, n).unwrap().per;
            assert!(per <= factor * n, "{x}: per({n}) = {per}");
        }
    }
    assert_eq!(orbit_census(&golden(), 10).unwrap().per, 60);
}

#[test]
fn local_invariance_of_brute_force_conjugacy() {
    let pool = entry_pool(6, 14, 3);
    for n in [2u64, 3, 4, 6] {
        for x in &pool {
            for y in &pool {
                if let Some(xx) = brute_force_conjugator(x, y, n, false).unwrap() {
                    let nn = BigInt::from(n);
                    let md = |v: BigInt| v.mod_floor(&nn);
                    assert_eq!(md(x.det()), md(y.det()));
                    assert_eq!(md(x.trace()), md(y.trace()));
                    assert_eq!(x.mgcd().gcd(&nn), y.mgcd().gcd(&nn));
                    let (s, t) = (reduce(x, n).unwrap(), reduce(y, n).unwrap());
                    assert_eq!(xx.mul(&s), t.mul(&xx));
                }
            }
        }
    }
}

#[test]
fn all_n_decision_matches_search_on_small_moduli() {
    // equal invariants ⇒ conjugate for every n; mgcd mismatch ⇒ some n fails
    let x = m(1, 2, 2, 1);
    let y = m(0, 3, 1, 2);
    assert!(!decide_all_n_conjugacy(&x, &y));
    assert!(brute_force_conjugator(&x, &y, 3, false).unwrap().is_some());
    assert!(brute_force_conjugator(&x, &y, 4, false).unwrap().is_none());
    let a = m(3, 10, 1, 3);
    let b = m(3, 5, 2, 3);
    assert!(decide_all_n_conjugacy(&a, &b));
    for n in 2..=8 {
        assert!(brute_force_conjugator(&a, &b, n, false).unwrap().is_some(), "n = {n}");
    }
}

#[test]
fn group_chains_are_monotone_and_multiplicative() {
    for x in hyperbolic_entry_pool(7, 20, 5) {
        for k in 1..=4u64 {
            let mut chains = std::collections::BTreeMap::new();
            for p in [2u64, 3, 5] {
                let g = fix_group_order_chain(&x, k, p, 4).unwrap();
                assert!(g.windows(2).all(|w| w[0] <= w[1]), "{x}^{k} at {p}: {g:?}");
                chains.insert(p, g);
            }
            for (r2, r3, r5) in [(1usize, 1usize, 0usize), (2, 1, 1), (3, 0, 1), (2, 2, 0)] {
                let n = 2u64.pow(r2 as u32) * 3u64.pow(r3 as u32) * 5u64.pow(r5 as u32);
                let prod = &chains[&2][r2] * &chains[&3][r3] * &chains[&5][r5];
                assert_eq!(fixed_count_mod(&x, k, n).unwrap(), prod, "{x}^{k} mod {n}");
            }
        }
    }
}

#[test]
fn group_counts_match_enumeration_on_small_lattices() {
    for x in hyperbolic_entry_pool(8, 10, 4) {
        for k in 1..=3u64 {
            for n in 2..=12i64 {
                let via_smith = fixed_count_mod(&x, k, n).unwrap();
                assert_eq!(via_smith, BigInt::from(brute_fixed(small(&x), k, n)));
            }
        }
    }
}

#[test]
fn realizability_detects_bad_sequences() {
    let ok: Vec<BigInt> = (1..=10).map(|k| fixed_count(&golden(), k).value).collect();
    assert!(is_exactly_realizable(&ok).realizable);
    let mut bad = ok.clone();
    bad[1] = BigInt::from(2);
    let r = is_exactly_realizable(&bad);
    assert!(!r.realizable);
    assert_eq!(r.first_failure, Some(2));
}
