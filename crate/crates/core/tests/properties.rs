use std::collections::BTreeSet;

use ldp::discrepancy::{anticanonical_selfint, cartier_index, discrepancies};
use ldp::feasibility::kv_vanishing_bound;
use ldp::graphs::{format_dynkin, parse_dynkin, DynkinType, Shape, WeightedDualGraph};
use ldp::pencil::crossratio::{locus_points, minimal_polynomials_of};
use ldp::pencil::cubic::{reduce_mod, singular_locus};
use ldp::pencil::{Fp, Rat};
use ldp::picard::preset_resolution;
use ldp::rational::{q, qi, Q};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn weights(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(2u32..=6, 1..=max_len)
}

fn chain() -> impl Strategy<Value = WeightedDualGraph> {
    weights(6).prop_map(|w| WeightedDualGraph::chain(&w))
}

fn star() -> impl Strategy<Value = WeightedDualGraph> {
    (2u32..=5, weights(3), weights(3), weights(3))
        .prop_map(|(c, a, b, d)| WeightedDualGraph::star(c, [&a, &b, &d]))
}

fn graph() -> impl Strategy<Value = WeightedDualGraph> {
    prop_oneof![chain(), star()]
}

/// Continuant: Δ of a chain through the recurrence p_k = w_k p_{k−1} − p_{k−2}.
fn continuant(w: &[u32]) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for &x in w {
        let c = BigInt::from(x) * &b - &a;
        a = b;
        b = c;
    }
    b
}

fn matrix_times(g: &WeightedDualGraph, x: &[Q]) -> Vec<Q> {
    let m = g.intersection_matrix();
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| qi(*a) * b).sum())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn notation_round_trip(gs in prop::collection::vec(graph(), 1..4)) {
        let t = DynkinType::new(gs);
        let text = format_dynkin(&t);
        let back = parse_dynkin(&text).unwrap();
        prop_assert_eq!(format_dynkin(&back), text);
        prop_assert_eq!(back.vertex_count(), t.vertex_count());
    }

    #[test]
    fn chain_determinant_is_continuant(w in weights(8)) {
        let g = WeightedDualGraph::chain(&w);
        prop_assert_eq!(g.determinant().unwrap(), continuant(&w));
        let mut r = w.clone();
        r.reverse();
        prop_assert_eq!(continuant(&r), continuant(&w));
    }

    #[test]
    fn determinant_is_multiplicative(gs in prop::collection::vec(chain(), 1..4)) {
        let prod: BigInt = gs.iter().map(|g| g.determinant().unwrap()).product();
        prop_assert_eq!(DynkinType::new(gs).determinant().unwrap(), prod);
    }

    #[test]
    fn discrepancies_solve_the_adjunction_system(g in graph()) {
        prop_assume!(g.is_negative_definite());
        let e = discrepancies(&g).unwrap();
        let kappa: Vec<Q> = g.weights().iter().map(|&w| qi(2 - w as i64)).collect();
        prop_assert_eq!(matrix_times(&g, &e), kappa);
        prop_assert!(e.iter().all(|x| !x.is_negative()));
        // all weights 2 exactly when e vanishes
        prop_assert_eq!(e.iter().all(Zero::is_zero), g.weights().iter().all(|&w| w == 2));
    }

    #[test]
    fn klt_exactly_for_chains_and_platonic_stars(g in graph()) {
        prop_assume!(g.is_negative_definite());
        let klt = discrepancies(&g).unwrap().iter().all(|x| *x < qi(1));
        match g.shape().unwrap() {
            Shape::Chain(_) => prop_assert!(klt),
            Shape::Star { branches, .. } => {
                let s: Q = branches
                    .iter()
                    .map(|b| {
                        let w: Vec<u32> = b.iter().map(|&i| g.weight(i)).collect();
                        Q::new(BigInt::one(), continuant(&w))
                    })
                    .sum();
                prop_assert_eq!(klt, s > qi(1));
            }
            Shape::Empty => unreachable!(),
        }
    }

    #[test]
    fn index_clears_ksq_denominator(gs in prop::collection::vec(chain(), 1..4)) {
        let t = DynkinType::new(gs);
        let idx = cartier_index(&t).unwrap();
        let k2 = anticanonical_selfint(&t).unwrap();
        prop_assert!(idx.is_multiple_of(k2.denom()));
        for g in t.components() {
            for e in discrepancies(g).unwrap() {
                prop_assert!((e * Q::from_integer(idx.clone())).is_integer());
            }
        }
    }

    #[test]
    fn vanishing_bound_is_monotone(p in 2u64..200, r in 1u64..10, n in 1i64..50, d in 1i64..50) {
        let k = q(n, d);
        if kv_vanishing_bound(p, r, &k) {
            prop_assert!(kv_vanishing_bound(p + 1, r, &k));
            prop_assert!(kv_vanishing_bound(p, r, &q(n, d + 1)));
        }
        let bound = qi((r * r.saturating_sub(1)) as i64) * &k;
        prop_assert_eq!(kv_vanishing_bound(p, r, &k), qi(p as i64) > bound);
    }

    #[test]
    fn pullback_is_orthogonal_to_contracted_curves(cs in prop::collection::vec(-4i64..=4, 11)) {
        let lat = preset_resolution("[2,4]").unwrap();
        let names: Vec<String> = lat.basis().to_vec();
        let terms: Vec<(&str, i64)> = names.iter().map(|s| s.as_str()).zip(cs).collect();
        let d = lat.class(&terms).unwrap();
        let pb = lat.pullback_weil(&d).unwrap();
        for e in lat.contracted() {
            prop_assert_eq!(pb.dot(&lat.curve(e).unwrap()).unwrap(), qi(0));
        }
        // the correction is supported on contracted curves, so it pairs to zero with pullbacks
        let diff = pb.sub(&d).unwrap();
        let pb2 = lat.pullback_weil(&lat.class(&[("H", 1)]).unwrap()).unwrap();
        prop_assert_eq!(diff.dot(&pb2).unwrap(), qi(0));
    }

    #[test]
    fn cross_ratios_ignore_point_order(perm in Just([0usize, 1, 2, 3]).prop_shuffle()) {
        let pts = locus_points();
        let shuffled: Vec<_> = perm.iter().map(|&i| pts[i].clone()).collect();
        prop_assert_eq!(minimal_polynomials_of(&shuffled), minimal_polynomials_of(&pts));
    }
}

#[test]
fn locus_reduces_well_away_from_five() {
    let l = singular_locus(&Rat::new(0, 1)).unwrap();
    let primes: BTreeSet<u64> = (7u64..60)
        .filter(|&p| (2..p).all(|d| p % d != 0))
        .collect();
    for p in primes {
        let lp = singular_locus(&Fp::new(0, p)).unwrap();
        assert_eq!(reduce_mod(&l, p).map(|r| r.monic()), Some(lp.monic()), "p = {p}");
    }
    let l5 = singular_locus(&Fp::new(0, 5)).unwrap();
    assert_ne!(reduce_mod(&l, 5).map(|r| r.monic()), Some(l5.monic()));
}
