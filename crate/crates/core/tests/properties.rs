//! Property tests over small random monomial ideals.

use std::collections::BTreeMap;

use monclose_core::betti::{betti_table, is_cohen_macaulay};
use monclose_core::closure::{
    closure_generators, default_power_bound, np_membership, power_witness, verify_certificate,
    LatticeBox,
};
use monclose_core::decompose::{
    associated_primes, codim, embedded_primes, in_all_components, intersect_components,
    irreducible_decomposition, is_primary, minimal_primes, primary_components,
};
use monclose_core::document::{parse_ideal, IdealDocument};
use monclose_core::family::{delta_set, family_ideal, reduce_to_delta, thm1_check};
use monclose_core::ideal::minimalize;
use monclose_core::{ExponentVector, FamilyParams, MonomialIdeal};
use proptest::prelude::*;

const MAX_EXP: u64 = 4;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 256,
        ..ProptestConfig::default()
    }
}

fn raw_gens(n: usize, max_gens: usize) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(0..=MAX_EXP, n), 1..=max_gens)
}

fn build(n: usize, raw: &[Vec<u64>]) -> MonomialIdeal {
    MonomialIdeal::with_default_vars(n, raw.iter().map(|g| ExponentVector::from_u64s(g))).unwrap()
}

/// A proper nonzero ideal: generators avoid the zero vector.
fn arb_ideal(max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4)
        .prop_flat_map(move |n| (Just(n), raw_gens(n, max_gens)))
        .prop_filter("proper", |(_, raw)| {
            raw.iter().all(|g| g.iter().any(|&e| e > 0))
        })
        .prop_map(|(n, raw)| build(n, &raw))
}

/// Two proper ideals over the same ring.
fn arb_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), raw_gens(n, 5), raw_gens(n, 5)))
        .prop_filter("proper", |(_, a, b)| {
            a.iter().chain(b).all(|g| g.iter().any(|&e| e > 0))
        })
        .prop_map(|(n, a, b)| (build(n, &a), build(n, &b)))
}

fn arb_triple() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal, MonomialIdeal)> {
    (1usize..=3)
        .prop_flat_map(|n| (Just(n), raw_gens(n, 4), raw_gens(n, 4), raw_gens(n, 4)))
        .prop_map(|(n, a, b, c)| (build(n, &a), build(n, &b), build(n, &c)))
}

/// All lattice points of `[0, bound]^n`.
fn cube(n: usize, bound: u64) -> impl Iterator<Item = ExponentVector> {
    LatticeBox::new(vec![bound; n]).map(|p| ExponentVector::from_u64s(&p))
}

/// Componentwise-`≤` test against a raw generator list.
fn brute_contains(raw: &[Vec<u64>], m: &[u64]) -> bool {
    raw.iter().any(|g| g.iter().zip(m).all(|(a, b)| a <= b))
}

fn u64s(v: &ExponentVector) -> Vec<u64> {
    v.coords()
        .iter()
        .map(|c| u64::try_from(c).unwrap())
        .collect()
}

fn ideal_max(i: &MonomialIdeal) -> u64 {
    i.gens()
        .iter()
        .flat_map(u64s)
        .max()
        .unwrap_or(0)
        .max(1)
}

fn taylor(i: &MonomialIdeal) -> BTreeMap<ExponentVector, i64> {
    let gens = i.gens();
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << gens.len()) {
        let mut l = vec![0u64; i.nvars()];
        for (k, g) in gens.iter().enumerate() {
            if mask & (1 << k) != 0 {
                for (x, y) in l.iter_mut().zip(u64s(g)) {
                    *x = (*x).max(y);
                }
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        *out.entry(ExponentVector::from_u64s(&l)).or_insert(0) += sign;
    }
    out.retain(|_, v| *v != 0);
    out
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn minimalize_is_canonical(n in 1usize..=4, raw in raw_gens(4, 6)) {
        let raw: Vec<Vec<u64>> = raw.into_iter().map(|mut g| { g.truncate(n); g }).collect();
        let out = minimalize(raw.iter().map(|g| ExponentVector::from_u64s(g)));
        for (i, a) in out.iter().enumerate() {
            for (j, b) in out.iter().enumerate() {
                prop_assert!(i == j || !a.divides(b).unwrap());
            }
        }
        let ideal = build(n, &raw);
        for g in &raw {
            prop_assert!(ideal.contains(&ExponentVector::from_u64s(g)).unwrap());
        }
        for m in cube(n, MAX_EXP + 1) {
            prop_assert_eq!(ideal.contains(&m).unwrap(), brute_contains(&raw, &u64s(&m)));
        }
    }

    #[test]
    fn sum_and_intersection_laws((a, b, c) in arb_triple()) {
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(
            a.sum(&b).unwrap().sum(&c).unwrap(),
            a.sum(&b.sum(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.intersect(&b).unwrap().intersect(&c).unwrap(),
            a.intersect(&b.intersect(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.sum(&a).unwrap(), a.clone());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
    }

    #[test]
    fn intersection_and_sum_membership((a, b) in arb_pair()) {
        let meet = a.intersect(&b).unwrap();
        let join = a.sum(&b).unwrap();
        for m in cube(a.nvars(), 2 * MAX_EXP) {
            let (x, y) = (a.contains(&m).unwrap(), b.contains(&m).unwrap());
            prop_assert_eq!(meet.contains(&m).unwrap(), x && y);
            prop_assert_eq!(join.contains(&m).unwrap(), x || y);
        }
    }

    #[test]
    fn colon_adjunction(
        i in arb_ideal(5),
        m_raw in prop::collection::vec(0..=MAX_EXP, 4),
    ) {
        let m = ExponentVector::from_u64s(&m_raw[..i.nvars()]);
        let q = i.colon_mon(&m).unwrap();
        for u in cube(i.nvars(), MAX_EXP + 1) {
            let um = u.mul(&m).unwrap();
            prop_assert_eq!(q.contains(&u).unwrap(), i.contains(&um).unwrap());
        }
    }

    #[test]
    fn radical_of_intersection((a, b) in arb_pair()) {
        let lhs = a.intersect(&b).unwrap().radical();
        let rhs = a.radical().intersect(&b.radical()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        // m is in the radical iff a high enough power of m is in the ideal.
        let k = ideal_max(&a);
        for m in cube(a.nvars(), 2) {
            prop_assert_eq!(a.radical().contains(&m).unwrap(), a.contains(&m.scale(k)).unwrap());
        }
    }

    #[test]
    fn decomposition_reconstructs_and_is_irredundant(i in arb_ideal(5)) {
        let comps = irreducible_decomposition(&i).unwrap();
        prop_assert_eq!(intersect_components(i.vars(), &comps).unwrap(), i.clone());
        for m in cube(i.nvars(), MAX_EXP + 1) {
            prop_assert_eq!(i.contains(&m).unwrap(), in_all_components(&comps, &m));
        }
        if comps.len() > 1 {
            for skip in 0..comps.len() {
                let rest: Vec<_> = comps
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != skip)
                    .map(|(_, c)| c.clone())
                    .collect();
                let bigger = intersect_components(i.vars(), &rest).unwrap();
                prop_assert!(i.is_subset(&bigger).unwrap());
                prop_assert_ne!(&bigger, &i);
            }
        }
    }

    #[test]
    fn primes_are_consistent(i in arb_ideal(5)) {
        let ass = associated_primes(&i).unwrap();
        let primary = primary_components(&i).unwrap();
        let radicals: std::collections::BTreeSet<_> =
            primary.iter().map(|c| c.prime.clone()).collect();
        prop_assert_eq!(&ass, &radicals);
        for c in &primary {
            prop_assert_eq!(c.ideal.radical(), c.prime.to_ideal(i.vars()));
        }
        let ideals: Vec<MonomialIdeal> = primary.into_iter().map(|c| c.ideal).collect();
        prop_assert_eq!(MonomialIdeal::intersect_all(&ideals).unwrap(), i.clone());
        prop_assert_eq!(minimal_primes(&i).unwrap(), minimal_primes(&i.radical()).unwrap());
    }

    #[test]
    fn closure_basics(i in arb_ideal(4)) {
        let c = closure_generators(&i).unwrap();
        prop_assert!(i.is_subset(&c).unwrap());
        prop_assert_eq!(i.radical(), c.radical());
        prop_assert_eq!(closure_generators(&c).unwrap(), c);
    }

    #[test]
    fn closure_is_monotone(i in arb_ideal(3), extra in raw_gens(4, 2)) {
        let n = i.nvars();
        let more: Vec<ExponentVector> =
            extra.iter().map(|g| ExponentVector::from_u64s(&g[..n])).collect();
        let j = MonomialIdeal::new(i.vars().to_vec(), i.gens().iter().cloned().chain(more)).unwrap();
        prop_assume!(!j.is_unit());
        let (ci, cj) = (closure_generators(&i).unwrap(), closure_generators(&j).unwrap());
        prop_assert!(ci.is_subset(&cj).unwrap());
    }

    #[test]
    fn primary_closure_is_primary(
        n in 1usize..=4,
        powers in prop::collection::vec(1..=MAX_EXP, 4),
        mixed in raw_gens(4, 3),
        mask in 1u32..16,
    ) {
        // Pure powers of the chosen variables plus mixed terms in them only.
        let chosen: Vec<usize> = (0..n).filter(|k| mask & (1 << k) != 0).collect();
        prop_assume!(!chosen.is_empty());
        let mut gens: Vec<ExponentVector> = chosen
            .iter()
            .map(|&k| ExponentVector::pure_power(n, k, powers[k].into()))
            .collect();
        for g in &mixed {
            let v: Vec<u64> = (0..n).map(|k| if chosen.contains(&k) { g[k] } else { 0 }).collect();
            if v.iter().any(|&e| e > 0) {
                gens.push(ExponentVector::from_u64s(&v));
            }
        }
        let i = MonomialIdeal::with_default_vars(n, gens).unwrap();
        prop_assert!(is_primary(&i).unwrap());
        let c = closure_generators(&i).unwrap();
        prop_assert!(is_primary(&c).unwrap());
        prop_assert_eq!(associated_primes(&c).unwrap(), associated_primes(&i).unwrap());
    }

    #[test]
    fn certificates_verify_on_the_box(i in arb_ideal(4)) {
        let top = u64s(&i.lcm_of_gens());
        for p in LatticeBox::new(top) {
            let a = ExponentVector::from_u64s(&p);
            let cert = np_membership(&i, &a).unwrap();
            prop_assert!(verify_certificate(&i, &a, &cert), "{} at {}", i, a);
        }
    }

    #[test]
    fn power_witness_agrees_with_membership(i in arb_ideal(4)) {
        let top = u64s(&i.lcm_of_gens());
        for p in LatticeBox::new(top) {
            let a = ExponentVector::from_u64s(&p);
            let cert = np_membership(&i, &a).unwrap();
            let k = if cert.is_inside() { default_power_bound(&cert) } else { 4 };
            let w = power_witness(&i, &a, k).unwrap();
            prop_assert_eq!(w.is_some(), cert.is_inside(), "{} at {}", i, a);
        }
    }

    #[test]
    fn euler_characteristic_matches_taylor(i in arb_ideal(4)) {
        let table = betti_table(&i).unwrap();
        let mut chi: BTreeMap<ExponentVector, i64> = BTreeMap::new();
        for ((k, a), r) in table.entries() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            *chi.entry(a.clone()).or_insert(0) += sign * *r as i64;
        }
        chi.retain(|_, v| *v != 0);
        prop_assert_eq!(chi, taylor(&i));
    }

    #[test]
    fn betti_shape(i in arb_ideal(4)) {
        let table = betti_table(&i).unwrap();
        let totals = table.totals();
        prop_assert_eq!(table.get(0, &ExponentVector::zeros(i.nvars())), 1);
        prop_assert_eq!(totals[0], 1);
        prop_assert_eq!(totals[1] as usize, i.gens().len());
        let pd = table.projective_dimension();
        prop_assert!(codim(&i).unwrap() <= pd && pd <= i.nvars());
        if !embedded_primes(&i).unwrap().is_empty() {
            prop_assert!(!is_cohen_macaulay(&i).unwrap());
        }
    }

    #[test]
    fn documents_round_trip(i in arb_ideal(5), big in any::<u128>()) {
        let doc = IdealDocument::from_ideal(&i);
        prop_assert_eq!(&parse_ideal(&doc.to_text()).unwrap(), &doc);
        prop_assert_eq!(&parse_ideal(&doc.to_json()).unwrap(), &doc);
        let mut huge = i.gens()[0].clone().into_coords();
        huge[0] += big;
        let doc = IdealDocument { vars: doc.vars, gens: vec![ExponentVector::new(huge)] };
        prop_assert_eq!(&parse_ideal(&doc.to_text()).unwrap(), &doc);
        prop_assert_eq!(&parse_ideal(&doc.to_json()).unwrap(), &doc);
    }
}

#[test]
fn family_reduction_is_sound() {
    for n in 3..=4 {
        for t in 1..=3 {
            let p = FamilyParams::new(n, t).unwrap();
            let ideal = family_ideal(p);
            let delta = delta_set(p);
            for b in cube(n, t + 1) {
                if !np_membership(&ideal, &b).unwrap().is_inside() {
                    continue;
                }
                assert!(thm1_check(&b, p).unwrap(), "{b}");
                let r = reduce_to_delta(&b, p).unwrap();
                assert!(delta.contains(&r), "n={n} t={t} {b} -> {r}");
                assert!(r.divides(&b).unwrap(), "n={n} t={t} {b} -> {r}");
            }
        }
    }
}
