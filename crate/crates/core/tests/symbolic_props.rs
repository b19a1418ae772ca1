use std::collections::BTreeSet;

use proptest::prelude::*;
use sympow::symbolic::{differential_membership, differential_power};
use sympow::{Monomial, MonomialIdeal, SymbolicIdeal};
use sympow_oracles as oracle;

fn squarefree(d: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(1u64..(1 << d), 1..=max_gens).prop_map(move |masks| {
        MonomialIdeal::from_supports(d, masks.iter().map(|m| (0..d).filter(move |i| m >> i & 1 == 1))).unwrap()
    })
}

fn as_set(i: &MonomialIdeal) -> BTreeSet<Vec<u32>> {
    i.generators().iter().map(|g| g.exponents().to_vec()).collect()
}

fn gens_of(i: &MonomialIdeal) -> Vec<Vec<u32>> {
    i.generators().iter().map(|g| g.exponents().to_vec()).collect()
}

#[test]
fn triangle_square_matches_box_oracle() {
    let tri = MonomialIdeal::from_supports(3, [[0, 1], [1, 2], [0, 2]]).unwrap();
    let s = SymbolicIdeal::new(&tri).unwrap();
    for n in 1..=4 {
        assert_eq!(as_set(&s.power(n).unwrap()), oracle::symbolic_power_by_box(3, &gens_of(&tri), n));
    }
}

#[test]
fn maximal_ideal_powers_are_differential_powers() {
    for d in 1..=4 {
        let mx = MonomialIdeal::maximal(d);
        for t in 1..=4 {
            let base = mx.power(t).unwrap();
            for n in 1..=4 {
                assert_eq!(
                    differential_power(&base, n, 1 << 20).unwrap(),
                    mx.power(n + t - 1).unwrap(),
                    "d={d} t={t} n={n}"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn enumeration_agrees_with_intersection_and_box(i in squarefree(5, 5), n in 1u32..=3) {
        let s = SymbolicIdeal::new(&i).unwrap();
        let fast = s.power(n).unwrap();
        prop_assert_eq!(&fast, &s.power_via_primes(n).unwrap());
        prop_assert_eq!(as_set(&fast), oracle::symbolic_power_by_box(5, &gens_of(&i), n));
    }

    #[test]
    fn ordinary_power_inside_symbolic(i in squarefree(5, 5), n in 1u32..=4) {
        let s = SymbolicIdeal::new(&i).unwrap();
        for g in i.power(n).unwrap().generators() {
            prop_assert!(s.contains(g, n).unwrap());
        }
    }

    #[test]
    fn symbolic_equals_differential(i in squarefree(5, 5), n in 1u32..=3, probe in prop::collection::vec(0u32..=3, 5)) {
        let s = SymbolicIdeal::new(&i).unwrap();
        let m = Monomial::new(probe);
        prop_assert_eq!(s.contains(&m, n).unwrap(), differential_membership(&i, &m, n).unwrap());
    }

    #[test]
    fn symbolic_powers_multiply(
        i in squarefree(5, 5),
        a in 1u32..=3,
        b in 1u32..=3,
        u in prop::collection::vec(0u32..=3, 5),
        v in prop::collection::vec(0u32..=3, 5),
    ) {
        let s = SymbolicIdeal::new(&i).unwrap();
        let (u, v) = (Monomial::new(u), Monomial::new(v));
        if s.contains(&u, a).unwrap() && s.contains(&v, b).unwrap() {
            prop_assert!(s.contains(&u.checked_mul(&v).unwrap(), a + b).unwrap());
        }
    }

    #[test]
    fn known_containments_hold(i in squarefree(5, 5), n in 1u32..=2) {
        let s = SymbolicIdeal::new(&i).unwrap();
        let h = s.big_height() as u32;
        prop_assert!(s.containment(h * n, n).unwrap().holds);
        prop_assert!(s.containment(h * n - h + 1, n).unwrap().holds);
    }

    #[test]
    fn equality_witness_is_genuine(i in squarefree(5, 5), n in 2u32..=3) {
        let s = SymbolicIdeal::new(&i).unwrap();
        let check = s.equals_ordinary(n).unwrap();
        let ordinary = i.power(n).unwrap();
        let symbolic = s.power(n).unwrap();
        prop_assert_eq!(check.holds, ordinary == symbolic);
        if let Some(w) = check.witness {
            prop_assert!(s.contains(&w, n).unwrap());
            prop_assert!(!ordinary.contains(&w).unwrap());
            let first = symbolic.generators().iter().find(|g| !ordinary.contains(g).unwrap()).unwrap();
            prop_assert_eq!(&w, first);
        }
    }
}
