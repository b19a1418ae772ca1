use std::collections::BTreeSet;

use proptest::prelude::*;
use sympow::decomposition::{minimal_primes, VertexSet};
use sympow::stanley_reisner::{fano_complex, fano_ideal, stanley_reisner_complex, stanley_reisner_ideal};
use sympow::{MonomialIdeal, SimplicialComplex};
use sympow_oracles as oracle;

fn complex_strategy(n: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(0u64..(1 << n), 0..6)
        .prop_map(move |masks| SimplicialComplex::new(n, masks.into_iter().map(VertexSet).collect()).unwrap())
}

fn squarefree(d: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(1u64..(1 << d), 1..=max_gens).prop_map(move |masks| {
        MonomialIdeal::from_supports(d, masks.iter().map(|m| (0..d).filter(move |i| m >> i & 1 == 1))).unwrap()
    })
}

#[test]
fn fano_matches_printed_ideal() {
    let c = fano_complex();
    assert_eq!(stanley_reisner_ideal(&c).unwrap(), fano_ideal());
    assert_eq!(c.facets().len(), 7);
    assert!(c.facets().iter().all(|f| f.len() == 3));
}

#[test]
fn fano_complex_fails_exchange_but_its_bases_form_a_matroid() {
    // The printed cubics are the 28 bases of the Fano matroid; their
    // Stanley–Reisner complex is the complex of the 7 lines.
    let lines = fano_complex();
    let check = lines.matroid_check();
    assert!(!check.holds);
    let failure = check.counterexample.unwrap();
    assert_eq!(failure.facet.to_vec(), vec![0, 1, 2]);
    assert_eq!(failure.other.to_vec(), vec![0, 3, 6]);
    assert_eq!(failure.removed, 1);

    let bases = SimplicialComplex::new(
        7,
        fano_ideal().generators().iter().map(|g| VertexSet::from_iter(g.support())).collect(),
    )
    .unwrap();
    assert!(bases.is_matroid());
    assert!(bases.is_pure());
}

#[test]
fn every_complex_on_four_vertices_round_trips() {
    // All antichains of subsets of {0..3}, via every family of subsets.
    let mut seen = BTreeSet::new();
    for family in 0u32..1 << 16 {
        let faces: Vec<VertexSet> = (0..16).filter(|b| family >> b & 1 == 1).map(|b| VertexSet(b as u64)).collect();
        let c = SimplicialComplex::new(4, faces).unwrap();
        if !seen.insert(c.facets().iter().map(|f| f.0).collect::<Vec<_>>()) {
            continue;
        }
        let ideal = stanley_reisner_ideal(&c).unwrap();
        if ideal.is_unit() {
            assert!(c.facets().is_empty());
            continue;
        }
        assert_eq!(stanley_reisner_complex(&ideal).unwrap(), c);
    }
    // Dedekind number M(4) = 168 antichains.
    assert_eq!(seen.len(), 168);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn complex_round_trip(c in complex_strategy(6)) {
        let ideal = stanley_reisner_ideal(&c).unwrap();
        let facets: Vec<Vec<usize>> = c.facets().iter().map(|f| f.to_vec()).collect();
        let ours: BTreeSet<Vec<usize>> = ideal.generators().iter().map(|g| g.support().collect()).collect();
        prop_assert_eq!(ours, oracle::minimal_nonfaces(6, &facets));
        if !ideal.is_unit() {
            prop_assert_eq!(stanley_reisner_complex(&ideal).unwrap(), c.clone());
        }
        if c.is_matroid() {
            prop_assert!(c.is_pure());
        }
    }

    #[test]
    fn ideal_round_trip(i in squarefree(5, 6)) {
        let c = stanley_reisner_complex(&i).unwrap();
        prop_assert_eq!(stanley_reisner_ideal(&c).unwrap(), i.clone());
        let full = VertexSet::full(5);
        let mut complements: Vec<VertexSet> = c.facets().iter().map(|f| full.difference(*f)).collect();
        complements.sort_by(VertexSet::canonical_cmp);
        prop_assert_eq!(minimal_primes(&i).unwrap(), complements);
    }
}
