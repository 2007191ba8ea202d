//! Library results against brute force on every graph with at most 7 vertices.

mod common;

use common::*;
use cyclewidth::harness::enumerate::{all_graphs, connected_graphs};
use cyclewidth::treewidth::{exact_treewidth, ExactConfig};
use cyclewidth::{
    circumference, find_cycle_in_range, has_disjoint_cycles_minor, max_long_cycle_packing,
    min_hitting_set_long_cycles, Budget, Graph,
};

fn corpus(max_n: usize) -> Vec<Graph> {
    (0..=max_n).flat_map(|n| all_graphs(n).unwrap()).collect()
}

#[test]
fn enumeration_matches_published_counts() {
    let all: Vec<usize> = (0..=8).map(|n| all_graphs(n).unwrap().len()).collect();
    assert_eq!(all, [1, 1, 2, 4, 11, 34, 156, 1044, 12346]);
    let conn: Vec<usize> = (1..=8).map(|n| connected_graphs(n).unwrap().len()).collect();
    assert_eq!(conn, [1, 1, 2, 6, 21, 112, 853, 11117]);
}

#[test]
fn cycle_searches() {
    let b = Budget::default();
    for g in corpus(7) {
        let sets = cycle_sets(&g);
        assert_eq!(circumference(&g, b).unwrap(), common::circumference(&sets), "{g:?}");
        for lo in 3..=7 {
            for hi in lo..=8 {
                let found = find_cycle_in_range(&g, lo, hi, b).unwrap();
                let shortest = sets
                    .iter()
                    .map(|m| m.count_ones() as usize)
                    .filter(|l| (lo..=hi).contains(l))
                    .min();
                assert_eq!(found.as_ref().map(|c| c.len()), shortest, "{g:?} [{lo}, {hi}]");
                if let Some(c) = found {
                    assert_eq!(c.check(&g, lo), Ok(()));
                }
            }
        }
    }
}

#[test]
fn packing_hitting_and_minor() {
    let b = Budget::default();
    let specs: Vec<Vec<usize>> = (3..=7).flat_map(specs_with_total).collect();
    for g in corpus(7) {
        let sets = cycle_sets(&g);
        for ell in 3..=6 {
            let long = long_sets(&sets, ell);
            let nu = max_long_cycle_packing(&g, ell, None, b).unwrap().len();
            assert_eq!(nu, max_disjoint(&long), "{g:?} ℓ={ell}");
            let tau = min_hitting_set_long_cycles(&g, ell, b).unwrap().len();
            assert_eq!(tau, min_transversal(g.n(), &long), "{g:?} ℓ={ell}");
        }
        for lengths in &specs {
            let spec = cyclewidth::CycleFamilySpec::new(lengths.clone()).unwrap();
            let lib = has_disjoint_cycles_minor(&g, &spec, b).unwrap().is_some();
            assert_eq!(lib, has_minor(&sets, lengths), "{g:?} {spec}");
        }
    }
}

#[test]
fn treewidth_routes_agree_with_brute_force() {
    for g in corpus(6) {
        let want = treewidth_brute_force(&g);
        for dp_cutoff in [0, 22] {
            let r = exact_treewidth(&g, ExactConfig { budget: Budget::default(), dp_cutoff });
            assert!(r.exact);
            assert_eq!(r.width, want, "{g:?} cutoff {dp_cutoff}");
        }
    }
}
