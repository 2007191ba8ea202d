use proptest::prelude::*;

use cyclewidth::format::{self, graph6, pace, Format};
use cyclewidth::harness::enumerate::canonical_code;
use cyclewidth::treewidth::heuristics::{min_fill_order, minor_min_width};
use cyclewidth::{
    decompose, exact_treewidth, max_long_cycle_packing, min_hitting_set_long_cycles,
    validate_td, verify_hitting_set, verify_outcome, verify_packing, Budget, CycleFamilySpec,
    Cycle, Graph, TreeDecomposition, VertexSet,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_roundtrip(g in graph(70)) {
        let text = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(text.as_bytes()).unwrap(), g.clone());
        let bytes = format::serialize(&g, Format::Graph6);
        prop_assert_eq!(format::serialize(&format::parse(Format::Graph6, &bytes).unwrap(), Format::Graph6), bytes);
    }

    #[test]
    fn gr_roundtrip(g in graph(30)) {
        let bytes = format::serialize(&g, Format::Gr);
        let back = format::parse(Format::detect(&bytes), &bytes).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(format::serialize(&back, Format::Gr), bytes);
    }

    #[test]
    fn deletion_keeps_exactly_the_surviving_edges((g, perm) in graph_with_perm(20)) {
        let removed: VertexSet = perm.iter().copied().take(g.n() / 3).collect();
        let (h, map) = g.delete_vertices(&removed);
        prop_assert_eq!(h.n(), g.n() - removed.len());
        for (u, v) in h.edges() {
            prop_assert!(g.has_edge(map.old(u), map.old(v)));
        }
        let surviving = g.edges().filter(|&(u, v)| !removed.contains(u) && !removed.contains(v)).count();
        prop_assert_eq!(h.m(), surviving);
    }

    #[test]
    fn any_elimination_order_gives_a_valid_decomposition((g, perm) in graph_with_perm(16)) {
        let td = TreeDecomposition::from_elimination_order(&g, &perm);
        prop_assert_eq!(validate_td(&g, &td), Ok(()));
        let text = pace::write_td(&td, g.n());
        let (back, n) = pace::parse_td(text.as_bytes()).unwrap();
        prop_assert_eq!(n, g.n());
        prop_assert_eq!(pace::write_td(&back, n), text);
    }

    #[test]
    fn adding_a_set_to_every_bag_stays_valid((g, perm) in graph_with_perm(14)) {
        let removed: VertexSet = perm.iter().copied().take(g.n() / 2).collect();
        let (h, map) = g.delete_vertices(&removed);
        let td = exact_treewidth(&h, Budget::default()).decomposition;
        let lifted = td.add_to_all_bags(&removed, &map).unwrap();
        prop_assert_eq!(validate_td(&g, &lifted), Ok(()));
        prop_assert!(lifted.width() <= td.width() + removed.len());
    }

    #[test]
    fn exact_treewidth_within_heuristic_bounds(g in graph(14)) {
        let r = exact_treewidth(&g, Budget::default());
        prop_assert!(r.exact);
        prop_assert!(minor_min_width(&g) <= r.width);
        prop_assert!(r.width <= min_fill_order(&g).1);
        prop_assert_eq!(validate_td(&g, &r.decomposition), Ok(()));
        prop_assert_eq!(r.decomposition.width(), r.width);
    }

    #[test]
    fn treewidth_is_a_relabelling_invariant((g, perm) in graph_with_perm(12)) {
        let a = exact_treewidth(&g, Budget::default()).width;
        let b = exact_treewidth(&g.relabel(&perm), Budget::default()).width;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn canonical_code_is_a_relabelling_invariant((g, perm) in graph_with_perm(9)) {
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&g.relabel(&perm)).unwrap());
    }

    #[test]
    fn packing_never_exceeds_hitting(g in graph(11), ell in 3usize..7) {
        let b = Budget::default();
        let p = max_long_cycle_packing(&g, ell, None, b).unwrap();
        let x = min_hitting_set_long_cycles(&g, ell, b).unwrap();
        prop_assert_eq!(verify_packing(&g, &p, ell), Ok(()));
        prop_assert!(verify_hitting_set(&g, &x.vertices, ell, b).unwrap());
        prop_assert!(p.len() <= x.len());
        for c in &p.cycles {
            prop_assert_eq!(&c.canonical(), c);
        }
    }

    #[test]
    fn decomposer_outcomes_verify(g in graph(12), lengths in proptest::collection::vec(3usize..6, 1..4)) {
        let spec = CycleFamilySpec::new(lengths).unwrap();
        let o = decompose(&g, &spec, Budget::default()).unwrap();
        prop_assert_eq!(verify_outcome(&g, &spec, &o), Ok(()));
        let back = cyclewidth::Outcome::from_text(&o.to_text(g.n()), &spec).unwrap();
        prop_assert_eq!(verify_outcome(&g, &spec, &back), Ok(()));
        prop_assert_eq!(back.to_text(g.n()), o.to_text(g.n()));
    }

    #[test]
    fn canonical_cycle_is_a_fixed_point(mut v in proptest::collection::vec(0usize..100, 3..10), rot in 0usize..10) {
        v.sort_unstable();
        v.dedup();
        prop_assume!(v.len() >= 3);
        let r = rot % v.len();
        v.rotate_left(r);
        let c = Cycle::new(v.clone()).canonical();
        prop_assert_eq!(c.canonical(), c.clone());
        v.reverse();
        prop_assert_eq!(Cycle::new(v).canonical(), c);
    }
}
