//! Treewidth bounds that work on graphs of any size.

use std::collections::BTreeSet;

use crate::graph::{Graph, Vertex};

fn adjacency_sets(g: &Graph) -> Vec<BTreeSet<Vertex>> {
    (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect()
}

fn fill_in(adj: &[BTreeSet<Vertex>], v: Vertex) -> usize {
    let ns: Vec<Vertex> = adj[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in ns.iter().enumerate() {
        missing += ns[i + 1..].iter().filter(|b| !adj[a].contains(b)).count();
    }
    missing
}

/// Greedy min-fill elimination ordering (ties: smaller degree, then smaller
/// id) and the width it achieves.
pub fn min_fill_order(g: &Graph) -> (Vec<Vertex>, usize) {
    let mut adj = adjacency_sets(g);
    let mut alive: BTreeSet<Vertex> = (0..g.n()).collect();
    let mut order = Vec::with_capacity(g.n());
    let mut width = 0;
    while let Some(v) = alive.iter().copied().min_by_key(|&v| (fill_in(&adj, v), adj[v].len(), v)) {
        let ns: Vec<Vertex> = adj[v].iter().copied().collect();
        width = width.max(ns.len());
        for (i, &a) in ns.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &ns[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj[v].clear();
        alive.remove(&v);
        order.push(v);
    }
    (order, width)
}

/// Minor-min-width lower bound: repeatedly contract a minimum-degree vertex
/// into its minimum-degree neighbour, recording the largest minimum degree.
pub fn minor_min_width(g: &Graph) -> usize {
    let mut adj = adjacency_sets(g);
    let mut alive: BTreeSet<Vertex> = (0..g.n()).collect();
    let mut lb = 0;
    while alive.len() > 1 {
        let v = alive.iter().copied().min_by_key(|&v| (adj[v].len(), v)).expect("nonempty");
        lb = lb.max(adj[v].len());
        let target = adj[v].iter().copied().min_by_key(|&u| (adj[u].len(), u));
        let ns = std::mem::take(&mut adj[v]);
        for &w in &ns {
            adj[w].remove(&v);
        }
        if let Some(u) = target {
            for &w in ns.iter().filter(|&&w| w != u) {
                adj[u].insert(w);
                adj[w].insert(u);
            }
        }
        alive.remove(&v);
    }
    lb
}

/// Same bound on a bitmask graph restricted to `alive`.
pub(crate) fn minor_min_width_masks(adj: &[u64], alive: u64) -> usize {
    use crate::bits;
    let mut adj: Vec<u64> = adj.iter().map(|&a| a & alive).collect();
    let mut alive = alive;
    let mut lb = 0;
    while alive.count_ones() > 1 {
        let v = bits::iter(alive).min_by_key(|&v| (adj[v].count_ones(), v)).expect("nonempty");
        let deg = adj[v].count_ones() as usize;
        lb = lb.max(deg);
        let ns = adj[v];
        alive &= !bits::bit(v);
        for w in bits::iter(ns) {
            adj[w] &= !bits::bit(v);
        }
        if let Some(u) = bits::iter(ns).min_by_key(|&u| (adj[u].count_ones(), u)) {
            let others = ns & !bits::bit(u);
            adj[u] |= others;
            for w in bits::iter(others) {
                adj[w] |= bits::bit(u);
            }
        }
        adj[v] = 0;
    }
    lb
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn complete_graph_bounds_agree() {
        let g = complete(6);
        assert_eq!(min_fill_order(&g).1, 5);
        assert_eq!(minor_min_width(&g), 5);
        assert_eq!(minor_min_width_masks(&g.masks().unwrap(), crate::bits::full(6)), 5);
    }

    #[test]
    fn cycle_bounds() {
        let g = Graph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        assert_eq!(min_fill_order(&g).1, 2);
        assert_eq!(minor_min_width(&g), 2);
    }

    #[test]
    fn empty_and_edgeless() {
        assert_eq!(min_fill_order(&Graph::empty(0)), (vec![], 0));
        assert_eq!(minor_min_width(&Graph::empty(4)), 0);
    }
}
