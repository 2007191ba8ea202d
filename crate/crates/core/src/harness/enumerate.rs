//! All graphs on `n` vertices up to isomorphism, by canonical augmentation.
//!
//! Every graph on `n + 1` vertices arises from one on `n` vertices by adding
//! a vertex, so level `n + 1` is the set of canonical forms of all one-vertex
//! extensions of level `n`. Canonical forms come from individualisation and
//! refinement: an equitable partition is refined until it is discrete, each
//! discrete leaf gives a labelling, and the largest adjacency code over all
//! leaves is the canonical one.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled; the adjacency code must fit in 64 bits.
pub const MAX_ENUMERATION_ORDER: usize = 11;

/// Upper triangle of the adjacency matrix under `order` (position -> vertex),
/// column by column as in graph6, read as a binary number.
fn code_of(adj: &[u64], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for i in 0..j {
            code = (code << 1) | (adj[order[i]] >> order[j] & 1);
        }
    }
    code
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("valid code")
}

/// Splits cells by neighbour counts into every cell until stable.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    loop {
        let masks = cells.clone();
        let mut next = Vec::with_capacity(cells.len());
        for &cell in &masks {
            let mut keyed: Vec<(Vec<u32>, usize)> = bits::iter(cell)
                .map(|v| (masks.iter().map(|&c| (adj[v] & c).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut group = 0u64;
            for (i, (key, v)) in keyed.iter().enumerate() {
                if i > 0 && *key != keyed[i - 1].0 {
                    next.push(group);
                    group = 0;
                }
                group |= bits::bit(*v);
            }
            next.push(group);
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

fn search(adj: &[u64], mut cells: Vec<u64>, best: &mut u64) {
    refine(adj, &mut cells);
    let Some(idx) = cells.iter().position(|c| c.count_ones() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        *best = (*best).max(code_of(adj, &order));
        return;
    };
    let cell = cells[idx];
    let mut tried: Vec<usize> = Vec::new();
    for v in bits::iter(cell) {
        // Twins (same neighbourhood apart from each other) give the same leaves.
        let twin = tried.iter().any(|&u| {
            adj[u] & !bits::bit(v) == adj[v] & !bits::bit(u)
        });
        if twin {
            continue;
        }
        tried.push(v);
        let mut split = Vec::with_capacity(cells.len() + 1);
        split.extend_from_slice(&cells[..idx]);
        split.push(bits::bit(v));
        split.push(cell & !bits::bit(v));
        split.extend_from_slice(&cells[idx + 1..]);
        search(adj, split, best);
    }
}

/// Canonical adjacency code: two graphs get the same code iff they are
/// isomorphic. Requires `n <= MAX_ENUMERATION_ORDER`.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::GraphTooLarge { n, max: MAX_ENUMERATION_ORDER });
    }
    let adj = g.masks()?;
    let mut best = 0;
    let start = if n == 0 { vec![] } else { vec![bits::full(n)] };
    search(&adj, start, &mut best);
    Ok(best)
}

/// The canonical relabelling of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(graph_from_code(g.n(), canonical_code(g)?))
}

fn extend(level: &[u64], n: usize, connected: bool) -> Vec<u64> {
    let next: HashSet<u64> = level
        .par_iter()
        .flat_map_iter(|&code| {
            let g = graph_from_code(n, code);
            let adj = g.masks().expect("small");
            let first = usize::from(connected);
            (first as u64..1u64 << n).map(move |nbrs| {
                let mut a = adj.clone();
                for v in bits::iter(nbrs) {
                    a[v] |= bits::bit(n);
                }
                a.push(nbrs);
                let mut best = 0;
                search(&a, vec![bits::full(n + 1)], &mut best);
                best
            })
        })
        .collect();
    let mut out: Vec<u64> = next.into_iter().collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn enumerate(n: usize, connected: bool) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::GraphTooLarge { n, max: MAX_ENUMERATION_ORDER });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    // A connected graph on n + 1 vertices has a non-cut vertex, so removing
    // it leaves a connected graph: extending connected graphs suffices.
    let mut level = vec![0u64];
    for m in 1..n {
        level = extend(&level, m, connected);
    }
    Ok(level.into_iter().map(|c| graph_from_code(n, c)).collect())
}

/// All graphs on exactly `n` vertices up to isomorphism, in decreasing
/// canonical-code order.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate(n, false)
}

/// All connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(vec![]);
    }
    enumerate(n, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_is_a_relabelling_invariant() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let h = g.relabel(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_ne!(canonical_code(&g).unwrap(), canonical_code(&c5).unwrap());
    }

    #[test]
    fn canonical_form_is_isomorphic_copy() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let f = canonical_form(&g).unwrap();
        assert_eq!(f.m(), 3);
        assert_eq!(canonical_form(&f).unwrap(), f);
    }

    #[test]
    fn small_counts() {
        let all: Vec<usize> = (0..=6).map(|n| all_graphs(n).unwrap().len()).collect();
        assert_eq!(all, [1, 1, 2, 4, 11, 34, 156]);
        let conn: Vec<usize> = (0..=6).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(conn, [0, 1, 1, 2, 6, 21, 112]);
        assert!(connected_graphs(5).unwrap().iter().all(|g| g.is_connected()));
    }
}
