//! Simple undirected graphs on the vertex ids `0..n`.
//!
//! Graphs are immutable values. Every operation that removes vertices returns
//! a fresh graph together with an [`IdMap`] that translates the compact new
//! ids back to the ids of the graph it was derived from.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Vertex id.
pub type Vertex = usize;

/// Largest graph the bitmask-based exact solvers accept.
pub const MAX_EXACT_VERTICES: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// Builds a simple graph. Duplicate and reversed edges collapse into one
    /// edge; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let m = adj.iter().map(BTreeSet::len).sum::<usize>() / 2;
        Ok(Graph { adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(), m })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        (0..self.n()).collect()
    }

    /// Induced subgraph on `V(self) \ removed`, relabelled compactly in
    /// increasing order of the surviving old ids.
    pub fn delete_vertices(&self, removed: &VertexSet) -> (Graph, IdMap) {
        let keep: Vec<Vertex> = (0..self.n()).filter(|v| !removed.contains(*v)).collect();
        self.induced(&keep)
    }

    /// Induced subgraph on `keep` (must be sorted and duplicate free).
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, IdMap) {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut m = 0;
        let adj = keep
            .iter()
            .map(|&v| {
                let ns: Vec<Vertex> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                    .collect();
                m += ns.len();
                ns
            })
            .collect();
        (Graph { adj, m: m / 2 }, IdMap { to_old: keep.to_vec() })
    }

    /// Connected components ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for root in 0..self.n() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            let mut comp = BTreeSet::new();
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|ns| ns.iter().map(|&w| w + off).collect()));
        Graph { adj, m: self.m + other.m }
    }

    /// Applies a permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let edges = self.edges().map(|(u, v)| (perm[u], perm[v]));
        Graph::from_edges(self.n(), edges).expect("a permutation preserves simplicity")
    }

    /// Adjacency bitmasks, for the exact solvers.
    pub fn masks(&self) -> Result<Vec<u64>> {
        if self.n() > MAX_EXACT_VERTICES {
            return Err(Error::GraphTooLarge { n: self.n(), max: MAX_EXACT_VERTICES });
        }
        Ok(self.adj.iter().map(|ns| ns.iter().fold(0u64, |m, &w| m | (1 << w))).collect())
    }
}

/// Translation from the compact ids of a derived graph back to the ids of
/// the graph it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdMap {
    to_old: Vec<Vertex>,
}

impl IdMap {
    pub fn identity(n: usize) -> Self {
        IdMap { to_old: (0..n).collect() }
    }

    pub fn from_vec(to_old: Vec<Vertex>) -> Self {
        IdMap { to_old }
    }

    pub fn old(&self, new: Vertex) -> Vertex {
        self.to_old[new]
    }

    pub fn len(&self) -> usize {
        self.to_old.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_old.is_empty()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.to_old
    }

    /// `self` maps B -> A, `inner` maps C -> B; the result maps C -> A.
    pub fn compose(&self, inner: &IdMap) -> IdMap {
        IdMap { to_old: inner.to_old.iter().map(|&b| self.to_old[b]).collect() }
    }
}

/// An ordered set of vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<Vertex>);

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(BTreeSet::new())
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        self.0.insert(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.0.iter().copied().collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn from_mask(mask: u64) -> Self {
        crate::bits::iter(mask).collect()
    }

    /// Ids translated through `map` (new -> old).
    pub fn lift(&self, map: &IdMap) -> VertexSet {
        self.iter().map(|v| map.old(v)).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::collections::btree_set::Iter<'a, Vertex>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn triangle_from_edges() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(Graph::from_edges(1, [(0, 0)]), Err(Error::SelfLoop(0))));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn delete_from_triangle() {
        let g = cycle(3);
        let (h, map) = g.delete_vertices(&[0].into_iter().collect());
        assert_eq!((h.n(), h.m()), (2, 1));
        assert_eq!(map.as_slice(), &[1, 2]);
    }

    #[test]
    fn delete_nothing_is_identity() {
        let g = cycle(6);
        let (h, map) = g.delete_vertices(&VertexSet::new());
        assert_eq!(h, g);
        assert_eq!(map, IdMap::identity(6));
    }

    #[test]
    fn delete_two_from_c5_leaves_path() {
        let (h, map) = cycle(5).delete_vertices(&[0, 1].into_iter().collect());
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(map.as_slice(), &[2, 3, 4]);
    }

    #[test]
    fn delete_everything() {
        let g = cycle(4);
        let (h, _) = g.delete_vertices(&g.vertices());
        assert_eq!(h.n(), 0);
    }

    #[test]
    fn components() {
        let g = cycle(3).disjoint_union(&cycle(3));
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].to_vec(), vec![3, 4, 5]);
        assert!(Graph::empty(0).connected_components().is_empty());
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.connected_components(), vec![(0..4).collect::<VertexSet>()]);
    }

    #[test]
    fn id_map_composition() {
        let outer = IdMap::from_vec(vec![3, 5, 7]);
        let inner = IdMap::from_vec(vec![0, 2]);
        assert_eq!(outer.compose(&inner).as_slice(), &[3, 7]);
    }
}
