use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, IdMap, Vertex, VertexSet};

/// A tree of bags. Node ids are indices into `bags`; `edges` are the tree
/// edges between node ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<Vertex>>,
    edges: Vec<(usize, usize)>,
}

/// First tree-decomposition axiom found to fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TdViolation {
    NotATree(String),
    VertexOutOfRange { node: usize, vertex: Vertex },
    VertexUncovered(Vertex),
    EdgeUncovered(Vertex, Vertex),
    Incoherent(Vertex),
}

impl fmt::Display for TdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TdViolation::NotATree(why) => write!(f, "bag graph is not a tree: {why}"),
            TdViolation::VertexOutOfRange { node, vertex } => {
                write!(f, "bag {node} contains vertex {vertex} which is not in the graph")
            }
            TdViolation::VertexUncovered(v) => write!(f, "vertex {v} is in no bag"),
            TdViolation::EdgeUncovered(u, v) => write!(f, "edge {u}-{v} is in no bag"),
            TdViolation::Incoherent(v) => write!(f, "bags containing vertex {v} are not connected"),
        }
    }
}

impl TreeDecomposition {
    /// Bags are normalised to ascending, duplicate-free order.
    pub fn new(bags: Vec<Vec<Vertex>>, edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        let edges = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        TreeDecomposition { bags, edges }
    }

    /// The trivial decomposition with a single bag holding every vertex.
    pub fn single_bag(n: usize) -> Self {
        TreeDecomposition { bags: vec![(0..n).collect()], edges: Vec::new() }
    }

    pub fn bags(&self) -> &[Vec<Vertex>] {
        &self.bags
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Largest bag size minus one (0 for a decomposition of the empty graph).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Decomposition induced by eliminating the vertices of `g` in `order`.
    /// Each vertex yields the bag `{v} ∪ later neighbours in the fill graph`,
    /// attached to the bag of its earliest-eliminated later neighbour; the
    /// roots of the resulting forest are chained together.
    pub fn from_elimination_order(g: &Graph, order: &[Vertex]) -> Self {
        let n = g.n();
        if n == 0 {
            return TreeDecomposition { bags: vec![Vec::new()], edges: Vec::new() };
        }
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut fill: Vec<BTreeSet<Vertex>> =
            (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
        let mut bags = Vec::with_capacity(n);
        let mut parent = vec![None; n];
        for (i, &v) in order.iter().enumerate() {
            let later: Vec<Vertex> = fill[v].iter().copied().filter(|&w| pos[w] > i).collect();
            for (a, &x) in later.iter().enumerate() {
                for &y in &later[a + 1..] {
                    fill[x].insert(y);
                    fill[y].insert(x);
                }
            }
            parent[i] = later.iter().map(|&w| pos[w]).min();
            let mut bag = later;
            bag.push(v);
            bags.push(bag);
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut prev_root = None;
        for (i, p) in parent.iter().enumerate() {
            match p {
                Some(p) => edges.push((i, *p)),
                None => {
                    if let Some(r) = prev_root {
                        edges.push((r, i));
                    }
                    prev_root = Some(i);
                }
            }
        }
        let mut td = TreeDecomposition::new(bags, edges);
        td.compress();
        td
    }

    /// Contracts every tree edge whose one bag is a subset of the other.
    pub fn compress(&mut self) {
        loop {
            let found = self.edges.iter().enumerate().find_map(|(i, &(a, b))| {
                if is_subset(&self.bags[a], &self.bags[b]) {
                    Some((i, a, b))
                } else if is_subset(&self.bags[b], &self.bags[a]) {
                    Some((i, b, a))
                } else {
                    None
                }
            });
            let Some((idx, gone, keep)) = found else { break };
            self.edges.swap_remove(idx);
            for e in &mut self.edges {
                for end in [&mut e.0, &mut e.1] {
                    if *end == gone {
                        *end = keep;
                    }
                }
            }
            // drop node `gone`, shifting higher ids down
            self.bags.remove(gone);
            for e in &mut self.edges {
                for end in [&mut e.0, &mut e.1] {
                    if *end > gone {
                        *end -= 1;
                    }
                }
                *e = (e.0.min(e.1), e.0.max(e.1));
            }
        }
        self.edges.sort_unstable();
    }

    /// Glues decompositions of vertex-disjoint pieces of one graph. Each part
    /// comes with the map from its local ids to the ids of the whole graph;
    /// root (node 0) of each part is linked to the root of the previous part.
    pub fn join(parts: Vec<(TreeDecomposition, IdMap)>) -> Self {
        let mut bags = Vec::new();
        let mut edges = Vec::new();
        let mut prev_root: Option<usize> = None;
        for (td, map) in parts {
            let off = bags.len();
            bags.extend(td.bags.iter().map(|b| b.iter().map(|&v| map.old(v)).collect::<Vec<_>>()));
            edges.extend(td.edges.iter().map(|&(a, b)| (a + off, b + off)));
            if let Some(r) = prev_root {
                edges.push((r, off));
            }
            prev_root = Some(off);
        }
        if bags.is_empty() {
            bags.push(Vec::new());
        }
        let mut td = TreeDecomposition::new(bags, edges);
        td.edges.sort_unstable();
        td
    }

    /// Every bag translated through `map` and enlarged by `extra`, which must
    /// not meet the image of `map`.
    pub fn add_to_all_bags(&self, extra: &VertexSet, map: &IdMap) -> Result<Self> {
        if let Some(&clash) = map.as_slice().iter().find(|&&v| extra.contains(v)) {
            return Err(Error::IdCollision(clash));
        }
        let bags = self
            .bags
            .iter()
            .map(|b| b.iter().map(|&v| map.old(v)).chain(extra.iter()).collect())
            .collect();
        Ok(TreeDecomposition::new(bags, self.edges.clone()))
    }
}

fn is_subset(small: &[Vertex], big: &[Vertex]) -> bool {
    small.len() <= big.len() && small.iter().all(|v| big.binary_search(v).is_ok())
}

/// Checks that `td` is a tree decomposition of `g`.
pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> Result<(), TdViolation> {
    let nodes = td.bags.len();
    if nodes == 0 {
        return Err(TdViolation::NotATree("no nodes".into()));
    }
    if td.edges.len() != nodes - 1 {
        return Err(TdViolation::NotATree(format!(
            "{} nodes but {} edges",
            nodes,
            td.edges.len()
        )));
    }
    let mut uf: Vec<usize> = (0..nodes).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for &(a, b) in &td.edges {
        if a >= nodes || b >= nodes || a == b {
            return Err(TdViolation::NotATree(format!("bad tree edge {a}-{b}")));
        }
        let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
        if ra == rb {
            return Err(TdViolation::NotATree(format!("edge {a}-{b} closes a cycle")));
        }
        uf[ra] = rb;
    }

    let n = g.n();
    let mut count = vec![0usize; n];
    for (node, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= n {
                return Err(TdViolation::VertexOutOfRange { node, vertex: v });
            }
            count[v] += 1;
        }
    }
    if let Some(v) = (0..n).find(|&v| count[v] == 0) {
        return Err(TdViolation::VertexUncovered(v));
    }
    for (u, v) in g.edges() {
        let covered = td
            .bags
            .iter()
            .any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok());
        if !covered {
            return Err(TdViolation::EdgeUncovered(u, v));
        }
    }
    // Nodes holding v span a subforest; it is connected iff it has one edge
    // fewer than nodes.
    let mut inner_edges = vec![0usize; n];
    for &(a, b) in &td.edges {
        let (ba, bb) = (&td.bags[a], &td.bags[b]);
        for v in ba.iter().filter(|v| bb.binary_search(v).is_ok()) {
            inner_edges[*v] += 1;
        }
    }
    if let Some(v) = (0..n).find(|&v| inner_edges[v] + 1 != count[v]) {
        return Err(TdViolation::Incoherent(v));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn single_bag_is_valid() {
        let g = complete(5);
        let td = TreeDecomposition::single_bag(5);
        assert_eq!(validate_td(&g, &td), Ok(()));
        assert_eq!(td.width(), 4);
    }

    #[test]
    fn path_decomposition_of_p4() {
        let g = path(4);
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]], vec![(0, 1), (1, 2)]);
        assert_eq!(validate_td(&g, &td), Ok(()));
        assert_eq!(td.width(), 1);
        let broken =
            TreeDecomposition::new(vec![vec![0, 1], vec![2], vec![2, 3]], vec![(0, 1), (1, 2)]);
        assert_eq!(validate_td(&g, &broken), Err(TdViolation::EdgeUncovered(1, 2)));
    }

    #[test]
    fn detects_incoherence_and_non_trees() {
        let g = path(3);
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![2], vec![1, 2]], vec![(0, 1), (1, 2)]);
        assert_eq!(validate_td(&g, &td), Err(TdViolation::Incoherent(1)));
        let cyc = TreeDecomposition::new(vec![vec![0, 1, 2]; 3], vec![(0, 1), (1, 2)]);
        assert_eq!(validate_td(&g, &cyc), Ok(()));
        let not_tree = TreeDecomposition::new(vec![vec![0, 1, 2]; 3], vec![(0, 1), (0, 1)]);
        assert!(matches!(validate_td(&g, &not_tree), Err(TdViolation::NotATree(_))));
        let uncovered = TreeDecomposition::new(vec![vec![0, 1]], vec![]);
        assert_eq!(validate_td(&g, &uncovered), Err(TdViolation::VertexUncovered(2)));
    }

    #[test]
    fn elimination_order_of_cycle() {
        let g = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let td = TreeDecomposition::from_elimination_order(&g, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(validate_td(&g, &td), Ok(()));
        assert_eq!(td.width(), 2);
    }

    #[test]
    fn disconnected_elimination_is_joined() {
        let g = path(3).disjoint_union(&path(2));
        let td = TreeDecomposition::from_elimination_order(&g, &[0, 1, 2, 3, 4]);
        assert_eq!(validate_td(&g, &td), Ok(()));
        let empty = TreeDecomposition::from_elimination_order(&Graph::empty(0), &[]);
        assert_eq!(validate_td(&Graph::empty(0), &empty), Ok(()));
    }

    #[test]
    fn add_to_all_bags_width_arithmetic() {
        // P_3 on original ids {0, 1, 2}, extra {3, 4}
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        let map = IdMap::identity(3);
        let big = td.add_to_all_bags(&[3, 4].into_iter().collect(), &map).unwrap();
        assert_eq!(big.width(), 3);
        let same = td.add_to_all_bags(&VertexSet::new(), &IdMap::from_vec(vec![5, 6, 7])).unwrap();
        assert_eq!(same.width(), 1);
        assert_eq!(same.bags()[0], vec![5, 6]);
    }

    #[test]
    fn add_apex_to_triangle_gives_k4() {
        let td = TreeDecomposition::single_bag(3);
        let out = td.add_to_all_bags(&[3].into_iter().collect(), &IdMap::identity(3)).unwrap();
        assert_eq!(out.bags(), &[vec![0, 1, 2, 3]]);
        assert_eq!(validate_td(&complete(4), &out), Ok(()));
    }

    #[test]
    fn add_rejects_collisions() {
        let td = TreeDecomposition::single_bag(2);
        let err = td.add_to_all_bags(&[1].into_iter().collect(), &IdMap::identity(2));
        assert!(matches!(err, Err(Error::IdCollision(1))));
    }
}
