//! Cycles: exact searches by length, maximum packings of long cycles and the
//! minor test for disjoint unions of cycles.

mod minor;
mod packing;
pub(crate) mod search;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, IdMap, Vertex};

pub use minor::{has_disjoint_cycles_minor, verify_minor_model, MinorModel};
pub use packing::max_long_cycle_packing;

/// A cycle given by its cyclic vertex sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<Vertex>);

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.0)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&ids.join(" "))
    }
}

impl Cycle {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Cycle(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lift(&self, map: &IdMap) -> Cycle {
        Cycle(self.0.iter().map(|&v| map.old(v)).collect())
    }

    /// Rotation starting at the smallest vertex, oriented towards its
    /// smaller neighbour on the cycle.
    pub fn canonical(&self) -> Cycle {
        let Some((i, _)) = self.0.iter().enumerate().min_by_key(|(_, v)| **v) else {
            return self.clone();
        };
        let n = self.0.len();
        let fwd: Vec<Vertex> = (0..n).map(|k| self.0[(i + k) % n]).collect();
        let bwd: Vec<Vertex> = (0..n).map(|k| self.0[(i + n - k) % n]).collect();
        Cycle(fwd.min(bwd))
    }

    /// Why this is not a cycle of `g` of length at least `min_len`, if so.
    pub fn check(&self, g: &Graph, min_len: usize) -> Result<(), String> {
        let n = self.0.len();
        if n < 3 {
            return Err(format!("cycle of length {n} is shorter than 3"));
        }
        if n < min_len {
            return Err(format!("cycle of length {n} is shorter than required {min_len}"));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (i, &v) in self.0.iter().enumerate() {
            if v >= g.n() {
                return Err(format!("vertex {v} is not in the graph"));
            }
            if !seen.insert(v) {
                return Err(format!("vertex {v} repeats"));
            }
            let w = self.0[(i + 1) % n];
            if !g.has_edge(v, w) {
                return Err(format!("{v}-{w} is not an edge"));
            }
        }
        Ok(())
    }
}

/// Vertex-disjoint cycles.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CyclePacking {
    pub cycles: Vec<Cycle>,
}

impl CyclePacking {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Certificate text: one cycle per line, space-separated ids.
    pub fn to_text(&self) -> String {
        self.cycles.iter().map(|c| format!("{c}\n")).collect()
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let cycles = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                l.split_whitespace()
                    .map(|t| t.parse().map_err(|_| Error::parse(i + 1, format!("bad vertex `{t}`"))))
                    .collect::<Result<Vec<_>>>()
                    .map(Cycle)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclePacking { cycles })
    }
}

/// Why a packing fails to certify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PackingViolation {
    BadCycle { index: usize, reason: String },
    Overlap { first: usize, second: usize, vertex: Vertex },
}

impl fmt::Display for PackingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PackingViolation::BadCycle { index, reason } => write!(f, "cycle #{index}: {reason}"),
            PackingViolation::Overlap { first, second, vertex } => {
                write!(f, "cycles #{first} and #{second} share vertex {vertex}")
            }
        }
    }
}

/// Checks that every cycle is a cycle of `g` of length at least `ell` and
/// that the cycles are pairwise vertex-disjoint.
pub fn verify_packing(g: &Graph, p: &CyclePacking, ell: usize) -> Result<(), PackingViolation> {
    let mut owner: Vec<Option<usize>> = vec![None; g.n()];
    for (index, c) in p.cycles.iter().enumerate() {
        c.check(g, ell).map_err(|reason| PackingViolation::BadCycle { index, reason })?;
        for &v in c.vertices() {
            if let Some(first) = owner[v] {
                return Err(PackingViolation::Overlap { first, second: index, vertex: v });
            }
            owner[v] = Some(index);
        }
    }
    Ok(())
}

/// Target graph H as a multiset of cycle lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleFamilySpec {
    lengths: Vec<usize>,
}

impl CycleFamilySpec {
    pub fn new(lengths: Vec<usize>) -> Result<Self> {
        if lengths.is_empty() {
            return Err(Error::InvalidSpec("at least one cycle is required".into()));
        }
        if let Some(&bad) = lengths.iter().find(|&&l| l < 3) {
            return Err(Error::InvalidSpec(format!("cycle length {bad} is below 3")));
        }
        Ok(CycleFamilySpec { lengths })
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Total number of vertices `h`.
    pub fn h(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// Number of cycles `k`.
    pub fn k(&self) -> usize {
        self.lengths.len()
    }

    /// Longest cycle length `ℓ`.
    pub fn ell(&self) -> usize {
        *self.lengths.iter().max().expect("nonempty")
    }

    /// Lengths in descending order.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut l = self.lengths.clone();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    }

    /// Index of the (first) longest cycle.
    pub fn longest_index(&self) -> usize {
        let ell = self.ell();
        self.lengths.iter().position(|&l| l == ell).expect("nonempty")
    }

    /// The family with one longest cycle removed, or `None` if it was the
    /// only cycle.
    pub fn without_longest(&self) -> Option<CycleFamilySpec> {
        (self.k() > 1).then(|| {
            let mut lengths = self.lengths.clone();
            lengths.remove(self.longest_index());
            CycleFamilySpec { lengths }
        })
    }
}

impl FromStr for CycleFamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lengths = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::InvalidSpec(format!("`{t}` is not a cycle length")))
            })
            .collect::<Result<Vec<usize>>>()?;
        CycleFamilySpec::new(lengths)
    }
}

impl fmt::Display for CycleFamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lengths.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Length of a shortest cycle, `None` for forests. Works on graphs of any
/// size (BFS from every vertex).
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Canonically first cycle with `lo <= length <= hi`: shortest, then
/// lexicographically smallest sequence starting at its smallest vertex.
/// `None` means no such cycle exists.
pub fn find_cycle_in_range(g: &Graph, lo: usize, hi: usize, budget: Budget) -> Result<Option<Cycle>> {
    if lo < 3 || lo > hi {
        return Err(Error::InvalidParameter(format!("cycle length window [{lo}, {hi}]")));
    }
    let adj = g.masks()?;
    let mut meter = budget.meter("cycle search");
    Ok(search::shortest_in_range(&adj, bits::full(g.n()), lo, hi, &mut meter)?.map(Cycle))
}

/// Some cycle of length at least `lo`, found as fast as possible.
pub fn find_long_cycle(g: &Graph, lo: usize, budget: Budget) -> Result<Option<Cycle>> {
    let adj = g.masks()?;
    let mut meter = budget.meter("cycle search");
    Ok(search::any_in_range(&adj, bits::full(g.n()), lo.max(3), usize::MAX, &mut meter)?
        .map(Cycle))
}

pub fn longest_cycle(g: &Graph, budget: Budget) -> Result<Option<Cycle>> {
    let adj = g.masks()?;
    let mut meter = budget.meter("longest cycle");
    Ok(search::longest(&adj, bits::full(g.n()), &mut meter)?.map(Cycle))
}

/// Length of a longest cycle (0 for forests).
pub fn circumference(g: &Graph, budget: Budget) -> Result<usize> {
    Ok(longest_cycle(g, budget)?.map_or(0, |c| c.len()))
}

#[cfg(test)]
pub(crate) mod test_graphs {
    use crate::graph::Graph;

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    pub fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, e).unwrap()
    }

    pub fn tree() -> Graph {
        Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap()
    }
}
