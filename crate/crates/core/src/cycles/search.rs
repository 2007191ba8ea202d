//! Exact cycle searches on bitmask graphs.
//!
//! Every search walks simple paths that start at the would-be smallest vertex
//! `s` of the cycle, extend in ascending neighbour order through vertices
//! above `s`, and only close a cycle when the second vertex is smaller than
//! the last one. Paths are therefore produced in lexicographic order and each
//! cycle is met once per orientation class, in its canonical rotation.

use crate::bits;
use crate::budget::Meter;
use crate::error::Result;

/// Vertex masks of the biconnected blocks of `G[allowed]` with at least
/// three vertices (the only blocks that can hold a cycle).
pub(crate) fn cyclic_blocks(adj: &[u64], allowed: u64) -> Vec<u64> {
    struct Tarjan<'a> {
        adj: &'a [u64],
        allowed: u64,
        disc: [u32; 64],
        low: [u32; 64],
        time: u32,
        stack: Vec<(usize, usize)>,
        blocks: Vec<u64>,
    }
    impl Tarjan<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for w in bits::iter(self.adj[u] & self.allowed) {
                if self.disc[w] == 0 {
                    self.stack.push((u, w));
                    self.visit(w, Some(u));
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        let mut block = 0u64;
                        while let Some((a, b)) = self.stack.pop() {
                            block |= bits::bit(a) | bits::bit(b);
                            if (a, b) == (u, w) {
                                break;
                            }
                        }
                        if block.count_ones() >= 3 {
                            self.blocks.push(block);
                        }
                    }
                } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                    self.stack.push((u, w));
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
        }
    }
    let mut t = Tarjan {
        adj,
        allowed,
        disc: [0; 64],
        low: [0; 64],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in bits::iter(allowed) {
        if t.disc[v] == 0 {
            t.visit(v, None);
        }
    }
    t.blocks
}

/// Union of the cyclic blocks that contain each vertex.
fn block_regions(adj: &[u64], allowed: u64) -> Vec<u64> {
    let mut region = vec![0u64; adj.len()];
    for b in cyclic_blocks(adj, allowed) {
        for v in bits::iter(b) {
            region[v] |= b;
        }
    }
    region
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// Shortest cycle with length in `[lo, hi]`, lexicographically first.
    Shortest,
    /// First cycle found with length in `[lo, hi]`.
    Any,
    /// Longest cycle.
    Longest,
}

struct Search<'a, 'm> {
    adj: &'a [u64],
    goal: Goal,
    lo: usize,
    hi: usize,
    start: usize,
    region: u64,
    path: Vec<usize>,
    best: Option<Vec<usize>>,
    meter: &'m mut Meter,
}

impl Search<'_, '_> {
    fn best_len(&self) -> Option<usize> {
        self.best.as_ref().map(Vec::len)
    }

    fn done(&self) -> bool {
        self.goal == Goal::Any && self.best.is_some()
    }

    /// `visited` holds the path vertices (including the start).
    fn extend(&mut self, visited: u64) -> Result<()> {
        self.meter.tick()?;
        let u = *self.path.last().expect("path starts at s");
        let len = self.path.len();
        let s = self.start;
        let closes = len >= 3 && self.adj[u] & bits::bit(s) != 0 && self.path[1] < u;
        if closes && len >= self.lo && len <= self.hi {
            let better = match (self.goal, self.best_len()) {
                (_, None) => true,
                (Goal::Longest, Some(b)) => len > b,
                (_, Some(b)) => len < b,
            };
            if better {
                self.best = Some(self.path.clone());
                if self.done() {
                    return Ok(());
                }
            }
        }
        // Longest admissible cycle length worth exploring.
        let limit = match (self.goal, self.best_len()) {
            (Goal::Shortest, Some(b)) => self.hi.min(b - 1),
            _ => self.hi,
        };
        if len >= limit {
            return Ok(());
        }
        let free = self.region & !visited;
        // Layered BFS from u through free vertices: the first layer touching a
        // neighbour of s gives the shortest way back, the union bounds the
        // longest.
        let back = self.adj[s];
        let mut seen = bits::bit(u);
        let mut frontier = seen;
        let mut return_dist = None;
        let mut depth = 0;
        while frontier != 0 {
            depth += 1;
            frontier = bits::neighborhood(self.adj, frontier) & free & !seen;
            seen |= frontier;
            if return_dist.is_none() && frontier & back != 0 {
                return_dist = Some(depth);
            }
        }
        let Some(dist) = return_dist else { return Ok(()) };
        let extra_max = seen.count_ones() as usize - 1;
        if len + dist > limit || len + extra_max < self.lo.max(3) {
            return Ok(());
        }
        if let (Goal::Longest, Some(b)) = (self.goal, self.best_len()) {
            if len + extra_max <= b {
                return Ok(());
            }
        }
        for w in bits::iter(self.adj[u] & free & seen) {
            self.path.push(w);
            self.extend(visited | bits::bit(w))?;
            self.path.pop();
            if self.done() {
                break;
            }
        }
        Ok(())
    }
}

fn run(
    adj: &[u64],
    allowed: u64,
    lo: usize,
    hi: usize,
    goal: Goal,
    meter: &mut Meter,
) -> Result<Option<Vec<usize>>> {
    let regions = block_regions(adj, allowed);
    let max_block = cyclic_blocks(adj, allowed).iter().map(|b| b.count_ones() as usize).max();
    let Some(max_block) = max_block else { return Ok(None) };
    let lo = lo.max(3);
    let hi = hi.min(max_block);
    if lo > hi {
        return Ok(None);
    }
    let mut search = Search {
        adj,
        goal,
        lo,
        hi,
        start: 0,
        region: 0,
        path: Vec::new(),
        best: None,
        meter,
    };
    for s in bits::iter(allowed) {
        let region = regions[s] & (bits::above(s) | bits::bit(s));
        let room = region.count_ones() as usize;
        if room < lo {
            continue;
        }
        match (goal, search.best_len()) {
            (Goal::Longest, Some(b)) if room <= b => continue,
            (Goal::Shortest, Some(b)) if b == lo => break,
            _ => {}
        }
        search.start = s;
        search.region = region;
        search.path = vec![s];
        search.extend(bits::bit(s))?;
        if search.done() || (goal == Goal::Longest && search.best_len() == Some(max_block)) {
            break;
        }
    }
    Ok(search.best)
}

/// Canonically smallest cycle of `G[allowed]` with length in `[lo, hi]`:
/// minimal length first, then lexicographically smallest vertex sequence.
pub(crate) fn shortest_in_range(
    adj: &[u64],
    allowed: u64,
    lo: usize,
    hi: usize,
    meter: &mut Meter,
) -> Result<Option<Vec<usize>>> {
    run(adj, allowed, lo, hi, Goal::Shortest, meter)
}

/// Some cycle of `G[allowed]` with length in `[lo, hi]`.
pub(crate) fn any_in_range(
    adj: &[u64],
    allowed: u64,
    lo: usize,
    hi: usize,
    meter: &mut Meter,
) -> Result<Option<Vec<usize>>> {
    run(adj, allowed, lo, hi, Goal::Any, meter)
}

pub(crate) fn longest(adj: &[u64], allowed: u64, meter: &mut Meter) -> Result<Option<Vec<usize>>> {
    run(adj, allowed, 3, usize::MAX, Goal::Longest, meter)
}

/// Distinct vertex sets of cycles through `c` inside `region`, each with one
/// representative vertex sequence starting at `c`.
///
/// A cycle is recorded once its length reaches `min_len`; paths keep growing
/// past a closable point only while shorter than `stop_len`. The result is
/// reduced to sets that contain no other recorded set of the same `class`
/// (lengths with equal class are interchangeable to the caller).
pub(crate) fn minimal_cycle_sets_through(
    adj: &[u64],
    region: u64,
    c: usize,
    min_len: usize,
    stop_len: usize,
    class: &dyn Fn(usize) -> usize,
    meter: &mut Meter,
) -> Result<Vec<(u64, Vec<usize>)>> {
    struct Enum<'a, 'm> {
        adj: &'a [u64],
        region: u64,
        c: usize,
        min_len: usize,
        stop_len: usize,
        top_class: usize,
        class: &'a dyn Fn(usize) -> usize,
        path: Vec<usize>,
        found: Vec<(u64, Vec<usize>)>,
        meter: &'m mut Meter,
    }
    impl Enum<'_, '_> {
        fn extend(&mut self, visited: u64) -> Result<()> {
            self.meter.tick()?;
            let u = *self.path.last().expect("nonempty");
            let len = self.path.len();
            // Every extension is a superset of a set already known to reach
            // the highest class.
            if self
                .found
                .iter()
                .any(|(m, seq)| m & !visited == 0 && (self.class)(seq.len()) == self.top_class)
            {
                return Ok(());
            }
            let closes = len >= 3 && self.adj[u] & bits::bit(self.c) != 0;
            if closes && len >= self.min_len {
                if !self.found.iter().any(|(m, _)| *m == visited) {
                    self.found.push((visited, self.path.clone()));
                }
                if len >= self.stop_len {
                    return Ok(());
                }
            }
            let free = self.region & !visited;
            let seen = bits::reach(self.adj, bits::bit(u), free);
            if seen & !bits::bit(u) & self.adj[self.c] == 0 {
                return Ok(());
            }
            if len + seen.count_ones() as usize - 1 < self.min_len {
                return Ok(());
            }
            for w in bits::iter(self.adj[u] & free) {
                self.path.push(w);
                self.extend(visited | bits::bit(w))?;
                self.path.pop();
            }
            Ok(())
        }
    }
    let mut e = Enum {
        adj,
        region,
        c,
        min_len: min_len.max(3),
        stop_len,
        top_class: class(stop_len),
        class,
        path: vec![c],
        found: Vec::new(),
        meter,
    };
    e.extend(bits::bit(c))?;
    let found = e.found;
    let keep: Vec<(u64, Vec<usize>)> = found
        .iter()
        .filter(|(m, seq)| {
            !found.iter().any(|(m2, seq2)| {
                m2 != m && m2 & !m == 0 && class(seq2.len()) == class(seq.len())
            })
        })
        .cloned()
        .collect();
    Ok(keep)
}
