//! Exact treewidth via elimination orderings.
//!
//! Small components (at most [`ExactConfig::dp_cutoff`] vertices after
//! simplicial reduction) are solved by dynamic programming over the set of
//! already-eliminated vertices; larger ones by branch and bound over
//! elimination orderings of the fill graph.

use std::collections::HashMap;

use crate::bits;
use crate::budget::{Budget, Meter};
use crate::error::Error;
use crate::graph::{Graph, Vertex, MAX_EXACT_VERTICES};
use crate::treewidth::heuristics::{min_fill_order, minor_min_width, minor_min_width_masks};
use crate::treewidth::TreeDecomposition;

#[derive(Clone, Copy, Debug)]
pub struct ExactConfig {
    pub budget: Budget,
    /// Largest reduced component handed to the subset DP.
    pub dp_cutoff: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig { budget: Budget::default(), dp_cutoff: 22 }
    }
}

impl From<Budget> for ExactConfig {
    fn from(budget: Budget) -> Self {
        ExactConfig { budget, ..Default::default() }
    }
}

#[derive(Clone, Debug)]
pub struct TreewidthResult {
    /// Width of `decomposition`; the treewidth when `exact` is set.
    pub width: usize,
    pub lower_bound: usize,
    pub exact: bool,
    pub order: Vec<Vertex>,
    pub decomposition: TreeDecomposition,
}

struct Component {
    order: Vec<Vertex>,
    width: usize,
    lower_bound: usize,
    exact: bool,
}

/// Optimal-width decomposition of `g`, or the best one found within budget
/// (with `exact == false`).
pub fn exact_treewidth(g: &Graph, config: impl Into<ExactConfig>) -> TreewidthResult {
    let config = config.into();
    let mut order = Vec::with_capacity(g.n());
    let (mut width, mut lower_bound, mut exact) = (0, 0, true);
    for comp in g.connected_components() {
        let (sub, map) = g.induced(&comp.to_vec());
        let c = solve_component(&sub, &config);
        order.extend(c.order.iter().map(|&v| map.old(v)));
        width = width.max(c.width);
        lower_bound = lower_bound.max(c.lower_bound);
        exact &= c.exact;
    }
    let decomposition = TreeDecomposition::from_elimination_order(g, &order);
    debug_assert_eq!(decomposition.width(), width);
    TreewidthResult { width, lower_bound, exact, order, decomposition }
}

fn solve_component(g: &Graph, config: &ExactConfig) -> Component {
    let n = g.n();
    let (mf_order, ub) = min_fill_order(g);
    let lb = minor_min_width(g);
    let heuristic = |lower_bound| Component {
        order: mf_order.clone(),
        width: ub,
        lower_bound,
        exact: lower_bound == ub,
    };
    if lb == ub || n > MAX_EXACT_VERTICES {
        return heuristic(lb);
    }
    let adj = g.masks().expect("size checked");

    // Simplicial vertices can always be eliminated first.
    let mut remaining = bits::full(n);
    let mut prefix = Vec::new();
    let mut low = 0;
    while let Some(v) = bits::iter(remaining).find(|&v| is_clique(&adj, adj[v] & remaining)) {
        low = low.max((adj[v] & remaining).count_ones() as usize);
        remaining &= !bits::bit(v);
        prefix.push(v);
    }
    let lb = lb.max(low);
    if lb == ub {
        return heuristic(lb);
    }
    let keep: Vec<Vertex> = bits::iter(remaining).collect();
    let (core, map) = g.induced(&keep);
    let core_adj = core.masks().expect("subgraph of a small graph");
    let mut meter = config.budget.meter("treewidth");
    let solved = if core.n() <= config.dp_cutoff {
        subset_dp(&core_adj, ub - 1, &mut meter)
    } else {
        branch_and_bound(&core_adj, ub, lb, &mut meter)
    };
    match solved {
        Ok(Some((w, core_order))) => {
            let mut order = prefix;
            order.extend(core_order.into_iter().map(|v| map.old(v)));
            let width = w.max(low);
            Component { order, width, lower_bound: width, exact: true }
        }
        // min-fill was optimal
        Ok(None) => Component { order: mf_order, width: ub, lower_bound: ub, exact: true },
        Err(Error::BudgetExceeded { .. }) => heuristic(lb),
        Err(e) => unreachable!("unexpected solver error {e}"),
    }
}

fn is_clique(adj: &[u64], set: u64) -> bool {
    bits::iter(set).all(|v| set & !bits::bit(v) & !adj[v] == 0)
}

/// Size of Q(S, v): vertices outside `S ∪ {v}` reachable from `v` through `S`.
#[inline]
fn q_size(adj: &[u64], s: u64, v: Vertex) -> usize {
    let comp = bits::reach(adj, bits::bit(v), s);
    (bits::neighborhood(adj, comp) & !s & !comp).count_ones() as usize
}

/// Smallest width ≤ `limit` with the lexicographically smallest optimal
/// ordering, or `None` when every ordering is wider than `limit`.
fn subset_dp(
    adj: &[u64],
    limit: usize,
    meter: &mut Meter,
) -> crate::error::Result<Option<(usize, Vec<Vertex>)>> {
    let n = adj.len();
    let full = bits::full(n) as usize;
    const UNSEEN: u8 = u8::MAX;
    let mut tw = vec![UNSEEN; full + 1];
    tw[0] = 0;
    for s in 0..=full {
        let t = tw[s];
        if t == UNSEEN {
            continue;
        }
        meter.tick()?;
        for v in bits::iter(!(s as u64) & full as u64) {
            let val = t.max(q_size(adj, s as u64, v) as u8);
            let next = s | (1 << v);
            if (val as usize) <= limit && val < tw[next] {
                tw[next] = val;
            }
        }
    }
    if tw[full] == UNSEEN {
        return Ok(None);
    }
    let w = tw[full];

    // States from which the elimination can still finish within width w.
    let mut finishable = vec![false; full + 1];
    finishable[full] = true;
    for s in (0..full).rev() {
        if tw[s] > w {
            continue;
        }
        finishable[s] = bits::iter(!(s as u64) & full as u64)
            .any(|v| finishable[s | (1 << v)] && q_size(adj, s as u64, v) <= w as usize);
    }
    let mut order = Vec::with_capacity(n);
    let mut s = 0usize;
    while s != full {
        let v = bits::iter(!(s as u64) & full as u64)
            .find(|&v| finishable[s | (1 << v)] && q_size(adj, s as u64, v) <= w as usize)
            .expect("a finishable state has a finishable successor");
        order.push(v);
        s |= 1 << v;
    }
    Ok(Some((w as usize, order)))
}

struct Bnb<'m> {
    best: usize,
    best_order: Option<Vec<Vertex>>,
    lower: usize,
    seen: HashMap<u64, usize>,
    meter: &'m mut Meter,
}

/// Search for an ordering strictly better than `ub`; `None` if `ub` is optimal.
fn branch_and_bound(
    adj: &[u64],
    ub: usize,
    lb: usize,
    meter: &mut Meter,
) -> crate::error::Result<Option<(usize, Vec<Vertex>)>> {
    let mut search = Bnb { best: ub, best_order: None, lower: lb, seen: HashMap::new(), meter };
    let mut prefix = Vec::new();
    search.go(adj.to_vec(), bits::full(adj.len()), 0, &mut prefix)?;
    Ok(search.best_order.map(|o| (search.best, o)))
}

impl Bnb<'_> {
    fn go(
        &mut self,
        adj: Vec<u64>,
        remaining: u64,
        width: usize,
        prefix: &mut Vec<Vertex>,
    ) -> crate::error::Result<()> {
        self.meter.tick()?;
        if self.best <= self.lower {
            return Ok(());
        }
        let r = remaining.count_ones() as usize;
        let finish = width.max(r.saturating_sub(1));
        if finish < self.best {
            self.best = finish;
            let mut order = prefix.clone();
            order.extend(bits::iter(remaining));
            self.best_order = Some(order);
        }
        if width >= r.saturating_sub(1) || width >= self.best {
            return Ok(());
        }
        match self.seen.get(&remaining) {
            Some(&w) if w <= width => return Ok(()),
            _ => {
                self.seen.insert(remaining, width);
            }
        }
        if width.max(minor_min_width_masks(&adj, remaining)) >= self.best {
            return Ok(());
        }
        let simplicial = bits::iter(remaining).find(|&v| is_clique(&adj, adj[v] & remaining));
        let mut candidates: Vec<Vertex> = match simplicial {
            Some(v) => vec![v],
            None => bits::iter(remaining).collect(),
        };
        candidates.sort_by_key(|&v| ((adj[v] & remaining).count_ones(), v));
        for v in candidates {
            let ns = adj[v] & remaining;
            let w = width.max(ns.count_ones() as usize);
            if w >= self.best {
                continue;
            }
            let mut next = adj.clone();
            for u in bits::iter(ns) {
                next[u] |= ns & !bits::bit(u);
                next[u] &= !bits::bit(v);
            }
            prefix.push(v);
            self.go(next, remaining & !bits::bit(v), w, prefix)?;
            prefix.pop();
        }
        Ok(())
    }
}
