use crate::bits;
use crate::budget::{Budget, Meter};
use crate::cycles::search::{minimal_cycle_sets_through, shortest_in_range};
use crate::cycles::{Cycle, CyclePacking};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Upper bound on the number of disjoint cycles of length >= `ell` in
/// `G[avail]`: every such cycle lives inside one component of the union of
/// cyclic blocks.
pub(crate) fn packing_upper_bound(adj: &[u64], avail: u64, ell: usize) -> usize {
    let core = crate::cycles::search::cyclic_blocks(adj, avail)
        .into_iter()
        .filter(|b| b.count_ones() as usize >= ell)
        .fold(0, |acc, b| acc | b);
    let mut left = core;
    let mut total = 0;
    while let Some(v) = bits::lowest(left) {
        let comp = bits::reach(adj, bits::bit(v), core);
        total += comp.count_ones() as usize / ell;
        left &= !comp;
    }
    total
}

struct Packer<'a, 'm> {
    adj: &'a [u64],
    ell: usize,
    stop_at: usize,
    current: Vec<Vec<usize>>,
    best: Vec<Vec<usize>>,
    meter: &'m mut Meter,
}

impl Packer<'_, '_> {
    fn done(&self) -> bool {
        self.best.len() >= self.stop_at
    }

    fn go(&mut self, avail: u64) -> Result<()> {
        self.meter.tick()?;
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
            if self.done() {
                return Ok(());
            }
        }
        let ub = self.current.len() + packing_upper_bound(self.adj, avail, self.ell);
        if ub <= self.best.len() {
            return Ok(());
        }
        // A maximal packing meets any long cycle; branch on the first vertex
        // of the canonical shortest one that the packing uses.
        let Some(anchor) = shortest_in_range(self.adj, avail, self.ell, usize::MAX, self.meter)?
        else {
            return Ok(());
        };
        let mut banned = 0u64;
        for &c in &anchor {
            let region = avail & !banned;
            let sets = minimal_cycle_sets_through(
                self.adj,
                region,
                c,
                self.ell,
                self.ell,
                &|_| 0,
                self.meter,
            )?;
            for (mask, seq) in sets {
                self.current.push(seq);
                self.go(region & !mask)?;
                self.current.pop();
                if self.done() {
                    return Ok(());
                }
            }
            banned |= bits::bit(c);
            if self.current.len() + packing_upper_bound(self.adj, avail & !banned, self.ell)
                <= self.best.len()
            {
                break;
            }
        }
        Ok(())
    }
}

/// Maximum number of vertex-disjoint cycles of length at least `ell`.
///
/// With `stop_at = Some(t)` the search returns as soon as `t` cycles are
/// packed, so the result has exactly `min(t, ν)` cycles.
pub fn max_long_cycle_packing(
    g: &Graph,
    ell: usize,
    stop_at: Option<usize>,
    budget: Budget,
) -> Result<CyclePacking> {
    if ell < 3 {
        return Err(Error::InvalidParameter(format!("cycle length bound {ell} is below 3")));
    }
    let adj = g.masks()?;
    let mut meter = budget.meter("cycle packing");
    let mut packer = Packer {
        adj: &adj,
        ell,
        stop_at: stop_at.unwrap_or(usize::MAX),
        current: Vec::new(),
        best: Vec::new(),
        meter: &mut meter,
    };
    if packer.stop_at > 0 {
        packer.go(bits::full(g.n()))?;
    }
    let mut cycles: Vec<Cycle> = packer.best.into_iter().map(|c| Cycle::new(c).canonical()).collect();
    cycles.sort();
    Ok(CyclePacking { cycles })
}
