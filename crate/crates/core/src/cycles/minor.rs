use crate::bits;
use crate::budget::{Budget, Meter};
use crate::cycles::packing::packing_upper_bound;
use crate::cycles::search::{minimal_cycle_sets_through, shortest_in_range};
use crate::cycles::{verify_packing, Cycle, CycleFamilySpec, CyclePacking};
use crate::error::Result;
use crate::graph::Graph;

/// Disjoint cycles of G together with the cycle of H each one models:
/// `assignment[i]` indexes `spec.lengths()` and C_m is a minor of C_n
/// whenever n >= m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub packing: CyclePacking,
    pub assignment: Vec<usize>,
}

impl MinorModel {
    /// Pairs the cycles with the spec by sorted dominance, if possible.
    pub fn by_dominance(packing: CyclePacking, spec: &CycleFamilySpec) -> Option<MinorModel> {
        if packing.len() != spec.k() {
            return None;
        }
        let mut cyc: Vec<usize> = (0..packing.len()).collect();
        cyc.sort_by_key(|&i| (std::cmp::Reverse(packing.cycles[i].len()), i));
        let mut req: Vec<usize> = (0..spec.k()).collect();
        req.sort_by_key(|&j| (std::cmp::Reverse(spec.lengths()[j]), j));
        let mut assignment = vec![0; packing.len()];
        for (&i, &j) in cyc.iter().zip(&req) {
            if packing.cycles[i].len() < spec.lengths()[j] {
                return None;
            }
            assignment[i] = j;
        }
        Some(MinorModel { packing, assignment })
    }
}

/// Checks a minor model against the original graph and target family.
pub fn verify_minor_model(g: &Graph, spec: &CycleFamilySpec, m: &MinorModel) -> Result<(), String> {
    verify_packing(g, &m.packing, 3).map_err(|e| e.to_string())?;
    if m.packing.len() != spec.k() || m.assignment.len() != spec.k() {
        return Err(format!("{} cycles for a family of {}", m.packing.len(), spec.k()));
    }
    let mut used = vec![false; spec.k()];
    for (i, &j) in m.assignment.iter().enumerate() {
        if j >= spec.k() || std::mem::replace(&mut used[j], true) {
            return Err(format!("assignment is not a bijection at cycle #{i}"));
        }
        let (have, need) = (m.packing.cycles[i].len(), spec.lengths()[j]);
        if have < need {
            return Err(format!("cycle #{i} has length {have} but models a {need}-cycle"));
        }
    }
    Ok(())
}

struct MinorSearch<'a, 'm> {
    adj: &'a [u64],
    chosen: Vec<Vec<usize>>,
    meter: &'m mut Meter,
}

impl MinorSearch<'_, '_> {
    /// `reqs` is sorted descending.
    fn go(&mut self, avail: u64, reqs: &[usize]) -> Result<bool> {
        self.meter.tick()?;
        let Some(&min_req) = reqs.last() else { return Ok(true) };
        let max_req = reqs[0];
        if reqs.iter().sum::<usize>() > avail.count_ones() as usize
            || packing_upper_bound(self.adj, avail, min_req) < reqs.len()
        {
            return Ok(false);
        }
        // Some solution meets this cycle: otherwise it could swap it in for
        // its cycle of the smallest required length.
        let Some(anchor) = shortest_in_range(self.adj, avail, min_req, usize::MAX, self.meter)?
        else {
            return Ok(false);
        };
        let class = |len: usize| reqs.iter().filter(|&&r| r <= len).count();
        let mut banned = 0u64;
        for &c in &anchor {
            let region = avail & !banned;
            let sets = minimal_cycle_sets_through(
                self.adj, region, c, min_req, max_req, &class, self.meter,
            )?;
            for (mask, seq) in sets {
                // Largest requirement this cycle satisfies.
                let pos = reqs.iter().position(|&r| r <= seq.len()).expect("len >= min_req");
                let mut rest = reqs.to_vec();
                rest.remove(pos);
                self.chosen.push(seq);
                if self.go(region & !mask, &rest)? {
                    return Ok(true);
                }
                self.chosen.pop();
            }
            banned |= bits::bit(c);
        }
        Ok(false)
    }
}

/// A model of the disjoint union of cycles `spec` in `g`, or `None` when `g`
/// has no such minor.
pub fn has_disjoint_cycles_minor(
    g: &Graph,
    spec: &CycleFamilySpec,
    budget: Budget,
) -> Result<Option<MinorModel>> {
    let adj = g.masks()?;
    let mut meter = budget.meter("minor search");
    let mut search = MinorSearch { adj: &adj, chosen: Vec::new(), meter: &mut meter };
    if !search.go(bits::full(g.n()), &spec.sorted_desc())? {
        return Ok(None);
    }
    let cycles = search.chosen.into_iter().map(|c| Cycle::new(c).canonical()).collect();
    let model = MinorModel::by_dominance(CyclePacking { cycles }, spec)
        .expect("search assigns every cycle a requirement it dominates");
    Ok(Some(model))
}
