//! Minimum vertex sets meeting every long cycle, and the Erdős–Pósa bounds
//! they are checked against.

use crate::bits;
use crate::budget::{Budget, Meter};
use crate::cycles::search::{any_in_range, shortest_in_range};
use crate::cycles::find_long_cycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `10k·log k + 10k·log log k + 40k` (base-2 logarithms) for `k >= 2`.
fn log_terms(k: usize) -> f64 {
    let k = k as f64;
    10.0 * k * k.log2() + 10.0 * k * k.log2().log2() + 40.0 * k
}

/// Size bound for a set meeting all cycles of length >= `ell` in a graph
/// without `k` disjoint such cycles: `6kℓ + 10k log k + 10k log log k + 40k`,
/// or 0 for `k = 1`. Rounded up to an integer.
pub fn ep_bound(k: usize, ell: usize) -> u64 {
    assert!(k >= 1, "k must be positive");
    if k == 1 {
        return 0;
    }
    (6.0 * k as f64 * ell as f64 + log_terms(k)).ceil() as u64
}

/// Same bound for graphs with no cycle of length in `[ℓ, 6ℓ]`:
/// `10k log k + 10k log log k + 40k`, or 0 for `k = 1`.
pub fn ep_bound_no_medium(k: usize) -> u64 {
    assert!(k >= 1, "k must be positive");
    if k == 1 {
        return 0;
    }
    log_terms(k).ceil() as u64
}

/// A vertex set meeting every cycle of length at least `ell`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HittingSet {
    pub vertices: VertexSet,
    pub ell: usize,
}

impl HittingSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Certificate text: one line of space-separated ids.
    pub fn to_text(&self) -> String {
        let ids: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        format!("{}\n", ids.join(" "))
    }
}

struct Hitter<'a, 'm> {
    adj: &'a [u64],
    ell: usize,
    meter: &'m mut Meter,
}

impl Hitter<'_, '_> {
    /// Disjoint long cycles found greedily, shortest first.
    fn greedy_packing(&mut self, mut avail: u64) -> Result<usize> {
        let mut count = 0;
        while let Some(c) = shortest_in_range(self.adj, avail, self.ell, usize::MAX, self.meter)? {
            count += 1;
            avail &= !c.iter().fold(0, |m, &v| m | bits::bit(v));
        }
        Ok(count)
    }

    /// Whether at most `t` vertices of `allowed` can be removed from
    /// `G[avail]` to destroy every long cycle; on success the chosen
    /// vertices are appended to `picked`.
    fn feasible(&mut self, avail: u64, allowed: u64, t: usize, picked: &mut Vec<usize>) -> Result<bool> {
        self.meter.tick()?;
        let Some(cycle) = shortest_in_range(self.adj, avail, self.ell, usize::MAX, self.meter)? else {
            return Ok(true);
        };
        if t == 0 || self.greedy_packing(avail)? > t {
            return Ok(false);
        }
        // Branch i: the first i-1 cycle vertices stay, the i-th is removed.
        let mut allowed = allowed;
        let mut order = cycle.clone();
        order.sort_unstable();
        for v in order {
            if allowed & bits::bit(v) == 0 {
                continue;
            }
            picked.push(v);
            if self.feasible(avail & !bits::bit(v), allowed, t - 1, picked)? {
                return Ok(true);
            }
            picked.pop();
            allowed &= !bits::bit(v);
        }
        Ok(false)
    }
}

/// Minimum-size vertex set whose removal leaves no cycle of length >= `ell`;
/// among minimum sets the lexicographically smallest one.
pub fn min_hitting_set_long_cycles(g: &Graph, ell: usize, budget: Budget) -> Result<HittingSet> {
    if ell < 3 {
        return Err(Error::InvalidParameter(format!("cycle length bound {ell} is below 3")));
    }
    let adj = g.masks()?;
    let all = bits::full(g.n());
    let mut meter = budget.meter("hitting set");
    let mut h = Hitter { adj: &adj, ell, meter: &mut meter };

    let mut size = h.greedy_packing(all)?;
    let mut scratch = Vec::new();
    while !h.feasible(all, all, size, &mut scratch)? {
        size += 1;
    }

    // Lexicographically smallest set of that size, one position at a time.
    let mut chosen: Vec<usize> = Vec::with_capacity(size);
    let mut removed = 0u64;
    let mut next_from = 0;
    while chosen.len() < size {
        if any_in_range(&adj, all & !removed, ell, usize::MAX, h.meter)?.is_none() {
            break;
        }
        let left = size - chosen.len() - 1;
        let mut extended = false;
        for v in next_from..g.n() {
            let avail = all & !removed & !bits::bit(v);
            let mut tail = Vec::new();
            if h.feasible(avail, bits::above(v) & all, left, &mut tail)? {
                chosen.push(v);
                removed |= bits::bit(v);
                next_from = v + 1;
                extended = true;
                break;
            }
        }
        assert!(extended, "a minimum hitting set must be extendable");
    }
    Ok(HittingSet { vertices: chosen.into_iter().collect(), ell })
}

/// Whether `g - x` has no cycle of length >= `ell`.
pub fn verify_hitting_set(g: &Graph, x: &VertexSet, ell: usize, budget: Budget) -> Result<bool> {
    if x.iter().any(|v| v >= g.n()) {
        return Ok(false);
    }
    let (rest, _) = g.delete_vertices(x);
    Ok(find_long_cycle(&rest, ell, budget)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::test_graphs::*;

    #[test]
    fn bound_values() {
        assert_eq!(ep_bound(1, 3), 0);
        assert_eq!(ep_bound(1, 100), 0);
        assert_eq!(ep_bound(2, 3), 136);
        assert_eq!(ep_bound(4, 3), 352);
        assert_eq!(ep_bound_no_medium(1), 0);
        assert_eq!(ep_bound_no_medium(2), 100);
        assert_eq!(ep_bound_no_medium(4), 280);
        // k = 3: 30·log 3 + 30·log log 3 + 120 = 47.55 + 19.87 + 120 = 187.4
        assert_eq!(ep_bound_no_medium(3), 188);
    }

    #[test]
    fn bounds_are_monotone() {
        for k in 2..200 {
            assert!(ep_bound_no_medium(k) <= ep_bound_no_medium(k + 1));
            for ell in 3..20 {
                assert!(ep_bound(k, ell) <= ep_bound(k + 1, ell));
                assert!(ep_bound(k, ell) <= ep_bound(k, ell + 1));
            }
        }
    }

    fn hit(g: &Graph, ell: usize) -> HittingSet {
        let x = min_hitting_set_long_cycles(g, ell, Budget::default()).unwrap();
        assert!(verify_hitting_set(g, &x.vertices, ell, Budget::default()).unwrap());
        x
    }

    #[test]
    fn examples() {
        let two = cycle(3).disjoint_union(&cycle(3));
        assert_eq!(hit(&two, 3).vertices.to_vec(), vec![0, 3]);
        assert_eq!(hit(&cycle(6), 3).len(), 1);
        assert!(hit(&tree(), 3).is_empty());
        assert_eq!(hit(&complete(5), 3).len(), 3);
        assert_eq!(hit(&complete(5), 5).vertices.to_vec(), vec![0]);
        // every vertex-deleted subgraph of the Petersen graph is Hamiltonian
        assert_eq!(hit(&petersen(), 9).len(), 2);
    }

    #[test]
    fn verify_examples() {
        let g = cycle(3).disjoint_union(&cycle(3));
        let b = Budget::default();
        assert!(verify_hitting_set(&g, &[0, 4].into_iter().collect(), 3, b).unwrap());
        assert!(!verify_hitting_set(&g, &[0, 1].into_iter().collect(), 3, b).unwrap());
        assert!(verify_hitting_set(&g, &g.vertices(), 3, b).unwrap());
    }
}
