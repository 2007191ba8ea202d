//! Tree decompositions: exact treewidth, validation and the operations the
//! decomposer needs to lift decompositions back to larger graphs.

mod decomposition;
mod exact;
pub mod heuristics;

pub use decomposition::{validate_td, TdViolation, TreeDecomposition};
pub use exact::{exact_treewidth, ExactConfig, TreewidthResult};

use crate::budget::Budget;
use crate::cycles::find_long_cycle;
use crate::error::{Error, Result};
use crate::graph::{Graph, IdMap, VertexSet};

/// Decomposition of the original graph obtained by translating `td` through
/// `map` and adding `extra` to every bag. Width grows by exactly `|extra|`.
pub fn td_add_to_all_bags(td: &TreeDecomposition, extra: &VertexSet, map: &IdMap) -> Result<TreeDecomposition> {
    td.add_to_all_bags(extra, map)
}

/// Decomposition of width at most `ell - 2` of a graph with no cycle of
/// length `>= ell`.
///
/// Fails with [`Error::LongCycle`] when the graph does have such a cycle, and
/// with [`Error::TheoremViolation`] if the optimum is wider than `ell - 2`.
pub fn short_cycle_decomposition(g: &Graph, ell: usize, budget: Budget) -> Result<TreeDecomposition> {
    if ell < 3 {
        return Err(Error::InvalidParameter(format!("cycle length bound {ell} is below 3")));
    }
    if let Some(evidence) = find_long_cycle(g, ell, budget)? {
        return Err(Error::LongCycle { ell, evidence });
    }
    let res = exact_treewidth(g, budget);
    if !res.exact && res.width > ell - 2 {
        return Err(Error::BudgetExceeded { stage: "treewidth", limit: budget.max_nodes });
    }
    if res.width > ell - 2 {
        return Err(Error::TheoremViolation(format!(
            "graph with circumference < {ell} has treewidth {} > {}",
            res.width,
            ell - 2
        )));
    }
    Ok(res.decomposition)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::test_graphs::*;

    #[test]
    fn short_cycle_examples() {
        let b = Budget::default();
        let td = short_cycle_decomposition(&tree(), 3, b).unwrap();
        assert!(td.width() <= 1);
        assert_eq!(validate_td(&tree(), &td), Ok(()));
        assert_eq!(short_cycle_decomposition(&complete(4), 5, b).unwrap().width(), 3);
        match short_cycle_decomposition(&cycle(6), 5, b) {
            Err(Error::LongCycle { ell: 5, evidence }) => assert_eq!(evidence.len(), 6),
            other => panic!("expected a long-cycle error, got {other:?}"),
        }
    }
}
