//! `K_{h-1}` as a lower-bound witness: it has only `h - 1` vertices, so no
//! minor of it is a graph on `h` vertices, while its treewidth is `h - 2`.

use crate::budget::Budget;
use crate::cycles::{has_disjoint_cycles_minor, CycleFamilySpec};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::generate::complete;
use crate::treewidth::{exact_treewidth, validate_td};

/// Largest `h` accepted, so that both checks stay exact.
pub const MAX_WITNESS_H: usize = 11;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub h: usize,
    pub minor_found: bool,
    pub treewidth: usize,
    pub exact: bool,
}

impl WitnessReport {
    /// No minor, and exact treewidth `h - 2`.
    pub fn holds(&self) -> bool {
        !self.minor_found && self.exact && self.treewidth + 2 == self.h
    }
}

pub fn witness_lower_bound(spec: &CycleFamilySpec, budget: Budget) -> Result<(Graph, WitnessReport)> {
    let h = spec.h();
    if h > MAX_WITNESS_H {
        return Err(Error::InvalidParameter(format!(
            "h = {h} exceeds {MAX_WITNESS_H}, the largest witness verified exactly"
        )));
    }
    let g = complete(h - 1);
    let minor_found = has_disjoint_cycles_minor(&g, spec, budget)?.is_some();
    let tw = exact_treewidth(&g, budget);
    if let Err(v) = validate_td(&g, &tw.decomposition) {
        return Err(Error::TheoremViolation(format!("witness decomposition invalid: {v}")));
    }
    let report = WitnessReport { h, minor_found, treewidth: tw.width, exact: tw.exact };
    Ok((g, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(s: &str) -> (Graph, WitnessReport) {
        witness_lower_bound(&s.parse().unwrap(), Budget::default()).unwrap()
    }

    #[test]
    fn examples() {
        let (g, r) = report("3,3");
        assert_eq!((g.n(), r.treewidth), (5, 4));
        assert!(r.holds());
        let (g, r) = report("3");
        assert_eq!((g.n(), g.m(), r.treewidth), (2, 1, 1));
        assert!(r.holds());
        let (_, r) = report("4,3");
        assert_eq!(r.treewidth, 5);
        assert!(r.holds());
    }

    #[test]
    fn rejects_large_h() {
        assert!(witness_lower_bound(&"6,6".parse().unwrap(), Budget::default()).is_err());
    }
}
