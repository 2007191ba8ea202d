//! Either a minor model of a disjoint union of cycles H, or a tree
//! decomposition of width at most `g(h, k) = 6h + 10k log k + 10k log log k + 40k`.
//!
//! The procedure recurses on the graph:
//!
//! 1. `k = 1`: a cycle of length `>= ℓ` is a model of H; otherwise the graph
//!    has circumference `< ℓ` and treewidth at most `ℓ - 2`.
//! 2. A cycle C with `ℓ <= |C| <= 6ℓ`: recurse on `G - V(C)` with one longest
//!    cycle of H removed, then put `V(C)` into every bag (or add C to the
//!    model).
//! 3. Otherwise pack long cycles; `k` of them form a model. Fewer (`r`)
//!    means a minimum set X meeting every long cycle has at most
//!    `g(0, r + 1)` vertices, and `G - X` has treewidth at most `ℓ - 2`.

use std::fmt;

use crate::budget::Budget;
use crate::cycles::{
    find_cycle_in_range, find_long_cycle, max_long_cycle_packing, verify_minor_model, Cycle,
    CycleFamilySpec, CyclePacking, MinorModel,
};
use crate::error::{Error, Result};
use crate::format::pace;
use crate::graph::{Graph, IdMap, VertexSet};
use crate::hitting::{ep_bound_no_medium, min_hitting_set_long_cycles};
use crate::treewidth::{short_cycle_decomposition, validate_td, TreeDecomposition};

/// `g(h, k)` with base-2 logarithms, rounded up. For `k = 1` both logarithmic
/// terms are taken as 0, so `g(h, 1) = 6h + 40`.
pub fn g_bound(h: usize, k: usize) -> u64 {
    assert!(k >= 1, "k must be positive");
    let tail = if k == 1 { 40 } else { ep_bound_no_medium(k) };
    6 * h as u64 + tail
}

/// One step of the recursion, with vertex ids of the original graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchRecord {
    /// Single target cycle of length `ell`.
    BaseCase { ell: usize },
    /// A cycle with length in `[lo, hi] = [ℓ, 6ℓ]` was taken out.
    MediumCycleRemoved { cycle: Cycle, lo: usize, hi: usize },
    /// Fewer than `k` disjoint long cycles (`r` of them); `hitting` meets
    /// every cycle of length `>= ell`.
    HittingSet { hitting: VertexSet, r: usize, ell: usize },
    /// `r >= k` disjoint cycles of length `>= ell` were packed.
    Packing { ell: usize, r: usize },
}

impl fmt::Display for BranchRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids = |it: &mut dyn Iterator<Item = usize>| -> String {
            it.map(|v| format!(" {v}")).collect()
        };
        match self {
            BranchRecord::BaseCase { ell } => write!(f, "TRACE base {ell}"),
            BranchRecord::MediumCycleRemoved { cycle, lo, hi } => {
                write!(f, "TRACE medium {lo} {hi} :{}", ids(&mut cycle.vertices().iter().copied()))
            }
            BranchRecord::HittingSet { hitting, r, ell } => {
                write!(f, "TRACE hitting {ell} {r} :{}", ids(&mut hitting.iter()))
            }
            BranchRecord::Packing { ell, r } => write!(f, "TRACE packing {ell} {r}"),
        }
    }
}

impl BranchRecord {
    fn parse(line: &str, lineno: usize) -> Result<Self> {
        let (head, tail) = match line.split_once(':') {
            Some((h, t)) => (h, Some(t)),
            None => (line, None),
        };
        let toks: Vec<&str> = head.split_whitespace().collect();
        let num = |t: &str| -> Result<usize> {
            t.parse().map_err(|_| Error::parse(lineno, format!("bad number `{t}`")))
        };
        let ids = || -> Result<Vec<usize>> {
            tail.unwrap_or("").split_whitespace().map(num).collect()
        };
        match toks.as_slice() {
            ["TRACE", "base", ell] => Ok(BranchRecord::BaseCase { ell: num(ell)? }),
            ["TRACE", "medium", lo, hi] => Ok(BranchRecord::MediumCycleRemoved {
                cycle: Cycle::new(ids()?),
                lo: num(lo)?,
                hi: num(hi)?,
            }),
            ["TRACE", "hitting", ell, r] => Ok(BranchRecord::HittingSet {
                hitting: ids()?.into_iter().collect(),
                r: num(r)?,
                ell: num(ell)?,
            }),
            ["TRACE", "packing", ell, r] => {
                Ok(BranchRecord::Packing { ell: num(ell)?, r: num(r)? })
            }
            _ => Err(Error::parse(lineno, format!("unrecognised trace line `{line}`"))),
        }
    }
}

/// Upper bound on the width of a decomposition produced along `trace`:
/// `6ℓ` per removed medium cycle plus `ℓ - 2` (and `|X|`) at the leaf.
pub fn trace_width_bound(trace: &[BranchRecord]) -> usize {
    trace
        .iter()
        .map(|r| match r {
            BranchRecord::BaseCase { ell } => ell - 2,
            BranchRecord::MediumCycleRemoved { lo, .. } => 6 * lo,
            BranchRecord::HittingSet { hitting, ell, .. } => hitting.len() + ell - 2,
            BranchRecord::Packing { .. } => 0,
        })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Minor { model: MinorModel, trace: Vec<BranchRecord> },
    Decomposition { td: TreeDecomposition, bound: u64, trace: Vec<BranchRecord> },
}

impl Outcome {
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::Minor { .. } => "minor",
            Outcome::Decomposition { .. } => "decomposition",
        }
    }

    pub fn trace(&self) -> &[BranchRecord] {
        match self {
            Outcome::Minor { trace, .. } | Outcome::Decomposition { trace, .. } => trace,
        }
    }

    pub fn width(&self) -> Option<usize> {
        match self {
            Outcome::Decomposition { td, .. } => Some(td.width()),
            Outcome::Minor { .. } => None,
        }
    }

    /// Text certificate for a graph on `n` vertices.
    pub fn to_text(&self, n: usize) -> String {
        let mut out = match self {
            Outcome::Minor { model, .. } => format!("MINOR\n{}", model.packing.to_text()),
            Outcome::Decomposition { td, bound, .. } => {
                format!("TD {} {}\n{}", td.width(), bound, pace::write_td(td, n))
            }
        };
        for r in self.trace() {
            out.push_str(&format!("{r}\n"));
        }
        out
    }

    /// Reads a certificate written by [`Outcome::to_text`]. Minor models are
    /// paired with `spec` by sorted dominance; a pairing that fails is kept
    /// as the identity so that verification reports it.
    pub fn from_text(text: &str, spec: &CycleFamilySpec) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty certificate"))?;
        let mut body = String::new();
        let mut trace = Vec::new();
        for (i, line) in lines {
            if line.starts_with("TRACE") {
                trace.push(BranchRecord::parse(line, i + 1)?);
            } else if trace.is_empty() {
                body.push_str(line);
                body.push('\n');
            } else {
                return Err(Error::parse(i + 1, "certificate body after trace"));
            }
        }
        let toks: Vec<&str> = header.split_whitespace().collect();
        match toks.as_slice() {
            ["MINOR"] => {
                let packing = CyclePacking::from_text(&body)?;
                let model = MinorModel::by_dominance(packing.clone(), spec).unwrap_or_else(|| {
                    let assignment = (0..packing.len()).collect();
                    MinorModel { packing, assignment }
                });
                Ok(Outcome::Minor { model, trace })
            }
            ["TD", _width, bound] => {
                let bound = bound.parse().map_err(|_| Error::parse(1, "bad bound"))?;
                let (td, _) = pace::parse_td(body.as_bytes())?;
                Ok(Outcome::Decomposition { td, bound, trace })
            }
            _ => Err(Error::parse(1, format!("unknown certificate header `{header}`"))),
        }
    }
}

/// A subroutine error together with the branches taken before it.
#[derive(Debug)]
pub struct DecomposeError {
    pub error: Error,
    pub trace: Vec<BranchRecord>,
}

impl fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (after {} branch steps)", self.error, self.trace.len())
    }
}

impl std::error::Error for DecomposeError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.error)
    }
}

enum Step {
    Minor(MinorModel),
    Td(TreeDecomposition),
}

struct Decomposer {
    budget: Budget,
    trace: Vec<BranchRecord>,
}

impl Decomposer {
    /// `to_orig` maps ids of `g` to the original graph (for the trace only);
    /// the returned certificate uses the ids of `g`.
    fn run(&mut self, g: &Graph, spec: &CycleFamilySpec, to_orig: &IdMap) -> Result<Step> {
        let ell = spec.ell();
        let k = spec.k();

        if k == 1 {
            self.trace.push(BranchRecord::BaseCase { ell });
            if let Some(c) = find_long_cycle(g, ell, self.budget)? {
                let model = MinorModel {
                    packing: CyclePacking { cycles: vec![c.canonical()] },
                    assignment: vec![0],
                };
                return Ok(Step::Minor(model));
            }
            let td = short_cycle_decomposition(g, ell, self.budget)?;
            if td.width() > spec.h() {
                return Err(Error::TheoremViolation(format!(
                    "base case width {} exceeds h = {}",
                    td.width(),
                    spec.h()
                )));
            }
            return Ok(Step::Td(td));
        }

        let medium = if g.n() >= ell {
            find_cycle_in_range(g, ell, 6 * ell, self.budget)?
        } else {
            None
        };
        if let Some(cycle) = medium {
            self.trace.push(BranchRecord::MediumCycleRemoved {
                cycle: cycle.lift(to_orig),
                lo: ell,
                hi: 6 * ell,
            });
            let removed: VertexSet = cycle.vertices().iter().copied().collect();
            let (sub, sub_map) = g.delete_vertices(&removed);
            let rest = spec.without_longest().expect("k >= 2");
            let gap = g_bound(rest.h(), rest.k()) + 6 * ell as u64;
            if gap > g_bound(spec.h(), k) {
                return Err(Error::TheoremViolation(format!(
                    "g({}, {}) + 6·{ell} = {gap} exceeds g({}, {k}) = {}",
                    rest.h(),
                    rest.k(),
                    spec.h(),
                    g_bound(spec.h(), k)
                )));
            }
            let removed_index = spec.longest_index();
            return Ok(match self.run(&sub, &rest, &to_orig.compose(&sub_map))? {
                Step::Minor(model) => {
                    let mut cycles: Vec<Cycle> =
                        model.packing.cycles.iter().map(|c| c.lift(&sub_map)).collect();
                    let mut assignment: Vec<usize> = model
                        .assignment
                        .iter()
                        .map(|&j| if j < removed_index { j } else { j + 1 })
                        .collect();
                    cycles.push(cycle.canonical());
                    assignment.push(removed_index);
                    Step::Minor(MinorModel { packing: CyclePacking { cycles }, assignment })
                }
                Step::Td(td) => Step::Td(td.add_to_all_bags(&removed, &sub_map)?),
            });
        }

        let packing = max_long_cycle_packing(g, ell, Some(k), self.budget)?;
        let r = packing.len();
        if r >= k {
            self.trace.push(BranchRecord::Packing { ell, r });
            let model = MinorModel::by_dominance(packing, spec)
                .expect("cycles of length >= ℓ dominate every target length");
            return Ok(Step::Minor(model));
        }
        let x = min_hitting_set_long_cycles(g, ell, self.budget)?;
        self.trace.push(BranchRecord::HittingSet { hitting: x.vertices.lift(to_orig), r, ell });
        let cap = ep_bound_no_medium(r + 1);
        if x.len() as u64 > cap {
            return Err(Error::TheoremViolation(format!(
                "hitting set of size {} exceeds bound {cap} for r = {r}",
                x.len()
            )));
        }
        let (rest, rest_map) = g.delete_vertices(&x.vertices);
        let td = short_cycle_decomposition(&rest, ell, self.budget)?;
        Ok(Step::Td(td.add_to_all_bags(&x.vertices, &rest_map)?))
    }
}

/// Runs the recursion on `g` for the target family `spec`.
///
/// A returned decomposition always has width at most `g_bound(h, k)`; a
/// decomposition may still be returned for graphs that contain the minor.
pub fn decompose(
    g: &Graph,
    spec: &CycleFamilySpec,
    budget: Budget,
) -> Result<Outcome, DecomposeError> {
    let mut d = Decomposer { budget, trace: Vec::new() };
    let step = d.run(g, spec, &IdMap::identity(g.n()));
    let trace = d.trace;
    let step = match step {
        Ok(s) => s,
        Err(error) => return Err(DecomposeError { error, trace }),
    };
    Ok(match step {
        Step::Minor(model) => Outcome::Minor { model, trace },
        Step::Td(td) => {
            let bound = g_bound(spec.h(), spec.k());
            if td.width() as u64 > bound {
                let error = Error::TheoremViolation(format!(
                    "decomposition width {} exceeds g(h, k) = {bound}",
                    td.width()
                ));
                return Err(DecomposeError { error, trace });
            }
            Outcome::Decomposition { td, bound, trace }
        }
    })
}

/// Checks an outcome against the original graph and family.
pub fn verify_outcome(g: &Graph, spec: &CycleFamilySpec, o: &Outcome) -> Result<(), String> {
    match o {
        Outcome::Minor { model, .. } => verify_minor_model(g, spec, model),
        Outcome::Decomposition { td, bound, .. } => {
            let expected = g_bound(spec.h(), spec.k());
            if *bound != expected {
                return Err(format!("claimed bound {bound} differs from g(h, k) = {expected}"));
            }
            validate_td(g, td).map_err(|v| v.to_string())?;
            if td.width() as u64 > expected {
                return Err(format!("width {} exceeds g(h, k) = {expected}", td.width()));
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::test_graphs::*;

    fn spec(s: &str) -> CycleFamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn g_bound_values() {
        assert_eq!(g_bound(6, 2), 136);
        assert_eq!(g_bound(0, 4), 280);
        assert_eq!(g_bound(3, 1), 58);
    }

    #[test]
    fn g_bound_monotone_and_recursion_step_holds() {
        for k in 1..100 {
            for h in 3 * k..3 * k + 60 {
                assert!(g_bound(h, k) <= g_bound(h + 1, k));
                assert!(g_bound(h, k) <= g_bound(h, k + 1));
                // removing a longest cycle of length ell from H
                for ell in 3..=h.min(40) {
                    if h >= ell + 3 * k {
                        assert!(g_bound(h - ell, k) + 6 * ell as u64 <= g_bound(h, k + 1));
                    }
                }
            }
        }
    }

    #[test]
    fn k7_gives_a_minor() {
        let g = complete(7);
        let o = decompose(&g, &spec("3,3"), Budget::default()).unwrap();
        assert_eq!(o.tag(), "minor");
        assert_eq!(verify_outcome(&g, &spec("3,3"), &o), Ok(()));
    }

    #[test]
    fn k5_gives_a_decomposition() {
        let g = complete(5);
        let o = decompose(&g, &spec("3,3"), Budget::default()).unwrap();
        let Outcome::Decomposition { td, bound, .. } = &o else { panic!("expected a decomposition") };
        assert_eq!(*bound, 136);
        assert_eq!(td.width(), 4);
        assert_eq!(verify_outcome(&g, &spec("3,3"), &o), Ok(()));
    }

    #[test]
    fn forest_base_case() {
        let g = tree();
        let o = decompose(&g, &spec("3"), Budget::default()).unwrap();
        assert!(o.width().unwrap() <= 1);
        assert_eq!(o.trace(), &[BranchRecord::BaseCase { ell: 3 }]);
        assert_eq!(verify_outcome(&g, &spec("3"), &o), Ok(()));
    }

    #[test]
    fn verification_rejects_tampering() {
        let g = complete(5);
        let o = decompose(&g, &spec("3,3"), Budget::default()).unwrap();
        let Outcome::Decomposition { td, trace, .. } = o else { unreachable!() };
        let too_wide = Outcome::Decomposition { td: td.clone(), bound: 3, trace: trace.clone() };
        assert!(verify_outcome(&g, &spec("3,3"), &too_wide).is_err());
        let broken = TreeDecomposition::new(vec![vec![0, 1, 2]], vec![]);
        let bad = Outcome::Decomposition { td: broken, bound: 136, trace };
        assert!(verify_outcome(&g, &spec("3,3"), &bad).is_err());

        let overlap = MinorModel {
            packing: CyclePacking {
                cycles: vec![Cycle::new(vec![0, 1, 2]), Cycle::new(vec![2, 3, 4])],
            },
            assignment: vec![0, 1],
        };
        let o = Outcome::Minor { model: overlap, trace: vec![] };
        assert!(verify_outcome(&g, &spec("3,3"), &o).is_err());
    }

    #[test]
    fn medium_cycle_branch_lifts_minor() {
        // C_5 plus a disjoint triangle, spec [5, 3]: removes the 5-cycle,
        // then finds the triangle in the base case.
        let g = cycle(5).disjoint_union(&cycle(3));
        let s = spec("5,3");
        let o = decompose(&g, &s, Budget::default()).unwrap();
        assert_eq!(o.tag(), "minor");
        assert_eq!(verify_outcome(&g, &s, &o), Ok(()));
        assert!(matches!(o.trace()[0], BranchRecord::MediumCycleRemoved { lo: 5, hi: 30, .. }));
    }

    #[test]
    fn certificate_roundtrip() {
        for (g, s) in [(complete(5), spec("3,3")), (complete(7), spec("3,3")), (petersen(), spec("4,4"))] {
            let o = decompose(&g, &s, Budget::default()).unwrap();
            let text = o.to_text(g.n());
            let back = Outcome::from_text(&text, &s).unwrap();
            assert_eq!(verify_outcome(&g, &s, &back), Ok(()));
            assert_eq!(back.to_text(g.n()), text);
        }
    }
}
