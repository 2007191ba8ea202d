//! Named graph families.
//!
//! Random families draw from [`SplitMix64`] seeded with the given seed:
//!
//! - `random:n:p:seed` visits pairs `i < j` in lexicographic order and keeps
//!   the edge when `next_f64() < p`.
//! - `random-cubic:n:seed` uses the pairing model: points `0..3n` (point `q`
//!   belongs to vertex `q / 3`) are shuffled by Fisher-Yates from the last
//!   position down (`j = below(i + 1)`), consecutive points are paired, and
//!   the whole shuffle is redrawn while a loop or parallel edge appears.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::rng::SplitMix64;

const CUBIC_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Grid(usize, usize),
    Random { n: usize, p: f64, seed: u64 },
    RandomCubic { n: usize, seed: u64 },
    DisjointCycles(Vec<usize>),
}

fn bad(s: &str) -> Error {
    Error::InvalidParameter(format!("unrecognised graph family `{s}`"))
}

impl FromStr for Family {
    type Err = Error;

    /// `complete:5`, `cycle:6`, `path:4`, `grid:3x4`, `random:10:0.3:7`,
    /// `random-cubic:10:1`, `disjoint-cycles:5,3`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad(s));
        let seed = |t: &str| t.parse::<u64>().map_err(|_| bad(s));
        let fam = match parts.as_slice() {
            ["complete", n] => Family::Complete(num(n)?),
            ["cycle", n] => Family::Cycle(num(n)?),
            ["path", n] => Family::Path(num(n)?),
            ["grid", dims] => {
                let (a, b) = dims.split_once('x').ok_or_else(|| bad(s))?;
                Family::Grid(num(a)?, num(b)?)
            }
            ["grid", a, b] => Family::Grid(num(a)?, num(b)?),
            ["random", n, p, sd] => Family::Random {
                n: num(n)?,
                p: p.parse().map_err(|_| bad(s))?,
                seed: seed(sd)?,
            },
            ["random-cubic", n, sd] => Family::RandomCubic { n: num(n)?, seed: seed(sd)? },
            ["disjoint-cycles", lens] => Family::DisjointCycles(
                lens.split(',').map(|t| num(t.trim())).collect::<Result<_>>()?,
            ),
            _ => return Err(bad(s)),
        };
        Ok(fam)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Grid(a, b) => write!(f, "grid:{a}x{b}"),
            Family::Random { n, p, seed } => write!(f, "random:{n}:{p}:{seed}"),
            Family::RandomCubic { n, seed } => write!(f, "random-cubic:{n}:{seed}"),
            Family::DisjointCycles(l) => {
                let l: Vec<String> = l.iter().map(|x| x.to_string()).collect();
                write!(f, "disjoint-cycles:{}", l.join(","))
            }
        }
    }
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).expect("valid")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid")
}

/// `a` rows by `b` columns; vertex `r * b + c`.
pub fn grid(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..a {
        for c in 0..b {
            if r + 1 < a {
                edges.push((r * b + c, (r + 1) * b + c));
            }
            if c + 1 < b {
                edges.push((r * b + c, r * b + c + 1));
            }
        }
    }
    Graph::from_edges(a * b, edges).expect("valid")
}

pub fn random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("edge probability {p} is outside [0, 1]")));
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < p {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn random_cubic(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "random cubic graphs need an even n >= 4, got {n}"
        )));
    }
    let mut rng = SplitMix64::new(seed);
    let mut points: Vec<usize> = (0..3 * n).collect();
    'attempt: for _ in 0..CUBIC_ATTEMPTS {
        for (i, q) in points.iter_mut().enumerate() {
            *q = i;
        }
        for i in (1..points.len()).rev() {
            let j = rng.below(i as u64 + 1) as usize;
            points.swap(i, j);
        }
        let mut edges = Vec::with_capacity(3 * n / 2);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0] / 3, pair[1] / 3);
            let e = (u.min(v), u.max(v));
            if u == v || edges.contains(&e) {
                continue 'attempt;
            }
            edges.push(e);
        }
        return Graph::from_edges(n, edges);
    }
    Err(Error::InvalidParameter(format!(
        "no simple pairing found for n = {n} in {CUBIC_ATTEMPTS} attempts"
    )))
}

pub fn disjoint_cycles(lengths: &[usize]) -> Result<Graph> {
    let mut g = Graph::empty(0);
    for &l in lengths {
        g = g.disjoint_union(&cycle(l)?);
    }
    Ok(g)
}

pub fn generate(family: &Family) -> Result<Graph> {
    match family {
        Family::Complete(n) => Ok(complete(*n)),
        Family::Cycle(n) => cycle(*n),
        Family::Path(n) => Ok(path(*n)),
        Family::Grid(a, b) => Ok(grid(*a, *b)),
        Family::Random { n, p, seed } => random(*n, *p, *seed),
        Family::RandomCubic { n, seed } => random_cubic(*n, *seed),
        Family::DisjointCycles(l) => disjoint_cycles(l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let k5 = gen("complete:5");
        assert_eq!((k5.n(), k5.m()), (5, 10));
        let dc = gen("disjoint-cycles:5,3");
        assert_eq!((dc.n(), dc.m()), (8, 8));
        assert_eq!(gen("grid:3x4").m(), 17);
        assert_eq!(gen("path:1").m(), 0);
    }

    #[test]
    fn cubic_is_regular_and_reproducible() {
        for seed in 0..20 {
            let g = gen(&format!("random-cubic:10:{seed}"));
            assert!((0..10).all(|v| g.degree(v) == 3));
            assert_eq!(g, gen(&format!("random-cubic:10:{seed}")));
        }
        assert_eq!(gen("random-cubic:4:9"), complete(4));
    }

    #[test]
    fn rejects_bad_parameters() {
        for s in ["random-cubic:5:1", "random-cubic:2:1", "cycle:2", "random:5:1.5:0"] {
            assert!(generate(&s.parse().unwrap()).is_err(), "{s}");
        }
        for s in ["complete", "grid:3", "random:4:x:1", "wheel:5"] {
            assert!(s.parse::<Family>().is_err(), "{s}");
        }
    }

    #[test]
    fn display_roundtrip() {
        for s in ["complete:5", "grid:2x3", "random:10:0.25:7", "random-cubic:8:3", "disjoint-cycles:5,3"] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
    }
}
