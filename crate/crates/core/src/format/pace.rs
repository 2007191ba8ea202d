//! PACE 2017 `.gr` and `.td` files.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::treewidth::TreeDecomposition;

fn text(bytes: &[u8]) -> Result<&str> {
    std::str::from_utf8(bytes).map_err(|_| Error::parse(1, "input is not UTF-8"))
}

/// Non-comment, non-empty lines with their 1-based line numbers.
fn content_lines(src: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty() && toks[0] != "c")
}

fn number(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::parse(line, format!("expected a number, found `{tok}`")))
}

fn one_indexed(tok: &str, line: usize, n: usize) -> Result<usize> {
    let v = number(tok, line)?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_gr(bytes: &[u8]) -> Result<Graph> {
    let src = text(bytes)?;
    let mut lines = content_lines(src);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `p tw` header"))?;
    let (n, m) = match header.as_slice() {
        ["p", "tw", n, m] => (number(n, hline)?, number(m, hline)?),
        _ => return Err(Error::parse(hline, "malformed header, expected `p tw <n> <m>`")),
    };
    let mut edges = Vec::with_capacity(m);
    for (line, toks) in lines {
        match toks.as_slice() {
            [u, v] => {
                let (u, v) = (one_indexed(u, line, n)?, one_indexed(v, line, n)?);
                if u == v {
                    return Err(Error::parse(line, format!("self-loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            _ => return Err(Error::parse(line, "edge line must contain exactly two vertices")),
        }
    }
    if edges.len() != m {
        return Err(Error::parse(
            hline,
            format!("header announces {m} edges but {} edge lines follow", edges.len()),
        ));
    }
    let g = Graph::from_edges(n, edges)?;
    if g.m() != m {
        return Err(Error::parse(hline, "duplicate edges in edge list"));
    }
    Ok(g)
}

pub fn write_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", u + 1, v + 1);
    }
    out
}

/// Parses a `.td` file, returning the decomposition and the vertex count
/// announced in its header.
pub fn parse_td(bytes: &[u8]) -> Result<(TreeDecomposition, usize)> {
    let src = text(bytes)?;
    let mut lines = content_lines(src);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `s td` header"))?;
    let (nbags, max_bag, n) = match header.as_slice() {
        ["s", "td", b, w, n] => (number(b, hline)?, number(w, hline)?, number(n, hline)?),
        _ => return Err(Error::parse(hline, "malformed header, expected `s td <bags> <width+1> <n>`")),
    };
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; nbags];
    let mut edges = Vec::new();
    for (line, toks) in lines {
        if toks[0] == "b" {
            let id = toks.get(1).ok_or_else(|| Error::parse(line, "bag line without id"))?;
            let id = one_indexed(id, line, nbags)?;
            if bags[id].is_some() {
                return Err(Error::parse(line, format!("bag {} listed twice", id + 1)));
            }
            let mut bag = toks[2..]
                .iter()
                .map(|t| one_indexed(t, line, n))
                .collect::<Result<Vec<_>>>()?;
            bag.sort_unstable();
            bag.dedup();
            bags[id] = Some(bag);
        } else if let [a, b] = toks.as_slice() {
            edges.push((one_indexed(a, line, nbags)?, one_indexed(b, line, nbags)?));
        } else {
            return Err(Error::parse(line, "expected a bag line or a tree edge"));
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::parse(hline, format!("bag {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let actual = bags.iter().map(Vec::len).max().unwrap_or(0);
    if actual != max_bag {
        return Err(Error::parse(
            hline,
            format!("header announces bag size {max_bag} but largest bag has {actual}"),
        ));
    }
    Ok((TreeDecomposition::new(bags, edges), n))
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let max_bag = td.bags().iter().map(Vec::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.bags().len(), max_bag, n);
    for (i, bag) in td.bags().iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in td.edges() {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}
