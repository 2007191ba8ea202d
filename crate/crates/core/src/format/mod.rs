//! Exchange formats: graph6, PACE `.gr` graphs and PACE `.td` tree
//! decompositions.
//!
//! Serialisation always produces the canonical form: edges in lexicographic
//! order, bags by id, vertices ascending, every line `\n`-terminated. Parsing
//! a canonical file and serialising the result reproduces it byte for byte.

pub mod graph6;
pub mod pace;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    /// PACE 2017 treewidth track `.gr` (`p tw n m` header, 1-indexed edges).
    Gr,
}

impl Format {
    /// Guesses the format from the first non-empty line.
    pub fn detect(bytes: &[u8]) -> Format {
        let text = String::from_utf8_lossy(bytes);
        match text.lines().map(str::trim).find(|l| !l.is_empty()) {
            Some(l) if l.starts_with("p ") || l.starts_with('c') && !l.starts_with(">>") => {
                Format::Gr
            }
            _ => Format::Graph6,
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "gr" | "dimacs-gr" | "pace" => Ok(Format::Gr),
            other => Err(Error::InvalidParameter(format!("unknown graph format `{other}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::Gr => "gr",
        })
    }
}

pub fn parse(format: Format, bytes: &[u8]) -> Result<Graph> {
    match format {
        Format::Graph6 => graph6::decode(bytes),
        Format::Gr => pace::parse_gr(bytes),
    }
}

pub fn serialize(g: &Graph, format: Format) -> Vec<u8> {
    match format {
        Format::Graph6 => {
            let mut out = graph6::encode(g).into_bytes();
            out.push(b'\n');
            out
        }
        Format::Gr => pace::write_gr(g).into_bytes(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_formats() {
        assert_eq!(Format::detect(b"p tw 3 0\n"), Format::Gr);
        assert_eq!(Format::detect(b"c hello\np tw 3 0\n"), Format::Gr);
        assert_eq!(Format::detect(b"Bw\n"), Format::Graph6);
        assert_eq!(Format::detect(b">>graph6<<Bw\n"), Format::Graph6);
    }
}
