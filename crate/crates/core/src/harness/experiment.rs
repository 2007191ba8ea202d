//! The duality sweep: packing, hitting set, treewidth and the decomposer on
//! every (graph, ℓ) pair of a corpus, with per-row certificates.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::budget::Budget;
use crate::cycles::{
    find_cycle_in_range, longest_cycle, max_long_cycle_packing, verify_packing, Cycle,
    CycleFamilySpec, CyclePacking,
};
use crate::decomposer::{decompose, g_bound, verify_outcome, Outcome};
use crate::error::{Error, Result};
use crate::format::{graph6, pace};
use crate::graph::{Graph, VertexSet};
use crate::harness::enumerate::{all_graphs, connected_graphs};
use crate::harness::generate::{generate, random_cubic, Family};
use crate::hitting::{ep_bound, ep_bound_no_medium, min_hitting_set_long_cycles, verify_hitting_set};
use crate::treewidth::heuristics::{min_fill_order, minor_min_width};
use crate::treewidth::{exact_treewidth, validate_td, TreeDecomposition};

/// Where the graphs of a sweep come from.
#[derive(Clone, Debug, PartialEq)]
pub enum Corpus {
    /// Connected graphs on 1..=n vertices, up to isomorphism.
    Connected(usize),
    /// All graphs on 0..=n vertices, up to isomorphism.
    All(usize),
    /// One graph6 string per line.
    Graph6File(PathBuf),
    Family(Family),
}

impl FromStr for Corpus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad corpus size in `{s}`")))
        };
        if let Some(n) = s.strip_prefix("connected:") {
            Ok(Corpus::Connected(num(n)?))
        } else if let Some(n) = s.strip_prefix("all:") {
            Ok(Corpus::All(num(n)?))
        } else if let Some(p) = s.strip_prefix("g6:") {
            Ok(Corpus::Graph6File(p.into()))
        } else {
            Ok(Corpus::Family(s.parse()?))
        }
    }
}

impl Corpus {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match self {
            Corpus::Connected(n) => {
                let mut out = Vec::new();
                for k in 1..=*n {
                    out.extend(connected_graphs(k)?);
                }
                Ok(out)
            }
            Corpus::All(n) => {
                let mut out = Vec::new();
                for k in 0..=*n {
                    out.extend(all_graphs(k)?);
                }
                Ok(out)
            }
            Corpus::Graph6File(path) => {
                let text = fs::read_to_string(path)?;
                text.lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(|l| graph6::decode(l.as_bytes()))
                    .collect()
            }
            Corpus::Family(f) => Ok(vec![generate(f)?]),
        }
    }
}

/// One CSV row. Fields after `m` are empty when a stage ran out of budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentRow {
    /// graph6 encoding of the graph.
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub ell: usize,
    pub nu: Option<usize>,
    pub tau: Option<usize>,
    /// `ep_bound(ν + 1, ℓ)`.
    pub ep_bound: Option<u64>,
    pub treewidth: Option<usize>,
    pub tw_exact: Option<bool>,
    pub outcome: Option<String>,
    pub width: Option<usize>,
    pub g_bound: u64,
    pub pack_us: u128,
    pub hit_us: u128,
    pub tw_us: u128,
    pub decompose_us: u128,
    pub circumference: Option<usize>,
    /// `ok`, `budget:<stage>` or `violation`.
    pub status: String,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or(String::new(), T::to_string)
}

fn parse_opt<T: FromStr>(s: &str) -> std::result::Result<Option<T>, String> {
    if s.is_empty() {
        Ok(None)
    } else {
        s.parse().map(Some).map_err(|_| format!("bad field `{s}`"))
    }
}

impl ExperimentRow {
    pub const HEADER: &'static str = "graph_id,n,m,ell,nu,tau,ep_bound,treewidth,tw_exact,\
outcome,width,g_bound,pack_us,hit_us,tw_us,decompose_us,circumference,status";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.graph_id,
            self.n,
            self.m,
            self.ell,
            opt(&self.nu),
            opt(&self.tau),
            opt(&self.ep_bound),
            opt(&self.treewidth),
            opt(&self.tw_exact),
            opt(&self.outcome),
            opt(&self.width),
            self.g_bound,
            self.pack_us,
            self.hit_us,
            self.tw_us,
            self.decompose_us,
            opt(&self.circumference),
            self.status
        )
    }

    pub fn from_csv(line: &str) -> std::result::Result<Self, String> {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 18 {
            return Err(format!("expected 18 fields, found {}", f.len()));
        }
        let req = |s: &str| s.parse::<u128>().map_err(|_| format!("bad field `{s}`"));
        Ok(ExperimentRow {
            graph_id: f[0].to_string(),
            n: req(f[1])? as usize,
            m: req(f[2])? as usize,
            ell: req(f[3])? as usize,
            nu: parse_opt(f[4])?,
            tau: parse_opt(f[5])?,
            ep_bound: parse_opt(f[6])?,
            treewidth: parse_opt(f[7])?,
            tw_exact: parse_opt(f[8])?,
            outcome: parse_opt(f[9])?,
            width: parse_opt(f[10])?,
            g_bound: req(f[11])? as u64,
            pack_us: req(f[12])?,
            hit_us: req(f[13])?,
            tw_us: req(f[14])?,
            decompose_us: req(f[15])?,
            circumference: parse_opt(f[16])?,
            status: f[17].to_string(),
        })
    }
}

/// Everything needed to re-check a row without rerunning the solvers.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RowCertificate {
    pub graph_id: String,
    pub ell: usize,
    pub spec: String,
    pub longest: Option<Cycle>,
    pub packing: Option<CyclePacking>,
    pub hitting: Option<VertexSet>,
    pub decomposition: Option<TreeDecomposition>,
    pub outcome: Option<String>,
}

impl RowCertificate {
    pub fn to_text(&self, n: usize) -> String {
        let mut out = format!("graph {}\nell {}\nspec {}\n", self.graph_id, self.ell, self.spec);
        if let Some(c) = &self.longest {
            let _ = writeln!(out, "longest {c}");
        }
        if let Some(p) = &self.packing {
            let _ = write!(out, "packing\n{}end\n", p.to_text());
        }
        if let Some(x) = &self.hitting {
            let line: Vec<String> =
                std::iter::once("hitting".into()).chain(x.iter().map(|v| v.to_string())).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        if let Some(td) = &self.decomposition {
            let _ = write!(out, "treewidth\n{}end\n", pace::write_td(td, n));
        }
        if let Some(o) = &self.outcome {
            let _ = write!(out, "outcome\n{o}end\n");
        }
        out
    }

    pub fn from_text(text: &str) -> std::result::Result<Self, String> {
        let mut cert = RowCertificate::default();
        let mut lines = text.lines();
        let block = |lines: &mut std::str::Lines| -> std::result::Result<String, String> {
            let mut body = String::new();
            for l in lines.by_ref() {
                if l == "end" {
                    return Ok(body);
                }
                body.push_str(l);
                body.push('\n');
            }
            Err("unterminated block".into())
        };
        let ids = |s: &str| -> std::result::Result<Vec<usize>, String> {
            s.split_whitespace().map(|t| t.parse().map_err(|_| format!("bad id `{t}`"))).collect()
        };
        while let Some(line) = lines.next() {
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            match key {
                "graph" => cert.graph_id = rest.to_string(),
                "ell" => cert.ell = rest.parse().map_err(|_| "bad ell".to_string())?,
                "spec" => cert.spec = rest.to_string(),
                "longest" => cert.longest = Some(Cycle::new(ids(rest)?)),
                "packing" => {
                    let body = block(&mut lines)?;
                    cert.packing = Some(CyclePacking::from_text(&body).map_err(|e| e.to_string())?);
                }
                "hitting" => cert.hitting = Some(ids(rest)?.into_iter().collect()),
                "treewidth" => {
                    let body = block(&mut lines)?;
                    let (td, _) = pace::parse_td(body.as_bytes()).map_err(|e| e.to_string())?;
                    cert.decomposition = Some(td);
                }
                "outcome" => cert.outcome = Some(block(&mut lines)?),
                "" => {}
                other => return Err(format!("unknown certificate section `{other}`")),
            }
        }
        Ok(cert)
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub ells: Vec<usize>,
    /// Target family for the decomposer; `[ℓ, ℓ]` when absent.
    pub spec: Option<CycleFamilySpec>,
    pub budget: Budget,
}

/// Result of one (graph, ℓ) evaluation.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub row: ExperimentRow,
    pub certificate: RowCertificate,
    pub violations: Vec<String>,
}

fn micros(t: Instant) -> u128 {
    t.elapsed().as_micros()
}

/// Runs every stage on `g` and checks the row invariants.
pub fn evaluate(g: &Graph, ell: usize, spec: &CycleFamilySpec, budget: Budget) -> Evaluation {
    let graph_id = graph6::encode(g);
    let mut row = ExperimentRow {
        graph_id: graph_id.clone(),
        n: g.n(),
        m: g.m(),
        ell,
        nu: None,
        tau: None,
        ep_bound: None,
        treewidth: None,
        tw_exact: None,
        outcome: None,
        width: None,
        g_bound: g_bound(spec.h(), spec.k()),
        pack_us: 0,
        hit_us: 0,
        tw_us: 0,
        decompose_us: 0,
        circumference: None,
        status: "ok".into(),
    };
    let mut cert = RowCertificate { graph_id, ell, spec: spec.to_string(), ..Default::default() };
    let mut violations = Vec::new();
    let mut budget_hit: Option<&'static str> = None;
    let mut note = |e: Error, violations: &mut Vec<String>| match e {
        Error::BudgetExceeded { stage, .. } => {
            budget_hit.get_or_insert(stage);
        }
        other => violations.push(other.to_string()),
    };

    match longest_cycle(g, budget) {
        Ok(c) => {
            row.circumference = Some(c.as_ref().map_or(0, Cycle::len));
            cert.longest = c;
        }
        Err(e) => note(e, &mut violations),
    }

    let t = Instant::now();
    match max_long_cycle_packing(g, ell, None, budget) {
        Ok(p) => {
            if let Err(v) = verify_packing(g, &p, ell) {
                violations.push(format!("packing invalid: {v}"));
            }
            row.nu = Some(p.len());
            row.ep_bound = Some(ep_bound(p.len() + 1, ell));
            cert.packing = Some(p);
        }
        Err(e) => note(e, &mut violations),
    }
    row.pack_us = micros(t);

    let t = Instant::now();
    match min_hitting_set_long_cycles(g, ell, budget) {
        Ok(x) => {
            match verify_hitting_set(g, &x.vertices, ell, budget) {
                Ok(true) => {}
                Ok(false) => violations.push("hitting set misses a long cycle".into()),
                Err(e) => note(e, &mut violations),
            }
            row.tau = Some(x.len());
            cert.hitting = Some(x.vertices);
        }
        Err(e) => note(e, &mut violations),
    }
    row.hit_us = micros(t);

    let t = Instant::now();
    let tw = exact_treewidth(g, budget);
    row.tw_us = micros(t);
    if let Err(v) = validate_td(g, &tw.decomposition) {
        violations.push(format!("treewidth decomposition invalid: {v}"));
    }
    row.treewidth = Some(tw.width);
    row.tw_exact = Some(tw.exact);
    cert.decomposition = Some(tw.decomposition);

    let t = Instant::now();
    match decompose(g, spec, budget) {
        Ok(o) => {
            if let Err(v) = verify_outcome(g, spec, &o) {
                violations.push(format!("decomposer outcome invalid: {v}"));
            }
            row.outcome = Some(o.tag().to_string());
            row.width = o.width();
            cert.outcome = Some(o.to_text(g.n()));
        }
        Err(e) => note(e.error, &mut violations),
    }
    row.decompose_us = micros(t);

    violations.extend(check_invariants(&row));
    if let (Some(nu), Some(tau)) = (row.nu, row.tau) {
        match find_cycle_in_range(g, ell, 6 * ell, budget) {
            Ok(None) if tau as u64 > ep_bound_no_medium(nu + 1) => violations.push(format!(
                "no cycle of length in [{ell}, {}] but τ = {tau} > {}",
                6 * ell,
                ep_bound_no_medium(nu + 1)
            )),
            Ok(_) => {}
            Err(e) => note(e, &mut violations),
        }
    }

    if let Some(stage) = budget_hit {
        row.status = format!("budget:{}", stage.replace(' ', "-"));
    }
    if !violations.is_empty() {
        row.status = "violation".into();
    }
    Evaluation { row, certificate: cert, violations }
}

/// Invariants that follow from the row's numbers alone.
pub fn check_invariants(row: &ExperimentRow) -> Vec<String> {
    let mut out = Vec::new();
    let ell = row.ell;
    if let (Some(nu), Some(tau)) = (row.nu, row.tau) {
        if nu > tau {
            out.push(format!("ν = {nu} > τ = {tau}"));
        }
        let bound = ep_bound(nu + 1, ell);
        if tau as u64 > bound {
            out.push(format!("τ = {tau} > ep_bound({}, {ell}) = {bound}", nu + 1));
        }
        if (nu == 0) != (tau == 0) {
            out.push(format!("ν = {nu} and τ = {tau} disagree on whether long cycles exist"));
        }
    }
    if let (Some(c), Some(tw), Some(true)) = (row.circumference, row.treewidth, row.tw_exact) {
        if c < ell && tw + 2 > ell {
            out.push(format!("circumference {c} < {ell} but treewidth {tw} > {}", ell - 2));
        }
    }
    if let (Some(c), Some(nu)) = (row.circumference, row.nu) {
        if (c >= ell) != (nu > 0) {
            out.push(format!("circumference {c} and ν = {nu} disagree for ℓ = {ell}"));
        }
    }
    if row.outcome.as_deref() == Some("decomposition") {
        match row.width {
            Some(w) if w as u64 <= row.g_bound => {}
            w => out.push(format!("decomposition width {w:?} exceeds g = {}", row.g_bound)),
        }
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub rows: Vec<ExperimentRow>,
    pub certificates: Vec<RowCertificate>,
    /// `(row index, message)`.
    pub violations: Vec<(usize, String)>,
}

impl SweepReport {
    pub fn to_csv(&self) -> String {
        let mut out = format!("{}\n", ExperimentRow::HEADER);
        for r in &self.rows {
            out.push_str(&r.to_csv());
            out.push('\n');
        }
        out
    }

    pub fn budget_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.status.starts_with("budget")).count()
    }
}

/// One row per (graph, ℓ), in corpus order, evaluated in parallel.
pub fn run_duality_sweep(graphs: &[Graph], config: &SweepConfig) -> Result<SweepReport> {
    if let Some(&bad) = config.ells.iter().find(|&&l| l < 3) {
        return Err(Error::InvalidParameter(format!("cycle length bound {bad} is below 3")));
    }
    let jobs: Vec<(&Graph, usize)> =
        graphs.iter().flat_map(|g| config.ells.iter().map(move |&l| (g, l))).collect();
    let evals: Vec<Evaluation> = jobs
        .par_iter()
        .map(|&(g, ell)| {
            let spec = config.spec.clone().unwrap_or_else(|| {
                CycleFamilySpec::new(vec![ell, ell]).expect("ell >= 3")
            });
            evaluate(g, ell, &spec, config.budget)
        })
        .collect();
    let mut report = SweepReport::default();
    for (i, e) in evals.into_iter().enumerate() {
        report.violations.extend(e.violations.into_iter().map(|v| (i, v)));
        report.rows.push(e.row);
        report.certificates.push(e.certificate);
    }
    Ok(report)
}

/// Directory holding the certificates of the CSV at `csv`: `<stem>.certs`
/// next to it.
pub fn certificate_dir(csv: &Path) -> PathBuf {
    let stem = csv.file_stem().map_or("sweep".into(), |s| s.to_string_lossy().into_owned());
    csv.with_file_name(format!("{stem}.certs"))
}

fn certificate_path(dir: &Path, index: usize) -> PathBuf {
    dir.join(format!("row-{index:06}.txt"))
}

/// Writes the CSV and one certificate file per row.
pub fn write_sweep(report: &SweepReport, csv: &Path) -> Result<PathBuf> {
    fs::write(csv, report.to_csv())?;
    let dir = certificate_dir(csv);
    fs::create_dir_all(&dir)?;
    for (i, (row, cert)) in report.rows.iter().zip(&report.certificates).enumerate() {
        fs::write(certificate_path(&dir, i), cert.to_text(row.n))?;
    }
    Ok(dir)
}

/// Re-checks one row against its certificate. Every number in the row that
/// the certificate determines must match, and every certificate must verify.
pub fn verify_row(row: &ExperimentRow, cert: &RowCertificate, budget: Budget) -> std::result::Result<(), String> {
    let g = graph6::decode(row.graph_id.as_bytes()).map_err(|e| e.to_string())?;
    if cert.graph_id != row.graph_id || cert.ell != row.ell {
        return Err("certificate belongs to another row".into());
    }
    if (g.n(), g.m()) != (row.n, row.m) {
        return Err("n or m does not match the graph".into());
    }
    let spec: CycleFamilySpec = cert.spec.parse().map_err(|e: Error| e.to_string())?;
    if row.g_bound != g_bound(spec.h(), spec.k()) {
        return Err("g_bound column is wrong".into());
    }
    if let Some(c) = row.circumference {
        match &cert.longest {
            Some(cy) => {
                cy.check(&g, c)?;
                if cy.len() != c {
                    return Err("longest-cycle witness has the wrong length".into());
                }
            }
            None if c == 0 => {}
            None => return Err("missing longest-cycle witness".into()),
        }
    }
    if let Some(nu) = row.nu {
        let p = cert.packing.as_ref().ok_or("missing packing")?;
        verify_packing(&g, p, row.ell).map_err(|v| v.to_string())?;
        if p.len() != nu {
            return Err(format!("packing has {} cycles, row says {nu}", p.len()));
        }
    }
    if let Some(tau) = row.tau {
        let x = cert.hitting.as_ref().ok_or("missing hitting set")?;
        if !verify_hitting_set(&g, x, row.ell, budget).map_err(|e| e.to_string())? {
            return Err("hitting set misses a long cycle".into());
        }
        if x.len() != tau {
            return Err(format!("hitting set has {} vertices, row says {tau}", x.len()));
        }
    }
    if let Some(tw) = row.treewidth {
        let td = cert.decomposition.as_ref().ok_or("missing decomposition")?;
        validate_td(&g, td).map_err(|v| v.to_string())?;
        if td.width() != tw {
            return Err(format!("decomposition has width {}, row says {tw}", td.width()));
        }
    }
    if let Some(tag) = &row.outcome {
        let text = cert.outcome.as_ref().ok_or("missing outcome")?;
        let o = Outcome::from_text(text, &spec).map_err(|e| e.to_string())?;
        verify_outcome(&g, &spec, &o)?;
        if o.tag() != tag || o.width() != row.width {
            return Err("outcome does not match the row".into());
        }
    }
    match check_invariants(row).into_iter().next() {
        Some(v) => Err(v),
        None => Ok(()),
    }
}

/// Re-verifies a CSV written by [`write_sweep`]; returns `(row, problem)`.
pub fn verify_sweep(csv: &Path, budget: Budget) -> Result<Vec<(usize, String)>> {
    let text = fs::read_to_string(csv)?;
    let mut lines = text.lines();
    if lines.next() != Some(ExperimentRow::HEADER) {
        return Err(Error::parse(1, "unexpected CSV header"));
    }
    let dir = certificate_dir(csv);
    let mut problems = Vec::new();
    for (i, line) in lines.enumerate() {
        let checked = ExperimentRow::from_csv(line).and_then(|row| {
            let body = fs::read_to_string(certificate_path(&dir, i)).map_err(|e| e.to_string())?;
            let cert = RowCertificate::from_text(&body)?;
            verify_row(&row, &cert, budget)
        });
        if let Err(p) = checked {
            problems.push((i, p));
        }
    }
    Ok(problems)
}

/// Girth and treewidth bounds of random cubic graphs, as CSV. Treewidth is
/// exact when the solver finishes within `budget`; otherwise the columns
/// hold the minor-min-width lower bound and the min-fill upper bound.
pub fn girth_demo(ns: &[usize], seeds: &[u64], budget: Budget) -> Result<String> {
    let mut out = String::from("n,seed,girth,tw_lower,tw_upper,tw_exact\n");
    for &n in ns {
        for &seed in seeds {
            let g = random_cubic(n, seed)?;
            let girth = crate::cycles::girth(&g).map_or(String::new(), |x| x.to_string());
            let (lo, hi, exact) = if g.n() <= crate::graph::MAX_EXACT_VERTICES {
                let r = exact_treewidth(&g, budget);
                (r.lower_bound, r.width, r.exact)
            } else {
                (minor_min_width(&g), min_fill_order(&g).1, false)
            };
            let _ = writeln!(out, "{n},{seed},{girth},{lo},{hi},{exact}");
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::generate::{cycle, path};

    fn config(ells: &[usize]) -> SweepConfig {
        SweepConfig { ells: ells.to_vec(), spec: None, budget: Budget::default() }
    }

    #[test]
    fn single_cycle_row() {
        let rep = run_duality_sweep(&[cycle(6).unwrap()], &config(&[3])).unwrap();
        let r = &rep.rows[0];
        assert_eq!((r.nu, r.tau, r.treewidth), (Some(1), Some(1), Some(2)));
        assert_eq!(r.status, "ok");
        assert!(rep.violations.is_empty());
    }

    #[test]
    fn forest_row() {
        let rep = run_duality_sweep(&[path(5)], &config(&[3])).unwrap();
        let r = &rep.rows[0];
        assert_eq!((r.nu, r.tau, r.treewidth), (Some(0), Some(0), Some(1)));
        assert_eq!(r.circumference, Some(0));
    }

    #[test]
    fn small_connected_corpus() {
        let graphs = Corpus::Connected(6).graphs().unwrap();
        let rep = run_duality_sweep(&graphs, &config(&[4, 5])).unwrap();
        assert_eq!(rep.rows.len(), 2 * graphs.len());
        assert!(rep.violations.is_empty(), "{:?}", rep.violations);
        for (row, cert) in rep.rows.iter().zip(&rep.certificates) {
            let back = ExperimentRow::from_csv(&row.to_csv()).unwrap();
            assert_eq!(&back, row);
            let cert = RowCertificate::from_text(&cert.to_text(row.n)).unwrap();
            assert_eq!(verify_row(row, &cert, Budget::default()), Ok(()));
        }
    }

    #[test]
    fn tampered_row_fails_verification() {
        let rep = run_duality_sweep(&[cycle(6).unwrap()], &config(&[3])).unwrap();
        let mut row = rep.rows[0].clone();
        row.tau = Some(2);
        assert!(verify_row(&row, &rep.certificates[0], Budget::default()).is_err());
    }

    #[test]
    fn girth_demo_rows() {
        assert_eq!(girth_demo(&[], &[1], Budget::default()).unwrap(), "n,seed,girth,tw_lower,tw_upper,tw_exact\n");
        let csv = girth_demo(&[4], &[0], Budget::default()).unwrap();
        assert_eq!(csv.lines().nth(1), Some("4,0,3,3,3,true"));
        for line in girth_demo(&[10], &[0, 1, 2], Budget::default()).unwrap().lines().skip(1) {
            let f: Vec<&str> = line.split(',').collect();
            assert!(["3", "4", "5"].contains(&f[2]));
            // minimum degree 3 bounds the treewidth from below
            assert!(f[3].parse::<usize>().unwrap() >= 3);
        }
    }
}
