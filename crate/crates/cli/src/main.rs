use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cyclewidth::decomposer::Outcome;
use cyclewidth::format::{self, pace, Format};
use cyclewidth::harness::experiment::{
    girth_demo, run_duality_sweep, verify_sweep, write_sweep, Corpus, SweepConfig,
};
use cyclewidth::harness::generate::{generate, Family};
use cyclewidth::harness::witness::witness_lower_bound;
use cyclewidth::{
    decompose, exact_treewidth, has_disjoint_cycles_minor, max_long_cycle_packing,
    min_hitting_set_long_cycles, validate_td, verify_hitting_set, verify_minor_model,
    verify_outcome, verify_packing, Budget, CycleFamilySpec, CyclePacking, Error, Graph,
    MinorModel, VertexSet,
};

const OK: u8 = 0;
const VERIFY_FAILED: u8 = 1;
const BUDGET: u8 = 2;
const USAGE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "cyclewidth", version, about = "Treewidth or a disjoint-cycles minor, with certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cycle length threshold ℓ (a comma-separated list for `sweep`).
    #[arg(long, global = true, value_delimiter = ',')]
    ell: Vec<usize>,

    /// Target family H as cycle lengths, e.g. `5,3,3`.
    #[arg(long, global = true)]
    spec: Option<String>,

    /// Search-node budget per solver call.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_NODES)]
    budget: u64,

    /// Seed for random families given without one.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Graph format; input is auto-detected when omitted, output defaults to graph6.
    #[arg(long, global = true)]
    format: Option<Fmt>,

    /// Output file (standard output when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Fmt {
    Graph6,
    Gr,
}

impl From<Fmt> for Format {
    fn from(f: Fmt) -> Format {
        match f {
            Fmt::Graph6 => Format::Graph6,
            Fmt::Gr => Format::Gr,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Td,
    Packing,
    Hitting,
    Minor,
    Outcome,
    Sweep,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph: complete:N, cycle:N, path:N, grid:AxB, random:N:P[:SEED],
    /// random-cubic:N[:SEED], disjoint-cycles:L1,L2,...
    Gen { family: String },
    /// Exact treewidth; writes a PACE .td decomposition.
    Tw { graph: PathBuf },
    /// Maximum packing of disjoint cycles of length >= ℓ.
    Pack { graph: PathBuf },
    /// Minimum vertex set meeting every cycle of length >= ℓ.
    Hit { graph: PathBuf },
    /// Test for a disjoint-cycles minor given by --spec.
    Minor { graph: PathBuf },
    /// Minor model or a decomposition of width at most g(h, k).
    Decompose { graph: PathBuf },
    /// Check a certificate: `verify KIND GRAPH CERT`, or `verify sweep CSV`.
    Verify {
        kind: Kind,
        #[arg(num_args = 1..=2)]
        files: Vec<PathBuf>,
    },
    /// K_{h-1} with its no-minor and treewidth checks.
    Witness,
    /// Run every solver over a corpus (connected:N, all:N, g6:FILE or a family).
    Sweep {
        #[arg(long)]
        corpus: String,
    },
    /// Girth and treewidth bounds of random cubic graphs, as CSV.
    GirthDemo {
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0")]
        seeds: Vec<u64>,
    },
}

/// A failed command with its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } => BUDGET,
            Error::TheoremViolation(_) | Error::LongCycle { .. } | Error::IdCollision(_) => {
                VERIFY_FAILED
            }
            _ => USAGE,
        };
        Failure(code, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure(USAGE, msg.into())
}

type CmdResult = Result<u8, Failure>;

impl Cli {
    fn budget(&self) -> Budget {
        Budget::new(self.budget)
    }

    fn ell(&self) -> Result<usize, Failure> {
        match self.ell.as_slice() {
            [l] => Ok(*l),
            [] => Err(usage("--ell is required")),
            _ => Err(usage("a single --ell value is expected")),
        }
    }

    fn spec(&self) -> Result<CycleFamilySpec, Failure> {
        let s = self.spec.as_deref().ok_or_else(|| usage("--spec is required"))?;
        Ok(s.parse()?)
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        let res = match &self.out {
            Some(p) => fs::write(p, text),
            None => io::stdout().write_all(text.as_bytes()),
        };
        res.map_err(|e| usage(format!("cannot write output: {e}")))
    }

    fn read_graph(&self, path: &Path) -> Result<Graph, Failure> {
        let bytes = read_input(path)?;
        let fmt = self.format.map(Format::from).unwrap_or_else(|| Format::detect(&bytes));
        Ok(format::parse(fmt, &bytes)?)
    }
}

fn read_input(path: &Path) -> Result<Vec<u8>, Failure> {
    let mut bytes = Vec::new();
    let res = if path.as_os_str() == "-" {
        io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        fs::read(path).map(|b| bytes = b)
    };
    res.map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(bytes)
}

fn read_text(path: &Path) -> Result<String, Failure> {
    String::from_utf8(read_input(path)?).map_err(|_| usage("certificate is not UTF-8"))
}

fn parse_family(s: &str, seed: u64) -> Result<Family, Failure> {
    match s.parse::<Family>() {
        Ok(f) => Ok(f),
        Err(e) if s.starts_with("random") => {
            format!("{s}:{seed}").parse().map_err(|_| Failure::from(e))
        }
        Err(e) => Err(e.into()),
    }
}

/// A certificate that does not parse is a failed verification, not a usage error.
fn malformed(e: Error) -> Failure {
    Failure(VERIFY_FAILED, format!("malformed certificate: {e}"))
}

fn verdict(ok: Result<(), String>) -> CmdResult {
    match ok {
        Ok(()) => {
            println!("valid");
            Ok(OK)
        }
        Err(msg) => Err(Failure(VERIFY_FAILED, format!("invalid: {msg}"))),
    }
}

fn run(cli: &Cli) -> CmdResult {
    let budget = cli.budget();
    match &cli.command {
        Command::Gen { family } => {
            let g = generate(&parse_family(family, cli.seed)?)?;
            let fmt = cli.format.map_or(Format::Graph6, Format::from);
            cli.emit(&String::from_utf8_lossy(&format::serialize(&g, fmt)))?;
            Ok(OK)
        }
        Command::Tw { graph } => {
            let g = cli.read_graph(graph)?;
            let r = exact_treewidth(&g, budget);
            cli.emit(&pace::write_td(&r.decomposition, g.n()))?;
            eprintln!("treewidth {} (lower bound {}, exact {})", r.width, r.lower_bound, r.exact);
            Ok(if r.exact { OK } else { BUDGET })
        }
        Command::Pack { graph } => {
            let g = cli.read_graph(graph)?;
            let p = max_long_cycle_packing(&g, cli.ell()?, None, budget)?;
            cli.emit(&p.to_text())?;
            eprintln!("{} disjoint cycles of length >= {}", p.len(), cli.ell()?);
            Ok(OK)
        }
        Command::Hit { graph } => {
            let g = cli.read_graph(graph)?;
            let x = min_hitting_set_long_cycles(&g, cli.ell()?, budget)?;
            cli.emit(&x.to_text())?;
            eprintln!("{} vertices meet every cycle of length >= {}", x.len(), cli.ell()?);
            Ok(OK)
        }
        Command::Minor { graph } => {
            let g = cli.read_graph(graph)?;
            let text = match has_disjoint_cycles_minor(&g, &cli.spec()?, budget)? {
                Some(m) => format!("MINOR\n{}", m.packing.to_text()),
                None => "NONE\n".to_string(),
            };
            cli.emit(&text)?;
            Ok(OK)
        }
        Command::Decompose { graph } => {
            let g = cli.read_graph(graph)?;
            let o = decompose(&g, &cli.spec()?, budget).map_err(|e| {
                let Failure(code, msg) = Failure::from(e.error);
                Failure(code, format!("{msg} (after {} branch steps)", e.trace.len()))
            })?;
            cli.emit(&o.to_text(g.n()))?;
            Ok(OK)
        }
        Command::Verify { kind, files } => verify(cli, *kind, files),
        Command::Witness => {
            let (g, report) = witness_lower_bound(&cli.spec()?, budget)?;
            let fmt = cli.format.map_or(Format::Graph6, Format::from);
            cli.emit(&String::from_utf8_lossy(&format::serialize(&g, fmt)))?;
            eprintln!(
                "h {} minor {} treewidth {} exact {}",
                report.h, report.minor_found, report.treewidth, report.exact
            );
            if report.holds() {
                Ok(OK)
            } else if !report.exact {
                Ok(BUDGET)
            } else {
                Err(Failure(VERIFY_FAILED, "witness check failed".into()))
            }
        }
        Command::Sweep { corpus } => {
            if cli.ell.is_empty() {
                return Err(usage("--ell is required"));
            }
            let out = cli.out.as_ref().ok_or_else(|| usage("--out is required for sweep"))?;
            let graphs = corpus.parse::<Corpus>()?.graphs()?;
            let spec = cli.spec.as_deref().map(str::parse).transpose()?;
            let config = SweepConfig { ells: cli.ell.clone(), spec, budget };
            let report = run_duality_sweep(&graphs, &config)?;
            let dir = write_sweep(&report, out)?;
            eprintln!(
                "{} rows, {} over budget, {} violations; certificates in {}",
                report.rows.len(),
                report.budget_rows(),
                report.violations.len(),
                dir.display()
            );
            for (i, v) in &report.violations {
                eprintln!("row {i}: {v}");
            }
            Ok(if report.violations.is_empty() { OK } else { VERIFY_FAILED })
        }
        Command::GirthDemo { sizes, seeds } => {
            cli.emit(&girth_demo(sizes, seeds, budget)?)?;
            Ok(OK)
        }
    }
}

fn verify(cli: &Cli, kind: Kind, files: &[PathBuf]) -> CmdResult {
    let budget = cli.budget();
    if let Kind::Sweep = kind {
        let [csv] = files else { return Err(usage("verify sweep takes one CSV path")) };
        let problems = verify_sweep(csv, budget)?;
        for (i, p) in &problems {
            eprintln!("row {i}: {p}");
        }
        return verdict(match problems.len() {
            0 => Ok(()),
            k => Err(format!("{k} rows failed")),
        });
    }
    let [graph, cert] = files else { return Err(usage("expected GRAPH and CERTIFICATE")) };
    let g = cli.read_graph(graph)?;
    let text = read_text(cert)?;
    match kind {
        Kind::Td => {
            let (td, n) = pace::parse_td(text.as_bytes()).map_err(malformed)?;
            if n != g.n() {
                return verdict(Err(format!("decomposition is for {n} vertices, graph has {}", g.n())));
            }
            let ok = validate_td(&g, &td).map_err(|v| v.to_string());
            if ok.is_ok() {
                eprintln!("width {}", td.width());
            }
            verdict(ok)
        }
        Kind::Packing => {
            let p = CyclePacking::from_text(&text).map_err(malformed)?;
            verdict(verify_packing(&g, &p, cli.ell()?).map_err(|v| v.to_string()))
        }
        Kind::Hitting => {
            let ids = text
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Failure(VERIFY_FAILED, format!("bad vertex `{t}`"))))
                .collect::<Result<VertexSet, _>>()?;
            let ok = verify_hitting_set(&g, &ids, cli.ell()?, budget)?;
            verdict(if ok { Ok(()) } else { Err("a long cycle avoids the set".into()) })
        }
        Kind::Minor => {
            let spec = cli.spec()?;
            let body = text.strip_prefix("MINOR\n").unwrap_or(&text);
            let packing = CyclePacking::from_text(body).map_err(malformed)?;
            let model = MinorModel::by_dominance(packing.clone(), &spec)
                .unwrap_or(MinorModel { assignment: (0..packing.len()).collect(), packing });
            verdict(verify_minor_model(&g, &spec, &model))
        }
        Kind::Outcome => {
            let spec = cli.spec()?;
            let o = Outcome::from_text(&text, &spec).map_err(malformed)?;
            verdict(verify_outcome(&g, &spec, &o))
        }
        Kind::Sweep => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
