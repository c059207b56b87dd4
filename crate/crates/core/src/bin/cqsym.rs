use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use cqsym::combinatorics::{family_generator, Digraph, FamilyKind};
use cqsym::cqsf::{classify, compute, Method, DEFAULT_FACTORIAL_BUDGET};
use cqsym::verify::{run_suite, Suite, VerifyParams};
use cqsym::{Basis, Error};

const EXIT_COUNTEREXAMPLE: u8 = 4;

/// Chromatic quasisymmetric functions of directed graphs.
#[derive(Parser, Debug)]
#[command(name = "cqsym", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Worker threads for the permutation and coloring sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Print only the JSON document.
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Print only the human-readable rendering.
    #[arg(long, global = true)]
    pretty: bool,

    /// Largest vertex count for factorial-size enumerations.
    #[arg(long, global = true, default_value_t = DEFAULT_FACTORIAL_BUDGET)]
    budget_factorial: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute X for a digraph in a chosen basis.
    Compute {
        /// Digraph JSON file, or `-` for stdin.
        #[arg(long)]
        graph: PathBuf,
        /// One of M, F, m, e, p.
        #[arg(long, default_value = "M")]
        basis: Basis,
        /// One of direct, f-basis, p-basis, series.
        #[arg(long, default_value = "direct")]
        method: Method,
    },
    /// Report structural and symmetry properties of a digraph.
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Run a verification suite.
    Verify {
        /// f-basis, p-basis, cycle-p, cycle-e, sinks, ao-lambda or conjecture.
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// Restrict the conjecture suite to interval or circular.
        #[arg(long)]
        family: Option<FamilyKind>,
        /// Number of random digraphs for suites that sample.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print a family member as digraph JSON.
    Family {
        /// interval, circular, path or cycle.
        kind: FamilyKind,
        n: usize,
        /// Band width; ignored for path and cycle.
        #[arg(default_value_t = 0)]
        r: usize,
    },
}

fn default_max_n(suite: Suite) -> usize {
    match suite {
        Suite::FBasis => 4,
        Suite::PBasis => 7,
        Suite::Sinks => 6,
        Suite::CycleP | Suite::CycleE | Suite::AoLambda | Suite::Conjecture => 8,
    }
}

fn read_graph(path: &PathBuf) -> Result<Digraph, Error> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn emit(global: &Global, rendering: &str, doc: &impl Serialize) {
    let json = serde_json::to_string(doc).expect("reports serialize");
    if !global.json {
        println!("{rendering}");
    }
    if !global.pretty {
        println!("{json}");
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let g = &cli.global;
    match cli.command {
        Command::Compute { graph, basis, method } => {
            let d = read_graph(&graph)?;
            let x = compute(&d, basis, method, g.budget_factorial)?;
            emit(g, &x.to_string(), &x.to_json());
        }
        Command::Classify { graph } => {
            let d = read_graph(&graph)?;
            let r = classify(&d, g.budget_factorial)?;
            let line = format!(
                "oriented={} acyclic={} proper_circular_arc={} unit_interval={} symmetric={} palindromic={}",
                r.oriented, r.acyclic, r.proper_circular_arc, r.unit_interval, r.symmetric, r.palindromic
            );
            emit(g, &line, &r);
        }
        Command::Verify { suite, max_n, family, samples, seed } => {
            let suite: Suite = suite.parse()?;
            let mut params = VerifyParams::defaults(suite, max_n.unwrap_or_else(|| default_max_n(suite)));
            params.family = family;
            params.budget = g.budget_factorial;
            if let Some(s) = samples {
                params.samples = s;
            }
            if let Some(s) = seed {
                params.seed = s;
            }
            let report = run_suite(suite, &params)?;
            let line = match &report.counterexample {
                None => format!("{}: pass ({} checks)", report.suite, report.checked),
                Some(c) => format!("{}: FAIL on {:?}: {}", report.suite, c.graph, c.detail),
            };
            emit(g, &line, &report);
            if !report.passed() {
                return Ok(ExitCode::from(EXIT_COUNTEREXAMPLE));
            }
        }
        Command::Family { kind, n, r } => {
            let d = family_generator(kind, n, r)?;
            let j = d.to_json();
            emit(g, &format!("{:?}", j.edges), &j);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
