use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use berge::formats::{
    format_coloring, format_cycle, format_graph, parse_cycle, parse_graph, parse_scheme, read_coloring, read_to_string,
    write_string,
};
use berge::{exhaust_parallel, Error, Result};
use berge_core::construct::{constructive_find_with, ConstructOptions};
use berge_core::hamilton::{chvatal_check, closure_with_trace, dirac_check, find_hamiltonian_cycle, HamiltonOutcome};
use berge_core::harness::{find_mono_berge, gen_coloring, SearchVerdict};
use berge_core::{verify_berge_cycle, HyperParams, Verdict};

const FOUND: u8 = 0;
const NOT_FOUND: u8 = 1;
const UNDECIDED: u8 = 2;

#[derive(Parser)]
#[command(name = "berge", version, about = "Monochromatic Hamiltonian Berge-cycles in colored complete hypergraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a cycle file against a coloring file.
    Verify { coloring: PathBuf, cycle: PathBuf },
    /// Exact search with a work budget; prints a JSON report.
    Search {
        coloring: PathBuf,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        /// Also write the cycle, if found, as a cycle file.
        #[arg(long)]
        cycle_out: Option<PathBuf>,
    },
    /// Classify every k-coloring of K_n^r.
    Exhaust {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: u8,
        #[arg(long, default_value_t = 8)]
        shards: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the witness / auxiliary-graph pipeline.
    Construct {
        coloring: PathBuf,
        /// Colour-degree bound used by avoidance; defaults to C(4r, r-1).
        #[arg(long)]
        d_bound: Option<u64>,
        #[arg(long)]
        good_threshold: Option<u64>,
        #[arg(long, default_value_t = 32)]
        max_attempts: usize,
        /// Dump the auxiliary graph bundle as JSON.
        #[arg(long)]
        bundle: Option<PathBuf>,
        #[arg(long)]
        cycle_out: Option<PathBuf>,
    },
    /// Bondy-Chvatal closure of a graph file.
    Closure {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a generated coloring.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: u8,
        /// uniform:C | random:SEED | partition:L0,L1,... | digits:1212...
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => write_string(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Cmd) -> Result<u8> {
    match cmd {
        Cmd::Verify { coloring, cycle } => {
            let col = read_coloring(&coloring)?;
            let cy = parse_cycle(&read_to_string(&cycle)?)?;
            match verify_berge_cycle(&cy, &col)? {
                Verdict::Valid => {
                    println!("valid");
                    Ok(FOUND)
                }
                Verdict::Invalid(v) => {
                    println!("invalid: {v}");
                    Ok(NOT_FOUND)
                }
            }
        }
        Cmd::Search { coloring, budget, cycle_out } => {
            let col = read_coloring(&coloring)?;
            let rep = find_mono_berge(&col, budget)?;
            println!("{}", serde_json::to_string_pretty(&rep)?);
            if let (Some(p), Some(cy)) = (cycle_out.as_ref(), rep.cycle.as_ref()) {
                write_string(p, &format_cycle(cy))?;
            }
            Ok(match rep.verdict {
                SearchVerdict::Found => FOUND,
                SearchVerdict::NotFound => NOT_FOUND,
                SearchVerdict::Undecided => UNDECIDED,
            })
        }
        Cmd::Exhaust { n, r, k, shards, out } => {
            let params = HyperParams::new(n, r, k)?;
            let rep = exhaust_parallel(&params, shards)?;
            let text = serde_json::to_string_pretty(&rep)? + "\n";
            emit(out.as_ref(), &text)?;
            if out.is_some() {
                eprintln!("total {} success {} failure {}", rep.total, rep.success, rep.failure);
            }
            Ok(if rep.failure == 0 { FOUND } else { NOT_FOUND })
        }
        Cmd::Construct { coloring, d_bound, good_threshold, max_attempts, bundle, cycle_out } => {
            let col = read_coloring(&coloring)?;
            let mut opts = ConstructOptions::for_uniformity(col.params().r());
            if let Some(d) = d_bound {
                opts.d_bound = d;
            }
            opts.good_threshold = good_threshold;
            opts.max_attempts = max_attempts;
            let outcome = constructive_find_with(&col, &opts)?;
            if let Some(p) = &bundle {
                match &outcome.bundle {
                    Some(b) => write_string(p, &(serde_json::to_string_pretty(b)? + "\n"))?,
                    None => eprintln!("no bundle was built"),
                }
            }
            let summary = json!({
                "found": outcome.found.as_ref().map(|(c, cy)| json!({ "color": c, "cycle": cy })),
                "failed_stage": outcome.failed_stage,
                "attempts": outcome.attempts,
                "work": outcome.work,
            });
            println!("{}", serde_json::to_string_pretty(&summary)?);
            match &outcome.found {
                Some((_, cy)) => {
                    if let Some(p) = &cycle_out {
                        write_string(p, &format_cycle(cy))?;
                    }
                    Ok(FOUND)
                }
                None => Ok(NOT_FOUND),
            }
        }
        Cmd::Closure { graph, out } => {
            let g = parse_graph(&read_to_string(&graph)?)?;
            let trace = closure_with_trace(&g);
            let n = g.n();
            eprintln!(
                "added {} edges; dirac {}; chvatal {}; closure complete {}",
                trace.added.len(),
                dirac_check(&g)?,
                chvatal_check(&g)?,
                trace.graph.edge_count() == n * (n - 1) / 2,
            );
            emit(out.as_ref(), &format_graph(&trace.graph))?;
            Ok(match find_hamiltonian_cycle(&g, 100_000_000)?.outcome {
                HamiltonOutcome::Found(_) => FOUND,
                HamiltonOutcome::NoCycle => NOT_FOUND,
                HamiltonOutcome::BudgetExhausted => UNDECIDED,
            })
        }
        Cmd::Gen { n, r, k, scheme, out } => {
            let params = HyperParams::new(n, r, k)?;
            let scheme = parse_scheme(&scheme)?;
            let col = gen_coloring(&params, &scheme)?;
            emit(out.as_ref(), &format_coloring(&col))?;
            Ok(FOUND)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(NOT_FOUND);
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let infeasible = matches!(e, Error::Core(berge_core::Error::Infeasible { .. }));
            ExitCode::from(if infeasible { UNDECIDED } else { NOT_FOUND })
        }
    }
}
