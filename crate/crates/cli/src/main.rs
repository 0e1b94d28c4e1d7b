use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use zsflow::format::{parse_flow, parse_graph, serialize_flow, serialize_graph};
use zsflow::generate::{gen_random_5regular, GeneratorConfig};
use zsflow::graph::Multigraph;
use zsflow::oracle::{brute_force_flow, OracleResult};
use zsflow::solver::{solve, verify};

/// Zero-sum 6-flows on 5-regular multigraphs.
///
/// Exit status: 0 on success, 1 when a check fails or no flow is found,
/// 2 on usage or input-format errors.
#[derive(Parser)]
#[command(name = "zsflow", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a certified zero-sum 6-flow.
    Solve {
        graph: PathBuf,
        /// Write the flow here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a flow file against a graph.
    Verify {
        graph: PathBuf,
        flow: PathBuf,
        #[arg(short, default_value_t = 6)]
        k: i32,
    },
    /// Print a random connected 5-regular multigraph.
    Gen {
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Exhaustively search for a zero-sum k-flow.
    Oracle {
        graph: PathBuf,
        #[arg(short)]
        k: i32,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
}

/// Failure of the requested check, as opposed to bad input.
struct Negative(String);

fn read_graph(path: &Path) -> Result<Multigraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(command: Command) -> Result<std::result::Result<(), Negative>> {
    match command {
        Command::Solve { graph, output } => {
            let g = read_graph(&graph)?;
            let cert = match solve(&g) {
                Ok(c) => c,
                Err(e) => return Ok(Err(Negative(format!("solve failed: {e}")))),
            };
            let text = serialize_flow(&cert);
            match output {
                Some(path) => {
                    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
                }
                None => print!("{text}"),
            }
            eprintln!("branch {}", cert.branch);
            Ok(Ok(()))
        }
        Command::Verify { graph, flow, k } => {
            let g = read_graph(&graph)?;
            let text = fs::read_to_string(&flow).with_context(|| format!("reading {}", flow.display()))?;
            let f = parse_flow(&text, g.edge_count()).with_context(|| format!("parsing {}", flow.display()))?;
            match verify(&g, &f.labeling, k) {
                Ok(()) => {
                    println!("ok");
                    Ok(Ok(()))
                }
                Err(v) => Ok(Err(Negative(format!("violation: {v}")))),
            }
        }
        Command::Gen { n, seed } => {
            let g = gen_random_5regular(&GeneratorConfig::new(n, seed))?;
            print!("{}", serialize_graph(&g));
            Ok(Ok(()))
        }
        Command::Oracle { graph, k, budget } => {
            anyhow::ensure!(k >= 2, "k must be at least 2");
            let g = read_graph(&graph)?;
            let out = brute_force_flow(&g, k, budget);
            match out.result {
                OracleResult::Found(f) => {
                    println!("found after {} nodes", out.nodes_explored);
                    for x in f.values() {
                        println!("{x}");
                    }
                    Ok(Ok(()))
                }
                OracleResult::None if out.budget_exhausted => Ok(Err(Negative(format!(
                    "exhausted after {} nodes",
                    out.nodes_explored
                )))),
                OracleResult::None => Ok(Err(Negative(format!("none after {} nodes", out.nodes_explored)))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Negative(msg))) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
