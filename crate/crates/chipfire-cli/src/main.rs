//! `chipfire`: chip-firing, divisor ranks, and Weierstrass sets on
//! multigraphs. JSON in, JSON out; exit 0 on success, 1 when a verify
//! battery finds failures, 2 on bad input.

mod io;
mod verify;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use chipfire::{
    buchweitz_violation, functional_weierstrass_set, functional_weierstrass_set_blocks,
    lambda_sequence, lambda_sequence_blocks, monoid_realization, rank, rank_weierstrass_set,
    reduce, semigroup_realization, staircase_realization, Divisor, Multigraph, NumericalMonoid,
    VertexId,
};
use clap::{Parser, Subcommand};
use serde::Serialize;

use io::{divisor_json, emit, function_json, load_graph, parse_divisor, GraphJson, SetReportJson};

#[derive(Parser)]
#[command(name = "chipfire", version, about = "Chip-firing and Weierstrass sets on multigraphs")]
struct Cli {
    /// Output format (json is the only one)
    #[arg(long, global = true, default_value = "json")]
    format: String,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Baker-Norine rank of a divisor
    Rank {
        #[arg(short = 'g', long = "graph", value_name = "FILE")]
        graph: PathBuf,
        #[arg(short = 'D', long = "divisor", value_name = "JSON|FILE")]
        divisor: String,
    },
    /// P-reduced form of a divisor, with the firing witness
    Reduce {
        #[arg(short = 'g', long = "graph", value_name = "FILE")]
        graph: PathBuf,
        #[arg(short = 'P', long = "vertex", value_name = "ID")]
        p: VertexId,
        #[arg(short = 'D', long = "divisor", value_name = "JSON|FILE")]
        divisor: String,
    },
    /// Rank jump set at a vertex: gap list and conductor
    Hr {
        #[arg(short = 'g', long = "graph", value_name = "FILE")]
        graph: PathBuf,
        #[arg(short = 'P', long = "vertex", value_name = "ID")]
        p: VertexId,
    },
    /// Pole-order set at a vertex, reported on a window
    Hf {
        #[arg(short = 'g', long = "graph", value_name = "FILE")]
        graph: PathBuf,
        #[arg(short = 'P', long = "vertex", value_name = "ID")]
        p: VertexId,
        /// Window bound (defaults to the certified bound on simple graphs)
        #[arg(long)]
        bound: Option<u64>,
        /// Compute per block of a cut vertex and recombine
        #[arg(long)]
        blocks: bool,
    },
    /// Minimal pole order for each rank 0..=kmax
    Lambda {
        #[arg(short = 'g', long = "graph", value_name = "FILE")]
        graph: PathBuf,
        #[arg(short = 'P', long = "vertex", value_name = "ID")]
        p: VertexId,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        /// Compute per block of a cut vertex and recombine
        #[arg(long)]
        blocks: bool,
    },
    /// Emit a named graph family as JSON
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Numerical monoid report from generators
    Semigroup {
        #[arg(required = true)]
        generators: Vec<u64>,
        /// Test the Buchweitz inequality at this sumset factor (repeatable)
        #[arg(long = "buchweitz", value_name = "M")]
        buchweitz: Vec<u64>,
    },
    /// Run a named verification battery over seeded random instances
    Verify {
        theorem: verify::Theorem,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-vertices", default_value_t = 7, value_parser = clap::value_parser!(u64).range(2..))]
        max_vertices: u64,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Complete graph K_k
    Complete { k: usize },
    /// Complete bipartite K_{m,n}, pointed at a degree-n vertex
    Bipartite { m: usize, n: usize },
    /// Two vertices joined by n parallel edges
    Banana { n: u64 },
    /// Glued K_{2,e} chain realizing a staircase set, pointed
    Staircase {
        #[arg(required = true)]
        entries: Vec<u64>,
    },
    /// Star multigraph whose pole-order set is the generated monoid
    Monoid {
        #[arg(required = true)]
        generators: Vec<u64>,
    },
    /// Simple graph whose pole-order set is the generated semigroup
    Semigroup {
        #[arg(required = true)]
        generators: Vec<u64>,
    },
}

#[derive(Serialize)]
struct RankOut {
    rank: i64,
}

#[derive(Serialize)]
struct ReduceOut {
    divisor: io::DivisorJson,
    function: io::FunctionJson,
}

#[derive(Serialize)]
struct HrOut {
    gaps: Vec<u64>,
    conductor: u64,
}

#[derive(Serialize)]
struct LambdaOut {
    values: Vec<u64>,
}

#[derive(Serialize)]
struct SemigroupOut {
    gaps: Vec<u64>,
    gaps_complete: bool,
    frobenius: Option<u64>,
    multiplicity: Option<u64>,
    genus: Option<u64>,
    buchweitz: BTreeMap<String, bool>,
}

fn load_pointed(path: &PathBuf, p: VertexId) -> Result<(Multigraph, VertexId), String> {
    let g = load_graph(path)?;
    if p >= g.vertex_count() {
        return Err(format!("vertex {p} out of range (graph has {})", g.vertex_count()));
    }
    Ok((g, p))
}

fn sized_divisor(arg: &str, g: &Multigraph) -> Result<Divisor, String> {
    let d = parse_divisor(arg)?;
    if d.len() != g.vertex_count() {
        return Err(format!(
            "divisor has {} coefficients, graph has {} vertices",
            d.len(),
            g.vertex_count()
        ));
    }
    Ok(d)
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    if cli.format != "json" {
        return Err(format!("unsupported format {:?}", cli.format));
    }
    match cli.command {
        Cmd::Rank { graph, divisor } => {
            let g = load_graph(&graph)?;
            let d = sized_divisor(&divisor, &g)?;
            emit(&RankOut { rank: rank(&g, &d) });
        }
        Cmd::Reduce { graph, p, divisor } => {
            let (g, p) = load_pointed(&graph, p)?;
            let d = sized_divisor(&divisor, &g)?;
            let (r, f) = reduce(&g, p, &d);
            emit(&ReduceOut { divisor: divisor_json(&r), function: function_json(&f) });
        }
        Cmd::Hr { graph, p } => {
            let (g, p) = load_pointed(&graph, p)?;
            let set = rank_weierstrass_set(&g, p).map_err(|e| e.to_string())?;
            emit(&HrOut { gaps: set.gaps().to_vec(), conductor: set.conductor() });
        }
        Cmd::Hf { graph, p, bound, blocks } => {
            let (g, p) = load_pointed(&graph, p)?;
            let report = if blocks {
                functional_weierstrass_set_blocks(&g, p, bound)
            } else {
                functional_weierstrass_set(&g, p, bound)
            }
            .map_err(|e| e.to_string())?;
            emit(&SetReportJson::from_report(&report));
        }
        Cmd::Lambda { graph, p, kmax, blocks } => {
            let (g, p) = load_pointed(&graph, p)?;
            let seq = if blocks {
                lambda_sequence_blocks(&g, p, kmax)
            } else {
                lambda_sequence(&g, p, kmax)
            }
            .map_err(|e| e.to_string())?;
            emit(&LambdaOut { values: seq.values().to_vec() });
        }
        Cmd::Construct { family } => {
            let (g, p) = match family {
                Family::Complete { k } => {
                    if k == 0 {
                        return Err("k must be at least 1".into());
                    }
                    (Multigraph::complete(k), None)
                }
                Family::Bipartite { m, n } => {
                    if m == 0 || n == 0 {
                        return Err("both parts must be nonempty".into());
                    }
                    let (g, p) = Multigraph::complete_bipartite(m, n);
                    (g, Some(p))
                }
                Family::Banana { n } => {
                    if n == 0 {
                        return Err("n must be at least 1".into());
                    }
                    (Multigraph::banana(n), None)
                }
                Family::Staircase { entries } => {
                    let (g, p) = staircase_realization(&entries).map_err(|e| e.to_string())?;
                    (g, Some(p))
                }
                Family::Monoid { generators } => {
                    let (g, p) = monoid_realization(&generators).map_err(|e| e.to_string())?;
                    (g, Some(p))
                }
                Family::Semigroup { generators } => {
                    let (g, p) = semigroup_realization(&generators).map_err(|e| e.to_string())?;
                    (g, Some(p))
                }
            };
            emit(&GraphJson::from_graph(&g, p));
        }
        Cmd::Semigroup { generators, buchweitz } => {
            if generators.contains(&0) {
                return Err("generators must be positive".into());
            }
            let monoid = NumericalMonoid::new(&generators);
            let report = monoid.report();
            let mut checks = BTreeMap::new();
            for m in buchweitz {
                if m < 2 {
                    return Err("sumset factor must be at least 2".into());
                }
                let violated = buchweitz_violation(&monoid, m).map_err(|e| e.to_string())?;
                checks.insert(m.to_string(), violated);
            }
            emit(&SemigroupOut {
                gaps: report.gaps,
                gaps_complete: report.gaps_complete,
                frobenius: report.frobenius,
                multiplicity: report.multiplicity,
                genus: report.genus,
                buchweitz: checks,
            });
        }
        Cmd::Verify { theorem, trials, seed, max_vertices } => {
            let start = Instant::now();
            let report = verify::run(theorem, trials, seed, max_vertices as usize);
            emit(&report);
            eprintln!("elapsed: {:.2?}", start.elapsed());
            if !report.failures.is_empty() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
