//! Command-line interface: one subcommand per assembly space plus the
//! information and bias-model tools. Index results print as JSON documents,
//! table-like outputs as CSV. Exit codes: 0 success, 2 domain error,
//! 3 budget exhaustion or bounds-only result (document still emitted),
//! 64 usage error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use assemblage::bias::{sweep, sweep_csv, BiasConfig};
use assemblage::bounds::{lower_bound_by_map, naive_upper_bound};
use assemblage::chains::{
    census, min_chain_length, min_vector_chain, IntegerSpace, VectorChainConfig, VectorSpace,
    DEFAULT_TABLE_LIMIT, DEFAULT_VECTOR_EXACT_SUM_LIMIT,
};
use assemblage::error::Error;
use assemblage::graph::{graph_assembly_index, parse_graph, GRAPH_EXACT_VERTEX_CAP};
use assemblage::grid::{grid_assembly_index, grid_lower_bounds, parse_grid};
use assemblage::info::{info_csv, information_table, parse_composition, InfoConfig};
use assemblage::report::{verify_document, ResultDocument};
use assemblage::search::{IndexResult, SearchBudget};
use assemblage::space::AssemblySpace;
use assemblage::split_branched::split_branched_index;
use assemblage::strings::{string_assembly_index, StringSpace};
use assemblage::Pathway;

const EXIT_OK: u8 = 0;
const EXIT_DOMAIN: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "assemblage",
    version,
    about = "Assembly indices of strings, integers, vectors, pixel grids and graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct BudgetArgs {
    /// Node-expansion cap for the search.
    #[arg(long, default_value_t = 10_000_000)]
    max_nodes: u64,
    /// Wall-clock cap in seconds; 0 disables the time cap.
    #[arg(long, default_value_t = 60.0)]
    max_seconds: f64,
    /// Worker threads for subtree fan-out (falls back to ASSEMBLAGE_THREADS,
    /// then 1).
    #[arg(long)]
    threads: Option<usize>,
}

impl BudgetArgs {
    fn to_budget(&self) -> SearchBudget {
        let threads = self
            .threads
            .or_else(|| {
                std::env::var("ASSEMBLAGE_THREADS")
                    .ok()
                    .and_then(|v| v.parse().ok())
            })
            .unwrap_or(1)
            .max(1);
        SearchBudget {
            max_nodes: self.max_nodes,
            max_time: (self.max_seconds > 0.0)
                .then(|| Duration::from_secs_f64(self.max_seconds)),
            threads,
        }
    }
}

#[derive(Args, Debug, Clone)]
struct ModeArgs {
    /// Only compute the split-branched upper bound and its pathway.
    #[arg(long, conflicts_with = "bounds_only")]
    split_branched_only: bool,
    /// Only compute certified bounds; skip the exact search.
    #[arg(long)]
    bounds_only: bool,
}

#[derive(Args, Debug, Clone)]
struct OutArg {
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Assembly index of a text string (basis: its distinct characters).
    String {
        /// The text itself, or a file path with --file.
        input: String,
        /// Treat the input as a path and read the text from it.
        #[arg(long)]
        file: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Minimal addition chain of an integer.
    Chain {
        n: Option<u64>,
        /// Print the n,chain_length CSV table up to this limit instead.
        #[arg(long, conflicts_with = "counts")]
        table: Option<Option<u64>>,
        /// Print the length,count CSV census up to this limit instead.
        #[arg(long)]
        counts: Option<Option<u64>>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Minimal vectorial addition chain of a comma-separated vector.
    Vchain {
        /// Target vector, e.g. 8,8,10.
        vector: String,
        /// Component-sum threshold for exact search.
        #[arg(long, default_value_t = DEFAULT_VECTOR_EXACT_SUM_LIMIT)]
        exact_limit: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Assembly index of a 2D pixel assemblage read from a grid file.
    Grid {
        file: PathBuf,
        /// Treat quarter-turn rotations as the same object.
        #[arg(long)]
        rotations: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Assembly index of a connected graph read from an edge-list file.
    Graph {
        file: PathBuf,
        /// Vertex cap for the exact search; larger graphs get bounds only.
        #[arg(long, default_value_t = GRAPH_EXACT_VERTEX_CAP)]
        vertex_cap: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        mode: ModeArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Pathway information over all strings of a composition.
    Info {
        /// Composition spec, e.g. 6A6B.
        #[arg(long)]
        composition: String,
        /// Report only this index value; omit for the whole table.
        #[arg(long)]
        pa: Option<u64>,
        /// Enumeration cap on the number of basic parts.
        #[arg(long, default_value_t = 12)]
        max_parts: u64,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Most-likely-pathway probability under the biased decision-tree model.
    Biassim {
        /// Bias levels, comma-separated, e.g. 0,1,2,3,4,5.
        #[arg(long = "h", value_name = "H")]
        h_values: String,
        #[arg(long, default_value_t = 25)]
        depth: u32,
        #[arg(long, default_value_t = 200)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Chain-census size feeding the branching factors.
        #[arg(long, default_value_t = 4096)]
        census_limit: u64,
        /// Cap on the per-level branching factor.
        #[arg(long, default_value_t = 3)]
        max_branching: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Re-check the witness pathway inside a result document.
    Verify { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok((output, code)) => {
            print!("{output}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExceeded(_) | Error::TooLarge(_) => EXIT_BUDGET,
                _ => EXIT_DOMAIN,
            };
            ExitCode::from(code)
        }
    }
}

type Outcome = Result<(String, u8), Error>;

fn emit(out: &OutArg, payload: String, code: u8) -> Outcome {
    match &out.out {
        Some(path) => {
            std::fs::write(path, &payload)
                .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
            Ok((String::new(), code))
        }
        None => Ok((payload, code)),
    }
}

/// Document + exit code for a finished index computation.
fn doc_outcome<S: AssemblySpace>(
    space: &S,
    target: &S::Object,
    result: &IndexResult<S::Object>,
    intentional_partial: bool,
) -> (String, u8) {
    let doc = ResultDocument::from_result(space, target, result);
    let code = if result.exact || intentional_partial {
        EXIT_OK
    } else {
        EXIT_BUDGET
    };
    (doc.to_json(), code)
}

/// Apply --split-branched-only / --bounds-only, or run the given exact
/// search.
fn run_with_mode<S, F>(
    space: &S,
    target: &S::Object,
    budget: &SearchBudget,
    mode: &ModeArgs,
    lower_bound: u64,
    exact: F,
) -> Result<(String, u8), Error>
where
    S: AssemblySpace + Sync,
    S::Object: Send + Sync,
    F: FnOnce() -> Result<IndexResult<S::Object>, Error>,
{
    let start = Instant::now();
    if mode.split_branched_only {
        let (len, pathway) = split_branched_index(space, target, budget)?;
        let result = IndexResult {
            lower: 0,
            upper: len,
            exact: len == 0,
            witness: Some(pathway),
            nodes_expanded: 0,
            elapsed: start.elapsed(),
        };
        return Ok(doc_outcome(space, target, &result, true));
    }
    if mode.bounds_only {
        let (sb, pathway) = split_branched_index(space, target, budget)?;
        let naive = naive_upper_bound(space, target)?;
        let upper = sb.min(naive);
        let result = IndexResult {
            lower: lower_bound.min(upper),
            upper,
            exact: lower_bound >= upper,
            witness: Some(pathway),
            nodes_expanded: 0,
            elapsed: start.elapsed(),
        };
        return Ok(doc_outcome(space, target, &result, true));
    }
    let result = exact()?;
    Ok(doc_outcome(space, target, &result, false))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::String { input, file, budget, mode, out } => {
            let text = if file {
                let raw = std::fs::read_to_string(&input)
                    .map_err(|e| Error::Domain(format!("cannot read {input}: {e}")))?;
                strip_trailing_newline(raw)
            } else {
                input
            };
            let budget = budget.to_budget();
            let space = StringSpace::for_text(&text)?;
            let target = text.clone();
            let lb = lower_bound_by_map(&space, &target)?;
            let (payload, code) = run_with_mode(&space, &target, &budget, &mode, lb, || {
                string_assembly_index(&text, &budget).map(|(_, r)| r)
            })?;
            emit(&out, payload, code)
        }
        Command::Chain { n, table, counts, out } => {
            if let Some(limit) = table {
                let t = census(limit.unwrap_or(DEFAULT_TABLE_LIMIT))?;
                return emit(&out, t.table_csv(), EXIT_OK);
            }
            if let Some(limit) = counts {
                let t = census(limit.unwrap_or(DEFAULT_TABLE_LIMIT))?;
                return emit(&out, t.counts_csv(), EXIT_OK);
            }
            let n = n.ok_or_else(|| Error::Domain("an integer argument is required".into()))?;
            let start = Instant::now();
            let (len, witness) = min_chain_length(n)?;
            let space = IntegerSpace;
            let steps = witness
                .step_operands()
                .into_iter()
                .map(|(l, r, t)| assemblage::JoinStep::new(l, r, t))
                .collect();
            let result = IndexResult {
                lower: len,
                upper: len,
                exact: true,
                witness: Some(Pathway::new(steps, n)),
                nodes_expanded: 0,
                elapsed: start.elapsed(),
            };
            let (payload, code) = doc_outcome(&space, &n, &result, false);
            emit(&out, payload, code)
        }
        Command::Vchain { vector, exact_limit, out } => {
            let space_probe = VectorSpace::new(1);
            let v = space_probe.parse(&vector)?;
            let space = VectorSpace::new(v.len());
            let start = Instant::now();
            let cfg = VectorChainConfig {
                exact_sum_limit: exact_limit,
                ..VectorChainConfig::default()
            };
            let res = min_vector_chain(&v, &cfg)?;
            let witness = res.witness.as_ref().map(|w| {
                let steps = w
                    .step_operands()
                    .into_iter()
                    .map(|(l, r, t)| assemblage::JoinStep::new(l, r, t))
                    .collect();
                Pathway::new(steps, v.clone())
            });
            let result = IndexResult {
                lower: res.lower,
                upper: res.upper,
                exact: res.exact,
                witness,
                nodes_expanded: 0,
                elapsed: start.elapsed(),
            };
            let (payload, code) = doc_outcome(&space, &v, &result, false);
            emit(&out, payload, code)
        }
        Command::Grid { file, rotations, budget, mode, out } => {
            let raw = std::fs::read_to_string(&file)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", file.display())))?;
            let target = parse_grid(&raw)?;
            let budget = budget.to_budget();
            let space = assemblage::grid::GridSpace::for_assemblage(&target, rotations);
            let lb = grid_lower_bounds(&target, rotations)?;
            let (payload, code) = run_with_mode(&space, &target, &budget, &mode, lb, || {
                grid_assembly_index(&target, rotations, &budget).map(|(_, r)| r)
            })?;
            emit(&out, payload, code)
        }
        Command::Graph { file, vertex_cap, budget, mode, out } => {
            let raw = std::fs::read_to_string(&file)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", file.display())))?;
            let target = parse_graph(&raw)?;
            let budget = budget.to_budget();
            let space = assemblage::graph::GraphSpace::for_graph(
                &target,
                assemblage::graph::GraphVariant::default(),
            )?;
            let lb = lower_bound_by_map(&space, &target)?;
            let (payload, code) = run_with_mode(&space, &target, &budget, &mode, lb, || {
                graph_assembly_index(&target, &budget, vertex_cap).map(|(_, r)| r)
            })?;
            emit(&out, payload, code)
        }
        Command::Info { composition, pa, max_parts, budget, out } => {
            let comp = parse_composition(&composition)?;
            let alphabet: String = comp.iter().map(|(s, _)| s.clone()).collect();
            let space = StringSpace::with_alphabet(alphabet.chars());
            let config = InfoConfig { max_parts, budget: budget.to_budget() };
            let rows = information_table(&space, &comp, &config)?;
            let rows = match pa {
                Some(pa) => {
                    let row = rows
                        .into_iter()
                        .find(|r| r.pa == pa)
                        .ok_or(Error::NoSuchIndex(pa))?;
                    vec![row]
                }
                None => rows,
            };
            emit(&out, info_csv(&rows), EXIT_OK)
        }
        Command::Biassim {
            h_values,
            depth,
            trials,
            seed,
            census_limit,
            max_branching,
            out,
        } => {
            let hs: Vec<f64> = h_values
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad bias level: {p:?}")))
                })
                .collect::<Result<_, _>>()?;
            let cfg = BiasConfig { census_limit, max_branching };
            let rows = sweep(&hs, depth, trials, seed, &cfg)?;
            emit(&out, sweep_csv(&rows), EXIT_OK)
        }
        Command::Verify { file } => {
            let raw = std::fs::read_to_string(&file)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", file.display())))?;
            let doc = ResultDocument::from_json(&raw)?;
            match verify_document(&doc) {
                Ok(()) => Ok(("valid\n".to_string(), EXIT_OK)),
                Err(reason) => Ok((format!("invalid: {reason}\n"), EXIT_DOMAIN)),
            }
        }
    }
}

fn strip_trailing_newline(mut s: String) -> String {
    if s.ends_with('\n') {
        s.pop();
        if s.ends_with('\r') {
            s.pop();
        }
    }
    s
}
