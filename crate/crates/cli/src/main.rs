mod report;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use jahangir_core::detect::{self, Embedding};
use jahangir_core::enumerate::{self, RunOptions};
use jahangir_core::extract;
use jahangir_core::ramsey::{self, describe_graph};
use jahangir_core::{parse_graph6, Error, Graph, RamseyInstance, StandardGraph};
use serde_json::json;

use report::Report;

/// Ramsey numbers of paths versus Jahangir graphs.
#[derive(Parser)]
#[command(name = "jahangir", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a standard graph and print it as graph6.
    Gen {
        /// empty, path, cycle, complete, complete_bipartite, star, wheel,
        /// jahangir or union_of_completes.
        family: String,
        params: Vec<usize>,
    },
    /// Test a graph6 graph read from stdin for a pattern.
    Contains {
        #[command(subcommand)]
        pattern: Pattern,
    },
    /// Build and check the lower-bound witness of an instance.
    Witness { k: usize, n: usize, m: usize },
    /// Exhaustive check of a claimed value, or of one order with `--order`.
    Verify {
        k: usize,
        n: usize,
        m: usize,
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Proof-guided extraction on stdin, or over every class with `--exhaustive`.
    Extract {
        #[command(subcommand)]
        which: ExtractKind,
    },
    /// List (or count) isomorphism classes of an order.
    Enumerate {
        order: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Chvátal–Harary lower bound for two graph6 graphs.
    Bound { first: String, second: String },
    /// Seeded random check at a given order.
    Sample {
        k: usize,
        n: usize,
        m: usize,
        /// Defaults to the claimed value.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Defaults to the number of logical cores.
        #[arg(long)]
        workers: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Pattern {
    Path { n: usize },
    Kpaths { k: usize, n: usize },
    Jahangir { m: usize },
}

#[derive(Subcommand)]
enum ExtractKind {
    /// `J_{2m}` from a `P_n`-free graph of order `n + m - 1`.
    Thm1 {
        n: usize,
        m: usize,
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// `J_4` from an order-9 graph with no `2P_4`.
    Thm2 {
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// `k` disjoint `P_n` from a graph of order `kn + m - 1`.
    Kpaths { k: usize, n: usize, m: usize },
}

#[derive(Args)]
struct RunArgs {
    /// Defaults to the number of logical cores.
    #[arg(long)]
    shards: Option<usize>,
    /// Progress file; resumed if it exists.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Per shard, stop at the first branch boundary after this many classes.
    #[arg(long)]
    stop_after: Option<u64>,
}

impl RunArgs {
    fn shards(&self) -> usize {
        self.shards.unwrap_or_else(cores)
    }

    fn options(&self) -> RunOptions {
        RunOptions {
            checkpoint: self.checkpoint.clone(),
            stop_after: self.stop_after,
            save_every: 0,
        }
    }
}

fn cores() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Process outcome apart from errors.
enum Outcome {
    Success,
    Counterexample,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((report, outcome)) => {
            report.print();
            match outcome {
                Outcome::Success => ExitCode::SUCCESS,
                Outcome::Counterexample => ExitCode::from(1),
            }
        }
        Err(e) => {
            if let Error::Falsification(record) = &e {
                let mut r = Report::new("falsification");
                r.failures = 1;
                r.counterexamples.push(record.graph.clone());
                r.details = serde_json::to_value(record).expect("record serializes");
                r.print();
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Falsification(_) => 1,
        Error::CeilingExceeded { .. } => 3,
        _ => 2,
    }
}

fn outcome(failures: u64) -> Outcome {
    if failures == 0 {
        Outcome::Success
    } else {
        Outcome::Counterexample
    }
}

fn read_stdin_graph() -> jahangir_core::Result<Graph> {
    let mut text = String::new();
    std::io::stdin().read_to_string(&mut text)?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("");
    parse_graph6(line)
}

fn embedding_json(e: &Embedding) -> serde_json::Value {
    json!(e.map())
}

fn run(command: Command) -> jahangir_core::Result<(Report, Outcome)> {
    let start = Instant::now();
    let elapsed = |start: Instant| start.elapsed().as_millis() as u64;
    match command {
        Command::Gen { family, params } => {
            let g = StandardGraph::from_parts(&family, &params)?.build()?;
            let mut r = Report::new("gen").with_details(json!({
                "family": family,
                "params": params,
                "graph": describe_graph(&g),
                "edges": g.edge_count(),
            }));
            r.order = Some(g.order());
            Ok((r, Outcome::Success))
        }
        Command::Contains { pattern } => {
            let g = read_stdin_graph()?;
            let (name, found) = match pattern {
                Pattern::Path { n } => (
                    format!("P_{n}"),
                    detect::contains_path(&g, n)?.map(|e| json!(e.map())),
                ),
                Pattern::Kpaths { k, n } => (
                    format!("{k}P_{n}"),
                    detect::contains_disjoint_paths(&g, k, n)?
                        .map(|ps| json!(ps.iter().map(embedding_json).collect::<Vec<_>>())),
                ),
                Pattern::Jahangir { m } => (
                    format!("J_{}", 2 * m),
                    detect::contains_jahangir(&g, m)?
                        .map(|j| json!({ "hub": j.hub, "cycle": j.cycle })),
                ),
            };
            let mut r = Report::new("contains").with_details(json!({
                "pattern": name,
                "found": found.is_some(),
                "embedding": found,
            }));
            r.order = Some(g.order());
            r.elapsed_ms = elapsed(start);
            Ok((r, Outcome::Success))
        }
        Command::Witness { k, n, m } => {
            let inst = RamseyInstance::new(k, n, m)?;
            let report = ramsey::verify_lower(inst)?;
            let r = Report::from_verification("witness", &report);
            Ok((r, outcome(report.classes_failed)))
        }
        Command::Verify {
            k,
            n,
            m,
            order,
            run,
        } => {
            let inst = RamseyInstance::new(k, n, m)?;
            let opts = run.options();
            match order {
                Some(order) => {
                    let report = ramsey::verify_upper(inst, order, run.shards(), &opts)?;
                    Ok((
                        Report::from_verification("verify", &report),
                        outcome(report.classes_failed),
                    ))
                }
                None => {
                    let v = ramsey::verify_ramsey(inst, run.shards(), &opts)?;
                    let mut r = Report::from_verification("verify", &v.upper);
                    r.failures += v.lower.classes_failed;
                    r.counterexamples
                        .extend(v.lower.counterexamples.iter().cloned());
                    r.elapsed_ms = elapsed(start);
                    r.details = json!({
                        "claimed": v.claimed,
                        "confirmed": v.confirmed(),
                        "upper": v.upper,
                        "lower": v.lower,
                    });
                    let failures = r.failures;
                    Ok((r, outcome(failures)))
                }
            }
        }
        Command::Extract { which } => run_extract(which, start),
        Command::Enumerate { order, count_only } => {
            let mut graphs = Vec::new();
            let count = if count_only {
                enumerate::count_graphs(order)?
            } else {
                enumerate::enumerate_graphs(order, None, |g| {
                    graphs
                        .push(jahangir_core::emit_graph6(g).expect("enumerable orders fit graph6"));
                })?
            };
            let mut r = Report::new("enumerate").total("classes", count);
            r.order = Some(order);
            r.elapsed_ms = elapsed(start);
            if !count_only {
                r.details = json!({ "graphs": graphs });
            }
            Ok((r, Outcome::Success))
        }
        Command::Bound { first, second } => {
            let g = parse_graph6(&first)?;
            let h = parse_graph6(&second)?;
            let bound = ramsey::chvatal_harary_bound(&g, &h)?;
            let r = Report::new("bound").with_details(json!({
                "bound": bound,
                "chromatic_number": jahangir_core::chromatic_number(&g)?,
                "largest_component": h.largest_component_order(),
            }));
            Ok((r, Outcome::Success))
        }
        Command::Sample {
            k,
            n,
            m,
            order,
            trials,
            seed,
            workers,
        } => {
            let inst = RamseyInstance::new(k, n, m)?;
            let order = match order {
                Some(o) => o,
                None => jahangir_core::claimed_value(inst)
                    .value()
                    .ok_or(Error::OutOfProvenRange { k, n, m })?,
            };
            let report =
                ramsey::sample_check(inst, order, trials, seed, workers.unwrap_or_else(cores))?;
            Ok((
                Report::from_verification("sample", &report),
                outcome(report.classes_failed),
            ))
        }
    }
}

fn run_extract(which: ExtractKind, start: Instant) -> jahangir_core::Result<(Report, Outcome)> {
    let single =
        |label: &str, g: &Graph, found: (jahangir_core::JahangirEmbedding, extract::CaseTrace)| {
            let (j, trace) = found;
            let mut r = Report::new(label).with_details(json!({
                "hub": j.hub,
                "cycle": j.cycle,
                "trace": trace,
            }));
            r.order = Some(g.order());
            r.subcase_tallies
                .insert(trace.subcase.label().to_owned(), 1);
            r.elapsed_ms = start.elapsed().as_millis() as u64;
            (r, Outcome::Success)
        };
    match which {
        ExtractKind::Thm1 {
            n,
            m,
            exhaustive,
            run,
        } => {
            if exhaustive {
                let opts = run.options();
                let sweep = extract::sweep_theorem1(n, m, run.shards(), &opts)?;
                let r = Report::from_sweep(
                    "extract thm1",
                    &sweep,
                    &opts,
                    start.elapsed().as_millis() as u64,
                );
                return Ok((r, outcome(sweep.falsifications.len() as u64)));
            }
            let g = read_stdin_graph()?;
            let found = extract::extract_jahangir_theorem1(&g, n, m)?;
            Ok(single("extract thm1", &g, found))
        }
        ExtractKind::Thm2 { exhaustive, run } => {
            if exhaustive {
                let opts = run.options();
                let sweep = extract::sweep_theorem2_base(run.shards(), &opts)?;
                let r = Report::from_sweep(
                    "extract thm2",
                    &sweep,
                    &opts,
                    start.elapsed().as_millis() as u64,
                );
                return Ok((r, outcome(sweep.falsifications.len() as u64)));
            }
            let g = read_stdin_graph()?;
            let found = extract::extract_j4_theorem2_base(&g)?;
            Ok(single("extract thm2", &g, found))
        }
        ExtractKind::Kpaths { k, n, m } => {
            let inst = RamseyInstance::new(k, n, m)?;
            let g = read_stdin_graph()?;
            let paths = extract::extract_k_paths(&g, inst)?;
            let mut r = Report::new("extract kpaths").with_details(
                json!({ "paths": paths.iter().map(embedding_json).collect::<Vec<_>>() }),
            );
            r.instance = Some(inst);
            r.order = Some(g.order());
            r.elapsed_ms = start.elapsed().as_millis() as u64;
            Ok((r, Outcome::Success))
        }
    }
}
