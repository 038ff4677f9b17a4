//! `stringlift` command-line driver.
//!
//! Exit codes: 0 on success, 1 when a verified property fails, 2 on bad input
//! (unreadable or invalid network, unreachable target, non-uniform lift).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use stringlift::bfs_ref::{dijkstra, enumerating_bfs, marked_bfs, naive_set_bfs};
use stringlift::formulas::check_correspondence;
use stringlift::harness::trace::{self, TraceRecord};
use stringlift::harness::{generate, read_network, verify_batch, write_network, BatchFile, GeneratorKind, GeneratorSpec};
use stringlift::lift_continuous::{liftoff_schedule, pull_apart};
use stringlift::lift_discrete::run_lift;
use stringlift::rational::{self, Rational};
use stringlift::{CostParams, NodeId, StringNetwork};

fn parse_rational(text: &str) -> Result<Rational, String> {
    rational::parse(text).map_err(|e| e.to_string())
}

#[derive(Parser)]
#[command(name = "stringlift", version, about = "Shortest paths by lifting a string network")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Path,
    Cycle,
    Star,
    Complete,
    Grid,
    ErdosRenyi,
    Geometric,
}

impl From<Kind> for GeneratorKind {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Path => GeneratorKind::Path,
            Kind::Cycle => GeneratorKind::Cycle,
            Kind::Star => GeneratorKind::Star,
            Kind::Complete => GeneratorKind::Complete,
            Kind::Grid => GeneratorKind::Grid,
            Kind::ErdosRenyi => GeneratorKind::ErdosRenyi,
            Kind::Geometric => GeneratorKind::Geometric,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    NaiveSet,
    Enumerating,
    Marked,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated network file.
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Node count (leaves for `star`, side length for `grid`).
        #[arg(long)]
        size: usize,
        #[arg(long, env = "STRINGLIFT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Edge probability for `erdos-renyi`.
        #[arg(long)]
        p: Option<f64>,
        /// Connection radius for `geometric`, as a fraction of the unit square.
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        length: Rational,
        /// Random string lengths instead of a uniform length.
        #[arg(long)]
        weighted: bool,
        /// Retry random kinds until every node is reachable.
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        source: Option<u32>,
        #[arg(long)]
        target: Option<u32>,
    },
    /// Step-wise lift of a uniform network with work accounting.
    Lift {
        #[arg(long)]
        net: PathBuf,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        w: Rational,
        /// Lift step; defaults to the network's uniform string length.
        #[arg(long, value_parser = parse_rational)]
        d: Option<Rational>,
        /// Write the trace here instead of stdout.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Breadth-first search with time accounting.
    Bfs {
        #[arg(long)]
        net: PathBuf,
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        t: Rational,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Exact Dijkstra from the source.
    Dijkstra {
        #[arg(long)]
        net: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Pull source and target apart; report taut strings and separation.
    PullApart {
        #[arg(long)]
        net: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Continuous lift-off heights for arbitrary string lengths.
    Liftoff {
        #[arg(long)]
        net: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Check simulated counters against the closed-form sums.
    Verify {
        /// Batch file of generator specs.
        #[arg(long, conflicts_with = "net", required_unless_present = "net")]
        batch: Option<PathBuf>,
        /// Single network: print formula vs counter table.
        #[arg(long)]
        net: Option<PathBuf>,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        w: Rational,
        #[arg(long, value_parser = parse_rational)]
        d: Option<Rational>,
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        t: Rational,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// With `--net`, also write the report as a trace record.
        #[arg(long, requires = "net")]
        trace: Option<PathBuf>,
    },
}

enum Failure {
    Property(String),
    Input(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(err: E) -> Self {
        Failure::Input(err.into())
    }
}

fn load(path: &Path) -> anyhow::Result<StringNetwork> {
    let net = read_network(path).with_context(|| format!("reading {}", path.display()))?;
    net.ensure_valid().with_context(|| format!("validating {}", path.display()))?;
    Ok(net)
}

fn emit(records: &[TraceRecord], dest: Option<&Path>) -> anyhow::Result<()> {
    match dest {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            trace::write_records(BufWriter::new(file), records)?;
        }
        None => trace::write_records(io::stdout().lock(), records)?,
    }
    Ok(())
}

fn lift_step_for(net: &StringNetwork, d: Option<Rational>) -> Rational {
    d.or_else(|| net.uniform_length()).unwrap_or_else(rational::one)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate {
            kind,
            size,
            seed,
            out,
            p,
            radius,
            length,
            weighted,
            connected,
            source,
            target,
        } => {
            let spec = GeneratorSpec {
                kind: kind.into(),
                size,
                edge_probability: p,
                radius,
                uniform_length: length,
                weighted,
                seed,
                source: source.map(NodeId),
                target: target.map(NodeId),
                connected,
                inject_fault: false,
            };
            let net = generate(&spec)?;
            write_network(&net, &out)?;
        }
        Command::Lift { net, w, d, trace } => {
            let net = load(&net)?;
            let d = lift_step_for(&net, d);
            let params = CostParams::new(w, d, rational::one())?;
            let result = run_lift(&net, &params)?;
            emit(&trace::lift_records(&result), trace.as_deref())?;
        }
        Command::Bfs { net, variant, t, trace } => {
            let net = load(&net)?;
            let params = CostParams::new(rational::one(), rational::one(), t)?;
            let records = match variant {
                Variant::NaiveSet => trace::bfs_records(&naive_set_bfs(&net, &params)?, None),
                Variant::Enumerating => trace::bfs_records(&enumerating_bfs(&net, &params)?, None),
                Variant::Marked => {
                    let run = marked_bfs(&net)?;
                    trace::bfs_records(&run.run, Some(&run.path))
                }
            };
            emit(&records, trace.as_deref())?;
        }
        Command::Dijkstra { net, trace } => {
            let net = load(&net)?;
            emit(&trace::dijkstra_records(&dijkstra(&net)?), trace.as_deref())?;
        }
        Command::PullApart { net, trace } => {
            let net = load(&net)?;
            emit(&trace::pull_apart_records(&pull_apart(&net)?), trace.as_deref())?;
        }
        Command::Liftoff { net, trace } => {
            let net = load(&net)?;
            emit(&trace::liftoff_records(&liftoff_schedule(&net)), trace.as_deref())?;
        }
        Command::Verify {
            batch,
            net,
            w,
            d,
            t,
            workers,
            trace,
        } => {
            if let Some(path) = net {
                let net = load(&path)?;
                let d = lift_step_for(&net, d);
                let params = CostParams::new(w, d, t)?;
                let report = check_correspondence(&net, &params)?;
                if let Some(path) = &trace {
                    emit(&[TraceRecord::Complexity(Box::new(report.clone()))], Some(path))?;
                }
                let mut out = io::stdout().lock();
                writeln!(out, "{:<32} {:>16} {:>16}", "quantity", "formula", "simulated")?;
                for (label, formula, counter) in report.rows() {
                    let mark = if formula == counter { "" } else { "  MISMATCH" };
                    writeln!(out, "{label:<32} {formula:>16} {counter:>16}{mark}")?;
                }
                writeln!(out, "{:<32} {:>16}", "ratio eq1/eq2", report.ratio_node.to_string())?;
                writeln!(out, "{:<32} {:>16}", "ratio eq4/eq3", report.ratio_string.to_string())?;
                writeln!(out, "{:<32} {:>16}", "correspondence", report.correspondence_ok)?;
                if !report.correspondence_ok {
                    return Err(Failure::Property("correspondence".into()));
                }
            } else {
                let path = batch.ok_or_else(|| anyhow!("--batch or --net is required"))?;
                let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                let file: BatchFile =
                    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
                let params = CostParams::new(w, rational::one(), t)?;
                let report = verify_batch(&file.expand(), &params, workers);
                let mut out = io::stdout().lock();
                serde_json::to_writer_pretty(&mut out, &report)?;
                writeln!(out)?;
                if let Some(first) = report.failures.first() {
                    return Err(Failure::Property(format!(
                        "{} of {} networks failed, first: #{} ({})",
                        report.failures.len(),
                        report.total,
                        first.index,
                        first.property
                    )));
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Property(msg)) => {
            eprintln!("property failure: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
