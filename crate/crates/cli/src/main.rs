mod output;

use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use lexdim_core::formula::decompose_using;
use lexdim_core::verify::{
    parse_pool, verify_instance_with, BaseSource, Sampling, SweepConfig, VerifyOptions,
};
use lexdim_core::{from_graph6, parse_family_file, product, sweep, Family, Graph, SolverConfig};

use output::{InvariantsReport, ProductReport};

const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "lexdim",
    version,
    about = "Local metric and local adjacency dimensions of graphs and lexicographic products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct SearchCap {
    /// Largest graph order the exhaustive searches accept.
    #[arg(long, default_value_t = SolverConfig::default().max_order)]
    max_order: usize,
}

impl SearchCap {
    fn solver(self) -> SolverConfig {
        SolverConfig {
            max_order: self.max_order,
            ..SolverConfig::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, radius, girth, twin classes and family membership of a graph.
    Invariants {
        /// Named token (P4, C7, K5, N3, K2,3), g6:<graph6>, or @file.
        graph: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cap: SearchCap,
    },
    /// Family membership with the certificate for the neighbourhood test.
    Classify {
        graph: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cap: SearchCap,
    },
    /// Build the lexicographic product described by a family file.
    Product {
        family: PathBuf,
        /// Print only the product in graph6.
        #[arg(long)]
        emit_g6: bool,
    },
    /// Twin classes, separation sets and formula terms of a family.
    Decompose {
        family: PathBuf,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cap: SearchCap,
    },
    /// Compare the closed forms with exhaustive search on the product.
    /// Exits 0 on pass, 1 on failure, 2 when the instance is too large.
    Verify {
        family: PathBuf,
        #[arg(long)]
        json: bool,
        /// Toggle product edge U-V before searching (harness self-test).
        #[arg(long, value_name = "U-V", value_parser = parse_edge, hide = true)]
        flip_edge: Option<(usize, usize)>,
        #[command(flatten)]
        cap: SearchCap,
    },
    /// Verify many families: every base up to an order, members from a pool.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Largest base order. Without --bases, all connected labeled graphs of
    /// order 2..=N are used (N at most 5).
    #[arg(long)]
    max_base_order: Option<usize>,
    /// File of graph6 lines to use as bases instead of the enumeration.
    #[arg(long)]
    bases: Option<PathBuf>,
    /// Member pool: one graph spec per line.
    #[arg(long)]
    pool: PathBuf,
    /// Draw this many random instances per base order above
    /// --exhaustive-up-to instead of sweeping all member tuples.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 1, requires = "samples")]
    seed: u64,
    /// Base orders swept exhaustively when sampling.
    #[arg(long, default_value_t = 2, requires = "samples")]
    exhaustive_up_to: usize,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    cap: SearchCap,
}

fn parse_edge(s: &str) -> std::result::Result<(usize, usize), String> {
    let (u, v) = s
        .split_once('-')
        .ok_or_else(|| format!("expected U-V, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((parse(u)?, parse(v)?))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// A spec token, or `@file` holding either a spec token or a bare graph6 line.
fn load_graph(arg: &str) -> Result<(String, Graph)> {
    let Some(path) = arg.strip_prefix('@') else {
        return Ok((arg.to_string(), lexdim_core::parse_graph(arg)?));
    };
    let text = read(Path::new(path))?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .with_context(|| format!("{path} holds no graph"))?;
    match lexdim_core::parse_graph(line) {
        Ok(g) => Ok((line.to_string(), g)),
        Err(spec_err) => match from_graph6(line) {
            Ok(g) => Ok((format!("g6:{line}"), g)),
            Err(_) => Err(spec_err.into()),
        },
    }
}

fn load_family(path: &Path) -> Result<Family> {
    parse_family_file(&read(path)?).with_context(|| format!("in family file {}", path.display()))
}

fn load_bases(path: &Path, max_order: Option<usize>) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, line) in read(path)?.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = from_graph6(line)
            .with_context(|| format!("{}:{}", path.display(), idx + 1))?;
        if max_order.is_none_or(|n| g.order() <= n) {
            out.push(g);
        }
    }
    Ok(out)
}

/// Writes to stdout; a closed pipe downstream is not an error.
fn emit(text: &str) -> Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Invariants { graph, json, cap } => {
            let (spec, g) = load_graph(&graph)?;
            let report = InvariantsReport::compute(spec, &g, &cap.solver())?;
            if json {
                print_json(&report)?;
            } else {
                emit(&report.to_string())?;
            }
        }
        Command::Classify { graph, json, cap } => {
            let (_, g) = load_graph(&graph)?;
            let m = lexdim_core::family::classify_with(&g, &cap.solver())?;
            if json {
                print_json(&m)?;
            } else {
                emit(&output::classification_text(&m))?;
            }
        }
        Command::Product { family, emit_g6 } => {
            let fam = load_family(&family)?;
            let p = product(&fam)?;
            if emit_g6 {
                emit(&(lexdim_core::to_graph6(&p.graph) + "\n"))?;
            } else {
                emit(&ProductReport::new(&fam, &p).to_string())?;
            }
        }
        Command::Decompose { family, json, cap } => {
            let fam = load_family(&family)?;
            let report = decompose_using(&fam, &cap.solver())?;
            if json {
                print_json(&report)?;
            } else {
                emit(&output::decomposition_text(&report))?;
            }
        }
        Command::Verify {
            family,
            json,
            flip_edge,
            cap,
        } => {
            let fam = load_family(&family)?;
            let opts = VerifyOptions {
                solver: cap.solver(),
                flip_product_edge: flip_edge,
                record_timing: true,
            };
            let report = verify_instance_with(&fam, &opts, None)?;
            if json {
                print_json(&report)?;
            } else {
                emit(&output::verification_text(&report))?;
            }
            return Ok(report.status.exit_code() as u8);
        }
        Command::Sweep(args) => {
            let bases = match (&args.bases, args.max_base_order) {
                (Some(path), limit) => BaseSource::Graphs(load_bases(path, limit)?),
                (None, Some(n)) => BaseSource::Exhaustive { max_order: n },
                (None, None) => bail!("sweep needs --max-base-order or --bases"),
            };
            let pool = parse_pool(&read(&args.pool)?)
                .with_context(|| format!("in pool file {}", args.pool.display()))?;
            let sampling = match args.samples {
                None => Sampling::Exhaustive,
                Some(samples) => Sampling::Random {
                    seed: args.seed,
                    samples,
                    exhaustive_up_to: args.exhaustive_up_to,
                },
            };
            let summary = sweep(&SweepConfig {
                bases,
                pool,
                sampling,
                solver: args.cap.solver(),
            })?;
            if args.json {
                print_json(&summary)?;
            } else {
                emit(&output::sweep_text(&summary))?;
            }
            return Ok(if summary.failed > 0 { 1 } else { 0 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
