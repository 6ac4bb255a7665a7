use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use looprank::families::{build_family, build_named, FamilyId, FamilyInstance, NamedGraphId};
use looprank::io::{from_json, to_dot, to_json};
use looprank::rank::rank_graph;
use looprank::verify::{self, VerificationReport};
use looprank::SelfLoopGraph;

#[derive(Parser)]
#[command(name = "looprank", version, about = "Exact rank of self-loop graphs and exhaustive rank checks")]
struct Cli {
    /// Worker threads for the exhaustive checks.
    #[arg(long, global = true, env = "LOOPRANK_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the rank of a graph given as JSON (file path, inline JSON, or stdin).
    Rank {
        input: Option<String>,
        /// Also print the smallest catalog subgraph of rank >= 4, when there is one.
        #[arg(long)]
        witness: bool,
    },
    /// Build a member of a family: H1 H2 H2p H3 H4 H5 H3p H4p H5p rank1 rank2.
    Family {
        name: String,
        #[arg(long, default_value_t = 0)]
        w: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        sigma: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build a named graph (P4_1, P4_2, P4_13, P4_124, P4_HAT, P5_14, P5_145, FS, FSP, FIG23, FIG24).
    Named {
        name: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate rank-3 graphs of one order and match them against the families.
    Classify {
        #[arg(long, default_value_t = 5)]
        order: usize,
        /// Keep graphs that contain triangles (reported, not asserted).
        #[arg(long)]
        allow_triangles: bool,
        /// Keep trees as well as cyclic graphs (reported, not asserted).
        #[arg(long)]
        allow_acyclic: bool,
        /// Unlock order 8.
        #[arg(long)]
        long_run: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one exhaustive check and print its report.
    Verify {
        claim: Claim,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 5)]
        order: usize,
        /// Unlock the expensive ranges (cycle orders above 9, classification order 8).
        #[arg(long)]
        long_run: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert a JSON graph to DOT or normalized JSON.
    Export {
        input: Option<String>,
        /// Graph name written into DOT output.
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Claim {
    CycleBound,
    C4Table,
    Witnesses,
    Classify,
    Rank12,
    Maximality,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(clap::Args)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Output file. The bare words `json` and `dot` select a format instead.
    #[arg(long)]
    out: Option<String>,
}

impl OutputArgs {
    /// Resolves `(format, file)`; `--out json|dot` doubles as a format switch.
    fn resolve(&self, default: Format) -> (Format, Option<PathBuf>) {
        match self.out.as_deref() {
            Some("json") => (self.format.unwrap_or(Format::Json), None),
            Some("dot") => (self.format.unwrap_or(Format::Dot), None),
            Some(path) => (self.format.unwrap_or(default), Some(PathBuf::from(path))),
            None => (self.format.unwrap_or(default), None),
        }
    }
}

fn read_graph(input: Option<&str>) -> Result<SelfLoopGraph> {
    let text = match input {
        None | Some("-") => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
        Some(s) if s.trim_start().starts_with('{') => s.to_owned(),
        Some(path) => fs::read_to_string(path).with_context(|| format!("reading {path}"))?,
    };
    Ok(from_json(&text)?)
}

fn emit(data: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, data).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(data.as_bytes())?;
            if !data.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

fn emit_graph(g: &SelfLoopGraph, label: &str, output: &OutputArgs, default: Format) -> Result<()> {
    let (format, file) = output.resolve(default);
    let text = match format {
        Format::Json => to_json(g),
        Format::Dot => to_dot(g, Some(label)),
    };
    emit(&text, file.as_ref())
}

fn emit_report(report: &VerificationReport, out: Option<&PathBuf>) -> Result<ExitCode> {
    emit(&report.to_json_pretty(), out)?;
    eprintln!(
        "{}: {} ({} checked, {} violations, {} ms)",
        report.claim,
        if report.is_verified() { "verified" } else { "refuted" },
        report.checked,
        report.violations.len(),
        report.elapsed_ms
    );
    Ok(if report.is_verified() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn family_instance(name: &str, w: usize, n: Option<usize>, sigma: Option<usize>) -> Result<FamilyInstance> {
    let id: FamilyId = name.parse()?;
    Ok(match id {
        FamilyId::Rank1 => FamilyInstance::rank1(n.context("rank1 needs --n")?),
        FamilyId::Rank2 => FamilyInstance::rank2(n.context("rank2 needs --n")?, sigma.context("rank2 needs --sigma")?),
        id => FamilyInstance::join(id, w),
    })
}

fn run_verify(claim: Claim, n_max: Option<usize>, order: usize, long_run: bool) -> Result<VerificationReport> {
    let report = match claim {
        Claim::CycleBound => {
            let n_max = n_max.unwrap_or(9);
            if n_max > 9 && !long_run {
                bail!("cycle-bound beyond n = 9 requires --long-run");
            }
            verify::verify_cycle_rank_bound(5, n_max)?
        }
        Claim::C4Table => verify::verify_c4_table()?,
        Claim::Witnesses => {
            let n_max = n_max.unwrap_or(9);
            if n_max > 9 && !long_run {
                bail!("witnesses beyond n = 9 requires --long-run");
            }
            verify::verify_witnesses(n_max)?
        }
        Claim::Classify => verify::classify_rank3(order, true, true, long_run)?.0,
        Claim::Rank12 => verify::verify_rank12(n_max.unwrap_or(verify::RANK12_MAX_ORDER))?,
        Claim::Maximality => verify::verify_maximality()?,
    };
    Ok(report)
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().context("configuring worker pool")?;
    }
    match cli.command {
        Command::Rank { input, witness } => {
            let g = read_graph(input.as_deref())?;
            let r = rank_graph(&g);
            println!("rank: {r}");
            if witness && r >= 4 {
                match verify::find_catalog_witness(&g) {
                    Some((id, u)) => println!("witness: {id} on vertices {u}"),
                    None => println!("witness: none in catalog"),
                }
            }
        }
        Command::Family { name, w, n, sigma, output } => {
            let inst = family_instance(&name, w, n, sigma)?;
            let g = build_family(&inst)?;
            emit_graph(&g, &inst.to_string(), &output, Format::Json)?;
        }
        Command::Named { name, output } => {
            let id: NamedGraphId = name.parse()?;
            emit_graph(&build_named(id), id.name(), &output, Format::Json)?;
        }
        Command::Classify { order, allow_triangles, allow_acyclic, long_run, out } => {
            let (report, _) = verify::classify_rank3(order, !allow_triangles, !allow_acyclic, long_run)?;
            return emit_report(&report, out.as_ref());
        }
        Command::Verify { claim, n_max, order, long_run, out } => {
            let report = run_verify(claim, n_max, order, long_run)?;
            return emit_report(&report, out.as_ref());
        }
        Command::Export { input, name, output } => {
            let g = read_graph(input.as_deref())?;
            let (format, file) = output.resolve(Format::Dot);
            let text = match format {
                Format::Json => to_json(&g),
                Format::Dot => to_dot(&g, name.as_deref()),
            };
            emit(&text, file.as_ref())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
