use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tgraph_core::formulas::predictions_for;
use tgraph_core::graph::build_tgraph;
use tgraph_core::harness::{
    conjecture_scan, distance_table_as_expected, reproduce_component_table,
    reproduce_distance_table, verify_claim_sweep, write_csv, ClaimInstance, ClaimKind, SweepConfig,
    SweepSummary, TableId,
};
use tgraph_core::{analysis::analyze_with, GroupSpec, Limits, TGraphError, MAX_ELEMENTS_ENV};

const GROUP_HELP: &str = "Group spec: `bounds:<e1,e2,...>` for exponent bounds, or a named group \
`cyclic:<m>`, `product:<e1,e2,...>`, `dihedral:<n>`, `q8`, `s5`";

#[derive(Parser)]
#[command(
    name = "tgraph",
    version,
    about = "Build, analyze and verify t-graphs of finite groups"
)]
#[command(
    after_help = "Exit codes: 0 success, 1 pinned mismatch, 2 usage error, 3 size limit.\n\
The element cap defaults to 1000000 and can be changed with TGRAPH_MAX_ELEMENTS."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the t-graph as DOT or JSON.
    Build {
        #[arg(help = GROUP_HELP)]
        group: GroupSpec,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Components, nullity, bipartiteness, chromatic number and structure.
    Analyze {
        #[arg(help = GROUP_HELP)]
        group: GroupSpec,
        #[arg(long)]
        t: u32,
    },
    /// Closed-form predictions that apply to the group at t.
    Predict {
        #[arg(help = GROUP_HELP)]
        group: GroupSpec,
        #[arg(long)]
        t: u32,
    },
    /// Sweep one claim (or `all`) against brute force.
    Verify {
        /// t2, t3 (alias edges), t5, t7, paths, ngraph, 2chrom, e2, t6,
        /// cyclic, subgroup, isolated-lemma, or all.
        claim: String,
        #[command(flatten)]
        range: RangeArgs,
        /// Write every instance as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare recomputed tables with the published values.
    Tables {
        /// 2 or 3 for the component tables, 1 for the distance table;
        /// all three when omitted.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        workers: Option<usize>,
        /// Write every cell as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan conjecture 1, 2, 3 or 4.
    Conjecture {
        id: u8,
        #[command(flatten)]
        range: RangeArgs,
        /// Write the scan data as CSV (conjectures 2 and 4).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct RangeArgs {
    /// Upper end of n (or of each bound, for three generators).
    #[arg(long)]
    n_max: Option<u32>,
    /// Upper end of m.
    #[arg(long)]
    m: Option<u32>,
    /// Shorthand for both --n-max and --m.
    #[arg(long)]
    max: Option<u32>,
    /// Worker threads; defaults to available parallelism.
    #[arg(long)]
    workers: Option<usize>,
}

impl RangeArgs {
    fn config(&self, limits: Limits) -> SweepConfig {
        SweepConfig {
            n_max: self.n_max.or(self.max),
            m_max: self.m.or(self.max),
            workers: self.workers,
            limits,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

enum Failure {
    Pinned(String),
    Core(TGraphError),
}

impl From<TGraphError> for Failure {
    fn from(e: TGraphError) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Core(e.into())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn emit(text: &str, out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = io::stdout().lock();
            let written = stdout.write_all(text.as_bytes()).and_then(|_| {
                if text.ends_with('\n') {
                    Ok(())
                } else {
                    stdout.write_all(b"\n")
                }
            });
            match written {
                // a closed pipe (e.g. `| head`) is not an error
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
                other => other,
            }
        }
    }
}

fn write_instances(instances: &[ClaimInstance], out: Option<&Path>) -> Outcome {
    if let Some(path) = out {
        write_csv(instances, File::create(path)?)?;
        eprintln!("wrote {} rows to {}", instances.len(), path.display());
    }
    Ok(())
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn run_verify(claim: &str, cfg: &SweepConfig, out: Option<&Path>) -> Outcome {
    let kinds: Vec<ClaimKind> = if claim.eq_ignore_ascii_case("all") {
        ClaimKind::ALL.to_vec()
    } else {
        vec![claim.parse()?]
    };
    let mut all_instances = Vec::new();
    let mut summaries = Vec::new();
    for kind in kinds {
        let (instances, summary) = verify_claim_sweep(kind, cfg)?;
        eprintln!(
            "{kind}: {} instances, {} match, {} mismatch, {} n/a{}",
            summary.instances,
            summary.matched,
            summary.mismatch,
            summary.not_applicable,
            if kind.is_pinned() {
                ""
            } else {
                " (not pinned)"
            }
        );
        all_instances.extend(instances);
        summaries.push(summary);
    }
    emit(
        &if summaries.len() == 1 {
            json(&summaries[0])
        } else {
            json(&summaries)
        },
        None,
    )?;
    write_instances(&all_instances, out)?;
    let failing: Vec<&str> = summaries
        .iter()
        .filter(|s| !s.passes())
        .map(|s| s.claim.as_str())
        .collect();
    if failing.is_empty() {
        Ok(())
    } else {
        Err(Failure::Pinned(format!(
            "pinned claims mismatched: {}",
            failing.join(", ")
        )))
    }
}

fn run_tables(
    m: Option<u32>,
    limits: &Limits,
    workers: Option<usize>,
    out: Option<&Path>,
) -> Outcome {
    let which: Vec<u32> = match m {
        Some(m @ 1..=3) => vec![m],
        Some(other) => {
            return Err(
                TGraphError::InvalidArgument(format!("--m must be 1, 2 or 3, got {other}")).into(),
            )
        }
        None => vec![1, 2, 3],
    };
    let pool = workers
        .map(|w| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
        })
        .transpose()
        .map_err(|e| TGraphError::InvalidArgument(format!("thread pool: {e}")))?;
    let mut all_instances = Vec::new();
    let mut summaries: Vec<SweepSummary> = Vec::new();
    let mut failing = Vec::new();
    for table in which {
        let (id, instances, ok) = if table == 1 {
            let cells = reproduce_distance_table()?;
            let ok = distance_table_as_expected(&cells);
            (TableId::Distances, cells, ok)
        } else {
            let job = || reproduce_component_table(table, 20, limits);
            let cells = match &pool {
                Some(p) => p.install(job),
                None => job(),
            }?;
            let ok = cells
                .iter()
                .all(|c| c.status == tgraph_core::harness::Status::Match);
            let id = if table == 2 {
                TableId::ComponentsM2
            } else {
                TableId::ComponentsM3
            };
            (id, cells, ok)
        };
        let summary = SweepSummary::from_instances(id.name(), true, &instances);
        eprintln!(
            "{}: {} cells, {} match, {} mismatch{}",
            id.name(),
            summary.instances,
            summary.matched,
            summary.mismatch,
            if id == TableId::Distances {
                " (known erratum expected)"
            } else {
                ""
            }
        );
        if !ok {
            failing.push(id.name());
        }
        all_instances.extend(instances);
        summaries.push(summary);
    }
    emit(
        &if summaries.len() == 1 {
            json(&summaries[0])
        } else {
            json(&summaries)
        },
        None,
    )?;
    write_instances(&all_instances, out)?;
    if failing.is_empty() {
        Ok(())
    } else {
        Err(Failure::Pinned(format!(
            "tables differ from expectation: {}",
            failing.join(", ")
        )))
    }
}

fn run(cli: Cli) -> Outcome {
    let limits = Limits::from_env()?;
    match cli.command {
        Command::Build {
            group,
            t,
            format,
            out,
        } => {
            let g = build_tgraph(&group.bounds(limits.max_elements)?, t)?;
            let text = match format {
                Format::Dot => g.to_dot(),
                Format::Json => g.to_json(),
            };
            emit(&text, out.as_deref())?;
        }
        Command::Analyze { group, t } => {
            let g = build_tgraph(&group.bounds(limits.max_elements)?, t)?;
            emit(&analyze_with(&g, &limits)?.to_json(), None)?;
        }
        Command::Predict { group, t } => {
            let bounds = group.bounds(limits.max_elements)?;
            emit(&json(&predictions_for(bounds.as_slice(), t)?), None)?;
        }
        Command::Verify { claim, range, out } => {
            run_verify(&claim, &range.config(limits), out.as_deref())?
        }
        Command::Tables { m, workers, out } => run_tables(m, &limits, workers, out.as_deref())?,
        Command::Conjecture { id, range, out } => {
            let mut report = conjecture_scan(id, &range.config(limits))?;
            if let Some(path) = &out {
                report.write_artifact(path)?;
            }
            eprintln!(
                "conjecture {id}: {}, {} checked, {} counterexamples",
                report.status,
                report.instances_checked,
                report.counterexamples.len()
            );
            emit(&report.to_json(), None)?;
        }
    }
    Ok(())
}

fn exit_code(e: &TGraphError) -> u8 {
    match e {
        TGraphError::SizeLimit { .. } => 3,
        TGraphError::OracleDivergence { .. } => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Pinned(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            if matches!(e, TGraphError::SizeLimit { .. }) {
                eprintln!("hint: raise the cap with {MAX_ELEMENTS_ENV}");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
