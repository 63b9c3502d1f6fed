use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use hgx::families::{self, FamilyError};
use hgx::gp::{enumerate_regular_normalized, CosetAction, GpError, SearchConfig, SearchOutcome};
use hgx::group::{GroupError, DEFAULT_CLOSURE_CAP, DEFAULT_SUBGROUP_BOUND};
use hgx::groupfile::{GroupFile, GroupFileError};
use hgx::report::{self, Report, ReportOptions, Timings};

#[derive(Parser)]
#[command(name = "hgx", version, about = "Hopf Galois structures of separable extensions, at the group level")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius extensions of degree pd with group F_{p(p-1)}
    Frobenius {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        d: usize,
        /// Primitive root mod p (default: the least one)
        #[arg(long)]
        zeta: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Dihedral Galois extensions of degree 2p
    Dihedral {
        #[arg(long)]
        p: usize,
        /// Cross-check with the exhaustive search
        #[arg(long)]
        enumerate: bool,
        #[command(flatten)]
        common: Common,
    },
    /// The degree-12 extension with group S3xS3
    Counterexample {
        /// Enumerate every regular normalized subgroup
        #[arg(long)]
        full_search: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Analyze a group given in a group file
    Analyze {
        #[arg(long)]
        group: std::path::PathBuf,
        /// Group file for G' (a subgroup of G)
        #[arg(long, conflicts_with = "point")]
        stabilizer: Option<std::path::PathBuf>,
        /// Take G' as the stabilizer of this point (1-based)
        #[arg(long, required_unless_present = "stabilizer")]
        point: Option<usize>,
        #[arg(long)]
        enumerate: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// List the elements of every subgroup
    #[arg(long)]
    verbose: bool,
    /// Omit the timing block
    #[arg(long)]
    no_timings: bool,
    /// Largest group order built by closure
    #[arg(long, default_value_t = DEFAULT_CLOSURE_CAP)]
    closure_cap: usize,
    /// Largest group order whose subgroups are enumerated
    #[arg(long, default_value_t = DEFAULT_SUBGROUP_BOUND)]
    subgroup_bound: usize,
    /// Largest degree accepted by the search (at most 16)
    #[arg(long, default_value_t = hgx::gp::DEFAULT_MAX_DEGREE)]
    max_degree: usize,
    /// Search node budget
    #[arg(long, default_value_t = hgx::gp::DEFAULT_NODE_BUDGET)]
    node_budget: u64,
    /// Search time budget in milliseconds
    #[arg(long, env = "HGX_BUDGET_MS", default_value_t = hgx::gp::DEFAULT_TIME_BUDGET_MS)]
    budget_ms: u64,
}

impl Common {
    fn search(&self) -> SearchConfig {
        SearchConfig {
            max_degree: self.max_degree,
            node_budget: self.node_budget,
            time_budget: Duration::from_millis(self.budget_ms),
            iso_filter: None,
        }
    }

    fn options(&self) -> ReportOptions {
        ReportOptions {
            verbose: self.verbose,
        }
    }
}

enum Failure {
    Input(String),
    Resource(String),
    Internal(String),
}

impl From<GpError> for Failure {
    fn from(e: GpError) -> Self {
        match e {
            GpError::Incomplete { .. } | GpError::DegreeTooLarge { .. } => Failure::Resource(e.to_string()),
            GpError::Group(g) => g.into(),
            GpError::Invariant(_) => Failure::Internal(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { .. } | GroupError::BoundExceeded { .. } => Failure::Resource(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::InvalidParameter(m) => Failure::Input(m),
            FamilyError::Check(_) => Failure::Internal(e.to_string()),
            FamilyError::Gp(g) => g.into(),
            FamilyError::Group(g) => g.into(),
        }
    }
}

impl From<GroupFileError> for Failure {
    fn from(e: GroupFileError) -> Self {
        match e {
            GroupFileError::Group(g) => g.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// A report plus an optional budget failure to signal after printing.
struct Outcome {
    report: Report,
    search_time: Option<Duration>,
    incomplete: Option<String>,
}

fn run_search(
    action: &Arc<CosetAction>,
    common: &Common,
) -> Result<Result<(SearchOutcome, Duration), (u64, usize, String)>, Failure> {
    let t = Instant::now();
    match enumerate_regular_normalized(action, &common.search()) {
        Ok(out) => Ok(Ok((out, t.elapsed()))),
        Err(GpError::Incomplete { nodes, found }) => Ok(Err((
            nodes,
            found,
            GpError::Incomplete { nodes, found }.to_string(),
        ))),
        Err(e) => Err(e.into()),
    }
}

fn check_bound(order: usize, common: &Common) -> Result<(), Failure> {
    if order > common.subgroup_bound {
        return Err(GroupError::BoundExceeded {
            order,
            bound: common.subgroup_bound,
        }
        .into());
    }
    Ok(())
}

fn searched(
    action: &Arc<CosetAction>,
    common: &Common,
    build: impl Fn(Option<&SearchOutcome>) -> Result<Report, GpError>,
) -> Result<Outcome, Failure> {
    match run_search(action, common)? {
        Ok((out, t)) => Ok(Outcome {
            report: build(Some(&out))?,
            search_time: Some(t),
            incomplete: None,
        }),
        Err((nodes, found, msg)) => {
            let mut report = build(None)?;
            report::mark_incomplete(&mut report, nodes, found);
            Ok(Outcome {
                report,
                search_time: None,
                incomplete: Some(msg),
            })
        }
    }
}

fn plain(report: Report) -> Outcome {
    Outcome {
        report,
        search_time: None,
        incomplete: None,
    }
}

fn execute(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Frobenius { p, d, zeta, common } => {
            let ctx = families::frobenius(*p, *d, *zeta)?;
            check_bound(ctx.action.source().order(), common)?;
            Ok(plain(report::frobenius_report(&ctx, common.options())?))
        }
        Command::Dihedral { p, enumerate, common } => {
            let ctx = families::dihedral(*p)?;
            let opts = common.options();
            if !*enumerate {
                return Ok(plain(report::dihedral_report(&ctx, None, opts)?));
            }
            let out = searched(&ctx.action, common, |s| report::dihedral_report(&ctx, s, opts))?;
            if let Some(sr) = &out.report.search {
                if sr.complete && sr.structures_found != ctx.structures.len() {
                    return Err(Failure::Internal(format!(
                        "search found {} structures, expected {}",
                        sr.structures_found,
                        ctx.structures.len()
                    )));
                }
            }
            Ok(out)
        }
        Command::Counterexample { full_search, common } => {
            let ctx = families::counterexample()?;
            let opts = common.options();
            if *full_search {
                searched(&ctx.action, common, |s| report::counterexample_report(&ctx, s, opts))
            } else {
                Ok(plain(report::counterexample_report(&ctx, None, opts)?))
            }
        }
        Command::Analyze {
            group,
            stabilizer,
            point,
            enumerate,
            common,
        } => {
            let read = |path: &std::path::Path| {
                std::fs::read_to_string(path)
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
            };
            let g = GroupFile::parse(&read(group)?)?.group(common.closure_cap)?;
            check_bound(g.order(), common)?;
            let action = match (stabilizer, point) {
                (Some(path), _) => {
                    let f = GroupFile::parse(&read(path)?)?;
                    if f.degree != g.degree() {
                        return Err(Failure::Input(format!(
                            "stabilizer has degree {}, group has degree {}",
                            f.degree,
                            g.degree()
                        )));
                    }
                    CosetAction::new(&g, &f.group(common.closure_cap)?)?
                }
                (None, Some(k)) => {
                    if *k == 0 || *k > g.degree() {
                        return Err(Failure::Input(format!("point {k} out of range 1..{}", g.degree())));
                    }
                    CosetAction::from_transitive(&g, k - 1)?
                }
                (None, None) => return Err(Failure::Input("either --stabilizer or --point is required".into())),
            };
            let action = Arc::new(action);
            let opts = common.options();
            if *enumerate {
                searched(&action, common, |s| report::analyze_report(&action, s, opts))
            } else {
                Ok(plain(report::analyze_report(&action, None, opts)?))
            }
        }
    }
}

fn common(command: &Command) -> &Common {
    match command {
        Command::Frobenius { common, .. }
        | Command::Dihedral { common, .. }
        | Command::Counterexample { common, .. }
        | Command::Analyze { common, .. } => common,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let common = common(&cli.command);
    match execute(&cli.command) {
        Ok(mut out) => {
            if !common.no_timings {
                out.report.timings = Some(Timings {
                    total_ms: start.elapsed().as_millis() as u64,
                    search_ms: out.search_time.map(|t| t.as_millis() as u64),
                });
            }
            let text = match common.format {
                Format::Text => report::render_text(&out.report),
                Format::Json => out.report.to_json(),
                Format::Dot => report::render_dot(&out.report),
            };
            print!("{text}");
            match out.incomplete {
                Some(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(3)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
