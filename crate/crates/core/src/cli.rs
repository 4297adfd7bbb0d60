//! Command-line front end.
//!
//! ```text
//! hedonic check <instance> <outcome> --rule <cell> [--k K]
//! hedonic solve <instance> --algo <two-is|cis|singleton-seeded|local-search> [--rule R] [--policy P] [--seed S] [--limit L]
//! hedonic enumerate <instance> --rule <cell> [--k K]
//! hedonic generate --family <random|all-positive|all-negative|one-enemy> --players N [--density P] [--max-weight W] [--seed S]
//! hedonic reduce --kind <supernodes|sumcis|votein-followers|kvoteout|nor> [--input FILE] ...
//! hedonic pull-back <reduced instance> <outcome>
//! hedonic dynamics <instance> --rule <cell> [--start FILE] [--policy P] [--seed S] [--limit L] [--k K]
//! ```
//!
//! Reports are JSON on standard output. Exit codes: 0 stable / converged /
//! success, 1 usage or input error, 2 unstable (the witness is printed),
//! 3 not converged within the step limit.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dynamics::{self, PivotPolicy, Trace};
use crate::exact::{self, SizeGuard};
use crate::generate::{random_game, Family};
use crate::io::{self, rational_serde};
use crate::reductions::{self, ReductionRecord};
use crate::rule::parse_rational;
use crate::stability;
use crate::{Error, Game, Outcome, Rational, Result, Rule};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNSTABLE: i32 = 2;
pub const EXIT_NOT_CONVERGED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hedonic",
    version,
    about = "Stability and dynamics of hedonic games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check an outcome for stability under a rule.
    Check {
        instance: PathBuf,
        outcome: PathBuf,
        #[arg(long)]
        rule: Rule,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Compute a stable outcome.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long, default_value = "nash")]
        rule: Rule,
        #[arg(long, value_enum, default_value = "first")]
        policy: Policy,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// List every stable outcome by exhaustive search.
    Enumerate {
        instance: PathBuf,
        #[arg(long)]
        rule: Rule,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Write a random instance.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        players: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 5)]
        max_weight: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build a reduced instance (with its record) from a source instance.
    Reduce {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Source instance; not used by `nor`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Number of supernodes (`supernodes`) or coalition cap (`kvoteout`).
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// T_in for `votein-followers`, T_out for `kvoteout`.
        #[arg(long, default_value = "1/2")]
        threshold: String,
        /// Gadget level for `nor`.
        #[arg(long, default_value_t = 1)]
        level: u32,
        /// Pin the `nor` inputs to sides, e.g. `--pin 0,1`.
        #[arg(long, value_delimiter = ',')]
        pin: Option<Vec<u8>>,
    },
    /// Map an outcome of a reduced instance back to its source.
    PullBack { instance: PathBuf, outcome: PathBuf },
    /// Run improvement dynamics and print the full trace.
    Dynamics {
        instance: PathBuf,
        #[arg(long)]
        rule: Rule,
        /// Start outcome; all singletons when absent (the grand coalition with --k).
        #[arg(long)]
        start: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "first")]
        policy: Policy,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algo {
    TwoIs,
    Cis,
    SingletonSeeded,
    LocalSearch,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Policy {
    First,
    Best,
    Random,
}

impl Policy {
    fn with_seed(self, seed: u64) -> PivotPolicy {
        match self {
            Policy::First => PivotPolicy::FirstImprovement,
            Policy::Best => PivotPolicy::BestImprovement,
            Policy::Random => PivotPolicy::Random(seed),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Supernodes,
    Sumcis,
    VoteinFollowers,
    Kvoteout,
    Nor,
}

#[derive(Serialize)]
struct CheckReport<'a> {
    rule: Rule,
    k: Option<usize>,
    outcome: &'a Outcome,
    #[serde(flatten)]
    verdict: stability::StabilityVerdict,
}

#[derive(Serialize)]
struct SolveReport {
    algo: &'static str,
    rule: Rule,
    outcome: Outcome,
    converged: bool,
    step_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    flips: Option<usize>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        with = "rational_serde::option"
    )]
    cut_value: Option<Rational>,
}

#[derive(Serialize)]
struct EnumerateReport {
    rule: Rule,
    k: Option<usize>,
    count: usize,
    outcomes: Vec<Outcome>,
}

/// Runs the CLI on the process streams and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI with explicit output streams.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("{}: {e}", path.display()),
    })
}

fn load_instance(path: &Path) -> Result<(Game, Option<ReductionRecord>)> {
    io::parse_instance(&read(path)?)
}

fn load_outcome(path: &Path, players: usize) -> Result<Outcome> {
    io::parse_outcome(&read(path)?, players)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("writing output: {e}"),
    })
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Check {
            instance,
            outcome,
            rule,
            k,
        } => {
            let (game, _) = load_instance(&instance)?;
            let outcome = load_outcome(&outcome, game.player_count())?;
            let verdict = stability::check_stable(&game, &outcome, &rule, k)?;
            let code = if verdict.stable {
                EXIT_OK
            } else {
                EXIT_UNSTABLE
            };
            emit(
                out,
                &io::to_json(&CheckReport {
                    rule,
                    k,
                    outcome: &outcome,
                    verdict,
                }),
            )?;
            Ok(code)
        }
        Command::Solve {
            instance,
            algo,
            rule,
            policy,
            seed,
            limit,
            k,
        } => {
            let (game, _) = load_instance(&instance)?;
            let report = solve(&game, algo, rule, policy.with_seed(seed), limit, k)?;
            let code = if report.converged {
                EXIT_OK
            } else {
                EXIT_NOT_CONVERGED
            };
            emit(out, &io::to_json(&report))?;
            Ok(code)
        }
        Command::Enumerate { instance, rule, k } => {
            let (game, _) = load_instance(&instance)?;
            let outcomes = exact::brute_force_stable(&game, &rule, k, SizeGuard::from_env())?;
            let report = EnumerateReport {
                rule,
                k,
                count: outcomes.len(),
                outcomes,
            };
            emit(out, &io::to_json(&report))?;
            Ok(EXIT_OK)
        }
        Command::Generate {
            family,
            players,
            density,
            max_weight,
            seed,
        } => {
            if max_weight < 1 {
                return Err(Error::RulePreconditionViolated(
                    "--max-weight must be at least 1".into(),
                ));
            }
            let game = random_game(family, players, density, max_weight, seed);
            emit(out, &io::serialize_game(&game))?;
            Ok(EXIT_OK)
        }
        Command::Reduce {
            kind,
            input,
            k,
            threshold,
            level,
            pin,
        } => {
            let source = || -> Result<Game> {
                let path = input.as_deref().ok_or_else(|| {
                    Error::RulePreconditionViolated("--input is required for this reduction".into())
                })?;
                Ok(load_instance(path)?.0)
            };
            let t = parse_rational(&threshold)?;
            let (game, record) = match kind {
                Kind::Supernodes => reductions::add_supernodes(&source()?, k)?,
                Kind::Sumcis => reductions::reduce_maxcut_to_sumcis(&source()?)?,
                Kind::VoteinFollowers => reductions::add_votein_followers(&source()?, t)?,
                Kind::Kvoteout => reductions::reduce_to_kvoteout(&source()?, k, t)?,
                Kind::Nor => {
                    let gadget = reductions::build_nor_gadget(level)?;
                    match pin.as_deref() {
                        Some(&[a, b]) if a <= 1 && b <= 1 => {
                            reductions::pin_nor_gadget(&gadget, a == 1, b == 1)?
                        }
                        Some(_) => {
                            return Err(Error::RulePreconditionViolated(
                                "--pin takes two sides, each 0 or 1".into(),
                            ))
                        }
                        None => {
                            emit(out, &io::serialize_game(&gadget.game))?;
                            return Ok(EXIT_OK);
                        }
                    }
                }
            };
            emit(out, &io::serialize_instance(&game, Some(&record)))?;
            Ok(EXIT_OK)
        }
        Command::PullBack { instance, outcome } => {
            let (game, record) = load_instance(&instance)?;
            let record = record.ok_or_else(|| {
                Error::RecordMismatch("instance carries no reduction record".into())
            })?;
            let outcome = load_outcome(&outcome, game.player_count())?;
            emit(
                out,
                &io::to_json(&reductions::pull_back(&record, &outcome)?),
            )?;
            Ok(EXIT_OK)
        }
        Command::Dynamics {
            instance,
            rule,
            start,
            policy,
            seed,
            limit,
            k,
        } => {
            let (game, _) = load_instance(&instance)?;
            let start = match start {
                Some(path) => load_outcome(&path, game.player_count())?,
                None => default_start(&game, k),
            };
            let trace =
                dynamics::run_local_search(&game, &start, &rule, k, policy.with_seed(seed), limit)?;
            emit(out, &io::to_json(&trace))?;
            Ok(if trace.converged {
                EXIT_OK
            } else {
                EXIT_NOT_CONVERGED
            })
        }
    }
}

fn solve(
    game: &Game,
    algo: Algo,
    rule: Rule,
    policy: PivotPolicy,
    limit: Option<usize>,
    k: Option<usize>,
) -> Result<SolveReport> {
    let from_trace = |algo, rule, trace: Trace| SolveReport {
        algo,
        rule,
        outcome: trace.final_outcome,
        converged: trace.converged,
        step_count: trace.step_count,
        flips: None,
        cut_value: None,
    };
    Ok(match algo {
        Algo::TwoIs => {
            let r = exact::solve_two_is_detailed(game);
            SolveReport {
                algo: "two-is",
                rule: Rule::is(),
                outcome: r.outcome,
                converged: true,
                step_count: 0,
                flips: Some(r.flips),
                cut_value: Some(r.cut_value),
            }
        }
        Algo::Cis => from_trace("cis", Rule::cis(), dynamics::run_cis(game)?),
        Algo::SingletonSeeded => from_trace(
            "singleton-seeded",
            rule,
            dynamics::run_singleton_seeded(game, &rule)?,
        ),
        Algo::LocalSearch => {
            let start = default_start(game, k);
            let trace = dynamics::run_local_search(game, &start, &rule, k, policy, limit)?;
            from_trace("local-search", rule, trace)
        }
    })
}

fn default_start(game: &Game, k: Option<usize>) -> Outcome {
    match k {
        Some(_) => Outcome::grand(game.player_count()),
        None => Outcome::singletons(game.player_count()),
    }
}
