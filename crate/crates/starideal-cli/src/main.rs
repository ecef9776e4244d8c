//! Command-line front end: parse a structure, select suites, stars and
//! scopes, run the checker, and emit human tables or machine JSON.
//!
//! Exit codes: 0 = all reports consistent; 1 = usage error; 2 = theorem
//! violation (an inconsistent suite on the requested scope, a failed witness
//! replay, or a classification violation — any of which would indicate an
//! implementation bug rather than a property of the input).

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use starideal::checker::classify::{classify, classify_ns, ClassifyOptions};
use starideal::checker::report::EquivalenceReport;
use starideal::checker::scope::Scope;
use starideal::checker::suites::{replay_witness, run_suite, SuiteId};
use starideal::monomial::Mon;
use starideal::numsg::{stars::enumerate_star_operations, Sg};
use starideal::parallel::parallel_map;
use starideal::quadorder::Qo;
use starideal::star::StarOperation;
use starideal::system::{IdealSystem, SampleBounds};

#[derive(Parser)]
#[command(
    name = "starideal",
    about = "Star operations and fractional-ideal arithmetic on numerical semigroups, quadratic orders and monomial ideals",
    version
)]
struct Cli {
    #[command(subcommand)]
    backend: BackendCmd,
}

#[derive(Subcommand)]
enum BackendCmd {
    /// Numerical semigroup backend (structures like "3,4,5")
    Ns {
        #[command(subcommand)]
        cmd: NsCmd,
    },
    /// Quadratic order Z + fωZ in Q(√N)
    Qo {
        #[command(subcommand)]
        cmd: QoCmd,
    },
    /// Monomial ideals of N^k
    Mon {
        #[command(subcommand)]
        cmd: MonCmd,
    },
}

#[derive(Args)]
struct ScopeArgs {
    /// Sample count; numerical semigroups default to the exhaustive scope
    #[arg(long)]
    samples: Option<usize>,
    /// Seed for sampled scopes
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Height bound for sampled ideals
    #[arg(long, default_value_t = 5)]
    height: i64,
}

#[derive(Subcommand)]
enum NsCmd {
    /// Run every suite for the built-in and enumerated star operations
    Classify {
        /// Comma-separated generators, e.g. "3,4,5"
        generators: String,
        #[arg(long)]
        json: bool,
        /// Cap on the number of enumerated star operations
        #[arg(long, default_value_t = 100_000)]
        star_budget: usize,
        /// Enumerated stars reported as individual rows
        #[arg(long, default_value_t = 8)]
        detail_limit: usize,
    },
    /// List every star operation as a normalized-ideal table
    Stars {
        generators: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Run one suite for selected stars
    Verify {
        generators: String,
        /// cicd | v-cicd | prufer | prufer-quotient | stability | dedekind | inv-group | gcd
        #[arg(long)]
        suite: String,
        /// d | w | t | v | all | enumerated
        #[arg(long, default_value = "all")]
        star: String,
        #[arg(long)]
        json: bool,
        /// Re-evaluate every reported witness from its literals
        #[arg(long)]
        replay: bool,
        /// Cap for --star enumerated
        #[arg(long, default_value_t = 512)]
        star_budget: usize,
    },
}

#[derive(Subcommand)]
enum QoCmd {
    Classify {
        /// Squarefree N of the field Q(√N)
        #[arg(long = "N", allow_negative_numbers = true)]
        n: i64,
        /// Conductor of the order
        #[arg(long, default_value_t = 1)]
        f: u64,
        #[command(flatten)]
        scope: ScopeArgs,
        #[arg(long)]
        json: bool,
    },
    Verify {
        #[arg(long = "N", allow_negative_numbers = true)]
        n: i64,
        #[arg(long, default_value_t = 1)]
        f: u64,
        #[arg(long)]
        suite: String,
        #[arg(long, default_value = "all")]
        star: String,
        #[command(flatten)]
        scope: ScopeArgs,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        replay: bool,
    },
}

#[derive(Subcommand)]
enum MonCmd {
    Verify {
        /// Dimension of N^k
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        suite: String,
        #[arg(long, default_value = "all")]
        star: String,
        #[command(flatten)]
        scope: ScopeArgs,
        /// Generator entries are drawn from [-box, box]
        #[arg(long = "box", default_value_t = 5)]
        bound: i64,
        #[arg(long, default_value_t = 5)]
        max_gens: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        replay: bool,
    },
}

#[derive(Serialize)]
struct VerifyOutput {
    reports: Vec<EquivalenceReport>,
    replay: Option<ReplaySummary>,
}

#[derive(Serialize)]
struct ReplaySummary {
    checked: usize,
    failures: usize,
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. under `head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version are not usage errors
            use clap::error::ErrorKind;
            let benign = matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if benign {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> starideal::Result<ExitCode> {
    match cli.backend {
        BackendCmd::Ns { cmd } => run_ns(cmd),
        BackendCmd::Qo { cmd } => run_qo(cmd),
        BackendCmd::Mon { cmd } => run_mon(cmd),
    }
}

fn parse_generators(s: &str) -> starideal::Result<Sg> {
    let gens: starideal::Result<Vec<u64>> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| starideal::Error::Parse(format!("bad generator {:?}", t.trim())))
        })
        .collect();
    Sg::new(&gens?)
}

fn pick_stars<S: IdealSystem>(sys: &S, sel: &str) -> starideal::Result<Vec<StarOperation<S>>> {
    Ok(match sel {
        "all" => starideal::checker::builtin_stars(sys),
        "d" => vec![StarOperation::identity(sys)],
        "w" => vec![StarOperation::w_operation(sys)],
        "t" => vec![StarOperation::t_operation(sys)],
        "v" => vec![StarOperation::divisorial(sys)],
        other => {
            return Err(starideal::Error::Parse(format!(
                "unknown star {other:?} (expected d, w, t, v or all)"
            )))
        }
    })
}

/// Runs `suite` for each star, in parallel, preserving order.
fn verify_reports<S: IdealSystem>(
    sys: &S,
    stars: Vec<StarOperation<S>>,
    scope: &Scope<S>,
    suite: SuiteId,
) -> Vec<EquivalenceReport> {
    parallel_map(stars, |star| run_suite(sys, star, scope, suite))
}

fn replay_reports<S: IdealSystem>(
    sys: &S,
    stars: &[StarOperation<S>],
    scope: &Scope<S>,
    suite: SuiteId,
    reports: &[EquivalenceReport],
) -> starideal::Result<ReplaySummary> {
    let mut checked = 0;
    let mut failures = 0;
    for (star, report) in stars.iter().zip(reports) {
        for c in report.conditions.iter().chain(&report.info) {
            let Some(w) = &c.witness else { continue };
            checked += 1;
            let again = replay_witness(sys, star, scope, suite, &c.label, &w.ideals, &w.elements)?;
            if again.as_ref() != Some(w) {
                failures += 1;
                eprintln!(
                    "replay failed: {}/{} witness {:?}",
                    report.star, c.label, w.ideals
                );
            }
        }
    }
    Ok(ReplaySummary { checked, failures })
}

fn emit_verify<S: IdealSystem>(
    sys: &S,
    stars: Vec<StarOperation<S>>,
    scope: &Scope<S>,
    suite: SuiteId,
    json: bool,
    replay: bool,
) -> starideal::Result<ExitCode> {
    let reports = verify_reports(sys, stars.clone(), scope, suite);
    let replay_summary = if replay {
        Some(replay_reports(sys, &stars, scope, suite, &reports)?)
    } else {
        None
    };
    let inconsistent = reports.iter().any(|r| !r.consistent);
    let replay_failed = replay_summary.as_ref().is_some_and(|r| r.failures > 0);
    let out = VerifyOutput {
        reports,
        replay: replay_summary,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&out).expect("serialize"));
    } else {
        for r in &out.reports {
            render::print_report(r);
        }
        if let Some(rs) = &out.replay {
            println!("replayed witnesses: {} ({} failures)", rs.checked, rs.failures);
        }
    }
    Ok(if inconsistent || replay_failed {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn run_ns(cmd: NsCmd) -> starideal::Result<ExitCode> {
    match cmd {
        NsCmd::Classify {
            generators,
            json,
            star_budget,
            detail_limit,
        } => {
            let sys = parse_generators(&generators)?;
            let scope = Scope::exhaustive(&sys)?;
            let opts = ClassifyOptions {
                star_budget,
                detail_limit,
            };
            let report = classify_ns(&sys, &scope, &opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serialize"));
            } else {
                render::print_classification(&report);
            }
            Ok(if report.consistent {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        NsCmd::Stars {
            generators,
            json,
            budget,
        } => {
            let sys = parse_generators(&generators)?;
            let listing = render::star_listing(&sys, budget)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&listing).expect("serialize"));
            } else {
                render::print_star_listing(&listing);
            }
            Ok(ExitCode::SUCCESS)
        }
        NsCmd::Verify {
            generators,
            suite,
            star,
            json,
            replay,
            star_budget,
        } => {
            let sys = parse_generators(&generators)?;
            let suite = cli_suite(&suite)?;
            let scope = Scope::exhaustive(&sys)?;
            let stars = if star == "enumerated" {
                enumerate_star_operations(&sys, star_budget)?
            } else {
                pick_stars(&sys, &star)?
            };
            emit_verify(&sys, stars, &scope, suite, json, replay)
        }
    }
}

fn cli_suite(name: &str) -> starideal::Result<SuiteId> {
    let suite = SuiteId::from_name(name)?;
    if !SuiteId::cli_suites().contains(&suite) {
        return Err(starideal::Error::Parse(format!(
            "suite {name:?} is not a CLI suite"
        )));
    }
    Ok(suite)
}

fn run_qo(cmd: QoCmd) -> starideal::Result<ExitCode> {
    match cmd {
        QoCmd::Classify { n, f, scope, json } => {
            let sys = Qo::new(n, f)?;
            let sc = Scope::sampled(
                &sys,
                scope.seed,
                scope.samples.unwrap_or(50),
                SampleBounds {
                    height: scope.height,
                    max_gens: 2,
                },
            );
            let report = classify(&sys, &sc);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serialize"));
            } else {
                render::print_classification(&report);
            }
            Ok(if report.consistent {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        QoCmd::Verify {
            n,
            f,
            suite,
            star,
            scope,
            json,
            replay,
        } => {
            let sys = Qo::new(n, f)?;
            let suite = cli_suite(&suite)?;
            let sc = Scope::sampled(
                &sys,
                scope.seed,
                scope.samples.unwrap_or(100),
                SampleBounds {
                    height: scope.height,
                    max_gens: 2,
                },
            );
            let stars = pick_stars(&sys, &star)?;
            emit_verify(&sys, stars, &sc, suite, json, replay)
        }
    }
}

fn run_mon(cmd: MonCmd) -> starideal::Result<ExitCode> {
    match cmd {
        MonCmd::Verify {
            k,
            suite,
            star,
            scope,
            bound,
            max_gens,
            json,
            replay,
        } => {
            let sys = Mon::new(k)?;
            let suite = cli_suite(&suite)?;
            let sc = Scope::sampled(
                &sys,
                scope.seed,
                scope.samples.unwrap_or(200),
                SampleBounds {
                    height: bound,
                    max_gens,
                },
            );
            let stars = pick_stars(&sys, &star)?;
            emit_verify(&sys, stars, &sc, suite, json, replay)
        }
    }
}
