use std::path::PathBuf;
use std::process::ExitCode;

use assort_core::{Announcer, InfoPolicy, Regime};
use clap::{Parser, ValueEnum};

use assort_cli::{run_reproduce, run_scenario, run_sweep, RunOptions, Scenario, SweepOptions};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
#[clap(rename_all = "snake_case")]
enum MechanismArg {
    Empty,
    InformativePublic,
    LowerContour,
    MatchedReport,
}

impl From<MechanismArg> for Announcer {
    fn from(value: MechanismArg) -> Self {
        match value {
            MechanismArg::Empty => Announcer::Empty,
            MechanismArg::InformativePublic => Announcer::InformativePublic,
            MechanismArg::LowerContour => Announcer::LowerContour,
            MechanismArg::MatchedReport => Announcer::MatchedReport,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
#[clap(rename_all = "snake_case")]
enum PolicyArg {
    Minimal,
    NtOnly,
    Rationalizable,
}

impl From<PolicyArg> for InfoPolicy {
    fn from(value: PolicyArg) -> Self {
        match value {
            PolicyArg::Minimal => InfoPolicy::Minimal,
            PolicyArg::NtOnly => InfoPolicy::NontrivialOnly,
            PolicyArg::Rationalizable => InfoPolicy::Rationalizable,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
#[clap(rename_all = "snake_case")]
enum RegimeArg {
    Injective,
    Full,
}

impl From<RegimeArg> for Regime {
    fn from(value: RegimeArg) -> Self {
        match value {
            RegimeArg::Injective => Regime::Injective,
            RegimeArg::Full => Regime::Full,
        }
    }
}

/// Verifies incentive compatibility of assortative matching mechanisms under
/// one-sided incomplete information, by exhaustive search over desk-scale
/// markets.
#[derive(Parser, Debug)]
#[command(name = "assort", version, about)]
struct Cli {
    /// Run a scenario file (`key = value` lines; see the bundled scenarios).
    #[arg(long, value_name = "PATH", conflicts_with_all = ["reproduce", "sweep"])]
    scenario: Option<PathBuf>,

    /// Run a bundled case: ex1, ex2, ex3, ex4, prop1, prop3, ex6.
    #[arg(long, value_name = "ID", conflicts_with = "sweep")]
    reproduce: Option<String>,

    /// Verify every (n, l, mechanism) combination in the configured ranges.
    #[arg(long)]
    sweep: bool,

    /// Smallest market side size for --sweep.
    #[arg(long, default_value_t = 2)]
    min_n: usize,

    /// Largest market side size for --sweep (guardrail 5).
    #[arg(long, default_value_t = 3)]
    max_n: usize,

    /// Smallest type-scale size for --sweep; defaults to n + 1.
    #[arg(long)]
    min_l: Option<usize>,

    /// Largest type-scale size for --sweep (guardrail 8).
    #[arg(long, default_value_t = 5)]
    max_l: usize,

    /// Mechanisms for --sweep; repeatable.
    #[arg(long = "mechanism", value_enum)]
    mechanisms: Vec<MechanismArg>,

    /// Information policy for --sweep.
    #[arg(long, value_enum, default_value_t = PolicyArg::Rationalizable)]
    policy: PolicyArg,

    /// Report class for --sweep.
    #[arg(long, value_enum, default_value_t = RegimeArg::Injective)]
    regime: RegimeArg,

    /// Quantify each deviation plan over every assignment consistent with
    /// the deviator's own type, instead of per realized assignment.
    #[arg(long)]
    quantify_over_positions: bool,

    /// Worker threads for the verification sweeps.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Override the sweep guardrails.
    #[arg(long)]
    force: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.max(1))
        .build();
    let pool = match pool {
        Ok(pool) => pool,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(assort_cli::EXIT_CONFIG as u8);
        }
    };
    let opts = RunOptions {
        quantify_over_positions: cli.quantify_over_positions,
    };
    let outcome = pool.install(|| {
        if let Some(path) = &cli.scenario {
            let scenario = Scenario::from_path(path)?;
            run_scenario(&scenario, &opts)
        } else if let Some(id) = &cli.reproduce {
            run_reproduce(id)
        } else if cli.sweep {
            let mechanisms: Vec<Announcer> = if cli.mechanisms.is_empty() {
                vec![Announcer::InformativePublic]
            } else {
                cli.mechanisms.iter().map(|&m| m.into()).collect()
            };
            run_sweep(&SweepOptions {
                min_n: cli.min_n,
                max_n: cli.max_n,
                min_l: cli.min_l,
                max_l: cli.max_l,
                mechanisms,
                policy: cli.policy.into(),
                regime: cli.regime.into(),
                force: cli.force,
                quantify_over_positions: cli.quantify_over_positions,
            })
        } else {
            Err(assort_cli::ScenarioError::Invalid(
                "nothing to do: pass --scenario, --reproduce, or --sweep".into(),
            ))
        }
    });
    match outcome {
        Ok((report, exit)) => {
            print!("{report}");
            ExitCode::from(exit as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(assort_cli::EXIT_CONFIG as u8)
        }
    }
}
