//! Library surface of the `assort` command-line verifier: scenario parsing,
//! report formatting, and the runners behind `--scenario`, `--reproduce`,
//! and `--sweep`.

pub mod report;
pub mod runner;
pub mod scenario;

pub use report::{Record, Report};
pub use runner::{
    replay_witness, run_reproduce, run_scenario, run_sweep, RunOptions, SweepOptions, EXIT_CONFIG,
    EXIT_OK, EXIT_REFUTED, REPRODUCE_IDS,
};
pub use scenario::{FixedCase, Kind, PolicyChoice, Scenario, ScenarioError, ScriptEntry};
