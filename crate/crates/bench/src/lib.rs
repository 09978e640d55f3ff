//! Shared setup helpers for the verifier benchmarks.

use assort_core::{Announcer, InfoPolicy, MechanismSpec, Regime, TypeSpace, Universe};

pub fn desk_universe(n: usize, l: usize) -> Universe {
    Universe::build(&TypeSpace::with_len(l), n).expect("valid desk market")
}

pub fn public_mechanism(n: usize, regime: Regime) -> MechanismSpec {
    MechanismSpec::with_identity(Announcer::InformativePublic, n, regime)
}

pub fn rationalizable() -> InfoPolicy {
    InfoPolicy::Rationalizable
}
