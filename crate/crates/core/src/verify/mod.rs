//! Factor checks, synthetic cases with known answers, and the hyperexchange counterexample.

mod counterexample;
mod report;
mod synth;

pub use counterexample::{
    counterexample_fixture, split_form_min_residual, CounterexampleCertificate,
};
pub use report::{check_factors, VerifyReport};
pub use synth::{feasible_triples, synth_case, synth_with_gauges, SynthSpec};
