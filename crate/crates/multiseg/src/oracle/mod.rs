//! Exhaustive law checking over bounded universes of multisegments.
//!
//! [`enumerate`] lists every multisegment within [`UniverseBounds`];
//! [`run_laws`] evaluates the [`registry`] of laws on every multisegment and
//! every window segment, reporting non-vacuous counts and shrunk
//! counterexamples.

mod enumerate;
mod laws;
mod run;

pub use enumerate::{enumerate, universe, UniverseBounds};
pub use laws::{find, registry, Check, Failure, Law, Probe, Scope};
pub use run::{
    run_laws, run_laws_with, run_on_input, LawReport, LawStatus, LawSummary, RunOptions, RunReport, Verdict,
};
