//! Executable law suite.
//!
//! Turns the algebra's laws, coherence conditions, round-trip equivalences,
//! and lemmas into deterministic sampled checks over a registry of instance
//! families. Every check derives its seed from the suite seed and its own
//! name, so any failure reproduces in isolation.

pub mod checks;
pub mod lemmas;
pub mod morphism;
pub mod mutation;
pub mod observe;
pub mod registry;
pub mod report;
pub mod roundtrip;
pub mod sample;
pub mod wellbehaved;

pub use checks::Checker;
pub use observe::{observe, TestCtx, TestEq};
pub use registry::{entries, run_core_suite, run_entry_laws, EntryInfo};
pub use report::{failures, LawReport, SuiteConfig};
pub use sample::{rng_from, seed_for, Gen, Key, SampleRng};
pub use wellbehaved::run_wellbehaved_suite;

/// Oracles shared by tests: small, direct, and independent of the optics
/// machinery they are used to check.
pub mod oracle {
    use crate::concrete::Tree;
    use crate::prelude::Value;

    /// In-order fold of the labels.
    pub fn in_order_labels<A: Value>(t: &Tree<A>) -> Vec<A> {
        t.in_order_labels()
    }

    /// Expected outcome of counting odd labels along the in-order list.
    pub fn count_odd_fold(t: &Tree<i64>, start: i64) -> (Tree<bool>, i64) {
        let odd = t.map(&|x| x % 2 != 0);
        let count = t
            .in_order_labels()
            .iter()
            .filter(|x| **x % 2 != 0)
            .count() as i64;
        (odd, start + count)
    }
}
