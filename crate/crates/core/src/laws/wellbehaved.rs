//! Optional well-behavedness checks for monomorphic lenses.
//!
//! The representation equivalences do not require these; they are reported
//! separately from the core suite.

use std::fmt::Debug;

use super::checks::Checker;
use super::observe::{observe, TestEq};
use super::report::{LawReport, SuiteConfig};
use super::sample::Gen;
use crate::concrete::{pi1, sign, Lens};
use crate::prelude::Value;

/// Checks `view (update (a, s)) = a` and `update (view s, s) = s` on
/// sampled inputs.
pub fn lens_laws<A, S>(
    name: &str,
    lens: &Lens<A, A, S, S>,
    cfg: &SuiteConfig,
) -> Vec<LawReport>
where
    A: Value + Gen + TestEq + Debug,
    S: Value + Gen + TestEq + Debug,
{
    let mut c = Checker::new("wellbehaved", cfg);
    let l = lens.clone();
    c.law(&format!("wellbehaved/view-after-update/{name}"), |rng, probes| {
        let a = A::generate(rng);
        let s = S::generate(rng);
        let got = (l.view)((l.update)((a.clone(), s)));
        observe(&got, &a, rng, probes)
    });
    let l = lens.clone();
    c.law(&format!("wellbehaved/update-after-view/{name}"), |rng, probes| {
        let s = S::generate(rng);
        let got = (l.update)(((l.view)(s.clone()), s.clone()));
        observe(&got, &s, rng, probes)
    });
    c.reports
}

/// The optional suite: the two example lenses, instantiated monomorphically.
pub fn run_wellbehaved_suite(cfg: &SuiteConfig) -> Vec<LawReport> {
    let mut out = Vec::new();
    out.extend(lens_laws("pi1", &pi1::<i64, i64, bool>(), cfg));
    out.extend(lens_laws("sign", &sign(), cfg));
    out
}
