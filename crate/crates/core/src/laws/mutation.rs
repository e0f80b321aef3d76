//! Fault-injection checks: each deliberately broken definition must be
//! caught by the law it targets. A report here is expected to FAIL; the
//! suite asserts that it does.

use super::checks::Checker;
use super::observe::observe;
use super::report::{LawReport, SuiteConfig};
use super::sample::Gen;
use super::wellbehaved;
use crate::concrete::{pi1, Lens, LensF};
use crate::optic::{lens_c2p, Optic};
use crate::prelude::{compose_hom, hom, id_hom, snd, Hom};

/// A dimap whose composition order is swapped (only expressible once the
/// types collapse to one ground type). The identity law still holds for
/// it; the composition law must not.
fn swapped_dimap(pre: Hom<i64, i64>, post: Hom<i64, i64>, h: Hom<i64, i64>) -> Hom<i64, i64> {
    hom(move |x| pre(h(post(x))))
}

/// Composition law against the swapped dimap; expected to fail.
pub fn swapped_dimap_composition(cfg: &SuiteConfig) -> LawReport {
    let mut c = Checker::new("function arrow (swapped dimap)", cfg);
    c.law("mutation/dimap-composition", |rng, probes| {
        let h: Hom<i64, i64> = Gen::generate(rng);
        let f: Hom<i64, i64> = Gen::generate(rng);
        let f2: Hom<i64, i64> = Gen::generate(rng);
        let g: Hom<i64, i64> = Gen::generate(rng);
        let g2: Hom<i64, i64> = Gen::generate(rng);
        let lhs = swapped_dimap(
            compose_hom(f2.clone(), f.clone()),
            compose_hom(g.clone(), g2.clone()),
            h.clone(),
        );
        let rhs = swapped_dimap(f, g, swapped_dimap(f2, g2, h));
        observe(&lhs, &rhs, rng, probes)
    });
    c.reports.pop().expect("one report")
}

/// Lens round-trip with the wrong trivial seed (`Lens id snd` instead of
/// `Lens id fst`); expected to fail.
pub fn wrong_lens_seed_roundtrip(cfg: &SuiteConfig) -> LawReport {
    let mut c = Checker::new("lens", cfg);
    c.law_once("mutation/lens-p2c-wrong-seed", |rng, probes| {
        let original = pi1::<i64, i64, bool>();
        let optic = lens_c2p(original.clone());
        let wrong_seed: Lens<i64, i64, i64, i64> =
            Lens::new(id_hom(), hom(snd::<i64, i64>));
        let back = optic
            .apply_cartesian::<LensF<i64, i64>>(wrong_seed)
            .map_err(|e| e.to_string())?;
        observe(&back, &original, rng, probes)
    });
    c.reports.pop().expect("one report")
}

/// A lens whose update ignores the new value; the view-after-update law
/// must catch it.
pub fn update_ignoring_lens(cfg: &SuiteConfig) -> LawReport {
    let broken: Lens<i64, i64, (i64, bool), (i64, bool)> =
        Lens::new(hom(crate::prelude::fst), hom(|(_b, s): (i64, (i64, bool))| s));
    let mut reports = wellbehaved::lens_laws("update-ignoring", &broken, cfg);
    // The targeted law is the first: view (update (a, s)) = a.
    reports.remove(0)
}

/// All three injected faults; every returned report must have failed.
pub fn all(cfg: &SuiteConfig) -> Vec<LawReport> {
    vec![
        swapped_dimap_composition(cfg),
        wrong_lens_seed_roundtrip(cfg),
        update_ignoring_lens(cfg),
    ]
}
