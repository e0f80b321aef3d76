//! Profunctor-morphism checks: for a fixed transformer `k`, the flipped
//! concrete-to-profunctor translation maps each concrete-optic family to
//! the function arrow and must commute with `dimap` on both sides.

use super::checks::Checker;
use super::observe::observe;
use super::report::{LawReport, SuiteConfig};
use super::sample::Gen;
use crate::concrete::{Adapter, AdapterF, Lens, LensF, Prism, PrismF, Traversal, TraversalF};
use crate::optic::{adapter_c2p, lens_c2p, prism_c2p, traversal_c2p, Optic};
use crate::prelude::Hom;
use crate::profunctor::{FnArrow, Profunctor};

pub fn all(cfg: &SuiteConfig) -> Vec<LawReport> {
    let mut out = Vec::new();

    let mut c = Checker::new("adapter", cfg);
    c.law("morphism/adapter-to-function-arrow", |rng, probes| {
        let k: Hom<i64, i64> = Gen::generate(rng);
        let rec = Adapter::<i64, i64, i64, i64>::generate(rng);
        let f: Hom<i64, i64> = Gen::generate(rng);
        let g: Hom<i64, i64> = Gen::generate(rng);
        let apply = |r: Adapter<i64, i64, i64, i64>| {
            adapter_c2p(r)
                .apply_profunctor::<FnArrow>(k.clone())
                .map_err(|e| e.to_string())
        };
        let lhs = FnArrow::dimap(f.clone(), g.clone(), apply(rec.clone())?);
        let rhs = apply(AdapterF::<i64, i64>::dimap(f, g, rec))?;
        observe(&lhs, &rhs, rng, probes)
    });
    out.append(&mut c.reports);

    let mut c = Checker::new("lens", cfg);
    c.law("morphism/lens-to-function-arrow", |rng, probes| {
        let k: Hom<i64, i64> = Gen::generate(rng);
        let rec = Lens::<i64, i64, i64, i64>::generate(rng);
        let f: Hom<i64, i64> = Gen::generate(rng);
        let g: Hom<i64, i64> = Gen::generate(rng);
        let apply = |r: Lens<i64, i64, i64, i64>| {
            lens_c2p(r)
                .apply_cartesian::<FnArrow>(k.clone())
                .map_err(|e| e.to_string())
        };
        let lhs = FnArrow::dimap(f.clone(), g.clone(), apply(rec.clone())?);
        let rhs = apply(LensF::<i64, i64>::dimap(f, g, rec))?;
        observe(&lhs, &rhs, rng, probes)
    });
    out.append(&mut c.reports);

    let mut c = Checker::new("prism", cfg);
    c.law("morphism/prism-to-function-arrow", |rng, probes| {
        let k: Hom<i64, i64> = Gen::generate(rng);
        let rec = Prism::<i64, i64, i64, i64>::generate(rng);
        let f: Hom<i64, i64> = Gen::generate(rng);
        let g: Hom<i64, i64> = Gen::generate(rng);
        let apply = |r: Prism<i64, i64, i64, i64>| {
            prism_c2p(r)
                .apply_cocartesian::<FnArrow>(k.clone())
                .map_err(|e| e.to_string())
        };
        let lhs = FnArrow::dimap(f.clone(), g.clone(), apply(rec.clone())?);
        let rhs = apply(PrismF::<i64, i64>::dimap(f, g, rec))?;
        observe(&lhs, &rhs, rng, probes)
    });
    out.append(&mut c.reports);

    let mut c = Checker::new("traversal", cfg);
    c.law("morphism/traversal-to-function-arrow", |rng, probes| {
        let k: Hom<i64, i64> = Gen::generate(rng);
        let rec = Traversal::<i64, i64, i64, i64>::generate(rng);
        let f: Hom<i64, i64> = Gen::generate(rng);
        let g: Hom<i64, i64> = Gen::generate(rng);
        let apply = |r: Traversal<i64, i64, i64, i64>| {
            traversal_c2p(r)
                .apply_full::<FnArrow>(k.clone())
                .map_err(|e| e.to_string())
        };
        let lhs = FnArrow::dimap(f.clone(), g.clone(), apply(rec.clone())?);
        let rhs = apply(TraversalF::<i64, i64>::dimap(f, g, rec))?;
        observe(&lhs, &rhs, rng, probes)
    });
    out.append(&mut c.reports);

    out
}
