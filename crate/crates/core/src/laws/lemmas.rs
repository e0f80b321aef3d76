//! Monomorphic lemma checks that don't fit the per-entry generic shape.

use super::checks::Checker;
use super::observe::observe;
use super::report::{LawReport, SuiteConfig};
use super::sample::{gen_funlist_len, Gen};
use crate::applicative::{fuse, single, trav_funlist, FunList, FunListF, Functor};
use crate::concrete::{Traversal, TraversalF};
use crate::optic::identity_transformer;
use crate::prelude::{hom, id_hom, Hom, Sum};
use crate::profunctor::{Cocartesian, FnArrow, FullProfunctor, Profunctor};

/// `traverse (Traversal h) = Traversal (travFunList h)`: the traversal
/// family's own `traverse` is elementwise traversal of the spine.
pub fn traverse_at_traversal_instance(cfg: &SuiteConfig) -> Vec<LawReport> {
    let mut c = Checker::new("traversal", cfg);
    c.law("lemma/traverse-at-traversal-is-travfunlist", |rng, probes| {
        let k = Traversal::<i64, i64, i64, i64>::generate(rng);
        let lhs = TraversalF::<i64, i64>::traverse::<i64, i64, bool, i64>(k.clone());
        let extract = k.extract.clone();
        let rhs = Traversal::new(hom(move |l: FunList<i64, bool, i64>| {
            trav_funlist::<FunListF<i64, i64>, i64, i64, bool, i64>(extract.clone(), l)
        }));
        observe(&lhs, &rhs, rng, probes)
    });
    c.reports
}

/// The step used inside the `Done` lemma, directly evaluable at functions:
/// `dimap Left id (right f) = dimap id Left identity`.
pub fn right_left_identity_at_functions(cfg: &SuiteConfig) -> Vec<LawReport> {
    let mut c = Checker::new("function arrow", cfg);
    c.law("lemma/right-on-left-is-identity", |rng, probes| {
        let f: Hom<i64, i64> = Gen::generate(rng);
        let lhs = FnArrow::dimap(
            hom(Sum::<bool, i64>::Left),
            id_hom::<Sum<bool, i64>>(),
            FnArrow::right::<i64, i64, bool>(f),
        );
        let rhs = FnArrow::dimap(
            id_hom::<bool>(),
            hom(Sum::<bool, i64>::Left),
            identity_transformer::<FnArrow, bool>(),
        );
        observe(&lhs, &rhs, rng, probes)
    });
    c.reports
}

/// `fmap fuse . travFunList single = id`, over spines of every length in
/// 0..=8.
pub fn travfunlist_single_fuses(cfg: &SuiteConfig) -> Vec<LawReport> {
    let mut c = Checker::new("funlist", cfg);
    c.law("lemma/travfunlist-single-fuses", |rng, probes| {
        let len = (rand::Rng::random_range(rng, 0..=8u32)) as usize;
        let l: FunList<i64, bool, i64> = gen_funlist_len(rng, len);
        let traversed = trav_funlist::<FunListF<i64, bool>, i64, bool, bool, i64>(
            hom(single::<i64, bool>),
            l.clone(),
        );
        let lhs = FunListF::<i64, bool>::fmap(hom(fuse::<bool, i64>), traversed);
        observe(&lhs, &l, rng, probes)
    });
    c.reports
}

pub fn all(cfg: &SuiteConfig) -> Vec<LawReport> {
    let mut out = Vec::new();
    out.extend(traverse_at_traversal_instance(cfg));
    out.extend(right_left_identity_at_functions(cfg));
    out.extend(travfunlist_single_fuses(cfg));
    out
}
