//! Generic law checks, written once per law and instantiated per registry
//! entry.
//!
//! Each check samples transformers and functions, evaluates both sides of
//! the equation, and compares them with the entry's observational equality
//! ([`TestEq`]). A failure records the first counterexample and the seed
//! that reproduces it.

use super::observe::{observe, TestEq};
use super::report::{LawReport, SuiteConfig};
use super::sample::{rng_from, seed_for, Gen, SampleRng};
use crate::applicative::FunList;
use crate::prelude::{
    assoc, assoc_inv, coassoc, coassoc_inv, compose_hom, fork, fst, hom, id_hom, lunit,
    lunit_inv, lzero, lzero_inv, runit, runit_inv, rzero, rzero_inv, swap_pair, swap_sum, Hom,
    Sum, Void,
};
use crate::profunctor::{Cartesian, Cocartesian, FullProfunctor, Monoidal, Profunctor};

/// Accumulates reports for one registry entry.
pub struct Checker<'a> {
    pub instance: &'static str,
    pub cfg: &'a SuiteConfig,
    pub reports: Vec<LawReport>,
}

impl<'a> Checker<'a> {
    pub fn new(instance: &'static str, cfg: &'a SuiteConfig) -> Self {
        Checker {
            instance,
            cfg,
            reports: Vec::new(),
        }
    }

    /// Runs `body` for `iterations` samples with the given probe budget.
    pub fn run(
        &mut self,
        law: &str,
        iterations: usize,
        probes: usize,
        mut body: impl FnMut(&mut SampleRng, usize) -> Result<(), String>,
    ) {
        let seed = seed_for(self.cfg.seed, self.instance, law);
        let mut rng = rng_from(seed);
        let mut pass = true;
        let mut counterexample = None;
        for i in 0..iterations {
            if let Err(e) = body(&mut rng, probes) {
                pass = false;
                counterexample = Some(format!("sample {i}: {e}"));
                break;
            }
        }
        self.reports.push(LawReport {
            law: law.to_string(),
            instance: self.instance.to_string(),
            samples: iterations,
            seed,
            pass,
            counterexample,
        });
    }

    /// The standard regime: `cfg.samples` iterations, `cfg.probes` probes.
    pub fn law(
        &mut self,
        law: &str,
        body: impl FnMut(&mut SampleRng, usize) -> Result<(), String>,
    ) {
        self.run(law, self.cfg.samples, self.cfg.probes, body)
    }

    /// One deterministic construction observed with `cfg.samples` probes.
    pub fn law_once(
        &mut self,
        law: &str,
        body: impl FnMut(&mut SampleRng, usize) -> Result<(), String>,
    ) {
        self.run(law, 1, self.cfg.samples, body)
    }
}

/// `dimap id id = id` and `dimap (f2 . f) (g . g2) = dimap f g . dimap f2 g2`.
pub fn profunctor_laws<P: Profunctor>(c: &mut Checker<'_>)
where
    P::P<i64, i64>: Gen + TestEq,
{
    c.law("profunctor/identity", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let lhs = P::dimap(id_hom::<i64>(), id_hom::<i64>(), h.clone());
        observe(&lhs, &h, rng, probes)
    });

    c.law("profunctor/composition", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let f: Hom<i64, i64> = Gen::generate(rng);
        let f2: Hom<i64, i64> = Gen::generate(rng);
        let g: Hom<i64, i64> = Gen::generate(rng);
        let g2: Hom<i64, i64> = Gen::generate(rng);
        let lhs = P::dimap(
            compose_hom(f2.clone(), f.clone()),
            compose_hom(g.clone(), g2.clone()),
            h.clone(),
        );
        let rhs = P::dimap(f, g, P::dimap(f2, g2, h));
        observe(&lhs, &rhs, rng, probes)
    });
}

/// Unit and associativity coherence for `first`, their mirror images for
/// `second`, and the derivation of `second` from `first` by swapping.
pub fn cartesian_laws<P: Cartesian>(c: &mut Checker<'_>)
where
    P::P<i64, i64>: Gen,
    P::P<(i64, ()), (i64, ())>: TestEq,
    P::P<(i64, (bool, String)), (i64, (bool, String))>: TestEq,
    P::P<((), i64), ((), i64)>: TestEq,
    P::P<((String, bool), i64), ((String, bool), i64)>: TestEq,
    P::P<(bool, i64), (bool, i64)>: TestEq,
{
    c.law("cartesian/first-unit", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let lhs = P::dimap(hom(runit::<i64>), hom(runit_inv::<i64>), h.clone());
        let rhs = P::first::<i64, i64, ()>(h);
        observe(&lhs, &rhs, rng, probes)
    });

    c.law("cartesian/first-assoc", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let nested = P::first::<(i64, bool), (i64, bool), String>(P::first::<i64, i64, bool>(
            h.clone(),
        ));
        let lhs = P::dimap(
            hom(assoc::<i64, bool, String>),
            hom(assoc_inv::<i64, bool, String>),
            nested,
        );
        let rhs = P::first::<i64, i64, (bool, String)>(h);
        observe(&lhs, &rhs, rng, probes)
    });

    c.law("cartesian/second-unit", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let lhs = P::dimap(hom(lunit::<i64>), hom(lunit_inv::<i64>), h.clone());
        let rhs = P::second::<i64, i64, ()>(h);
        observe(&lhs, &rhs, rng, probes)
    });

    c.law("cartesian/second-assoc", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let nested = P::second::<(bool, i64), (bool, i64), String>(P::second::<i64, i64, bool>(
            h.clone(),
        ));
        let lhs = P::dimap(
            hom(assoc_inv::<String, bool, i64>),
            hom(assoc::<String, bool, i64>),
            nested,
        );
        let rhs = P::second::<i64, i64, (String, bool)>(h);
        observe(&lhs, &rhs, rng, probes)
    });

    c.law("cartesian/second-from-first", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let lhs = P::second::<i64, i64, bool>(h.clone());
        let rhs = P::dimap(
            hom(swap_pair::<bool, i64>),
            hom(swap_pair::<i64, bool>),
            P::first::<i64, i64, bool>(h),
        );
        observe(&lhs, &rhs, rng, probes)
    });
}

/// Zero and co-associativity coherence for `left`, their mirror images for
/// `right`, and the derivation of `right` from `left` by swapping.
pub fn cocartesian_laws<P: Cocartesian>(c: &mut Checker<'_>)
where
    P::P<i64, i64>: Gen,
    P::P<Sum<i64, Void>, Sum<i64, Void>>: TestEq,
    P::P<Sum<i64, Sum<bool, String>>, Sum<i64, Sum<bool, String>>>: TestEq,
    P::P<Sum<Void, i64>, Sum<Void, i64>>: TestEq,
    P::P<Sum<Sum<String, bool>, i64>, Sum<Sum<String, bool>, i64>>: TestEq,
    P::P<Sum<bool, i64>, Sum<bool, i64>>: TestEq,
{
    c.law("cocartesian/left-zero", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let lhs = P::dimap(hom(rzero::<i64>), hom(rzero_inv::<i64>), h.clone());
        let rhs = P::left::<i64, i64, Void>(h);
        observe(&lhs, &rhs, rng, probes)
    });

    c.law("cocartesian/left-coassoc", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let nested = P::left::<Sum<i64, bool>, Sum<i64, bool>, String>(P::left::<i64, i64, bool>(
            h.clone(),
        ));
        let lhs = P::dimap(
            hom(coassoc::<i64, bool, String>),
            hom(coassoc_inv::<i64, bool, String>),
            nested,
        );
        let rhs = P::left::<i64, i64, Sum<bool, String>>(h);
        observe(&lhs, &rhs, rng, probes)
    });

    c.law("cocartesian/right-zero", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let lhs = P::dimap(hom(lzero::<i64>), hom(lzero_inv::<i64>), h.clone());
        let rhs = P::right::<i64, i64, Void>(h);
        observe(&lhs, &rhs, rng, probes)
    });

    c.law("cocartesian/right-coassoc", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let nested = P::right::<Sum<bool, i64>, Sum<bool, i64>, String>(
            P::right::<i64, i64, bool>(h.clone()),
        );
        let lhs = P::dimap(
            hom(coassoc_inv::<String, bool, i64>),
            hom(coassoc::<String, bool, i64>),
            nested,
        );
        let rhs = P::right::<i64, i64, Sum<String, bool>>(h);
        observe(&lhs, &rhs, rng, probes)
    });

    c.law("cocartesian/right-from-left", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let lhs = P::right::<i64, i64, bool>(h.clone());
        let rhs = P::dimap(
            hom(swap_sum::<bool, i64>),
            hom(swap_sum::<i64, bool>),
            P::left::<i64, i64, bool>(h),
        );
        observe(&lhs, &rhs, rng, probes)
    });
}

/// `par`/`empty` form a monoid up to the product witnesses.
pub fn monoidal_laws<P: Monoidal>(c: &mut Checker<'_>)
where
    P::P<i64, i64>: Gen,
    P::P<(i64, (i64, i64)), (i64, (i64, i64))>: TestEq,
    P::P<(i64, ()), (i64, ())>: TestEq,
    P::P<((), i64), ((), i64)>: TestEq,
{
    c.law("monoidal/par-assoc", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let j = <P::P<i64, i64>>::generate(rng);
        let k = <P::P<i64, i64>>::generate(rng);
        let lhs = P::dimap(
            hom(assoc::<i64, i64, i64>),
            hom(assoc_inv::<i64, i64, i64>),
            P::par(P::par(h.clone(), j.clone()), k.clone()),
        );
        let rhs = P::par(h, P::par(j, k));
        observe(&lhs, &rhs, rng, probes)
    });

    c.law("monoidal/right-unit", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let lhs = P::dimap(hom(runit::<i64>), hom(runit_inv::<i64>), h.clone());
        let rhs = P::par(h, P::empty());
        observe(&lhs, &rhs, rng, probes)
    });

    c.law("monoidal/left-unit", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let lhs = P::dimap(hom(lunit::<i64>), hom(lunit_inv::<i64>), h.clone());
        let rhs = P::par(P::empty(), h);
        observe(&lhs, &rhs, rng, probes)
    });
}

/// The defining equation of `traverse`, unrolled one step:
/// `traverse k = dimap out inn (right (par k (traverse k)))`.
pub fn traverse_unroll_law<P: FullProfunctor>(c: &mut Checker<'_>)
where
    P::P<i64, i64>: Gen,
    P::P<FunList<i64, bool, i64>, FunList<i64, bool, i64>>: TestEq,
{
    c.law("traverse/unroll-once", |rng, probes| {
        let k = <P::P<i64, i64>>::generate(rng);
        let lhs = P::traverse::<i64, i64, bool, i64>(k.clone());
        let inner = P::traverse::<i64, i64, bool, Hom<bool, i64>>(k.clone());
        let rhs = P::dimap(
            hom(FunList::<i64, bool, i64>::out),
            hom(FunList::<i64, bool, i64>::inn),
            P::right::<_, _, i64>(P::par(k, inner)),
        );
        observe(&lhs, &rhs, rng, probes)
    });
}

/// Lemma: `dimap (fork id id) fst . first = id`.
pub fn lemma_first_discard<P: Cartesian>(c: &mut Checker<'_>)
where
    P::P<i64, i64>: Gen + TestEq,
{
    c.law("lemma/first-discard-copy", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let lhs = P::dimap(
            fork(id_hom::<i64>(), id_hom::<i64>()),
            hom(fst::<i64, i64>),
            P::first::<i64, i64, i64>(h.clone()),
        );
        observe(&lhs, &h, rng, probes)
    });
}

/// Lemma: `dimap Right (either id id) . right = id`.
pub fn lemma_right_collapse<P: Cocartesian>(c: &mut Checker<'_>)
where
    P::P<i64, i64>: Gen + TestEq,
{
    c.law("lemma/right-collapse", |rng, probes| {
        let h = <P::P<i64, i64>>::generate(rng);
        let lhs = P::dimap(
            hom(Sum::<i64, i64>::Right),
            crate::prelude::either_elim(id_hom::<i64>(), id_hom::<i64>()),
            P::right::<i64, i64, i64>(h.clone()),
        );
        observe(&lhs, &h, rng, probes)
    });
}

/// Lemma: traversing a constant `Done t` source collapses to the identity
/// transformer with `Done t` written on the output side.
pub fn lemma_traverse_done<P: FullProfunctor>(c: &mut Checker<'_>)
where
    P::P<i64, i64>: Gen,
    P::P<i64, FunList<i64, bool, i64>>: TestEq,
{
    c.law("lemma/traverse-done", |rng, probes| {
        let k = <P::P<i64, i64>>::generate(rng);
        let t = i64::generate(rng);
        let lhs = P::dimap(
            crate::prelude::const_hom::<i64, FunList<i64, bool, i64>>(FunList::done(t)),
            id_hom::<FunList<i64, bool, i64>>(),
            P::traverse::<i64, i64, bool, i64>(k),
        );
        let rhs = P::dimap(
            id_hom::<i64>(),
            crate::prelude::const_hom::<i64, FunList<i64, bool, i64>>(FunList::done(t)),
            crate::optic::identity_transformer::<P, i64>(),
        );
        observe(&lhs, &rhs, rng, probes)
    });
}

/// Lemma: traversal of a singleton is a single application of the body:
/// `dimap single id (traverse k) = dimap id single k`.
pub fn lemma_traverse_single<P: FullProfunctor>(c: &mut Checker<'_>)
where
    P::P<i64, i64>: Gen,
    P::P<i64, FunList<i64, bool, bool>>: TestEq,
{
    c.law("lemma/traverse-single", |rng, probes| {
        let k = <P::P<i64, i64>>::generate(rng);
        let lhs = P::dimap(
            hom(crate::applicative::single::<i64, bool>),
            id_hom::<FunList<i64, bool, bool>>(),
            P::traverse::<i64, i64, bool, bool>(k.clone()),
        );
        let rhs = P::dimap(id_hom::<i64>(), hom(crate::applicative::single::<i64, bool>), k);
        observe(&lhs, &rhs, rng, probes)
    });
}
