//! The instance registry and suite runners.
//!
//! Each entry names an instance family, states the capabilities it
//! provides, and wires the applicable law groups to that family at the
//! project's ground types.

use super::checks::{
    cartesian_laws, cocartesian_laws, lemma_first_discard, lemma_right_collapse,
    lemma_traverse_done, lemma_traverse_single, monoidal_laws, profunctor_laws,
    traverse_unroll_law, Checker,
};
use super::report::{LawReport, SuiteConfig};
use super::{lemmas, morphism, roundtrip};
use crate::applicative::{ConstF, OptionF, StateF};
use crate::concrete::{AdapterF, LensF, PrismF, TraversalF};
use crate::optic::CapSet;
use crate::profunctor::{FnArrow, UpStarF};

type StateI = StateF<i64>;
type ConstL = ConstF<Vec<String>>;

/// A row of the registry: the entry's name and what it provides.
#[derive(Clone, Copy, Debug)]
pub struct EntryInfo {
    pub name: &'static str,
    pub provides: CapSet,
}

/// The default registry, in the order the suite runs it.
pub fn entries() -> Vec<EntryInfo> {
    vec![
        EntryInfo { name: "function arrow", provides: CapSet::FULL },
        EntryInfo { name: "upstar option", provides: CapSet::FULL },
        EntryInfo { name: "upstar state", provides: CapSet::FULL },
        EntryInfo { name: "upstar const", provides: CapSet::FULL },
        EntryInfo { name: "adapter", provides: CapSet::NONE },
        EntryInfo { name: "lens", provides: CapSet::CARTESIAN },
        EntryInfo { name: "prism", provides: CapSet::COCARTESIAN },
        EntryInfo { name: "traversal", provides: CapSet::FULL },
    ]
}

fn full_entry_laws<P>(name: &'static str, cfg: &SuiteConfig) -> Vec<LawReport>
where
    P: crate::profunctor::FullProfunctor,
    P::P<i64, i64>: super::sample::Gen + super::observe::TestEq,
    P::P<(i64, ()), (i64, ())>: super::observe::TestEq,
    P::P<(i64, (bool, String)), (i64, (bool, String))>: super::observe::TestEq,
    P::P<((), i64), ((), i64)>: super::observe::TestEq,
    P::P<((String, bool), i64), ((String, bool), i64)>: super::observe::TestEq,
    P::P<(bool, i64), (bool, i64)>: super::observe::TestEq,
    P::P<crate::prelude::Sum<i64, crate::prelude::Void>, crate::prelude::Sum<i64, crate::prelude::Void>>:
        super::observe::TestEq,
    P::P<
        crate::prelude::Sum<i64, crate::prelude::Sum<bool, String>>,
        crate::prelude::Sum<i64, crate::prelude::Sum<bool, String>>,
    >: super::observe::TestEq,
    P::P<crate::prelude::Sum<crate::prelude::Void, i64>, crate::prelude::Sum<crate::prelude::Void, i64>>:
        super::observe::TestEq,
    P::P<
        crate::prelude::Sum<crate::prelude::Sum<String, bool>, i64>,
        crate::prelude::Sum<crate::prelude::Sum<String, bool>, i64>,
    >: super::observe::TestEq,
    P::P<crate::prelude::Sum<bool, i64>, crate::prelude::Sum<bool, i64>>: super::observe::TestEq,
    P::P<(i64, (i64, i64)), (i64, (i64, i64))>: super::observe::TestEq,
    P::P<
        crate::applicative::FunList<i64, bool, i64>,
        crate::applicative::FunList<i64, bool, i64>,
    >: super::observe::TestEq,
    P::P<i64, crate::applicative::FunList<i64, bool, i64>>: super::observe::TestEq,
    P::P<i64, crate::applicative::FunList<i64, bool, bool>>: super::observe::TestEq,
{
    let mut c = Checker::new(name, cfg);
    profunctor_laws::<P>(&mut c);
    cartesian_laws::<P>(&mut c);
    cocartesian_laws::<P>(&mut c);
    monoidal_laws::<P>(&mut c);
    traverse_unroll_law::<P>(&mut c);
    lemma_first_discard::<P>(&mut c);
    lemma_right_collapse::<P>(&mut c);
    lemma_traverse_done::<P>(&mut c);
    lemma_traverse_single::<P>(&mut c);
    c.reports
}

/// The coherence and lemma checks for every registry entry.
pub fn run_entry_laws(cfg: &SuiteConfig) -> Vec<LawReport> {
    let mut out = Vec::new();

    out.extend(full_entry_laws::<FnArrow>("function arrow", cfg));
    out.extend(full_entry_laws::<UpStarF<OptionF>>("upstar option", cfg));
    out.extend(full_entry_laws::<UpStarF<StateI>>("upstar state", cfg));
    out.extend(full_entry_laws::<UpStarF<ConstL>>("upstar const", cfg));
    out.extend(full_entry_laws::<TraversalF<i64, i64>>("traversal", cfg));

    let mut c = Checker::new("adapter", cfg);
    profunctor_laws::<AdapterF<i64, i64>>(&mut c);
    out.append(&mut c.reports);

    let mut c = Checker::new("lens", cfg);
    profunctor_laws::<LensF<i64, i64>>(&mut c);
    cartesian_laws::<LensF<i64, i64>>(&mut c);
    lemma_first_discard::<LensF<i64, i64>>(&mut c);
    out.append(&mut c.reports);

    let mut c = Checker::new("prism", cfg);
    profunctor_laws::<PrismF<i64, i64>>(&mut c);
    cocartesian_laws::<PrismF<i64, i64>>(&mut c);
    lemma_right_collapse::<PrismF<i64, i64>>(&mut c);
    out.append(&mut c.reports);

    out
}

/// Laws, round trips, lemmas, and morphism checks over the default
/// registry. Zero failures expected.
pub fn run_core_suite(cfg: &SuiteConfig) -> Vec<LawReport> {
    let mut out = Vec::new();
    out.extend(run_entry_laws(cfg));
    out.extend(roundtrip::all(cfg));
    out.extend(lemmas::all(cfg));
    out.extend(morphism::all(cfg));
    out
}
