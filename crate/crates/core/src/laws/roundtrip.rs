//! Round-trip equivalence checks between the concrete and profunctor
//! representations, for all four optic kinds.
//!
//! One direction recovers the concrete record from the optic and compares
//! fieldwise; the other rebuilds the optic from the recovered record and
//! compares behaviour at every qualifying registry entry on sampled
//! transformers.

use std::fmt::Debug;

use super::checks::Checker;
use super::observe::{observe, TestEq};
use super::report::{LawReport, SuiteConfig};
use super::sample::{Gen, Key, SampleRng};
use crate::applicative::{ConstF, OptionF, StateF};
use crate::concrete::{
    flatten, inorder_traversal, pi1, sign, the, whole, Adapter, AdapterF, Lens, LensF, Prism,
    PrismF, Traversal, TraversalF,
};
use crate::optic::{
    adapter_c2p, adapter_p2c, lens_c2p, lens_p2c, pi1_optic, prism_c2p, prism_p2c, the_optic,
    traversal_c2p, traversal_p2c, Optic,
};
use crate::prelude::Value;
use crate::profunctor::{Cartesian, Cocartesian, FnArrow, FullProfunctor, Profunctor, UpStarF};

type StateI = StateF<i64>;
type ConstL = ConstF<Vec<String>>;

/// Everything the entry glue needs of a ground type.
pub trait Ground: Value + Gen + Key + TestEq + Debug {}
impl<T: Value + Gen + Key + TestEq + Debug> Ground for T {}

pub fn agree_profunctor<P, O1, O2>(
    o1: &O1,
    o2: &O2,
    rng: &mut SampleRng,
    probes: usize,
) -> Result<(), String>
where
    P: Profunctor,
    O1: Optic,
    O2: Optic<A = O1::A, B = O1::B, S = O1::S, T = O1::T>,
    P::P<O1::A, O1::B>: Gen,
    P::P<O1::S, O1::T>: TestEq,
{
    let k = <P::P<O1::A, O1::B>>::generate(rng);
    let lhs = o1.apply_profunctor::<P>(k.clone()).map_err(|e| e.to_string())?;
    let rhs = o2.apply_profunctor::<P>(k).map_err(|e| e.to_string())?;
    observe(&lhs, &rhs, rng, probes)
}

pub fn agree_cartesian<P, O1, O2>(
    o1: &O1,
    o2: &O2,
    rng: &mut SampleRng,
    probes: usize,
) -> Result<(), String>
where
    P: Cartesian,
    O1: Optic,
    O2: Optic<A = O1::A, B = O1::B, S = O1::S, T = O1::T>,
    P::P<O1::A, O1::B>: Gen,
    P::P<O1::S, O1::T>: TestEq,
{
    let k = <P::P<O1::A, O1::B>>::generate(rng);
    let lhs = o1.apply_cartesian::<P>(k.clone()).map_err(|e| e.to_string())?;
    let rhs = o2.apply_cartesian::<P>(k).map_err(|e| e.to_string())?;
    observe(&lhs, &rhs, rng, probes)
}

pub fn agree_cocartesian<P, O1, O2>(
    o1: &O1,
    o2: &O2,
    rng: &mut SampleRng,
    probes: usize,
) -> Result<(), String>
where
    P: Cocartesian,
    O1: Optic,
    O2: Optic<A = O1::A, B = O1::B, S = O1::S, T = O1::T>,
    P::P<O1::A, O1::B>: Gen,
    P::P<O1::S, O1::T>: TestEq,
{
    let k = <P::P<O1::A, O1::B>>::generate(rng);
    let lhs = o1
        .apply_cocartesian::<P>(k.clone())
        .map_err(|e| e.to_string())?;
    let rhs = o2.apply_cocartesian::<P>(k).map_err(|e| e.to_string())?;
    observe(&lhs, &rhs, rng, probes)
}

pub fn agree_full<P, O1, O2>(
    o1: &O1,
    o2: &O2,
    rng: &mut SampleRng,
    probes: usize,
) -> Result<(), String>
where
    P: FullProfunctor,
    O1: Optic,
    O2: Optic<A = O1::A, B = O1::B, S = O1::S, T = O1::T>,
    P::P<O1::A, O1::B>: Gen,
    P::P<O1::S, O1::T>: TestEq,
{
    let k = <P::P<O1::A, O1::B>>::generate(rng);
    let lhs = o1.apply_full::<P>(k.clone()).map_err(|e| e.to_string())?;
    let rhs = o2.apply_full::<P>(k).map_err(|e| e.to_string())?;
    observe(&lhs, &rhs, rng, probes)
}

fn check_at(
    out: &mut Vec<LawReport>,
    cfg: &SuiteConfig,
    instance: &'static str,
    law: &str,
    body: impl FnMut(&mut SampleRng, usize) -> Result<(), String>,
) {
    let mut c = Checker::new(instance, cfg);
    c.law(law, body);
    out.append(&mut c.reports);
}

fn check_once_at(
    out: &mut Vec<LawReport>,
    cfg: &SuiteConfig,
    instance: &'static str,
    law: &str,
    body: impl FnMut(&mut SampleRng, usize) -> Result<(), String>,
) {
    let mut c = Checker::new(instance, cfg);
    c.law_once(law, body);
    out.append(&mut c.reports);
}

// ---------------------------------------------------------------------------
// P2C of C2P: recover the record from its own optic and compare fieldwise.

pub fn p2c_c2p_adapter<A: Ground, B: Ground, S: Ground, T: Ground>(
    name: &str,
    record: &Adapter<A, B, S, T>,
    cfg: &SuiteConfig,
    out: &mut Vec<LawReport>,
) {
    let law = format!("roundtrip/adapter/p2c-of-c2p/{name}");
    let record = record.clone();
    check_once_at(out, cfg, "adapter", &law, move |rng, probes| {
        let back = adapter_p2c(&adapter_c2p(record.clone())).map_err(|e| e.to_string())?;
        observe(&back, &record, rng, probes)
    });
}

pub fn p2c_c2p_lens<A: Ground, B: Ground, S: Ground, T: Ground>(
    name: &str,
    record: &Lens<A, B, S, T>,
    cfg: &SuiteConfig,
    out: &mut Vec<LawReport>,
) {
    let law = format!("roundtrip/lens/p2c-of-c2p/{name}");
    let record = record.clone();
    check_once_at(out, cfg, "lens", &law, move |rng, probes| {
        let back = lens_p2c(&lens_c2p(record.clone())).map_err(|e| e.to_string())?;
        observe(&back, &record, rng, probes)
    });
}

pub fn p2c_c2p_prism<A: Ground, B: Ground, S: Ground, T: Ground>(
    name: &str,
    record: &Prism<A, B, S, T>,
    cfg: &SuiteConfig,
    out: &mut Vec<LawReport>,
) {
    let law = format!("roundtrip/prism/p2c-of-c2p/{name}");
    let record = record.clone();
    check_once_at(out, cfg, "prism", &law, move |rng, probes| {
        let back = prism_p2c(&prism_c2p(record.clone())).map_err(|e| e.to_string())?;
        observe(&back, &record, rng, probes)
    });
}

pub fn p2c_c2p_traversal<A: Ground, B: Ground, S: Ground, T: Ground>(
    name: &str,
    record: &Traversal<A, B, S, T>,
    cfg: &SuiteConfig,
    out: &mut Vec<LawReport>,
) {
    let law = format!("roundtrip/traversal/p2c-of-c2p/{name}");
    let record = record.clone();
    check_once_at(out, cfg, "traversal", &law, move |rng, probes| {
        let back = traversal_p2c(&traversal_c2p(record.clone())).map_err(|e| e.to_string())?;
        observe(&back, &record, rng, probes)
    });
}

// ---------------------------------------------------------------------------
// C2P of P2C: rebuild the optic from its recovered record and compare at
// every qualifying registry entry.

pub fn c2p_p2c_adapter_kind<O>(name: &str, optic: &O, cfg: &SuiteConfig, out: &mut Vec<LawReport>)
where
    O: Optic,
    O::A: Ground,
    O::B: Ground,
    O::S: Ground,
    O::T: Ground,
    crate::prelude::Sum<O::B, O::A>: Gen,
{
    let law = format!("roundtrip/adapter/c2p-of-p2c/{name}");
    let rebuilt = match adapter_p2c(optic) {
        Ok(rec) => adapter_c2p(rec),
        Err(e) => {
            check_once_at(out, cfg, "adapter", &law, move |_, _| Err(e.to_string()));
            return;
        }
    };
    check_at(out, cfg, "function arrow", &law, |rng, probes| {
        agree_full::<FnArrow, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar option", &law, |rng, probes| {
        agree_full::<UpStarF<OptionF>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar state", &law, |rng, probes| {
        agree_full::<UpStarF<StateI>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar const", &law, |rng, probes| {
        agree_full::<UpStarF<ConstL>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "adapter", &law, |rng, probes| {
        agree_profunctor::<AdapterF<O::A, O::B>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "lens", &law, |rng, probes| {
        agree_cartesian::<LensF<O::A, O::B>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "prism", &law, |rng, probes| {
        agree_cocartesian::<PrismF<O::A, O::B>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "traversal", &law, |rng, probes| {
        agree_full::<TraversalF<O::A, O::B>, _, _>(optic, &rebuilt, rng, probes)
    });
}

pub fn c2p_p2c_lens_kind<O>(name: &str, optic: &O, cfg: &SuiteConfig, out: &mut Vec<LawReport>)
where
    O: Optic,
    O::A: Ground,
    O::B: Ground,
    O::S: Ground,
    O::T: Ground,
{
    let law = format!("roundtrip/lens/c2p-of-p2c/{name}");
    let rebuilt = match lens_p2c(optic) {
        Ok(rec) => lens_c2p(rec),
        Err(e) => {
            check_once_at(out, cfg, "lens", &law, move |_, _| Err(e.to_string()));
            return;
        }
    };
    check_at(out, cfg, "function arrow", &law, |rng, probes| {
        agree_full::<FnArrow, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar option", &law, |rng, probes| {
        agree_full::<UpStarF<OptionF>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar state", &law, |rng, probes| {
        agree_full::<UpStarF<StateI>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar const", &law, |rng, probes| {
        agree_full::<UpStarF<ConstL>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "lens", &law, |rng, probes| {
        agree_cartesian::<LensF<O::A, O::B>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "traversal", &law, |rng, probes| {
        agree_full::<TraversalF<O::A, O::B>, _, _>(optic, &rebuilt, rng, probes)
    });
}

pub fn c2p_p2c_prism_kind<O>(name: &str, optic: &O, cfg: &SuiteConfig, out: &mut Vec<LawReport>)
where
    O: Optic,
    O::A: Ground,
    O::B: Ground,
    O::S: Ground,
    O::T: Ground,
    crate::prelude::Sum<O::B, O::A>: Gen,
{
    let law = format!("roundtrip/prism/c2p-of-p2c/{name}");
    let rebuilt = match prism_p2c(optic) {
        Ok(rec) => prism_c2p(rec),
        Err(e) => {
            check_once_at(out, cfg, "prism", &law, move |_, _| Err(e.to_string()));
            return;
        }
    };
    check_at(out, cfg, "function arrow", &law, |rng, probes| {
        agree_full::<FnArrow, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar option", &law, |rng, probes| {
        agree_full::<UpStarF<OptionF>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar state", &law, |rng, probes| {
        agree_full::<UpStarF<StateI>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar const", &law, |rng, probes| {
        agree_full::<UpStarF<ConstL>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "prism", &law, |rng, probes| {
        agree_cocartesian::<PrismF<O::A, O::B>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "traversal", &law, |rng, probes| {
        agree_full::<TraversalF<O::A, O::B>, _, _>(optic, &rebuilt, rng, probes)
    });
}

pub fn c2p_p2c_traversal_kind<O>(
    name: &str,
    optic: &O,
    cfg: &SuiteConfig,
    out: &mut Vec<LawReport>,
) where
    O: Optic,
    O::A: Ground,
    O::B: Ground,
    O::S: Ground,
    O::T: Ground,
{
    let law = format!("roundtrip/traversal/c2p-of-p2c/{name}");
    let rebuilt = match traversal_p2c(optic) {
        Ok(rec) => traversal_c2p(rec),
        Err(e) => {
            check_once_at(out, cfg, "traversal", &law, move |_, _| Err(e.to_string()));
            return;
        }
    };
    check_at(out, cfg, "function arrow", &law, |rng, probes| {
        agree_full::<FnArrow, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar option", &law, |rng, probes| {
        agree_full::<UpStarF<OptionF>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar state", &law, |rng, probes| {
        agree_full::<UpStarF<StateI>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "upstar const", &law, |rng, probes| {
        agree_full::<UpStarF<ConstL>, _, _>(optic, &rebuilt, rng, probes)
    });
    check_at(out, cfg, "traversal", &law, |rng, probes| {
        agree_full::<TraversalF<O::A, O::B>, _, _>(optic, &rebuilt, rng, probes)
    });
}

/// The whole round-trip battery: the worked example optics, randomly
/// generated concrete optics of each kind, and the formula-defined optics
/// against their conversion-built counterparts.
pub fn all(cfg: &SuiteConfig) -> Vec<LawReport> {
    let mut out = Vec::new();
    let randoms = 100;

    // Adapters.
    let fl = flatten::<i64, bool, String, i64, bool, String>();
    p2c_c2p_adapter("flatten", &fl, cfg, &mut out);
    check_once_at(
        &mut out,
        cfg,
        "adapter",
        "roundtrip/adapter/p2c-of-c2p/random",
        |rng, probes| {
            for _ in 0..randoms {
                let rec = Adapter::<i64, i64, (i64, bool), (i64, bool)>::generate(rng);
                let back = adapter_p2c(&adapter_c2p(rec.clone())).map_err(|e| e.to_string())?;
                observe(&back, &rec, rng, probes / 10 + 1)?;
            }
            Ok(())
        },
    );
    c2p_p2c_adapter_kind("flatten", &adapter_c2p(fl), cfg, &mut out);
    check_at(
        &mut out,
        cfg,
        "function arrow",
        "roundtrip/adapter/c2p-of-p2c/random",
        |rng, probes| {
            let optic = adapter_c2p(Adapter::<i64, i64, (i64, bool), (i64, bool)>::generate(rng));
            let rebuilt = adapter_c2p(adapter_p2c(&optic).map_err(|e| e.to_string())?);
            agree_full::<FnArrow, _, _>(&optic, &rebuilt, rng, probes)
        },
    );
    check_at(
        &mut out,
        cfg,
        "adapter",
        "roundtrip/adapter/c2p-of-p2c/random",
        |rng, probes| {
            let optic = adapter_c2p(Adapter::<i64, i64, (i64, bool), (i64, bool)>::generate(rng));
            let rebuilt = adapter_c2p(adapter_p2c(&optic).map_err(|e| e.to_string())?);
            agree_profunctor::<AdapterF<i64, i64>, _, _>(&optic, &rebuilt, rng, probes)
        },
    );

    // Lenses.
    p2c_c2p_lens("pi1", &pi1::<i64, i64, bool>(), cfg, &mut out);
    p2c_c2p_lens("sign", &sign(), cfg, &mut out);
    check_once_at(
        &mut out,
        cfg,
        "lens",
        "roundtrip/lens/p2c-of-c2p/random",
        |rng, probes| {
            for _ in 0..randoms {
                let rec = Lens::<i64, i64, (i64, bool), (i64, bool)>::generate(rng);
                let back = lens_p2c(&lens_c2p(rec.clone())).map_err(|e| e.to_string())?;
                observe(&back, &rec, rng, probes / 10 + 1)?;
            }
            Ok(())
        },
    );
    c2p_p2c_lens_kind("pi1", &lens_c2p(pi1::<i64, i64, bool>()), cfg, &mut out);
    check_at(
        &mut out,
        cfg,
        "function arrow",
        "roundtrip/lens/c2p-of-p2c/random",
        |rng, probes| {
            let optic = lens_c2p(Lens::<i64, i64, (i64, bool), (i64, bool)>::generate(rng));
            let rebuilt = lens_c2p(lens_p2c(&optic).map_err(|e| e.to_string())?);
            agree_full::<FnArrow, _, _>(&optic, &rebuilt, rng, probes)
        },
    );
    check_at(
        &mut out,
        cfg,
        "lens",
        "roundtrip/lens/c2p-of-p2c/random",
        |rng, probes| {
            let optic = lens_c2p(Lens::<i64, i64, (i64, bool), (i64, bool)>::generate(rng));
            let rebuilt = lens_c2p(lens_p2c(&optic).map_err(|e| e.to_string())?);
            agree_cartesian::<LensF<i64, i64>, _, _>(&optic, &rebuilt, rng, probes)
        },
    );
    c2p_p2c_lens_kind("sign", &lens_c2p(sign()), cfg, &mut out);
    c2p_p2c_lens_kind("pi1-formula", &pi1_optic::<i64, i64, bool>(), cfg, &mut out);

    // Prisms.
    p2c_c2p_prism("the", &the::<i64, i64>(), cfg, &mut out);
    p2c_c2p_prism("whole", &whole(), cfg, &mut out);
    check_once_at(
        &mut out,
        cfg,
        "prism",
        "roundtrip/prism/p2c-of-c2p/random",
        |rng, probes| {
            for _ in 0..randoms {
                let rec = Prism::<i64, i64, i64, i64>::generate(rng);
                let back = prism_p2c(&prism_c2p(rec.clone())).map_err(|e| e.to_string())?;
                observe(&back, &rec, rng, probes / 10 + 1)?;
            }
            Ok(())
        },
    );
    c2p_p2c_prism_kind("the", &prism_c2p(the::<i64, i64>()), cfg, &mut out);
    check_at(
        &mut out,
        cfg,
        "function arrow",
        "roundtrip/prism/c2p-of-p2c/random",
        |rng, probes| {
            let optic = prism_c2p(Prism::<i64, i64, i64, i64>::generate(rng));
            let rebuilt = prism_c2p(prism_p2c(&optic).map_err(|e| e.to_string())?);
            agree_full::<FnArrow, _, _>(&optic, &rebuilt, rng, probes)
        },
    );
    check_at(
        &mut out,
        cfg,
        "prism",
        "roundtrip/prism/c2p-of-p2c/random",
        |rng, probes| {
            let optic = prism_c2p(Prism::<i64, i64, i64, i64>::generate(rng));
            let rebuilt = prism_c2p(prism_p2c(&optic).map_err(|e| e.to_string())?);
            agree_cocartesian::<PrismF<i64, i64>, _, _>(&optic, &rebuilt, rng, probes)
        },
    );
    c2p_p2c_prism_kind("whole", &prism_c2p(whole()), cfg, &mut out);
    c2p_p2c_prism_kind("the-formula", &the_optic::<i64, i64>(), cfg, &mut out);

    // Traversals.
    p2c_c2p_traversal("inorder", &inorder_traversal::<i64, i64>(), cfg, &mut out);
    check_once_at(
        &mut out,
        cfg,
        "traversal",
        "roundtrip/traversal/p2c-of-c2p/random",
        |rng, probes| {
            for _ in 0..randoms {
                let rec = Traversal::<i64, i64, i64, i64>::generate(rng);
                let back =
                    traversal_p2c(&traversal_c2p(rec.clone())).map_err(|e| e.to_string())?;
                observe(&back, &rec, rng, probes / 10 + 1)?;
            }
            Ok(())
        },
    );
    c2p_p2c_traversal_kind(
        "inorder",
        &traversal_c2p(inorder_traversal::<i64, i64>()),
        cfg,
        &mut out,
    );
    check_at(
        &mut out,
        cfg,
        "traversal",
        "roundtrip/traversal/c2p-of-p2c/random",
        |rng, probes| {
            let rec = Traversal::<i64, i64, i64, i64>::generate(rng);
            let optic = traversal_c2p(rec);
            let rebuilt = traversal_c2p(traversal_p2c(&optic).map_err(|e| e.to_string())?);
            agree_full::<TraversalF<i64, i64>, _, _>(&optic, &rebuilt, rng, probes)
        },
    );
    check_at(
        &mut out,
        cfg,
        "function arrow",
        "roundtrip/traversal/c2p-of-p2c/random",
        |rng, probes| {
            let optic = traversal_c2p(Traversal::<i64, i64, i64, i64>::generate(rng));
            let rebuilt = traversal_c2p(traversal_p2c(&optic).map_err(|e| e.to_string())?);
            agree_full::<FnArrow, _, _>(&optic, &rebuilt, rng, probes)
        },
    );

    // The formula-defined optics agree with their conversion-built
    // counterparts at every cartesian (resp. cocartesian) entry.
    let formula = pi1_optic::<i64, i64, bool>();
    let converted = lens_c2p(pi1::<i64, i64, bool>());
    check_at(&mut out, cfg, "function arrow", "derived/pi1-formula", |rng, probes| {
        agree_full::<FnArrow, _, _>(&formula, &converted, rng, probes)
    });
    check_at(&mut out, cfg, "upstar option", "derived/pi1-formula", |rng, probes| {
        agree_full::<UpStarF<OptionF>, _, _>(&formula, &converted, rng, probes)
    });
    check_at(&mut out, cfg, "upstar state", "derived/pi1-formula", |rng, probes| {
        agree_full::<UpStarF<StateI>, _, _>(&formula, &converted, rng, probes)
    });
    check_at(&mut out, cfg, "upstar const", "derived/pi1-formula", |rng, probes| {
        agree_full::<UpStarF<ConstL>, _, _>(&formula, &converted, rng, probes)
    });
    check_at(&mut out, cfg, "lens", "derived/pi1-formula", |rng, probes| {
        agree_cartesian::<LensF<i64, i64>, _, _>(&formula, &converted, rng, probes)
    });
    check_at(&mut out, cfg, "traversal", "derived/pi1-formula", |rng, probes| {
        agree_full::<TraversalF<i64, i64>, _, _>(&formula, &converted, rng, probes)
    });
    let formula = the_optic::<i64, i64>();
    let converted = prism_c2p(the::<i64, i64>());
    check_at(&mut out, cfg, "function arrow", "derived/the-formula", |rng, probes| {
        agree_full::<FnArrow, _, _>(&formula, &converted, rng, probes)
    });
    check_at(&mut out, cfg, "upstar option", "derived/the-formula", |rng, probes| {
        agree_full::<UpStarF<OptionF>, _, _>(&formula, &converted, rng, probes)
    });
    check_at(&mut out, cfg, "upstar state", "derived/the-formula", |rng, probes| {
        agree_full::<UpStarF<StateI>, _, _>(&formula, &converted, rng, probes)
    });
    check_at(&mut out, cfg, "upstar const", "derived/the-formula", |rng, probes| {
        agree_full::<UpStarF<ConstL>, _, _>(&formula, &converted, rng, probes)
    });
    check_at(&mut out, cfg, "prism", "derived/the-formula", |rng, probes| {
        agree_cocartesian::<PrismF<i64, i64>, _, _>(&formula, &converted, rng, probes)
    });
    check_at(&mut out, cfg, "traversal", "derived/the-formula", |rng, probes| {
        agree_full::<TraversalF<i64, i64>, _, _>(&formula, &converted, rng, probes)
    });

    out
}
