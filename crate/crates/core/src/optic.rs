//! Optics as mappings between transformers.
//!
//! An optic lifts a transformer on a part, `P<A, B>`, to a transformer on
//! the whole, `P<S, T>`, uniformly in the instance family `P`. Each optic
//! carries the set of capabilities it demands of `P`; composition is plain
//! composition of the mappings and takes the union of the requirements.
//!
//! Application is offered at four instance strengths (bare profunctor,
//! cartesian, co-cartesian, and the full bundle). Applying an optic at an
//! instance that lacks a required capability is reported as a dispatch
//! error naming what is missing.

use std::fmt;
use std::marker::PhantomData;

use crate::applicative::{fuse, Applicative};
use crate::concrete::{
    inorder_traversal, Adapter, AdapterF, Lens, LensF, Prism, PrismF, Traversal, TraversalF,
    Tree,
};
use crate::prelude::{
    cross, either_elim, fork, fst, hom, id_hom, lunit, lunit_inv, maybe_elim, snd, Hom, Sum,
    Value,
};
use crate::profunctor::{
    Cartesian, Cocartesian, FnArrow, FullProfunctor, Monoidal, Profunctor, UpStar, UpStarF,
};

/// A set of profunctor refinements. The empty set is the bare profunctor
/// interface, which every instance supplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CapSet(u8);

impl CapSet {
    pub const NONE: CapSet = CapSet(0);
    pub const CARTESIAN: CapSet = CapSet(1);
    pub const COCARTESIAN: CapSet = CapSet(2);
    pub const MONOIDAL: CapSet = CapSet(4);
    pub const FULL: CapSet = CapSet(7);

    pub fn union(self, other: CapSet) -> CapSet {
        CapSet(self.0 | other.0)
    }

    /// Does `self` provide everything in `needed`?
    pub fn contains(self, needed: CapSet) -> bool {
        self.0 & needed.0 == needed.0
    }

    pub fn difference(self, other: CapSet) -> CapSet {
        CapSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for CapSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "profunctor");
        }
        let mut names = Vec::new();
        if self.contains(CapSet::CARTESIAN) {
            names.push("cartesian");
        }
        if self.contains(CapSet::COCARTESIAN) {
            names.push("cocartesian");
        }
        if self.contains(CapSet::MONOIDAL) {
            names.push("monoidal");
        }
        write!(f, "{}", names.join("+"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OpticError {
    #[error("optic requires {required} but was applied at an instance providing {available}; missing {missing}")]
    MissingCapability {
        required: CapSet,
        available: CapSet,
        missing: CapSet,
    },
}

impl OpticError {
    fn missing(required: CapSet, available: CapSet) -> Self {
        OpticError::MissingCapability {
            required,
            available,
            missing: required.difference(available),
        }
    }
}

/// A data accessor: a capability-tagged mapping from part transformers to
/// whole transformers.
///
/// The four `apply_*` entry points correspond to how much of the hierarchy
/// the chosen instance family offers. Implementors override the entry
/// points their requirement can actually use; the defaults route weaker
/// requirements downward and reject anything else.
pub trait Optic {
    type A: Value;
    type B: Value;
    type S: Value;
    type T: Value;

    /// The capability this optic demands of an instance family.
    fn required(&self) -> CapSet;

    fn apply_profunctor<P: Profunctor>(
        &self,
        h: P::P<Self::A, Self::B>,
    ) -> Result<P::P<Self::S, Self::T>, OpticError> {
        let _ = h;
        Err(OpticError::missing(self.required(), CapSet::NONE))
    }

    fn apply_cartesian<P: Cartesian>(
        &self,
        h: P::P<Self::A, Self::B>,
    ) -> Result<P::P<Self::S, Self::T>, OpticError> {
        if self.required().is_empty() {
            self.apply_profunctor::<P>(h)
        } else {
            Err(OpticError::missing(self.required(), CapSet::CARTESIAN))
        }
    }

    fn apply_cocartesian<P: Cocartesian>(
        &self,
        h: P::P<Self::A, Self::B>,
    ) -> Result<P::P<Self::S, Self::T>, OpticError> {
        if self.required().is_empty() {
            self.apply_profunctor::<P>(h)
        } else {
            Err(OpticError::missing(self.required(), CapSet::COCARTESIAN))
        }
    }

    fn apply_full<P: FullProfunctor>(
        &self,
        h: P::P<Self::A, Self::B>,
    ) -> Result<P::P<Self::S, Self::T>, OpticError> {
        let required = self.required();
        if CapSet::CARTESIAN.contains(required) {
            self.apply_cartesian::<P>(h)
        } else if CapSet::COCARTESIAN.contains(required) {
            self.apply_cocartesian::<P>(h)
        } else {
            Err(OpticError::missing(required, CapSet::FULL))
        }
    }
}

/// The do-nothing optic.
pub struct IdentityOptic<A, B>(PhantomData<(A, B)>);

impl<A, B> Clone for IdentityOptic<A, B> {
    fn clone(&self) -> Self {
        IdentityOptic(PhantomData)
    }
}

pub fn identity_optic<A: Value, B: Value>() -> IdentityOptic<A, B> {
    IdentityOptic(PhantomData)
}

impl<A: Value, B: Value> Optic for IdentityOptic<A, B> {
    type A = A;
    type B = B;
    type S = A;
    type T = B;

    fn required(&self) -> CapSet {
        CapSet::NONE
    }

    fn apply_profunctor<P: Profunctor>(&self, h: P::P<A, B>) -> Result<P::P<A, B>, OpticError> {
        Ok(h)
    }
}

/// Composition of two optics, inner (part side) first.
pub struct Composed<O1, O2> {
    inner: O1,
    outer: O2,
}

impl<O1: Clone, O2: Clone> Clone for Composed<O1, O2> {
    fn clone(&self) -> Self {
        Composed {
            inner: self.inner.clone(),
            outer: self.outer.clone(),
        }
    }
}

/// Composes `inner` (acting nearer the focus) with `outer` (acting nearer
/// the whole). The result demands the union of the two capability sets.
pub fn compose<O1, O2>(inner: O1, outer: O2) -> Composed<O1, O2>
where
    O1: Optic,
    O2: Optic<A = O1::S, B = O1::T>,
{
    Composed { inner, outer }
}

impl<O1, O2> Optic for Composed<O1, O2>
where
    O1: Optic,
    O2: Optic<A = O1::S, B = O1::T>,
{
    type A = O1::A;
    type B = O1::B;
    type S = O2::S;
    type T = O2::T;

    fn required(&self) -> CapSet {
        self.inner.required().union(self.outer.required())
    }

    fn apply_profunctor<P: Profunctor>(
        &self,
        h: P::P<Self::A, Self::B>,
    ) -> Result<P::P<Self::S, Self::T>, OpticError> {
        self.outer
            .apply_profunctor::<P>(self.inner.apply_profunctor::<P>(h)?)
    }

    fn apply_cartesian<P: Cartesian>(
        &self,
        h: P::P<Self::A, Self::B>,
    ) -> Result<P::P<Self::S, Self::T>, OpticError> {
        self.outer
            .apply_cartesian::<P>(self.inner.apply_cartesian::<P>(h)?)
    }

    fn apply_cocartesian<P: Cocartesian>(
        &self,
        h: P::P<Self::A, Self::B>,
    ) -> Result<P::P<Self::S, Self::T>, OpticError> {
        self.outer
            .apply_cocartesian::<P>(self.inner.apply_cocartesian::<P>(h)?)
    }

    fn apply_full<P: FullProfunctor>(
        &self,
        h: P::P<Self::A, Self::B>,
    ) -> Result<P::P<Self::S, Self::T>, OpticError> {
        self.outer.apply_full::<P>(self.inner.apply_full::<P>(h)?)
    }
}

/// A concrete adapter as an optic: `dimap from to`.
pub struct AdapterOptic<A, B, S, T> {
    adapter: Adapter<A, B, S, T>,
}

impl<A, B, S, T> Clone for AdapterOptic<A, B, S, T> {
    fn clone(&self) -> Self {
        AdapterOptic {
            adapter: self.adapter.clone(),
        }
    }
}

pub fn adapter_c2p<A: Value, B: Value, S: Value, T: Value>(
    adapter: Adapter<A, B, S, T>,
) -> AdapterOptic<A, B, S, T> {
    AdapterOptic { adapter }
}

impl<A: Value, B: Value, S: Value, T: Value> Optic for AdapterOptic<A, B, S, T> {
    type A = A;
    type B = B;
    type S = S;
    type T = T;

    fn required(&self) -> CapSet {
        CapSet::NONE
    }

    fn apply_profunctor<P: Profunctor>(&self, h: P::P<A, B>) -> Result<P::P<S, T>, OpticError> {
        Ok(P::dimap(
            self.adapter.from.clone(),
            self.adapter.to.clone(),
            h,
        ))
    }
}

/// A concrete lens as an optic: `dimap (fork view id) update . first`.
pub struct LensOptic<A, B, S, T> {
    lens: Lens<A, B, S, T>,
}

impl<A, B, S, T> Clone for LensOptic<A, B, S, T> {
    fn clone(&self) -> Self {
        LensOptic {
            lens: self.lens.clone(),
        }
    }
}

pub fn lens_c2p<A: Value, B: Value, S: Value, T: Value>(
    lens: Lens<A, B, S, T>,
) -> LensOptic<A, B, S, T> {
    LensOptic { lens }
}

impl<A: Value, B: Value, S: Value, T: Value> Optic for LensOptic<A, B, S, T> {
    type A = A;
    type B = B;
    type S = S;
    type T = T;

    fn required(&self) -> CapSet {
        CapSet::CARTESIAN
    }

    fn apply_cartesian<P: Cartesian>(&self, h: P::P<A, B>) -> Result<P::P<S, T>, OpticError> {
        let lifted = P::first::<A, B, S>(h);
        Ok(P::dimap(
            fork(self.lens.view.clone(), id_hom::<S>()),
            self.lens.update.clone(),
            lifted,
        ))
    }
}

/// A concrete prism as an optic: `dimap match (either id build) . right`.
pub struct PrismOptic<A, B, S, T> {
    prism: Prism<A, B, S, T>,
}

impl<A, B, S, T> Clone for PrismOptic<A, B, S, T> {
    fn clone(&self) -> Self {
        PrismOptic {
            prism: self.prism.clone(),
        }
    }
}

pub fn prism_c2p<A: Value, B: Value, S: Value, T: Value>(
    prism: Prism<A, B, S, T>,
) -> PrismOptic<A, B, S, T> {
    PrismOptic { prism }
}

impl<A: Value, B: Value, S: Value, T: Value> Optic for PrismOptic<A, B, S, T> {
    type A = A;
    type B = B;
    type S = S;
    type T = T;

    fn required(&self) -> CapSet {
        CapSet::COCARTESIAN
    }

    fn apply_cocartesian<P: Cocartesian>(&self, h: P::P<A, B>) -> Result<P::P<S, T>, OpticError> {
        let lifted = P::right::<A, B, T>(h);
        Ok(P::dimap(
            self.prism.match_.clone(),
            either_elim(id_hom::<T>(), self.prism.build.clone()),
            lifted,
        ))
    }
}

/// A concrete traversal as an optic: `dimap extract fuse . traverse`.
pub struct TraversalOptic<A: Value, B: Value, S, T> {
    traversal: Traversal<A, B, S, T>,
}

impl<A: Value, B: Value, S, T> Clone for TraversalOptic<A, B, S, T> {
    fn clone(&self) -> Self {
        TraversalOptic {
            traversal: self.traversal.clone(),
        }
    }
}

pub fn traversal_c2p<A: Value, B: Value, S: Value, T: Value>(
    traversal: Traversal<A, B, S, T>,
) -> TraversalOptic<A, B, S, T> {
    TraversalOptic { traversal }
}

impl<A: Value, B: Value, S: Value, T: Value> Optic for TraversalOptic<A, B, S, T> {
    type A = A;
    type B = B;
    type S = S;
    type T = T;

    fn required(&self) -> CapSet {
        CapSet::FULL
    }

    fn apply_full<P: FullProfunctor>(&self, h: P::P<A, B>) -> Result<P::P<S, T>, OpticError> {
        let lifted = P::traverse::<A, B, B, T>(h);
        Ok(P::dimap(
            self.traversal.extract.clone(),
            hom(fuse::<B, T>),
            lifted,
        ))
    }
}

// ---------------------------------------------------------------------------
// Profunctor-to-concrete translations: apply the optic to the trivial
// concrete optic of the matching family.

pub fn adapter_p2c<O: Optic>(l: &O) -> Result<Adapter<O::A, O::B, O::S, O::T>, OpticError> {
    l.apply_profunctor::<AdapterF<O::A, O::B>>(Adapter::identity())
}

pub fn lens_p2c<O: Optic>(l: &O) -> Result<Lens<O::A, O::B, O::S, O::T>, OpticError> {
    l.apply_cartesian::<LensF<O::A, O::B>>(Lens::identity())
}

pub fn prism_p2c<O: Optic>(l: &O) -> Result<Prism<O::A, O::B, O::S, O::T>, OpticError> {
    l.apply_cocartesian::<PrismF<O::A, O::B>>(Prism::identity())
}

pub fn traversal_p2c<O: Optic>(l: &O) -> Result<Traversal<O::A, O::B, O::S, O::T>, OpticError> {
    l.apply_full::<TraversalF<O::A, O::B>>(Traversal::identity())
}

// ---------------------------------------------------------------------------
// Running optics.

/// Recovers the effectful traversal function of an optic by applying it at
/// the effectful-function instance.
pub fn traverse_of<F: Applicative, O: Optic>(
    optic: &O,
    f: Hom<O::A, F::F<O::B>>,
) -> Result<Hom<O::S, F::F<O::T>>, OpticError> {
    Ok(optic.apply_full::<UpStarF<F>>(UpStar(f))?.0)
}

/// Modifies every focus with a pure function by applying the optic at the
/// function arrow, which provides every capability.
pub fn modify<O: Optic>(optic: &O, f: Hom<O::A, O::B>) -> Hom<O::S, O::T> {
    optic
        .apply_full::<FnArrow>(f)
        .expect("the function arrow provides every capability")
}

/// The do-nothing transformer at any cartesian monoidal instance:
/// `dimap lunit' lunit (first empty)`.
pub fn identity_transformer<P: Cartesian + Monoidal, A: Value>() -> P::P<A, A> {
    let lifted = P::first::<(), (), A>(P::empty());
    P::dimap(hom(lunit_inv::<A>), hom(lunit::<A>), lifted)
}

// ---------------------------------------------------------------------------
// Derived optics, each written out from its direct formula.

/// Optic onto the left component of a pair:
/// `dimap (fork fst id) (cross id snd) . first`.
pub struct Pi1Optic<A, B, C>(PhantomData<(A, B, C)>);

impl<A, B, C> Clone for Pi1Optic<A, B, C> {
    fn clone(&self) -> Self {
        Pi1Optic(PhantomData)
    }
}

pub fn pi1_optic<A: Value, B: Value, C: Value>() -> Pi1Optic<A, B, C> {
    Pi1Optic(PhantomData)
}

impl<A: Value, B: Value, C: Value> Optic for Pi1Optic<A, B, C> {
    type A = A;
    type B = B;
    type S = (A, C);
    type T = (B, C);

    fn required(&self) -> CapSet {
        CapSet::CARTESIAN
    }

    fn apply_cartesian<P: Cartesian>(
        &self,
        h: P::P<A, B>,
    ) -> Result<P::P<(A, C), (B, C)>, OpticError> {
        let lifted = P::first::<A, B, (A, C)>(h);
        Ok(P::dimap(
            fork(hom(fst::<A, C>), id_hom::<(A, C)>()),
            cross(id_hom::<B>(), hom(snd::<A, C>)),
            lifted,
        ))
    }
}

/// Optic onto the leftmost component of a nested pair.
pub fn pi11_optic<A: Value, B: Value, C: Value, D: Value>(
) -> Composed<Pi1Optic<A, B, C>, Pi1Optic<(A, C), (B, C), D>> {
    compose(pi1_optic::<A, B, C>(), pi1_optic::<(A, C), (B, C), D>())
}

/// Optic onto the payload of an optional value:
/// `dimap (maybe (Left Nothing) Right) (either id Just) . right`.
pub struct TheOptic<A, B>(PhantomData<(A, B)>);

impl<A, B> Clone for TheOptic<A, B> {
    fn clone(&self) -> Self {
        TheOptic(PhantomData)
    }
}

pub fn the_optic<A: Value, B: Value>() -> TheOptic<A, B> {
    TheOptic(PhantomData)
}

impl<A: Value, B: Value> Optic for TheOptic<A, B> {
    type A = A;
    type B = B;
    type S = Option<A>;
    type T = Option<B>;

    fn required(&self) -> CapSet {
        CapSet::COCARTESIAN
    }

    fn apply_cocartesian<P: Cocartesian>(
        &self,
        h: P::P<A, B>,
    ) -> Result<P::P<Option<A>, Option<B>>, OpticError> {
        let lifted = P::right::<A, B, Option<B>>(h);
        Ok(P::dimap(
            maybe_elim(Sum::Left(Option::<B>::None), hom(Sum::Right)),
            either_elim(id_hom::<Option<B>>(), hom(|b: B| Some(b))),
            lifted,
        ))
    }
}

/// Optic traversing the labels of a tree in order.
pub fn inorder_optic<A: Value, B: Value>() -> TraversalOptic<A, B, Tree<A>, Tree<B>> {
    traversal_c2p(inorder_traversal::<A, B>())
}
