//! Composable data accessors.
//!
//! Optics (adapters, lenses, prisms, and traversals) in both their
//! concrete record form and their profunctor form (mappings between
//! transformers), together with translations in both directions and an
//! executable law suite covering the algebra: profunctor laws, coherence
//! laws of the refinements, the round-trip equivalences, and the
//! supporting lemmas.
//!
//! Instance dictionaries are static type families (`P<A, B>` as a generic
//! associated type); functions are first-class [`prelude::Hom`] values so
//! laws about them can be checked by sampling.

#![allow(clippy::type_complexity)]

pub mod applicative;
pub mod concrete;
pub mod laws;
pub mod optic;
pub mod prelude;
pub mod profunctor;

pub use applicative::{
    count_odd, fuse, inc, pair, single, trav_funlist, Applicative, Const, ConstF, FunList,
    FunListF, Functor, IdentityF, Monoid, OptionF, State, StateF,
};
pub use concrete::{
    flatten, inorder, inorder_traversal, pi1, sign, the, whole, Adapter, AdapterF, Lens, LensF,
    Prism, PrismF, Traversal, TraversalF, Tree,
};
pub use optic::{
    adapter_c2p, adapter_p2c, compose, identity_optic, identity_transformer, inorder_optic,
    lens_c2p, lens_p2c, modify, pi11_optic, pi1_optic, prism_c2p, prism_p2c, the_optic,
    traversal_c2p, traversal_p2c, traverse_of, AdapterOptic, CapSet, Composed, IdentityOptic,
    LensOptic, Optic, OpticError, Pi1Optic, PrismOptic, TheOptic, TraversalOptic,
};
pub use prelude::{hom, Hom, Sum, Value, Void};
pub use profunctor::{
    lstrength, rstrength, Cartesian, Cocartesian, FnArrow, FullProfunctor, Monoidal, Profunctor,
    UpStar, UpStarF,
};
