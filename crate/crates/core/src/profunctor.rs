//! The transformer hierarchy: profunctors and their cartesian, co-cartesian,
//! and monoidal refinements, with the two canonical instance families.
//!
//! A transformer family is a zero-sized type whose associated `P<A, B>` is
//! the type of "function-like things consuming `A`s and producing `B`s".
//! Dictionaries are static: the family type *is* the instance.

use std::marker::PhantomData;

use crate::applicative::{pair, Applicative, FunList, Functor};
use crate::prelude::{hom, Hom, Sum, Value};

/// Two-parameter families contravariant in what they consume and covariant
/// in what they produce.
///
/// Laws: `dimap id id = id` and
/// `dimap (f' . f) (g . g') = dimap f g . dimap f' g'`.
pub trait Profunctor: 'static {
    type P<A: Value, B: Value>: Value;

    /// Wraps a transformer in a preprocessor and a postprocessor.
    fn dimap<A: Value, B: Value, A2: Value, B2: Value>(
        pre: Hom<A2, A>,
        post: Hom<B, B2>,
        h: Self::P<A, B>,
    ) -> Self::P<A2, B2>;
}

/// Profunctors that can pass a contextual value through a product.
///
/// Coherence: `dimap runit runit' h = first h` and
/// `dimap assoc assoc' (first (first h)) = first h`, symmetrically for
/// `second`.
pub trait Cartesian: Profunctor {
    fn first<A: Value, B: Value, C: Value>(h: Self::P<A, B>) -> Self::P<(A, C), (B, C)>;
    fn second<A: Value, B: Value, C: Value>(h: Self::P<A, B>) -> Self::P<(C, A), (C, B)>;
}

/// Profunctors that can act on one variant of a sum, leaving the other
/// untouched.
///
/// Coherence: `dimap rzero rzero' h = left h` and
/// `dimap coassoc coassoc' (left (left h)) = left h`, symmetrically for
/// `right`.
pub trait Cocartesian: Profunctor {
    fn left<A: Value, B: Value, C: Value>(h: Self::P<A, B>) -> Self::P<Sum<A, C>, Sum<B, C>>;
    fn right<A: Value, B: Value, C: Value>(h: Self::P<A, B>) -> Self::P<Sum<C, A>, Sum<C, B>>;
}

/// Profunctors supporting independent parallel composition.
///
/// Coherence: `par`/`empty` form a monoid up to the product witnesses.
pub trait Monoidal: Profunctor {
    fn par<A: Value, B: Value, C: Value, D: Value>(
        h: Self::P<A, B>,
        k: Self::P<C, D>,
    ) -> Self::P<(A, C), (B, D)>;
    fn empty() -> Self::P<(), ()>;
}

/// The full bundle a traversal needs, together with the lifting of a
/// transformer over the elements of a [`FunList`] spine.
///
/// `traverse` is definable from `dimap`, `right`, and `par` by structural
/// recursion over the spine; that recursion changes the continuation type at
/// every step, which Rust's monomorphization cannot follow, so each family
/// provides the (type-constant) elementwise equivalent directly. The law
/// suite checks the defining equation
/// `traverse k = dimap out inn (right (par k (traverse k)))`
/// by unrolling it one step against this implementation.
pub trait FullProfunctor: Cartesian + Cocartesian + Monoidal {
    fn traverse<A: Value, B: Value, C: Value, T: Value>(
        k: Self::P<A, B>,
    ) -> Self::P<FunList<A, C, T>, FunList<B, C, T>>;
}

/// Distributes a passive right component into a functorial structure.
pub fn rstrength<F: Functor, A: Value, B: Value>((fa, b): (F::F<A>, B)) -> F::F<(A, B)> {
    F::fmap(hom(move |a: A| (a, b.clone())), fa)
}

/// Distributes a passive left component into a functorial structure.
pub fn lstrength<F: Functor, A: Value, B: Value>((a, fb): (A, F::F<B>)) -> F::F<(A, B)> {
    F::fmap(hom(move |b: B| (a.clone(), b)), fb)
}

/// The function arrow: plain functions as transformers.
pub struct FnArrow;

impl Profunctor for FnArrow {
    type P<A: Value, B: Value> = Hom<A, B>;

    fn dimap<A: Value, B: Value, A2: Value, B2: Value>(
        pre: Hom<A2, A>,
        post: Hom<B, B2>,
        h: Hom<A, B>,
    ) -> Hom<A2, B2> {
        hom(move |a2| post(h(pre(a2))))
    }
}

impl Cartesian for FnArrow {
    fn first<A: Value, B: Value, C: Value>(h: Hom<A, B>) -> Hom<(A, C), (B, C)> {
        hom(move |(a, c)| (h(a), c))
    }

    fn second<A: Value, B: Value, C: Value>(h: Hom<A, B>) -> Hom<(C, A), (C, B)> {
        hom(move |(c, a)| (c, h(a)))
    }
}

impl Cocartesian for FnArrow {
    fn left<A: Value, B: Value, C: Value>(h: Hom<A, B>) -> Hom<Sum<A, C>, Sum<B, C>> {
        hom(move |s| match s {
            Sum::Left(a) => Sum::Left(h(a)),
            Sum::Right(c) => Sum::Right(c),
        })
    }

    fn right<A: Value, B: Value, C: Value>(h: Hom<A, B>) -> Hom<Sum<C, A>, Sum<C, B>> {
        hom(move |s| match s {
            Sum::Left(c) => Sum::Left(c),
            Sum::Right(a) => Sum::Right(h(a)),
        })
    }
}

impl Monoidal for FnArrow {
    fn par<A: Value, B: Value, C: Value, D: Value>(
        h: Hom<A, B>,
        k: Hom<C, D>,
    ) -> Hom<(A, C), (B, D)> {
        hom(move |(a, c)| (h(a), k(c)))
    }

    fn empty() -> Hom<(), ()> {
        hom(|()| ())
    }
}

impl FullProfunctor for FnArrow {
    fn traverse<A: Value, B: Value, C: Value, T: Value>(
        k: Hom<A, B>,
    ) -> Hom<FunList<A, C, T>, FunList<B, C, T>> {
        hom(move |l: FunList<A, C, T>| {
            let elems = l.elems().iter().map(|a| k(a.clone())).collect();
            let l = l;
            FunList::from_parts(elems, move |bs: &[C]| l.refill(bs))
        })
    }
}

/// An effectful function `A -> F B`, seen as a transformer.
pub struct UpStar<F: Functor, A: Value, B: Value>(pub Hom<A, F::F<B>>);

impl<F: Functor, A: Value, B: Value> Clone for UpStar<F, A, B> {
    fn clone(&self) -> Self {
        UpStar(self.0.clone())
    }
}

impl<F: Functor, A: Value, B: Value> UpStar<F, A, B> {
    pub fn new(f: impl Fn(A) -> F::F<B> + Send + Sync + 'static) -> Self {
        UpStar(hom(f))
    }

    pub fn run(&self, a: A) -> F::F<B> {
        (self.0)(a)
    }
}

/// The family of effectful functions at a fixed functor `F`.
pub struct UpStarF<F>(PhantomData<F>);

impl<F: Functor> Profunctor for UpStarF<F> {
    type P<A: Value, B: Value> = UpStar<F, A, B>;

    fn dimap<A: Value, B: Value, A2: Value, B2: Value>(
        pre: Hom<A2, A>,
        post: Hom<B, B2>,
        h: UpStar<F, A, B>,
    ) -> UpStar<F, A2, B2> {
        UpStar(hom(move |a2| F::fmap(post.clone(), h.run(pre(a2)))))
    }
}

impl<F: Functor> Cartesian for UpStarF<F> {
    fn first<A: Value, B: Value, C: Value>(h: UpStar<F, A, B>) -> UpStar<F, (A, C), (B, C)> {
        UpStar(hom(move |(a, c)| rstrength::<F, B, C>((h.run(a), c))))
    }

    fn second<A: Value, B: Value, C: Value>(h: UpStar<F, A, B>) -> UpStar<F, (C, A), (C, B)> {
        UpStar(hom(move |(c, a)| lstrength::<F, C, B>((c, h.run(a)))))
    }
}

impl<F: Applicative> Cocartesian for UpStarF<F> {
    fn left<A: Value, B: Value, C: Value>(
        h: UpStar<F, A, B>,
    ) -> UpStar<F, Sum<A, C>, Sum<B, C>> {
        UpStar(hom(move |s| match s {
            Sum::Left(a) => F::fmap(hom(Sum::Left), h.run(a)),
            Sum::Right(c) => F::pure(Sum::Right(c)),
        }))
    }

    fn right<A: Value, B: Value, C: Value>(
        h: UpStar<F, A, B>,
    ) -> UpStar<F, Sum<C, A>, Sum<C, B>> {
        UpStar(hom(move |s| match s {
            Sum::Left(c) => F::pure(Sum::Left(c)),
            Sum::Right(a) => F::fmap(hom(Sum::Right), h.run(a)),
        }))
    }
}

impl<F: Applicative> Monoidal for UpStarF<F> {
    fn par<A: Value, B: Value, C: Value, D: Value>(
        h: UpStar<F, A, B>,
        k: UpStar<F, C, D>,
    ) -> UpStar<F, (A, C), (B, D)> {
        UpStar(pair::<F, A, B, C, D>(h.0, k.0))
    }

    fn empty() -> UpStar<F, (), ()> {
        UpStar(hom(|()| F::pure(())))
    }
}

impl<F: Applicative> FullProfunctor for UpStarF<F> {
    fn traverse<A: Value, B: Value, C: Value, T: Value>(
        k: UpStar<F, A, B>,
    ) -> UpStar<F, FunList<A, C, T>, FunList<B, C, T>> {
        UpStar(hom(move |l| {
            crate::applicative::trav_funlist::<F, A, B, C, T>(k.0.clone(), l)
        }))
    }
}
