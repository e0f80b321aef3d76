//! Structural helpers: products, sums, options, and the isomorphism
//! witnesses the coherence laws are stated with.
//!
//! Functions are passed around as [`Hom`] values (shared closures) so that
//! instance dictionaries, optics, and samplers can all treat them as data.

use std::sync::Arc;

/// A first-class function from `A` to `B`.
///
/// Everything in this crate that the underlying theory treats as a function
/// is represented by one of these: cheap to clone, shareable across threads,
/// and comparable only by sampling.
pub type Hom<A, B> = Arc<dyn Fn(A) -> B + Send + Sync>;

/// Marker for types that can live inside transformers and containers.
pub trait Value: Clone + Send + Sync + 'static {}
impl<T: Clone + Send + Sync + 'static> Value for T {}

/// Wraps a closure as a [`Hom`].
pub fn hom<A, B, F>(f: F) -> Hom<A, B>
where
    F: Fn(A) -> B + Send + Sync + 'static,
{
    Arc::new(f)
}

/// The identity function as a [`Hom`].
pub fn id_hom<A: Value>() -> Hom<A, A> {
    hom(|a| a)
}

/// `g` after `f`.
pub fn compose_hom<A: Value, B: Value, C: Value>(g: Hom<B, C>, f: Hom<A, B>) -> Hom<A, C> {
    hom(move |a| g(f(a)))
}

/// A constant function.
pub fn const_hom<A: Value, B: Value>(b: B) -> Hom<A, B> {
    hom(move |_| b.clone())
}

/// Binary sum; a value is tagged `Left` or `Right`, never both.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sum<A, B> {
    Left(A),
    Right(B),
}

/// The empty type: no value of it can ever be constructed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Void {}

/// Elimination for [`Void`]; vacuously total.
pub fn absurd<A>(v: Void) -> A {
    match v {}
}

pub fn fst<A, B>(pair: (A, B)) -> A {
    pair.0
}

pub fn snd<A, B>(pair: (A, B)) -> B {
    pair.1
}

pub fn swap_pair<A, B>((a, b): (A, B)) -> (B, A) {
    (b, a)
}

pub fn swap_sum<A, B>(s: Sum<A, B>) -> Sum<B, A> {
    match s {
        Sum::Left(a) => Sum::Right(a),
        Sum::Right(b) => Sum::Left(b),
    }
}

/// `fork f g` applies both functions to a shared argument.
pub fn fork<A: Value, B: Value, C: Value>(f: Hom<A, B>, g: Hom<A, C>) -> Hom<A, (B, C)> {
    hom(move |a: A| (f(a.clone()), g(a)))
}

/// `cross f g` applies the functions componentwise to a pair.
pub fn cross<A: Value, B: Value, A2: Value, B2: Value>(
    f: Hom<A, A2>,
    g: Hom<B, B2>,
) -> Hom<(A, B), (A2, B2)> {
    hom(move |(a, b)| (f(a), g(b)))
}

/// `plus f g` acts on whichever variant is present, preserving the tag.
pub fn plus<A: Value, B: Value, A2: Value, B2: Value>(
    f: Hom<A, A2>,
    g: Hom<B, B2>,
) -> Hom<Sum<A, B>, Sum<A2, B2>> {
    hom(move |s| match s {
        Sum::Left(a) => Sum::Left(f(a)),
        Sum::Right(b) => Sum::Right(g(b)),
    })
}

/// Case analysis on a sum with a common result type.
pub fn either_elim<A: Value, B: Value, C: Value>(
    f: Hom<A, C>,
    g: Hom<B, C>,
) -> Hom<Sum<A, B>, C> {
    hom(move |s| match s {
        Sum::Left(a) => f(a),
        Sum::Right(b) => g(b),
    })
}

/// `f` on a present payload, `default` otherwise.
pub fn maybe_elim<A: Value, B: Value>(default: B, f: Hom<A, B>) -> Hom<Option<A>, B> {
    hom(move |o| match o {
        Some(a) => f(a),
        None => default.clone(),
    })
}

/// Swaps the argument order of a curried function.
pub fn flip<A: Value, B: Value, C: Value>(f: Hom<A, Hom<B, C>>) -> Hom<B, Hom<A, C>> {
    hom(move |b: B| {
        let f = f.clone();
        let b = b.clone();
        hom(move |a: A| f(a)(b.clone()))
    })
}

// Structural witnesses. Each unprimed/`_inv` pair are mutual inverses; the
// law suite checks that on sampled inputs.

pub fn runit<A>((a, ()): (A, ())) -> A {
    a
}

pub fn runit_inv<A>(a: A) -> (A, ()) {
    (a, ())
}

pub fn lunit<A>(((), a): ((), A)) -> A {
    a
}

pub fn lunit_inv<A>(a: A) -> ((), A) {
    ((), a)
}

pub fn assoc<A, B, C>((a, (b, c)): (A, (B, C))) -> ((A, B), C) {
    ((a, b), c)
}

pub fn assoc_inv<A, B, C>(((a, b), c): ((A, B), C)) -> (A, (B, C)) {
    (a, (b, c))
}

pub fn rzero<A>(s: Sum<A, Void>) -> A {
    match s {
        Sum::Left(a) => a,
        Sum::Right(v) => absurd(v),
    }
}

pub fn rzero_inv<A>(a: A) -> Sum<A, Void> {
    Sum::Left(a)
}

pub fn lzero<A>(s: Sum<Void, A>) -> A {
    match s {
        Sum::Left(v) => absurd(v),
        Sum::Right(a) => a,
    }
}

pub fn lzero_inv<A>(a: A) -> Sum<Void, A> {
    Sum::Right(a)
}

pub fn coassoc<A, B, C>(s: Sum<A, Sum<B, C>>) -> Sum<Sum<A, B>, C> {
    match s {
        Sum::Left(a) => Sum::Left(Sum::Left(a)),
        Sum::Right(Sum::Left(b)) => Sum::Left(Sum::Right(b)),
        Sum::Right(Sum::Right(c)) => Sum::Right(c),
    }
}

pub fn coassoc_inv<A, B, C>(s: Sum<Sum<A, B>, C>) -> Sum<A, Sum<B, C>> {
    match s {
        Sum::Left(Sum::Left(a)) => Sum::Left(a),
        Sum::Left(Sum::Right(b)) => Sum::Right(Sum::Left(b)),
        Sum::Right(c) => Sum::Right(Sum::Right(c)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fork_applies_both() {
        let f = fork(hom(|x: i64| x * 2), hom(|x: i64| -x));
        assert_eq!(f(3), (6, -3));
        let dup = fork(id_hom::<i64>(), id_hom::<i64>());
        assert_eq!(dup(7), (7, 7));
    }

    #[test]
    fn cross_componentwise() {
        let f = cross(hom(|x: i64| x + 1), hom(|b: bool| !b));
        assert_eq!(f((3, true)), (4, false));
        let idf = cross(id_hom::<i64>(), id_hom::<bool>());
        assert_eq!(idf((3, true)), (3, true));
    }

    #[test]
    fn plus_preserves_tags() {
        let f = plus(hom(|x: i64| x + 1), hom(|b: bool| !b));
        assert_eq!(f(Sum::Left(3)), Sum::Left(4));
        assert_eq!(f(Sum::Right(true)), Sum::Right(false));
    }

    #[test]
    fn either_case_analysis() {
        let f = either_elim(id_hom::<i64>(), hom(|x: i64| -x));
        assert_eq!(f(Sum::Left(5)), 5);
        assert_eq!(f(Sum::Right(5)), -5);
    }

    #[test]
    fn maybe_default_and_map() {
        let f = maybe_elim(0i64, hom(|x: i64| x + 1));
        assert_eq!(f(Some(4)), 5);
        assert_eq!(f(None), 0);
    }

    #[test]
    fn flip_swaps_arguments() {
        let subtract: Hom<i64, Hom<i64, i64>> = hom(|a: i64| hom(move |b: i64| a - b));
        let flipped = flip(subtract.clone());
        assert_eq!(subtract(2)(10), -8);
        assert_eq!(flipped(2)(10), 8);
    }

    #[test]
    fn witness_shapes() {
        assert_eq!(runit((5, ())), 5);
        assert_eq!(runit_inv(5), (5, ()));
        assert_eq!(assoc((1, (2, 3))), ((1, 2), 3));
        assert_eq!(
            coassoc::<i64, i64, i64>(Sum::Right(Sum::Left(2))),
            Sum::Left(Sum::Right(2))
        );
    }
}
