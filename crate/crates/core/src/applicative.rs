//! Effect abstractions and the `FunList` normal form of traversable contents.
//!
//! A functor or applicative here is a *family*: a zero-sized type whose
//! associated `F<A>` names the container, with the operations as static
//! methods. This is the usual lightweight higher-kinded encoding; instance
//! resolution is explicit at every use site.

use std::marker::PhantomData;
use std::sync::Arc;

use crate::prelude::{hom, Hom, Sum, Value};

/// A type family `F` with a lifting of functions into `F`.
///
/// Laws (checked extensionally by the law suite): `fmap id = id` and
/// `fmap (f . g) = fmap f . fmap g`.
pub trait Functor: 'static {
    type F<A: Value>: Value;

    fn fmap<A: Value, B: Value>(f: Hom<A, B>, fa: Self::F<A>) -> Self::F<B>;
}

/// A functor with pure computations and sequential combination.
///
/// Laws checked: identity `ap (pure id) v = v` and homomorphism
/// `ap (pure f) (pure x) = pure (f x)`.
pub trait Applicative: Functor {
    fn pure<A: Value>(a: A) -> Self::F<A>;

    /// Runs `ff` then `fa`, applying the returned function to the result.
    fn ap<A: Value, B: Value>(ff: Self::F<Hom<A, B>>, fa: Self::F<A>) -> Self::F<B>;
}

/// Combines two results with a binary function, effects left-to-right.
pub fn map2<F: Applicative, A: Value, B: Value, C: Value>(
    f: impl Fn(A, B) -> C + Send + Sync + 'static,
    fa: F::F<A>,
    fb: F::F<B>,
) -> F::F<C> {
    let f = Arc::new(f);
    let curried = F::fmap(
        hom(move |a: A| {
            let f = f.clone();
            hom(move |b: B| f(a.clone(), b))
        }),
        fa,
    );
    F::ap(curried, fb)
}

/// Lifts two effectful functions to act on the components of a pair,
/// running the first before the second.
pub fn pair<F: Applicative, A: Value, B: Value, C: Value, D: Value>(
    h: Hom<A, F::F<B>>,
    k: Hom<C, F::F<D>>,
) -> Hom<(A, C), F::F<(B, D)>> {
    hom(move |(a, c): (A, C)| map2::<F, _, _, _>(|b, d| (b, d), h(a), k(c)))
}

/// The identity effect: computations are just values.
pub struct IdentityF;

impl Functor for IdentityF {
    type F<A: Value> = A;

    fn fmap<A: Value, B: Value>(f: Hom<A, B>, fa: A) -> B {
        f(fa)
    }
}

impl Applicative for IdentityF {
    fn pure<A: Value>(a: A) -> A {
        a
    }

    fn ap<A: Value, B: Value>(ff: Hom<A, B>, fa: A) -> B {
        ff(fa)
    }
}

/// The optional-value effect.
pub struct OptionF;

impl Functor for OptionF {
    type F<A: Value> = Option<A>;

    fn fmap<A: Value, B: Value>(f: Hom<A, B>, fa: Option<A>) -> Option<B> {
        fa.map(|a| f(a))
    }
}

impl Applicative for OptionF {
    fn pure<A: Value>(a: A) -> Option<A> {
        Some(a)
    }

    fn ap<A: Value, B: Value>(ff: Option<Hom<A, B>>, fa: Option<A>) -> Option<B> {
        match (ff, fa) {
            (Some(f), Some(a)) => Some(f(a)),
            _ => None,
        }
    }
}

/// A pure state transformer: a function from a state to a result and a
/// successor state.
pub struct State<S, A> {
    run: Arc<dyn Fn(S) -> (A, S) + Send + Sync>,
}

impl<S, A> Clone for State<S, A> {
    fn clone(&self) -> Self {
        State {
            run: self.run.clone(),
        }
    }
}

impl<S: Value, A: Value> State<S, A> {
    pub fn new(f: impl Fn(S) -> (A, S) + Send + Sync + 'static) -> Self {
        State { run: Arc::new(f) }
    }

    pub fn run(&self, s: S) -> (A, S) {
        (self.run)(s)
    }
}

/// Increments an integer counter and returns the given boolean.
pub fn inc(b: bool) -> State<i64, bool> {
    State::new(move |n: i64| (b, n + 1))
}

/// Counts odd arguments in the state, returning the argument's parity.
pub fn count_odd(n: i64) -> State<i64, bool> {
    if n % 2 == 0 {
        StateF::pure(false)
    } else {
        inc(true)
    }
}

/// The stateful-computation family at a fixed state type `S`.
pub struct StateF<S>(PhantomData<S>);

impl<S: Value> Functor for StateF<S> {
    type F<A: Value> = State<S, A>;

    fn fmap<A: Value, B: Value>(f: Hom<A, B>, fa: State<S, A>) -> State<S, B> {
        State::new(move |s| {
            let (a, s2) = fa.run(s);
            (f(a), s2)
        })
    }
}

impl<S: Value> Applicative for StateF<S> {
    fn pure<A: Value>(a: A) -> State<S, A> {
        State::new(move |s| (a.clone(), s))
    }

    // Threads the state through `ff` first, then `fa`.
    fn ap<A: Value, B: Value>(ff: State<S, Hom<A, B>>, fa: State<S, A>) -> State<S, B> {
        State::new(move |s| {
            let (f, s2) = ff.run(s);
            let (a, s3) = fa.run(s2);
            (f(a), s3)
        })
    }
}

/// A type with an empty element and an associative combination.
pub trait Monoid: Value {
    fn empty() -> Self;
    fn combine(self, other: Self) -> Self;
}

impl<T: Value> Monoid for Vec<T> {
    fn empty() -> Self {
        Vec::new()
    }

    fn combine(mut self, mut other: Self) -> Self {
        self.append(&mut other);
        self
    }
}

/// A computation that ignores its nominal result and accumulates a monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Const<M, A> {
    pub value: M,
    marker: PhantomData<fn() -> A>,
}

impl<M: Value, A> Const<M, A> {
    pub fn new(value: M) -> Self {
        Const {
            value,
            marker: PhantomData,
        }
    }
}

/// The constant-accumulator family for a monoid `M`.
pub struct ConstF<M>(PhantomData<M>);

impl<M: Monoid> Functor for ConstF<M> {
    type F<A: Value> = Const<M, A>;

    fn fmap<A: Value, B: Value>(_f: Hom<A, B>, fa: Const<M, A>) -> Const<M, B> {
        Const::new(fa.value)
    }
}

impl<M: Monoid> Applicative for ConstF<M> {
    fn pure<A: Value>(_a: A) -> Const<M, A> {
        Const::new(M::empty())
    }

    fn ap<A: Value, B: Value>(ff: Const<M, Hom<A, B>>, fa: Const<M, A>) -> Const<M, B> {
        Const::new(ff.value.combine(fa.value))
    }
}

/// The normal form of a traversable's contents: a finite sequence of `A`
/// elements together with a refill continuation from the same number of `B`s
/// back to a `T`.
///
/// The classic presentation is a nested datatype, `Done t` or
/// `More a (FunList a b (b -> t))`; Rust's monomorphization cannot express
/// the polymorphic recursion that presentation demands, so the equivalent
/// existential reading (n elements plus an n-ary continuation) is stored
/// directly. The constructor view is recovered by [`FunList::out`] and
/// [`FunList::inn`].
pub struct FunList<A, B, T> {
    elems: Vec<A>,
    rebuild: Arc<dyn Fn(&[B]) -> T + Send + Sync>,
}

impl<A: std::fmt::Debug, B, T> std::fmt::Debug for FunList<A, B, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FunList {{ elems: {:?}, rebuild }}", self.elems)
    }
}

impl<A: Clone, B, T> Clone for FunList<A, B, T> {
    fn clone(&self) -> Self {
        FunList {
            elems: self.elems.clone(),
            rebuild: self.rebuild.clone(),
        }
    }
}

impl<A: Value, B: Value, T: Value> FunList<A, B, T> {
    /// The empty sequence holding a finished result.
    pub fn done(t: T) -> Self {
        FunList {
            elems: Vec::new(),
            rebuild: Arc::new(move |_| t.clone()),
        }
    }

    /// Prepends a head element to a tail whose result still awaits one `B`.
    pub fn more(head: A, tail: FunList<A, B, Hom<B, T>>) -> Self {
        let mut elems = Vec::with_capacity(tail.elems.len() + 1);
        elems.push(head);
        elems.extend(tail.elems.iter().cloned());
        let rebuild = tail.rebuild.clone();
        FunList {
            elems,
            rebuild: Arc::new(move |bs: &[B]| rebuild(&bs[1..])(bs[0].clone())),
        }
    }

    pub fn from_parts(
        elems: Vec<A>,
        rebuild: impl Fn(&[B]) -> T + Send + Sync + 'static,
    ) -> Self {
        FunList {
            elems,
            rebuild: Arc::new(rebuild),
        }
    }

    pub fn elems(&self) -> &[A] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Feeds a replacement sequence to the continuation. The slice length
    /// must equal [`FunList::len`]; refilling with a different number of
    /// elements has no meaning.
    pub fn refill(&self, bs: &[B]) -> T {
        assert_eq!(
            bs.len(),
            self.elems.len(),
            "refill expects exactly as many elements as were extracted"
        );
        (self.rebuild)(bs)
    }

    /// Exposes the top constructor: either the finished result, or the head
    /// element paired with the rest of the sequence.
    pub fn out(self) -> Sum<T, (A, FunList<A, B, Hom<B, T>>)> {
        if self.elems.is_empty() {
            Sum::Left((self.rebuild)(&[]))
        } else {
            let head = self.elems[0].clone();
            let tail_elems = self.elems[1..].to_vec();
            let rebuild = self.rebuild.clone();
            let tail = FunList {
                elems: tail_elems,
                rebuild: Arc::new(move |bs: &[B]| {
                    let rebuild = rebuild.clone();
                    let rest = bs.to_vec();
                    hom(move |b: B| {
                        let mut all = Vec::with_capacity(rest.len() + 1);
                        all.push(b);
                        all.extend(rest.iter().cloned());
                        rebuild(&all)
                    })
                }),
            };
            Sum::Right((head, tail))
        }
    }

    /// Inverse of [`FunList::out`].
    pub fn inn(s: Sum<T, (A, FunList<A, B, Hom<B, T>>)>) -> Self {
        match s {
            Sum::Left(t) => FunList::done(t),
            Sum::Right((head, tail)) => FunList::more(head, tail),
        }
    }
}

/// A one-element sequence whose continuation is the identity.
pub fn single<A: Value, B: Value>(x: A) -> FunList<A, B, B> {
    FunList::from_parts(vec![x], |bs: &[B]| bs[0].clone())
}

/// Collapses a sequence whose element and refill types coincide by feeding
/// the elements back into the continuation.
pub fn fuse<B: Value, T: Value>(l: FunList<B, B, T>) -> T {
    let elems = l.elems().to_vec();
    l.refill(&elems)
}

/// The sequence family at fixed element and refill types.
pub struct FunListF<A, B>(PhantomData<(A, B)>);

impl<A: Value, B: Value> Functor for FunListF<A, B> {
    type F<T: Value> = FunList<A, B, T>;

    fn fmap<T: Value, U: Value>(f: Hom<T, U>, l: FunList<A, B, T>) -> FunList<A, B, U> {
        let rebuild = l.rebuild.clone();
        FunList {
            elems: l.elems,
            rebuild: Arc::new(move |bs| f(rebuild(bs))),
        }
    }
}

impl<A: Value, B: Value> Applicative for FunListF<A, B> {
    fn pure<T: Value>(t: T) -> FunList<A, B, T> {
        FunList::done(t)
    }

    // Sequence concatenation; the continuation splits the refill and
    // applies the left result to the right one.
    fn ap<T: Value, U: Value>(
        ff: FunList<A, B, Hom<T, U>>,
        fx: FunList<A, B, T>,
    ) -> FunList<A, B, U> {
        let split = ff.elems.len();
        let mut elems = ff.elems.clone();
        elems.extend(fx.elems.iter().cloned());
        let left = ff.rebuild.clone();
        let right = fx.rebuild.clone();
        FunList {
            elems,
            rebuild: Arc::new(move |bs| left(&bs[..split])(right(&bs[split..]))),
        }
    }
}

/// Effectfully visits a vector left-to-right, collecting results.
pub fn trav_vec<F: Applicative, A: Value, B: Value>(
    f: &Hom<A, F::F<B>>,
    items: &[A],
) -> F::F<Vec<B>> {
    let mut acc: F::F<Vec<B>> = F::pure(Vec::new());
    for a in items {
        acc = map2::<F, _, _, _>(
            |mut v: Vec<B>, b: B| {
                v.push(b);
                v
            },
            acc,
            f(a.clone()),
        );
    }
    acc
}

/// FunLists are themselves traversable: applies `f` to each element in
/// order, sequencing the effects and preserving the continuation.
pub fn trav_funlist<F: Applicative, A: Value, B: Value, C: Value, T: Value>(
    f: Hom<A, F::F<B>>,
    l: FunList<A, C, T>,
) -> F::F<FunList<B, C, T>> {
    let rebuild = l.rebuild.clone();
    F::fmap(
        hom(move |elems: Vec<B>| FunList {
            elems,
            rebuild: rebuild.clone(),
        }),
        trav_vec::<F, _, _>(&f, l.elems()),
    )
}
