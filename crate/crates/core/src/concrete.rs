//! Concrete optic records, the example optics, and the internally labelled
//! binary tree with its in-order traversal.
//!
//! Each record family is itself a transformer family in its last two type
//! parameters; those instances are what make the profunctor-to-concrete
//! translations possible.

use std::marker::PhantomData;

use crate::applicative::{
    map2, single, Applicative, FunList, FunListF, Functor,
};
use crate::prelude::{fst, hom, Hom, Sum, Value};
use crate::profunctor::{
    Cartesian, Cocartesian, FullProfunctor, Monoidal, Profunctor,
};

/// A change of representation: a reading and a writing direction, with no
/// residue of the source retained. The two directions are often inverses,
/// but nothing here enforces that.
pub struct Adapter<A, B, S, T> {
    pub from: Hom<S, A>,
    pub to: Hom<B, T>,
}

impl<A, B, S, T> Clone for Adapter<A, B, S, T> {
    fn clone(&self) -> Self {
        Adapter {
            from: self.from.clone(),
            to: self.to.clone(),
        }
    }
}

impl<A, B, S, T> Adapter<A, B, S, T> {
    pub fn new(from: Hom<S, A>, to: Hom<B, T>) -> Self {
        Adapter { from, to }
    }
}

impl<A, B, S, T> std::fmt::Debug for Adapter<A, B, S, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("Adapter {{ from, to }}")
    }
}

impl<A: Value, B: Value> Adapter<A, B, A, B> {
    /// The trivial adapter, seed of the profunctor-to-concrete translation.
    pub fn identity() -> Self {
        Adapter::new(hom(|a| a), hom(|b| b))
    }
}

/// Access to one component of a product-like structure.
pub struct Lens<A, B, S, T> {
    pub view: Hom<S, A>,
    pub update: Hom<(B, S), T>,
}

impl<A, B, S, T> Clone for Lens<A, B, S, T> {
    fn clone(&self) -> Self {
        Lens {
            view: self.view.clone(),
            update: self.update.clone(),
        }
    }
}

impl<A, B, S, T> Lens<A, B, S, T> {
    pub fn new(view: Hom<S, A>, update: Hom<(B, S), T>) -> Self {
        Lens { view, update }
    }
}

impl<A, B, S, T> std::fmt::Debug for Lens<A, B, S, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("Lens {{ view, update }}")
    }
}

impl<A: Value, B: Value> Lens<A, B, A, B> {
    /// The trivial lens `Lens id fst`.
    pub fn identity() -> Self {
        Lens::new(hom(|a| a), hom(fst))
    }
}

/// Access to one variant of a sum-like structure.
pub struct Prism<A, B, S, T> {
    /// Downcast: the focused payload when present, otherwise the whole
    /// (already rebuilt at the target type).
    pub match_: Hom<S, Sum<T, A>>,
    pub build: Hom<B, T>,
}

impl<A, B, S, T> Clone for Prism<A, B, S, T> {
    fn clone(&self) -> Self {
        Prism {
            match_: self.match_.clone(),
            build: self.build.clone(),
        }
    }
}

impl<A, B, S, T> Prism<A, B, S, T> {
    pub fn new(match_: Hom<S, Sum<T, A>>, build: Hom<B, T>) -> Self {
        Prism { match_, build }
    }
}

impl<A, B, S, T> std::fmt::Debug for Prism<A, B, S, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("Prism {{ match, build }}")
    }
}

impl<A: Value, B: Value> Prism<A, B, A, B> {
    /// The trivial prism `Prism Right id`.
    pub fn identity() -> Self {
        Prism::new(hom(Sum::Right), hom(|b| b))
    }
}

/// Access to an ordered finite sequence of components: extraction into the
/// [`FunList`] normal form.
pub struct Traversal<A: Value, B: Value, S, T> {
    pub extract: Hom<S, FunList<A, B, T>>,
}

impl<A: Value, B: Value, S, T> Clone for Traversal<A, B, S, T> {
    fn clone(&self) -> Self {
        Traversal {
            extract: self.extract.clone(),
        }
    }
}

impl<A: Value, B: Value, S, T> Traversal<A, B, S, T> {
    pub fn new(extract: Hom<S, FunList<A, B, T>>) -> Self {
        Traversal { extract }
    }
}

impl<A: Value, B: Value, S, T> std::fmt::Debug for Traversal<A, B, S, T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("Traversal {{ extract }}")
    }
}

impl<A: Value, B: Value> Traversal<A, B, A, B> {
    /// The trivial traversal `Traversal single`.
    pub fn identity() -> Self {
        Traversal::new(hom(single))
    }
}

// ---------------------------------------------------------------------------
// The concrete optic types as transformer families (in their last two
// parameters).

/// `Adapter A B` as a profunctor family.
pub struct AdapterF<A, B>(PhantomData<(A, B)>);

impl<A: Value, B: Value> Profunctor for AdapterF<A, B> {
    type P<S: Value, T: Value> = Adapter<A, B, S, T>;

    fn dimap<S: Value, T: Value, S2: Value, T2: Value>(
        pre: Hom<S2, S>,
        post: Hom<T, T2>,
        h: Adapter<A, B, S, T>,
    ) -> Adapter<A, B, S2, T2> {
        let from = h.from.clone();
        let to = h.to.clone();
        Adapter::new(
            hom(move |s2| from(pre(s2))),
            hom(move |b| post(to(b))),
        )
    }
}

/// `Lens A B` as a cartesian profunctor family.
pub struct LensF<A, B>(PhantomData<(A, B)>);

impl<A: Value, B: Value> Profunctor for LensF<A, B> {
    type P<S: Value, T: Value> = Lens<A, B, S, T>;

    fn dimap<S: Value, T: Value, S2: Value, T2: Value>(
        pre: Hom<S2, S>,
        post: Hom<T, T2>,
        h: Lens<A, B, S, T>,
    ) -> Lens<A, B, S2, T2> {
        let view = h.view.clone();
        let update = h.update.clone();
        let pre2 = pre.clone();
        Lens::new(
            hom(move |s2| view(pre(s2))),
            hom(move |(b, s2): (B, S2)| post(update((b, pre2(s2))))),
        )
    }
}

impl<A: Value, B: Value> Cartesian for LensF<A, B> {
    fn first<S: Value, T: Value, C: Value>(
        h: Lens<A, B, S, T>,
    ) -> Lens<A, B, (S, C), (T, C)> {
        let view = h.view.clone();
        let update = h.update.clone();
        Lens::new(
            hom(move |(s, _c): (S, C)| view(s)),
            hom(move |(b, (s, c)): (B, (S, C))| (update((b, s)), c)),
        )
    }

    fn second<S: Value, T: Value, C: Value>(
        h: Lens<A, B, S, T>,
    ) -> Lens<A, B, (C, S), (C, T)> {
        let view = h.view.clone();
        let update = h.update.clone();
        Lens::new(
            hom(move |(_c, s): (C, S)| view(s)),
            hom(move |(b, (c, s)): (B, (C, S))| (c, update((b, s)))),
        )
    }
}

/// `Prism A B` as a co-cartesian profunctor family.
pub struct PrismF<A, B>(PhantomData<(A, B)>);

impl<A: Value, B: Value> Profunctor for PrismF<A, B> {
    type P<S: Value, T: Value> = Prism<A, B, S, T>;

    fn dimap<S: Value, T: Value, S2: Value, T2: Value>(
        pre: Hom<S2, S>,
        post: Hom<T, T2>,
        h: Prism<A, B, S, T>,
    ) -> Prism<A, B, S2, T2> {
        let match_ = h.match_.clone();
        let build = h.build.clone();
        let post2 = post.clone();
        Prism::new(
            hom(move |s2| match match_(pre(s2)) {
                Sum::Left(t) => Sum::Left(post(t)),
                Sum::Right(a) => Sum::Right(a),
            }),
            hom(move |b| post2(build(b))),
        )
    }
}

impl<A: Value, B: Value> Cocartesian for PrismF<A, B> {
    fn left<S: Value, T: Value, C: Value>(
        h: Prism<A, B, S, T>,
    ) -> Prism<A, B, Sum<S, C>, Sum<T, C>> {
        let match_ = h.match_.clone();
        let build = h.build.clone();
        Prism::new(
            hom(move |s: Sum<S, C>| match s {
                Sum::Left(s) => match match_(s) {
                    Sum::Left(t) => Sum::Left(Sum::Left(t)),
                    Sum::Right(a) => Sum::Right(a),
                },
                Sum::Right(c) => Sum::Left(Sum::Right(c)),
            }),
            hom(move |b| Sum::Left(build(b))),
        )
    }

    fn right<S: Value, T: Value, C: Value>(
        h: Prism<A, B, S, T>,
    ) -> Prism<A, B, Sum<C, S>, Sum<C, T>> {
        let match_ = h.match_.clone();
        let build = h.build.clone();
        Prism::new(
            hom(move |s: Sum<C, S>| match s {
                Sum::Left(c) => Sum::Left(Sum::Left(c)),
                Sum::Right(s) => match match_(s) {
                    Sum::Left(t) => Sum::Left(Sum::Right(t)),
                    Sum::Right(a) => Sum::Right(a),
                },
            }),
            hom(move |b| Sum::Right(build(b))),
        )
    }
}

/// `Traversal A B` as a fully equipped profunctor family.
pub struct TraversalF<A, B>(PhantomData<(A, B)>);

impl<A: Value, B: Value> Profunctor for TraversalF<A, B> {
    type P<S: Value, T: Value> = Traversal<A, B, S, T>;

    fn dimap<S: Value, T: Value, S2: Value, T2: Value>(
        pre: Hom<S2, S>,
        post: Hom<T, T2>,
        h: Traversal<A, B, S, T>,
    ) -> Traversal<A, B, S2, T2> {
        let extract = h.extract.clone();
        Traversal::new(hom(move |s2| {
            FunListF::<A, B>::fmap(post.clone(), extract(pre(s2)))
        }))
    }
}

impl<A: Value, B: Value> Cartesian for TraversalF<A, B> {
    fn first<S: Value, T: Value, C: Value>(
        h: Traversal<A, B, S, T>,
    ) -> Traversal<A, B, (S, C), (T, C)> {
        let extract = h.extract.clone();
        Traversal::new(hom(move |(s, c): (S, C)| {
            FunListF::<A, B>::fmap(hom(move |t: T| (t, c.clone())), extract(s))
        }))
    }

    fn second<S: Value, T: Value, C: Value>(
        h: Traversal<A, B, S, T>,
    ) -> Traversal<A, B, (C, S), (C, T)> {
        let extract = h.extract.clone();
        Traversal::new(hom(move |(c, s): (C, S)| {
            FunListF::<A, B>::fmap(hom(move |t: T| (c.clone(), t)), extract(s))
        }))
    }
}

impl<A: Value, B: Value> Cocartesian for TraversalF<A, B> {
    fn left<S: Value, T: Value, C: Value>(
        h: Traversal<A, B, S, T>,
    ) -> Traversal<A, B, Sum<S, C>, Sum<T, C>> {
        let extract = h.extract.clone();
        Traversal::new(hom(move |s: Sum<S, C>| match s {
            Sum::Left(s) => FunListF::<A, B>::fmap(hom(Sum::Left), extract(s)),
            Sum::Right(c) => FunList::done(Sum::Right(c)),
        }))
    }

    fn right<S: Value, T: Value, C: Value>(
        h: Traversal<A, B, S, T>,
    ) -> Traversal<A, B, Sum<C, S>, Sum<C, T>> {
        let extract = h.extract.clone();
        Traversal::new(hom(move |s: Sum<C, S>| match s {
            Sum::Left(c) => FunList::done(Sum::Left(c)),
            Sum::Right(s) => FunListF::<A, B>::fmap(hom(Sum::Right), extract(s)),
        }))
    }
}

impl<A: Value, B: Value> Monoidal for TraversalF<A, B> {
    fn par<S: Value, T: Value, U: Value, V: Value>(
        h: Traversal<A, B, S, T>,
        k: Traversal<A, B, U, V>,
    ) -> Traversal<A, B, (S, U), (T, V)> {
        Traversal::new(crate::applicative::pair::<FunListF<A, B>, S, T, U, V>(
            h.extract, k.extract,
        ))
    }

    fn empty() -> Traversal<A, B, (), ()> {
        Traversal::new(hom(|()| FunList::done(())))
    }
}

impl<A: Value, B: Value> FullProfunctor for TraversalF<A, B> {
    fn traverse<S: Value, T: Value, C: Value, R: Value>(
        k: Traversal<A, B, S, T>,
    ) -> Traversal<A, B, FunList<S, C, R>, FunList<T, C, R>> {
        let extract = k.extract.clone();
        Traversal::new(hom(move |l| {
            crate::applicative::trav_funlist::<FunListF<A, B>, S, T, C, R>(extract.clone(), l)
        }))
    }
}

// ---------------------------------------------------------------------------
// Example optics.

/// Lens onto the left component of a pair.
pub fn pi1<A: Value, B: Value, C: Value>() -> Lens<A, B, (A, C), (B, C)> {
    Lens::new(hom(fst), hom(|(b, (_a, c)): (B, (A, C))| (b, c)))
}

/// Lens onto the sign (non-negativity) of an integer; updating imposes a
/// sign while preserving magnitude.
pub fn sign() -> Lens<bool, bool, i64, i64> {
    Lens::new(
        hom(|x: i64| x >= 0),
        hom(|(b, x): (bool, i64)| if b { x.abs() } else { -x.abs() }),
    )
}

/// Prism onto the payload of an optional value.
pub fn the<A: Value, B: Value>() -> Prism<A, B, Option<A>, Option<B>> {
    Prism::new(
        hom(|o: Option<A>| match o {
            Some(a) => Sum::Right(a),
            None => Sum::Left(None),
        }),
        hom(|b: B| Some(b)),
    )
}

/// Largest double magnitude at which every integer in range is exactly
/// representable; beyond it a round trip through `f64` may lose digits.
const WHOLE_EXACT_BOUND: f64 = 9007199254740992.0; // 2^53

/// Prism viewing a double as a whole number when its fractional part is
/// exactly zero. Non-finite inputs and magnitudes too large to convert
/// losslessly stay on the mismatch side.
pub fn whole() -> Prism<i64, i64, f64, f64> {
    Prism::new(
        hom(|x: f64| {
            if x.is_finite() && x.fract() == 0.0 && x.abs() <= WHOLE_EXACT_BOUND {
                Sum::Right(x as i64)
            } else {
                Sum::Left(x)
            }
        }),
        hom(|n: i64| n as f64),
    )
}

/// Adapter between a flat triple and a left-nested pair of pairs.
pub fn flatten<A: Value, B: Value, C: Value, A2: Value, B2: Value, C2: Value>(
) -> Adapter<(A, B, C), (A2, B2, C2), ((A, B), C), ((A2, B2), C2)> {
    Adapter::new(
        hom(|((a, b), c): ((A, B), C)| (a, b, c)),
        hom(|(a, b, c): (A2, B2, C2)| ((a, b), c)),
    )
}

// ---------------------------------------------------------------------------
// Trees.

/// Internally labelled binary tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree<A> {
    Empty,
    Node(Box<Tree<A>>, A, Box<Tree<A>>),
}

impl<A: Value> Tree<A> {
    pub fn node(left: Tree<A>, label: A, right: Tree<A>) -> Tree<A> {
        Tree::Node(Box::new(left), label, Box::new(right))
    }

    pub fn leaf(label: A) -> Tree<A> {
        Tree::node(Tree::Empty, label, Tree::Empty)
    }

    pub fn size(&self) -> usize {
        match self {
            Tree::Empty => 0,
            Tree::Node(l, _, r) => l.size() + 1 + r.size(),
        }
    }

    /// Plain structural map, used as the oracle for pure traversals.
    pub fn map<B: Value>(&self, f: &impl Fn(&A) -> B) -> Tree<B> {
        match self {
            Tree::Empty => Tree::Empty,
            Tree::Node(l, x, r) => Tree::node(l.map(f), f(x), r.map(f)),
        }
    }

    /// In-order label list by direct recursive fold.
    pub fn in_order_labels(&self) -> Vec<A> {
        let mut out = Vec::with_capacity(self.size());
        fn go<A: Value>(t: &Tree<A>, out: &mut Vec<A>) {
            if let Tree::Node(l, x, r) = t {
                go(l, out);
                out.push(x.clone());
                go(r, out);
            }
        }
        go(self, &mut out);
        out
    }
}

/// Effectful in-order traversal: left child, root, right child, with the
/// effects sequenced in that order and the shape preserved.
pub fn inorder<F: Applicative, A: Value, B: Value>(
    m: &Hom<A, F::F<B>>,
    t: &Tree<A>,
) -> F::F<Tree<B>> {
    match t {
        Tree::Empty => F::pure(Tree::Empty),
        Tree::Node(l, x, r) => {
            let left = inorder::<F, A, B>(m, l);
            let mid = m(x.clone());
            let right = inorder::<F, A, B>(m, r);
            let left_mid = map2::<F, _, _, _>(|lt: Tree<B>, b: B| (lt, b), left, mid);
            map2::<F, _, _, _>(
                |(lt, b): (Tree<B>, B), rt: Tree<B>| Tree::node(lt, b, rt),
                left_mid,
                right,
            )
        }
    }
}

/// The concrete in-order traversal of a tree: extraction via
/// `inorder single` at the `FunList` applicative.
pub fn inorder_traversal<A: Value, B: Value>() -> Traversal<A, B, Tree<A>, Tree<B>> {
    Traversal::new(hom(|t: Tree<A>| {
        inorder::<FunListF<A, B>, A, B>(&hom(|a: A| single::<A, B>(a)), &t)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::applicative::{count_odd, fuse, IdentityF, StateF};

    fn tree123() -> Tree<i64> {
        Tree::node(Tree::leaf(1), 2, Tree::leaf(3))
    }

    #[test]
    fn pi1_views_and_updates() {
        let l = pi1::<i64, i64, char>();
        assert_eq!((l.view)((3, 'x')), 3);
        assert_eq!((l.update)((9, (3, 'x'))), (9, 'x'));
        // update (view s, s) = s
        let s = (5, 'q');
        assert_eq!((l.update)(((l.view)(s), s)), s);
    }

    #[test]
    fn sign_imposes_sign() {
        let l = sign();
        assert!(!(l.view)(-7));
        assert_eq!((l.update)((true, -7)), 7);
        assert_eq!((l.update)((false, 0)), 0);
    }

    #[test]
    fn the_matches_and_builds() {
        let p = the::<i64, i64>();
        assert_eq!((p.match_)(Some(5)), Sum::Right(5));
        assert_eq!((p.match_)(None), Sum::Left(None));
        assert_eq!((p.build)(5), Some(5));
    }

    #[test]
    fn whole_fractional_part() {
        let p = whole();
        assert_eq!((p.match_)(2.0), Sum::Right(2));
        assert_eq!((p.match_)(2.5), Sum::Left(2.5));
        assert_eq!((p.build)(3), 3.0);
        match (p.match_)(f64::NAN) {
            Sum::Left(x) => assert!(x.is_nan()),
            Sum::Right(_) => panic!("NaN must not match"),
        }
        assert_eq!((p.match_)(f64::INFINITY), Sum::Left(f64::INFINITY));
    }

    #[test]
    fn flatten_reassociates() {
        let a = flatten::<i64, bool, char, i64, bool, char>();
        assert_eq!((a.from)(((1, true), 'c')), (1, true, 'c'));
        assert_eq!((a.to)((1, true, 'c')), ((1, true), 'c'));
    }

    #[test]
    fn inorder_empty_is_pure() {
        let out = inorder::<IdentityF, i64, i64>(&hom(|x: i64| x), &Tree::Empty);
        assert_eq!(out, Tree::Empty);
    }

    #[test]
    fn inorder_counts_in_order() {
        let (mapped, n) =
            inorder::<StateF<i64>, i64, bool>(&hom(count_odd), &tree123()).run(0);
        assert_eq!(mapped, Tree::node(Tree::leaf(true), false, Tree::leaf(true)));
        assert_eq!(n, 2);
    }

    #[test]
    fn inorder_pure_is_map() {
        let t = tree123();
        let mapped = inorder::<IdentityF, i64, i64>(&hom(|x: i64| x * 2), &t);
        assert_eq!(mapped, t.map(&|x| x * 2));
    }

    #[test]
    fn inorder_traversal_extracts_labels() {
        let tr = inorder_traversal::<i64, i64>();
        assert_eq!((tr.extract)(Tree::Empty).elems(), &[] as &[i64]);
        let t = Tree::node(Tree::Empty, 1, Tree::leaf(2));
        assert_eq!((tr.extract)(t.clone()).elems(), &[1, 2]);
        // Refilling with the original contents restores the tree.
        assert_eq!(fuse((tr.extract)(t.clone())), t);
        assert_eq!((tr.extract)(t).len(), 2);
    }

    #[test]
    fn traversal_instance_shapes() {
        // empty: no focuses.
        let e = TraversalF::<i64, i64>::empty();
        assert_eq!((e.extract)(()).len(), 0);

        // par collects both element lists in order.
        let tr = inorder_traversal::<i64, i64>();
        let both = TraversalF::<i64, i64>::par(tr.clone(), tr.clone());
        let l = (both.extract)((tree123(), Tree::leaf(9)));
        assert_eq!(l.elems(), &[1, 2, 3, 9]);

        // left traverses the Left variant and passes Right through.
        let lt = TraversalF::<i64, i64>::left::<_, _, char>(tr);
        assert_eq!((lt.extract)(Sum::Left(tree123())).elems(), &[1, 2, 3]);
        let passed = (lt.extract)(Sum::Right('c'));
        assert_eq!(passed.len(), 0);
        assert_eq!(passed.refill(&[]), Sum::Right('c'));
    }
}
