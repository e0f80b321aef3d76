//! Deterministic value and function samplers.
//!
//! Every ground type has one fixed generator; functions are synthesized by
//! hashing the argument into a seed and generating the result, so a sampled
//! `Hom` is pure, deterministic, and reproducible from the suite seed.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::applicative::{Const, FunList, Functor, Monoid, State};
use crate::concrete::{Adapter, Lens, Prism, Traversal, Tree};
use crate::prelude::{hom, Hom, Sum, Value, Void};
use crate::profunctor::UpStar;

pub type SampleRng = ChaCha8Rng;

pub fn rng_from(seed: u64) -> SampleRng {
    SampleRng::seed_from_u64(seed)
}

const MIX: u64 = 0x9e37_79b9_7f4a_7c15;

pub fn mix(h: u64, v: u64) -> u64 {
    (h ^ v).wrapping_mul(MIX).rotate_left(23) ^ MIX
}

/// Stable seed for a named check under a master seed.
pub fn seed_for(master: u64, instance: &str, law: &str) -> u64 {
    let mut h = master ^ MIX;
    for b in instance.bytes().chain(*b"/").chain(law.bytes()) {
        h = mix(h, b as u64);
    }
    h
}

/// Deterministic generation of sample values.
pub trait Gen: Value {
    fn generate(rng: &mut SampleRng) -> Self;
}

/// A stable fingerprint, used to synthesize pure random functions.
pub trait Key: Value {
    fn key(&self) -> u64;
}

impl Gen for i64 {
    fn generate(rng: &mut SampleRng) -> Self {
        rng.random_range(-100..=100)
    }
}

impl Gen for bool {
    fn generate(rng: &mut SampleRng) -> Self {
        rng.random()
    }
}

impl Gen for String {
    fn generate(rng: &mut SampleRng) -> Self {
        let len = rng.random_range(0..=5);
        (0..len)
            .map(|_| char::from(rng.random_range(b'a'..=b'z')))
            .collect()
    }
}

impl Gen for char {
    fn generate(rng: &mut SampleRng) -> Self {
        char::from(rng.random_range(b'a'..=b'z'))
    }
}

impl Gen for f64 {
    // Halves in a small range: exact in binary, so whole/fractional cases
    // both occur and comparisons stay bitwise-stable.
    fn generate(rng: &mut SampleRng) -> Self {
        rng.random_range(-200..=200i64) as f64 / 2.0
    }
}

impl Gen for () {
    fn generate(_rng: &mut SampleRng) -> Self {}
}

impl<A: Gen, B: Gen> Gen for (A, B) {
    fn generate(rng: &mut SampleRng) -> Self {
        (A::generate(rng), B::generate(rng))
    }
}

impl<A: Gen, B: Gen, C: Gen> Gen for (A, B, C) {
    fn generate(rng: &mut SampleRng) -> Self {
        (A::generate(rng), B::generate(rng), C::generate(rng))
    }
}

impl<A: Gen> Gen for Option<A> {
    fn generate(rng: &mut SampleRng) -> Self {
        if rng.random_range(0..4) == 0 {
            None
        } else {
            Some(A::generate(rng))
        }
    }
}

impl<A: Gen> Gen for Vec<A> {
    fn generate(rng: &mut SampleRng) -> Self {
        let len = rng.random_range(0..=3);
        (0..len).map(|_| A::generate(rng)).collect()
    }
}

impl<A: Gen> Gen for Tree<A> {
    fn generate(rng: &mut SampleRng) -> Self {
        let size = rng.random_range(0..=31);
        gen_tree_sized(rng, size)
    }
}

fn gen_tree_sized<A: Gen>(rng: &mut SampleRng, size: u32) -> Tree<A> {
    if size == 0 {
        return Tree::Empty;
    }
    let left = rng.random_range(0..size);
    Tree::node(
        gen_tree_sized(rng, left),
        A::generate(rng),
        gen_tree_sized(rng, size - 1 - left),
    )
}

/// Inhabited sums cannot share a blanket generator with the `Void`-sided
/// ones, so the instantiations the suite uses are listed explicitly.
macro_rules! impl_gen_sum {
    ($($l:ty, $r:ty;)*) => {
        $(impl Gen for Sum<$l, $r> {
            fn generate(rng: &mut SampleRng) -> Self {
                if rng.random() {
                    Sum::Left(<$l>::generate(rng))
                } else {
                    Sum::Right(<$r>::generate(rng))
                }
            }
        })*
    };
}

impl_gen_sum! {
    i64, i64;
    i64, bool;
    bool, i64;
    bool, String;
    String, bool;
    f64, i64;
    i64, String;
    Sum<i64, bool>, String;
    i64, Sum<bool, String>;
    String, Sum<bool, i64>;
    Sum<String, bool>, i64;
    (i64, bool, String), (i64, bool, String);
}

impl<A: Gen> Gen for Sum<A, Void> {
    fn generate(rng: &mut SampleRng) -> Self {
        Sum::Left(A::generate(rng))
    }
}

impl Gen for Sum<Void, i64> {
    fn generate(rng: &mut SampleRng) -> Self {
        Sum::Right(i64::generate(rng))
    }
}

/// A random pure function: the argument's fingerprint reseeds a generator
/// for the result.
impl<A: Key, B: Gen> Gen for Hom<A, B> {
    fn generate(rng: &mut SampleRng) -> Self {
        let salt = rng.next_u64();
        hom(move |a: A| {
            let mut r = rng_from(mix(salt, a.key()));
            B::generate(&mut r)
        })
    }
}

impl<S: Key + Gen, A: Gen> Gen for State<S, A> {
    fn generate(rng: &mut SampleRng) -> Self {
        let f: Hom<S, (A, S)> = Gen::generate(rng);
        State::new(move |s| f(s))
    }
}

impl<M: Monoid + Gen, A: Value> Gen for Const<M, A> {
    fn generate(rng: &mut SampleRng) -> Self {
        Const::new(M::generate(rng))
    }
}

impl<A: Gen, B: Key, T: Gen> Gen for FunList<A, B, T> {
    fn generate(rng: &mut SampleRng) -> Self {
        let len = rng.random_range(0..=8usize);
        gen_funlist_len(rng, len)
    }
}

/// A `FunList` of exactly `len` elements whose continuation collects the
/// refill into a fingerprint and generates the result from it, so refills
/// are comparable by structural equality of their outputs.
pub fn gen_funlist_len<A: Gen, B: Key, T: Gen>(
    rng: &mut SampleRng,
    len: usize,
) -> FunList<A, B, T> {
    let elems = (0..len).map(|_| A::generate(rng)).collect();
    let salt = rng.next_u64();
    FunList::from_parts(elems, move |bs: &[B]| {
        let mut h = salt;
        for b in bs {
            h = mix(h, b.key());
        }
        T::generate(&mut rng_from(h))
    })
}

impl<F: Functor, A: Key, B: Value> Gen for UpStar<F, A, B>
where
    F::F<B>: Gen,
{
    fn generate(rng: &mut SampleRng) -> Self {
        UpStar(Gen::generate(rng))
    }
}

impl<A: Gen, B: Key, S: Key, T: Gen> Gen for Adapter<A, B, S, T> {
    fn generate(rng: &mut SampleRng) -> Self {
        Adapter::new(Gen::generate(rng), Gen::generate(rng))
    }
}

impl<A: Gen, B: Key, S: Key + Gen, T: Gen> Gen for Lens<A, B, S, T> {
    fn generate(rng: &mut SampleRng) -> Self {
        Lens::new(Gen::generate(rng), Gen::generate(rng))
    }
}

impl<A: Value, B: Key, S: Key, T: Gen> Gen for Prism<A, B, S, T>
where
    Sum<T, A>: Gen,
{
    fn generate(rng: &mut SampleRng) -> Self {
        Prism::new(Gen::generate(rng), Gen::generate(rng))
    }
}

impl<A: Gen, B: Key, S: Key, T: Gen> Gen for Traversal<A, B, S, T> {
    fn generate(rng: &mut SampleRng) -> Self {
        Traversal::new(Gen::generate(rng))
    }
}

impl Key for i64 {
    fn key(&self) -> u64 {
        *self as u64
    }
}

impl Key for u64 {
    fn key(&self) -> u64 {
        *self
    }
}

impl Key for bool {
    fn key(&self) -> u64 {
        *self as u64
    }
}

impl Key for char {
    fn key(&self) -> u64 {
        *self as u64
    }
}

impl Key for String {
    fn key(&self) -> u64 {
        self.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| mix(h, b as u64))
    }
}

impl Key for f64 {
    fn key(&self) -> u64 {
        self.to_bits()
    }
}

impl Key for () {
    fn key(&self) -> u64 {
        0
    }
}

impl Key for Void {
    fn key(&self) -> u64 {
        match *self {}
    }
}

impl<A: Key, B: Key> Key for (A, B) {
    fn key(&self) -> u64 {
        mix(self.0.key(), self.1.key())
    }
}

impl<A: Key, B: Key, C: Key> Key for (A, B, C) {
    fn key(&self) -> u64 {
        mix(mix(self.0.key(), self.1.key()), self.2.key())
    }
}

impl<A: Key> Key for Option<A> {
    fn key(&self) -> u64 {
        match self {
            None => 11,
            Some(a) => mix(13, a.key()),
        }
    }
}

impl<A: Key, B: Key> Key for Sum<A, B> {
    fn key(&self) -> u64 {
        match self {
            Sum::Left(a) => mix(17, a.key()),
            Sum::Right(b) => mix(19, b.key()),
        }
    }
}

impl<A: Key> Key for Vec<A> {
    fn key(&self) -> u64 {
        self.iter().fold(23, |h, a| mix(h, a.key()))
    }
}

impl<A: Key> Key for Tree<A> {
    fn key(&self) -> u64 {
        match self {
            Tree::Empty => 29,
            Tree::Node(l, x, r) => mix(mix(l.key(), x.key()), mix(31, r.key())),
        }
    }
}

impl<A: Key, B: Gen + Key, T: Key> Key for FunList<A, B, T> {
    // Fingerprint the elements plus the continuation's response to one
    // fixed probe refill.
    fn key(&self) -> u64 {
        let mut h = 37;
        for a in self.elems() {
            h = mix(h, a.key());
        }
        let mut probe_rng = rng_from(h);
        let probe: Vec<B> = (0..self.len()).map(|_| B::generate(&mut probe_rng)).collect();
        mix(h, self.refill(&probe).key())
    }
}
