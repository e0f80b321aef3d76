//! Sampled observational equality.
//!
//! The laws under test are equations between function-like values, so each
//! transformer type carries its own observation protocol: functions are
//! compared pointwise on sampled inputs, stateful results by running them
//! from sampled initial states, sequences by their elements and by probing
//! the refill continuation, and concrete optics fieldwise.

use std::fmt::Debug;

use super::sample::{Gen, SampleRng};
use crate::applicative::{Const, FunList, Functor, State};
use crate::concrete::{Adapter, Lens, Prism, Traversal, Tree};
use crate::prelude::{Hom, Sum, Void};
use crate::profunctor::UpStar;

/// Probe budget and randomness for one observational comparison.
pub struct TestCtx<'a> {
    pub rng: &'a mut SampleRng,
    pub probes: usize,
}

impl<'a> TestCtx<'a> {
    pub fn new(rng: &'a mut SampleRng, probes: usize) -> Self {
        TestCtx { rng, probes }
    }
}

/// Equality up to observation; `Err` carries a description of the first
/// discrepancy found.
pub trait TestEq {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String>;
}

/// Convenience: run one comparison with a fresh probe context.
pub fn observe<T: TestEq>(
    lhs: &T,
    rhs: &T,
    rng: &mut SampleRng,
    probes: usize,
) -> Result<(), String> {
    lhs.test_eq(rhs, &mut TestCtx::new(rng, probes))
}

macro_rules! impl_testeq_by_eq {
    ($($t:ty),*) => {
        $(impl TestEq for $t {
            fn test_eq(&self, other: &Self, _ctx: &mut TestCtx<'_>) -> Result<(), String> {
                if self == other {
                    Ok(())
                } else {
                    Err(format!("{self:?} != {other:?}"))
                }
            }
        })*
    };
}

impl_testeq_by_eq!(i64, u64, bool, String, char, ());

impl TestEq for f64 {
    // Bitwise: NaN compares equal to itself, and all sampled values are
    // exact, so no tolerance is wanted.
    fn test_eq(&self, other: &Self, _ctx: &mut TestCtx<'_>) -> Result<(), String> {
        if self.to_bits() == other.to_bits() {
            Ok(())
        } else {
            Err(format!("{self:?} != {other:?}"))
        }
    }
}

impl TestEq for Void {
    fn test_eq(&self, _other: &Self, _ctx: &mut TestCtx<'_>) -> Result<(), String> {
        match *self {}
    }
}

impl<A: TestEq, B: TestEq> TestEq for (A, B) {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        self.0.test_eq(&other.0, ctx)?;
        self.1.test_eq(&other.1, ctx)
    }
}

impl<A: TestEq, B: TestEq, C: TestEq> TestEq for (A, B, C) {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        self.0.test_eq(&other.0, ctx)?;
        self.1.test_eq(&other.1, ctx)?;
        self.2.test_eq(&other.2, ctx)
    }
}

impl<A: TestEq> TestEq for Option<A> {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        match (self, other) {
            (None, None) => Ok(()),
            (Some(a), Some(b)) => a.test_eq(b, ctx),
            _ => Err("one side is None, the other Some".to_string()),
        }
    }
}

impl<A: TestEq> TestEq for Vec<A> {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        if self.len() != other.len() {
            return Err(format!("lengths differ: {} vs {}", self.len(), other.len()));
        }
        for (a, b) in self.iter().zip(other.iter()) {
            a.test_eq(b, ctx)?;
        }
        Ok(())
    }
}

impl<A: TestEq, B: TestEq> TestEq for Sum<A, B> {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        match (self, other) {
            (Sum::Left(a), Sum::Left(b)) => a.test_eq(b, ctx),
            (Sum::Right(a), Sum::Right(b)) => a.test_eq(b, ctx),
            _ => Err("sum tags differ".to_string()),
        }
    }
}

impl<A: TestEq> TestEq for Tree<A> {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        match (self, other) {
            (Tree::Empty, Tree::Empty) => Ok(()),
            (Tree::Node(l1, x1, r1), Tree::Node(l2, x2, r2)) => {
                l1.test_eq(l2, ctx)?;
                x1.test_eq(x2, ctx)?;
                r1.test_eq(r2, ctx)
            }
            _ => Err("tree shapes differ".to_string()),
        }
    }
}

impl<A: Gen + Debug, B: TestEq> TestEq for Hom<A, B> {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        for _ in 0..ctx.probes {
            let a = A::generate(ctx.rng);
            self(a.clone())
                .test_eq(&other(a.clone()), ctx)
                .map_err(|e| format!("at input {a:?}: {e}"))?;
        }
        Ok(())
    }
}

impl<S: Gen + Debug + TestEq, A: TestEq + crate::prelude::Value> TestEq for State<S, A> {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        for _ in 0..ctx.probes {
            let s = S::generate(ctx.rng);
            self.run(s.clone())
                .test_eq(&other.run(s.clone()), ctx)
                .map_err(|e| format!("from state {s:?}: {e}"))?;
        }
        Ok(())
    }
}

impl<M: TestEq, A> TestEq for Const<M, A> {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        self.value.test_eq(&other.value, ctx)
    }
}

impl<A, B, T> TestEq for FunList<A, B, T>
where
    A: TestEq + Debug + crate::prelude::Value,
    B: Gen + Debug,
    T: TestEq + crate::prelude::Value,
{
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        if self.len() != other.len() {
            return Err(format!(
                "element counts differ: {} vs {}",
                self.len(),
                other.len()
            ));
        }
        for (a, b) in self.elems().iter().zip(other.elems().iter()) {
            a.test_eq(b, ctx).map_err(|e| format!("elements differ: {e}"))?;
        }
        for _ in 0..ctx.probes.max(1) {
            let refill: Vec<B> = (0..self.len()).map(|_| B::generate(ctx.rng)).collect();
            self.refill(&refill)
                .test_eq(&other.refill(&refill), ctx)
                .map_err(|e| format!("after refill {refill:?}: {e}"))?;
        }
        Ok(())
    }
}

impl<F: Functor, A: Gen + Debug, B: crate::prelude::Value> TestEq for UpStar<F, A, B>
where
    F::F<B>: TestEq,
{
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        self.0.test_eq(&other.0, ctx)
    }
}

impl<A: TestEq, B: Gen + Debug, S: Gen + Debug, T: TestEq> TestEq for Adapter<A, B, S, T> {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        self.from
            .test_eq(&other.from, ctx)
            .map_err(|e| format!("from: {e}"))?;
        self.to.test_eq(&other.to, ctx).map_err(|e| format!("to: {e}"))
    }
}

impl<A: TestEq, B: Gen + Debug, S: Gen + Debug, T: TestEq> TestEq for Lens<A, B, S, T> {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        self.view
            .test_eq(&other.view, ctx)
            .map_err(|e| format!("view: {e}"))?;
        self.update
            .test_eq(&other.update, ctx)
            .map_err(|e| format!("update: {e}"))
    }
}

impl<A: TestEq, B: Gen + Debug, S: Gen + Debug, T: TestEq> TestEq for Prism<A, B, S, T> {
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        self.match_
            .test_eq(&other.match_, ctx)
            .map_err(|e| format!("match: {e}"))?;
        self.build
            .test_eq(&other.build, ctx)
            .map_err(|e| format!("build: {e}"))
    }
}

impl<A, B, S, T> TestEq for Traversal<A, B, S, T>
where
    A: crate::prelude::Value + TestEq + Debug,
    B: crate::prelude::Value + Gen + Debug,
    S: Gen + Debug,
    T: TestEq + crate::prelude::Value,
{
    fn test_eq(&self, other: &Self, ctx: &mut TestCtx<'_>) -> Result<(), String> {
        self.extract
            .test_eq(&other.extract, ctx)
            .map_err(|e| format!("extract: {e}"))
    }
}
