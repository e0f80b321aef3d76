#![allow(clippy::type_complexity)]

//! Sampled functor and applicative laws for the effect instances, and the
//! structural invariants of the sequence normal form.

use optics_core::applicative::{
    fuse, Applicative, Const, ConstF, FunList, FunListF, Functor, State, StateF,
};
use optics_core::laws::observe::observe;
use optics_core::laws::sample::{gen_funlist_len, rng_from, Gen, SampleRng};
use optics_core::prelude::{hom, id_hom, Hom, Sum};

const SAMPLES: usize = 1000;
const PROBES: usize = 4;

fn check<T: optics_core::laws::TestEq>(
    what: &str,
    lhs: &T,
    rhs: &T,
    rng: &mut SampleRng,
) {
    if let Err(e) = observe(lhs, rhs, rng, PROBES) {
        panic!("{what}: {e}");
    }
}

#[test]
fn state_functor_and_applicative_laws() {
    let mut rng = rng_from(21);
    for _ in 0..SAMPLES {
        let m = State::<i64, i64>::generate(&mut rng);
        // fmap id = id
        check(
            "state fmap id",
            &StateF::<i64>::fmap(id_hom::<i64>(), m.clone()),
            &m,
            &mut rng,
        );
        // fmap (f . g) = fmap f . fmap g
        let f: Hom<i64, i64> = Gen::generate(&mut rng);
        let g: Hom<i64, i64> = Gen::generate(&mut rng);
        let composed = {
            let (f, g) = (f.clone(), g.clone());
            hom(move |x| f(g(x)))
        };
        check(
            "state fmap composition",
            &StateF::<i64>::fmap(composed, m.clone()),
            &StateF::<i64>::fmap(f.clone(), StateF::<i64>::fmap(g.clone(), m.clone())),
            &mut rng,
        );
        // ap (pure id) v = v
        check(
            "state applicative identity",
            &StateF::<i64>::ap(StateF::<i64>::pure(id_hom::<i64>()), m.clone()),
            &m,
            &mut rng,
        );
        // ap (pure f) (pure x) = pure (f x)
        let x = i64::generate(&mut rng);
        check(
            "state homomorphism",
            &StateF::<i64>::ap(StateF::<i64>::pure(f.clone()), StateF::<i64>::pure(x)),
            &StateF::<i64>::pure(f(x)),
            &mut rng,
        );
    }
}

#[test]
fn state_ap_threads_left_to_right() {
    // With a log as the state, the entries appear in argument order.
    let log_and_return = |tag: &'static str| {
        State::<Vec<String>, String>::new(move |mut log| {
            log.push(tag.to_string());
            (tag.to_string(), log)
        })
    };
    let paired = StateF::<Vec<String>>::ap(
        StateF::<Vec<String>>::fmap(
            hom(|a: String| hom(move |b: String| (a.clone(), b))),
            log_and_return("first"),
        ),
        log_and_return("second"),
    );
    let ((a, b), log) = paired.run(Vec::new());
    assert_eq!((a.as_str(), b.as_str()), ("first", "second"));
    assert_eq!(log, vec!["first".to_string(), "second".to_string()]);
}

#[test]
fn const_functor_and_applicative_laws() {
    let mut rng = rng_from(22);
    for _ in 0..SAMPLES {
        let m = Const::<Vec<String>, i64>::generate(&mut rng);
        check(
            "const fmap id",
            &ConstF::<Vec<String>>::fmap(id_hom::<i64>(), m.clone()),
            &m,
            &mut rng,
        );
        let v = Const::<Vec<String>, i64>::generate(&mut rng);
        check(
            "const applicative identity",
            &ConstF::<Vec<String>>::ap(
                ConstF::<Vec<String>>::pure(id_hom::<i64>()),
                v.clone(),
            ),
            &v,
            &mut rng,
        );
        let f: Hom<i64, i64> = Gen::generate(&mut rng);
        let x = i64::generate(&mut rng);
        check(
            "const homomorphism",
            &ConstF::<Vec<String>>::ap(
                ConstF::<Vec<String>>::pure(f.clone()),
                ConstF::<Vec<String>>::pure(x),
            ),
            &ConstF::<Vec<String>>::pure(f(x)),
            &mut rng,
        );
    }
}

#[test]
fn funlist_functor_and_applicative_laws() {
    let mut rng = rng_from(23);
    for _ in 0..SAMPLES {
        let l = FunList::<i64, bool, i64>::generate(&mut rng);
        check(
            "funlist fmap id",
            &FunListF::<i64, bool>::fmap(id_hom::<i64>(), l.clone()),
            &l,
            &mut rng,
        );
        let f: Hom<i64, i64> = Gen::generate(&mut rng);
        let g: Hom<i64, i64> = Gen::generate(&mut rng);
        let composed = {
            let (f, g) = (f.clone(), g.clone());
            hom(move |x| f(g(x)))
        };
        check(
            "funlist fmap composition",
            &FunListF::<i64, bool>::fmap(composed, l.clone()),
            &FunListF::<i64, bool>::fmap(f.clone(), FunListF::<i64, bool>::fmap(g.clone(), l.clone())),
            &mut rng,
        );
        check(
            "funlist applicative identity",
            &FunListF::<i64, bool>::ap(FunListF::<i64, bool>::pure(id_hom::<i64>()), l.clone()),
            &l,
            &mut rng,
        );
        let x = i64::generate(&mut rng);
        check(
            "funlist homomorphism",
            &FunListF::<i64, bool>::ap(
                FunListF::<i64, bool>::pure(f.clone()),
                FunListF::<i64, bool>::pure(x),
            ),
            &FunListF::<i64, bool>::pure(f(x)),
            &mut rng,
        );
    }
}

#[test]
fn out_and_inn_are_mutual_inverses_on_all_lengths() {
    let mut rng = rng_from(24);
    for len in 0..=8usize {
        for _ in 0..200 {
            let l: FunList<i64, bool, i64> = gen_funlist_len(&mut rng, len);
            let round = FunList::inn(l.clone().out());
            check("inn . out", &round, &l, &mut rng);

            // out . inn, starting from an explicit sum.
            let s: Sum<i64, (i64, FunList<i64, bool, Hom<bool, i64>>)> = l.clone().out();
            let round = FunList::inn(s.clone()).out();
            match (&round, &s) {
                (Sum::Left(a), Sum::Left(b)) => assert_eq!(a, b),
                (Sum::Right((a, la)), Sum::Right((b, lb))) => {
                    assert_eq!(a, b);
                    assert_eq!(la.elems(), lb.elems());
                    // Compare the function-valued payloads through fuse-like
                    // application on a shared probe refill.
                    let probe: Vec<bool> =
                        (0..la.len()).map(|_| bool::generate(&mut rng)).collect();
                    let head = bool::generate(&mut rng);
                    assert_eq!(la.refill(&probe)(head), lb.refill(&probe)(head));
                }
                _ => panic!("out . inn changed the constructor"),
            }
        }
    }
}

#[test]
fn funlist_ap_is_concatenation() {
    let mut rng = rng_from(25);
    for _ in 0..SAMPLES {
        // Observe ap through element lists and fuse at matching types.
        let left_len = rand::Rng::random_range(&mut rng, 0..=4usize);
        let right_len = rand::Rng::random_range(&mut rng, 0..=4usize);
        let lx: FunList<i64, i64, i64> = gen_funlist_len(&mut rng, right_len);
        let f: Hom<i64, Hom<i64, i64>> = {
            let g: Hom<(i64, i64), i64> = Gen::generate(&mut rng);
            hom(move |a: i64| {
                let g = g.clone();
                hom(move |b: i64| g((a, b)))
            })
        };
        let lf: FunList<i64, i64, Hom<i64, i64>> = {
            let elems: Vec<i64> = (0..left_len).map(|_| i64::generate(&mut rng)).collect();
            let f = f.clone();
            FunList::from_parts(elems, move |bs: &[i64]| {
                f(bs.iter().sum::<i64>())
            })
        };
        let combined = FunListF::<i64, i64>::ap(lf.clone(), lx.clone());
        let mut expected_elems = lf.elems().to_vec();
        expected_elems.extend(lx.elems().iter().copied());
        assert_eq!(combined.elems(), &expected_elems[..]);
        // fuse feeds the elements back: split respected.
        let refill: Vec<i64> = combined.elems().to_vec();
        let got = combined.refill(&refill);
        let want = lf.refill(&refill[..left_len])(lx.refill(&refill[left_len..]));
        assert_eq!(got, want);
        let _ = fuse(combined);
    }
}
