//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (run with `--nocapture` to see them). The sampled-law criteria
//! share one run of the core suite at the reference configuration
//! (seed 0, 1000 samples).

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use contacts_cli as _;
use optics_core::applicative::{count_odd, StateF};
use optics_core::concrete::{inorder, Tree};
use optics_core::laws::sample::{rng_from, Gen};
use optics_core::laws::{mutation, oracle, run_core_suite, LawReport, SuiteConfig};
use optics_core::optic::{
    compose, inorder_optic, lens_p2c, pi1_optic, prism_p2c, the_optic, traverse_of, CapSet,
    Optic,
};
use optics_core::prelude::hom;
use optics_core::profunctor::FnArrow;

fn criterion(n: u32, title: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("acceptance {n} ({title}): PASS"),
        Err(e) => {
            println!("acceptance {n} ({title}): FAIL - {e}");
            panic!("acceptance criterion {n} failed: {e}");
        }
    }
}

struct SuiteRun {
    reports: Vec<LawReport>,
    elapsed: Duration,
}

fn suite() -> &'static SuiteRun {
    static SUITE: OnceLock<SuiteRun> = OnceLock::new();
    SUITE.get_or_init(|| {
        let start = Instant::now();
        let reports = run_core_suite(&SuiteConfig::default());
        SuiteRun {
            reports,
            elapsed: start.elapsed(),
        }
    })
}

fn assert_all_pass<'a>(
    reports: impl Iterator<Item = &'a LawReport>,
    what: &str,
) -> Result<usize, String> {
    let mut n = 0;
    for r in reports {
        n += 1;
        if !r.pass {
            return Err(format!("{what}: {}", r.render()));
        }
    }
    if n == 0 {
        return Err(format!("{what}: no reports matched"));
    }
    Ok(n)
}

#[test]
fn criterion_1_worked_example() {
    criterion(1, "square through the optional pair", || {
        let optic = compose(
            pi1_optic::<i64, i64, bool>(),
            the_optic::<(i64, bool), (i64, bool)>(),
        );
        let square = optic
            .apply_full::<FnArrow>(hom(|x: i64| x * x))
            .map_err(|e| e.to_string())?;
        let got = square(Some((3, true)));
        if got != Some((9, true)) {
            return Err(format!("expected Some((9, true)), got {got:?}"));
        }
        if square(None).is_some() {
            return Err("expected None to pass through".to_string());
        }
        Ok(())
    });
}

#[test]
fn criterion_2_roundtrip_theorems() {
    criterion(2, "representation round-trips", || {
        let run = suite();
        let roundtrips = || {
            run.reports
                .iter()
                .filter(|r| r.law.starts_with("roundtrip/"))
        };
        let n = assert_all_pass(roundtrips(), "round-trip")?;
        // Both directions present for every optic kind, examples and
        // random records included.
        for kind in ["adapter", "lens", "prism", "traversal"] {
            for direction in ["p2c-of-c2p", "c2p-of-p2c"] {
                let prefix = format!("roundtrip/{kind}/{direction}/");
                if !roundtrips().any(|r| r.law.starts_with(&prefix)) {
                    return Err(format!("missing checks under {prefix}"));
                }
            }
            let random = format!("roundtrip/{kind}/p2c-of-c2p/random");
            if !roundtrips().any(|r| r.law == random) {
                return Err(format!("missing {random}"));
            }
        }
        if run.elapsed > Duration::from_secs(60) {
            return Err(format!("suite took {:?}, over the minute budget", run.elapsed));
        }
        println!("  ({n} round-trip checks in a {:?} suite run)", run.elapsed);
        Ok(())
    });
}

#[test]
fn criterion_3_law_suites() {
    criterion(3, "hierarchy laws at every entry", || {
        let run = suite();
        let groups: &[(&str, &[&str])] = &[
            ("profunctor/", &[
                "function arrow",
                "upstar option",
                "upstar state",
                "upstar const",
                "adapter",
                "lens",
                "prism",
                "traversal",
            ]),
            ("cartesian/", &[
                "function arrow",
                "upstar option",
                "upstar state",
                "upstar const",
                "lens",
                "traversal",
            ]),
            ("cocartesian/", &[
                "function arrow",
                "upstar option",
                "upstar state",
                "upstar const",
                "prism",
                "traversal",
            ]),
            ("monoidal/", &[
                "function arrow",
                "upstar option",
                "upstar state",
                "upstar const",
                "traversal",
            ]),
        ];
        for (prefix, instances) in groups {
            for instance in *instances {
                let matching = run
                    .reports
                    .iter()
                    .filter(|r| r.law.starts_with(prefix) && r.instance == *instance);
                assert_all_pass(matching, &format!("{prefix} at {instance}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_4_lemma_checks() {
    criterion(4, "supporting lemmas", || {
        let run = suite();
        let lemmas = run.reports.iter().filter(|r| r.law.starts_with("lemma/"));
        let n = assert_all_pass(lemmas, "lemma")?;
        for name in [
            "lemma/first-discard-copy",
            "lemma/right-collapse",
            "lemma/traverse-done",
            "lemma/traverse-single",
            "lemma/traverse-at-traversal-is-travfunlist",
            "lemma/right-on-left-is-identity",
            "lemma/travfunlist-single-fuses",
        ] {
            if !run.reports.iter().any(|r| r.law == name) {
                return Err(format!("missing {name}"));
            }
        }
        println!("  ({n} lemma checks)");
        Ok(())
    });
}

#[test]
fn criterion_5_traversal_oracle_equivalence() {
    criterion(5, "stateful traversal agrees with oracles", || {
        let optic = inorder_optic::<i64, bool>();
        let via_optic =
            traverse_of::<StateF<i64>, _>(&optic, hom(count_odd)).map_err(|e| e.to_string())?;
        let mut rng = rng_from(0xacce5);
        for i in 0..500 {
            let tree = Tree::<i64>::generate(&mut rng);
            if tree.size() > 31 {
                return Err(format!("tree {i} exceeds 31 nodes"));
            }
            let (got_tree, got_count) = via_optic(tree.clone()).run(0);
            let (direct_tree, direct_count) =
                inorder::<StateF<i64>, i64, bool>(&hom(count_odd), &tree).run(0);
            let (oracle_tree, oracle_count) = oracle::count_odd_fold(&tree, 0);
            if got_tree != direct_tree || got_count != direct_count {
                return Err(format!("optic and direct traversal disagree on tree {i}"));
            }
            if got_tree != oracle_tree || got_count != oracle_count {
                return Err(format!("traversals disagree with fold oracle on tree {i}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_6_profunctor_morphisms() {
    criterion(6, "conversion functions are profunctor morphisms", || {
        let run = suite();
        let morphisms = run
            .reports
            .iter()
            .filter(|r| r.law.starts_with("morphism/"));
        let n = assert_all_pass(morphisms, "morphism")?;
        if n != 4 {
            return Err(format!("expected 4 morphism checks, found {n}"));
        }
        Ok(())
    });
}

#[test]
fn criterion_7_mutation_sensitivity() {
    criterion(7, "injected faults are caught", || {
        let reports = mutation::all(&SuiteConfig::default());
        if reports.len() != 3 {
            return Err(format!("expected 3 fault injections, got {}", reports.len()));
        }
        for r in &reports {
            if r.pass {
                return Err(format!(
                    "fault was not caught: {} @ {}",
                    r.law, r.instance
                ));
            }
            if r.counterexample.is_none() {
                return Err(format!("caught fault carries no counterexample: {}", r.law));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_8_cli_golden() {
    criterion(8, "contact-book command line", || {
        let data = |name: &str| -> PathBuf {
            Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
        };
        let bin = env!("CARGO_BIN_EXE_contacts");
        let run = |args: &[&str]| {
            Command::new(bin)
                .args(args)
                .output()
                .map_err(|e| e.to_string())
        };

        let sample = data("sample_book.json");
        let sample = sample.to_str().unwrap();

        let list = run(&["list", sample])?;
        if !list.status.success() || list.stdout != b"555 123 4567\n5551112222\n" {
            return Err(format!(
                "list output wrong: {:?}",
                String::from_utf8_lossy(&list.stdout)
            ));
        }

        let golden = std::fs::read(data("tidy_golden.json")).map_err(|e| e.to_string())?;
        let tidy = run(&["tidy", sample])?;
        if tidy.stdout != golden {
            return Err("tidy output differs from golden".to_string());
        }
        let text = String::from_utf8_lossy(&tidy.stdout);
        if !text.contains("(555) 123-4567") || !text.contains("(555) 111-2222") {
            return Err("tidy output missing formatted numbers".to_string());
        }

        // Idempotence, byte for byte.
        let dir = std::env::temp_dir().join("contacts-acceptance");
        std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
        let once = dir.join("once.json");
        std::fs::write(&once, &tidy.stdout).map_err(|e| e.to_string())?;
        let twice = run(&["tidy", once.to_str().unwrap()])?;
        if twice.stdout != tidy.stdout {
            return Err("tidy is not idempotent byte-for-byte".to_string());
        }

        let malformed = run(&["list", data("malformed.json").to_str().unwrap()])?;
        if malformed.status.code() != Some(2) {
            return Err(format!(
                "malformed input exited {:?}, expected 2",
                malformed.status.code()
            ));
        }
        Ok(())
    });
}

#[test]
fn capability_union_rule() {
    // Composing a cartesian-only optic with a cocartesian-only optic
    // yields an optic applicable exactly at instances providing both.
    let optic = compose(
        pi1_optic::<i64, i64, bool>(),
        the_optic::<(i64, bool), (i64, bool)>(),
    );
    assert_eq!(optic.required(), CapSet::CARTESIAN.union(CapSet::COCARTESIAN));
    assert!(lens_p2c(&optic).is_err(), "cartesian-only entry must refuse");
    assert!(prism_p2c(&optic).is_err(), "cocartesian-only entry must refuse");
    assert!(optic.apply_full::<FnArrow>(hom(|x: i64| x + 1)).is_ok());
}
