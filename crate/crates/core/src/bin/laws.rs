//! Runs the law suite and reports results.
//!
//! Prints one human-readable line per check to stdout; `--jsonl PATH`
//! additionally writes one JSON object per line. Exit status is 0 when
//! every check passes, 1 otherwise.

use std::io::Write;
use std::process::ExitCode;

use optics_core::laws::{failures, run_core_suite, run_wellbehaved_suite, SuiteConfig};

struct Args {
    seed: u64,
    samples: usize,
    probes: usize,
    jsonl: Option<String>,
    wellbehaved: bool,
}

fn parse_args() -> Result<Args, String> {
    let mut args = Args {
        seed: 0,
        samples: 1000,
        probes: 4,
        jsonl: None,
        wellbehaved: false,
    };
    let mut it = std::env::args().skip(1);
    while let Some(arg) = it.next() {
        let mut take = |name: &str| {
            it.next()
                .ok_or_else(|| format!("{name} expects a value"))
        };
        match arg.as_str() {
            "--seed" => args.seed = take("--seed")?.parse().map_err(|e| format!("--seed: {e}"))?,
            "--samples" => {
                args.samples = take("--samples")?
                    .parse()
                    .map_err(|e| format!("--samples: {e}"))?
            }
            "--probes" => {
                args.probes = take("--probes")?
                    .parse()
                    .map_err(|e| format!("--probes: {e}"))?
            }
            "--jsonl" => args.jsonl = Some(take("--jsonl")?),
            "--wellbehaved" => args.wellbehaved = true,
            "--help" | "-h" => {
                println!(
                    "usage: laws [--seed N] [--samples N] [--probes N] [--jsonl PATH] [--wellbehaved]"
                );
                std::process::exit(0);
            }
            other => return Err(format!("unknown argument: {other}")),
        }
    }
    Ok(args)
}

fn main() -> ExitCode {
    let args = match parse_args() {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let cfg = SuiteConfig {
        seed: args.seed,
        samples: args.samples,
        probes: args.probes,
    };

    let mut reports = run_core_suite(&cfg);
    if args.wellbehaved {
        reports.extend(run_wellbehaved_suite(&cfg));
    }

    for r in &reports {
        println!("{}", r.render());
    }
    let fails = failures(&reports);
    println!(
        "{} checks, {} passed, {} failed (seed {}, {} samples)",
        reports.len(),
        reports.len() - fails.len(),
        fails.len(),
        cfg.seed,
        cfg.samples
    );

    if let Some(path) = &args.jsonl {
        let mut out = match std::fs::File::create(path) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("error: cannot write {path}: {e}");
                return ExitCode::from(2);
            }
        };
        for r in &reports {
            if writeln!(out, "{}", r.to_jsonl()).is_err() {
                eprintln!("error: short write to {path}");
                return ExitCode::from(2);
            }
        }
    }

    if fails.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
