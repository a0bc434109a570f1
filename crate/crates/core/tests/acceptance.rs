//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are printed even when the target passes.
//!
//! Criterion 6 asks for the literal count equality, which is false whenever a
//! solvable problem has `H^1(G/M, A) != 0`. That line reports FAIL; the target
//! still succeeds as long as the corrected statement holds everywhere and the
//! literal failures are exactly the predicted ones.

use std::process::ExitCode;
use std::time::Instant;

use descent3::verify::{run_criterion, summarize, VerifyOptions, CRITERIA, LITERAL_BIJECTION};

const KNOWN_UNATTAINABLE: u8 = 6;

fn main() -> ExitCode {
    let opts = VerifyOptions::default();
    let mut ok = true;
    println!("acceptance: primes {:?}, orders <= {}", opts.primes, opts.max_order);
    for &(n, title) in CRITERIA.iter().filter(|c| c.0 <= 10) {
        let start = Instant::now();
        let checks = match run_criterion(n, &opts) {
            Ok(c) => c,
            Err(e) => {
                println!("criterion {n:>2}: FAIL  {title}: error {e}");
                ok = false;
                continue;
            }
        };
        let s = summarize(n, &checks);
        let secs = start.elapsed().as_secs_f64();
        if n == KNOWN_UNATTAINABLE {
            let literal = checks.iter().find(|c| c.name == LITERAL_BIJECTION).map_or(true, |c| c.passed);
            let mark = if literal { "PASS" } else { "FAIL" };
            println!(
                "criterion {n:>2}: {mark}  {title} (literal count; known unattainable, corrected statement {} on {} checks, {} unexpected) [{secs:.2}s]",
                if s.unexpected == 0 { "holds" } else { "FAILS" },
                s.checks,
                s.unexpected
            );
            for c in checks.iter().filter(|c| c.unexpected()) {
                println!("    unexpected: {} ({})", c.name, c.detail);
            }
            ok &= s.unexpected == 0;
            continue;
        }
        let mark = if s.unexpected == 0 { "PASS" } else { "FAIL" };
        println!("criterion {n:>2}: {mark}  {title} ({} checks) [{secs:.2}s]", s.checks);
        for c in checks.iter().filter(|c| c.unexpected()).take(10) {
            println!("    unexpected: {} ({})", c.name, c.detail);
        }
        ok &= s.unexpected == 0 && s.checks > 0;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
