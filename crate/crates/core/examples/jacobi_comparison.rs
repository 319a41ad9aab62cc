//! Classic floor-based algorithm vs the periodic modification, side by side.
//!
//! Both iterate the same state update on exact elements of Q(alpha), started
//! from `(r/alpha, alpha)`. The classic run reads quotients with the floor
//! function; whether it must become periodic on cubic couples is open. The
//! modified run replaces floors with two linear functionals and provably
//! cycles with pre-period 2 and period 3; its quotients are the closed-form
//! expansion. The comparison report carries certified per-step error bounds
//! for the convergents of both quotient streams.
//!
//! ```bash
//! cargo run -p cubic-tcf --example jacobi_comparison
//! ```

use cubic_tcf::jacobi::compare_runs;
use cubic_tcf::poly::parse_cubic;
use cubic_tcf::rat::to_decimal;
use num_bigint::BigInt;

fn main() {
    let f = parse_cubic("x^3-5x^2+x-3").unwrap();
    let report = compare_runs(&f, &BigInt::from(5), 10).unwrap();

    println!("modified run (quotients, then certified error of B_n/C_n against alpha):");
    for (n, (a, b)) in report.modified.quotients.iter().enumerate() {
        let err = report.modified_errors[n]
            .as_ref()
            .map(|(_, e2)| to_decimal(e2, 2))
            .unwrap_or_else(|| "skip".into());
        println!("  n = {n}  a = {a:<10} b = {b:<10} |B/C - alpha| <= {err}");
    }
    println!(
        "  cycle: {:?}  (exact state equality x5 = x2, y5 = y2)",
        report.modified.cycle
    );
    println!();

    println!("classic run:");
    for (n, (a, b)) in report.classic.quotients.iter().enumerate() {
        let err = report.classic_errors[n]
            .as_ref()
            .map(|(_, e2)| to_decimal(e2, 2))
            .unwrap_or_else(|| "skip".into());
        println!("  n = {n}  a = {a:<10} b = {b:<10} |B/C - alpha| <= {err}");
    }
    match report.classic.cycle {
        Some((pre, period)) => println!("  cycle: pre-period {pre}, period {period}"),
        None => {
            println!("  no cycle within the step budget (periodicity here is an open question)")
        }
    }
}
