//! The three equivalent convergent formalisms.
//!
//! Convergent triples `(A_n, B_n, C_n)` come from order-3 recurrences with
//! initials `A_(-2)=0, A_(-1)=1 / B_(-2)=1, B_(-1)=0 / C_(-2)=C_(-1)=0`;
//! equivalently as columns of cumulative products of rational step matrices
//! `[[a,1,0],[b,0,1],[1,0,0]]`; and, after clearing denominators, as ratios
//! of three integer sequences attached to integer-entry step matrices. This
//! example runs all three on the same expansion and prints the matching
//! values, including the integer product of pre-period times period.
//!
//! ```bash
//! cargo run -p cubic-tcf --example convergents_and_matrices
//! ```

use cubic_tcf::expansion::hermite_expansion;
use cubic_tcf::poly::parse_cubic;
use cubic_tcf::tcf::{convergents, integer_matrix_form, matrix_form};
use num_bigint::BigInt;

fn main() {
    let f = parse_cubic("x^3-5x^2+x-3").unwrap();
    let t = hermite_expansion(&f, &BigInt::from(5)).unwrap();
    println!("expansion: {t}");
    println!();

    let conv = convergents(&t, 4);
    println!("recurrence route:");
    for c in &conv {
        println!("  n = {}  (A, B, C) = ({}, {}, {})", c.n, c.a, c.b, c.c);
    }
    println!();

    let m = matrix_form(&t, 4);
    println!("rational step-matrix product at n = 4 (columns are triples at n, n-1, n-2):");
    for row in m.rows() {
        println!(
            "  [{:>16} {:>14} {:>12}]",
            row[0].to_string(),
            row[1].to_string(),
            row[2].to_string()
        );
    }
    println!();

    let form = integer_matrix_form(&t, 4);
    println!("integer step matrices for the period:");
    for (i, step) in form.steps.iter().enumerate().skip(2) {
        println!("  step {i}:");
        for row in step.rows() {
            println!(
                "    [{:>6} {:>6} {:>6}]",
                row[0].to_string(),
                row[1].to_string(),
                row[2].to_string()
            );
        }
    }
    println!();
    println!("cumulative integer product (pre-period x period):");
    for row in form.product.rows() {
        println!(
            "  [{:>12} {:>10} {:>8}]",
            row[0].to_string(),
            row[1].to_string(),
            row[2].to_string()
        );
    }
    println!();
    println!(
        "its first-column ratios reduce to the n = 4 convergents: {} and {}",
        form.seqs.first_ratio(4).unwrap(),
        form.seqs.second_ratio(4).unwrap(),
    );
    assert_eq!(form.seqs.first_ratio(4), conv[4].first_ratio());
    assert_eq!(form.seqs.second_ratio(4), conv[4].second_ratio());
}
