//! The fundamental matrix and the coordinate sequences behind the expansion.
//!
//! `(z + alpha^2)^n` written over `{1, alpha, alpha^2}` gives three
//! sequences obeying one order-3 recurrence whose characteristic polynomial
//! is that of the 3x3 matrix N; the matrix power `N^n` is patterned by the
//! same triple, and for dominance-certified `z` the coordinate ratios tend
//! to `r/alpha` and `alpha - p`.
//!
//! ```bash
//! cargo run -p cubic-tcf --example cerruti_sequences
//! ```

use cubic_tcf::cerruti::{
    binet_ratios, build_n, charpoly_root_check, invariants, matrix_power_check, mu_triples,
};
use cubic_tcf::poly::CubicPoly;
use cubic_tcf::rat::to_decimal;
use cubic_tcf::roots::isolate_real_roots;
use num_bigint::BigInt;

fn main() {
    let f = CubicPoly::from_ints(5, -1, 3);
    let z = BigInt::from(5);
    let n = build_n(&f, &z);
    println!("fundamental matrix for ({f}, z = 5):");
    for row in n.matrix().rows() {
        println!(
            "  [{:>3} {:>3} {:>3}]",
            row[0].to_string(),
            row[1].to_string(),
            row[2].to_string()
        );
    }
    let inv = invariants(&n);
    println!("Tr = {}, I1 = {}, det = {}", inv.tr, inv.i1, inv.det);
    println!(
        "charpoly vanishes on z + t^2 mod the cubic: {}",
        charpoly_root_check(&f, &z)
    );
    println!();

    println!("coordinate triples of (z + alpha^2)^n:");
    for mu in mu_triples(&f, &z, 6) {
        println!("  n = {}  ({}, {}, {})", mu.n, mu.mu0, mu.mu1, mu.mu2);
        assert!(matrix_power_check(&n, mu.n));
    }
    println!("(each also patterns the exact matrix power N^n)");
    println!();

    let iv = isolate_real_roots(&f).unwrap().remove(0);
    println!("ratio mu1/mu2 + p converges to alpha ~ 4.9207:");
    for idx in [5usize, 10, 20, 40] {
        let (_, second) = binet_ratios(&f, &z, &iv, idx).unwrap();
        println!("  n = {:>2}: {}", idx, to_decimal(&(&second + f.p()), 12));
    }
}
