//! All three roots of a totally real cubic, each through its own pipeline.
//!
//! The roots of `x^3 + x^2 - 2x - 1` are `2cos(2pi/7)`, `2cos(4pi/7)` and
//! `2cos(8pi/7)`. Sorted by modulus they fall into the three cases:
//! the largest goes through the direct construction, the smallest through
//! the reflected cubic, and the remaining one through a rational root shift
//! (its shifted copy dominates, and the leading quotient absorbs the shift
//! afterwards).
//!
//! ```bash
//! cargo run -p cubic-tcf --example three_real_roots
//! ```

use cubic_tcf::expansion::{expand_root, ExpandOptions, RootSelector};
use cubic_tcf::poly::parse_cubic;
use cubic_tcf::rat::{frac, to_decimal};
use cubic_tcf::roots::classify_moduli;
use cubic_tcf::tcf::evaluate;
use num_bigint::BigInt;

fn main() {
    let f = parse_cubic("x^3 + x^2 - 2x - 1").unwrap();
    println!("polynomial: {f}");

    let mo = classify_moduli(&f).unwrap();
    println!("real roots by value:");
    for (i, iv) in mo.real_roots().iter().enumerate() {
        let tight = iv.refine(&frac(1, 100_000_000));
        println!("  index {i}: ~ {}", to_decimal(&tight.midpoint(), 8));
    }
    println!("modulus ranking (descending): {:?}", mo.ranking());
    println!();

    let cases = [
        ("largest modulus ", RootSelector::LargestModulus, 3i64),
        ("smallest modulus", RootSelector::SmallestModulus, 1),
        ("largest value   ", RootSelector::ValueIndex(2), 2),
    ];
    for (label, selector, z) in cases {
        let res = expand_root(
            &f,
            selector,
            &ExpandOptions {
                z_hint: Some(BigInt::from(z)),
                ..Default::default()
            },
        )
        .unwrap();
        println!("{label}  via {}", res.pipeline.as_str());
        if let Some(k) = &res.shift {
            println!("  shift k:   {k}");
        }
        println!(
            "  couple:    ({}, {})",
            res.couple_desc.0, res.couple_desc.1
        );
        println!("  expansion: {}", res.tcf);
        let eval = evaluate(&res.tcf, &frac(1, 10_000_000_000i64), 200);
        println!(
            "  limits:    ({}, {})",
            to_decimal(&eval.first, 8),
            to_decimal(&eval.second, 8)
        );
        println!();
    }
}
