//! Periodic expansion of a root that is largest in modulus.
//!
//! Walks the whole pipeline on `x^3 - 5x^2 + x - 3`: isolate the real root,
//! pick a certified `z`, build the pre-period-2 / period-3 expansion of the
//! couple `(3/alpha, alpha)`, and read simultaneous rational approximations
//! off its convergents.
//!
//! ```bash
//! cargo run -p cubic-tcf --example expand_dominant
//! ```

use cubic_tcf::expansion::{expand_root, ExpandOptions, RootSelector};
use cubic_tcf::poly::parse_cubic;
use cubic_tcf::rat::to_decimal;
use cubic_tcf::tcf::convergents;
use num_bigint::BigInt;

fn main() {
    let f = parse_cubic("x^3 - 5x^2 + x - 3").unwrap();
    println!("polynomial:  {f}");

    // z = 5 certifies dominance of z + alpha^2; choose_z would also accept
    // smaller values, the expansion just comes out with different quotients
    let res = expand_root(
        &f,
        RootSelector::LargestModulus,
        &ExpandOptions {
            z_hint: Some(BigInt::from(5)),
            ..Default::default()
        },
    )
    .unwrap();

    println!("pipeline:    {}", res.pipeline.as_str());
    println!("certified z: {}", res.z);
    println!(
        "root:        ({}, {})",
        to_decimal(res.target.lo(), 6),
        to_decimal(res.target.hi(), 6)
    );
    println!(
        "couple:      ({}, {})",
        res.couple_desc.0, res.couple_desc.1
    );
    println!("expansion:   {}", res.tcf);
    println!();
    println!("convergents (A_n/C_n approximates 3/alpha, B_n/C_n approximates alpha):");
    for c in convergents(&res.tcf, 6) {
        let (Some(first), Some(second)) = (c.first_ratio(), c.second_ratio()) else {
            continue;
        };
        println!(
            "  n = {}  {:>16} ~ {:<10}  {:>16} ~ {}",
            c.n,
            first.to_string(),
            to_decimal(&first, 6),
            second.to_string(),
            to_decimal(&second, 6),
        );
    }
}
