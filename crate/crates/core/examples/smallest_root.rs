//! Expanding a root that is smallest in modulus.
//!
//! `x^3 - 2x^2 + x + 1` has one real root (~ -0.4656) and its modulus is
//! smaller than the complex pair's, so no `z` makes the direct construction
//! work. The reflected cubic swaps every root for its reciprocal, putting
//! `1/alpha` strictly on top; expanding there and rescaling the quotients by
//! `rho = r` lands back on a periodic representation of `alpha` itself.
//!
//! ```bash
//! cargo run -p cubic-tcf --example smallest_root
//! ```

use cubic_tcf::expansion::{expand_root, hermite_expansion, ExpandOptions, RootSelector};
use cubic_tcf::poly::parse_cubic;
use cubic_tcf::rat::{frac, to_decimal};
use cubic_tcf::tcf::{evaluate, scale_transform};
use num_bigint::BigInt;

fn main() {
    let f = parse_cubic("x^3 - 2x^2 + x + 1").unwrap();
    println!("polynomial:          {f}");

    let g = f.reflect().unwrap();
    println!("reflected:           {g}");

    // the reciprocal root dominates on the reflected cubic; z = 5 certifies
    let base = hermite_expansion(&g, &BigInt::from(5)).unwrap();
    println!("(-alpha, 1/alpha):   {base}");

    // rescale with rho = r = -1: component limits become (alpha, -1/alpha)
    let scaled = scale_transform(&base, f.r()).unwrap();
    println!("(alpha, -1/alpha):   {scaled}");

    // the dispatcher does all of the above in one call
    let res = expand_root(
        &f,
        RootSelector::SmallestModulus,
        &ExpandOptions {
            z_hint: Some(BigInt::from(5)),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(res.tcf, scaled);
    println!("pipeline:            {}", res.pipeline.as_str());

    let eval = evaluate(&res.tcf, &frac(1, 1_000_000_000_000i64), 100);
    println!(
        "evaluates to:        ({}, {})  [delta {} at n = {}]",
        to_decimal(&eval.first, 10),
        to_decimal(&eval.second, 10),
        to_decimal(&eval.achieved, 2),
        eval.n_used
    );
}
