//! The wire formats: expansion and transcript JSON.
//!
//! Rationals serialize as `"num/den"` strings, the period is a separate
//! field, and identical inputs always produce byte-identical output.
//!
//! ```bash
//! cargo run -p cubic-tcf --example json_io
//! ```

use cubic_tcf::expansion::{expand_root, ExpandOptions, RootSelector};
use cubic_tcf::jacobi::run_modified;
use cubic_tcf::poly::parse_cubic;
use cubic_tcf::tcf::TernaryCF;
use num_bigint::BigInt;

fn main() {
    let f = parse_cubic("3x^3-12x^2-4x+1").unwrap();
    let res = expand_root(
        &f,
        RootSelector::LargestModulus,
        &ExpandOptions {
            z_hint: Some(BigInt::from(1)),
            ..Default::default()
        },
    )
    .unwrap();

    let json = serde_json::to_string_pretty(&res.to_json()).unwrap();
    println!("expansion result:\n{json}\n");

    // the tcf field round-trips through the library type
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let back: TernaryCF = serde_json::from_value(value["tcf"].clone()).unwrap();
    assert_eq!(back, res.tcf);

    let transcript = run_modified(&f, &BigInt::from(1), 10).unwrap();
    println!(
        "modified-run transcript:\n{}",
        serde_json::to_string_pretty(&transcript.to_json()).unwrap()
    );
}
