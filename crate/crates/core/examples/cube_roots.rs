//! Explicit periodic expansions of cube roots.
//!
//! For a non-cube integer `d` the couple `(d^(2/3), d^(1/3))` has the fully
//! explicit expansion with pre-period `{z, 2z/d}` / `{0, -z^2/d}` and period
//! `{3dz/(z^3+d^2), 3z, 3z/d}` / `{-3z^2/(z^3+d^2), -3dz^2/(z^3+d^2),
//! -3z^2/d}` — exactly the general construction specialized to `p = q = 0`.
//! Note the pure cube is the one family where the real root *ties* the
//! complex pair in modulus; dominance of `z + alpha^2` (any `z > 0`) is what
//! makes the expansion converge anyway.
//!
//! ```bash
//! cargo run -p cubic-tcf --example cube_roots
//! ```

use cubic_tcf::expansion::{cube_root_expansion, hermite_expansion};
use cubic_tcf::poly::CubicPoly;
use cubic_tcf::rat::{to_decimal, Rat};
use cubic_tcf::roots::classify_moduli;
use cubic_tcf::tcf::evaluate;
use num_bigint::BigInt;

fn main() {
    // the modulus tie of the pure cube, certified exactly
    let mo = classify_moduli(&CubicPoly::from_ints(0, 0, 2)).unwrap();
    println!("x^3 - 2 proven modulus ties: {:?}", mo.ties());
    println!();

    for d in [2i64, 3, 5] {
        let t = cube_root_expansion(&BigInt::from(d), &BigInt::from(1)).unwrap();
        // identical to the general construction on x^3 - d
        let general = hermite_expansion(&CubicPoly::from_ints(0, 0, d), &BigInt::from(1)).unwrap();
        assert_eq!(t, general);

        let eval = evaluate(&t, &Rat::new(1.into(), BigInt::from(10).pow(13)), 80);
        println!("d = {d}:");
        println!("  expansion: {t}");
        println!("  {d}^(1/3) ~ {}", to_decimal(&eval.second, 12));
        println!("  {d}^(2/3) ~ {}", to_decimal(&eval.first, 12));
        println!();
    }
}
