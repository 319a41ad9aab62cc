//! Exact arithmetic in Q(alpha) and the two partial-quotient functionals.
//!
//! Elements are coordinate triples over `{1, alpha, alpha^2}`; products
//! reduce through `alpha^3 = p alpha^2 + q alpha + r` and inverses solve a
//! 3x3 rational system. The functionals `f` and `g` replace the floor
//! function in the periodic algorithm: both fix rationals and send
//! `alpha -> p`, while `f(alpha^2) = 2z + p^2 + 2q` and
//! `g(alpha^2) = z + p^2 + q`.
//!
//! ```bash
//! cargo run -p cubic-tcf --example field_arithmetic
//! ```

use cubic_tcf::field::FieldElem;
use cubic_tcf::poly::CubicPoly;
use cubic_tcf::rat::rat;
use num_bigint::BigInt;

fn main() {
    let f = CubicPoly::from_ints(5, -1, 3); // x^3 - 5x^2 + x - 3
    println!("modulus: {f}  (alpha^3 = 5 alpha^2 - alpha + 3)");

    let alpha = FieldElem::alpha(&f);
    let alpha_sq = FieldElem::alpha_squared(&f);

    // the reduction rule itself
    println!("alpha * alpha^2      = {}", alpha.mul(&alpha_sq));

    // r/alpha normalizes into the basis
    let r_over = FieldElem::r_over_alpha(&f);
    println!("3/alpha              = {r_over}");
    println!("alpha * (3/alpha)    = {}", alpha.mul(&r_over));

    // inversion: 1/(alpha - 5) = (alpha^2 + 1)/(-2)
    let shifted = alpha.sub_rat(&rat(5));
    let inv = shifted.invert().unwrap();
    println!("1/(alpha - 5)        = {inv}");
    println!("(alpha - 5) * that   = {}", shifted.mul(&inv));

    // the functionals at z = 5
    let z = BigInt::from(5);
    let x2_plus_z = FieldElem::from_coords(&f, rat(5), rat(0), rat(1));
    println!();
    println!(
        "f(alpha^2 + 5)       = {}   (the trace of the fundamental matrix)",
        x2_plus_z.f_map(&z)
    );
    println!("g(3/alpha)           = {}   (recovers z)", r_over.g_map(&z));
    println!("g(alpha)             = {}   (recovers p)", alpha.g_map(&z));
}
