//! The exact machinery under everything else: isolating intervals, sign and
//! floor queries, modulus classification, dominance certificates.
//!
//! No floating point is involved at any stage; every comparison comes from
//! rational interval arithmetic refined until it resolves, and ties are
//! reported only when proven exactly.
//!
//! ```bash
//! cargo run -p cubic-tcf --example root_certificates
//! ```

use cubic_tcf::field::FieldElem;
use cubic_tcf::poly::CubicPoly;
use cubic_tcf::rat::{frac, to_decimal};
use cubic_tcf::roots::{
    classify_moduli, dominance_certificate, floor_at_root, isolate_real_roots, sign_at_root,
};
use num_bigint::BigInt;

fn main() {
    let f = CubicPoly::from_ints(5, -1, 3); // x^3 - 5x^2 + x - 3
    println!("polynomial: {f}");

    let iv = isolate_real_roots(&f).unwrap().remove(0);
    println!("isolating interval: ({}, {})", iv.lo(), iv.hi());
    let tight = iv.refine(&frac(1, 1_000_000));
    println!(
        "refined to width 1e-6: ({}, {})",
        to_decimal(tight.lo(), 10),
        to_decimal(tight.hi(), 10)
    );

    // exact sign and floor queries on field elements
    let alpha = FieldElem::alpha(&f);
    let alpha_minus_5 = alpha.sub_rat(&frac(5, 1));
    println!("sign(alpha - 5)  = {}", sign_at_root(&alpha_minus_5, &iv));
    println!("floor(alpha)     = {}", floor_at_root(&alpha, &iv));
    println!(
        "floor(3/alpha)   = {}",
        floor_at_root(&FieldElem::r_over_alpha(&f), &iv)
    );
    println!();

    // modulus classification across the three roots
    for poly in [
        CubicPoly::from_ints(5, -1, 3),  // real root strictly largest
        CubicPoly::from_ints(2, -1, -1), // real root strictly smallest
        CubicPoly::from_ints(0, 0, 2),   // pure cube: exact tie
        CubicPoly::from_ints(-1, 2, 1),  // three real roots
    ] {
        let mo = classify_moduli(&poly).unwrap();
        println!("{poly}");
        println!("  ranking: {:?}  ties: {:?}", mo.ranking(), mo.ties());
    }
    println!();

    // dominance of z + alpha^2 among the eigenvalues of the fundamental
    // matrix decides whether the direct expansion converges
    for z in [-1i64, 0, 1, 5] {
        let cert = dominance_certificate(&f, &iv, &BigInt::from(z)).unwrap();
        println!(
            "z = {z:>2}: verdict {:<5} (Tr = {}, I1 = {}, det = {})",
            cert.verdict, cert.invariants.tr, cert.invariants.i1, cert.invariants.det
        );
    }
}
