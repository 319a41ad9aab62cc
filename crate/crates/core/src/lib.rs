//! Periodic ternary continued fractions for cubic irrationals.
//!
//! A cubic irrational `alpha` (a real root of an irreducible
//! `x^3 - p x^2 - q x - r` over Q) admits a periodic two-sequence continued
//! fraction with pre-period 2 and period 3 whose convergents
//! `(A_n/C_n, B_n/C_n)` approximate the couple `(r/alpha, alpha)`
//! simultaneously. This crate builds that expansion with exact rational
//! arithmetic end to end:
//!
//! - [`poly`]: monic cubics, parsing, reflection and root shifts;
//! - [`roots`]: Sturm-certified real-root isolation, exact sign/floor
//!   queries, modulus classification and dominance certificates;
//! - [`field`]: arithmetic in Q(alpha) and the two partial-quotient
//!   functionals;
//! - [`cerruti`]: the fundamental matrix, its invariants and the coordinate
//!   sequences of `(z + alpha^2)^n`;
//! - [`tcf`]: convergent recurrences, rational and integer matrix
//!   formalisms, evaluation and the diagonal scaling transform;
//! - [`expansion`]: the expansion of any selected real root through the
//!   direct, reflected and shifted pipelines;
//! - [`jacobi`]: the classic floor-based algorithm and its periodic
//!   modification, on exact field states;
//! - [`verify`]: the built-in golden suite over the worked examples.
//!
//! The `examples/` directory walks through each capability; the `cubic-tcf`
//! binary exposes the same operations as subcommands.

pub mod cerruti;
mod dense;
pub mod error;
pub mod expansion;
pub mod field;
pub mod jacobi;
pub mod matrix;
pub mod poly;
pub mod rat;
pub mod roots;
pub mod tcf;
pub mod verify;

pub use error::{Error, Result};
pub use expansion::{
    choose_z, cube_root_expansion, expand_root, hermite_expansion, ExpandOptions, ExpansionResult,
    Pipeline, RootSelector,
};
pub use field::FieldElem;
pub use poly::{parse_cubic, CubicPoly};
pub use rat::Rat;
pub use roots::{
    classify_moduli, dominance_certificate, floor_at_root, isolate_real_roots, sign_at_root,
    DominanceCertificate, IsolatingInterval, ModulusOrder, RootId,
};
pub use tcf::{convergent_stream, convergents, evaluate, scale_transform, TernaryCF};
