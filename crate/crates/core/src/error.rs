//! Crate-wide error type.

use crate::rat::Rat;
use num_bigint::BigInt;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Malformed polynomial or number text.
    Parse(String),
    /// Input polynomial does not have degree 3.
    NotCubic { degree: usize },
    /// A rational root was found where an irreducible cubic is required.
    Reducible { root: Rat },
    /// The constant term vanishes (zero is a root), so reflection is undefined.
    ZeroConstantTerm,
    /// Attempt to invert the zero element of the field.
    DivisionByZeroElement,
    /// `d` is a perfect cube, so its cube root is rational.
    PerfectCube { d: BigInt },
    /// A parameter that must be nonzero was zero.
    ZeroParameter(&'static str),
    /// No integer in `[-window, window]` certifies dominance for the target root.
    NoValidZ { window: u32 },
    /// A caller-supplied `z` fails the dominance certificate.
    ZNotCertified { z: BigInt },
    /// The shift search schedule was exhausted without a certified pipeline.
    NoShiftFound { attempts: u32 },
    /// The root selector cannot be satisfied for this polynomial.
    UnresolvableSelector(String),
    /// The requested sequence term has a vanishing denominator.
    VanishingDenominator { index: usize },
    /// An algorithm step hit an exactly zero denominator.
    ZeroDenominatorStep { step: usize },
    /// Operation requires a ternary continued fraction of shape (2, 3).
    WrongShape { pre: usize, period: usize },
    /// I/O failure (CLI only).
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NotCubic { degree } => write!(f, "expected degree 3, got degree {degree}"),
            Error::Reducible { root } => write!(f, "polynomial is reducible: rational root {root}"),
            Error::ZeroConstantTerm => write!(f, "constant term is zero (zero is a root)"),
            Error::DivisionByZeroElement => write!(f, "cannot invert the zero element"),
            Error::PerfectCube { d } => write!(f, "{d} is a perfect cube"),
            Error::ZeroParameter(name) => write!(f, "parameter {name} must be nonzero"),
            Error::NoValidZ { window } => {
                write!(
                    f,
                    "no z in [-{window}, {window}] certifies dominance for the target root"
                )
            }
            Error::ZNotCertified { z } => {
                write!(f, "z = {z} does not certify dominance for the target root")
            }
            Error::NoShiftFound { attempts } => {
                write!(f, "no certified shift found after {attempts} attempts")
            }
            Error::UnresolvableSelector(msg) => {
                write!(f, "root selector cannot be resolved: {msg}")
            }
            Error::VanishingDenominator { index } => {
                write!(f, "sequence denominator vanishes at index {index}")
            }
            Error::ZeroDenominatorStep { step } => {
                write!(f, "exact zero denominator at step {step}")
            }
            Error::WrongShape { pre, period } => {
                write!(f, "expected shape (2, 3), got ({pre}, {period})")
            }
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
