//! Internal dense univariate polynomials over `Rat`.
//!
//! Coefficients are stored in ascending degree order; the vector is empty for
//! the zero polynomial and otherwise ends in a nonzero coefficient. This is
//! support machinery for Sturm sequences and structural identities, not a
//! public polynomial API.

use crate::rat::Rat;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct DensePoly {
    coeffs: Vec<Rat>,
}

impl DensePoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(i.into()))
            .collect();
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        Self::new(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Exact quotient and remainder over Q. Panics on zero divisor.
    pub fn divmod(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let dd = div.degree().unwrap();
        let lead = div.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading().unwrap() / &lead;
            let shift = rd - dd;
            quo[shift] = factor.clone();
            let mut sub = vec![Rat::zero(); shift];
            sub.extend(div.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&Self::new(sub));
        }
        (Self::new(quo), rem)
    }

    pub fn rem(&self, div: &Self) -> Self {
        self.divmod(div).1
    }
}

/// Sturm chain of `f` (assumed square-free by the caller); the standard
/// negated-remainder sequence.
pub(crate) fn sturm_chain(f: &DensePoly) -> Vec<DensePoly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]).neg();
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_variations(chain: &[DensePoly], x: &Rat) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|p| {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        })
        .filter(|s| *s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of the chain's polynomial in `(lo, hi]`.
pub(crate) fn count_roots(chain: &[DensePoly], lo: &Rat, hi: &Rat) -> usize {
    sign_variations(chain, lo) - sign_variations(chain, hi)
}

/// Isolates the real roots of a square-free polynomial with nonzero values at
/// the returned endpoints. Each `(lo, hi)` holds exactly one root, open at
/// both ends; results are sorted ascending.
pub(crate) fn isolate_square_free(f: &DensePoly) -> Vec<(Rat, Rat)> {
    let deg = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Vec::new(),
    };
    let _ = deg;
    let chain = sturm_chain(f);
    // Cauchy bound for f scaled monic
    let lead = f.leading().unwrap();
    let bound = f
        .coeffs()
        .iter()
        .map(|c| (c / lead).abs())
        .fold(Rat::zero(), |m, c| if c > m { c } else { m })
        + Rat::one();
    let mut out = Vec::new();
    split(f, &chain, &(-bound.clone()), &bound, &mut out);
    out
}

fn split(f: &DensePoly, chain: &[DensePoly], lo: &Rat, hi: &Rat, out: &mut Vec<(Rat, Rat)>) {
    let n = count_roots(chain, lo, hi);
    if n == 0 {
        return;
    }
    if n == 1 && !f.eval(lo).is_zero() && !f.eval(hi).is_zero() {
        out.push((lo.clone(), hi.clone()));
        return;
    }
    let two = Rat::from_integer(2.into());
    let mut mid = (lo + hi) / &two;
    // nudge off a root hit by the midpoint
    while f.eval(&mid).is_zero() {
        mid = (lo + &mid) / &two;
    }
    split(f, chain, lo, &mid, out);
    split(f, chain, &mid, hi, out);
}
