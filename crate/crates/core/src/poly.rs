//! Monic cubic polynomials over Q in the fixed sign convention
//! `x^3 - p x^2 - q x - r`.
//!
//! Every cubic handled by this crate is stored in that form; non-monic input
//! is normalized on parse. Irreducibility over Q is equivalent, for a cubic,
//! to the absence of a rational root, and `rational_root` decides that
//! exactly (no factoring: candidate roots are read off isolating intervals of
//! an integer companion polynomial).

use crate::dense::{isolate_square_free, sturm_chain, DensePoly};
use crate::error::{Error, Result};
use crate::rat::{frac, parse_rat, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The cubic `x^3 - p x^2 - q x - r`.
#[derive(Clone, Debug, PartialEq)]
pub struct CubicPoly {
    p: Rat,
    q: Rat,
    r: Rat,
}

impl CubicPoly {
    pub fn new(p: Rat, q: Rat, r: Rat) -> Self {
        CubicPoly { p, q, r }
    }

    pub fn from_ints(p: i64, q: i64, r: i64) -> Self {
        CubicPoly::new(
            Rat::from_integer(p.into()),
            Rat::from_integer(q.into()),
            Rat::from_integer(r.into()),
        )
    }

    pub fn p(&self) -> &Rat {
        &self.p
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn r(&self) -> &Rat {
        &self.r
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        ((x - &self.p) * x - &self.q) * x - &self.r
    }

    /// `pq + r`, the recurring combination `(alpha^2 - q)(alpha - p)`.
    /// Nonzero whenever the cubic is irreducible.
    pub fn pq_plus_r(&self) -> Rat {
        &self.p * &self.q + &self.r
    }

    pub(crate) fn dense(&self) -> DensePoly {
        DensePoly::new(vec![
            -self.r.clone(),
            -self.q.clone(),
            -self.p.clone(),
            Rat::one(),
        ])
    }

    /// A rational root if one exists; `None` means irreducible over Q.
    ///
    /// Scaling by the cleared leading coefficient turns the question into
    /// integer roots of a monic integer cubic, which are isolated and tested
    /// exactly. When several rational roots exist the one smallest in
    /// absolute value is returned, positive before negative.
    pub fn rational_root(&self) -> Option<Rat> {
        // clear denominators: a3 x^3 + a2 x^2 + a1 x + a0 with integer ai
        let lcm = self.p.denom().lcm(self.q.denom()).lcm(self.r.denom());
        let a3 = lcm.clone();
        let a2 = -(&self.p * Rat::from_integer(lcm.clone())).to_integer();
        let a1 = -(&self.q * Rat::from_integer(lcm.clone())).to_integer();
        let a0 = -(&self.r * Rat::from_integer(lcm.clone())).to_integer();
        // X = a3 x is an integer at any rational root x
        let g = DensePoly::new(vec![
            Rat::from_integer(&a0 * &a3 * &a3),
            Rat::from_integer(&a1 * &a3),
            Rat::from_integer(a2),
            Rat::one(),
        ]);
        let mut candidates: Vec<BigInt> = Vec::new();
        let gcd = {
            let chain = sturm_chain(&g);
            chain.last().cloned().unwrap_or_else(DensePoly::zero)
        };
        match gcd.degree() {
            Some(d) if d >= 1 => {
                // repeated root; for a monic integer cubic it is rational
                let root = if d == 1 {
                    -(&gcd.coeffs()[0] / &gcd.coeffs()[1])
                } else {
                    // triple root at -a2/3 of the companion
                    -(&g.coeffs()[2] / frac(3, 1))
                };
                if g.eval(&root).is_zero() && root.is_integer() {
                    candidates.push(root.to_integer());
                }
            }
            _ => {
                for (lo, hi) in isolate_square_free(&g) {
                    let (mut lo, mut hi) = (lo, hi);
                    let two = Rat::from_integer(2.into());
                    while (&hi - &lo) >= frac(1, 3) {
                        let mid = (&lo + &hi) / &two;
                        if g.eval(&mid).is_zero() {
                            candidates.push(mid.to_integer());
                            break;
                        }
                        if (g.eval(&lo) * g.eval(&mid)).is_negative() {
                            hi = mid;
                        } else {
                            lo = mid;
                        }
                    }
                    let c = lo.ceil().to_integer();
                    if Rat::from_integer(c.clone()) <= hi {
                        candidates.push(c);
                    }
                }
            }
        }
        candidates.sort_by(|a, b| (a.abs(), b.sign()).cmp(&(b.abs(), a.sign())));
        for cand in candidates {
            let root = Rat::new(cand, a3.clone());
            if self.eval(&root).is_zero() {
                return Some(root);
            }
        }
        None
    }

    /// Errors with the witnessing rational root unless irreducible.
    pub fn require_irreducible(&self) -> Result<()> {
        match self.rational_root() {
            Some(root) => Err(Error::Reducible { root }),
            None => Ok(()),
        }
    }

    /// The monic cubic whose roots are the reciprocals of this one's roots.
    pub fn reflect(&self) -> Result<CubicPoly> {
        if self.r.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(CubicPoly::new(
            -(&self.q / &self.r),
            -(&self.p / &self.r),
            Rat::one() / &self.r,
        ))
    }

    /// The monic cubic whose roots are `alpha_i + k` (Taylor shift by `-k`).
    pub fn shift(&self, k: &Rat) -> CubicPoly {
        let p2 = &self.p + Rat::from_integer(3.into()) * k;
        let q2 = &self.q
            - Rat::from_integer(3.into()) * k * k
            - Rat::from_integer(2.into()) * &self.p * k;
        let r2 = &self.r - &self.q * k + &self.p * k * k + k * k * k;
        CubicPoly::new(p2, q2, r2)
    }
}

impl fmt::Display for CubicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^3")?;
        let terms = [
            (-self.p.clone(), "x^2"),
            (-self.q.clone(), "x"),
            (-self.r.clone(), ""),
        ];
        for (c, var) in terms {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { " - " } else { " + " };
            let mag = c.abs();
            write!(f, "{sign}")?;
            if var.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "{var}")?;
        }
        Ok(())
    }
}

/// Parses `a3 x^3 + a2 x^2 + a1 x + a0` with integer or fraction
/// coefficients, `^` powers and optional spaces, and returns the monic
/// normalization `(p, q, r) = (-a2/a3, -a1/a3, -a0/a3)`.
pub fn parse_cubic(text: &str) -> Result<CubicPoly> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let b = s.as_bytes();
    let mut coeffs = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
    let mut i = 0;
    while i < b.len() {
        let mut negative = false;
        while i < b.len() && (b[i] == b'+' || b[i] == b'-') {
            if b[i] == b'-' {
                negative = !negative;
            }
            i += 1;
        }
        let num_start = i;
        while i < b.len() && (b[i].is_ascii_digit() || b[i] == b'/') {
            i += 1;
        }
        let coeff_text = &s[num_start..i];
        let mut coeff = if coeff_text.is_empty() {
            None
        } else {
            Some(parse_rat(coeff_text)?)
        };
        let mut power = 0usize;
        if i < b.len() && b[i] == b'x' {
            i += 1;
            power = 1;
            if i < b.len() && b[i] == b'^' {
                i += 1;
                let exp_start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                power = s[exp_start..i]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {text:?}")))?;
            }
        } else if coeff.is_none() {
            return Err(Error::Parse(format!(
                "unexpected character {:?} in {text:?}",
                s[i..].chars().next().unwrap()
            )));
        }
        if power > 3 {
            return Err(Error::NotCubic { degree: power });
        }
        let c = coeff.take().unwrap_or_else(Rat::one);
        coeffs[power] += if negative { -c } else { c };
        if i < b.len() && b[i] != b'+' && b[i] != b'-' {
            return Err(Error::Parse(format!(
                "unexpected character {:?} in {text:?}",
                s[i..].chars().next().unwrap()
            )));
        }
    }
    if coeffs[3].is_zero() {
        let degree = coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
        return Err(Error::NotCubic { degree });
    }
    Ok(CubicPoly::new(
        -(&coeffs[2] / &coeffs[3]),
        -(&coeffs[1] / &coeffs[3]),
        -(&coeffs[0] / &coeffs[3]),
    ))
}
