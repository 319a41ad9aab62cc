//! Ternary continued fractions: a pair of partial-quotient sequences
//! `(a_n, b_n)` with a pre-period and a repeating period, their convergent
//! triples `(A_n, B_n, C_n)`, the rational and integer matrix formalisms,
//! numeric evaluation, and the diagonal scaling transform.
//!
//! Convergents satisfy `X_n = a_n X_(n-1) + b_n X_(n-2) + X_(n-3)` with the
//! initial conditions `A_(-2)=0, A_(-1)=1`, `B_(-2)=1, B_(-1)=0`,
//! `C_(-2)=C_(-1)=0` and `(A_0, B_0, C_0) = (a_0, b_0, 1)`. These initials
//! are forced by the step-matrix identity: columns of the cumulative product
//! of `[[a_i,1,0],[b_i,0,1],[1,0,0]]` are consecutive convergent triples.

use crate::error::{Error, Result};
use crate::matrix::Mat3;
use crate::rat::{parse_rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Partial quotients as exact rationals; an empty period means a finite
/// expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct TernaryCF {
    pre_period: Vec<(Rat, Rat)>,
    period: Vec<(Rat, Rat)>,
}

impl TernaryCF {
    pub fn new(pre_period: Vec<(Rat, Rat)>, period: Vec<(Rat, Rat)>) -> Self {
        TernaryCF { pre_period, period }
    }

    pub fn pre_period(&self) -> &[(Rat, Rat)] {
        &self.pre_period
    }

    pub fn period(&self) -> &[(Rat, Rat)] {
        &self.period
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.pre_period.len(), self.period.len())
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Quotient pair at index `n`, unrolling the period; `None` past the end
    /// of a finite expansion.
    pub fn quotient(&self, n: usize) -> Option<(&Rat, &Rat)> {
        if n < self.pre_period.len() {
            let (a, b) = &self.pre_period[n];
            Some((a, b))
        } else if self.period.is_empty() {
            None
        } else {
            let (a, b) = &self.period[(n - self.pre_period.len()) % self.period.len()];
            Some((a, b))
        }
    }

    pub(crate) fn with_leading_a_shifted(&self, delta: &Rat) -> Self {
        let mut out = self.clone();
        out.pre_period[0].0 += delta;
        out
    }

    pub(crate) fn with_leading_b_shifted(&self, delta: &Rat) -> Self {
        let mut out = self.clone();
        out.pre_period[0].1 += delta;
        out
    }
}

impl fmt::Display for TernaryCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |f: &mut fmt::Formatter<'_>, pick: fn(&(Rat, Rat)) -> &Rat| -> fmt::Result {
            write!(f, "{{")?;
            for (i, pair) in self.pre_period.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", pick(pair))?;
            }
            if !self.period.is_empty() {
                if !self.pre_period.is_empty() {
                    write!(f, ", ")?;
                }
                write!(f, "(")?;
                for (i, pair) in self.period.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", pick(pair))?;
                }
                write!(f, ")*")?;
            }
            write!(f, "}}")
        };
        write!(f, "[")?;
        side(f, |p| &p.0)?;
        write!(f, ", ")?;
        side(f, |p| &p.1)?;
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct RawTcf {
    pre_period: Vec<[String; 2]>,
    period: Vec<[String; 2]>,
}

fn pairs_to_raw(pairs: &[(Rat, Rat)]) -> Vec<[String; 2]> {
    pairs
        .iter()
        .map(|(a, b)| [a.to_string(), b.to_string()])
        .collect()
}

fn raw_to_pairs(raw: &[[String; 2]]) -> Result<Vec<(Rat, Rat)>> {
    raw.iter()
        .map(|[a, b]| Ok((parse_rat(a)?, parse_rat(b)?)))
        .collect()
}

impl Serialize for TernaryCF {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawTcf {
            pre_period: pairs_to_raw(&self.pre_period),
            period: pairs_to_raw(&self.period),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TernaryCF {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawTcf::deserialize(deserializer)?;
        Ok(TernaryCF {
            pre_period: raw_to_pairs(&raw.pre_period).map_err(D::Error::custom)?,
            period: raw_to_pairs(&raw.period).map_err(D::Error::custom)?,
        })
    }
}

/// Numerators `A_n`, `B_n` and denominator `C_n` of the `n`-th convergent
/// pair `(A_n/C_n, B_n/C_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergentTriple {
    pub n: usize,
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl ConvergentTriple {
    /// `A_n/C_n`, `None` at a vanishing denominator.
    pub fn first_ratio(&self) -> Option<Rat> {
        (!self.c.is_zero()).then(|| &self.a / &self.c)
    }

    /// `B_n/C_n`, `None` at a vanishing denominator.
    pub fn second_ratio(&self) -> Option<Rat> {
        (!self.c.is_zero()).then(|| &self.b / &self.c)
    }
}

/// Iterator of convergent triples for `n = 0, 1, 2, ...`; ends with the last
/// quotient of a finite expansion.
pub struct ConvergentStream {
    tcf: TernaryCF,
    n: usize,
    // (A, B, C) at n-1, n-2, n-3
    window: [(Rat, Rat, Rat); 3],
}

impl Iterator for ConvergentStream {
    type Item = ConvergentTriple;

    fn next(&mut self) -> Option<ConvergentTriple> {
        let (a_n, b_n) = self.tcf.quotient(self.n)?;
        let [prev1, prev2, prev3] = &self.window;
        let step = |x1: &Rat, x2: &Rat, x3: &Rat| a_n * x1 + b_n * x2 + x3;
        let fresh = (
            step(&prev1.0, &prev2.0, &prev3.0),
            step(&prev1.1, &prev2.1, &prev3.1),
            step(&prev1.2, &prev2.2, &prev3.2),
        );
        let out = ConvergentTriple {
            n: self.n,
            a: fresh.0.clone(),
            b: fresh.1.clone(),
            c: fresh.2.clone(),
        };
        self.window = [fresh, self.window[0].clone(), self.window[1].clone()];
        self.n += 1;
        Some(out)
    }
}

pub fn convergent_stream(t: &TernaryCF) -> ConvergentStream {
    ConvergentStream {
        tcf: t.clone(),
        n: 0,
        window: [
            // (A,B,C) at -1, -2, -3; the recurrence applied at n = 0 then
            // reproduces (a_0, b_0, 1)
            (Rat::one(), Rat::zero(), Rat::zero()),
            (Rat::zero(), Rat::one(), Rat::zero()),
            (Rat::zero(), Rat::zero(), Rat::one()),
        ],
    }
}

/// Exact triples for `n = 0 ..= n_max` (fewer for a finite expansion).
pub fn convergents(t: &TernaryCF, n_max: usize) -> Vec<ConvergentTriple> {
    convergent_stream(t).take(n_max + 1).collect()
}

/// Cumulative product of the step matrices `[[a_i,1,0],[b_i,0,1],[1,0,0]]`
/// for `i = 0 ..= n`; its columns are the convergent triples at
/// `n, n-1, n-2`.
pub fn matrix_form(t: &TernaryCF, n: usize) -> Mat3<Rat> {
    let mut acc = Mat3::identity();
    for i in 0..=n {
        let (a, b) = t.quotient(i).expect("index beyond finite expansion");
        acc = acc.mul(&step_matrix(a, b));
    }
    acc
}

fn step_matrix(a: &Rat, b: &Rat) -> Mat3<Rat> {
    Mat3::new([
        [a.clone(), Rat::one(), Rat::zero()],
        [b.clone(), Rat::zero(), Rat::one()],
        [Rat::one(), Rat::zero(), Rat::zero()],
    ])
}

/// Integer sequences carried by the integer-matrix formalism, together with
/// the fixed denominators needed to reconstruct the convergent ratios:
/// `A_n/C_n = s_n / (b0 d1 s''_n)` and `B_n/C_n = s'_n / (d0 s''_n)`, where
/// quotients are written `a_i/b_i` and `c_i/d_i` in lowest terms.
///
/// The `d1` factor enters the cumulative product only from step 1 onward, so
/// at `n = 0` the first ratio is `s_0 / (b0 s''_0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SSequences {
    pub s: Vec<BigInt>,
    pub s_prime: Vec<BigInt>,
    pub s_dprime: Vec<BigInt>,
    pub b0: BigInt,
    pub d0: BigInt,
    pub d1: BigInt,
}

impl SSequences {
    /// The secondary-quotient denominator factor in the first ratio at `n`.
    pub fn d1_at(&self, n: usize) -> BigInt {
        if n == 0 {
            BigInt::one()
        } else {
            self.d1.clone()
        }
    }

    pub fn first_ratio(&self, n: usize) -> Option<Rat> {
        let den = &self.b0 * self.d1_at(n) * &self.s_dprime[n];
        (!den.is_zero()).then(|| Rat::new(self.s[n].clone(), den))
    }

    pub fn second_ratio(&self, n: usize) -> Option<Rat> {
        let den = &self.d0 * &self.s_dprime[n];
        (!den.is_zero()).then(|| Rat::new(self.s_prime[n].clone(), den))
    }
}

/// The integer-entry step matrices and their cumulative product, plus the
/// three integer sequences.
#[derive(Clone, Debug)]
pub struct IntegerMatrixForm {
    pub steps: Vec<Mat3<BigInt>>,
    pub product: Mat3<BigInt>,
    pub seqs: SSequences,
}

/// Integer-matrix formalism through index `n`: quotient `a_i/b_i, c_i/d_i`
/// (in lowest terms, positive denominators) becomes the step matrix
/// `[[a_i d_i, b_i d_i, 0], [c_i b_i, 0, b_i d_i], [b_i d_i, 0, 0]]`.
pub fn integer_matrix_form(t: &TernaryCF, n: usize) -> IntegerMatrixForm {
    let mut an = Vec::with_capacity(n + 1);
    let mut ad = Vec::with_capacity(n + 1);
    let mut bn = Vec::with_capacity(n + 1);
    let mut bd = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let (a, b) = t.quotient(i).expect("index beyond finite expansion");
        an.push(a.numer().clone());
        ad.push(a.denom().clone());
        bn.push(b.numer().clone());
        bd.push(b.denom().clone());
    }
    let steps: Vec<Mat3<BigInt>> = (0..=n)
        .map(|i| {
            let cell = &ad[i] * &bd[i];
            Mat3::new([
                [&an[i] * &bd[i], cell.clone(), BigInt::zero()],
                [&bn[i] * &ad[i], BigInt::zero(), cell.clone()],
                [cell, BigInt::zero(), BigInt::zero()],
            ])
        })
        .collect();
    let product = steps.iter().fold(Mat3::identity(), |acc, m| acc.mul(m));

    // The recurrence state at index 0 must carry the product-consistent
    // values (a_0, c_0/d_1, 1/d_1): the reported index-0 entries are the
    // integers (a_0, c_0, 1), but the order-3 recurrence reaches back to
    // index 0 at n = 3 and only the rational state keeps the sequences equal
    // to the cumulative product columns. Every value from index 1 on is an
    // integer again.
    let d1 = if n >= 1 { bd[1].clone() } else { BigInt::one() };
    let mut sig_s = vec![Rat::from_integer(an[0].clone())];
    let mut sig_sp = vec![Rat::new(bn[0].clone(), d1.clone())];
    let mut sig_spp = vec![Rat::new(BigInt::one(), d1.clone())];
    if n >= 1 {
        sig_s.push(Rat::from_integer(
            &an[0] * &an[1] * &bd[1] + &ad[0] * &ad[1] * &bn[1],
        ));
        sig_sp.push(Rat::from_integer(&an[1] * &bn[0] + &ad[1] * &bd[0]));
        sig_spp.push(Rat::from_integer(an[1].clone()));
    }
    if n >= 2 {
        sig_s.push(Rat::from_integer(
            &an[2] * &bd[2] * sig_s[1].numer()
                + &ad[2] * &ad[1] * &bn[2] * &bd[1] * &an[0]
                + &ad[2] * &ad[1] * &ad[0] * &bd[2] * &bd[1],
        ));
        sig_sp.push(Rat::from_integer(
            &ad[1] * &ad[2] * &bn[0] * &bn[2]
                + &an[1] * &an[2] * &bn[0] * &bd[2]
                + &an[2] * &ad[1] * &bd[0] * &bd[2],
        ));
        sig_spp.push(Rat::from_integer(
            &ad[1] * &ad[2] * &bn[2] + &an[1] * &an[2] * &bd[2],
        ));
    }
    for i in 3..=n {
        let c1 = Rat::from_integer(&an[i] * &bd[i]);
        let c2 = Rat::from_integer(&ad[i] * &ad[i - 1] * &bn[i] * &bd[i - 1]);
        let c3 =
            Rat::from_integer(&ad[i] * &ad[i - 1] * &ad[i - 2] * &bd[i] * &bd[i - 1] * &bd[i - 2]);
        let push = |seq: &mut Vec<Rat>| {
            let next = &c1 * &seq[i - 1] + &c2 * &seq[i - 2] + &c3 * &seq[i - 3];
            seq.push(next);
        };
        push(&mut sig_s);
        push(&mut sig_sp);
        push(&mut sig_spp);
    }
    let to_ints = |seq: &[Rat], zeroth: BigInt| -> Vec<BigInt> {
        seq.iter()
            .enumerate()
            .map(|(i, v)| {
                if i == 0 {
                    zeroth.clone()
                } else {
                    assert!(
                        v.is_integer(),
                        "sequence value at index {i} is not integral"
                    );
                    v.to_integer()
                }
            })
            .collect()
    };
    let seqs = SSequences {
        s: to_ints(&sig_s, an[0].clone()),
        s_prime: to_ints(&sig_sp, bn[0].clone()),
        s_dprime: to_ints(&sig_spp, BigInt::one()),
        b0: ad[0].clone(),
        d0: bd[0].clone(),
        d1,
    };
    IntegerMatrixForm {
        steps,
        product,
        seqs,
    }
}

/// Result of iterating convergents until both component deltas between
/// successive valid convergents drop below the tolerance.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub first: Rat,
    pub second: Rat,
    /// Last observed delta (max over the two components); exactly zero for a
    /// finite expansion evaluated to its end.
    pub achieved: Rat,
    pub n_used: usize,
    pub met_tol: bool,
}

/// Evaluates the expansion numerically, skipping indices with a vanishing
/// denominator; stops at `tol` or at index `n_cap`, whichever comes first.
pub fn evaluate(t: &TernaryCF, tol: &Rat, n_cap: usize) -> Evaluation {
    assert!(tol.is_positive());
    let mut prev: Option<(Rat, Rat, usize)> = None;
    let mut achieved: Option<Rat> = None;
    for triple in convergent_stream(t).take(n_cap + 1) {
        let (Some(first), Some(second)) = (triple.first_ratio(), triple.second_ratio()) else {
            continue;
        };
        if let Some((pf, ps, _)) = &prev {
            let d1 = (&first - pf).abs();
            let d2 = (&second - ps).abs();
            let d = if d1 > d2 { d1 } else { d2 };
            let done = d < *tol;
            achieved = Some(d);
            if done {
                return Evaluation {
                    first,
                    second,
                    achieved: achieved.unwrap(),
                    n_used: triple.n,
                    met_tol: true,
                };
            }
        }
        prev = Some((first, second, triple.n));
    }
    let (first, second, n_used) = prev.expect("no valid convergent below the cap");
    if t.is_finite() && n_used + 1 == t.pre_period().len() {
        // finite expansion evaluated to its end: the value is exact
        return Evaluation {
            first,
            second,
            achieved: Rat::zero(),
            n_used,
            met_tol: true,
        };
    }
    Evaluation {
        first,
        second,
        achieved: achieved.unwrap_or_else(Rat::zero),
        n_used,
        met_tol: false,
    }
}

/// Diagonal scaling of a shape-(2, 3) expansion: the result converges to
/// `(rho * x, y / rho)` when the input converges to `(x, y)`, and the exact
/// per-index identities `A~_n/C~_n = rho * A_n/C_n`,
/// `B~_n/C~_n = (B_n/C_n)/rho` hold wherever the denominators are nonzero.
///
/// Quotient pattern by index residue: `n = 0 mod 3` maps `(a, b)` to
/// `(rho a, b/rho)`; `n = 1 mod 3` to `(rho a, rho^2 b)`; `n = 2 mod 3` to
/// `(a/rho^2, b/rho)`.
pub fn scale_transform(t: &TernaryCF, rho: &Rat) -> Result<TernaryCF> {
    if rho.is_zero() {
        return Err(Error::ZeroParameter("rho"));
    }
    let (pre, per) = t.shape();
    if (pre, per) != (2, 3) {
        return Err(Error::WrongShape { pre, period: per });
    }
    let rho2 = rho * rho;
    let map = |n: usize, a: &Rat, b: &Rat| -> (Rat, Rat) {
        match n % 3 {
            0 => (rho * a, b / rho),
            1 => (rho * a, &rho2 * b),
            _ => (a / &rho2, b / rho),
        }
    };
    let pre_period = t
        .pre_period()
        .iter()
        .enumerate()
        .map(|(n, (a, b))| map(n, a, b))
        .collect();
    let period = t
        .period()
        .iter()
        .enumerate()
        .map(|(i, (a, b))| map(i + 2, a, b))
        .collect();
    Ok(TernaryCF::new(pre_period, period))
}
