//! The two partial-quotient algorithms on exact cubic-field states.
//!
//! Both iterate `x_(n+1) = 1/(y_n - b_n)`, `y_(n+1) = (x_n - a_n)/(y_n - b_n)`
//! from `(x_0, y_0) = (r/alpha, alpha)`; they differ in how the quotients are
//! read off the state. The modified run applies the linear functionals
//! `f_map`/`g_map` (emitting `a_0 = z` directly at step 0) and is periodic
//! with pre-period 2 and period 3 for any certified `z`. The classic run
//! takes floors at the isolated root; whether it must become periodic on
//! cubic couples is an open question, so its transcript simply reports
//! whatever happens within the step budget.
//!
//! Cycles are detected by exact state equality, never by quotient repetition,
//! and the reported `(pre_period, period)` is minimal.

use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::CubicPoly;
use crate::rat::Rat;
use crate::roots::{
    classify_moduli, dominance_certificate, floor_at_root_refining, value_enclosure,
    IsolatingInterval,
};
use crate::tcf::{convergent_stream, TernaryCF};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::json;

/// State before emitting the quotients of step `n`. Equality is exact
/// coordinate equality of `(x, y)`; the step index is bookkeeping.
#[derive(Clone, Debug)]
pub struct AlgoState {
    pub n: usize,
    pub x: FieldElem,
    pub y: FieldElem,
}

impl PartialEq for AlgoState {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.y == other.y
    }
}

/// Full record of a run: the emitted quotient pairs, every visited state,
/// and the detected cycle, if any. `states[i]` is the state read at step
/// `i`; when a cycle `(pre, period)` is reported,
/// `states[pre] == states[pre + period]` exactly.
#[derive(Clone, Debug)]
pub struct RunTranscript {
    pub quotients: Vec<(Rat, Rat)>,
    pub states: Vec<AlgoState>,
    pub cycle: Option<(usize, usize)>,
    /// Classic run only: an exactly integer `y_n` ended the expansion.
    pub finite: bool,
}

impl RunTranscript {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "quotients": self.quotients.iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect::<Vec<_>>(),
            "cycle": self.cycle.map(|(pre, period)| json!({
                "pre_period": pre,
                "period": period,
            })),
            "finite": self.finite,
        })
    }

    /// As [`to_json`](Self::to_json), with per-step convergent error bounds
    /// rendered as decimal strings at the given precision.
    pub fn to_json_with_errors(
        &self,
        errors: &[Option<(Rat, Rat)>],
        digits: usize,
    ) -> serde_json::Value {
        let mut value = self.to_json();
        value["errors"] = errors
            .iter()
            .map(|e| {
                e.as_ref().map(|(first, second)| {
                    [
                        crate::rat::to_decimal(first, digits),
                        crate::rat::to_decimal(second, digits),
                    ]
                })
            })
            .collect::<Vec<_>>()
            .into();
        value
    }
}

fn detect_cycle(states: &[AlgoState], fresh: &AlgoState) -> Option<(usize, usize)> {
    states
        .iter()
        .position(|s| s.x == fresh.x && s.y == fresh.y)
        .map(|j| (j, fresh.n - j))
}

/// Runs the modified algorithm for `(f, z)` from `(r/alpha, alpha)`.
///
/// Quotients are exact rationals from the two functionals; `a_0 = z` is
/// emitted directly (the first functional is only consistent on the span of
/// `{1, alpha^2}`, which every later state lies in). For a certified `z` the
/// transcript shows pre-period 2 and period 3 with the quotients of the
/// direct expansion. An exactly zero denominator signals an uncertified `z`
/// or reducible input.
pub fn run_modified(f: &CubicPoly, z: &BigInt, max_steps: usize) -> Result<RunTranscript> {
    f.require_irreducible()?;
    let mut x = FieldElem::r_over_alpha(f);
    let mut y = FieldElem::alpha(f);
    let mut quotients = Vec::new();
    let mut states = vec![AlgoState {
        n: 0,
        x: x.clone(),
        y: y.clone(),
    }];
    let mut cycle = None;
    for n in 0..max_steps {
        let a = if n == 0 {
            Rat::from_integer(z.clone())
        } else {
            x.f_map(z)
        };
        let b = y.g_map(z);
        quotients.push((a.clone(), b.clone()));
        let denom = y.sub_rat(&b);
        if denom.is_zero() {
            return Err(Error::ZeroDenominatorStep { step: n });
        }
        let inv = denom.invert()?;
        let next_x = inv.clone();
        let next_y = x.sub_rat(&a).mul(&inv);
        x = next_x;
        y = next_y;
        let fresh = AlgoState {
            n: n + 1,
            x: x.clone(),
            y: y.clone(),
        };
        cycle = detect_cycle(&states, &fresh);
        states.push(fresh);
        if cycle.is_some() {
            break;
        }
    }
    Ok(RunTranscript {
        quotients,
        states,
        cycle,
        finite: false,
    })
}

/// Runs the classic floor-based algorithm from `(x0, y0)` over the root
/// isolated by `iv`. Quotients are integers; an exactly integer `y_n` halts
/// the run with the finite flag instead of dividing by zero. Periodicity is
/// not guaranteed; the transcript reports whatever happened within
/// `max_steps`.
pub fn run_classic(
    f: &CubicPoly,
    x0: &FieldElem,
    y0: &FieldElem,
    iv: &IsolatingInterval,
    max_steps: usize,
) -> Result<RunTranscript> {
    f.require_irreducible()?;
    assert_eq!(x0.poly(), f, "x0 over a different cubic");
    assert_eq!(y0.poly(), f, "y0 over a different cubic");
    let mut x = x0.clone();
    let mut y = y0.clone();
    // one interval refined across the whole run; floors only tighten it
    let mut cur = iv.clone();
    let mut quotients = Vec::new();
    let mut states = vec![AlgoState {
        n: 0,
        x: x.clone(),
        y: y.clone(),
    }];
    let mut cycle = None;
    let mut finite = false;
    for n in 0..max_steps {
        let (a, refined) = floor_at_root_refining(&x, &cur);
        cur = refined;
        let (b, refined) = floor_at_root_refining(&y, &cur);
        cur = refined;
        let a = Rat::from_integer(a);
        let b = Rat::from_integer(b);
        quotients.push((a.clone(), b.clone()));
        let denom = y.sub_rat(&b);
        if denom.is_zero() {
            finite = true;
            break;
        }
        let inv = denom.invert()?;
        let next_y = x.sub_rat(&a).mul(&inv);
        x = inv;
        y = next_y;
        let fresh = AlgoState {
            n: n + 1,
            x: x.clone(),
            y: y.clone(),
        };
        cycle = detect_cycle(&states, &fresh);
        states.push(fresh);
        if cycle.is_some() {
            break;
        }
    }
    Ok(RunTranscript {
        quotients,
        states,
        cycle,
        finite,
    })
}

/// Certified upper bounds on the distance from each convergent pair of a
/// quotient stream to the exact couple values at the isolated root.
/// `None` marks a vanishing convergent denominator.
pub fn convergent_errors(
    quotients: &[(Rat, Rat)],
    couple: (&FieldElem, &FieldElem),
    iv: &IsolatingInterval,
) -> Vec<Option<(Rat, Rat)>> {
    let t = TernaryCF::new(quotients.to_vec(), Vec::new());
    let cur = iv.refine(&Rat::new(1.into(), BigInt::from(10).pow(45)));
    let bound = |elem: &FieldElem, ratio: &Rat| -> Rat {
        let (vlo, vhi) = value_enclosure(elem, &cur);
        let d1 = (ratio - vlo).abs();
        let d2 = (ratio - vhi).abs();
        if d1 > d2 {
            d1
        } else {
            d2
        }
    };
    convergent_stream(&t)
        .map(|c| {
            let (first, second) = (c.first_ratio()?, c.second_ratio()?);
            Some((bound(couple.0, &first), bound(couple.1, &second)))
        })
        .collect()
}

/// Side-by-side transcripts of the two algorithms from `(r/alpha, alpha)`,
/// plus per-step certified error bounds of their convergents against the
/// exact couple.
#[derive(Clone, Debug)]
pub struct RunComparison {
    pub modified: RunTranscript,
    pub classic: RunTranscript,
    pub modified_errors: Vec<Option<(Rat, Rat)>>,
    pub classic_errors: Vec<Option<(Rat, Rat)>>,
}

pub fn compare_runs(f: &CubicPoly, z: &BigInt, max_steps: usize) -> Result<RunComparison> {
    let mo = classify_moduli(f)?;
    let iv = mo
        .real_roots()
        .iter()
        .find(|iv| {
            dominance_certificate(f, iv, z)
                .map(|c| c.verdict)
                .unwrap_or(false)
        })
        .cloned()
        .ok_or_else(|| Error::ZNotCertified { z: z.clone() })?;
    let modified = run_modified(f, z, max_steps)?;
    let x0 = FieldElem::r_over_alpha(f);
    let y0 = FieldElem::alpha(f);
    let classic = run_classic(f, &x0, &y0, &iv, max_steps)?;
    let couple = (&x0, &y0);
    let modified_errors = convergent_errors(&modified.quotients, couple, &iv);
    let classic_errors = convergent_errors(&classic.quotients, couple, &iv);
    Ok(RunComparison {
        modified,
        classic,
        modified_errors,
        classic_errors,
    })
}
