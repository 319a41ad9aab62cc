//! Periodic expansion of a requested root of an irreducible cubic.
//!
//! The direct construction produces, for a certified `z`, the shape-(2, 3)
//! expansion converging to the couple `(r/alpha, alpha)`:
//!
//! ```text
//! a: { z, (2z+p^2+q)/(pq+r),  [ (pq+r)Tr/det, Tr, Tr/(pq+r) ]* }
//! b: { p, -(z^2+qz+p^2z-pr)/(pq+r),  [ -I1/det, -(pq+r)I1/det, -I1/(pq+r) ]* }
//! ```
//!
//! with `(Tr, I1, det)` the invariants of the fundamental matrix. Roots that
//! no `z` certifies are reached by reflecting (smallest modulus) or by a
//! rational root shift, with the leading partial quotient adjusted back
//! afterwards. The operative criterion everywhere is dominance of
//! `z + alpha^2` among the eigenvalues, never dominance of `alpha` itself;
//! that is what makes the pure cube-root family work despite its exact
//! real/complex modulus tie.

use crate::cerruti::{build_n, invariants};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::poly::CubicPoly;
use crate::rat::{simplest_in_interval, Rat};
use crate::roots::{
    classify_moduli, dominance_certificate, DominanceCertificate, IsolatingInterval, ModulusOrder,
    RootId,
};
use crate::tcf::{scale_transform, TernaryCF};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;

/// Which real root of the input cubic to expand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootSelector {
    LargestModulus,
    SmallestModulus,
    /// Real roots indexed by ascending value, starting at 0.
    ValueIndex(usize),
}

/// How the expansion was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    /// Some `z` certifies the target directly.
    Dominant,
    /// Target strictly smallest in modulus: reflect, expand, scale by `r`.
    ReflectedSmallest,
    /// Largest-value target shifted by `+k` until dominant.
    ShiftedLargestValue,
    /// Smallest-value target shifted by `-k` until dominant.
    ShiftedSmallestValue,
    /// Middle-value target shifted near zero, then the reflected pipeline.
    ShiftedMiddleValue,
}

impl Pipeline {
    pub fn as_str(&self) -> &'static str {
        match self {
            Pipeline::Dominant => "dominant",
            Pipeline::ReflectedSmallest => "reflected-smallest",
            Pipeline::ShiftedLargestValue => "shifted-largest-value",
            Pipeline::ShiftedSmallestValue => "shifted-smallest-value",
            Pipeline::ShiftedMiddleValue => "shifted-middle-value",
        }
    }
}

/// Search configuration; windows are finite and exhaustion is an error,
/// never a silent widening.
#[derive(Clone, Debug)]
pub struct ExpandOptions {
    /// Use exactly this `z` (still certified) instead of searching.
    pub z_hint: Option<BigInt>,
    /// `choose_z` scans `[-z_window, z_window]`.
    pub z_window: u32,
    /// Attempts across the shift schedules of pipeline (3).
    pub shift_attempts: u32,
}

impl Default for ExpandOptions {
    fn default() -> Self {
        ExpandOptions {
            z_hint: None,
            z_window: 25,
            shift_attempts: 24,
        }
    }
}

/// A periodic expansion together with everything needed to audit it.
#[derive(Clone, Debug)]
pub struct ExpansionResult {
    pub tcf: TernaryCF,
    pub pipeline: Pipeline,
    pub z: BigInt,
    /// Rational root shift, when pipeline (3) was used.
    pub shift: Option<Rat>,
    /// Certificate for the polynomial and `z` actually fed to the direct
    /// construction (the reflected/shifted polynomial for pipelines 2-3).
    pub certificate: DominanceCertificate,
    /// Isolating interval of the requested root of the original cubic.
    pub target: IsolatingInterval,
    /// Exact values of the two components as elements of Q(alpha) over the
    /// original cubic, evaluated at `target`.
    pub couple: (FieldElem, FieldElem),
    pub couple_desc: (String, String),
}

impl ExpansionResult {
    fn checked(self) -> Self {
        assert_eq!(self.tcf.shape(), (2, 3), "expansion must have shape (2, 3)");
        assert!(
            self.certificate.verdict,
            "expansion built from a failed certificate"
        );
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "tcf": self.tcf,
            "pipeline": self.pipeline.as_str(),
            "z": self.z.to_string(),
            "k": self.shift.as_ref().map(|k| k.to_string()),
            "couple": [self.couple_desc.0, self.couple_desc.1],
        })
    }
}

/// The shape-(2, 3) expansion converging to `(r/alpha, alpha)` for the root
/// whose dominance `z` certifies. The caller supplies the certificate;
/// reducible input is rejected here, and `pq + r = 0` or `det = 0` cannot
/// occur for irreducible input.
pub fn hermite_expansion(f: &CubicPoly, z: &BigInt) -> Result<TernaryCF> {
    f.require_irreducible()?;
    let (p, q, r) = (f.p(), f.q(), f.r());
    let pqr = f.pq_plus_r();
    assert!(!pqr.is_zero(), "pq + r = 0 contradicts irreducibility");
    let inv = invariants(&build_n(f, z));
    assert!(!inv.det.is_zero(), "det(N) = 0 contradicts irreducibility");
    let zr = Rat::from_integer(z.clone());
    let two = Rat::from_integer(2.into());

    let a0 = zr.clone();
    let b0 = p.clone();
    let a1 = (&two * &zr + p * p + q) / &pqr;
    let b1 = -(&zr * &zr + q * &zr + p * p * &zr - p * r) / &pqr;
    let a2 = &pqr * &inv.tr / &inv.det;
    let b2 = -(&inv.i1 / &inv.det);
    let a3 = inv.tr.clone();
    let b3 = -(&pqr * &inv.i1 / &inv.det);
    let a4 = &inv.tr / &pqr;
    let b4 = -(&inv.i1 / &pqr);
    Ok(TernaryCF::new(
        vec![(a0, b0), (a1, b1)],
        vec![(a2, b2), (a3, b3), (a4, b4)],
    ))
}

fn integer_cube_root(n: &BigInt) -> Option<BigInt> {
    if n.is_zero() {
        return Some(BigInt::zero());
    }
    let neg = n.is_negative();
    let m = n.abs();
    let mut lo = BigInt::zero();
    let mut hi = BigInt::one() << (m.bits() / 3 + 2);
    while lo < hi {
        let mid: BigInt = (&lo + &hi) >> 1;
        if &mid * &mid * &mid < m {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    if &lo * &lo * &lo == m {
        Some(if neg { -lo } else { lo })
    } else {
        None
    }
}

/// The explicit cube-root expansion converging to `(d^(2/3), d^(1/3))`:
///
/// ```text
/// a: { z, 2z/d,  [ 3dz/(z^3+d^2), 3z, 3z/d ]* }
/// b: { 0, -z^2/d,  [ -3z^2/(z^3+d^2), -3dz^2/(z^3+d^2), -3z^2/d ]* }
/// ```
///
/// Identical, quotient by quotient, to `hermite_expansion` of `x^3 - d`.
pub fn cube_root_expansion(d: &BigInt, z: &BigInt) -> Result<TernaryCF> {
    if z.is_zero() {
        return Err(Error::ZeroParameter("z"));
    }
    if d.is_zero() || integer_cube_root(d).is_some() {
        return Err(Error::PerfectCube { d: d.clone() });
    }
    let d = Rat::from_integer(d.clone());
    let z = Rat::from_integer(z.clone());
    let z2 = &z * &z;
    let disc = &z * &z2 + &d * &d; // z^3 + d^2, nonzero for non-cube d
    assert!(!disc.is_zero());
    let three = Rat::from_integer(3.into());
    Ok(TernaryCF::new(
        vec![
            (z.clone(), Rat::zero()),
            (Rat::from_integer(2.into()) * &z / &d, -(&z2 / &d)),
        ],
        vec![
            (&three * &d * &z / &disc, -(&three * &z2 / &disc)),
            (&three * &z, -(&three * &d * &z2 / &disc)),
            (&three * &z / &d, -(&three * &z2 / &d)),
        ],
    ))
}

/// Smallest `|z|` in `[-window, window]` (ties broken toward positive, zero
/// first) whose dominance certificate for the target root is true.
pub fn choose_z(f: &CubicPoly, iv: &IsolatingInterval, window: u32) -> Result<BigInt> {
    choose_z_certified(f, iv, window).map(|(z, _)| z)
}

fn choose_z_certified(
    f: &CubicPoly,
    iv: &IsolatingInterval,
    window: u32,
) -> Result<(BigInt, DominanceCertificate)> {
    f.require_irreducible()?;
    let candidates =
        (0..=window as i64).flat_map(|m| if m == 0 { vec![0i64] } else { vec![m, -m] });
    for z in candidates {
        let z = BigInt::from(z);
        let cert = dominance_certificate(f, iv, &z)?;
        if cert.verdict {
            return Ok((z, cert));
        }
    }
    Err(Error::NoValidZ { window })
}

/// Either certifies the hint or searches the window.
fn obtain_z(
    f: &CubicPoly,
    iv: &IsolatingInterval,
    opts: &ExpandOptions,
) -> Result<(BigInt, DominanceCertificate)> {
    match &opts.z_hint {
        Some(z) => {
            let cert = dominance_certificate(f, iv, z)?;
            if cert.verdict {
                Ok((z.clone(), cert))
            } else {
                Err(Error::ZNotCertified { z: z.clone() })
            }
        }
        None => choose_z_certified(f, iv, opts.z_window),
    }
}

fn resolve_selector(mo: &ModulusOrder, selector: RootSelector) -> Result<usize> {
    match selector {
        RootSelector::LargestModulus => mo.largest_real().ok_or_else(|| {
            Error::UnresolvableSelector("the complex pair is strictly largest in modulus".into())
        }),
        RootSelector::SmallestModulus => mo.smallest_real().ok_or_else(|| {
            Error::UnresolvableSelector("the complex pair is strictly smallest in modulus".into())
        }),
        RootSelector::ValueIndex(i) => {
            if i < mo.real_roots().len() {
                Ok(i)
            } else {
                Err(Error::UnresolvableSelector(format!(
                    "value index {i} out of range: {} real root(s)",
                    mo.real_roots().len()
                )))
            }
        }
    }
}

/// Reflect-and-scale pipeline for a target strictly smallest in modulus:
/// expand the reciprocal root on the reflected cubic, then scale by `r`.
/// Returns the expansion converging to `(alpha, 1/(r alpha))` plus the
/// certificate on the reflected cubic.
fn reflected_expansion(
    f: &CubicPoly,
    iv: &IsolatingInterval,
    opts: &ExpandOptions,
) -> Result<(TernaryCF, BigInt, DominanceCertificate)> {
    let g = f.reflect()?;
    let ivg = iv.reciprocal(&g);
    let (z, cert) = obtain_z(&g, &ivg, opts)?;
    let base = hermite_expansion(&g, &z)?; // converges to (alpha/r, 1/alpha)
    let tcf = scale_transform(&base, f.r())?;
    Ok((tcf, z, cert))
}

/// Expands the selected real root, dispatching between the direct, reflected
/// and shifted pipelines, with exact certificates at every stage.
pub fn expand_root(
    f: &CubicPoly,
    selector: RootSelector,
    opts: &ExpandOptions,
) -> Result<ExpansionResult> {
    f.require_irreducible()?;
    let mo = classify_moduli(f)?;
    let target_idx = resolve_selector(&mo, selector)?;
    let display_width = Rat::new(1.into(), 1_000_000.into());
    let iv = mo.real_roots()[target_idx].refine(&display_width);

    // (1) direct
    match obtain_z(f, &iv, opts) {
        Ok((z, cert)) => {
            let tcf = hermite_expansion(f, &z)?;
            let couple = (FieldElem::r_over_alpha(f), FieldElem::alpha(f));
            let desc = (format!("{}/alpha", fmt_factor(f.r())), "alpha".to_string());
            return Ok(ExpansionResult {
                tcf,
                pipeline: Pipeline::Dominant,
                z,
                shift: None,
                certificate: cert,
                target: iv,
                couple,
                couple_desc: desc,
            }
            .checked());
        }
        Err(Error::Reducible { root }) => return Err(Error::Reducible { root }),
        Err(_) => {}
    }

    // (2) reflected, when the target is strictly smallest in modulus
    if mo.strictly_smallest() == Some(RootId::Real(target_idx)) {
        if let Ok((tcf, z, cert)) = reflected_expansion(f, &iv, opts) {
            let alpha = FieldElem::alpha(f);
            let inv_r_alpha = alpha.scale(f.r()).invert()?;
            let desc = (
                "alpha".to_string(),
                format!("1/({}*alpha)", fmt_factor(f.r())),
            );
            return Ok(ExpansionResult {
                tcf,
                pipeline: Pipeline::ReflectedSmallest,
                z,
                shift: None,
                certificate: cert,
                target: iv,
                couple: (alpha, inv_r_alpha),
                couple_desc: desc,
            }
            .checked());
        }
    }

    // (3) shifted
    match shifted_expansion(f, &mo, target_idx, opts) {
        Err(Error::NoShiftFound { .. }) if opts.z_hint.is_some() => Err(Error::ZNotCertified {
            z: opts.z_hint.clone().unwrap(),
        }),
        other => other,
    }
}

fn shift_desc(k: &Rat) -> String {
    if k.is_negative() {
        format!("alpha - {}", -k.clone())
    } else {
        format!("alpha + {k}")
    }
}

/// Renders a rational coefficient unambiguously inside an expression.
fn fmt_factor(r: &Rat) -> String {
    if r.is_integer() && !r.is_negative() {
        r.to_string()
    } else {
        format!("({r})")
    }
}

fn shifted_expansion(
    f: &CubicPoly,
    mo: &ModulusOrder,
    target_idx: usize,
    opts: &ExpandOptions,
) -> Result<ExpansionResult> {
    let iv = mo.real_roots()[target_idx].refine(&Rat::new(1.into(), 1_000_000.into()));
    let n_real = mo.real_roots().len();
    let middle = n_real == 3 && target_idx == 1;

    if middle {
        // shift the target near zero so it becomes strictly smallest in
        // modulus, then run the reflected pipeline and move a_0 back
        let mut width = Rat::new(BigInt::one(), BigInt::from(8));
        for _ in 0..opts.shift_attempts {
            let cur = iv.refine(&width);
            let k = -simplest_in_interval(cur.lo(), cur.hi());
            width /= Rat::from_integer(16.into());
            let g = f.shift(&k);
            if g.rational_root().is_some() {
                continue; // cannot happen for irreducible f; defensive skip
            }
            let mo_g = classify_moduli(&g)?;
            if mo_g.strictly_smallest() != Some(RootId::Real(target_idx)) {
                continue;
            }
            let ivg = iv.translate(&k, &g);
            let Ok((tcf_shifted, z, cert)) = reflected_expansion(&g, &ivg, opts) else {
                continue;
            };
            // (alpha + k, 1/(r'' (alpha + k))) -> subtract k from a_0
            let tcf = tcf_shifted.with_leading_a_shifted(&-k.clone());
            let alpha = FieldElem::alpha(f);
            let alpha_plus_k = alpha.sub_rat(&-k.clone());
            let second = alpha_plus_k.scale(g.r()).invert()?;
            let desc = (
                "alpha".to_string(),
                format!("1/({}*({}))", fmt_factor(g.r()), shift_desc(&k)),
            );
            return Ok(ExpansionResult {
                tcf,
                pipeline: Pipeline::ShiftedMiddleValue,
                z,
                shift: Some(k),
                certificate: cert,
                target: iv,
                couple: (alpha, second),
                couple_desc: desc,
            }
            .checked());
        }
        return Err(Error::NoShiftFound {
            attempts: opts.shift_attempts,
        });
    }

    // extreme-value target: integer shifts of the matching sign (alternating
    // when there is a single real root) until the shifted target dominates
    let signs: Vec<i64> = if n_real == 1 {
        vec![1, -1]
    } else if target_idx == n_real - 1 {
        vec![1]
    } else {
        vec![-1]
    };
    let mut attempts = 0;
    let mut jump = BigInt::one();
    'outer: while attempts < opts.shift_attempts {
        for sign in &signs {
            attempts += 1;
            let k = Rat::from_integer(&jump * BigInt::from(*sign));
            let g = f.shift(&k);
            if g.rational_root().is_some() {
                continue;
            }
            let mo_g = classify_moduli(&g)?;
            if mo_g.strictly_largest() != Some(RootId::Real(target_idx)) {
                continue;
            }
            let ivg = iv.translate(&k, &g);
            let Ok((z, cert)) = obtain_z(&g, &ivg, opts) else {
                continue;
            };
            // (r''/(alpha + k), alpha + k) -> subtract k from b_0
            let tcf = hermite_expansion(&g, &z)?.with_leading_b_shifted(&-k.clone());
            let alpha = FieldElem::alpha(f);
            let alpha_plus_k = alpha.sub_rat(&-k.clone());
            let first = alpha_plus_k.invert()?.scale(g.r());
            let pipeline = if *sign > 0 {
                Pipeline::ShiftedLargestValue
            } else {
                Pipeline::ShiftedSmallestValue
            };
            let desc = (
                format!("{}/({})", fmt_factor(g.r()), shift_desc(&k)),
                "alpha".to_string(),
            );
            return Ok(ExpansionResult {
                tcf,
                pipeline,
                z,
                shift: Some(k),
                certificate: cert,
                target: iv,
                couple: (first, alpha),
                couple_desc: desc,
            }
            .checked());
        }
        jump <<= 1;
        if jump.bits() > 64 {
            break 'outer;
        }
    }
    Err(Error::NoShiftFound { attempts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, rat};
    use crate::roots::isolate_real_roots;
    use crate::tcf::{convergents, evaluate};

    fn example1() -> CubicPoly {
        CubicPoly::from_ints(5, -1, 3)
    }

    fn tcf_eq(t: &TernaryCF, pre: &[(Rat, Rat)], per: &[(Rat, Rat)]) {
        assert_eq!(t.pre_period(), pre);
        assert_eq!(t.period(), per);
    }

    #[test]
    fn hermite_example1() {
        let t = hermite_expansion(&example1(), &BigInt::from(5)).unwrap();
        tcf_eq(
            &t,
            &[(rat(5), rat(5)), (rat(-17), rat(65))],
            &[
                (frac(-19, 141), frac(-23, 47)),
                (rat(38), frac(46, 47)),
                (rat(-19), rat(138)),
            ],
        );
    }

    #[test]
    fn hermite_example2() {
        let f = CubicPoly::new(rat(4), frac(4, 3), frac(-1, 3));
        let t = hermite_expansion(&f, &BigInt::from(1)).unwrap();
        tcf_eq(
            &t,
            &[(rat(1), rat(4)), (frac(58, 15), frac(-59, 15))],
            &[
                (frac(975, 218), frac(-403, 218)),
                (frac(65, 3), frac(-2015, 218)),
                (frac(13, 3), frac(-403, 45)),
            ],
        );
    }

    #[test]
    fn hermite_ramanujan() {
        let f = CubicPoly::from_ints(-1, 2, 1); // x^3 + x^2 - 2x - 1
        let t = hermite_expansion(&f, &BigInt::from(3)).unwrap();
        tcf_eq(
            &t,
            &[(rat(3), rat(-1)), (rat(-9), rat(19))],
            &[
                (frac(-2, 13), frac(-9, 13)),
                (rat(14), frac(9, 13)),
                (rat(-14), rat(63)),
            ],
        );
    }

    #[test]
    fn hermite_rejects_reducible() {
        assert!(matches!(
            hermite_expansion(&CubicPoly::from_ints(2, 1, -2), &BigInt::from(1)),
            Err(Error::Reducible { .. })
        ));
    }

    #[test]
    fn cube_root_matches_specialization() {
        for d in [2i64, 3, 5] {
            for z in [1i64, 2] {
                let direct = cube_root_expansion(&BigInt::from(d), &BigInt::from(z)).unwrap();
                let general =
                    hermite_expansion(&CubicPoly::from_ints(0, 0, d), &BigInt::from(z)).unwrap();
                assert_eq!(direct, general, "mismatch at d = {d}, z = {z}");
            }
        }
    }

    #[test]
    fn cube_root_d2_z1_period() {
        let t = cube_root_expansion(&BigInt::from(2), &BigInt::from(1)).unwrap();
        let per_a: Vec<Rat> = t.period().iter().map(|(a, _)| a.clone()).collect();
        assert_eq!(per_a, vec![frac(6, 5), rat(3), frac(3, 2)]);
    }

    #[test]
    fn cube_root_rejects() {
        assert!(matches!(
            cube_root_expansion(&BigInt::from(8), &BigInt::from(1)),
            Err(Error::PerfectCube { .. })
        ));
        assert!(matches!(
            cube_root_expansion(&BigInt::from(-27), &BigInt::from(1)),
            Err(Error::PerfectCube { .. })
        ));
        assert!(matches!(
            cube_root_expansion(&BigInt::from(2), &BigInt::from(0)),
            Err(Error::ZeroParameter("z"))
        ));
        assert!(cube_root_expansion(&BigInt::from(-2), &BigInt::from(1)).is_ok());
    }

    #[test]
    fn choose_z_examples() {
        let f = example1();
        let iv = isolate_real_roots(&f).unwrap().remove(0);
        let z = choose_z(&f, &iv, 25).unwrap();
        // the returned z carries a true certificate; 5 is also valid
        assert!(dominance_certificate(&f, &iv, &z).unwrap().verdict);
        assert!(
            dominance_certificate(&f, &iv, &BigInt::from(5))
                .unwrap()
                .verdict
        );

        let cube = CubicPoly::from_ints(0, 0, 2);
        let ivc = isolate_real_roots(&cube).unwrap().remove(0);
        assert_eq!(choose_z(&cube, &ivc, 25).unwrap(), BigInt::from(1));
    }

    #[test]
    fn choose_z_middle_square_goes_negative() {
        // the middle-value Ramanujan root has the strictly smallest square,
        // so a negative z certifies it directly
        let f = CubicPoly::from_ints(-1, 2, 1);
        let ivs = crate::roots::isolate_real_roots(&f).unwrap();
        let z = choose_z(&f, &ivs[1], 25).unwrap();
        assert_eq!(z, BigInt::from(-2));
        assert!(dominance_certificate(&f, &ivs[1], &z).unwrap().verdict);
    }

    #[test]
    fn expand_dominant_root() {
        let res = expand_root(
            &example1(),
            RootSelector::LargestModulus,
            &ExpandOptions {
                z_hint: Some(BigInt::from(5)),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(res.pipeline, Pipeline::Dominant);
        assert_eq!(res.z, BigInt::from(5));
        assert_eq!(
            res.tcf,
            hermite_expansion(&example1(), &BigInt::from(5)).unwrap()
        );
        assert_eq!(res.couple_desc.0, "3/alpha");
    }

    #[test]
    fn expand_smallest_section4() {
        // x^3 - 2x^2 + x + 1, z = 5: reflected pipeline with rho = r = -1
        let f = CubicPoly::from_ints(2, -1, -1);
        let res = expand_root(
            &f,
            RootSelector::SmallestModulus,
            &ExpandOptions {
                z_hint: Some(BigInt::from(5)),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(res.pipeline, Pipeline::ReflectedSmallest);
        tcf_eq(
            &res.tcf,
            &[(rat(-5), rat(1)), (frac(13, 3), rat(13))],
            &[
                (frac(-20, 87), frac(127, 261)),
                (rat(-20), frac(-127, 87)),
                (frac(20, 3), frac(127, 3)),
            ],
        );
    }

    #[test]
    fn expand_ramanujan_alpha2_via_reflection() {
        let f = CubicPoly::from_ints(-1, 2, 1);
        let res = expand_root(
            &f,
            RootSelector::SmallestModulus,
            &ExpandOptions {
                z_hint: Some(BigInt::from(1)),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(res.pipeline, Pipeline::ReflectedSmallest);
        tcf_eq(
            &res.tcf,
            &[(rat(1), rat(-2)), (rat(-7), rat(8))],
            &[
                (frac(-9, 13), frac(-20, 13)),
                (rat(9), frac(20, 13)),
                (rat(-9), rat(20)),
            ],
        );
    }

    #[test]
    fn expand_ramanujan_alpha1_via_shift() {
        let f = CubicPoly::from_ints(-1, 2, 1);
        let res = expand_root(
            &f,
            RootSelector::ValueIndex(2),
            &ExpandOptions {
                z_hint: Some(BigInt::from(2)),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(res.pipeline, Pipeline::ShiftedLargestValue);
        assert_eq!(res.shift, Some(rat(1)));
        tcf_eq(
            &res.tcf,
            &[(rat(2), rat(1)), (rat(9), rat(-16))],
            &[
                (frac(12, 43), frac(-41, 43)),
                (rat(12), frac(-41, 43)),
                (rat(12), rat(-41)),
            ],
        );
    }

    #[test]
    fn expand_middle_value_root() {
        // x^3 - 4x^2 + x + 5: roots ~ -0.95, 1.72, 3.23; the middle root has
        // the middle square, so no z certifies it directly
        let f = CubicPoly::from_ints(4, -1, -5);
        let res = expand_root(&f, RootSelector::ValueIndex(1), &ExpandOptions::default()).unwrap();
        assert_eq!(res.pipeline, Pipeline::ShiftedMiddleValue);
        let k = res.shift.clone().unwrap();
        assert!(res.target.contains(&-k.clone()));
        // round trip: both components evaluate to the declared couple
        let eval = evaluate(&res.tcf, &frac(1, 1_000_000_000), 80);
        assert!(eval.met_tol);
        let tight = res.target.refine(&frac(1, BigInt::from(10).pow(15)));
        for (value, elem) in [
            (eval.first, res.couple.0.clone()),
            (eval.second, res.couple.1.clone()),
        ] {
            let (lo, hi) = crate::roots::value_enclosure(&elem, &tight);
            assert!(lo - frac(1, 100_000_000) < value && value < hi + frac(1, 100_000_000));
        }
    }

    #[test]
    fn expand_refuses_uncertified_hint() {
        // z = -50 needs a shift of at least 6 before the target square beats
        // the pair; with the schedule capped at +-1, +-2 the hint is refused
        let f = CubicPoly::from_ints(0, 0, 2);
        let err = expand_root(
            &f,
            RootSelector::LargestModulus,
            &ExpandOptions {
                z_hint: Some(BigInt::from(-50)),
                z_window: 25,
                shift_attempts: 4,
            },
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::ZNotCertified { .. } | Error::NoShiftFound { .. }
        ));
    }

    #[test]
    fn expand_hint_falls_through_to_shift() {
        // z = 0 leaves the pure cube's exact modulus tie, but certifies on
        // the shifted cubic, where the tie is broken
        let f = CubicPoly::from_ints(0, 0, 2);
        let res = expand_root(
            &f,
            RootSelector::LargestModulus,
            &ExpandOptions {
                z_hint: Some(BigInt::from(0)),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(res.pipeline, Pipeline::ShiftedLargestValue);
        assert_eq!(res.z, BigInt::from(0));
        assert!(res.certificate.verdict);
    }

    #[test]
    fn expand_reducible_rejected() {
        let err = expand_root(
            &CubicPoly::from_ints(2, 1, -2),
            RootSelector::LargestModulus,
            &ExpandOptions::default(),
        )
        .unwrap_err();
        assert_eq!(err, Error::Reducible { root: rat(1) });
    }

    #[test]
    fn proof_identities_convergents_vs_mu() {
        // A_n (pq+r)^kappa det^floor((n+1)/3) = mu_(n+1)^(0), with kappa = 1
        // iff n = 1 mod 3, and the B, C analogues
        use crate::cerruti::mu_triples;
        let cases = [
            (example1(), 5i64),
            (CubicPoly::new(rat(4), frac(4, 3), frac(-1, 3)), 1),
            (CubicPoly::from_ints(-1, 2, 1), 3),
        ];
        for (f, z) in cases {
            let z = BigInt::from(z);
            let t = hermite_expansion(&f, &z).unwrap();
            let conv = convergents(&t, 12);
            let mus = mu_triples(&f, &z, 13);
            let pqr = f.pq_plus_r();
            let inv = invariants(&build_n(&f, &z));
            for n in 0..=12usize {
                let kappa = if n % 3 == 1 { 1 } else { 0 };
                let mut scale = inv.det.clone();
                let mut power = Rat::one();
                let mut e = (n + 1) / 3;
                while e > 0 {
                    power *= &scale;
                    e -= 1;
                }
                scale = power * if kappa == 1 { pqr.clone() } else { Rat::one() };
                let mu = &mus[n + 1];
                assert_eq!(&conv[n].a * &scale, mu.mu0, "A mismatch at n = {n} for {f}");
                assert_eq!(&conv[n].c * &scale, mu.mu2, "C mismatch at n = {n} for {f}");
                assert_eq!(
                    &conv[n].b * &scale,
                    &mu.mu1 + f.p() * &mu.mu2,
                    "B mismatch at n = {n} for {f}"
                );
            }
        }
    }
}
