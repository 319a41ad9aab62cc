//! Certified real-root machinery for irreducible rational cubics.
//!
//! Everything here is exact: isolating intervals have rational endpoints and
//! carry a sign-change certificate, sign and floor queries on field elements
//! refine intervals until interval arithmetic excludes the alternatives, and
//! modulus comparisons between roots (including the complex pair, handled
//! through `|pair|^2 = r/alpha`) are decided by exact sign tests. No floating
//! point appears anywhere.

use crate::cerruti::{build_n, invariants, NInvariants};
use crate::dense::isolate_square_free;
use crate::error::Result;
use crate::field::FieldElem;
use crate::poly::CubicPoly;
use crate::rat::Rat;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Refinement loops are mathematically guaranteed to terminate; the cap only
/// turns an implementation bug into a panic instead of a hang.
const REFINE_CAP: usize = 200_000;

/// A rational-endpoint interval certified to contain exactly one real root of
/// `poly`, open at both ends, with `sign f(lo) != sign f(hi)` and both
/// endpoint values nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatingInterval {
    lo: Rat,
    hi: Rat,
    poly: CubicPoly,
}

impl IsolatingInterval {
    pub(crate) fn new(poly: &CubicPoly, lo: Rat, hi: Rat) -> Self {
        assert!(lo < hi, "empty interval");
        let flo = poly.eval(&lo);
        let fhi = poly.eval(&hi);
        assert!(
            !flo.is_zero() && !fhi.is_zero() && flo.is_negative() != fhi.is_negative(),
            "endpoints do not bracket a root of {poly}"
        );
        debug_assert_eq!(
            {
                let chain = crate::dense::sturm_chain(&poly.dense());
                crate::dense::count_roots(&chain, &lo, &hi)
            },
            1,
            "interval does not isolate exactly one root"
        );
        IsolatingInterval {
            lo,
            hi,
            poly: poly.clone(),
        }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn poly(&self) -> &CubicPoly {
        &self.poly
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.hi + &self.lo) / Rat::from_integer(2.into())
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    fn halve(&self) -> Self {
        let mid = self.midpoint();
        let fmid = self.poly.eval(&mid);
        assert!(
            !fmid.is_zero(),
            "rational midpoint is a root; modulus was reducible"
        );
        let flo = self.poly.eval(&self.lo);
        if flo.is_negative() != fmid.is_negative() {
            IsolatingInterval {
                lo: self.lo.clone(),
                hi: mid,
                poly: self.poly.clone(),
            }
        } else {
            IsolatingInterval {
                lo: mid,
                hi: self.hi.clone(),
                poly: self.poly.clone(),
            }
        }
    }

    /// Bisects until the width is at most `width`; the same root stays inside.
    pub fn refine(&self, width: &Rat) -> Self {
        assert!(width.is_positive());
        let mut cur = self.clone();
        while &cur.width() > width {
            cur = cur.halve();
        }
        cur
    }

    /// Sign of the root, refining a copy until zero is excluded.
    pub fn root_sign(&self) -> (i8, Self) {
        let mut cur = self.clone();
        for _ in 0..REFINE_CAP {
            if !cur.lo.is_negative() {
                return (1, cur);
            }
            if !cur.hi.is_positive() {
                return (-1, cur);
            }
            cur = cur.halve();
        }
        unreachable!("zero exclusion did not terminate");
    }

    /// Interval for the same root translated by `k`, as a root of `shifted`
    /// (which must be `poly.shift(k)`).
    pub(crate) fn translate(&self, k: &Rat, shifted: &CubicPoly) -> Self {
        Self::new(shifted, &self.lo + k, &self.hi + k)
    }

    /// Interval for the reciprocal root, as a root of `reflected`
    /// (which must be `poly.reflect()`). Refines until both endpoints share
    /// a strict sign, so the reciprocals are finite and ordered.
    pub(crate) fn reciprocal(&self, reflected: &CubicPoly) -> Self {
        let mut cur = self.clone();
        while cur.lo.is_zero() || cur.hi.is_zero() || cur.lo.is_negative() != cur.hi.is_negative() {
            cur = cur.halve();
        }
        let one = Rat::from_integer(1.into());
        Self::new(reflected, &one / &cur.hi, &one / &cur.lo)
    }
}

fn scale_range(c: &Rat, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    if c.is_negative() {
        (hi * c, lo * c)
    } else {
        (lo * c, hi * c)
    }
}

fn square_range(lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    if !lo.is_negative() {
        (lo * lo, hi * hi)
    } else if !hi.is_positive() {
        (hi * hi, lo * lo)
    } else {
        let a = lo * lo;
        let b = hi * hi;
        (Rat::zero(), if a > b { a } else { b })
    }
}

/// Exact enclosure of the value of `e` over the interval.
fn elem_range(e: &FieldElem, iv: &IsolatingInterval) -> (Rat, Rat) {
    let (c0, c1, c2) = e.coords();
    let (l1, h1) = scale_range(c1, &iv.lo, &iv.hi);
    let (sq_lo, sq_hi) = square_range(&iv.lo, &iv.hi);
    let (l2, h2) = scale_range(c2, &sq_lo, &sq_hi);
    (c0 + l1 + l2, c0 + h1 + h2)
}

/// Exact interval-arithmetic enclosure of the value of `e` at the isolated
/// root; tightens as `iv` is refined.
pub fn value_enclosure(e: &FieldElem, iv: &IsolatingInterval) -> (Rat, Rat) {
    assert_eq!(
        e.poly(),
        iv.poly(),
        "element and interval over different cubics"
    );
    elem_range(e, iv)
}

/// Exact sign of the value of `e` at the isolated root. Zero exactly when all
/// coordinates vanish (the basis representation is unique for an irreducible
/// modulus); otherwise adaptive refinement excludes zero.
pub fn sign_at_root(e: &FieldElem, iv: &IsolatingInterval) -> i8 {
    sign_at_root_refining(e, iv).0
}

/// As [`sign_at_root`], also returning the refined interval so repeated
/// queries against the same root can share precision.
pub fn sign_at_root_refining(e: &FieldElem, iv: &IsolatingInterval) -> (i8, IsolatingInterval) {
    assert_eq!(
        e.poly(),
        iv.poly(),
        "element and interval over different cubics"
    );
    if e.is_zero() {
        return (0, iv.clone());
    }
    if let Some(v) = e.as_rational() {
        return (if v.is_positive() { 1 } else { -1 }, iv.clone());
    }
    let mut cur = iv.clone();
    for _ in 0..REFINE_CAP {
        let (vlo, vhi) = elem_range(e, &cur);
        if vlo.is_positive() {
            return (1, cur);
        }
        if vhi.is_negative() {
            return (-1, cur);
        }
        cur = cur.halve();
    }
    unreachable!("sign refinement did not terminate");
}

/// `floor` of the value of `e` at the isolated root.
pub fn floor_at_root(e: &FieldElem, iv: &IsolatingInterval) -> BigInt {
    floor_at_root_refining(e, iv).0
}

/// As [`floor_at_root`], also returning the refined interval so repeated
/// queries against the same root can share precision.
pub fn floor_at_root_refining(
    e: &FieldElem,
    iv: &IsolatingInterval,
) -> (BigInt, IsolatingInterval) {
    assert_eq!(
        e.poly(),
        iv.poly(),
        "element and interval over different cubics"
    );
    if let Some(v) = e.as_rational() {
        return (v.floor().to_integer(), iv.clone());
    }
    // irrational value: refinement eventually pushes both bounds past every
    // integer boundary
    let mut cur = iv.clone();
    for _ in 0..REFINE_CAP {
        let (vlo, vhi) = elem_range(e, &cur);
        let flo = vlo.floor().to_integer();
        let fhi = vhi.floor().to_integer();
        if flo == fhi && !vhi.is_integer() {
            return (flo, cur);
        }
        cur = cur.halve();
    }
    unreachable!("floor refinement did not terminate");
}

/// Isolates the real roots of an irreducible cubic: one or three intervals,
/// disjoint, sorted ascending by root value.
pub fn isolate_real_roots(f: &CubicPoly) -> Result<Vec<IsolatingInterval>> {
    f.require_irreducible()?;
    let raw = isolate_square_free(&f.dense());
    assert!(
        raw.len() == 1 || raw.len() == 3,
        "cubic must have 1 or 3 real roots"
    );
    Ok(raw
        .into_iter()
        .map(|(lo, hi)| IsolatingInterval::new(f, lo, hi))
        .collect())
}

/// One of the three roots of a cubic: a real root by ascending-value index,
/// or the conjugate complex pair as a unit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootId {
    Real(usize),
    ComplexPair,
}

/// Total modulus order over the roots, with exact certificates.
///
/// `ranking` lists roots by descending modulus; proven equal-modulus pairs
/// appear in `ties` (the only possible tie is the pure-cube family
/// `p = q = 0`, where the real root and the complex pair share `|r|^(1/3)`).
#[derive(Clone, Debug)]
pub struct ModulusOrder {
    real_roots: Vec<IsolatingInterval>,
    complex_pair: bool,
    ranking: Vec<RootId>,
    ties: Vec<(RootId, RootId)>,
}

impl ModulusOrder {
    pub fn real_roots(&self) -> &[IsolatingInterval] {
        &self.real_roots
    }

    pub fn has_complex_pair(&self) -> bool {
        self.complex_pair
    }

    pub fn ranking(&self) -> &[RootId] {
        &self.ranking
    }

    pub fn ties(&self) -> &[(RootId, RootId)] {
        &self.ties
    }

    fn tied(&self, a: RootId, b: RootId) -> bool {
        self.ties
            .iter()
            .any(|(x, y)| (*x == a && *y == b) || (*x == b && *y == a))
    }

    /// The root strictly largest in modulus, if any.
    pub fn strictly_largest(&self) -> Option<RootId> {
        let first = self.ranking[0];
        if self.ranking.len() > 1 && self.tied(first, self.ranking[1]) {
            None
        } else {
            Some(first)
        }
    }

    /// The root strictly smallest in modulus, if any.
    pub fn strictly_smallest(&self) -> Option<RootId> {
        let last = *self.ranking.last().unwrap();
        let n = self.ranking.len();
        if n > 1 && self.tied(last, self.ranking[n - 2]) {
            None
        } else {
            Some(last)
        }
    }

    /// Index of a real root maximal in modulus (a proven tie with the complex
    /// pair still counts as maximal). `None` when the pair strictly wins.
    pub fn largest_real(&self) -> Option<usize> {
        match self.ranking[0] {
            RootId::Real(i) => Some(i),
            RootId::ComplexPair => match self.ranking.get(1) {
                Some(RootId::Real(i)) if self.tied(RootId::ComplexPair, RootId::Real(*i)) => {
                    Some(*i)
                }
                _ => None,
            },
        }
    }

    /// Index of a real root minimal in modulus, dually.
    pub fn smallest_real(&self) -> Option<usize> {
        let n = self.ranking.len();
        match self.ranking[n - 1] {
            RootId::Real(i) => Some(i),
            RootId::ComplexPair => match self.ranking.get(n.wrapping_sub(2)) {
                Some(RootId::Real(i)) if self.tied(RootId::ComplexPair, RootId::Real(*i)) => {
                    Some(*i)
                }
                _ => None,
            },
        }
    }
}

fn abs_range(iv: &IsolatingInterval) -> (Rat, Rat) {
    if !iv.lo.is_negative() {
        (iv.lo.clone(), iv.hi.clone())
    } else if !iv.hi.is_positive() {
        (-iv.hi.clone(), -iv.lo.clone())
    } else {
        let a = -iv.lo.clone();
        let b = iv.hi.clone();
        (Rat::zero(), if a > b { a } else { b })
    }
}

/// Compares |root a| against |root b| by refining until the absolute-value
/// enclosures separate. Never returns `Equal`: distinct real roots of
/// irreducible cubics cannot share a modulus (that would force a rational
/// third root).
fn cmp_modulus(a: &IsolatingInterval, b: &IsolatingInterval) -> Ordering {
    let mut ia = a.clone();
    let mut ib = b.clone();
    for _ in 0..REFINE_CAP {
        let (alo, ahi) = abs_range(&ia);
        let (blo, bhi) = abs_range(&ib);
        if alo > bhi {
            return Ordering::Greater;
        }
        if ahi < blo {
            return Ordering::Less;
        }
        ia = ia.halve();
        ib = ib.halve();
    }
    unreachable!("modulus comparison did not terminate");
}

/// Certified modulus order of all three roots of an irreducible cubic.
///
/// Three real roots are compared pairwise through refined enclosures. With a
/// complex pair, `|pair|^2 = r/alpha` turns the comparison into the exact
/// sign of `alpha^3 - r` (coordinates `(0, q, p)`) combined with the sign of
/// the real root; `p = q = 0` is the proven-tie family.
pub fn classify_moduli(f: &CubicPoly) -> Result<ModulusOrder> {
    let ivs = isolate_real_roots(f)?;
    if ivs.len() == 3 {
        let mut idx = vec![0usize, 1, 2];
        idx.sort_by(|&i, &j| cmp_modulus(&ivs[j], &ivs[i]));
        return Ok(ModulusOrder {
            real_roots: ivs,
            complex_pair: false,
            ranking: idx.into_iter().map(RootId::Real).collect(),
            ties: Vec::new(),
        });
    }
    let iv = ivs[0].clone();
    if f.p().is_zero() && f.q().is_zero() {
        return Ok(ModulusOrder {
            real_roots: ivs,
            complex_pair: true,
            ranking: vec![RootId::Real(0), RootId::ComplexPair],
            ties: vec![(RootId::Real(0), RootId::ComplexPair)],
        });
    }
    // sign(|alpha|^3 - |r|) = sign(alpha) * sign(alpha^3 - r)
    let cube_minus_r = FieldElem::from_coords(f, Rat::zero(), f.q().clone(), f.p().clone());
    let s1 = sign_at_root(&cube_minus_r, &iv);
    let (s2, _) = iv.root_sign();
    assert!(s1 != 0, "tie outside the p = q = 0 family is impossible");
    let ranking = if s1 * s2 > 0 {
        vec![RootId::Real(0), RootId::ComplexPair]
    } else {
        vec![RootId::ComplexPair, RootId::Real(0)]
    };
    Ok(ModulusOrder {
        real_roots: ivs,
        complex_pair: true,
        ranking,
        ties: Vec::new(),
    })
}

/// Outcome of the dominance test for `beta_1 = z + alpha^2` among the roots
/// of the characteristic polynomial of the fundamental matrix.
#[derive(Clone, Debug)]
pub struct DominanceCertificate {
    pub poly: CubicPoly,
    pub z: BigInt,
    pub target: IsolatingInterval,
    pub invariants: NInvariants,
    pub verdict: bool,
}

impl DominanceCertificate {
    /// The characteristic polynomial of the fundamental matrix, in the
    /// crate's sign convention.
    pub fn charpoly(&self) -> CubicPoly {
        CubicPoly::new(
            self.invariants.tr.clone(),
            -self.invariants.i1.clone(),
            self.invariants.det.clone(),
        )
    }
}

/// Builds the characteristic polynomial of the fundamental matrix for
/// `(f, z)`, locates which of its real roots is `z + alpha^2` by pushing the
/// target interval through `t -> z + t^2`, and certifies whether that root is
/// strictly largest in modulus.
pub fn dominance_certificate(
    f: &CubicPoly,
    iv: &IsolatingInterval,
    z: &BigInt,
) -> Result<DominanceCertificate> {
    f.require_irreducible()?;
    assert_eq!(iv.poly(), f, "interval does not belong to the polynomial");
    let inv = invariants(&build_n(f, z));
    assert!(!inv.det.is_zero(), "det(N) = 0 contradicts irreducibility");
    let charpoly = CubicPoly::new(inv.tr.clone(), -inv.i1.clone(), inv.det.clone());
    let mo = classify_moduli(&charpoly)
        .expect("characteristic polynomial of N is irreducible when the input is");
    let zrat = Rat::from_integer(z.clone());
    let mut cur = iv.clone();
    let mut target_j = None;
    for _ in 0..REFINE_CAP {
        let (sq_lo, sq_hi) = square_range(&cur.lo, &cur.hi);
        let jlo = &zrat + sq_lo;
        let jhi = &zrat + sq_hi;
        let inside: Vec<usize> = mo
            .real_roots()
            .iter()
            .enumerate()
            .filter(|(_, riv)| riv.lo < jhi && jlo < riv.hi)
            .map(|(j, _)| j)
            .collect();
        if inside.len() == 1 {
            let j = inside[0];
            let riv = &mo.real_roots()[j];
            if riv.lo < jlo && jhi < riv.hi {
                target_j = Some(j);
                break;
            }
        }
        cur = cur.halve();
    }
    let target_j = target_j.expect("beta_1 localization did not terminate");
    let verdict = mo.strictly_largest() == Some(RootId::Real(target_j));
    Ok(DominanceCertificate {
        poly: f.clone(),
        z: z.clone(),
        target: cur,
        invariants: inv,
        verdict,
    })
}
