//! The fundamental 3x3 matrix attached to `(f, z)`, its characteristic
//! invariants, and the coordinate sequences of `(z + alpha^2)^n` over the
//! basis `{1, alpha, alpha^2}`.
//!
//! The three coordinate sequences satisfy one order-3 linear recurrence whose
//! characteristic polynomial is that of the matrix; their ratios converge to
//! `r/alpha` and `alpha - p` whenever `z + alpha^2` strictly dominates the
//! other two eigenvalues in modulus (see `roots::dominance_certificate`).

use crate::dense::DensePoly;
use crate::error::{Error, Result};
use crate::matrix::Mat3;
use crate::poly::CubicPoly;
use crate::rat::Rat;
use crate::roots::IsolatingInterval;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The fundamental matrix together with its generating data.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixN {
    mat: Mat3<Rat>,
    poly: CubicPoly,
    z: BigInt,
}

impl MatrixN {
    pub fn matrix(&self) -> &Mat3<Rat> {
        &self.mat
    }

    pub fn poly(&self) -> &CubicPoly {
        &self.poly
    }

    pub fn z(&self) -> &BigInt {
        &self.z
    }
}

/// Builds the fundamental matrix
/// `[[z, r, pr], [0, q+z, pq+r], [1, p, p^2+q+z]]`.
pub fn build_n(f: &CubicPoly, z: &BigInt) -> MatrixN {
    let (p, q, r) = (f.p(), f.q(), f.r());
    let zr = Rat::from_integer(z.clone());
    let mat = Mat3::new([
        [zr.clone(), r.clone(), p * r],
        [Rat::zero(), q + &zr, p * q + r],
        [Rat::one(), p.clone(), p * p + q + &zr],
    ]);
    MatrixN {
        mat,
        poly: f.clone(),
        z: z.clone(),
    }
}

/// Coefficients of the characteristic polynomial
/// `x^3 - tr x^2 + i1 x - det`.
#[derive(Clone, Debug, PartialEq)]
pub struct NInvariants {
    pub tr: Rat,
    pub i1: Rat,
    pub det: Rat,
}

/// Trace, second invariant and determinant, computed both from the closed
/// forms in `(p, q, r, z)` and directly from the matrix; the two routes must
/// agree.
pub fn invariants(n: &MatrixN) -> NInvariants {
    let (p, q, r) = (n.poly.p(), n.poly.q(), n.poly.r());
    let z = Rat::from_integer(n.z.clone());
    let two = Rat::from_integer(2.into());
    let three = Rat::from_integer(3.into());
    let four = Rat::from_integer(4.into());

    let tr = p * p + &two * q + &three * &z;
    let i1 = q * q - &two * (p * r) + &two * (p * p) * &z + &four * (q * &z) + &three * (&z * &z);
    let det = r * r + q * q * &z - &two * (p * r) * &z
        + (p * p) * (&z * &z)
        + &two * (q * (&z * &z))
        + &z * &z * &z;

    let tr_direct = n.mat.trace();
    let i1_direct = (&tr_direct * &tr_direct - n.mat.mul(&n.mat).trace()) / two;
    let det_direct = n.mat.det();
    assert_eq!(tr, tr_direct, "trace closed form disagrees with the matrix");
    assert_eq!(
        i1, i1_direct,
        "second invariant closed form disagrees with the matrix"
    );
    assert_eq!(
        det, det_direct,
        "determinant closed form disagrees with the matrix"
    );
    NInvariants { tr, i1, det }
}

/// Coordinates of `(z + alpha^2)^n` over `{1, alpha, alpha^2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CerrutiTriple {
    pub n: usize,
    pub mu0: Rat,
    pub mu1: Rat,
    pub mu2: Rat,
}

/// Infinite iterator over the coordinate triples, driven by the order-3
/// recurrence `mu_n = tr*mu_(n-1) - i1*mu_(n-2) + det*mu_(n-3)`.
pub struct MuStream {
    inv: NInvariants,
    window: [(Rat, Rat, Rat); 3],
    next_n: usize,
}

impl MuStream {
    fn initial(f: &CubicPoly, z: &BigInt) -> [(Rat, Rat, Rat); 3] {
        let (p, q, r) = (f.p(), f.q(), f.r());
        let z = Rat::from_integer(z.clone());
        let two = Rat::from_integer(2.into());
        [
            (Rat::one(), Rat::zero(), Rat::zero()),
            (z.clone(), Rat::zero(), Rat::one()),
            (&z * &z + p * r, p * q + r, p * p + q + &two * &z),
        ]
    }
}

impl Iterator for MuStream {
    type Item = CerrutiTriple;

    fn next(&mut self) -> Option<CerrutiTriple> {
        let n = self.next_n;
        let out = if n < 3 {
            self.window[n].clone()
        } else {
            let [m3, m2, m1] = &self.window;
            let step =
                |a: &Rat, b: &Rat, c: &Rat| &self.inv.tr * c - &self.inv.i1 * b + &self.inv.det * a;
            let fresh = (
                step(&m3.0, &m2.0, &m1.0),
                step(&m3.1, &m2.1, &m1.1),
                step(&m3.2, &m2.2, &m1.2),
            );
            self.window = [m2.clone(), m1.clone(), fresh.clone()];
            fresh
        };
        self.next_n += 1;
        Some(CerrutiTriple {
            n,
            mu0: out.0,
            mu1: out.1,
            mu2: out.2,
        })
    }
}

pub fn mu_stream(f: &CubicPoly, z: &BigInt) -> MuStream {
    MuStream {
        inv: invariants(&build_n(f, z)),
        window: MuStream::initial(f, z),
        next_n: 0,
    }
}

/// The triples for `n = 0 ..= n_max`.
pub fn mu_triples(f: &CubicPoly, z: &BigInt, n_max: usize) -> Vec<CerrutiTriple> {
    mu_stream(f, z).take(n_max + 1).collect()
}

/// Checks that the exact matrix power `N^n` equals the patterned matrix
/// assembled from the `n`-th coordinate triple.
pub fn matrix_power_check(n: &MatrixN, exponent: usize) -> bool {
    let (p, q, r) = (n.poly.p(), n.poly.q(), n.poly.r());
    let mu = mu_stream(&n.poly, &n.z)
        .nth(exponent)
        .expect("stream is infinite");
    let (m0, m1, m2) = (&mu.mu0, &mu.mu1, &mu.mu2);
    let pattern = Mat3::new([
        [m0.clone(), r * m2, r * m1 + p * r * m2],
        [m1.clone(), m0 + q * m2, (p * q + r) * m2 + q * m1],
        [m2.clone(), m1 + p * m2, m0 + p * m1 + (p * p + q) * m2],
    ]);
    n.mat.pow(exponent) == pattern
}

/// The ratio pair `(mu0/mu2, mu1/mu2)` at index `n`; the first converges to
/// `r/alpha` and the second to `alpha - p` under a true dominance
/// certificate for `(f, iv, z)`, which is the caller's obligation.
pub fn binet_ratios(
    f: &CubicPoly,
    z: &BigInt,
    iv: &IsolatingInterval,
    n: usize,
) -> Result<(Rat, Rat)> {
    assert_eq!(iv.poly(), f, "interval does not belong to the polynomial");
    let mu = mu_stream(f, z).nth(n).expect("stream is infinite");
    if mu.mu2.is_zero() {
        return Err(Error::VanishingDenominator { index: n });
    }
    Ok((&mu.mu0 / &mu.mu2, &mu.mu1 / &mu.mu2))
}

/// Polynomial-level verification that the characteristic polynomial of the
/// fundamental matrix vanishes on `z + t^2` modulo `t^3 - p t^2 - q t - r`,
/// with the expected cofactor `t^3 + p t^2 - q t + r`.
pub fn charpoly_root_check(f: &CubicPoly, z: &BigInt) -> bool {
    let inv = invariants(&build_n(f, z));
    let x = DensePoly::new(vec![Rat::from_integer(z.clone()), Rat::zero(), Rat::one()]);
    let x2 = x.mul(&x);
    let x3 = x2.mul(&x);
    let composed = x3
        .sub(&x2.scale(&inv.tr))
        .sub(&x.scale(&-inv.i1.clone()))
        .sub(&DensePoly::constant(inv.det.clone()));
    let (quo, rem) = composed.divmod(&f.dense());
    let cofactor = DensePoly::new(vec![
        f.r().clone(),
        -f.q().clone(),
        f.p().clone(),
        Rat::one(),
    ]);
    rem.is_zero() && quo == cofactor
}
