//! Exact arithmetic in Q(alpha) for alpha a root of a cubic
//! `x^3 - p x^2 - q x - r`, plus the two linear functionals that replace the
//! floor function in the periodic algorithm.
//!
//! Elements are coordinates over the basis `{1, alpha, alpha^2}`; products
//! reduce through `alpha^3 = p alpha^2 + q alpha + r`. The representation is
//! unique when the cubic is irreducible; addition and multiplication are
//! plain quotient-ring arithmetic and stay valid for any modulus, while
//! inversion and sign tests rely on irreducibility.

use crate::error::{Error, Result};
use crate::poly::CubicPoly;
use crate::rat::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct FieldElem {
    c0: Rat,
    c1: Rat,
    c2: Rat,
    poly: CubicPoly,
}

impl FieldElem {
    pub fn from_coords(poly: &CubicPoly, c0: Rat, c1: Rat, c2: Rat) -> Self {
        FieldElem {
            c0,
            c1,
            c2,
            poly: poly.clone(),
        }
    }

    pub fn rational(poly: &CubicPoly, value: Rat) -> Self {
        Self::from_coords(poly, value, Rat::zero(), Rat::zero())
    }

    pub fn zero(poly: &CubicPoly) -> Self {
        Self::rational(poly, Rat::zero())
    }

    pub fn one(poly: &CubicPoly) -> Self {
        Self::rational(poly, Rat::one())
    }

    /// The generator alpha itself.
    pub fn alpha(poly: &CubicPoly) -> Self {
        Self::from_coords(poly, Rat::zero(), Rat::one(), Rat::zero())
    }

    pub fn alpha_squared(poly: &CubicPoly) -> Self {
        Self::from_coords(poly, Rat::zero(), Rat::zero(), Rat::one())
    }

    /// `r/alpha`, normalized into the basis as `alpha^2 - p alpha - q`.
    pub fn r_over_alpha(poly: &CubicPoly) -> Self {
        Self::from_coords(poly, -poly.q().clone(), -poly.p().clone(), Rat::one())
    }

    pub fn coords(&self) -> (&Rat, &Rat, &Rat) {
        (&self.c0, &self.c1, &self.c2)
    }

    pub fn poly(&self) -> &CubicPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.c1.is_zero() && self.c2.is_zero()
    }

    /// The rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.c0)
    }

    fn assert_same_poly(&self, other: &Self) {
        assert_eq!(
            self.poly, other.poly,
            "field elements over different cubic moduli"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_poly(other);
        Self::from_coords(
            &self.poly,
            &self.c0 + &other.c0,
            &self.c1 + &other.c1,
            &self.c2 + &other.c2,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_poly(other);
        Self::from_coords(
            &self.poly,
            &self.c0 - &other.c0,
            &self.c1 - &other.c1,
            &self.c2 - &other.c2,
        )
    }

    pub fn neg(&self) -> Self {
        Self::from_coords(
            &self.poly,
            -self.c0.clone(),
            -self.c1.clone(),
            -self.c2.clone(),
        )
    }

    pub fn sub_rat(&self, value: &Rat) -> Self {
        Self::from_coords(
            &self.poly,
            &self.c0 - value,
            self.c1.clone(),
            self.c2.clone(),
        )
    }

    pub fn scale(&self, value: &Rat) -> Self {
        Self::from_coords(
            &self.poly,
            &self.c0 * value,
            &self.c1 * value,
            &self.c2 * value,
        )
    }

    /// Product, reduced through `alpha^3 = p alpha^2 + q alpha + r` and
    /// `alpha^4 = (p^2+q) alpha^2 + (pq+r) alpha + pr`.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_poly(other);
        let (p, q, r) = (self.poly.p(), self.poly.q(), self.poly.r());
        let t0 = &self.c0 * &other.c0;
        let t1 = &self.c0 * &other.c1 + &self.c1 * &other.c0;
        let t2 = &self.c0 * &other.c2 + &self.c1 * &other.c1 + &self.c2 * &other.c0;
        let t3 = &self.c1 * &other.c2 + &self.c2 * &other.c1;
        let t4 = &self.c2 * &other.c2;
        Self::from_coords(
            &self.poly,
            t0 + &t3 * r + &t4 * (p * r),
            t1 + &t3 * q + &t4 * (p * q + r),
            t2 + &t3 * p + &t4 * (p * p + q),
        )
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one(&self.poly);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse, from the 3x3 rational system
    /// `M(e) v = (1,0,0)^T` where `M(e)` is the multiplication matrix of `e`
    /// over the basis.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroElement);
        }
        // columns: coordinates of e, e*alpha, e*alpha^2
        let col0 = [self.c0.clone(), self.c1.clone(), self.c2.clone()];
        let shift_up = |c: &[Rat; 3]| -> [Rat; 3] {
            let (p, q, r) = (self.poly.p(), self.poly.q(), self.poly.r());
            [&c[2] * r, &c[0] + &c[2] * q, &c[1] + &c[2] * p]
        };
        let col1 = shift_up(&col0);
        let col2 = shift_up(&col1);
        let m = [col0, col1, col2]; // m[j] is column j
        let minor = |row: usize| -> (usize, usize) {
            match row {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            }
        };
        let cof = |i: usize, j: usize| -> Rat {
            let (r0, r1) = minor(i);
            let (c0, c1) = minor(j);
            let det = &m[c0][r0] * &m[c1][r1] - &m[c1][r0] * &m[c0][r1];
            if (i + j).is_multiple_of(2) {
                det
            } else {
                -det
            }
        };
        let det = &m[0][0] * cof(0, 0) + &m[1][0] * cof(0, 1) + &m[2][0] * cof(0, 2);
        assert!(
            !det.is_zero(),
            "singular multiplication matrix: modulus {} is reducible",
            self.poly
        );
        Ok(Self::from_coords(
            &self.poly,
            cof(0, 0) / &det,
            cof(0, 1) / &det,
            cof(0, 2) / &det,
        ))
    }

    /// First partial-quotient functional: the linear extension of
    /// `1 -> 1`, `alpha -> p`, `alpha^2 -> 2z + p^2 + 2q`.
    pub fn f_map(&self, z: &BigInt) -> Rat {
        let (p, q) = (self.poly.p(), self.poly.q());
        let z = Rat::from_integer(z.clone());
        let alpha_sq = Rat::from_integer(2.into()) * (&z + q) + p * p;
        &self.c0 + &self.c1 * p + &self.c2 * alpha_sq
    }

    /// Second partial-quotient functional: the linear extension of
    /// `1 -> 1`, `alpha -> p`, `alpha^2 -> z + p^2 + q`; under linearity it
    /// automatically sends `r/alpha` to `z`.
    pub fn g_map(&self, z: &BigInt) -> Rat {
        let (p, q) = (self.poly.p(), self.poly.q());
        let z = Rat::from_integer(z.clone());
        let alpha_sq = z + p * p + q;
        &self.c0 + &self.c1 * p + &self.c2 * alpha_sq
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})a + ({})a^2", self.c0, self.c1, self.c2)
    }
}
