//! Minimal exact 3x3 matrices, generic over the scalar.

use num_traits::{One, Zero};
use std::array::from_fn;
use std::ops::{Add, Mul, Sub};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat3<T> {
    rows: [[T; 3]; 3],
}

impl<T> Mat3<T>
where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    pub fn new(rows: [[T; 3]; 3]) -> Self {
        Mat3 { rows }
    }

    pub fn identity() -> Self {
        Mat3 {
            rows: from_fn(|i| from_fn(|j| if i == j { T::one() } else { T::zero() })),
        }
    }

    pub fn rows(&self) -> &[[T; 3]; 3] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn col(&self, j: usize) -> [T; 3] {
        from_fn(|i| self.rows[i][j].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Mat3 {
            rows: from_fn(|i| {
                from_fn(|j| {
                    (0..3).fold(T::zero(), |acc, k| {
                        acc + self.rows[i][k].clone() * other.rows[k][j].clone()
                    })
                })
            }),
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::identity();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> T {
        self.rows[0][0].clone() + self.rows[1][1].clone() + self.rows[2][2].clone()
    }

    pub fn det(&self) -> T {
        let r = &self.rows;
        let m00 = r[1][1].clone() * r[2][2].clone() - r[1][2].clone() * r[2][1].clone();
        let m01 = r[1][0].clone() * r[2][2].clone() - r[1][2].clone() * r[2][0].clone();
        let m02 = r[1][0].clone() * r[2][1].clone() - r[1][1].clone() * r[2][0].clone();
        r[0][0].clone() * m00 - r[0][1].clone() * m01 + r[0][2].clone() * m02
    }
}
