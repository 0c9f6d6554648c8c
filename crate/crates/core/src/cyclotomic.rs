//! Exact arithmetic in `Z[ξ_k] = Z[x]/Φ_k(x)` for `k ∈ {1, 2, 3, 4, 6}`.
//!
//! These are exactly the orders for which `φ(k) ≤ 2`, so every element is stored as
//! `c0 + c1 ξ` with `c1 = 0` whenever `φ(k) = 1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use crate::{Error, Result};

pub const SUPPORTED_ORDERS: [u32; 5] = [1, 2, 3, 4, 6];

/// Element of `Z[ξ_k]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    order: u32,
    coeffs: [i64; 2],
}

/// `φ(k)` for a supported order.
fn degree(order: u32) -> usize {
    match order {
        1 | 2 => 1,
        _ => 2,
    }
}

/// `ξ² = r0 + r1 ξ` for orders with `φ(k) = 2`.
fn square_rule(order: u32) -> [i64; 2] {
    match order {
        3 => [-1, -1],
        4 => [-1, 0],
        6 => [-1, 1],
        _ => unreachable!("quadratic orders only"),
    }
}

impl CyclotomicInt {
    pub fn check_order(order: u32) -> Result<()> {
        if SUPPORTED_ORDERS.contains(&order) {
            Ok(())
        } else {
            Err(Error::UnsupportedOrder(order))
        }
    }

    pub fn from_int(order: u32, value: i64) -> Result<Self> {
        Self::check_order(order)?;
        Ok(Self {
            order,
            coeffs: [value, 0],
        })
    }

    pub fn zero(order: u32) -> Result<Self> {
        Self::from_int(order, 0)
    }

    pub fn one(order: u32) -> Result<Self> {
        Self::from_int(order, 1)
    }

    /// `ξ_k^j`, any integer `j`.
    pub fn root_of_unity(order: u32, j: i64) -> Result<Self> {
        Self::check_order(order)?;
        let j = j.rem_euclid(order as i64);
        let coeffs = match (order, j) {
            (_, 0) => [1, 0],
            (2, 1) => [-1, 0],
            (_, 1) => [0, 1],
            (3, 2) => [-1, -1],
            (4, 2) => [-1, 0],
            (4, 3) => [0, -1],
            (6, 2) => [-1, 1],
            (6, 3) => [-1, 0],
            (6, 4) => [0, -1],
            (6, 5) => [1, -1],
            _ => unreachable!("exponent reduced modulo the order"),
        };
        Ok(Self { order, coeffs })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients in the basis `1, ξ, …, ξ^{φ(k)−1}`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs[..degree(self.order)]
    }

    /// The value as an integer, if the element lies in `Z`.
    pub fn to_integer(&self) -> Option<i64> {
        (self.coeffs[1] == 0).then_some(self.coeffs[0])
    }

    pub fn scale(self, s: i64) -> Self {
        Self {
            order: self.order,
            coeffs: [self.coeffs[0] * s, self.coeffs[1] * s],
        }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self {
            order: self.order,
            coeffs: [1, 0],
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Image under the embedding `ξ ↦ e^{2πi/k}`, as `(re, im)`. For tests and display.
    pub fn to_complex(&self) -> (f64, f64) {
        let t = 2.0 * std::f64::consts::PI / self.order as f64;
        let (re, im) = (t.cos(), t.sin());
        let [c0, c1] = self.coeffs;
        if degree(self.order) == 1 {
            (c0 as f64, 0.0)
        } else {
            (c0 as f64 + c1 as f64 * re, c1 as f64 * im)
        }
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "cannot combine elements of Z[ξ_{}] and Z[ξ_{}]",
            self.order, other.order
        );
    }
}

impl Add for CyclotomicInt {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.assert_same_order(&rhs);
        Self {
            order: self.order,
            coeffs: [self.coeffs[0] + rhs.coeffs[0], self.coeffs[1] + rhs.coeffs[1]],
        }
    }
}

impl AddAssign for CyclotomicInt {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Neg for CyclotomicInt {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Sub for CyclotomicInt {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for CyclotomicInt {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.assert_same_order(&rhs);
        let ([a0, a1], [b0, b1]) = (self.coeffs, rhs.coeffs);
        let coeffs = if degree(self.order) == 1 {
            [a0 * b0, 0]
        } else {
            let [r0, r1] = square_rule(self.order);
            let top = a1 * b1;
            [a0 * b0 + top * r0, a0 * b1 + a1 * b0 + top * r1]
        };
        Self {
            order: self.order,
            coeffs,
        }
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{} + {}·ξ{}", self.coeffs[0], self.coeffs[1], self.order),
        }
    }
}
