//! Gaussian integers `a + bi`, kept only as far as the energy comparison needs:
//! arithmetic, the Dresden residue grid, nearest-point reduction and the
//! Mannheim weight.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::eisenstein::{parse_pair, ParsePairError};
use crate::intmath::{self, round_half_down, to_i64};
use crate::{EisError, Result};

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Gaussian {
    pub a: i64,
    pub b: i64,
}

impl From<[i64; 2]> for Gaussian {
    fn from([a, b]: [i64; 2]) -> Self {
        Gaussian { a, b }
    }
}

impl From<Gaussian> for [i64; 2] {
    fn from(x: Gaussian) -> Self {
        [x.a, x.b]
    }
}

impl Gaussian {
    pub const fn new(a: i64, b: i64) -> Self {
        Gaussian { a, b }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Ok(Gaussian::new(
            self.a.checked_add(rhs.a).ok_or(EisError::Overflow)?,
            self.b.checked_add(rhs.b).ok_or(EisError::Overflow)?,
        ))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Ok(Gaussian::new(
            self.a.checked_sub(rhs.a).ok_or(EisError::Overflow)?,
            self.b.checked_sub(rhs.b).ok_or(EisError::Overflow)?,
        ))
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let (a, b, c, d) = (self.a as i128, self.b as i128, rhs.a as i128, rhs.b as i128);
        Ok(Gaussian::new(
            to_i64(a * c - b * d)?,
            to_i64(a * d + b * c)?,
        ))
    }

    pub fn conj(self) -> Self {
        Gaussian::new(self.a, -self.b)
    }

    pub fn checked_norm(self) -> Option<u64> {
        let (a, b) = (self.a as i128, self.b as i128);
        u64::try_from(a * a + b * b).ok()
    }

    pub fn norm(self) -> u64 {
        self.checked_norm().expect("Gaussian norm overflows u64")
    }

    /// `|a| + |b|`.
    pub fn manhattan(self) -> u64 {
        self.a.unsigned_abs() + self.b.unsigned_abs()
    }

    pub fn to_complex(self) -> (f64, f64) {
        (self.a as f64, self.b as f64)
    }

    /// `α - ⌊α·conj(η)/N(η)⌉·η`, rounding each component with exact halves
    /// sent down (the same rule as the Eisenstein division).
    pub fn mod_reduce(self, eta: Self) -> Result<Self> {
        if eta.is_zero() {
            return Err(EisError::ZeroModulus);
        }
        let n = eta.norm() as i128;
        let (a, b) = (self.a as i128, self.b as i128);
        let (c, d) = (eta.a as i128, eta.b as i128);
        // α·conj(η) = (ac + bd) + (bc - ad)i
        let qa = round_half_down(a * c + b * d, n);
        let qb = round_half_down(b * c - a * d, n);
        Ok(Gaussian::new(
            to_i64(a - (qa * c - qb * d))?,
            to_i64(b - (qa * d + qb * c))?,
        ))
    }

    /// `η = t(c + di)` with `t = gcd(a, b)`.
    pub fn decompose(self) -> Result<(i64, Gaussian)> {
        if self.is_zero() {
            return Err(EisError::ZeroModulus);
        }
        let t = intmath::gcd(self.a, self.b);
        Ok((t, Gaussian::new(self.a / t, self.b / t)))
    }

    /// The Dresden grid `{x + yi : 0 <= x < tN(c+di), 0 <= y < t}`, `y` outer.
    pub fn residue_grid(self) -> Result<Vec<Gaussian>> {
        let (t, prim) = self.decompose()?;
        let width = t * prim.norm() as i64;
        Ok((0..t)
            .flat_map(|y| (0..width).map(move |x| Gaussian::new(x, y)))
            .collect())
    }

    /// The grid reduced to nearest-point representatives.
    pub fn residue_system(self) -> Result<Vec<Gaussian>> {
        self.residue_grid()?
            .into_iter()
            .map(|p| p.mod_reduce(self))
            .collect()
    }

    /// Smallest `|a| + |b|` over the class of `self` modulo `eta`, searched over
    /// the nine lattice translates around the nearest-point representative.
    pub fn mannheim_weight(self, eta: Self) -> Result<u64> {
        let rep = self.mod_reduce(eta)?;
        let mut best = u64::MAX;
        for u in -1..=1 {
            for v in -1..=1 {
                let shift = Gaussian::new(u, v).checked_mul(eta)?;
                best = best.min(rep.checked_add(shift)?.manhattan());
            }
        }
        Ok(best)
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("Gaussian addition overflow")
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs)
            .expect("Gaussian subtraction overflow")
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs)
            .expect("Gaussian multiplication overflow")
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Self {
        Gaussian::new(-self.a, -self.b)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "i"),
            (0, -1) => write!(f, "-i"),
            (0, b) => write!(f, "{b}i"),
            (a, 1) => write!(f, "{a}+i"),
            (a, -1) => write!(f, "{a}-i"),
            (a, b) if b > 0 => write!(f, "{a}+{b}i"),
            (a, b) => write!(f, "{a}{b}i"),
        }
    }
}

impl FromStr for Gaussian {
    type Err = ParsePairError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_pair(s).map(|(a, b)| Gaussian::new(a, b))
    }
}
