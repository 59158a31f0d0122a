//! Residue systems of `Z[ρ]/⟨η⟩`.
//!
//! Every class has two names here: a grid point `x + yρ` with
//! `0 <= x < tN(m+nρ)` and `0 <= y < t` (the `R` system), and the norm-smallest
//! member found by division (the `E` system, the constellation point).
//! [`Modulus::mu_reduce`] goes from any element to the `E` name and
//! [`Modulus::pi_lift`] goes from any element to the `R` name.

use serde::Serialize;

use crate::eisenstein::{Eisenstein, UNITS};
use crate::intmath::{self, mod_inverse};
use crate::{EisError, Result};

/// Which coefficient of `m + nρ` is coprime to `t` (and hence invertible modulo `tN(m+nρ)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoprimeSide {
    N,
    M,
}

/// A nonzero modulus `η` together with the associate `t(m + nρ)` actually used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Modulus {
    pub eta: Eisenstein,
    pub working_eta: Eisenstein,
    pub t: i64,
    pub m: i64,
    pub n: i64,
    pub coprime_side: CoprimeSide,
}

/// Shape of the quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IsomorphismKind {
    /// `η ∼ t`: the ring is `Z_t[ρ]`.
    FullGrid,
    /// `t = 1`: the ring is `Z_N`.
    Rational,
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// The grid representatives and their reduced counterparts, index-aligned.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueSystem {
    pub modulus: Modulus,
    pub r_points: Vec<Eisenstein>,
    pub e_points: Vec<Eisenstein>,
}

fn split(x: Eisenstein) -> Option<(i64, i64, i64, CoprimeSide)> {
    let t = x.content();
    let (m, n) = (x.a / t, x.b / t);
    if intmath::gcd(n, t) == 1 {
        Some((t, m, n, CoprimeSide::N))
    } else if intmath::gcd(m, t) == 1 {
        Some((t, m, n, CoprimeSide::M))
    } else {
        None
    }
}

impl Modulus {
    /// Picks the associate of `eta` to work with. `eta` itself is preferred, then
    /// its canonical associate, then the remaining unit multiples in the order
    /// `1, -1, ρ, -ρ, ρ², -ρ²`; the first one whose `m` or `n` is coprime to `t`
    /// wins.
    pub fn new(eta: Eisenstein) -> Result<Self> {
        if eta.is_zero() {
            return Err(EisError::ZeroModulus);
        }
        eta.checked_norm().ok_or(EisError::Overflow)?;
        let candidates = std::iter::once(eta)
            .chain(std::iter::once(eta.canonical_associate()))
            .chain(UNITS.iter().map(|&u| u * eta));
        for working_eta in candidates {
            if let Some((t, m, n, coprime_side)) = split(working_eta) {
                return Ok(Modulus {
                    eta,
                    working_eta,
                    t,
                    m,
                    n,
                    coprime_side,
                });
            }
        }
        Err(EisError::NoSuitableAssociate(eta))
    }

    /// `|Z[ρ]/⟨η⟩| = N(η)`.
    pub fn size(&self) -> u64 {
        self.eta.norm()
    }

    /// `m + nρ`.
    pub fn primitive_part(&self) -> Eisenstein {
        Eisenstein::new(self.m, self.n)
    }

    /// Width of the residue grid, `tN(m + nρ)`.
    pub fn grid_width(&self) -> i64 {
        self.t * self.primitive_part().norm() as i64
    }

    pub fn isomorphism_kind(&self) -> IsomorphismKind {
        if self.t == 1 {
            IsomorphismKind::Rational
        } else if self.primitive_part().is_unit() {
            IsomorphismKind::FullGrid
        } else {
            IsomorphismKind::Mixed
        }
    }

    /// Grid points in row-major order (`y` outer, `x` inner).
    pub fn grid(&self) -> impl Iterator<Item = Eisenstein> + '_ {
        let width = self.grid_width();
        (0..self.t).flat_map(move |y| (0..width).map(move |x| Eisenstein::new(x, y)))
    }

    /// The norm-smallest member of the class of `alpha` (remainder on division
    /// by the working associate).
    pub fn mu_reduce(&self, alpha: Eisenstein) -> Eisenstein {
        self.try_mu_reduce(alpha).expect("reduction overflow")
    }

    pub fn try_mu_reduce(&self, alpha: Eisenstein) -> Result<Eisenstein> {
        Ok(alpha.divmod(self.working_eta)?.1)
    }

    /// The grid point `x' + y'ρ` in the class of `delta`:
    /// `y' = y mod t`, and `x' = x - m·n⁻¹(y - y')` or
    /// `x' = x + (m⁻¹n - 1)(y - y')` modulo `tN(m+nρ)`, depending on which of
    /// `n`, `m` is invertible.
    pub fn pi_lift(&self, delta: Eisenstein) -> Eisenstein {
        let width = self.grid_width() as i128;
        let (x, y) = (delta.a as i128, delta.b as i128);
        let t = self.t as i128;
        let (m, n) = (self.m as i128, self.n as i128);
        let y_lift = y.rem_euclid(t);
        let dy = (y - y_lift).rem_euclid(width);
        let x_lift = match self.coprime_side {
            CoprimeSide::N => {
                let inv = mod_inverse(n, width).expect("n is a unit modulo tN");
                let k = (m.rem_euclid(width) * inv) % width;
                (x - k * dy % width).rem_euclid(width)
            }
            CoprimeSide::M => {
                let inv = mod_inverse(m, width).expect("m is a unit modulo tN");
                let k = ((inv * n.rem_euclid(width)) % width - 1).rem_euclid(width);
                (x + k * dy % width).rem_euclid(width)
            }
        };
        Eisenstein::new(x_lift as i64, y_lift as i64)
    }

    /// `alpha ≡ theta (mod η)`, decided by the congruences on coefficient
    /// differences: `y' ≡ y (mod t)` together with
    /// `n(x' - x) ≡ m(y' - y)` or `m(x' - x) ≡ (n - m)(y - y')` modulo `tN(m+nρ)`,
    /// the one whose leading coefficient is invertible.
    pub fn class_equal(&self, alpha: Eisenstein, theta: Eisenstein) -> bool {
        let width = self.grid_width() as i128;
        let dx = theta.a as i128 - alpha.a as i128;
        let dy = theta.b as i128 - alpha.b as i128;
        if dy.rem_euclid(self.t as i128) != 0 {
            return false;
        }
        let (m, n) = (self.m as i128, self.n as i128);
        match self.coprime_side {
            CoprimeSide::N => (n * dx - m * dy).rem_euclid(width) == 0,
            CoprimeSide::M => (m * dx - (n - m) * -dy).rem_euclid(width) == 0,
        }
    }

    /// Ring operation followed by reduction.
    pub fn ring_op(&self, op: RingOp, alpha: Eisenstein, theta: Eisenstein) -> Eisenstein {
        let raw = match op {
            RingOp::Add => alpha + theta,
            RingOp::Sub => alpha - theta,
            RingOp::Mul => alpha * theta,
        };
        self.mu_reduce(raw)
    }

    pub fn residue_system(&self) -> ResidueSystem {
        let r_points: Vec<Eisenstein> = self.grid().collect();
        let e_points = r_points.iter().map(|&p| self.mu_reduce(p)).collect();
        ResidueSystem {
            modulus: *self,
            r_points,
            e_points,
        }
    }

    /// Just the reduced points, in grid order.
    pub fn e_points(&self) -> Vec<Eisenstein> {
        self.grid().map(|p| self.mu_reduce(p)).collect()
    }
}

impl ResidueSystem {
    pub fn len(&self) -> usize {
        self.r_points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r_points.is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = (Eisenstein, Eisenstein)> + '_ {
        self.r_points
            .iter()
            .copied()
            .zip(self.e_points.iter().copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eisenstein::ideal_member;

    fn e(a: i64, b: i64) -> Eisenstein {
        Eisenstein::new(a, b)
    }

    #[test]
    fn decomposition() {
        let m = Modulus::new(e(4, 6)).unwrap();
        assert_eq!((m.working_eta, m.t, m.m, m.n), (e(4, 6), 2, 2, 3));
        assert_eq!(m.coprime_side, CoprimeSide::N);

        let m = Modulus::new(e(12, 18)).unwrap();
        assert_eq!((m.working_eta, m.t, m.m, m.n), (e(18, 6), 6, 3, 1));

        let m = Modulus::new(e(7, 0)).unwrap();
        assert_eq!((m.t, m.m, m.n), (7, 1, 0));
        assert_eq!(m.coprime_side, CoprimeSide::M);

        assert_eq!(Modulus::new(e(0, 0)), Err(EisError::ZeroModulus));
        // t = 30 with m, n, m - n each sharing a prime with t
        let bad = e(8, 3).scale(30).unwrap();
        assert_eq!(Modulus::new(bad), Err(EisError::NoSuitableAssociate(bad)));
    }

    #[test]
    fn residue_system_spot_checks() {
        let rs = Modulus::new(e(6, 0)).unwrap().residue_system();
        assert_eq!(rs.len(), 36);
        assert_eq!(rs.e_points[4], e(-2, 0));

        let rs = Modulus::new(e(6, 12)).unwrap().residue_system();
        assert_eq!(rs.len(), 108);
        assert_eq!(rs.r_points[7], e(7, 0));
        assert_eq!(rs.e_points[7], e(1, 6));

        let rs = Modulus::new(e(-6, 5)).unwrap().residue_system();
        assert_eq!(rs.len(), 91);
        assert_eq!(rs.e_points[6], e(0, 5));
    }

    #[test]
    fn reduce_and_lift_examples() {
        let m = Modulus::new(e(-6, 5)).unwrap();
        assert_eq!(m.mu_reduce(e(10, 0)), e(4, 5));
        assert_eq!(m.pi_lift(e(4, 5)), e(10, 0));
        assert_eq!(m.mu_reduce(e(0, 0)), e(0, 0));
        assert_eq!(m.pi_lift(e(0, 0)), e(0, 0));

        let m = Modulus::new(e(4, 6)).unwrap();
        assert_eq!(m.mu_reduce(e(10, 1)), e(2, 3));
        assert_eq!(m.pi_lift(e(2, 3)), e(10, 1));
        // -2-3ρ and 2+3ρ differ by η itself, so they share a lift
        assert_eq!(m.pi_lift(e(-2, -3)), e(10, 1));
    }

    #[test]
    fn class_equality() {
        let m = Modulus::new(e(4, 6)).unwrap();
        assert!(m.class_equal(e(10, 1), e(2, 3)));
        assert!(m.class_equal(e(5, -7), e(5, -7)));
        assert!(!m.class_equal(e(1, 0), e(2, 0)));
        for (x, y) in [(e(3, 1), e(7, 4)), (e(4, 6), e(0, 0)), (e(-4, -1), e(9, 2))] {
            let d = y - x;
            assert_eq!(
                m.class_equal(x, y),
                ideal_member(d, m.t, m.primitive_part()).unwrap()
            );
        }
    }

    #[test]
    fn ring_operations() {
        let six = Modulus::new(e(6, 0)).unwrap();
        assert_eq!(six.ring_op(RingOp::Add, e(-1, 0), e(1, 0)), e(0, 0));

        let two = Modulus::new(e(2, 0)).unwrap();
        let x = two.mu_reduce(e(1, 1));
        assert_eq!(x, e(1, 1));
        let sq = two.ring_op(RingOp::Mul, x, x);
        assert_eq!(sq, two.mu_reduce(e(0, 1)));
        assert_eq!(sq, e(0, -1));

        let m91 = Modulus::new(e(-6, 5)).unwrap();
        assert_eq!(m91.ring_op(RingOp::Add, e(1, 0), e(5, 0)), e(0, 5));
    }

    #[test]
    fn isomorphism_kinds() {
        let kind = |a, b| Modulus::new(e(a, b)).unwrap().isomorphism_kind();
        assert_eq!(kind(6, 0), IsomorphismKind::FullGrid);
        assert_eq!(kind(-6, 5), IsomorphismKind::Rational);
        assert_eq!(kind(6, 12), IsomorphismKind::Mixed);
    }
}
