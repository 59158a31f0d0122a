//! Hexagonal and Euclidean distances.

use crate::eisenstein::Eisenstein;
use crate::quotient::Modulus;
use crate::{EisError, Result};

/// `min{|a|+|b|, |a-b|+|a|, |a-b|+|b|}`: the fewest unit steps along the six
/// hexagonal directions needed to reach `a + bρ`.
pub fn hex_weight(x: Eisenstein) -> u64 {
    let a = x.a as i128;
    let b = x.b as i128;
    let d = (a - b).unsigned_abs();
    let (ua, ub) = (a.unsigned_abs(), b.unsigned_abs());
    (ua + ub).min(d + ua).min(d + ub) as u64
}

pub fn hex_distance(x: Eisenstein, y: Eisenstein) -> u64 {
    hex_weight(x - y)
}

/// Sum of componentwise hexagonal distances.
pub fn hex_distance_vec(x: &[Eisenstein], y: &[Eisenstein]) -> Result<u64> {
    check_len(x, y)?;
    Ok(x.iter().zip(y).map(|(&p, &q)| hex_distance(p, q)).sum())
}

/// `‖x - y‖² = N(x - y)`.
pub fn sq_euclid_distance(x: Eisenstein, y: Eisenstein) -> u64 {
    (x - y).norm()
}

pub fn sq_euclid_distance_vec(x: &[Eisenstein], y: &[Eisenstein]) -> Result<u64> {
    check_len(x, y)?;
    Ok(x.iter()
        .zip(y)
        .map(|(&p, &q)| sq_euclid_distance(p, q))
        .sum())
}

fn check_len(x: &[Eisenstein], y: &[Eisenstein]) -> Result<()> {
    if x.len() != y.len() {
        return Err(EisError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(())
}

/// Smallest hexagonal weight among `δ + (u + vρ)η`, `u, v ∈ {-1, 0, 1}`, where
/// `δ` is the reduced representative of `x`.
pub fn min_class_hex_weight(x: Eisenstein, modulus: &Modulus) -> u64 {
    let rep = modulus.mu_reduce(x);
    let eta = modulus.working_eta;
    let mut best = u64::MAX;
    for u in -1..=1 {
        for v in -1..=1 {
            best = best.min(hex_weight(rep + Eisenstein::new(u, v) * eta));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> Eisenstein {
        Eisenstein::new(a, b)
    }

    /// Case split on the signs of `a`, `b` and `a - b`.
    fn hex_by_cases(x: Eisenstein) -> u64 {
        let (a, b) = (x.a, x.b);
        let w = if a >= 0 && b >= 0 {
            a.max(b)
        } else if a <= 0 && b <= 0 {
            -(a.min(b))
        } else {
            (a - b).abs()
        };
        w as u64
    }

    #[test]
    fn weights_from_the_converse_failures() {
        assert_eq!((hex_weight(e(4, 4)), hex_weight(e(3, 4))), (4, 4));
        assert_eq!((e(4, 4).norm(), e(3, 4).norm()), (16, 13));
        assert_eq!((hex_weight(e(8, 4)), hex_weight(e(7, 7))), (8, 7));
        assert_eq!((e(8, 4).norm(), e(7, 7).norm()), (48, 49));
        assert_eq!(hex_weight(e(0, 0)), 0);
    }

    #[test]
    fn closed_form_matches_case_split() {
        for a in -30..=30 {
            for b in -30..=30 {
                assert_eq!(hex_weight(e(a, b)), hex_by_cases(e(a, b)), "{a},{b}");
            }
        }
    }

    #[test]
    fn distances() {
        assert_eq!(hex_distance(e(4, 4), e(0, 0)), 4);
        assert_eq!(hex_distance(e(3, 2), e(3, 2)), 0);
        assert_eq!(
            hex_distance_vec(&[e(1, 0), e(0, 1)], &[e(0, 0), e(0, 0)]).unwrap(),
            2
        );
        assert_eq!(
            hex_distance_vec(&[e(1, 0)], &[]),
            Err(EisError::LengthMismatch { left: 1, right: 0 })
        );
        assert_eq!(sq_euclid_distance(e(3, 4), e(0, 0)), 13);
        assert_eq!(sq_euclid_distance(e(4, 4), e(3, 4)), 1);
        assert_eq!(
            sq_euclid_distance_vec(&[e(1, 0), e(2, 0)], &[e(0, 0), e(0, 0)]).unwrap(),
            5
        );
    }

    #[test]
    fn class_minimum_against_wide_window() {
        let m = Modulus::new(e(-6, 5)).unwrap();
        let rep = m.mu_reduce(e(4, 5));
        let wide = (-3..=3)
            .flat_map(|u| (-3..=3).map(move |v| (u, v)))
            .map(|(u, v)| hex_weight(rep + e(u, v) * m.working_eta))
            .min()
            .unwrap();
        assert_eq!(min_class_hex_weight(e(4, 5), &m), wide);
        assert_eq!(min_class_hex_weight(e(0, 0), &m), 0);
        assert_eq!(
            min_class_hex_weight(e(1, 0), &Modulus::new(e(2, 0)).unwrap()),
            1
        );
    }
}
