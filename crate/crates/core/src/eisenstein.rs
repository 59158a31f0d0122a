//! Exact arithmetic in the ring of Eisenstein integers `Z[ρ]`, `ρ = (-1 + √3 i)/2`.
//!
//! Elements are stored as a coefficient pair `(a, b)` meaning `a + bρ`. All
//! arithmetic is exact: the operator impls panic on `i64` overflow and the
//! `checked_*` methods report it as [`EisError::Overflow`]. Division uses the
//! nearest-lattice-point rule over the two rectangular sublattices of the
//! hexagonal lattice, carried out with integer numerators so that every tie is
//! decided the same way on every platform.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::intmath::{self, round_half_down, to_i64};
use crate::{EisError, Result};

/// The Eisenstein integer `a + bρ`.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Eisenstein {
    pub a: i64,
    pub b: i64,
}

impl From<[i64; 2]> for Eisenstein {
    fn from([a, b]: [i64; 2]) -> Self {
        Eisenstein { a, b }
    }
}

impl From<Eisenstein> for [i64; 2] {
    fn from(x: Eisenstein) -> Self {
        [x.a, x.b]
    }
}

impl From<i64> for Eisenstein {
    fn from(a: i64) -> Self {
        Eisenstein { a, b: 0 }
    }
}

/// Classification of a nonzero nonunit into the three kinds of Eisenstein primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PrimeKind {
    /// Associate of `1 - ρ` (norm 3).
    Type1,
    /// Norm is a rational prime `q ≡ 1 (mod 3)`.
    Type2 {
        q: u64,
    },
    /// Associate of a rational prime `p ≡ 2 (mod 3)`.
    Type3 {
        p: u64,
    },
    NotPrime,
}

/// `unit × Π primeᵢ^expᵢ`, primes given by their canonical associates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Eisenstein,
    pub factors: Vec<(Eisenstein, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> Result<Eisenstein> {
        let mut acc = self.unit;
        for &(p, e) in &self.factors {
            for _ in 0..e {
                acc = acc.checked_mul(p)?;
            }
        }
        Ok(acc)
    }
}

pub const ZERO: Eisenstein = Eisenstein { a: 0, b: 0 };
pub const ONE: Eisenstein = Eisenstein { a: 1, b: 0 };
pub const RHO: Eisenstein = Eisenstein { a: 0, b: 1 };
/// `ρ² = -1 - ρ`.
pub const RHO2: Eisenstein = Eisenstein { a: -1, b: -1 };
/// The ramified prime `β = 1 - ρ` of norm 3.
pub const BETA: Eisenstein = Eisenstein { a: 1, b: -1 };

/// The six units in the fixed order `1, -1, ρ, -ρ, ρ², -ρ²`.
pub const UNITS: [Eisenstein; 6] = [
    ONE,
    Eisenstein { a: -1, b: 0 },
    RHO,
    Eisenstein { a: 0, b: -1 },
    RHO2,
    Eisenstein { a: 1, b: 1 },
];

type Pair = (i128, i128);

fn mul_wide(x: Pair, y: Pair) -> Option<Pair> {
    let (a, b) = x;
    let (c, d) = y;
    let ac = a.checked_mul(c)?;
    let bd = b.checked_mul(d)?;
    let ad = a.checked_mul(d)?;
    let bc = b.checked_mul(c)?;
    Some((ac.checked_sub(bd)?, ad.checked_add(bc)?.checked_sub(bd)?))
}

fn norm_wide((a, b): Pair) -> Option<i128> {
    a.checked_mul(a)?
        .checked_add(b.checked_mul(b)?)?
        .checked_sub(a.checked_mul(b)?)
}

impl Eisenstein {
    pub const fn new(a: i64, b: i64) -> Self {
        Eisenstein { a, b }
    }

    fn wide(self) -> Pair {
        (self.a as i128, self.b as i128)
    }

    fn from_wide((a, b): Pair) -> Result<Self> {
        Ok(Eisenstein::new(to_i64(a)?, to_i64(b)?))
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Ok(Eisenstein::new(
            self.a.checked_add(rhs.a).ok_or(EisError::Overflow)?,
            self.b.checked_add(rhs.b).ok_or(EisError::Overflow)?,
        ))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Ok(Eisenstein::new(
            self.a.checked_sub(rhs.a).ok_or(EisError::Overflow)?,
            self.b.checked_sub(rhs.b).ok_or(EisError::Overflow)?,
        ))
    }

    /// `(a+bρ)(c+dρ) = (ac - bd) + (ad + bc - bd)ρ`.
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let p = mul_wide(self.wide(), rhs.wide()).ok_or(EisError::Overflow)?;
        Self::from_wide(p)
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(Eisenstein::new(
            self.a.checked_neg().ok_or(EisError::Overflow)?,
            self.b.checked_neg().ok_or(EisError::Overflow)?,
        ))
    }

    pub fn scale(self, k: i64) -> Result<Self> {
        Ok(Eisenstein::new(
            self.a.checked_mul(k).ok_or(EisError::Overflow)?,
            self.b.checked_mul(k).ok_or(EisError::Overflow)?,
        ))
    }

    /// `conj(a + bρ) = (a - b) - bρ`.
    pub fn conjugate(self) -> Self {
        Eisenstein::new(self.a - self.b, -self.b)
    }

    /// `N(a + bρ) = a² + b² - ab`, or `None` if it does not fit in `u64`.
    pub fn checked_norm(self) -> Option<u64> {
        norm_wide(self.wide()).and_then(|n| u64::try_from(n).ok())
    }

    /// Panics only when the norm exceeds `u64`, i.e. coefficients beyond ±2³².
    pub fn norm(self) -> u64 {
        self.checked_norm().expect("Eisenstein norm overflows u64")
    }

    /// Gcd of the two coefficients over `Z` (the content `t` of `t(m + nρ)`).
    pub fn content(self) -> i64 {
        intmath::gcd(self.a, self.b)
    }

    /// `±x, ±ρx, ±ρ²x`, in the order of [`UNITS`].
    pub fn associates(self) -> [Eisenstein; 6] {
        UNITS.map(|u| u * self)
    }

    /// The unique associate with `a > 0` and `0 <= b < a`; `0` maps to `0`.
    pub fn canonical_associate(self) -> Self {
        if self.is_zero() {
            return self;
        }
        self.associates()
            .into_iter()
            .find(|x| x.a > 0 && 0 <= x.b && x.b < x.a)
            .expect("every nonzero element has exactly one associate in the sector")
    }

    pub fn is_associate_of(self, other: Self) -> bool {
        self.canonical_associate() == other.canonical_associate()
    }

    /// Real and imaginary parts as floats, for plotting only.
    pub fn to_complex(self) -> (f64, f64) {
        let (a, b) = (self.a as f64, self.b as f64);
        (a - b / 2.0, b * 3f64.sqrt() / 2.0)
    }

    /// Division with remainder: `self = q·eta + r` where `r` is the
    /// norm-smallest member of its class modulo `eta`.
    ///
    /// The candidate quotients are the nearest points of the two rectangular
    /// sublattices `Z + Z√3i` and `ρ + Z + Z√3i` to `z = self/eta`. With
    /// `self·conj(eta) = u + vρ` and `N = N(eta)`, `Re z = (2u - v)/2N` and
    /// `Im z/√3 = v/2N`, so both roundings are integer divisions. Ties in norm
    /// go to the candidate with the smaller real part; the first candidate has an
    /// integral real part and the second a half-odd one, so this always decides.
    pub fn divmod(self, eta: Self) -> Result<(Self, Self)> {
        if eta.is_zero() {
            return Err(EisError::ZeroModulus);
        }
        let ovf = || EisError::Overflow;
        let n = norm_wide(eta.wide()).ok_or_else(ovf)?;
        let (u, v) = mul_wide(self.wide(), eta.conjugate().wide()).ok_or_else(ovf)?;
        let two_n = 2 * n;
        let re_num = (2 * u).checked_sub(v).ok_or_else(ovf)?;

        let r1 = round_half_down(re_num, two_n);
        let s1 = round_half_down(v, two_n);
        let theta1 = (r1 + s1, 2 * s1);

        let r2 = round_half_down(re_num.checked_add(n).ok_or_else(ovf)?, two_n);
        let s2 = round_half_down(v - n, two_n);
        let theta2 = (r2 + s2, 2 * s2 + 1);

        let remainder = |theta: Pair| -> Option<Pair> {
            let (pa, pb) = mul_wide(eta.wide(), theta)?;
            Some((self.a as i128 - pa, self.b as i128 - pb))
        };
        let delta1 = remainder(theta1).ok_or_else(ovf)?;
        let delta2 = remainder(theta2).ok_or_else(ovf)?;
        let n1 = norm_wide(delta1).ok_or_else(ovf)?;
        let n2 = norm_wide(delta2).ok_or_else(ovf)?;

        // Re(θ1) = r1, Re(θ2) = r2 - 1/2; compare doubled.
        let first = n1 < n2 || (n1 == n2 && 2 * r1 < 2 * r2 - 1);
        let (q, r) = if first {
            (theta1, delta1)
        } else {
            (theta2, delta2)
        };
        Ok((Self::from_wide(q)?, Self::from_wide(r)?))
    }

    /// `self / d` when `d` divides `self` exactly.
    pub fn div_exact(self, d: Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let n = norm_wide(d.wide())?;
        let (u, v) = mul_wide(self.wide(), d.conjugate().wide())?;
        if u % n != 0 || v % n != 0 {
            return None;
        }
        Self::from_wide((u / n, v / n)).ok()
    }

    pub fn divides(self, x: Self) -> bool {
        if self.is_zero() {
            return x.is_zero();
        }
        x.div_exact(self).is_some()
    }

    /// Canonical associate of a greatest common divisor.
    pub fn gcd(self, other: Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(EisError::BothZero);
        }
        let (mut x, mut y) = (self, other);
        while !y.is_zero() {
            let (_, r) = x.divmod(y)?;
            x = y;
            y = r;
        }
        Ok(x.canonical_associate())
    }

    /// `gcd(a, b) == 1` over the integers.
    pub fn is_primitive(self) -> Result<bool> {
        if self.is_zero() {
            return Err(EisError::ZeroInput);
        }
        Ok(self.content() == 1)
    }

    pub fn classify_prime(self) -> Result<PrimeKind> {
        let n = self.checked_norm().ok_or(EisError::Overflow)?;
        if n <= 1 {
            return Err(EisError::UnitOrZero);
        }
        if n == 3 {
            return Ok(PrimeKind::Type1);
        }
        if n % 3 == 1 && intmath::is_prime(n) {
            return Ok(PrimeKind::Type2 { q: n });
        }
        let p = intmath::isqrt_u64(n);
        if p * p == n
            && p % 3 == 2
            && intmath::is_prime(p)
            && self.canonical_associate() == Eisenstein::new(p as i64, 0)
        {
            return Ok(PrimeKind::Type3 { p });
        }
        Ok(PrimeKind::NotPrime)
    }

    pub fn is_prime(self) -> bool {
        matches!(
            self.classify_prime(),
            Ok(PrimeKind::Type1 | PrimeKind::Type2 { .. } | PrimeKind::Type3 { .. })
        )
    }

    /// Unique factorization into canonical prime associates.
    ///
    /// Factors the norm over `Z`, then peels off `1 - ρ` for the prime 3, the
    /// inert prime itself for `p ≡ 2 (mod 3)`, and for `q ≡ 1 (mod 3)` both
    /// conjugate primes above `q`, found by a bounded search for
    /// `a² - ab + b² = q`.
    pub fn factorize(self) -> Result<Factorization> {
        if self.is_zero() {
            return Err(EisError::ZeroInput);
        }
        let norm = self.checked_norm().ok_or(EisError::Overflow)?;
        let mut rest = self;
        let mut factors = Vec::new();
        let mut peel = |prime: Eisenstein, rest: &mut Eisenstein| {
            let prime = prime.canonical_associate();
            let mut e = 0u32;
            while let Some(q) = rest.div_exact(prime) {
                *rest = q;
                e += 1;
            }
            if e > 0 {
                factors.push((prime, e));
            }
        };
        for (p, _) in intmath::factor_u64(norm) {
            match p % 3 {
                0 => peel(BETA, &mut rest),
                2 => peel(Eisenstein::new(p as i64, 0), &mut rest),
                _ => {
                    let psi = split_prime(p).expect("q ≡ 1 mod 3 is a norm");
                    peel(psi, &mut rest);
                    peel(psi.conjugate(), &mut rest);
                }
            }
        }
        debug_assert!(rest.is_unit());
        factors.sort_by_key(|&(p, _)| (p.norm(), p));
        Ok(Factorization {
            unit: rest,
            factors,
        })
    }

    /// Whether the prime factorization has the shape `β^r Π ψᵢ^rᵢ` with
    /// `r ∈ {0, 1}`, every `ψᵢ` split (norm `qᵢ ≡ 1 mod 3`) and the `qᵢ`
    /// pairwise distinct. This is exactly the primitive elements.
    pub fn has_primitive_structure(self) -> Result<bool> {
        let f = self.factorize()?;
        let mut seen = Vec::new();
        for &(p, e) in &f.factors {
            match p.classify_prime()? {
                PrimeKind::Type1 if e <= 1 => {}
                PrimeKind::Type2 { q } if !seen.contains(&q) => seen.push(q),
                _ => return Ok(false),
            }
        }
        Ok(true)
    }
}

/// Some `a + bρ` of norm `q`, searching `a` up to `⌈√(4q/3)⌉`.
fn split_prime(q: u64) -> Option<Eisenstein> {
    let q = q as i128;
    let bound = intmath::isqrt_u128((4 * q / 3 + 1) as u128) as i128 + 1;
    (1..=bound).find_map(|a| {
        let disc = 4 * q - 3 * a * a;
        if disc < 0 {
            return None;
        }
        let s = intmath::isqrt_u128(disc as u128) as i128;
        (s * s == disc && (a + s) % 2 == 0).then(|| Eisenstein::new(a as i64, ((a + s) / 2) as i64))
    })
}

/// Membership of `x = c + dρ` in the ideal `⟨k(a + bρ)⟩`: both
/// `(a-b)c + bd` and `ad - bc` must be divisible by `k·N(a + bρ)`.
pub fn ideal_member(x: Eisenstein, k: i64, g: Eisenstein) -> Result<bool> {
    if k == 0 || g.is_zero() {
        return Err(EisError::ZeroIdealGenerator);
    }
    let (a, b) = (g.a as i128, g.b as i128);
    let (c, d) = (x.a as i128, x.b as i128);
    let modulus = (k as i128).abs() * norm_wide((a, b)).ok_or(EisError::Overflow)?;
    let first = (a - b) * c + b * d;
    let second = a * d - b * c;
    Ok(first % modulus == 0 && second % modulus == 0)
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("Eisenstein addition overflow")
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs)
            .expect("Eisenstein subtraction overflow")
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs)
            .expect("Eisenstein multiplication overflow")
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Self {
        self.checked_neg().expect("Eisenstein negation overflow")
    }
}

/// Writes `a+bρ` in the usual compact form: `0`, `3`, `-ρ`, `4+5ρ`, `1-2ρ`.
impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Eisenstein { a, b } = *self;
        let rho = |f: &mut fmt::Formatter<'_>, b: i64, leading: bool| match (b, leading) {
            (1, true) => write!(f, "ρ"),
            (-1, _) => write!(f, "-ρ"),
            (1, false) => write!(f, "+ρ"),
            (b, false) if b > 0 => write!(f, "+{b}ρ"),
            (b, _) => write!(f, "{b}ρ"),
        };
        match (a, b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => rho(f, b, true),
            (a, b) => {
                write!(f, "{a}")?;
                rho(f, b, false)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected an integer pair \"a,b\", got {0:?}")]
pub struct ParsePairError(pub String);

pub(crate) fn parse_pair(s: &str) -> std::result::Result<(i64, i64), ParsePairError> {
    let err = || ParsePairError(s.to_string());
    let (a, b) = s.split_once(',').ok_or_else(err)?;
    let a = a.trim().parse().map_err(|_| err())?;
    let b = b.trim().parse().map_err(|_| err())?;
    Ok((a, b))
}

/// Parses the command-line form `"a,b"`.
impl FromStr for Eisenstein {
    type Err = ParsePairError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        parse_pair(s).map(|(a, b)| Eisenstein::new(a, b))
    }
}
