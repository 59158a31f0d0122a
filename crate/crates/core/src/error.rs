use thiserror::Error;

use crate::eisenstein::Eisenstein;
use crate::gaussian::Gaussian;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EisError {
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("modulus must be nonzero")]
    ZeroModulus,
    #[error("gcd of two zero elements is undefined")]
    BothZero,
    #[error("input must be nonzero")]
    ZeroInput,
    #[error("input is zero or a unit")]
    UnitOrZero,
    #[error("ideal generator k*(a+b*rho) must be nonzero")]
    ZeroIdealGenerator,
    #[error("no associate of {0} has a coefficient coprime to the content")]
    NoSuitableAssociate(Eisenstein),
    #[error("vector lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("modulus {0} is not primitive (content t > 1)")]
    NotPrimitiveModulus(Eisenstein),
    #[error("{c} * {d} does not equal the ring size {size}")]
    NotAFactorization { c: u64, d: u64, size: u64 },
    #[error("factor product {product} does not divide the content t = {t}")]
    BadFactorOfT { product: u64, t: u64 },
    #[error("factor product {product} does not divide the ring size {size}")]
    BadFactorOfNorm { product: u64, size: u64 },
    #[error("partition factors must be positive")]
    ZeroFactor,
    #[error("Gaussian {gaussian} has norm {gaussian_norm}, Eisenstein {eisenstein} has norm {eisenstein_norm}")]
    CardinalityMismatch {
        gaussian: Gaussian,
        gaussian_norm: u64,
        eisenstein: Eisenstein,
        eisenstein_norm: u64,
    },
    #[error("span exceeds the configured bound of {bound} codewords")]
    SpanTooLarge { bound: usize },
    #[error("minimum distance needs at least two codewords")]
    TooFewWords,
    #[error("polynomial is reducible over the base field")]
    ReduciblePolynomial,
    #[error("{0} is not an Eisenstein prime")]
    NotPrimeModulus(Eisenstein),
    #[error("modulus polynomial must be monic of degree at least 1")]
    BadPolynomial,
}

pub type Result<T> = std::result::Result<T, EisError>;
