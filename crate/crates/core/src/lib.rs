//! Exact arithmetic over the Eisenstein integers `Z[ρ]` and their quotient
//! rings, with the pieces needed to build hexagonal signal constellations:
//! nearest-point residue systems, hexagonal weights, additive-subgroup set
//! partitions, average energies next to the Gaussian counterpart, small
//! linear codes and extension fields.
//!
//! ```
//! use eisring::{Eisenstein, Modulus};
//!
//! let eta = Modulus::new(Eisenstein::new(-6, 5)).unwrap();
//! let r = eta.mu_reduce(Eisenstein::new(10, 0));
//! assert_eq!(r, Eisenstein::new(4, 5));
//! assert_eq!(eta.pi_lift(r), Eisenstein::new(10, 0));
//! ```

pub mod codes;
pub mod constellation;
pub mod eisenstein;
mod error;
pub mod export;
pub mod gaussian;
pub mod intmath;
pub mod metrics;
pub mod partition;
pub mod quotient;
pub mod verify;

pub use codes::{ExtField, LinearCode, Metric};
pub use constellation::{Constellation, EnergyReport, Kind, TableRow};
pub use eisenstein::{Eisenstein, Factorization, PrimeKind};
pub use error::{EisError, Result};
pub use gaussian::Gaussian;
pub use partition::PartitionNode;
pub use quotient::{CoprimeSide, IsomorphismKind, Modulus, ResidueSystem, RingOp};
