//! Exact computations for Calabi-Yau 4-folds obtained as crepant resolutions
//! of quotients of hyperkahler 4-folds by non-symplectic involutions.
//!
//! The crate is organised by topic:
//!
//! * [`hodge`]: Hodge diamonds of 4-folds and surfaces, fixed-locus sums.
//! * [`singularity`]: eigenvalue spectra, ages and the Reid-Tai test.
//! * [`k3`]: Nikulin invariants of non-symplectic K3 involutions and the
//!   fixed surfaces they induce on `S^[2]` and `S x S`.
//! * [`quotient`]: Hodge diamonds of the quotient Calabi-Yau 4-folds and the
//!   Picard basis of `Y_S`.
//! * [`riemann_roch`]: Euler characteristics and `h^0` of induced divisors.
//! * [`mirror`]: deformation dimensions and Hodge-level mirror checks.
//!
//! Every number is an exact integer or rational; nothing is floating point.

pub mod appendix;
pub mod error;
pub mod hodge;
pub mod k3;
pub mod mirror;
pub mod quotient;
pub mod riemann_roch;
pub mod singularity;

pub use error::{Error, Result};
pub use hodge::{CalabiYau4Diamond, FixedLocusHodge, HodgeDiamond4, InvariantCohomology, SurfaceHodge};
pub use k3::{NikulinInvariants, Shape};

/// Exact rational number used for ages and Euler characteristics.
pub type Rational = num_rational::Ratio<i64>;
