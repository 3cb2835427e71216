//! Exact computation of Cheeger-Chern-Simons numbers, reduced xi-invariants,
//! fundamental cycles and spectra for the quotient singularities `C^2/G`
//! with `G` a finite subgroup of `SU(2)`.
//!
//! Everything is computed over `Q(zeta_n)` with arbitrary-precision
//! rationals; no floating point is involved anywhere.

pub mod error;
pub mod exactnum;
pub mod invariants;
pub mod matgroup;
pub mod reps;
pub mod resolution;
pub mod spectrum;

pub use error::{Error, Result};
pub use exactnum::{log_root_of_unity, Cyclotomic, QmodZ, Rational};
pub use matgroup::{build_group, FiniteMatrixGroup, GroupId, H1Generator};
pub use reps::{catalog, Character, Rep, RepSpec};
