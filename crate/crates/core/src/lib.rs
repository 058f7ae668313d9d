//! Exact verification of the refined partition identity
//! `A(mu, nu, N) = B(mu, nu, N)` and of the q-series identities behind it.
//!
//! * [`poly`]: sparse integer polynomials in `a`, `b`, `q`.
//! * [`partitions`]: brute-force enumerators used as ground truth.
//! * [`recurrence`]: `S_n(j)` from its recurrences and the residuals of
//!   every supporting identity.
//! * [`verify`]: suites comparing the two sides and producing [`verify::Report`]s.
//! * [`catalogue`]: the list of checked identities and known discrepancies.

pub mod catalogue;
pub mod error;
pub mod partitions;
pub mod poly;
pub mod recurrence;
pub mod verify;

pub use error::{ConfigError, PartitionError, PolyError};
pub use poly::TriPoly;
