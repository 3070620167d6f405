//! curvelab: exact-arithmetic toolkit for plane curves over small finite
//! fields and the rationals.
//!
//! The crate builds parametrized plane curves, implicitizes them by exact
//! resultants, locates and certifies their singular points, resolves
//! singularities by iterated blow-ups, computes delta invariants and log
//! canonical thresholds, and derives lattice-theoretic invariants of the
//! associated double-cover surfaces.  Every computation is exact: finite
//! fields are table-backed and characteristic zero runs on arbitrary-precision
//! rationals.  No floating point is used anywhere.
//!
//! Module map:
//! - [`field`] — coefficient fields (`F_{p^k}` and `Q`).
//! - [`poly`] — multivariate/univariate polynomials, resultants, factoring,
//!   power series, and normal forms for double-point germs.
//! - [`curve`] — parametrized curves, implicitization, singular-point
//!   certification, and per-point germ extraction.
//! - [`resolve`] — blow-up trees, delta invariants, dual graphs, and the
//!   `A_m` classifier.
//! - [`invariants`] — log canonical thresholds, discrepancy ledgers for the
//!   associated double covers and 3-folds, and characteristic-zero bounds.
//! - [`surfaces`] — double planes, singularity censuses, and intersection
//!   lattices with Mumford pullbacks.
//! - [`oracle`] — slow, independent reference implementations used by tests.
//! - [`verify`] — batch claim runner producing deterministic reports.

pub mod curve;
pub mod error;
pub mod field;
pub mod invariants;
pub mod oracle;
pub mod poly;
pub mod resolve;
pub mod surfaces;
pub mod verify;

pub use error::{Error, Result};
