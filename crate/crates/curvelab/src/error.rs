//! Crate-wide error type.
//!
//! Every fallible operation in the library returns [`Error`].  Variants are
//! grouped loosely by the layer that raises them (field construction, polynomial
//! kernels, curve analysis, resolution, surfaces, verification), but the type is
//! deliberately flat: callers almost always either print the error or map it to
//! a process exit code.

use std::fmt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All error conditions raised by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    // --- field layer -------------------------------------------------------
    /// `p` is not prime.
    NotPrime(u64),
    /// `p^k` exceeds the configured enumeration bound.
    FieldTooLarge { p: u64, k: u32, bound: u64 },
    /// A supplied modulus is not monic/irreducible of the right degree.
    BadModulus(String),
    /// Division by zero (field or series inverse of a zero element).
    DivisionByZero,
    /// Two elements/polynomials from incompatible fields were combined.
    FieldMismatch,
    /// No embedding exists (degree does not divide) or could not be built.
    NoEmbedding { from_k: u32, to_k: u32 },

    // --- polynomial / series layer ----------------------------------------
    /// Text could not be parsed as a polynomial or element.
    Parse(String),
    /// Operation needs a variable the polynomial does not have.
    UnknownVariable(String),
    /// Resultant of two polynomials that are both constant in the variable.
    DegenerateResultant,
    /// Exact division failed (internal invariant violation or bad input).
    InexactDivision,
    /// Homogenization target degree is below the actual degree.
    DegreeTooSmall { need: u32, got: u32 },
    /// Series operation needs a unit (valuation-0) operand.
    NotAUnit,
    /// Series composition needs inner valuation >= 1.
    CompositionValuation,
    /// Tracked series precision is insufficient for the request.
    InsufficientPrecision { needed: usize, have: usize },
    /// Weierstrass preparation: germ is not z-regular of order 2 in any
    /// admissible coordinate change.
    NotZRegular,

    // --- curve layer -------------------------------------------------------
    /// The parametrization polynomial g is zero.
    ZeroG,
    /// Preset parameter out of range.
    PresetRange(String),
    /// Curve (or germ) is not reduced.
    NotReduced,
    /// Input polynomial is not homogeneous.
    NotHomogeneous,
    /// A point does not lie on the curve.
    PointNotOnCurve,
    /// Singular-point search could not certify completeness.
    CertificateFailure(String),

    // --- resolution layer --------------------------------------------------
    /// Germ does not vanish at the origin or is a unit.
    NotAGerm,
    /// A blow-up center needs coordinates outside the base field and the base
    /// field is the rationals (number fields are out of scope).
    NumberFieldNeeded,
    /// Resolution exceeded its node budget (genus cap or hard limit).
    ResolutionBudget(String),
    /// Operation requires an embedded-mode (snc) tree.
    NeedEmbeddedTree,
    /// Operation requires a normalization-mode tree.
    NeedNormalizationTree,
    /// Semigroup computation could not certify the conductor at this precision.
    ConductorUncertified { precision: usize },
    /// Classification preconditions (multiplicity 2, reduced) violated.
    NotADoublePoint { multiplicity: u32 },

    // --- invariants / surfaces layer ---------------------------------------
    /// Lifting-bound input degree must be even and >= 4.
    BadDegree(String),
    /// Double-plane parameter r out of range.
    BadR(String),
    /// Exceptional count formula needs r a power of two.
    NotAPowerOfTwo(u64),
    /// Lattice input is malformed (unknown vertex, duplicate edge, ...).
    Lattice(String),
    /// Gram matrix is not negative definite where it must be.
    NotNegativeDefinite(String),
    /// A contracted cluster is not an ADE configuration.
    NotAde(String),

    // --- verification / cli layer ------------------------------------------
    /// Claim manifest is malformed.
    Manifest(String),
    /// I/O error (message only, to keep the type cloneable).
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::FieldTooLarge { p, k, bound } => {
                write!(f, "field size {p}^{k} exceeds bound {bound}")
            }
            Error::BadModulus(m) => write!(f, "bad modulus: {m}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::FieldMismatch => write!(f, "elements from incompatible fields"),
            Error::NoEmbedding { from_k, to_k } => {
                write!(f, "no embedding of degree-{from_k} field into degree-{to_k} field")
            }
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::UnknownVariable(v) => write!(f, "unknown variable: {v}"),
            Error::DegenerateResultant => {
                write!(f, "resultant undefined: both inputs constant in the variable")
            }
            Error::InexactDivision => write!(f, "exact division left a remainder"),
            Error::DegreeTooSmall { need, got } => {
                write!(f, "homogenization degree {got} is below polynomial degree {need}")
            }
            Error::NotAUnit => write!(f, "series is not a unit (valuation > 0 or zero)"),
            Error::CompositionValuation => {
                write!(f, "series composition needs inner valuation >= 1")
            }
            Error::InsufficientPrecision { needed, have } => {
                write!(f, "series precision {have} insufficient (need {needed})")
            }
            Error::NotZRegular => {
                write!(f, "germ is not z-regular of order 2 in any admissible coordinates")
            }
            Error::ZeroG => write!(f, "parametrization polynomial g is zero"),
            Error::PresetRange(s) => write!(f, "preset parameter out of range: {s}"),
            Error::NotReduced => write!(f, "polynomial is not reduced (has a repeated factor)"),
            Error::NotHomogeneous => write!(f, "polynomial is not homogeneous"),
            Error::PointNotOnCurve => write!(f, "point does not lie on the curve"),
            Error::CertificateFailure(s) => write!(f, "completeness certificate failed: {s}"),
            Error::NotAGerm => write!(f, "polynomial is not a germ at the origin"),
            Error::NumberFieldNeeded => {
                write!(f, "blow-up center is irrational; number fields are unsupported")
            }
            Error::ResolutionBudget(s) => write!(f, "resolution budget exceeded: {s}"),
            Error::NeedEmbeddedTree => write!(f, "operation requires an embedded-mode tree"),
            Error::NeedNormalizationTree => {
                write!(f, "operation requires a normalization-mode tree")
            }
            Error::ConductorUncertified { precision } => {
                write!(f, "cannot certify semigroup conductor at precision {precision}")
            }
            Error::NotADoublePoint { multiplicity } => {
                write!(f, "germ has multiplicity {multiplicity}, not 2")
            }
            Error::BadDegree(s) => write!(f, "bad degree: {s}"),
            Error::BadR(s) => write!(f, "bad double-plane parameter: {s}"),
            Error::NotAPowerOfTwo(r) => write!(f, "r = {r} is not a power of two"),
            Error::Lattice(s) => write!(f, "lattice error: {s}"),
            Error::NotNegativeDefinite(s) => write!(f, "Gram matrix not negative definite: {s}"),
            Error::NotAde(s) => write!(f, "not an ADE configuration: {s}"),
            Error::Manifest(s) => write!(f, "manifest error: {s}"),
            Error::Io(s) => write!(f, "i/o error: {s}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
