//! Dihedral Gauss hypergeometric functions.
//!
//! A ₂F₁ whose hypergeometric equation has half-integer local exponent
//! differences at two of its three singular points has dihedral monodromy
//! and evaluates in elementary terms. This crate implements:
//!
//! - the elementary closed forms built from terminating Appell F₂/F₃
//!   double sums, at all three singular points ([`dihedral`]);
//! - the series evaluators themselves: Gauss ₂F₁, ₃F₂, rectangular and
//!   triangular Appell sums, the derivative F₂† sums, and two
//!   Kampé-de-Fériet shapes ([`series`]);
//! - exact construction of the degree-n transformation polynomials
//!   θ₁/θ₂ and of Klein pull-back coverings Θ₁/Θ₂/Ψ for finite dihedral
//!   monodromy ([`transforms`]);
//! - the degeneracy classifier and the logarithmic-case evaluators for
//!   integer exponent differences ([`dihedral`]);
//! - a catalog of all the verifiable identities with a residual engine
//!   and CSV/JSON reporting ([`catalog`]).
//!
//! All terminating sums over rational inputs run in exact arbitrary
//! precision rational arithmetic; floating evaluation is complex `f64`.

pub mod catalog;
pub mod dihedral;
pub mod poly;
pub mod scalar;
pub mod series;
pub mod transforms;

pub use scalar::{Cx, Rat};
pub use series::{HyperValue, SeriesMode};

use thiserror::Error as ThisError;

/// Crate-wide error type.
#[derive(Debug, Clone, ThisError)]
pub enum Error {
    /// An argument left the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input sits on a branch cut where the two-sheet bookkeeping breaks.
    #[error("branch cut: {0}")]
    BranchCut(String),

    /// A series was requested outside its disk of convergence.
    #[error("non-convergent: {0}")]
    NonConvergent(String),

    /// A lower (denominator) parameter hits a non-positive integer before
    /// the sum terminates.
    #[error("pole in lower parameter: {0}")]
    PoleAtC(String),

    /// Truncated summation hit its term budget before reaching tolerance.
    #[error("term budget exceeded: {0}")]
    BudgetExceeded(String),

    /// A denominator Pochhammer factor vanished where no limit convention
    /// applies.
    #[error("singular term: {0}")]
    SingularTerm(String),

    /// A front Pochhammer factor of a closed form vanished; the caller
    /// must route to the degenerate/logarithmic evaluators.
    #[error("degenerate front factor: {0}")]
    DegenerateFrontFactor(String),

    /// Parameters do not satisfy the logarithmic-case condition.
    #[error("not a logarithmic case: {0}")]
    NotLogCase(String),

    /// The requested odd-m regime does not match the parameters.
    #[error("regime mismatch: {0}")]
    RegimeMismatch(String),

    /// gcd(n, m) = 1 is required for a pull-back covering.
    #[error("gcd violation: gcd({n}, {m}) != 1")]
    GcdViolation { n: u32, m: u32 },

    /// A structurally required coefficient of a covering failed to vanish.
    #[error("structure violation: {0}")]
    StructureViolation(String),

    /// Polynomial m-th root extraction failed.
    #[error("not a perfect power: {0}")]
    NotAPerfectPower(String),

    /// Exact polynomial division left a remainder.
    #[error("non-divisible: {0}")]
    NonDivisible(String),

    /// Unknown identity id in the catalog.
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}
