//! Exact linear-programming bounds on independent sets of Hamming graphs and
//! their products, plus constructions and checkers for distance-expanding
//! maps between Hamming spaces.
//!
//! Everything bound-carrying is exact big-rational arithmetic; the only
//! floating point lives in [`asym`], which handles asymptotic rate curves.

pub mod asym;
pub mod delsarte;
pub mod exact;
pub mod graphs;
pub mod maps;
pub mod product_lp;
pub mod projective;
pub mod simplex;

/// Library-wide error type. Budget exhaustion is not an error; search entry
/// points report it through their result enums instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A precondition on arguments does not hold.
    #[error("domain: {0}")]
    Domain(String),
    /// A requested object cannot be built from the given pieces.
    #[error("construction: {0}")]
    Construction(String),
    /// Malformed textual input.
    #[error("parse: {0}")]
    Parse(String),
    /// An internal consistency re-check failed; indicates a bug.
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
