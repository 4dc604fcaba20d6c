//! Finite-scale computational category theory: explicit finite categories,
//! set-valued diagrams with limits and right Kan extensions, codensity monads
//! built pointwise over truncated comma categories, finite algebra catalogs
//! (Boolean algebras, semilattices, semimodules, vector spaces), concrete
//! dualities, monads induced by dual adjunctions, and a comparison harness
//! that checks — instance by instance — that the monad induced by a dual
//! adjunction coincides with the codensity monad of its presenting functor.
//!
//! Everything is exhaustive and exact: carriers are small finite sets,
//! probability is exact rational, and every verdict comes with witnesses.

pub mod dualize;
pub mod finalg;
pub mod fincat;
pub mod fintop;
pub mod monadlab;
pub mod probfin;
pub mod schema;
pub mod setdiag;
pub mod util;

use thiserror::Error;

/// Crate-wide error type for structural misuse of the API.
///
/// Axiom violations are not errors: validation operations return reports.
/// Errors are reserved for requests the engine cannot meaningfully perform.
#[derive(Debug, Error)]
pub enum Error {
    #[error("object {object} is not in category `{category}`")]
    NoSuchObject { category: String, object: String },
    #[error("algebra kind mismatch: expected {expected}, got {got}")]
    KindMismatch { expected: String, got: String },
    #[error("{what} size {requested} exceeds the configured cap {cap}")]
    CapExceeded {
        what: String,
        requested: usize,
        cap: usize,
    },
    #[error("universe is not closed enough to express the multiplication: missing carrier {carrier}")]
    UniverseClosure { carrier: String },
    #[error("monads are defined over different universes: {left} vs {right}")]
    UniverseMismatch { left: String, right: String },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("unsupported field order {0} (must be a prime power within the cap)")]
    BadFieldOrder(u64),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
