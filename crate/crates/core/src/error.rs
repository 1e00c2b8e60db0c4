use thiserror::Error;

/// Errors raised by lookups and by operations whose preconditions fail.
///
/// Mathematical absence (an object with no representation, a functor that is
/// not a brain functor) is reported through values, never through this type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("unknown het element `{0}`")]
    UnknownElement(String),
    #[error("cannot compose {g} . {f}: cod({f}) = {cod_f} but dom({g}) = {dom_g}")]
    NotComposable {
        g: String,
        f: String,
        cod_f: String,
        dom_g: String,
    },
    #[error("boundary mismatch: {0}")]
    Boundary(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("integrity error: {0}")]
    Integrity(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
