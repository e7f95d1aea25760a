use alloc::string::String;
use alloc::vec::Vec;

use crate::int::Int;
use crate::manifold::Violation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(&'static str),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not an element: {0}")]
    NotAnElement(String),
    #[error("homomorphism not well defined on torsion generator {generator}")]
    NotWellDefined { generator: usize },
    #[error("groups do not match")]
    GroupMismatch,
    #[error("element has order greater than 2")]
    NotTwoTorsion,
    #[error("functional has {found} bits but the base group has {expected} even invariant factors")]
    FunctionalLength { expected: usize, found: usize },
    #[error("class has self-intersection {0}, not 0")]
    NotIsotropic(Int),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid manifold data: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("unknown catalog name: {0}")]
    UnknownCatalogName(String),
    #[error("extension oracle: {0}")]
    Oracle(String),
}

fn join(v: &[Violation]) -> String {
    let parts: Vec<String> = v.iter().map(|x| alloc::format!("{x}")).collect();
    parts.join("; ")
}
