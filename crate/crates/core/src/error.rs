use thiserror::Error;

use crate::context::TorsionContext;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("torsion contexts differ: {left} vs {right}")]
    ContextMismatch {
        left: TorsionContext,
        right: TorsionContext,
    },
    #[error("F index must be >= 1")]
    ZeroIndex,
    #[error("bundle is empty")]
    EmptyBundle,
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("the odd chain only contains odd indices, got {0}")]
    EvenIndexInOddChain(u32),
    #[error("degree list is empty")]
    EmptyDegrees,
}

pub type Result<T> = std::result::Result<T, Error>;
