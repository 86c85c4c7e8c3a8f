use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(i64),
    /// An exact identity failed while assembling `term`; the closed form is
    /// wrong or was transcribed wrong.
    #[error("{term}: {source}")]
    Formula {
        term: &'static str,
        #[source]
        source: AlgebraError,
    },
    #[error("{term}: negative Betti number at degree {degree}")]
    NegativeBetti { term: &'static str, degree: usize },
    #[error("inconsistent table at degree {degree}: total {total} < prym {prym}")]
    InconsistentTable {
        degree: usize,
        total: BigInt,
        prym: BigInt,
    },
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidGenus(_) => "InvalidGenus",
            Error::Formula { source, .. } => source.kind(),
            Error::NegativeBetti { .. } => "NegativeBetti",
            Error::InconsistentTable { .. } => "InconsistentTable",
        }
    }

    pub(crate) fn formula(term: &'static str) -> impl FnOnce(AlgebraError) -> Error {
        move |source| Error::Formula { term, source }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
