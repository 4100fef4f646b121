use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("weight mismatch: |{left}| != |{right}|")]
    WeightMismatch { left: String, right: String },

    #[error("polynomial is not homogeneous")]
    NonHomogeneous,

    #[error("mixed bases: c/cp variables cannot be combined with Schur atoms")]
    MixedBasis,

    #[error("expected a polynomial in {expected} variables, found {found}")]
    WrongVariables { expected: String, found: String },

    #[error("polynomial is not symmetric: swapping {a} and {b} changes it")]
    NotSymmetric { a: String, b: String },

    #[error("corpus error at line {line}: {message}")]
    Corpus { line: usize, message: String },

    #[error("record {name}: {message}")]
    Record { name: String, message: String },
}

impl Error {
    pub fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub fn corpus(line: usize, message: impl Into<String>) -> Self {
        Error::Corpus {
            line,
            message: message.into(),
        }
    }
}
