pub mod bench;
pub mod blocks;
pub mod cost;
pub mod golden;
pub mod gradcheck;
pub mod graph;
pub mod ops;
pub mod tensor;
pub mod zoo;

use std::fmt;

#[derive(Debug)]
pub enum Error {
    ShapeMismatch(String),
    InvalidSpec(String),
    UnknownModel { id: String, suggestions: Vec<String> },
    UnknownExperiment(String),
    NonFinite(String),
    Unsupported(String),
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch(m) => write!(f, "shape mismatch: {m}"),
            Error::InvalidSpec(m) => write!(f, "invalid spec: {m}"),
            Error::UnknownModel { id, suggestions } => {
                write!(f, "unknown model id '{id}'")?;
                if !suggestions.is_empty() {
                    write!(f, ", did you mean: {}", suggestions.join(", "))?;
                }
                Ok(())
            }
            Error::UnknownExperiment(m) => write!(f, "unknown experiment '{m}'"),
            Error::NonFinite(m) => write!(f, "non-finite value: {m}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
            Error::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
