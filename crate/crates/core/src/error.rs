use std::fmt;

use thiserror::Error;

use crate::number::Component;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification of failures, stable across message wording.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorCategory {
    Parse,
    Validation,
    Domain,
    Io,
}

impl fmt::Display for ErrorCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorCategory::Parse => "parse",
            ErrorCategory::Validation => "validation",
            ErrorCategory::Domain => "domain",
            ErrorCategory::Io => "io",
        })
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{component} = {value} is outside {}", component.range_label())]
    OutOfRange { component: Component, value: f64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{location}: {message}")]
    Validation { location: String, message: String },

    #[error("{0}")]
    Domain(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::OutOfRange { .. } | Error::Validation { .. } => ErrorCategory::Validation,
            Error::Parse { .. } => ErrorCategory::Parse,
            Error::Domain(_) => ErrorCategory::Domain,
            Error::Io(_) => ErrorCategory::Io,
        }
    }

    pub(crate) fn validation(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            location: location.into(),
            message: message.into(),
        }
    }

    /// Re-tags an error with the place it occurred, keeping its category.
    pub(crate) fn at(self, location: impl Into<String>) -> Self {
        match self {
            Error::OutOfRange { .. } => Error::Validation {
                location: location.into(),
                message: self.to_string(),
            },
            Error::Validation {
                location: inner,
                message,
            } => Error::Validation {
                location: format!("{}, {}", location.into(), inner),
                message,
            },
            other => other,
        }
    }
}
