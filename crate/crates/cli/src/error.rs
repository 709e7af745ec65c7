use std::io::Write;

use serde_json::json;

use efd::canon::CanonError;
use efd::geometry::GeometryError;
use efd::lattice::LatticeError;
use efd::models::ModelError;
use efd::term::TermError;
use efd::translate::TranslateError;

use crate::Format;

pub const INPUT: u8 = 2;
pub const UNSUPPORTED: u8 = 3;
pub const PROPERTY: u8 = 4;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> CliError {
        CliError { code: INPUT, message: message.into() }
    }

    pub fn unsupported(message: impl Into<String>) -> CliError {
        CliError { code: UNSUPPORTED, message: message.into() }
    }

    fn kind(&self) -> &'static str {
        match self.code {
            INPUT => "input",
            UNSUPPORTED => "unsupported",
            _ => "failure",
        }
    }

    pub fn emit(&self, format: Format) {
        match format {
            Format::Json => {
                let v = json!({
                    "schema": "efd.error/1",
                    "error": { "kind": self.kind(), "message": self.message },
                });
                let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&v).expect("serializable"));
            }
            Format::Text => {
                let _ = writeln!(std::io::stderr(), "error: {}", self.message);
            }
        }
    }
}

impl From<TermError> for CliError {
    fn from(e: TermError) -> Self {
        match e {
            TermError::ExpansionTooLarge(_) => CliError::unsupported(e.to_string()),
            _ => CliError::input(e.to_string()),
        }
    }
}

impl From<GeometryError> for CliError {
    fn from(e: GeometryError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<CanonError> for CliError {
    fn from(e: CanonError) -> Self {
        match e {
            CanonError::Term(t) => t.into(),
            CanonError::NotGroupTerm(_) => CliError::input(e.to_string()),
            CanonError::UnexpectedVariable(_) | CanonError::CapExceeded { .. } | CanonError::Unsupported(_) => {
                CliError::unsupported(e.to_string())
            }
        }
    }
}

impl From<ModelError> for CliError {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::Term(t) => t.into(),
            ModelError::Unsupported(_) => CliError::unsupported(e.to_string()),
            _ => CliError::input(e.to_string()),
        }
    }
}

impl From<TranslateError> for CliError {
    fn from(e: TranslateError) -> Self {
        match e {
            TranslateError::Term(t) => t.into(),
            TranslateError::Canon(c) => c.into(),
            TranslateError::Model(m) => m.into(),
            TranslateError::Signature(_) => CliError::input(e.to_string()),
            TranslateError::TwoBound { .. }
            | TranslateError::FailsInTwo { .. }
            | TranslateError::NoPerfectModel(_) => CliError::unsupported(e.to_string()),
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::NoFiniteAxioms(_) => CliError::unsupported(e.to_string()),
            _ => CliError::input(e.to_string()),
        }
    }
}
