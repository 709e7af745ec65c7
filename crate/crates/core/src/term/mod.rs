//! Terms, equations and sentences over the group, hoop and MV signatures.

mod ast;
pub mod macros;
pub mod named;
pub mod parse;
pub mod print;
mod sentence;

pub use ast::{Node, Signature, Term, Var, VarKind};
pub use macros::expand_macros;
pub use parse::{parse_equation, parse_identity, parse_sentence, parse_statement, parse_term};
pub use print::{print_node, print_node_with};
pub use sentence::{EfdSentence, Equation, Identity, QuasiIdentity, Statement};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TermError {
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("`{op}` is not an operation of the {signature} signature{}", .position.map(|p| format!(" (offset {p})")).unwrap_or_default())]
    SignatureViolation { op: String, signature: Signature, position: Option<usize> },
    #[error("unknown signature `{0}` (expected group, hoop or mv)")]
    UnknownSignature(String),
    #[error("variable {0} is not bound by the quantifier prefix")]
    UnboundVariable(String),
    #[error("malformed formula: {0}")]
    Malformed(String),
    #[error("multiple {0} is too large to expand")]
    ExpansionTooLarge(u64),
}
