//! Bridges between signatures: hoops to l-groups via the star map, and
//! perfect MV-algebras to hoops via the radical.

mod classify;
mod decompose;
mod radical;
mod star;
mod two;

pub use classify::{classify, classify_hoop, classify_mv, Classification, MvBranch, MvClassification, MvStep};
pub use decompose::{disjunction, disjunction_of_conjunctions, distance, phi_rad_decompose, rho, rho_tilde, RadBasicSentence};
pub use radical::{mv_to_hoop, radical_equation, radical_identity, radical_value, RadicalValue};
pub use star::{star_identity, star_sentence, star_term, StarResult};
pub use two::{check_in_two, TwoCheck, TwoWitness, TWO_BOUND};

use crate::canon::CanonError;
use crate::models::ModelError;
use crate::term::TermError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TranslateError {
    #[error("{0}")]
    Signature(String),
    #[error("n + m = {} exceeds the exhaustive bound of {TWO_BOUND}", .n + .m)]
    TwoBound { n: usize, m: usize },
    #[error("the sentence fails in the two-element algebra at input {input:?} ({solutions} solutions)")]
    FailsInTwo { input: Vec<bool>, solutions: usize },
    #[error("no perfect MV-algebra satisfies the sentence: {0}")]
    NoPerfectModel(String),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Model(#[from] ModelError),
}
