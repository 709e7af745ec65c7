//! Canonical forms of group terms and reduction of divisibility sentences.

mod classify;
mod normal;
pub mod overlay;
mod piecewise;
mod reduce;
mod solve;

pub use classify::{
    classify_delta_kts, classify_group, delta_equivalent, group_identity_holds, group_step,
    reduced_step, GroupClassification, GroupStep,
};
pub use normal::{lattice_normal_form, x_coords, Coords, LatticeExpr, LatticeNormalForm};
pub use piecewise::{
    arity, from_normal_form, piecewise_canonical, piecewise_canonical_n, Piece, PiecewiseLinear,
    DEFAULT_CAP,
};
pub use reduce::{reduce_delta_kt, DeltaKt, Reduction};
pub use solve::{form_to_node, max_min_term, solve_single_output, to_delta_kt, SingleOutput};

use crate::term::TermError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CanonError {
    #[error("expected a group term, found {0}")]
    NotGroupTerm(String),
    #[error("variable {0} is not allowed here")]
    UnexpectedVariable(String),
    #[error("term has {forms} distinct linear forms, more than the cap of {cap}")]
    CapExceeded { forms: usize, cap: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Term(#[from] TermError),
}
