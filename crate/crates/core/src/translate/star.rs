//! The star translation from hoop sentences to l-group sentences.

use serde::Serialize;

use super::TranslateError;
use crate::term::{EfdSentence, Equation, Identity, Node, Signature, Var, VarKind};

/// A group sentence with one conjunct `z_j \/ 0 = z_j` per output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarResult {
    pub sentence: EfdSentence,
}

/// `x_i* = x_i \/ -x_i`, `z_j* = z_j`, `(s -. t)* = (s* - t*) \/ 0`, and
/// `+`, `0` and multiples map to themselves.
pub fn star_term(t: &Node) -> Result<Node, TranslateError> {
    Ok(match t {
        Node::Var(v) if v.kind == VarKind::X => Node::join(Node::Var(*v), Node::neg(Node::Var(*v))),
        Node::Var(v) => Node::Var(*v),
        Node::Zero => Node::Zero,
        Node::Plus { lhs, rhs } => Node::plus(star_term(lhs)?, star_term(rhs)?),
        Node::Diff { lhs, rhs } => Node::join(Node::minus(star_term(lhs)?, star_term(rhs)?), Node::Zero),
        Node::Scalar { k, arg } => Node::scalar(*k, star_term(arg)?),
        other => return Err(TranslateError::Signature(format!("`{}` is not a hoop operation", other.op_name()))),
    })
}

fn star_equation(eq: &Equation) -> Result<Equation, TranslateError> {
    Ok(Equation::new(star_term(&eq.lhs)?, star_term(&eq.rhs)?))
}

fn require_hoop(sig: Signature) -> Result<(), TranslateError> {
    if sig == Signature::Hoop {
        Ok(())
    } else {
        Err(TranslateError::Signature(format!("expected a hoop formula, found {sig}")))
    }
}

pub fn star_sentence(phi: &EfdSentence) -> Result<StarResult, TranslateError> {
    require_hoop(phi.signature())?;
    let mut eqs = phi.equations().iter().map(star_equation).collect::<Result<Vec<_>, _>>()?;
    for j in 1..=phi.m() {
        let z = Node::Var(Var::z(j));
        eqs.push(Equation::new(Node::join(z.clone(), Node::Zero), z));
    }
    Ok(StarResult { sentence: EfdSentence::new(Signature::Group, phi.n(), phi.m(), eqs)? })
}

/// Star image of a hoop identity; it holds in `G` iff the identity holds in
/// the positive cone of `G`.
pub fn star_identity(id: &Identity) -> Result<Identity, TranslateError> {
    require_hoop(id.signature())?;
    Ok(Identity::new(Signature::Group, id.n(), star_equation(id.equation())?)?)
}
