//! Builders for the standard sentences `delta_k`, `epsilon_k`, the terms
//! `t_k`, and a few named inputs accepted by the command line.

use super::ast::{Node, Signature};
use super::parse::parse_statement;
use super::sentence::{EfdSentence, Equation, Identity, Statement};
use super::TermError;

/// `t_k(arg) = (k arg /\ ~(2 arg^2)) \/ arg^k`, written with plain `arg`
/// instead of `1 arg` and `arg^1` when `k = 1`.
pub fn t_k(k: u32, arg: Node) -> Node {
    let kz = Node::times(i64::from(k), arg.clone());
    let guard = Node::mv_neg(Node::scalar(2, Node::power(2, arg.clone())));
    Node::join(Node::meet(kz, guard), Node::pow(k, arg))
}

fn check_k(k: u32) -> Result<(), TermError> {
    if k == 0 {
        Err(TermError::Malformed("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `delta_k = forall x1 exists! z1 : k z1 = x1` in the group or hoop signature.
pub fn delta_k(k: u32, sig: Signature) -> Result<EfdSentence, TermError> {
    check_k(k)?;
    let eq = Equation::new(Node::times(i64::from(k), Node::z(1)), Node::x(1));
    EfdSentence::new(sig, 1, 1, vec![eq])
}

/// `epsilon_k = forall x1 exists! z1 : t_k(z1) = x1`.
pub fn epsilon_k(k: u32) -> Result<EfdSentence, TermError> {
    check_k(k)?;
    EfdSentence::new(Signature::Mv, 1, 1, vec![Equation::new(t_k(k, Node::z(1)), Node::x(1))])
}

/// `delta_{k,t} = forall x1..xn exists! z1 : k z1 = t(x)`.
pub fn delta_kt(k: u32, n: usize, t: Node) -> Result<EfdSentence, TermError> {
    check_k(k)?;
    let eq = Equation::new(Node::times(i64::from(k), Node::z(1)), t);
    EfdSentence::new(Signature::Group, n, 1, vec![eq])
}

/// The identity `forall x1 : 2 x1 = x1`, whose MV-models are Boolean algebras.
pub fn boolean_identity() -> Identity {
    Identity::new(Signature::Mv, 1, Equation::new(Node::scalar(2, Node::x(1)), Node::x(1)))
        .expect("well formed")
}

/// The identity `forall x1 : x1 = 0`, which only trivial algebras satisfy.
pub fn absurd_identity(sig: Signature) -> Identity {
    Identity::new(sig, 1, Equation::new(Node::x(1), Node::Zero)).expect("well formed")
}

/// Reads `delta K`, `epsilon K`, `boolean`, `absurd`, or falls back to the
/// sentence grammar.
pub fn parse_named_or_statement(src: &str, sig: Signature) -> Result<Statement, TermError> {
    let words: Vec<&str> = src.split_whitespace().collect();
    let number = |w: &str| -> Result<u32, TermError> {
        w.parse::<u32>().map_err(|_| TermError::Malformed(format!("expected a positive integer, found `{w}`")))
    };
    match words.as_slice() {
        ["delta", k] => {
            let sig = if sig == Signature::Mv { Signature::Group } else { sig };
            Ok(Statement::Sentence(delta_k(number(k)?, sig)?))
        }
        ["epsilon", k] => Ok(Statement::Sentence(epsilon_k(number(k)?)?)),
        ["boolean"] => Ok(Statement::Identity(boolean_identity())),
        ["absurd"] => Ok(Statement::Identity(absurd_identity(sig))),
        _ => parse_statement(src, sig),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse::{parse_sentence, parse_term};

    #[test]
    fn t2_matches_concrete_syntax() {
        let parsed = parse_term("(2 z1 /\\ ~(2 z1^2)) \\/ z1^2", Signature::Mv).unwrap();
        assert_eq!(t_k(2, Node::z(1)), parsed);
    }

    #[test]
    fn t1_uses_plain_variable() {
        let parsed = parse_term("(z1 /\\ ~(2 z1^2)) \\/ z1", Signature::Mv).unwrap();
        assert_eq!(t_k(1, Node::z(1)), parsed);
    }

    #[test]
    fn delta_two_text() {
        let d = delta_k(2, Signature::Group).unwrap();
        assert_eq!(d.to_string(), "forall x1 exists! z1 : 2 z1 = x1");
        assert_eq!(parse_sentence(&d.to_string(), Signature::Group).unwrap(), d);
    }

    #[test]
    fn named_inputs() {
        assert!(matches!(parse_named_or_statement("epsilon 6", Signature::Mv), Ok(Statement::Sentence(_))));
        assert!(matches!(parse_named_or_statement("boolean", Signature::Mv), Ok(Statement::Identity(_))));
        assert!(parse_named_or_statement("delta 0", Signature::Group).is_err());
    }
}
