//! Decomposition of an MV sentence into sentences that behave well with
//! respect to the radical.

use serde::Serialize;

use super::two::{check_in_two, TwoCheck};
use super::TranslateError;
use crate::term::{EfdSentence, Equation, Node, Signature, Var, VarKind};

/// One output of [`phi_rad_decompose`], with the sign vector `e` it was
/// built for and the two-valued solution `e'` at `e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadBasicSentence {
    pub sentence: EfdSentence,
    pub sign: Vec<bool>,
    pub witness: Vec<bool>,
}

/// `(x * ~y) + (y * ~x)`, which vanishes in a chain iff `x = y`.
pub fn distance(x: &Node, y: &Node) -> Node {
    Node::plus(
        Node::star(x.clone(), Node::mv_neg(y.clone())),
        Node::star(y.clone(), Node::mv_neg(x.clone())),
    )
}

/// `x = y or z = w` as the single equation `d(x, y) /\ d(z, w) = 0`,
/// valid in totally ordered MV-algebras.
pub fn disjunction(a: &Equation, b: &Equation) -> Equation {
    Equation::new(Node::meet(distance(&a.lhs, &a.rhs), distance(&b.lhs, &b.rhs)), Node::Zero)
}

/// `(a_1 & ... & a_p) or (b_1 & ... & b_q)` distributed into the `p q`
/// equations `a_i or b_j`, ordered by `i` then `j`.
pub fn disjunction_of_conjunctions(a: &[Equation], b: &[Equation]) -> Vec<Equation> {
    a.iter().flat_map(|ai| b.iter().map(move |bj| disjunction(ai, bj))).collect()
}

/// `x1^2 = 0 & ... & xn^2 = 0`: every input lies in the radical.
pub fn rho(n: usize) -> Vec<Equation> {
    (1..=n).map(|i| Equation::new(Node::power(2, Node::x(i)), Node::Zero)).collect()
}

/// `(~x1 /\ ... /\ ~xn)^2 = 0`: some input lies outside the radical. With no
/// inputs the left side is `1^2` and the equation is false.
pub fn rho_tilde(n: usize) -> Equation {
    let meet = (2..=n).fold(Node::mv_neg(if n == 0 { Node::Zero } else { Node::x(1) }), |acc, i| {
        Node::meet(acc, Node::mv_neg(Node::x(i)))
    });
    Equation::new(Node::power(2, meet), Node::Zero)
}

fn flip(sign: &[bool], kind: VarKind) -> impl Fn(Var) -> Option<Node> + '_ {
    move |v: Var| (v.kind == kind && sign[v.index - 1]).then(|| Node::mv_neg(Node::Var(v)))
}

/// The `2^n` sentences whose conjunction is equivalent to `phi` over totally
/// ordered perfect MV-algebras. Requires `phi` to hold in the two-element
/// algebra.
pub fn phi_rad_decompose(phi: &EfdSentence) -> Result<Vec<RadBasicSentence>, TranslateError> {
    let witnesses = match check_in_two(phi)? {
        TwoCheck::Holds { witnesses } => witnesses,
        TwoCheck::Fails { input, solutions } => return Err(TranslateError::FailsInTwo { input, solutions }),
    };
    let (n, m) = (phi.n(), phi.m());
    let zero_out: Vec<Equation> = (1..=m).map(|j| Equation::new(Node::z(j), Node::Zero)).collect();
    witnesses
        .into_iter()
        .map(|w| {
            let fx = flip(&w.input, VarKind::X);
            let fz = flip(&w.output, VarKind::Z);
            let both = |v: Var| fx(v).or_else(|| fz(v));
            let mut radical_branch = rho(n);
            radical_branch.extend(phi.equations().iter().map(|eq| eq.substitute(&both)));
            let mut coradical_branch = vec![rho_tilde(n)];
            coradical_branch.extend(zero_out.iter().cloned());
            let eqs = disjunction_of_conjunctions(&radical_branch, &coradical_branch);
            let sentence = EfdSentence::new(Signature::Mv, n, m, eqs)?;
            Ok(RadBasicSentence { sentence, sign: w.input.clone(), witness: w.output.clone() })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::named::epsilon_k;
    use crate::term::print_node;

    #[test]
    fn two_branches_for_one_input() {
        let out = phi_rad_decompose(&epsilon_k(2).unwrap()).unwrap();
        assert_eq!(out.len(), 2);
        assert_eq!(out[0].sign, vec![false]);
        assert_eq!(out[1].sign, vec![true]);
        // (1 + 1) radical equations times (1 + 1) coradical ones.
        assert_eq!(out[0].sentence.equations().len(), 4);
    }

    #[test]
    fn rho_tilde_shapes() {
        assert_eq!(print_node(&rho_tilde(2).lhs), "(~x1 /\\ ~x2)^2");
        assert_eq!(print_node(&rho_tilde(0).lhs), "(~0)^2");
    }

    #[test]
    fn precondition_failure_names_the_input() {
        let phi = crate::term::parse_sentence("forall x1 exists! z1 : z1 = x1 & z1 = ~x1", Signature::Mv).unwrap();
        assert!(matches!(phi_rad_decompose(&phi), Err(TranslateError::FailsInTwo { .. })));
    }
}
