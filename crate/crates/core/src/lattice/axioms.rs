//! Axiom schemas for the divisibility operators `d_p`.

use serde::Serialize;

use super::expansion::{BaseLogic, LogicExpansion, Special};
use super::{LatticeError, PrimeSet};
use crate::term::named::t_k;
use crate::term::{print_node_with, Node, Var, VarKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Connective {
    Implies,
    Iff,
}

/// `lhs -> rhs` or `lhs <-> rhs`, where in the structured form `x1` is the
/// propositional variable and `z1` stands for `d_p(x1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomSchema {
    pub name: String,
    pub prime: u64,
    pub symbol: String,
    pub connective: Connective,
    pub lhs: Node,
    pub rhs: Node,
    pub text: String,
    pub note: String,
}

fn render(node: &Node, symbol: &str) -> String {
    print_node_with(node, &|v: Var| match v.kind {
        VarKind::Z => format!("{symbol}(x)"),
        _ => "x".to_string(),
    })
}

fn needs_parens(node: &Node) -> bool {
    matches!(node, Node::Join { .. } | Node::Meet { .. } | Node::Plus { .. } | Node::Diff { .. })
}

/// One schema per prime: `A_p : x -> p d_p(x)` over `Bal`,
/// `D_p : t_p(d_p(x)) <-> x` over `LP`.
pub fn emit_axioms(e: &LogicExpansion) -> Result<Vec<AxiomSchema>, LatticeError> {
    if e.special != Special::None {
        return Err(LatticeError::NoFiniteAxioms(e.to_string()));
    }
    let primes = match &e.primes {
        PrimeSet::Finite(s) => s.clone(),
        PrimeSet::Cofinite(_) => return Err(LatticeError::NoFiniteAxioms(e.to_string())),
    };
    Ok(primes
        .into_iter()
        .map(|p| {
            let symbol = format!("d{p}");
            let dp = Node::z(1);
            let x = Node::x(1);
            match e.base {
                BaseLogic::Bal => {
                    let rhs = Node::scalar(p as i64, dp);
                    AxiomSchema {
                        name: format!("A_{p}"),
                        prime: p,
                        text: format!("x -> {}", render(&rhs, &symbol)),
                        symbol,
                        connective: Connective::Implies,
                        lhs: x,
                        rhs,
                        note: "the uniqueness rule for d_p is derivable in Bal".into(),
                    }
                }
                BaseLogic::Lp => {
                    let lhs = t_k(p as u32, dp);
                    let shown = render(&lhs, &symbol);
                    let shown = if needs_parens(&lhs) { format!("({shown})") } else { shown };
                    AxiomSchema {
                        name: format!("D_{p}"),
                        prime: p,
                        text: format!("{shown} <-> x"),
                        symbol,
                        connective: Connective::Iff,
                        lhs,
                        rhs: x,
                        note: "the uniqueness rule for d_p is derivable in LP".into(),
                    }
                }
            }
        })
        .collect())
}
