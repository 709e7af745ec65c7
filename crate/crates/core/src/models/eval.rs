use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Element, ModelError, WitnessAlgebra};
use crate::term::{Equation, Node, Signature, Term, Var};

/// Values of the variables of a term.
pub type Assignment = BTreeMap<Var, Element>;

/// Evaluates `term` in `a`. Fails when the signatures disagree, a variable
/// is missing, or an assigned value lies outside the universe.
pub fn eval(a: &WitnessAlgebra, term: &Term, env: &Assignment) -> Result<Element, ModelError> {
    check_species(a, term.signature())?;
    check_env(a, env)?;
    eval_node(a, term.node(), env)
}

/// Truth of `lhs = rhs` under `env`.
pub fn eval_equation(
    a: &WitnessAlgebra,
    sig: Signature,
    eq: &Equation,
    env: &Assignment,
) -> Result<bool, ModelError> {
    check_species(a, sig)?;
    check_env(a, env)?;
    Ok(eval_node(a, &eq.lhs, env)? == eval_node(a, &eq.rhs, env)?)
}

pub(crate) fn check_species(a: &WitnessAlgebra, sig: Signature) -> Result<(), ModelError> {
    if a.species() == sig {
        Ok(())
    } else {
        Err(ModelError::SpeciesMismatch { signature: sig, algebra: a.to_string() })
    }
}

pub(crate) fn check_env(a: &WitnessAlgebra, env: &Assignment) -> Result<(), ModelError> {
    for e in env.values() {
        if !e.is_member(a) {
            return Err(ModelError::NotMember { element: e.to_string(), algebra: a.to_string() });
        }
    }
    Ok(())
}

/// `a * a = 0`, i.e. `a` lies in the radical of an MV-algebra.
pub fn is_radical(a: &WitnessAlgebra, e: &Element) -> Result<bool, ModelError> {
    check_species(a, Signature::Mv)?;
    let x = Var::x(1);
    let env: Assignment = [(x, e.clone())].into_iter().collect();
    let sq = eval_node(a, &Node::power(2, Node::Var(x)), &env)?;
    Ok(sq == zero(a))
}

pub(crate) fn zero(a: &WitnessAlgebra) -> Element {
    match a {
        WitnessAlgebra::Trivial(_) => Element::Unit,
        WitnessAlgebra::TwoMv => Element::Bit(false),
        WitnessAlgebra::GammaPerfect(g) => Element::Pair(BigInt::zero(), Box::new(Element::group_zero(g))),
        WitnessAlgebra::PositiveCone(g) => Element::group_zero(g),
        g => Element::group_zero(g),
    }
}

fn unit(g: &WitnessAlgebra) -> Element {
    Element::Pair(BigInt::from(1), Box::new(Element::group_zero(g)))
}

pub(crate) fn mv_plus(g: &WitnessAlgebra, a: &Element, b: &Element) -> Element {
    a.g_add(b).g_min(&unit(g))
}

pub(crate) fn mv_neg(g: &WitnessAlgebra, a: &Element) -> Element {
    unit(g).g_sub(a)
}

pub(crate) fn eval_node(a: &WitnessAlgebra, node: &Node, env: &Assignment) -> Result<Element, ModelError> {
    let ev = |n: &Node| eval_node(a, n, env);
    if let Node::Var(v) = node {
        return env.get(v).cloned().ok_or_else(|| ModelError::Unassigned(v.to_string()));
    }
    match a {
        WitnessAlgebra::Trivial(_) => {
            for c in node.children() {
                ev(c)?;
            }
            Ok(Element::Unit)
        }
        WitnessAlgebra::TwoMv => {
            let bit = |n: &Node| -> Result<bool, ModelError> {
                match ev(n)? {
                    Element::Bit(b) => Ok(b),
                    other => Err(ModelError::NotMember { element: other.to_string(), algebra: "two".into() }),
                }
            };
            Ok(Element::Bit(match node {
                Node::Zero => false,
                Node::Plus { lhs, rhs } | Node::Join { lhs, rhs } => bit(lhs)? | bit(rhs)?,
                Node::Meet { lhs, rhs } => bit(lhs)? & bit(rhs)?,
                Node::Diff { lhs, rhs } => bit(lhs)? & !bit(rhs)?,
                Node::MvNeg { arg } => !bit(arg)?,
                Node::Scalar { arg, .. } | Node::Power { arg, .. } => bit(arg)?,
                other => return Err(unsupported_op(other, a)),
            }))
        }
        WitnessAlgebra::GammaPerfect(g) => Ok(match node {
            Node::Zero => zero(a),
            Node::Plus { lhs, rhs } => mv_plus(g, &ev(lhs)?, &ev(rhs)?),
            Node::MvNeg { arg } => mv_neg(g, &ev(arg)?),
            Node::Join { lhs, rhs } => ev(lhs)?.g_max(&ev(rhs)?),
            Node::Meet { lhs, rhs } => ev(lhs)?.g_min(&ev(rhs)?),
            Node::Diff { lhs, rhs } => {
                let (x, y) = (ev(lhs)?, ev(rhs)?);
                mv_neg(g, &mv_plus(g, &mv_neg(g, &x), &y))
            }
            Node::Scalar { k, arg } => ev(arg)?.g_scale(*k).g_min(&unit(g)),
            Node::Power { k, arg } => {
                let x = ev(arg)?;
                let k = i64::from(*k);
                x.g_scale(k).g_sub(&unit(g).g_scale(k - 1)).g_max(&zero(a))
            }
            other => return Err(unsupported_op(other, a)),
        }),
        WitnessAlgebra::PositiveCone(g) => {
            let zero = Element::group_zero(g);
            Ok(match node {
                Node::Zero => zero,
                Node::Plus { lhs, rhs } => ev(lhs)?.g_add(&ev(rhs)?),
                Node::Diff { lhs, rhs } => ev(lhs)?.g_sub(&ev(rhs)?).g_max(&zero),
                Node::Scalar { k, arg } => ev(arg)?.g_scale(*k),
                other => return Err(unsupported_op(other, a)),
            })
        }
        g => {
            let zero = Element::group_zero(g);
            Ok(match node {
                Node::Zero => zero,
                Node::Plus { lhs, rhs } => ev(lhs)?.g_add(&ev(rhs)?),
                Node::Neg { arg } => ev(arg)?.g_neg(),
                Node::Join { lhs, rhs } => ev(lhs)?.g_max(&ev(rhs)?),
                Node::Meet { lhs, rhs } => ev(lhs)?.g_min(&ev(rhs)?),
                Node::Diff { lhs, rhs } => ev(lhs)?.g_sub(&ev(rhs)?).g_max(&zero),
                Node::Scalar { k, arg } => ev(arg)?.g_scale(*k),
                other => return Err(unsupported_op(other, a)),
            })
        }
    }
}

fn unsupported_op(node: &Node, a: &WitnessAlgebra) -> ModelError {
    ModelError::Unsupported(format!("`{}` has no interpretation in {a}", node.op_name()))
}
