//! Expansion of derived operations into the primitive signature.

use super::ast::{Node, Signature, Term};
use super::TermError;

/// Largest scalar or exponent expanded into repeated sums.
pub const MAX_EXPANDED_MULTIPLE: u64 = 4096;

fn check_multiple(k: u64) -> Result<(), TermError> {
    if k > MAX_EXPANDED_MULTIPLE {
        Err(TermError::ExpansionTooLarge(k))
    } else {
        Ok(())
    }
}

/// `t + (t + (... + t))` with `k >= 1` summands.
fn right_sum(k: u64, t: &Node) -> Node {
    let mut acc = t.clone();
    for _ in 1..k {
        acc = Node::plus(t.clone(), acc);
    }
    acc
}

/// `((t + t) + ...) + t`, following `(n+1)t := nt + t`.
fn left_sum(k: u64, t: &Node) -> Node {
    let mut acc = t.clone();
    for _ in 1..k {
        acc = Node::plus(acc, t.clone());
    }
    acc
}

fn mv_join(a: Node, b: Node) -> Node {
    // x \/ y := ~(~x + y) + y
    Node::plus(Node::mv_neg(Node::plus(Node::mv_neg(a), b.clone())), b)
}

fn mv_meet(a: Node, b: Node) -> Node {
    // x /\ y := ~(~x \/ ~y)
    Node::mv_neg(mv_join(Node::mv_neg(a), Node::mv_neg(b)))
}

fn expand_node(node: &Node, sig: Signature) -> Result<Node, TermError> {
    let kids: Vec<Node> =
        node.children().into_iter().map(|c| expand_node(c, sig)).collect::<Result<_, _>>()?;
    let mut kids = kids.into_iter();
    let mut next = || kids.next().expect("arity");
    Ok(match (node, sig) {
        (Node::Var(v), _) => Node::Var(*v),
        (Node::Zero, _) => Node::Zero,
        (Node::Plus { .. }, _) => Node::plus(next(), next()),
        (Node::Neg { .. }, _) => Node::neg(next()),
        (Node::MvNeg { .. }, _) => Node::mv_neg(next()),
        (Node::Join { .. }, Signature::Mv) => mv_join(next(), next()),
        (Node::Meet { .. }, Signature::Mv) => mv_meet(next(), next()),
        (Node::Join { .. }, _) => Node::join(next(), next()),
        (Node::Meet { .. }, _) => Node::meet(next(), next()),
        (Node::Diff { .. }, Signature::Group) => {
            let (a, b) = (next(), next());
            Node::join(Node::minus(a, b), Node::Zero)
        }
        (Node::Diff { .. }, Signature::Hoop) => Node::diff(next(), next()),
        (Node::Diff { .. }, Signature::Mv) => {
            let (a, b) = (next(), next());
            Node::mv_neg(Node::plus(Node::mv_neg(a), b))
        }
        (Node::Scalar { k, .. }, Signature::Mv) => {
            check_multiple(k.unsigned_abs())?;
            left_sum(*k as u64, &next())
        }
        (Node::Scalar { k, .. }, _) => {
            let mag = k.unsigned_abs();
            check_multiple(mag)?;
            let arg = next();
            let body = if mag == 0 { Node::Zero } else { right_sum(mag, &arg) };
            if *k < 0 {
                Node::neg(body)
            } else {
                body
            }
        }
        (Node::Power { k, .. }, _) => {
            check_multiple(u64::from(*k))?;
            let arg = next();
            let mut acc = arg.clone();
            for _ in 1..*k {
                acc = Node::star(acc, arg.clone());
            }
            acc
        }
    })
}

/// Rewrites every derived operation of the term's signature into the
/// primitive operations. Idempotent.
pub fn expand_macros(term: &Term) -> Result<Term, TermError> {
    let node = expand_node(term.node(), term.signature())?;
    Ok(Term::new_unchecked(term.signature(), node))
}

/// Primitive-only check: true when no derived operation of `sig` remains.
pub fn is_primitive(node: &Node, sig: Signature) -> bool {
    let here = match (node, sig) {
        (Node::Scalar { .. } | Node::Power { .. } | Node::Diff { .. }, Signature::Group) => false,
        (Node::Scalar { .. }, Signature::Hoop) => false,
        (Node::Join { .. } | Node::Meet { .. } | Node::Diff { .. }, Signature::Mv) => false,
        (Node::Scalar { .. } | Node::Power { .. }, Signature::Mv) => false,
        _ => true,
    };
    here && node.children().iter().all(|c| is_primitive(c, sig))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse::parse_term;

    fn expand(src: &str, sig: Signature) -> String {
        let t = Term::new(sig, parse_term(src, sig).unwrap()).unwrap();
        expand_macros(&t).unwrap().to_string()
    }

    #[test]
    fn group_scalars() {
        assert_eq!(expand("3 x1", Signature::Group), "x1 + (x1 + x1)");
        assert_eq!(expand("-2 x1", Signature::Group), "-(x1 + x1)");
        assert_eq!(expand("0 x1", Signature::Group), "0");
        assert_eq!(expand("x1 -. x2", Signature::Group), "x1 - x2 \\/ 0");
    }

    #[test]
    fn mv_macros() {
        assert_eq!(expand("x1 \\/ x2", Signature::Mv), "~(~x1 + x2) + x2");
        assert_eq!(expand("x1 -. x2", Signature::Mv), "~(~x1 + x2)");
        assert_eq!(expand("x1^2", Signature::Mv), "~(~x1 + ~x1)");
        assert_eq!(expand("3 x1", Signature::Mv), "x1 + x1 + x1");
    }

    #[test]
    fn hoop_keeps_monus() {
        assert_eq!(expand("2 (x1 -. x2)", Signature::Hoop), "x1 -. x2 + (x1 -. x2)");
    }

    #[test]
    fn idempotent_on_t2() {
        let t = Term::new(Signature::Mv, crate::term::named::t_k(2, Node::z(1))).unwrap();
        let once = expand_macros(&t).unwrap();
        assert!(is_primitive(once.node(), Signature::Mv));
        assert_eq!(expand_macros(&once).unwrap(), once);
    }
}
