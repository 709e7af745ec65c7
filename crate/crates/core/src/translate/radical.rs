//! Translation of MV sentences into hoop sentences about the radical.
//!
//! In a perfect MV-algebra every element is `a` or `~a` with `a` in the
//! radical. When all variables range over the radical, each MV term is
//! therefore equal to `h` or to `~h` for a hoop term `h`, and which of the
//! two is fixed by the shape of the term.

use super::TranslateError;
use crate::term::{print_node, EfdSentence, Equation, Identity, Node, Signature};

/// `h` when `coradical` is false, `~h` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalValue {
    pub coradical: bool,
    pub hoop: Node,
}

impl RadicalValue {
    fn rad(hoop: Node) -> RadicalValue {
        RadicalValue { coradical: false, hoop }
    }

    fn corad(hoop: Node) -> RadicalValue {
        RadicalValue { coradical: true, hoop }
    }

    fn not(self) -> RadicalValue {
        RadicalValue { coradical: !self.coradical, hoop: self.hoop }
    }
}

fn is_zero(n: &Node) -> bool {
    matches!(n, Node::Zero)
}

pub(crate) fn hplus(a: Node, b: Node) -> Node {
    if is_zero(&a) {
        b
    } else if is_zero(&b) {
        a
    } else {
        Node::plus(a, b)
    }
}

pub(crate) fn hdiff(a: Node, b: Node) -> Node {
    if is_zero(&b) {
        a
    } else if is_zero(&a) || a == b {
        Node::Zero
    } else {
        Node::diff(a, b)
    }
}

fn hscale(k: i64, a: Node) -> Node {
    if is_zero(&a) {
        Node::Zero
    } else {
        Node::times(k, a)
    }
}

/// Hoop join `a + (b -. a)`.
pub(crate) fn hjoin(a: Node, b: Node) -> Node {
    if a == b || is_zero(&b) {
        a
    } else if is_zero(&a) {
        b
    } else {
        hplus(a.clone(), hdiff(b, a))
    }
}

/// Hoop meet `a -. (a -. b)`.
pub(crate) fn hmeet(a: Node, b: Node) -> Node {
    if a == b {
        a
    } else if is_zero(&a) || is_zero(&b) {
        Node::Zero
    } else {
        hdiff(a.clone(), hdiff(a, b))
    }
}

fn add(a: RadicalValue, b: RadicalValue) -> RadicalValue {
    match (a.coradical, b.coradical) {
        (false, false) => RadicalValue::rad(hplus(a.hoop, b.hoop)),
        // a + ~b = ~(b -. a)
        (false, true) => RadicalValue::corad(hdiff(b.hoop, a.hoop)),
        (true, false) => RadicalValue::corad(hdiff(a.hoop, b.hoop)),
        (true, true) => RadicalValue::corad(Node::Zero),
    }
}

/// Value of `t` when every variable is interpreted in the radical.
pub fn radical_value(t: &Node) -> Result<RadicalValue, TranslateError> {
    Ok(match t {
        Node::Var(v) => RadicalValue::rad(Node::Var(*v)),
        Node::Zero => RadicalValue::rad(Node::Zero),
        Node::MvNeg { arg } => radical_value(arg)?.not(),
        Node::Plus { lhs, rhs } => add(radical_value(lhs)?, radical_value(rhs)?),
        Node::Diff { lhs, rhs } => {
            let (a, b) = (radical_value(lhs)?, radical_value(rhs)?);
            add(a.not(), b).not()
        }
        Node::Scalar { k, arg } => {
            let a = radical_value(arg)?;
            match (a.coradical, *k) {
                (false, k) => RadicalValue::rad(hscale(k, a.hoop)),
                (true, 1) => a,
                (true, _) => RadicalValue::corad(Node::Zero),
            }
        }
        Node::Power { k, arg } => {
            let a = radical_value(arg)?;
            match (a.coradical, *k) {
                (false, 1) => a,
                (false, _) => RadicalValue::rad(Node::Zero),
                // (~h)^k = ~(k h)
                (true, k) => RadicalValue::corad(hscale(i64::from(k), a.hoop)),
            }
        }
        Node::Join { lhs, rhs } => {
            let (a, b) = (radical_value(lhs)?, radical_value(rhs)?);
            match (a.coradical, b.coradical) {
                (false, false) => RadicalValue::rad(hjoin(a.hoop, b.hoop)),
                (true, false) => a,
                (false, true) => b,
                (true, true) => RadicalValue::corad(hmeet(a.hoop, b.hoop)),
            }
        }
        Node::Meet { lhs, rhs } => {
            let (a, b) = (radical_value(lhs)?, radical_value(rhs)?);
            match (a.coradical, b.coradical) {
                (false, false) => RadicalValue::rad(hmeet(a.hoop, b.hoop)),
                (true, false) => b,
                (false, true) => a,
                (true, true) => RadicalValue::corad(hjoin(a.hoop, b.hoop)),
            }
        }
        Node::Neg { .. } => {
            return Err(TranslateError::Signature("group negation in an MV term".into()));
        }
    })
}

/// The hoop equation equivalent to `eq` over the radical, `None` when it
/// holds trivially. Fails when one side is always in the radical and the
/// other never is.
pub fn radical_equation(eq: &Equation) -> Result<Option<Equation>, TranslateError> {
    let (l, r) = (radical_value(&eq.lhs)?, radical_value(&eq.rhs)?);
    if l.coradical != r.coradical {
        return Err(TranslateError::NoPerfectModel(format!(
            "`{eq}` compares a radical value with a coradical one"
        )));
    }
    Ok((l.hoop != r.hoop).then(|| Equation::new(l.hoop, r.hoop)))
}

/// `phi^H`: the hoop sentence that holds in `rad A` iff `phi` holds in `A`,
/// for sentences produced by the radical decomposition.
pub fn mv_to_hoop(phi: &EfdSentence) -> Result<EfdSentence, TranslateError> {
    if phi.signature() != Signature::Mv {
        return Err(TranslateError::Signature(format!("expected an MV sentence, found {}", phi.signature())));
    }
    let mut eqs = Vec::new();
    for eq in phi.equations() {
        if let Some(h) = radical_equation(eq)? {
            if !eqs.contains(&h) {
                eqs.push(h);
            }
        }
    }
    if eqs.is_empty() {
        // Every conjunct is trivial on the radical; keep one so that the
        // sentence still asserts uniqueness.
        eqs.push(Equation::new(Node::Zero, Node::Zero));
    }
    Ok(EfdSentence::new(Signature::Hoop, phi.n(), phi.m(), eqs)?)
}

/// Hoop identity equivalent to the MV identity on radical inputs.
pub fn radical_identity(id: &Identity) -> Result<Option<Identity>, TranslateError> {
    Ok(match radical_equation(id.equation())? {
        Some(eq) => Some(Identity::new(Signature::Hoop, id.n(), eq)?),
        None => None,
    })
}

impl std::fmt::Display for RadicalValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coradical {
            write!(f, "~({})", print_node(&self.hoop))
        } else {
            f.write_str(&print_node(&self.hoop))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::named::t_k;
    use crate::term::parse_term;

    fn rv(src: &str) -> String {
        radical_value(&parse_term(src, Signature::Mv).unwrap()).unwrap().to_string()
    }

    #[test]
    fn t_k_is_multiplication_on_the_radical() {
        assert_eq!(radical_value(&t_k(3, Node::z(1))).unwrap().to_string(), "3 z1");
        assert_eq!(radical_value(&t_k(3, Node::mv_neg(Node::z(1)))).unwrap().to_string(), "~(3 z1)");
    }

    #[test]
    fn star_of_radical_and_coradical_is_truncated_difference() {
        let star = |a: Node, b: Node| radical_value(&Node::star(a, b)).unwrap().to_string();
        assert_eq!(star(Node::x(1), Node::mv_neg(Node::x(2))), "x1 -. x2");
        assert_eq!(star(Node::mv_neg(Node::x(1)), Node::mv_neg(Node::x(2))), "~(x1 + x2)");
        assert_eq!(star(Node::x(1), Node::x(2)), "0");
        assert_eq!(rv("x1 + ~x2"), "~(x2 -. x1)");
    }

    #[test]
    fn fragment_equation_is_unchanged() {
        let eq = crate::term::parse_equation("z1 -. x1 = 0", Signature::Mv).unwrap();
        assert_eq!(radical_equation(&eq).unwrap().unwrap().to_string(), "z1 -. x1 = 0");
    }

    #[test]
    fn mismatched_sides() {
        let eq = crate::term::parse_equation("x1 = ~x1", Signature::Mv).unwrap();
        assert!(matches!(radical_equation(&eq), Err(TranslateError::NoPerfectModel(_))));
    }
}
