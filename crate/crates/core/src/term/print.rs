//! Printer producing the concrete syntax read by [`super::parse`].
//!
//! Parentheses are inserted only where the precedence rules demand them, so
//! `parse(print(t)) == t` for every tree.

use super::ast::{Node, Var};

const JOIN: u8 = 1;
const MEET: u8 = 2;
const SUM: u8 = 3;
const PREFIX: u8 = 4;
const POSTFIX: u8 = 5;
const ATOM: u8 = 6;

fn level(node: &Node) -> u8 {
    match node {
        Node::Join { .. } => JOIN,
        Node::Meet { .. } => MEET,
        Node::Diff { .. } | Node::Plus { .. } => SUM,
        Node::Neg { .. } | Node::MvNeg { .. } | Node::Scalar { .. } => PREFIX,
        Node::Power { .. } => POSTFIX,
        Node::Var(_) | Node::Zero => ATOM,
    }
}

/// Prints a term.
pub fn print_node(node: &Node) -> String {
    print_node_with(node, &|v| v.to_string())
}

/// Prints a term, rendering variables with `name`.
pub fn print_node_with(node: &Node, name: &dyn Fn(Var) -> String) -> String {
    let mut p = Printer {
        out: String::new(),
        name,
    };
    p.node(node);
    p.out
}

struct Printer<'a> {
    out: String,
    name: &'a dyn Fn(Var) -> String,
}

impl Printer<'_> {
    fn at(&mut self, node: &Node, min: u8) {
        if level(node) < min {
            self.parens(node);
        } else {
            self.node(node);
        }
    }

    fn parens(&mut self, node: &Node) {
        self.out.push('(');
        self.node(node);
        self.out.push(')');
    }

    fn binary(&mut self, lhs: &Node, op: &str, rhs: &Node, lvl: u8) {
        self.at(lhs, lvl);
        self.out.push(' ');
        self.out.push_str(op);
        self.out.push(' ');
        self.at(rhs, lvl + 1);
    }

    fn node(&mut self, node: &Node) {
        match node {
            Node::Var(v) => {
                let name = (self.name)(*v);
                self.out.push_str(&name);
            }
            Node::Zero => self.out.push('0'),
            Node::Join { lhs, rhs } => self.binary(lhs, "\\/", rhs, JOIN),
            Node::Meet { lhs, rhs } => self.binary(lhs, "/\\", rhs, MEET),
            Node::Diff { lhs, rhs } => self.binary(lhs, "-.", rhs, SUM),
            Node::Plus { lhs, rhs } => match &**rhs {
                // `a + -b` is printed as `a - b`; the parser reads it back the same way.
                Node::Neg { arg } => self.binary(lhs, "-", arg, SUM),
                _ => self.binary(lhs, "+", rhs, SUM),
            },
            Node::Neg { arg } => {
                self.out.push('-');
                // `-3 x1` would read as a negative scalar.
                if matches!(**arg, Node::Scalar { .. }) {
                    self.parens(arg);
                } else {
                    self.at(arg, PREFIX);
                }
            }
            Node::MvNeg { arg } => {
                self.out.push('~');
                // `~2 z1` parses, but `~(2 z1)` is easier to read.
                if matches!(**arg, Node::Scalar { .. }) {
                    self.parens(arg);
                } else {
                    self.at(arg, PREFIX);
                }
            }
            Node::Scalar { k, arg } => {
                self.out.push_str(&k.to_string());
                self.out.push(' ');
                // A scalar operand may not begin with `-`.
                if matches!(**arg, Node::Neg { .. })
                    || matches!(**arg, Node::Scalar { k, .. } if k < 0)
                {
                    self.parens(arg);
                } else {
                    self.at(arg, PREFIX);
                }
            }
            Node::Power { k, arg } => {
                self.at(arg, POSTFIX);
                self.out.push('^');
                self.out.push_str(&k.to_string());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse::parse_term;
    use crate::term::Signature;

    fn roundtrip(src: &str, sig: Signature) -> String {
        let t = parse_term(src, sig).unwrap();
        let printed = print_node(&t);
        assert_eq!(parse_term(&printed, sig).unwrap(), t, "{printed}");
        printed
    }

    #[test]
    fn canonical_spacing() {
        assert_eq!(roundtrip("x1+(x1+x1)", Signature::Group), "x1 + (x1 + x1)");
        assert_eq!(roundtrip("(x1+x1)+x1", Signature::Group), "x1 + x1 + x1");
        assert_eq!(
            roundtrip("(2 z1 /\\ ~(2 z1^2)) \\/ z1^2", Signature::Mv),
            "2 z1 /\\ ~(2 z1^2) \\/ z1^2"
        );
    }

    #[test]
    fn minus_forms() {
        assert_eq!(roundtrip("x1 - x2", Signature::Group), "x1 - x2");
        assert_eq!(roundtrip("-(3 x1)", Signature::Group), "-(3 x1)");
        assert_eq!(roundtrip("-3 x1", Signature::Group), "-3 x1");
        assert_eq!(roundtrip("x1 + -(3 x1)", Signature::Group), "x1 - 3 x1");
        assert_eq!(roundtrip("x1 + -3 x1", Signature::Group), "x1 + -3 x1");
        assert_eq!(roundtrip("-0", Signature::Group), "-0");
        assert_eq!(roundtrip("x1 - 0", Signature::Group), "x1 - 0");
        assert_eq!(roundtrip("2 (-x1)", Signature::Group), "2 (-x1)");
        assert_eq!(roundtrip("--x1", Signature::Group), "--x1");
    }

    #[test]
    fn power_of_compound() {
        assert_eq!(roundtrip("(2 z1)^2", Signature::Mv), "(2 z1)^2");
        assert_eq!(roundtrip("(~z1)^3^2", Signature::Mv), "(~z1)^3^2");
    }
}
