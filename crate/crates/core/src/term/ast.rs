use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::TermError;

/// The three signatures terms can be written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Signature {
    /// `{+, -, 0, \/, /\}` with integer scalars (Abelian l-groups).
    Group,
    /// `{+, -., 0}` with positive scalars (cancellative hoops).
    Hoop,
    /// `{+, ~, 0}` plus the usual MV macros.
    Mv,
}

impl Signature {
    pub fn name(self) -> &'static str {
        match self {
            Signature::Group => "group",
            Signature::Hoop => "hoop",
            Signature::Mv => "mv",
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Signature {
    type Err = TermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "group" | "g" | "lgroup" => Ok(Signature::Group),
            "hoop" | "h" => Ok(Signature::Hoop),
            "mv" | "p" => Ok(Signature::Mv),
            other => Err(TermError::UnknownSignature(other.to_string())),
        }
    }
}

/// Variable namespace. `Y` only appears in uniqueness quasi-identities and
/// is never produced by the parser.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarKind {
    X,
    Y,
    Z,
}

impl VarKind {
    pub fn prefix(self) -> char {
        match self {
            VarKind::X => 'x',
            VarKind::Y => 'y',
            VarKind::Z => 'z',
        }
    }
}

/// A variable such as `x3` or `z1`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Var {
    pub kind: VarKind,
    pub index: usize,
}

impl Var {
    pub fn x(index: usize) -> Var {
        Var { kind: VarKind::X, index }
    }

    pub fn y(index: usize) -> Var {
        Var { kind: VarKind::Y, index }
    }

    pub fn z(index: usize) -> Var {
        Var { kind: VarKind::Z, index }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.index)
    }
}

/// Term syntax tree. Derived operations (`Scalar`, `Power`, and in MV also
/// `Join`, `Meet`, `Diff`) are kept as nodes and expanded on demand.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "snake_case")]
pub enum Node {
    Var(Var),
    Zero,
    Plus { lhs: Box<Node>, rhs: Box<Node> },
    Neg { arg: Box<Node> },
    Join { lhs: Box<Node>, rhs: Box<Node> },
    Meet { lhs: Box<Node>, rhs: Box<Node> },
    Diff { lhs: Box<Node>, rhs: Box<Node> },
    MvNeg { arg: Box<Node> },
    Scalar { k: i64, arg: Box<Node> },
    Power { k: u32, arg: Box<Node> },
}

impl Node {
    pub fn x(index: usize) -> Node {
        Node::Var(Var::x(index))
    }

    pub fn z(index: usize) -> Node {
        Node::Var(Var::z(index))
    }

    pub fn var(v: Var) -> Node {
        Node::Var(v)
    }

    pub fn plus(lhs: Node, rhs: Node) -> Node {
        Node::Plus { lhs: Box::new(lhs), rhs: Box::new(rhs) }
    }

    pub fn neg(arg: Node) -> Node {
        Node::Neg { arg: Box::new(arg) }
    }

    pub fn minus(lhs: Node, rhs: Node) -> Node {
        Node::plus(lhs, Node::neg(rhs))
    }

    pub fn join(lhs: Node, rhs: Node) -> Node {
        Node::Join { lhs: Box::new(lhs), rhs: Box::new(rhs) }
    }

    pub fn meet(lhs: Node, rhs: Node) -> Node {
        Node::Meet { lhs: Box::new(lhs), rhs: Box::new(rhs) }
    }

    pub fn diff(lhs: Node, rhs: Node) -> Node {
        Node::Diff { lhs: Box::new(lhs), rhs: Box::new(rhs) }
    }

    pub fn mv_neg(arg: Node) -> Node {
        Node::MvNeg { arg: Box::new(arg) }
    }

    /// MV constant `1 = ~0`.
    pub fn one() -> Node {
        Node::mv_neg(Node::Zero)
    }

    pub fn scalar(k: i64, arg: Node) -> Node {
        Node::Scalar { k, arg: Box::new(arg) }
    }

    pub fn power(k: u32, arg: Node) -> Node {
        Node::Power { k, arg: Box::new(arg) }
    }

    /// `k t`, but written as plain `t` when `k = 1`.
    pub fn times(k: i64, arg: Node) -> Node {
        if k == 1 {
            arg
        } else {
            Node::scalar(k, arg)
        }
    }

    /// `t^k`, but written as plain `t` when `k = 1`.
    pub fn pow(k: u32, arg: Node) -> Node {
        if k == 1 {
            arg
        } else {
            Node::power(k, arg)
        }
    }

    /// MV `x * y := ~(~x + ~y)`.
    pub fn star(lhs: Node, rhs: Node) -> Node {
        Node::mv_neg(Node::plus(Node::mv_neg(lhs), Node::mv_neg(rhs)))
    }

    pub fn children(&self) -> Vec<&Node> {
        match self {
            Node::Var(_) | Node::Zero => vec![],
            Node::Plus { lhs, rhs }
            | Node::Join { lhs, rhs }
            | Node::Meet { lhs, rhs }
            | Node::Diff { lhs, rhs } => vec![lhs, rhs],
            Node::Neg { arg }
            | Node::MvNeg { arg }
            | Node::Scalar { arg, .. }
            | Node::Power { arg, .. } => vec![arg],
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<Var>) {
        if let Node::Var(v) = self {
            out.insert(*v);
        }
        for c in self.children() {
            c.collect_vars(out);
        }
    }

    pub fn mentions(&self, kind: VarKind) -> bool {
        match self {
            Node::Var(v) => v.kind == kind,
            _ => self.children().iter().any(|c| c.mentions(kind)),
        }
    }

    /// Replaces variables for which `f` returns a node; others stay.
    pub fn substitute(&self, f: &dyn Fn(Var) -> Option<Node>) -> Node {
        self.map_bottom_up(&|n| match n {
            Node::Var(v) => f(v).unwrap_or(Node::Var(v)),
            other => other,
        })
    }

    /// Rebuilds the tree, applying `f` to every node after its children.
    pub fn map_bottom_up(&self, f: &dyn Fn(Node) -> Node) -> Node {
        let rebuilt = match self {
            Node::Var(v) => Node::Var(*v),
            Node::Zero => Node::Zero,
            Node::Plus { lhs, rhs } => Node::plus(lhs.map_bottom_up(f), rhs.map_bottom_up(f)),
            Node::Join { lhs, rhs } => Node::join(lhs.map_bottom_up(f), rhs.map_bottom_up(f)),
            Node::Meet { lhs, rhs } => Node::meet(lhs.map_bottom_up(f), rhs.map_bottom_up(f)),
            Node::Diff { lhs, rhs } => Node::diff(lhs.map_bottom_up(f), rhs.map_bottom_up(f)),
            Node::Neg { arg } => Node::neg(arg.map_bottom_up(f)),
            Node::MvNeg { arg } => Node::mv_neg(arg.map_bottom_up(f)),
            Node::Scalar { k, arg } => Node::scalar(*k, arg.map_bottom_up(f)),
            Node::Power { k, arg } => Node::power(*k, arg.map_bottom_up(f)),
        };
        f(rebuilt)
    }

    /// Name of the operation at the root, as used in error messages.
    pub fn op_name(&self) -> &'static str {
        match self {
            Node::Var(_) => "variable",
            Node::Zero => "0",
            Node::Plus { .. } => "+",
            Node::Neg { .. } => "unary -",
            Node::Join { .. } => "\\/",
            Node::Meet { .. } => "/\\",
            Node::Diff { .. } => "-.",
            Node::MvNeg { .. } => "~",
            Node::Scalar { .. } => "scalar",
            Node::Power { .. } => "^",
        }
    }

    /// Checks that the root operation is admitted by `sig` (not recursive).
    pub fn check_root(&self, sig: Signature) -> Result<(), TermError> {
        let ok = match (self, sig) {
            (Node::Var(v), _) => v.index >= 1,
            (Node::Zero, _) | (Node::Plus { .. }, _) => true,
            (Node::Neg { .. }, s) => s == Signature::Group,
            (Node::Join { .. } | Node::Meet { .. }, s) => s != Signature::Hoop,
            // In groups `-.` is the macro `(x - y) \/ 0`.
            (Node::Diff { .. }, _) => true,
            (Node::MvNeg { .. }, s) => s == Signature::Mv,
            (Node::Scalar { .. }, Signature::Group) => true,
            (Node::Scalar { k, .. }, _) => *k >= 1,
            (Node::Power { k, .. }, s) => s == Signature::Mv && *k >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(TermError::SignatureViolation {
                op: self.op_name().to_string(),
                signature: sig,
                position: None,
            })
        }
    }

    pub fn check(&self, sig: Signature) -> Result<(), TermError> {
        self.check_root(sig)?;
        for c in self.children() {
            c.check(sig)?;
        }
        Ok(())
    }
}

/// A term together with the signature it lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Term {
    signature: Signature,
    term: Node,
}

impl Term {
    pub fn new(signature: Signature, node: Node) -> Result<Term, TermError> {
        node.check(signature)?;
        Ok(Term { signature, term: node })
    }

    pub(crate) fn new_unchecked(signature: Signature, node: Node) -> Term {
        debug_assert!(node.check(signature).is_ok(), "{node:?} not in {signature}");
        Term { signature, term: node }
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn node(&self) -> &Node {
        &self.term
    }

    pub fn into_node(self) -> Node {
        self.term
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.term.vars()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print::print_node(&self.term))
    }
}
