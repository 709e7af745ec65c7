use std::fmt;

use serde::{Deserialize, Serialize};

use super::ast::{Node, Signature, Var, VarKind};
use super::print::print_node;
use super::TermError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Equation {
    pub lhs: Node,
    pub rhs: Node,
}

impl Equation {
    pub fn new(lhs: Node, rhs: Node) -> Equation {
        Equation { lhs, rhs }
    }

    pub fn map(&self, f: impl Fn(&Node) -> Node) -> Equation {
        Equation::new(f(&self.lhs), f(&self.rhs))
    }

    pub fn substitute(&self, f: &dyn Fn(Var) -> Option<Node>) -> Equation {
        self.map(|t| t.substitute(f))
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", print_node(&self.lhs), print_node(&self.rhs))
    }
}

fn check_scope(sig: Signature, n: usize, m: usize, eqs: &[&Equation]) -> Result<(), TermError> {
    for eq in eqs {
        for side in [&eq.lhs, &eq.rhs] {
            side.check(sig)?;
            for v in side.vars() {
                let bound = match v.kind {
                    VarKind::X => n,
                    VarKind::Y | VarKind::Z => m,
                };
                if v.index > bound {
                    return Err(TermError::UnboundVariable(v.to_string()));
                }
            }
        }
    }
    Ok(())
}

/// `forall x1..xn exists! z1..zm : eq_1 & ... & eq_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EfdSentence {
    signature: Signature,
    n: usize,
    m: usize,
    equations: Vec<Equation>,
}

impl EfdSentence {
    pub fn new(
        signature: Signature,
        n: usize,
        m: usize,
        equations: Vec<Equation>,
    ) -> Result<EfdSentence, TermError> {
        if m == 0 {
            return Err(TermError::Malformed("an EFD-sentence needs at least one z-variable".into()));
        }
        if equations.is_empty() {
            return Err(TermError::Malformed("an EFD-sentence needs at least one equation".into()));
        }
        if equations.iter().any(|e| e.lhs.mentions(VarKind::Y) || e.rhs.mentions(VarKind::Y)) {
            return Err(TermError::Malformed("y-variables are not allowed in sentences".into()));
        }
        check_scope(signature, n, m, &equations.iter().collect::<Vec<_>>())?;
        Ok(EfdSentence { signature, n, m, equations })
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    /// `U(phi)`: the uniqueness quasi-identity, with `y1..ym` standing for
    /// the first copy of the existential block.
    pub fn uniqueness(&self) -> QuasiIdentity {
        let to_y = |v: Var| (v.kind == VarKind::Z).then(|| Node::Var(Var::y(v.index)));
        let mut hypotheses: Vec<Equation> =
            self.equations.iter().map(|e| e.substitute(&to_y)).collect();
        hypotheses.extend(self.equations.iter().cloned());
        let conclusions =
            (1..=self.m).map(|j| Equation::new(Node::Var(Var::y(j)), Node::z(j))).collect();
        QuasiIdentity { signature: self.signature, n: self.n, m: self.m, hypotheses, conclusions }
    }

    /// The existential half `E(phi) = forall x exists z alpha` in text form.
    pub fn existence_text(&self) -> String {
        let mut s = self.prefix_text(false);
        s.push_str(&self.matrix_text());
        s
    }

    fn prefix_text(&self, unique: bool) -> String {
        let mut s = String::new();
        if self.n > 0 {
            s.push_str("forall ");
            s.push_str(&binders('x', self.n));
            s.push(' ');
        }
        s.push_str(if unique { "exists! " } else { "exists " });
        s.push_str(&binders('z', self.m));
        s.push_str(" : ");
        s
    }

    fn matrix_text(&self) -> String {
        self.equations.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" & ")
    }
}

fn binders(prefix: char, count: usize) -> String {
    (1..=count).map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for EfdSentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.prefix_text(true), self.matrix_text())
    }
}

/// `forall x1..xn : t = s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Identity {
    signature: Signature,
    n: usize,
    equation: Equation,
}

impl Identity {
    pub fn new(signature: Signature, n: usize, equation: Equation) -> Result<Identity, TermError> {
        if equation.lhs.mentions(VarKind::Z) || equation.rhs.mentions(VarKind::Z) {
            return Err(TermError::Malformed("identities may only use x-variables".into()));
        }
        check_scope(signature, n, 0, &[&equation])?;
        Ok(Identity { signature, n, equation })
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn equation(&self) -> &Equation {
        &self.equation
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "forall {} : {}", binders('x', self.n), self.equation)
    }
}

/// `forall x y z : hypotheses -> conclusions`, as produced by
/// [`EfdSentence::uniqueness`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuasiIdentity {
    pub signature: Signature,
    pub n: usize,
    pub m: usize,
    pub hypotheses: Vec<Equation>,
    pub conclusions: Vec<Equation>,
}

impl fmt::Display for QuasiIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |eqs: &[Equation]| eqs.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" & ");
        let mut vars = Vec::new();
        if self.n > 0 {
            vars.push(binders('x', self.n));
        }
        vars.push(binders('y', self.m));
        vars.push(binders('z', self.m));
        write!(
            f,
            "forall {} : {} -> {}",
            vars.join(" "),
            join(&self.hypotheses),
            join(&self.conclusions)
        )
    }
}

/// Result of parsing a closed formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Statement {
    Sentence(EfdSentence),
    Identity(Identity),
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Sentence(s) => s.fmt(f),
            Statement::Identity(i) => i.fmt(f),
        }
    }
}
