//! Recursive-descent parser for terms, equations and sentences.
//!
//! Precedence from loosest to tightest: `\/`, `/\`, the additive operators
//! `+ - -.` (all left associative), prefix operators (`-`, `~`, scalar
//! `k t`), postfix `^k`, atoms.

use super::ast::{Node, Signature, Var, VarKind};
use super::sentence::{EfdSentence, Equation, Identity, Statement};
use super::TermError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(u64),
    Var(VarKind, usize),
    Plus,
    Minus,
    Monus,
    Join,
    Meet,
    Tilde,
    Caret,
    LParen,
    RParen,
    Eq,
    Amp,
    Colon,
    DotDot,
    Forall,
    ExistsUnique,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(n) => n.to_string(),
            Tok::Var(k, i) => format!("{}{}", k.prefix(), i),
            Tok::Plus => "+".into(),
            Tok::Minus => "-".into(),
            Tok::Monus => "-.".into(),
            Tok::Join => "\\/".into(),
            Tok::Meet => "/\\".into(),
            Tok::Tilde => "~".into(),
            Tok::Caret => "^".into(),
            Tok::LParen => "(".into(),
            Tok::RParen => ")".into(),
            Tok::Eq => "=".into(),
            Tok::Amp => "&".into(),
            Tok::Colon => ":".into(),
            Tok::DotDot => "..".into(),
            Tok::Forall => "forall".into(),
            Tok::ExistsUnique => "exists!".into(),
        }
    }
}

fn syntax(position: usize, message: impl Into<String>) -> TermError {
    TermError::Syntax { position, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, TermError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let two = |s: &str| src[i..].starts_with(s);
        let tok = if two("\\/") {
            i += 2;
            Tok::Join
        } else if two("/\\") {
            i += 2;
            Tok::Meet
        } else if two("-.") {
            i += 2;
            Tok::Monus
        } else if two("..") {
            i += 2;
            Tok::DotDot
        } else if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = src[start..i]
                .parse::<u64>()
                .map_err(|_| syntax(start, "numeral out of range"))?;
            Tok::Num(n)
        } else if c.is_ascii_alphabetic() {
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word = &src[start..i];
            match word {
                "forall" => Tok::Forall,
                "exists" => {
                    if i < bytes.len() && bytes[i] == b'!' {
                        i += 1;
                        Tok::ExistsUnique
                    } else {
                        return Err(syntax(start, "expected `exists!`"));
                    }
                }
                _ => {
                    let (head, digits) = word.split_at(1);
                    let kind = match head {
                        "x" => VarKind::X,
                        "z" => VarKind::Z,
                        _ => return Err(syntax(start, format!("unknown identifier `{word}`"))),
                    };
                    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(syntax(start, format!("malformed variable `{word}`")));
                    }
                    let index: usize = digits
                        .parse()
                        .map_err(|_| syntax(start, "variable index out of range"))?;
                    if index == 0 {
                        return Err(syntax(start, "variable indices start at 1"));
                    }
                    Tok::Var(kind, index)
                }
            }
        } else {
            i += 1;
            match c {
                b'+' => Tok::Plus,
                b'-' => Tok::Minus,
                b'~' => Tok::Tilde,
                b'^' => Tok::Caret,
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'=' => Tok::Eq,
                b'&' => Tok::Amp,
                b':' => Tok::Colon,
                _ => {
                    let ch = src[start..].chars().next().unwrap_or('?');
                    return Err(syntax(start, format!("unexpected character `{ch}`")));
                }
            }
        };
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    sig: Signature,
}

impl Parser {
    fn new(src: &str, sig: Signature) -> Result<Parser, TermError> {
        Ok(Parser { toks: lex(src)?, pos: 0, end: src.len(), sig })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_at(&self, offset: usize) -> Option<&Tok> {
        self.toks.get(self.pos + offset).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &Tok) -> Result<(), TermError> {
        if self.eat(t) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("expected `{}`", t.describe())))
        }
    }

    fn unexpected(&self, what: &str) -> TermError {
        match self.peek() {
            Some(t) => syntax(self.offset(), format!("{what}, found `{}`", t.describe())),
            None => syntax(self.end, format!("{what}, found end of input")),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn build(&self, node: Node, at: usize) -> Result<Node, TermError> {
        node.check_root(self.sig).map_err(|e| match e {
            TermError::SignatureViolation { op, signature, .. } => TermError::SignatureViolation {
                op,
                signature,
                position: Some(at),
            },
            other => other,
        })?;
        Ok(node)
    }

    fn term(&mut self) -> Result<Node, TermError> {
        let mut lhs = self.meet()?;
        while self.peek() == Some(&Tok::Join) {
            let at = self.offset();
            self.bump();
            let rhs = self.meet()?;
            lhs = self.build(Node::join(lhs, rhs), at)?;
        }
        Ok(lhs)
    }

    fn meet(&mut self) -> Result<Node, TermError> {
        let mut lhs = self.sum()?;
        while self.peek() == Some(&Tok::Meet) {
            let at = self.offset();
            self.bump();
            let rhs = self.sum()?;
            lhs = self.build(Node::meet(lhs, rhs), at)?;
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Node, TermError> {
        let mut lhs = self.unary()?;
        loop {
            let at = self.offset();
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = self.build(Node::plus(lhs, rhs), at)?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.unary()?;
                    let negated = self.build(Node::neg(rhs), at)?;
                    lhs = Node::plus(lhs, negated);
                }
                Some(Tok::Monus) => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = self.build(Node::diff(lhs, rhs), at)?;
                }
                _ => return Ok(lhs),
            }
        }
    }

    /// Tokens that may begin the operand of a scalar. A minus sign is left
    /// out so that `0 - x1` reads as a subtraction.
    fn starts_scalar_operand(t: Option<&Tok>) -> bool {
        matches!(t, Some(Tok::Var(..) | Tok::Num(_) | Tok::LParen | Tok::Tilde))
    }

    fn unary(&mut self) -> Result<Node, TermError> {
        let at = self.offset();
        match self.peek() {
            Some(Tok::Minus) => {
                if let Some(Tok::Num(k)) = self.peek_at(1) {
                    let k = *k;
                    if Self::starts_scalar_operand(self.peek_at(2)) {
                        self.pos += 2;
                        let k = i64::try_from(k).map_err(|_| syntax(at, "scalar out of range"))?;
                        let arg = self.unary()?;
                        return self.build(Node::scalar(-k, arg), at);
                    }
                }
                self.bump();
                let arg = self.unary()?;
                self.build(Node::neg(arg), at)
            }
            Some(Tok::Tilde) => {
                self.bump();
                let arg = self.unary()?;
                self.build(Node::mv_neg(arg), at)
            }
            Some(Tok::Num(k)) if Self::starts_scalar_operand(self.peek_at(1)) => {
                let k = i64::try_from(*k).map_err(|_| syntax(at, "scalar out of range"))?;
                self.bump();
                let arg = self.unary()?;
                self.build(Node::scalar(k, arg), at)
            }
            _ => self.postfix(),
        }
    }

    fn postfix(&mut self) -> Result<Node, TermError> {
        let mut node = self.atom()?;
        while self.peek() == Some(&Tok::Caret) {
            let at = self.offset();
            self.bump();
            let k = match self.bump() {
                Some(Tok::Num(k)) if k >= 1 => {
                    u32::try_from(k).map_err(|_| syntax(at, "exponent out of range"))?
                }
                _ => return Err(syntax(at, "expected a positive exponent after `^`")),
            };
            node = self.build(Node::power(k, node), at)?;
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<Node, TermError> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Var(kind, index)) => Ok(Node::Var(Var { kind, index })),
            Some(Tok::Num(0)) => Ok(Node::Zero),
            Some(Tok::Num(n)) => Err(syntax(
                at,
                format!("numeral `{n}` must be followed by a term (only `0` is a constant)"),
            )),
            Some(Tok::LParen) => {
                let inner = self.term()?;
                self.expect(&Tok::RParen)?;
                Ok(inner)
            }
            Some(t) => Err(syntax(at, format!("expected a term, found `{}`", t.describe()))),
            None => Err(syntax(self.end, "expected a term, found end of input")),
        }
    }

    fn equation(&mut self) -> Result<Equation, TermError> {
        let lhs = self.term()?;
        self.expect(&Tok::Eq)?;
        let rhs = self.term()?;
        Ok(Equation::new(lhs, rhs))
    }

    fn equations(&mut self) -> Result<Vec<Equation>, TermError> {
        let mut eqs = vec![self.equation()?];
        while self.eat(&Tok::Amp) {
            eqs.push(self.equation()?);
        }
        Ok(eqs)
    }

    /// Reads `v1 v2 ...` or `v1 .. vn` of the given kind; returns the count.
    fn binder_list(&mut self, kind: VarKind) -> Result<usize, TermError> {
        let mut count = 0;
        loop {
            let at = self.offset();
            match self.peek() {
                Some(Tok::Var(k, i)) if *k == kind => {
                    let i = *i;
                    if i != count + 1 {
                        return Err(syntax(
                            at,
                            format!("expected {}{} in the binder list", kind.prefix(), count + 1),
                        ));
                    }
                    self.bump();
                    count = i;
                }
                Some(Tok::DotDot) if count > 0 => {
                    self.bump();
                    let at = self.offset();
                    match self.bump() {
                        Some(Tok::Var(k, i)) if k == kind && i > count => count = i,
                        _ => {
                            return Err(syntax(
                                at,
                                format!("expected a {}-variable closing the range", kind.prefix()),
                            ))
                        }
                    }
                }
                _ => return Ok(count),
            }
        }
    }

    fn sentence(&mut self) -> Result<Statement, TermError> {
        let mut n = 0;
        let has_forall = self.eat(&Tok::Forall);
        if has_forall {
            n = self.binder_list(VarKind::X)?;
        }
        if self.eat(&Tok::ExistsUnique) {
            let m = self.binder_list(VarKind::Z)?;
            if m == 0 {
                return Err(self.unexpected("expected at least one z-variable after `exists!`"));
            }
            self.expect(&Tok::Colon)?;
            let eqs = self.equations()?;
            Ok(Statement::Sentence(EfdSentence::new(self.sig, n, m, eqs)?))
        } else if has_forall {
            self.expect(&Tok::Colon)?;
            let eq = self.equation()?;
            Ok(Statement::Identity(Identity::new(self.sig, n, eq)?))
        } else {
            Err(self.unexpected("expected `forall` or `exists!`"))
        }
    }

    fn finish(&self) -> Result<(), TermError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("expected end of input"))
        }
    }
}

/// Parses a single term in the given signature.
pub fn parse_term(src: &str, sig: Signature) -> Result<Node, TermError> {
    let mut p = Parser::new(src, sig)?;
    let node = p.term()?;
    p.finish()?;
    Ok(node)
}

/// Parses `t = s`.
pub fn parse_equation(src: &str, sig: Signature) -> Result<Equation, TermError> {
    let mut p = Parser::new(src, sig)?;
    let eq = p.equation()?;
    p.finish()?;
    Ok(eq)
}

/// Parses either an EFD-sentence or a universally quantified identity.
pub fn parse_statement(src: &str, sig: Signature) -> Result<Statement, TermError> {
    let mut p = Parser::new(src, sig)?;
    let st = p.sentence()?;
    p.finish()?;
    Ok(st)
}

/// Parses `forall x1 .. xn exists! z1 .. zm : eq & ... & eq`.
pub fn parse_sentence(src: &str, sig: Signature) -> Result<EfdSentence, TermError> {
    match parse_statement(src, sig)? {
        Statement::Sentence(s) => Ok(s),
        Statement::Identity(_) => Err(syntax(0, "expected an `exists!` block")),
    }
}

/// Parses `forall x1 .. xn : t = s`.
pub fn parse_identity(src: &str, sig: Signature) -> Result<Identity, TermError> {
    match parse_statement(src, sig)? {
        Statement::Identity(i) => Ok(i),
        Statement::Sentence(_) => Err(syntax(0, "expected an identity, found an `exists!` block")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_and_power_bind_tighter_than_sum() {
        let t = parse_term("2 z1^2 + x1", Signature::Mv).unwrap();
        assert_eq!(t, Node::plus(Node::scalar(2, Node::power(2, Node::z(1))), Node::x(1)));
    }

    #[test]
    fn binary_minus_is_plus_neg() {
        let t = parse_term("x1 - x2", Signature::Group).unwrap();
        assert_eq!(t, Node::minus(Node::x(1), Node::x(2)));
        let t = parse_term("0 - x1", Signature::Group).unwrap();
        assert_eq!(t, Node::minus(Node::Zero, Node::x(1)));
    }

    #[test]
    fn negative_scalar() {
        let t = parse_term("-3 x1", Signature::Group).unwrap();
        assert_eq!(t, Node::scalar(-3, Node::x(1)));
        let t = parse_term("-(3 x1)", Signature::Group).unwrap();
        assert_eq!(t, Node::neg(Node::scalar(3, Node::x(1))));
    }

    #[test]
    fn join_is_loosest() {
        let t = parse_term("x1 /\\ x2 \\/ x3", Signature::Group).unwrap();
        assert_eq!(t, Node::join(Node::meet(Node::x(1), Node::x(2)), Node::x(3)));
    }

    #[test]
    fn rejects_meet_in_hoop() {
        let e = parse_term("x1 /\\ x2", Signature::Hoop).unwrap_err();
        assert!(matches!(e, TermError::SignatureViolation { position: Some(3), .. }), "{e:?}");
    }

    #[test]
    fn rejects_bare_numeral() {
        assert!(parse_term("x1 + 2", Signature::Group).is_err());
        assert!(parse_term("x0", Signature::Group).is_err());
        assert!(parse_term("y1", Signature::Group).is_err());
    }

    #[test]
    fn sentence_with_range_binders() {
        let s = parse_sentence("forall x1 .. x3 exists! z1 z2 : z1 = x1 & z2 = x3", Signature::Group)
            .unwrap();
        assert_eq!((s.n(), s.m(), s.equations().len()), (3, 2, 2));
    }

    #[test]
    fn sentence_without_universal_block() {
        let s = parse_sentence("exists! z1 : z1 + z1 = z1", Signature::Group).unwrap();
        assert_eq!((s.n(), s.m()), (0, 1));
    }

    #[test]
    fn undeclared_variable_is_rejected() {
        assert!(parse_sentence("forall x1 exists! z1 : z1 = x2", Signature::Group).is_err());
    }
}
