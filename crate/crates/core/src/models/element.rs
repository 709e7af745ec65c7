use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ModelError, WitnessAlgebra};
use crate::geometry::{fmt_q, parse_q, Q};

/// An element of a witness algebra.
///
/// Subgroups of `Q` use `Num`; lexicographic products and perfect
/// MV-algebras use `Pair(i, g)` with `i` the integer coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Num(Q),
    Pair(BigInt, Box<Element>),
    Bit(bool),
    Unit,
}

impl Element {
    pub fn int(v: i64) -> Element {
        Element::Num(Q::from_integer(BigInt::from(v)))
    }

    pub fn ratio(n: i64, d: i64) -> Element {
        Element::Num(Q::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn pair(i: i64, g: Element) -> Element {
        Element::Pair(BigInt::from(i), Box::new(g))
    }

    pub fn as_num(&self) -> Option<&Q> {
        match self {
            Element::Num(q) => Some(q),
            _ => None,
        }
    }

    /// Parses a literal for `a`: `p/q`, `(i, g)`, `0`/`1` in the Boolean
    /// algebra, `*` in a trivial algebra.
    pub fn parse(a: &WitnessAlgebra, src: &str) -> Result<Element, ModelError> {
        let s = src.trim();
        let bad = || ModelError::Descriptor(format!("cannot read `{src}` as an element of {a}"));
        let e = match a {
            WitnessAlgebra::Trivial(_) => Element::Unit,
            WitnessAlgebra::TwoMv => match s {
                "0" => Element::Bit(false),
                "1" => Element::Bit(true),
                _ => return Err(bad()),
            },
            WitnessAlgebra::IntegerGroup
            | WitnessAlgebra::RationalGroup
            | WitnessAlgebra::LocalizedRationals(_) => Element::Num(parse_q(s).ok_or_else(bad)?),
            WitnessAlgebra::PositiveCone(g) => Element::parse(g, s)?,
            WitnessAlgebra::LexProduct(g) | WitnessAlgebra::GammaPerfect(g) => {
                let body = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
                let (i, rest) = split_top_comma(body).ok_or_else(bad)?;
                let i: BigInt = i.trim().parse().map_err(|_| bad())?;
                Element::Pair(i, Box::new(Element::parse(g, rest)?))
            }
        };
        if !e.is_member(a) {
            return Err(ModelError::NotMember { element: e.to_string(), algebra: a.to_string() });
        }
        Ok(e)
    }

    pub fn is_member(&self, a: &WitnessAlgebra) -> bool {
        match (a, self) {
            (WitnessAlgebra::Trivial(_), Element::Unit) => true,
            (WitnessAlgebra::TwoMv, Element::Bit(_)) => true,
            (WitnessAlgebra::IntegerGroup, Element::Num(q)) => q.is_integer(),
            (WitnessAlgebra::RationalGroup, Element::Num(_)) => true,
            (WitnessAlgebra::LocalizedRationals(s), Element::Num(q)) => {
                let mut d = q.denom().clone();
                for &p in s {
                    let p = BigInt::from(p);
                    while (&d % &p).is_zero() {
                        d /= &p;
                    }
                }
                d.is_one()
            }
            (WitnessAlgebra::LexProduct(g), Element::Pair(_, e)) => e.is_member(g),
            (WitnessAlgebra::PositiveCone(g), e) => e.is_member(g) && e.g_sign(g) != Ordering::Less,
            (WitnessAlgebra::GammaPerfect(g), Element::Pair(i, e)) => {
                e.is_member(g)
                    && ((i.is_zero() && e.g_sign(g) != Ordering::Less)
                        || (i.is_one() && e.g_sign(g) != Ordering::Greater))
            }
            _ => false,
        }
    }

    fn g_sign(&self, g: &WitnessAlgebra) -> Ordering {
        self.g_cmp(&Element::group_zero(g))
    }

    pub fn group_zero(g: &WitnessAlgebra) -> Element {
        match g {
            WitnessAlgebra::LexProduct(inner) => {
                Element::Pair(BigInt::zero(), Box::new(Element::group_zero(inner)))
            }
            _ => Element::Num(Q::zero()),
        }
    }

    pub fn g_add(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Num(a), Element::Num(b)) => Element::Num(a + b),
            (Element::Pair(i, a), Element::Pair(j, b)) => Element::Pair(i + j, Box::new(a.g_add(b))),
            _ => panic!("mismatched group elements {self} and {other}"),
        }
    }

    pub fn g_neg(&self) -> Element {
        match self {
            Element::Num(a) => Element::Num(-a),
            Element::Pair(i, a) => Element::Pair(-i, Box::new(a.g_neg())),
            _ => panic!("not a group element: {self}"),
        }
    }

    pub fn g_sub(&self, other: &Element) -> Element {
        self.g_add(&other.g_neg())
    }

    pub fn g_scale(&self, k: i64) -> Element {
        match self {
            Element::Num(a) => Element::Num(a * Q::from_integer(BigInt::from(k))),
            Element::Pair(i, a) => Element::Pair(i * k, Box::new(a.g_scale(k))),
            _ => panic!("not a group element: {self}"),
        }
    }

    /// Lexicographic order of group elements.
    pub fn g_cmp(&self, other: &Element) -> Ordering {
        match (self, other) {
            (Element::Num(a), Element::Num(b)) => a.cmp(b),
            (Element::Pair(i, a), Element::Pair(j, b)) => i.cmp(j).then_with(|| a.g_cmp(b)),
            _ => panic!("mismatched group elements {self} and {other}"),
        }
    }

    pub fn g_max(&self, other: &Element) -> Element {
        if self.g_cmp(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn g_min(&self, other: &Element) -> Element {
        if self.g_cmp(other) == Ordering::Greater {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

fn split_top_comma(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Num(q) => f.write_str(&fmt_q(q)),
            Element::Pair(i, e) => write!(f, "({i}, {e})"),
            Element::Bit(b) => f.write_str(if *b { "1" } else { "0" }),
            Element::Unit => f.write_str("*"),
        }
    }
}
