//! Classes of models of AE-axiomatizable (Horn) theories and their order.

use std::fmt;

use serde_json::{json, Value};

use super::{LatticeError, PrimeSet};

/// `G`: Abelian l-groups (equivalently cancellative hoops); `P`: perfect
/// MV-algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    G,
    P,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::G => "G",
            Family::P => "P",
        }
    }

    pub fn parse(src: &str) -> Result<Family, LatticeError> {
        match src.trim().to_ascii_uppercase().as_str() {
            "G" => Ok(Family::G),
            "P" => Ok(Family::P),
            other => Err(LatticeError::Syntax(format!("unknown family `{other}` (expected G or P)"))),
        }
    }
}

/// A class of models within a family. `Divisible(S)` is the class of
/// divisible-by-`S` members; `Boolean` only occurs in family `P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AeClass {
    Trivial,
    Boolean,
    Divisible(PrimeSet),
}

impl AeClass {
    pub fn divisible_by(k: u64) -> AeClass {
        AeClass::Divisible(PrimeSet::of(k))
    }

    pub fn check(&self, family: Family) -> Result<(), LatticeError> {
        if family == Family::G && *self == AeClass::Boolean {
            Err(LatticeError::FamilyMismatch("the boolean class belongs to family P".into()))
        } else {
            Ok(())
        }
    }

    /// `{"class":"divisible","primes":[2,3]}` and friends.
    pub fn to_json(&self) -> Value {
        match self {
            AeClass::Trivial => json!({ "class": "trivial" }),
            AeClass::Boolean => json!({ "class": "boolean" }),
            AeClass::Divisible(PrimeSet::Finite(s)) => {
                json!({ "class": "divisible", "primes": s.iter().collect::<Vec<_>>() })
            }
            AeClass::Divisible(PrimeSet::Cofinite(e)) => {
                json!({ "class": "divisible", "primes": { "all_except": e.iter().collect::<Vec<_>>() } })
            }
        }
    }

    /// `{"family":"G","class":{"divisible":[2,3]}}` and friends.
    pub fn to_lattice_json(&self, family: Family) -> Value {
        let class = match self {
            AeClass::Trivial => json!("trivial"),
            AeClass::Boolean => json!("boolean"),
            AeClass::Divisible(s) => json!({ "divisible": s.to_json() }),
        };
        json!({ "family": family.name(), "class": class })
    }

    /// Reads `trivial`, `boolean`, `div:2,3`, `div:` or `div:*-2`.
    pub fn parse(src: &str) -> Result<AeClass, LatticeError> {
        let s = src.trim();
        match s.to_ascii_lowercase().as_str() {
            "trivial" => return Ok(AeClass::Trivial),
            "boolean" => return Ok(AeClass::Boolean),
            _ => {}
        }
        match s.split_once(':') {
            Some((head, rest)) if head.eq_ignore_ascii_case("div") => {
                Ok(AeClass::Divisible(PrimeSet::parse(rest)?))
            }
            _ => Err(LatticeError::Syntax(format!(
                "unknown class `{s}` (expected trivial, boolean or div:<primes>)"
            ))),
        }
    }
}

impl fmt::Display for AeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AeClass::Trivial => f.write_str("trivial"),
            AeClass::Boolean => f.write_str("boolean"),
            AeClass::Divisible(s) => write!(f, "divisible by {s}"),
        }
    }
}

/// Class inclusion `a <= b`.
pub fn includes(family: Family, a: &AeClass, b: &AeClass) -> Result<bool, LatticeError> {
    a.check(family)?;
    b.check(family)?;
    use AeClass::*;
    Ok(match (a, b) {
        (Trivial, _) => true,
        (_, Trivial) => false,
        (Boolean, _) => true,
        (Divisible(_), Boolean) => false,
        (Divisible(s1), Divisible(s2)) => s2.is_subset(s1),
    })
}

/// Intersection of the two classes.
pub fn meet(family: Family, a: &AeClass, b: &AeClass) -> Result<AeClass, LatticeError> {
    a.check(family)?;
    b.check(family)?;
    use AeClass::*;
    Ok(match (a, b) {
        (Trivial, _) | (_, Trivial) => Trivial,
        (Boolean, _) | (_, Boolean) => Boolean,
        (Divisible(s1), Divisible(s2)) => Divisible(s1.union(s2)),
    })
}

/// Least class containing both.
pub fn join(family: Family, a: &AeClass, b: &AeClass) -> Result<AeClass, LatticeError> {
    a.check(family)?;
    b.check(family)?;
    use AeClass::*;
    Ok(match (a, b) {
        (Trivial, x) | (x, Trivial) => x.clone(),
        (Boolean, x) | (x, Boolean) => x.clone(),
        (Divisible(s1), Divisible(s2)) => Divisible(s1.intersection(s2)),
    })
}
