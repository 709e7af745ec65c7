//! Algebraic expansions of balanced l-group logic and Lukasiewicz logic by
//! divisibility operators, and their interpretability order.

use std::fmt;

use serde_json::{json, Value};

use super::axioms::{emit_axioms, AxiomSchema};
use super::class::{includes, AeClass, Family};
use super::{LatticeError, PrimeSet};

/// Base logic: `Bal` is algebraized by Abelian l-groups, `Lp` (Lukasiewicz
/// logic of perfect MV-algebras) by perfect MV-algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseLogic {
    Bal,
    Lp,
}

impl BaseLogic {
    pub fn family(self) -> Family {
        match self {
            BaseLogic::Bal => Family::G,
            BaseLogic::Lp => Family::P,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BaseLogic::Bal => "Bal",
            BaseLogic::Lp => "LP",
        }
    }

    /// Equivalence formulas `Delta(x, y)` of the algebraization.
    pub fn equivalence_formulas(self) -> &'static [&'static str] {
        match self {
            BaseLogic::Bal => &["x -> y"],
            BaseLogic::Lp => &["x <-> y"],
        }
    }

    /// Defining equations `eps(x)` of the algebraization.
    pub fn defining_equations(self) -> &'static [&'static str] {
        match self {
            BaseLogic::Bal => &["x = 0"],
            BaseLogic::Lp => &["x = 1"],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Special {
    None,
    /// The expansion proving everything; its class is trivial.
    Inconsistent,
    /// Classical logic, reached from `Lp` by collapsing to Boolean algebras.
    Classical,
}

/// `base^S`, or one of the special expansions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LogicExpansion {
    pub base: BaseLogic,
    pub primes: PrimeSet,
    pub special: Special,
}

impl LogicExpansion {
    pub fn new(base: BaseLogic, primes: PrimeSet) -> LogicExpansion {
        LogicExpansion { base, primes, special: Special::None }
    }

    pub fn inconsistent(base: BaseLogic) -> LogicExpansion {
        LogicExpansion { base, primes: PrimeSet::empty(), special: Special::Inconsistent }
    }

    pub fn classical() -> LogicExpansion {
        LogicExpansion { base: BaseLogic::Lp, primes: PrimeSet::empty(), special: Special::Classical }
    }

    /// Class of the equivalent algebraic semantics.
    pub fn class(&self) -> Result<AeClass, LatticeError> {
        match (self.special, self.base) {
            (Special::Inconsistent, _) => Ok(AeClass::Trivial),
            (Special::Classical, BaseLogic::Lp) => Ok(AeClass::Boolean),
            (Special::Classical, BaseLogic::Bal) => {
                Err(LatticeError::FamilyMismatch("Bal has no classical expansion".into()))
            }
            (Special::None, _) => Ok(AeClass::Divisible(self.primes.clone())),
        }
    }

    pub fn axioms(&self) -> Result<Vec<AxiomSchema>, LatticeError> {
        emit_axioms(self)
    }

    /// Reads `bal:2,3`, `lp:`, `lp:*-2`, `bal:inconsistent`, `lp:classical`.
    pub fn parse(src: &str) -> Result<LogicExpansion, LatticeError> {
        let (head, rest) = src
            .trim()
            .split_once(':')
            .ok_or_else(|| LatticeError::Syntax(format!("expected <base>:<primes>, found `{src}`")))?;
        let base = match head.trim().to_ascii_lowercase().as_str() {
            "bal" => BaseLogic::Bal,
            "lp" => BaseLogic::Lp,
            other => return Err(LatticeError::Syntax(format!("unknown base logic `{other}`"))),
        };
        match rest.trim().to_ascii_lowercase().as_str() {
            "inconsistent" => Ok(LogicExpansion::inconsistent(base)),
            "classical" if base == BaseLogic::Lp => Ok(LogicExpansion::classical()),
            "classical" => Err(LatticeError::FamilyMismatch("Bal has no classical expansion".into())),
            primes => Ok(LogicExpansion::new(base, PrimeSet::parse(primes)?)),
        }
    }
}

impl fmt::Display for LogicExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.special {
            Special::Inconsistent => write!(f, "{}^inconsistent", self.base.name()),
            Special::Classical => f.write_str("classical"),
            Special::None => write!(f, "{}^{}", self.base.name(), self.primes),
        }
    }
}

/// How two expansions of the same base compare under interpretability.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpansionOrder {
    Equipollent,
    /// A morphism from the first expansion into the second.
    Forward,
    /// A morphism from the second expansion into the first.
    Backward,
    Incomparable,
}

impl ExpansionOrder {
    pub fn to_json(self) -> Value {
        match self {
            ExpansionOrder::Equipollent => json!({ "relation": "equipollent" }),
            ExpansionOrder::Forward => json!({ "relation": "morphism-exists", "direction": "forward" }),
            ExpansionOrder::Backward => json!({ "relation": "morphism-exists", "direction": "backward" }),
            ExpansionOrder::Incomparable => json!({ "relation": "incomparable" }),
        }
    }
}

/// Expansion `e1` maps into `e2` exactly when the models of `e2` form a
/// subclass of the models of `e1`.
pub fn expansion_order(
    e1: &LogicExpansion,
    e2: &LogicExpansion,
) -> Result<ExpansionOrder, LatticeError> {
    if e1.base != e2.base {
        return Err(LatticeError::BaseMismatch(e1.base.name(), e2.base.name()));
    }
    let family = e1.base.family();
    let (c1, c2) = (e1.class()?, e2.class()?);
    let forward = includes(family, &c2, &c1)?;
    let backward = includes(family, &c1, &c2)?;
    Ok(match (forward, backward) {
        (true, true) => ExpansionOrder::Equipollent,
        (true, false) => ExpansionOrder::Forward,
        (false, true) => ExpansionOrder::Backward,
        (false, false) => ExpansionOrder::Incomparable,
    })
}
