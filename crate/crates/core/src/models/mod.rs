//! Concrete witness algebras: subgroups of `Q`, lexicographic products,
//! positive cones, perfect MV-algebras `Gamma(Z x G)` and the two-element
//! Boolean algebra.

mod check;
mod element;
mod eval;
pub mod pl1;
mod sample;

use std::collections::BTreeSet;
use std::fmt;

use crate::lattice::{is_prime, PrimeSet};
use crate::term::{Signature, TermError};

pub use check::{
    check_sentence_sampled, check_uniqueness_sampled, holds_delta_exact, holds_epsilon_exact,
    assignment_json, check_identity_sampled, holds_identity_exhaustive, holds_quasi_identity_exhaustive,
    sample_assignments, solve_at, CheckOptions, Confidence, DEFAULT_BUDGET, DEFAULT_SEED,
    Failure, PointOutcome, Verdict,
};
pub use element::Element;
pub use eval::{eval, eval_equation, is_radical, Assignment};
pub use sample::{sample_element, small_elements};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("{0}")]
    Descriptor(String),
    #[error("{signature} terms cannot be evaluated in {algebra}")]
    SpeciesMismatch { signature: Signature, algebra: String },
    #[error("{element} is not an element of {algebra}")]
    NotMember { element: String, algebra: String },
    #[error("variable {0} is unassigned")]
    Unassigned(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Term(#[from] TermError),
}

/// A concrete algebra in which terms can be evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WitnessAlgebra {
    /// One-element algebra of the given signature.
    Trivial(Signature),
    IntegerGroup,
    RationalGroup,
    /// Rationals whose denominators only involve primes from the set.
    LocalizedRationals(BTreeSet<u64>),
    /// `Z x G` ordered lexicographically.
    LexProduct(Box<WitnessAlgebra>),
    /// The cancellative hoop of nonnegative elements of a group.
    PositiveCone(Box<WitnessAlgebra>),
    /// The perfect MV-algebra `Gamma(Z x G, (1, 0))`.
    GammaPerfect(Box<WitnessAlgebra>),
    TwoMv,
}

impl WitnessAlgebra {
    pub fn localized(primes: impl IntoIterator<Item = u64>) -> Result<WitnessAlgebra, ModelError> {
        let set: BTreeSet<u64> = primes.into_iter().collect();
        if let Some(p) = set.iter().find(|&&p| !is_prime(p)) {
            return Err(ModelError::Descriptor(format!("{p} is not prime")));
        }
        Ok(WitnessAlgebra::LocalizedRationals(set))
    }

    pub fn gamma(inner: WitnessAlgebra) -> Result<WitnessAlgebra, ModelError> {
        inner.require_group()?;
        Ok(WitnessAlgebra::GammaPerfect(Box::new(inner)))
    }

    pub fn cone(inner: WitnessAlgebra) -> Result<WitnessAlgebra, ModelError> {
        inner.require_group()?;
        Ok(WitnessAlgebra::PositiveCone(Box::new(inner)))
    }

    pub fn lex(inner: WitnessAlgebra) -> Result<WitnessAlgebra, ModelError> {
        inner.require_group()?;
        Ok(WitnessAlgebra::LexProduct(Box::new(inner)))
    }

    fn require_group(&self) -> Result<(), ModelError> {
        if self.is_group() {
            Ok(())
        } else {
            Err(ModelError::Descriptor(format!("{self} is not a totally ordered group")))
        }
    }

    pub fn is_group(&self) -> bool {
        matches!(
            self,
            WitnessAlgebra::IntegerGroup
                | WitnessAlgebra::RationalGroup
                | WitnessAlgebra::LocalizedRationals(_)
                | WitnessAlgebra::LexProduct(_)
        )
    }

    /// Signature whose terms this algebra interprets.
    pub fn species(&self) -> Signature {
        match self {
            WitnessAlgebra::Trivial(s) => *s,
            WitnessAlgebra::PositiveCone(_) => Signature::Hoop,
            WitnessAlgebra::GammaPerfect(_) | WitnessAlgebra::TwoMv => Signature::Mv,
            _ => Signature::Group,
        }
    }

    /// Primes by which the group is divisible, for subgroups of `Q`.
    pub fn rational_primes(&self) -> Option<PrimeSet> {
        match self {
            WitnessAlgebra::IntegerGroup => Some(PrimeSet::empty()),
            WitnessAlgebra::RationalGroup => Some(PrimeSet::all()),
            WitnessAlgebra::LocalizedRationals(s) => Some(PrimeSet::Finite(s.clone())),
            _ => None,
        }
    }

    /// Parses `z`, `q`, `qs:2,3`, `lex(z,G)`, `cone(G)`, `gamma(G)`, `two`,
    /// or `trivial:<signature>`.
    pub fn parse(src: &str) -> Result<WitnessAlgebra, ModelError> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = s.to_ascii_lowercase();
        let bad = || ModelError::Descriptor(format!("unknown model `{src}`"));
        let inner = |name: &str| -> Option<&str> {
            lower.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')
        };
        match lower.as_str() {
            "z" | "int" => return Ok(WitnessAlgebra::IntegerGroup),
            "q" | "rat" => return Ok(WitnessAlgebra::RationalGroup),
            "two" | "2" => return Ok(WitnessAlgebra::TwoMv),
            _ => {}
        }
        if let Some(rest) = lower.strip_prefix("qs:") {
            let primes = rest
                .split(',')
                .filter(|w| !w.is_empty())
                .map(|w| w.parse::<u64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            return WitnessAlgebra::localized(primes);
        }
        if let Some(rest) = lower.strip_prefix("trivial:") {
            let sig: Signature = rest.parse()?;
            return Ok(WitnessAlgebra::Trivial(sig));
        }
        if let Some(args) = inner("lex") {
            let arg = args.strip_prefix("z,").unwrap_or(args);
            return WitnessAlgebra::lex(WitnessAlgebra::parse(arg)?);
        }
        if let Some(arg) = inner("cone") {
            return WitnessAlgebra::cone(WitnessAlgebra::parse(arg)?);
        }
        if let Some(arg) = inner("gamma") {
            return WitnessAlgebra::gamma(WitnessAlgebra::parse(arg)?);
        }
        Err(bad())
    }
}

impl fmt::Display for WitnessAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessAlgebra::Trivial(s) => write!(f, "trivial:{s}"),
            WitnessAlgebra::IntegerGroup => f.write_str("z"),
            WitnessAlgebra::RationalGroup => f.write_str("q"),
            WitnessAlgebra::LocalizedRationals(s) => {
                let list: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                write!(f, "qs:{}", list.join(","))
            }
            WitnessAlgebra::LexProduct(g) => write!(f, "lex(z,{g})"),
            WitnessAlgebra::PositiveCone(g) => write!(f, "cone({g})"),
            WitnessAlgebra::GammaPerfect(g) => write!(f, "gamma({g})"),
            WitnessAlgebra::TwoMv => f.write_str("two"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors_roundtrip() {
        for d in ["z", "q", "qs:2,3", "lex(z,qs:2)", "gamma(qs:2,3)", "cone(q)", "two", "trivial:mv", "qs:"] {
            let a = WitnessAlgebra::parse(d).unwrap();
            assert_eq!(a.to_string(), d);
        }
    }

    #[test]
    fn rejects_nested_gamma() {
        assert!(WitnessAlgebra::parse("gamma(gamma(q))").is_err());
        assert!(WitnessAlgebra::parse("qs:4").is_err());
    }
}
