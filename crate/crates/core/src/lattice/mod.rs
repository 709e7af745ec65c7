//! AE-classes of Abelian l-groups and perfect MV-algebras, the matching
//! algebraic expansions of the base logics, and their order.

mod axioms;
mod class;
mod expansion;
mod poset;
mod primes;

pub use axioms::{emit_axioms, AxiomSchema, Connective};
pub use class::{includes, join, meet, AeClass, Family};
pub use expansion::{expansion_order, BaseLogic, ExpansionOrder, LogicExpansion, Special};
pub use poset::Poset;
pub use primes::{is_prime, prime_factors, PrimeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("family mismatch: {0}")]
    FamilyMismatch(String),
    #[error("cannot compare expansions of different base logics ({0} vs {1})")]
    BaseMismatch(&'static str, &'static str),
    #[error("{0} has no finite list of prime axioms")]
    NoFiniteAxioms(String),
    #[error("{0}")]
    Syntax(String),
}

/// Subsets of `primes`, smallest first by bitmask.
pub fn subsets(primes: &[u64]) -> Vec<PrimeSet> {
    (0..1u32 << primes.len())
        .map(|mask| {
            PrimeSet::Finite(
                primes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect(),
            )
        })
        .collect()
}

/// The finite sub-poset `{trivial} (+ {boolean}) + {Div(S) : S subset of primes}`
/// of the class lattice of `family`, ordered by inclusion.
pub fn class_subposet(family: Family, primes: &[u64]) -> (Vec<AeClass>, Poset) {
    let mut classes = vec![AeClass::Trivial];
    if family == Family::P {
        classes.push(AeClass::Boolean);
    }
    classes.extend(subsets(primes).into_iter().map(AeClass::Divisible));
    let poset = Poset::from_relation(classes.len(), |a, b| {
        includes(family, &classes[a], &classes[b]).expect("same family")
    });
    (classes, poset)
}

/// The finite sub-poset of expansions of `base` by subsets of `primes`,
/// plus the special expansions, ordered by existence of a morphism.
pub fn expansion_subposet(base: BaseLogic, primes: &[u64]) -> (Vec<LogicExpansion>, Poset) {
    let mut exps: Vec<LogicExpansion> =
        subsets(primes).into_iter().map(|s| LogicExpansion::new(base, s)).collect();
    if base == BaseLogic::Lp {
        exps.push(LogicExpansion::classical());
    }
    exps.push(LogicExpansion::inconsistent(base));
    let poset = Poset::from_relation(exps.len(), |a, b| {
        matches!(
            expansion_order(&exps[a], &exps[b]).expect("same base"),
            ExpansionOrder::Forward | ExpansionOrder::Equipollent
        )
    });
    (exps, poset)
}

/// Outcome of comparing the finite class and expansion posets with the
/// expected ordinal sums.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct StructureReport {
    pub g_classes_match: bool,
    pub p_classes_match: bool,
    pub bal_expansions_match: bool,
    pub lp_expansions_match: bool,
}

impl StructureReport {
    pub fn all(&self) -> bool {
        self.g_classes_match && self.p_classes_match && self.bal_expansions_match && self.lp_expansions_match
    }
}

/// Checks `1 + 2^k`, `2 + 2^k` and their duals for the primes given.
pub fn structure_check(primes: &[u64]) -> StructureReport {
    let k = primes.len() as u32;
    let cube = Poset::boolean(k);
    let g_shape = Poset::chain(1).ordinal_sum(&cube);
    let p_shape = Poset::chain(2).ordinal_sum(&cube);
    StructureReport {
        g_classes_match: class_subposet(Family::G, primes).1.is_isomorphic(&g_shape),
        p_classes_match: class_subposet(Family::P, primes).1.is_isomorphic(&p_shape),
        bal_expansions_match: expansion_subposet(BaseLogic::Bal, primes).1.is_isomorphic(&g_shape.dual()),
        lp_expansions_match: expansion_subposet(BaseLogic::Lp, primes).1.is_isomorphic(&p_shape.dual()),
    }
}
