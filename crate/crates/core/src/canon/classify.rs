//! Classification of finite sets of group sentences into AE-classes.

use serde::Serialize;
use serde_json::{json, Value};

use super::overlay::overlay;
use super::normal::x_coords;
use super::reduce::{reduce_delta_kt, DeltaKt};
use super::solve::{to_delta_kt, SingleOutput};
use super::CanonError;
use crate::lattice::{meet, AeClass, Family, PrimeSet};
use crate::term::{EfdSentence, Identity, Node, Signature, Statement};

/// What one input contributed to the classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupStep {
    /// Reduced to `delta_{k'}`.
    Reduced { input: String, delta: String, k: u64, k_prime: u64 },
    /// Fails in `Q`, so only the trivial group satisfies it.
    FailsInQ { input: String, reason: SingleOutput },
    /// An identity true in every l-group.
    ValidIdentity { input: String },
    /// An identity that only the trivial group satisfies.
    TrivialIdentity { input: String },
}

impl GroupStep {
    pub fn class(&self) -> AeClass {
        match self {
            GroupStep::Reduced { k_prime, .. } => AeClass::divisible_by(*k_prime),
            GroupStep::FailsInQ { .. } | GroupStep::TrivialIdentity { .. } => AeClass::Trivial,
            GroupStep::ValidIdentity { .. } => AeClass::Divisible(PrimeSet::empty()),
        }
    }

    /// The same step reported against a different input text.
    pub fn relabel(mut self, text: String) -> GroupStep {
        match &mut self {
            GroupStep::Reduced { input, .. }
            | GroupStep::FailsInQ { input, .. }
            | GroupStep::ValidIdentity { input }
            | GroupStep::TrivialIdentity { input } => *input = text,
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupClassification {
    #[serde(serialize_with = "ser_class")]
    pub class: AeClass,
    pub steps: Vec<GroupStep>,
}

fn ser_class<S: serde::Serializer>(c: &AeClass, s: S) -> Result<S::Ok, S::Error> {
    c.to_json().serialize(s)
}

impl GroupClassification {
    pub fn to_json(&self) -> Value {
        let mut v = self.class.to_json();
        v["steps"] = json!(self.steps);
        v
    }
}

/// Identity `s = t` of l-groups: true everywhere when `s - t` is the zero
/// function on `Q^n`, otherwise only in the trivial group.
pub fn group_identity_holds(id: &Identity) -> Result<bool, CanonError> {
    let eq = id.equation();
    let d = Node::minus(eq.lhs.clone(), eq.rhs.clone());
    let pl = overlay(&d, id.n(), &x_coords)?;
    Ok(pl.pieces.iter().all(|p| p.form.is_zero()))
}

/// Classifies one sentence of the group signature.
pub fn group_step(phi: &EfdSentence, cap: usize) -> Result<GroupStep, CanonError> {
    if phi.signature() != Signature::Group {
        return Err(CanonError::NotGroupTerm(phi.signature().to_string()));
    }
    match to_delta_kt(phi)? {
        Ok(d) => reduced_step(phi.to_string(), &d, cap),
        Err(reason) => Ok(GroupStep::FailsInQ { input: phi.to_string(), reason }),
    }
}

pub fn reduced_step(input: String, d: &DeltaKt, cap: usize) -> Result<GroupStep, CanonError> {
    let r = reduce_delta_kt(d, cap)?;
    Ok(GroupStep::Reduced { input, delta: d.sentence().to_string(), k: r.k, k_prime: r.k_prime })
}

/// Classifies a finite set of group statements: the class of nontrivial
/// Abelian l-groups satisfying all of them, together with the trivial group.
pub fn classify_group(inputs: &[Statement], cap: usize) -> Result<GroupClassification, CanonError> {
    let mut class = AeClass::Divisible(PrimeSet::empty());
    let mut steps = Vec::new();
    for st in inputs {
        let step = match st {
            Statement::Sentence(phi) => group_step(phi, cap)?,
            Statement::Identity(id) => {
                if id.signature() != Signature::Group {
                    return Err(CanonError::NotGroupTerm(id.signature().to_string()));
                }
                if group_identity_holds(id)? {
                    GroupStep::ValidIdentity { input: id.to_string() }
                } else {
                    GroupStep::TrivialIdentity { input: id.to_string() }
                }
            }
        };
        class = meet(Family::G, &class, &step.class()).expect("group classes");
        steps.push(step);
    }
    Ok(GroupClassification { class, steps })
}

/// Classifies a list of `delta_{k,t}` sentences.
pub fn classify_delta_kts(inputs: &[DeltaKt], cap: usize) -> Result<AeClass, CanonError> {
    let mut class = AeClass::Divisible(PrimeSet::empty());
    for d in inputs {
        let r = reduce_delta_kt(d, cap)?;
        class = meet(Family::G, &class, &AeClass::divisible_by(r.k_prime)).expect("group classes");
    }
    Ok(class)
}

/// `delta_k1` and `delta_k2` axiomatize the same class iff `k1` and `k2`
/// have the same prime divisors.
pub fn delta_equivalent(k1: u64, k2: u64) -> bool {
    PrimeSet::of(k1) == PrimeSet::of(k2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::named::{absurd_identity, delta_k};
    use crate::term::{parse_statement, parse_term};

    fn div(ps: &[u64]) -> AeClass {
        AeClass::Divisible(PrimeSet::finite(ps.iter().copied()).unwrap())
    }

    #[test]
    fn deltas_multiply() {
        let ins = vec![
            Statement::Sentence(delta_k(2, Signature::Group).unwrap()),
            Statement::Sentence(delta_k(3, Signature::Group).unwrap()),
        ];
        assert_eq!(classify_group(&ins, 8).unwrap().class, div(&[2, 3]));
        assert_eq!(classify_group(&[], 8).unwrap().class, div(&[]));
    }

    #[test]
    fn absurd_is_trivial() {
        let ins = vec![Statement::Identity(absurd_identity(Signature::Group))];
        assert_eq!(classify_group(&ins, 8).unwrap().class, AeClass::Trivial);
    }

    #[test]
    fn general_single_output_sentence() {
        let st = parse_statement("forall x1 exists! z1 : z1 + z1 + z1 = x1 + x1", Signature::Group).unwrap();
        assert_eq!(classify_group(&[st], 8).unwrap().class, div(&[3]));
        let st = parse_statement("forall x1 exists! z1 : z1 \\/ 0 = x1", Signature::Group).unwrap();
        assert_eq!(classify_group(&[st], 8).unwrap().class, AeClass::Trivial);
    }

    #[test]
    fn identities() {
        let st = parse_statement("forall x1 x2 : x1 \\/ x2 = -(-x1 /\\ -x2)", Signature::Group).unwrap();
        assert_eq!(classify_group(&[st], 8).unwrap().class, div(&[]));
    }

    #[test]
    fn reduction_list() {
        let d = DeltaKt::new(4, 1, parse_term("2 x1 \\/ 6 x1", Signature::Group).unwrap()).unwrap();
        assert_eq!(classify_delta_kts(&[d], 8).unwrap(), div(&[2]));
        assert!(delta_equivalent(2, 4));
        assert!(!delta_equivalent(2, 6));
    }
}
