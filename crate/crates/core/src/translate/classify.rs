//! Classification of hoop and MV statements by reduction to l-groups.

use serde::Serialize;
use serde_json::{json, Value};

use super::decompose::phi_rad_decompose;
use super::radical::{mv_to_hoop, radical_identity};
use super::star::{star_identity, star_sentence};
use super::two::{bits, TWO_BOUND};
use super::TranslateError;
use crate::canon::{classify_group, group_identity_holds, group_step, GroupClassification, GroupStep};
use crate::lattice::{meet, AeClass, Family, PrimeSet};
use crate::models::{holds_identity_exhaustive, WitnessAlgebra};
use crate::term::{EfdSentence, Identity, Node, Signature, Statement, Var, VarKind};

fn ser_class<S: serde::Serializer>(c: &AeClass, s: S) -> Result<S::Ok, S::Error> {
    c.to_json().serialize(s)
}

/// Hoop statements, classified through their star images.
pub fn classify_hoop(inputs: &[Statement], cap: usize) -> Result<GroupClassification, TranslateError> {
    let mut class = AeClass::Divisible(PrimeSet::empty());
    let mut steps = Vec::new();
    for st in inputs {
        let step = match st {
            Statement::Sentence(phi) => group_step(&star_sentence(phi)?.sentence, cap)?.relabel(phi.to_string()),
            Statement::Identity(id) => {
                if group_identity_holds(&star_identity(id)?)? {
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

/// One sign vector of a decomposed MV sentence, carried through the
/// translation to hoops and then to groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MvBranch {
    pub sign: Vec<bool>,
    pub witness: Vec<bool>,
    pub decomposed: String,
    pub hoop: String,
    pub star: String,
    pub group: GroupStep,
    #[serde(serialize_with = "ser_class")]
    pub class: AeClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MvStep {
    /// The sentence went through the full pipeline.
    Sentence {
        input: String,
        branches: Vec<MvBranch>,
        #[serde(serialize_with = "ser_class")]
        class: AeClass,
    },
    /// The sentence fails in the two-element algebra, so it has no perfect
    /// model. Classified as trivial by convention; `beyond_classification` marks that
    /// the classification of perfect MV-algebras does not cover it.
    FailsInTwo { input: String, at: Vec<bool>, solutions: usize, beyond_classification: bool },
    /// A radical branch can never be satisfied.
    NoPerfectModel { input: String, reason: String, beyond_classification: bool },
    Identity {
        input: String,
        #[serde(serialize_with = "ser_class")]
        class: AeClass,
        reason: String,
    },
}

impl MvStep {
    pub fn class(&self) -> AeClass {
        match self {
            MvStep::Sentence { class, .. } | MvStep::Identity { class, .. } => class.clone(),
            MvStep::FailsInTwo { .. } | MvStep::NoPerfectModel { .. } => AeClass::Trivial,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MvClassification {
    #[serde(serialize_with = "ser_class")]
    pub class: AeClass,
    pub steps: Vec<MvStep>,
}

impl MvClassification {
    pub fn to_json(&self) -> Value {
        let mut v = self.class.to_json();
        v["steps"] = json!(self.steps);
        v
    }
}

/// A group class read as a class of perfect MV-algebras through the
/// radical: only trivial radicals means only the two-element algebra.
fn lift(class: AeClass) -> AeClass {
    match class {
        AeClass::Trivial => AeClass::Boolean,
        other => other,
    }
}

fn classify_mv_sentence(phi: &EfdSentence, cap: usize) -> Result<MvStep, TranslateError> {
    let input = phi.to_string();
    let parts = match phi_rad_decompose(phi) {
        Ok(parts) => parts,
        Err(TranslateError::FailsInTwo { input: at, solutions }) => {
            return Ok(MvStep::FailsInTwo { input, at, solutions, beyond_classification: true })
        }
        Err(e) => return Err(e),
    };
    let mut class = AeClass::Divisible(PrimeSet::empty());
    let mut branches = Vec::new();
    for part in parts {
        let hoop = match mv_to_hoop(&part.sentence) {
            Ok(h) => h,
            Err(TranslateError::NoPerfectModel(reason)) => {
                return Ok(MvStep::NoPerfectModel { input, reason, beyond_classification: true })
            }
            Err(e) => return Err(e),
        };
        let star = star_sentence(&hoop)?.sentence;
        let group = group_step(&star, cap)?;
        let branch_class = lift(group.class());
        class = meet(Family::P, &class, &branch_class).expect("perfect classes");
        branches.push(MvBranch {
            sign: part.sign,
            witness: part.witness,
            decomposed: part.sentence.to_string(),
            hoop: hoop.to_string(),
            star: star.to_string(),
            group,
            class: branch_class,
        });
    }
    Ok(MvStep::Sentence { input, branches, class })
}

/// An MV identity holds in every perfect MV-algebra iff it holds in `2` and,
/// for each way of placing the inputs in the radical or its complement, the
/// resulting hoop identity holds in all cancellative hoops.
fn classify_mv_identity(id: &Identity) -> Result<MvStep, TranslateError> {
    let input = id.to_string();
    let n = id.n();
    if n > TWO_BOUND {
        return Err(TranslateError::TwoBound { n, m: 0 });
    }
    if !holds_identity_exhaustive(&WitnessAlgebra::TwoMv, id)? {
        return Ok(MvStep::Identity { input, class: AeClass::Trivial, reason: "fails in 2".into() });
    }
    for e in 0..(1usize << n) {
        let sign = bits(e, n);
        let flip = |v: Var| (v.kind == VarKind::X && sign[v.index - 1]).then(|| Node::mv_neg(Node::Var(v)));
        let eq = id.equation().substitute(&flip);
        let flipped = Identity::new(Signature::Mv, n, eq)?;
        let holds = match radical_identity(&flipped) {
            Ok(None) => true,
            Ok(Some(h)) => group_identity_holds(&star_identity(&h)?)?,
            Err(TranslateError::NoPerfectModel(_)) => false,
            Err(e) => return Err(e),
        };
        if !holds {
            let reason = format!("fails on nonzero radical elements with sign vector {sign:?}");
            return Ok(MvStep::Identity { input, class: AeClass::Boolean, reason });
        }
    }
    Ok(MvStep::Identity { input, class: AeClass::Divisible(PrimeSet::empty()), reason: "valid".into() })
}

/// MV statements, classified through decomposition, the radical translation
/// and the star map. Results combine by intersection of classes.
pub fn classify_mv(inputs: &[Statement], cap: usize) -> Result<MvClassification, TranslateError> {
    let mut class = AeClass::Divisible(PrimeSet::empty());
    let mut steps = Vec::new();
    for st in inputs {
        if st_signature(st) != Signature::Mv {
            return Err(TranslateError::Signature(format!("expected MV input, found {}", st_signature(st))));
        }
        let step = match st {
            Statement::Sentence(phi) => classify_mv_sentence(phi, cap)?,
            Statement::Identity(id) => classify_mv_identity(id)?,
        };
        class = meet(Family::P, &class, &step.class()).expect("perfect classes");
        steps.push(step);
    }
    Ok(MvClassification { class, steps })
}

fn st_signature(st: &Statement) -> Signature {
    match st {
        Statement::Sentence(s) => s.signature(),
        Statement::Identity(i) => i.signature(),
    }
}

/// Result of [`classify`] for any signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Group(GroupClassification),
    Hoop(GroupClassification),
    Mv(MvClassification),
}

impl Classification {
    pub fn class(&self) -> &AeClass {
        match self {
            Classification::Group(c) | Classification::Hoop(c) => &c.class,
            Classification::Mv(c) => &c.class,
        }
    }

    pub fn family(&self) -> Family {
        match self {
            Classification::Mv(_) => Family::P,
            _ => Family::G,
        }
    }

    pub fn to_json(&self) -> Value {
        let (sig, mut v) = match self {
            Classification::Group(c) => ("group", c.to_json()),
            Classification::Hoop(c) => ("hoop", c.to_json()),
            Classification::Mv(c) => ("mv", c.to_json()),
        };
        v["signature"] = json!(sig);
        v["family"] = json!(self.family().name());
        v
    }
}

/// Classifies statements of one signature.
pub fn classify(sig: Signature, inputs: &[Statement], cap: usize) -> Result<Classification, TranslateError> {
    if let Some(st) = inputs.iter().find(|st| st_signature(st) != sig) {
        return Err(TranslateError::Signature(format!("expected {sig} input, found {}", st_signature(st))));
    }
    Ok(match sig {
        Signature::Group => Classification::Group(classify_group(inputs, cap)?),
        Signature::Hoop => Classification::Hoop(classify_hoop(inputs, cap)?),
        Signature::Mv => Classification::Mv(classify_mv(inputs, cap)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::named::{boolean_identity, delta_k, epsilon_k};
    use crate::term::parse_statement;

    fn div(ps: &[u64]) -> AeClass {
        AeClass::Divisible(PrimeSet::finite(ps.iter().copied()).unwrap())
    }

    #[test]
    fn epsilon_classes() {
        let ins = vec![Statement::Sentence(epsilon_k(2).unwrap()), Statement::Sentence(epsilon_k(3).unwrap())];
        assert_eq!(classify_mv(&ins, 8).unwrap().class, div(&[2, 3]));
        assert_eq!(classify_mv(&[], 8).unwrap().class, div(&[]));
    }

    #[test]
    fn boolean_marker() {
        let c = classify_mv(&[Statement::Identity(boolean_identity())], 8).unwrap();
        assert_eq!(c.class, AeClass::Boolean);
    }

    #[test]
    fn mv_identities() {
        let valid = parse_statement("forall x1 x2 : x1 + x2 = x2 + x1", Signature::Mv).unwrap();
        assert_eq!(classify_mv(&[valid], 8).unwrap().class, div(&[]));
        let absurd = parse_statement("forall x1 : x1 = 0", Signature::Mv).unwrap();
        assert_eq!(classify_mv(&[absurd], 8).unwrap().class, AeClass::Trivial);
    }

    #[test]
    fn hoop_deltas() {
        let ins = vec![Statement::Sentence(delta_k(6, Signature::Hoop).unwrap())];
        assert_eq!(classify_hoop(&ins, 8).unwrap().class, div(&[2, 3]));
    }

    #[test]
    fn fails_in_two_is_flagged() {
        let st = parse_statement("forall x1 exists! z1 : z1 = x1 & z1 = ~x1", Signature::Mv).unwrap();
        let c = classify_mv(&[st], 8).unwrap();
        assert_eq!(c.class, AeClass::Trivial);
        assert!(matches!(c.steps[0], MvStep::FailsInTwo { beyond_classification: true, .. }));
    }
}
