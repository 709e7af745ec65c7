//! Exhaustive evaluation of MV sentences in the two-element algebra.

use serde::Serialize;

use super::TranslateError;
use crate::models::{eval_equation, Assignment, Element, WitnessAlgebra};
use crate::term::{EfdSentence, Signature, Var};

/// Largest `n + m` accepted by [`check_in_two`].
pub const TWO_BOUND: usize = 20;

/// For each input vector, the unique output vector solving the sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoWitness {
    pub input: Vec<bool>,
    pub output: Vec<bool>,
}

/// Outcome of checking a sentence in the two-element MV-algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum TwoCheck {
    Holds { witnesses: Vec<TwoWitness> },
    /// At `input` the number of solutions is `solutions` (0 or at least 2).
    Fails { input: Vec<bool>, solutions: usize },
}

impl TwoCheck {
    pub fn holds(&self) -> bool {
        matches!(self, TwoCheck::Holds { .. })
    }
}

pub(crate) fn bits(mut v: usize, len: usize) -> Vec<bool> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v & 1 == 1);
        v >>= 1;
    }
    out
}

pub fn check_in_two(phi: &EfdSentence) -> Result<TwoCheck, TranslateError> {
    if phi.signature() != Signature::Mv {
        return Err(TranslateError::Signature(format!("expected an MV sentence, found {}", phi.signature())));
    }
    let (n, m) = (phi.n(), phi.m());
    if n + m > TWO_BOUND {
        return Err(TranslateError::TwoBound { n, m });
    }
    let two = WitnessAlgebra::TwoMv;
    let mut witnesses = Vec::with_capacity(1 << n);
    for xi in 0..(1usize << n) {
        let input = bits(xi, n);
        let mut env: Assignment = input.iter().enumerate().map(|(i, b)| (Var::x(i + 1), Element::Bit(*b))).collect();
        let mut found = Vec::new();
        for zi in 0..(1usize << m) {
            let output = bits(zi, m);
            for (j, b) in output.iter().enumerate() {
                env.insert(Var::z(j + 1), Element::Bit(*b));
            }
            let mut ok = true;
            for eq in phi.equations() {
                if !eval_equation(&two, Signature::Mv, eq, &env)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                found.push(output);
            }
        }
        if found.len() != 1 {
            return Ok(TwoCheck::Fails { input, solutions: found.len() });
        }
        witnesses.push(TwoWitness { input, output: found.pop().expect("one solution") });
    }
    Ok(TwoCheck::Holds { witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::named::epsilon_k;
    use crate::term::parse_sentence;

    #[test]
    fn epsilon_two_is_identity_on_bits() {
        match check_in_two(&epsilon_k(2).unwrap()).unwrap() {
            TwoCheck::Holds { witnesses } => {
                assert_eq!(witnesses.len(), 2);
                assert!(witnesses.iter().all(|w| w.input == w.output));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn contradictory_sentence() {
        let phi = parse_sentence("forall x1 exists! z1 : z1 = x1 & z1 = ~x1", Signature::Mv).unwrap();
        assert_eq!(check_in_two(&phi).unwrap(), TwoCheck::Fails { input: vec![false], solutions: 0 });
    }

    #[test]
    fn no_inputs() {
        let phi = parse_sentence("exists! z1 : z1 = 0", Signature::Mv).unwrap();
        match check_in_two(&phi).unwrap() {
            TwoCheck::Holds { witnesses } => assert_eq!(witnesses, vec![TwoWitness { input: vec![], output: vec![false] }]),
            other => panic!("{other:?}"),
        }
    }
}
