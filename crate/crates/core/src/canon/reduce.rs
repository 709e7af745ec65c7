//! Reduction of `delta_{k,t}` to the equivalent `delta_{k'}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::piecewise::{arity, piecewise_canonical_n, PiecewiseLinear};
use super::CanonError;
use crate::term::named::delta_kt;
use crate::term::{EfdSentence, Node, Signature, VarKind};

/// `forall x1..xn exists! z1 : k z1 = t(x)` with `t` an x-only group term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaKt {
    pub k: u64,
    pub n: usize,
    pub t: Node,
}

impl DeltaKt {
    pub fn new(k: u64, n: usize, t: Node) -> Result<DeltaKt, CanonError> {
        if k == 0 {
            return Err(CanonError::Unsupported("k must be at least 1".into()));
        }
        t.check(Signature::Group)?;
        if t.mentions(VarKind::Z) || t.mentions(VarKind::Y) {
            return Err(CanonError::UnexpectedVariable("z1".into()));
        }
        if arity(&t) > n {
            return Err(CanonError::UnexpectedVariable(format!("x{}", arity(&t))));
        }
        Ok(DeltaKt { k, n, t })
    }

    /// Recognizes sentences of the exact shape `k z1 = t(x)` or `t(x) = k z1`.
    pub fn from_sentence(s: &EfdSentence) -> Option<DeltaKt> {
        if s.signature() != Signature::Group || s.m() != 1 || s.equations().len() != 1 {
            return None;
        }
        let eq = &s.equations()[0];
        let z_side = |t: &Node| -> Option<u64> {
            match t {
                Node::Var(v) if v.kind == VarKind::Z => Some(1),
                Node::Scalar { k, arg } if *k >= 1 && matches!(**arg, Node::Var(v) if v.kind == VarKind::Z) => {
                    Some(*k as u64)
                }
                _ => None,
            }
        };
        let (k, t) = match (z_side(&eq.lhs), z_side(&eq.rhs)) {
            (Some(k), _) if !eq.rhs.mentions(VarKind::Z) => (k, &eq.rhs),
            (_, Some(k)) if !eq.lhs.mentions(VarKind::Z) => (k, &eq.lhs),
            _ => return None,
        };
        DeltaKt::new(k, s.n(), t.clone()).ok()
    }

    pub fn sentence(&self) -> EfdSentence {
        let k = u32::try_from(self.k).expect("k fits in u32");
        delta_kt(k, self.n, self.t.clone()).expect("validated on construction")
    }
}

/// Output of [`reduce_delta_kt`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub k: u64,
    /// gcd of `k` and every coefficient of every piece.
    pub d: u64,
    pub k_prime: u64,
    pub canonical: PiecewiseLinear,
}

/// `delta_{k,t}` is equivalent over Abelian l-groups to `delta_{k'}` with
/// `k' = k / gcd(k, coefficients of the canonical form of t)`.
pub fn reduce_delta_kt(d: &DeltaKt, cap: usize) -> Result<Reduction, CanonError> {
    let canonical = piecewise_canonical_n(&d.t, d.n, cap)?;
    let g = canonical
        .pieces
        .iter()
        .flat_map(|p| p.form.0.iter())
        .fold(BigInt::from(d.k), |g, c| g.gcd(c));
    let g = g.to_u64().expect("divides k");
    Ok(Reduction { k: d.k, d: g, k_prime: d.k / g, canonical })
}
