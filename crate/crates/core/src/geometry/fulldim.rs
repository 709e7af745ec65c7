use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::simplex::{feasible_point, Constraint};
use super::{IneqSystem, LinearForm, Q};

/// Outcome of a full-dimensionality test, with a checkable certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FullDim {
    /// `n` linearly independent solutions of the system.
    Full {
        #[serde(serialize_with = "ser_vectors")]
        basis: Vec<Vec<Q>>,
    },
    /// A row that vanishes on every solution (a nonzero linear form).
    Degenerate { row: usize, vanishing: LinearForm },
}

impl FullDim {
    pub fn is_full(&self) -> bool {
        matches!(self, FullDim::Full { .. })
    }
}

fn ser_vectors<S: serde::Serializer>(v: &[Vec<Q>], s: S) -> Result<S::Ok, S::Error> {
    let strs: Vec<Vec<String>> = v.iter().map(|r| r.iter().map(super::fmt_q).collect()).collect();
    strs.serialize(s)
}

fn constraints(s: &IneqSystem, strict: &dyn Fn(usize) -> bool) -> Vec<Constraint> {
    s.rows
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_zero())
        .map(|(i, r)| {
            let rhs = if strict(i) { Q::one() } else { Q::zero() };
            Constraint::new(r.to_rational(), rhs)
        })
        .collect()
}

/// A point where every nonzero row is at least 1, if one exists. Such a
/// point exists exactly when the cone has nonempty interior.
pub fn interior_point(s: &IneqSystem) -> Option<Vec<Q>> {
    feasible_point(s.n, &constraints(s, &|_| true))
}

/// Decides whether the solution cone of `s` spans `Q^n`.
///
/// Zero rows impose nothing and are skipped. A cone is full-dimensional iff
/// no nonzero row is an implicit equality; when the interior is empty one
/// such row is returned as the certificate.
pub fn is_full_dimensional(s: &IneqSystem) -> FullDim {
    let n = s.n;
    if let Some(x0) = interior_point(s) {
        return FullDim::Full { basis: basis_around(s, &x0) };
    }
    for (i, row) in s.rows.iter().enumerate() {
        if row.is_zero() {
            continue;
        }
        if feasible_point(n, &constraints(s, &|j| j == i)).is_none() {
            return FullDim::Degenerate { row: i, vanishing: row.clone() };
        }
    }
    unreachable!("a cone without interior has an implicit equality")
}

/// `x0 + eps e_i` for each `i`; independent and inside the cone when every
/// row is at least 1 at `x0`.
fn basis_around(s: &IneqSystem, x0: &[Q]) -> Vec<Vec<Q>> {
    let n = s.n;
    let max_coeff = s
        .rows
        .iter()
        .flat_map(|r| r.0.iter())
        .map(|a| a.abs())
        .max()
        .unwrap_or_default();
    let mut eps = if max_coeff.is_zero() { Q::one() } else { Q::new(1.into(), max_coeff) };
    let total: Q = x0.iter().sum();
    if (&eps + &total).is_zero() {
        eps /= Q::from_integer(2.into());
    }
    (0..n)
        .map(|i| {
            let mut v = x0.to_vec();
            v[i] += &eps;
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rank;

    fn sys(n: usize, rows: &[&[i64]]) -> IneqSystem {
        IneqSystem::new(n, rows.iter().map(|r| LinearForm::from_i64(r)).collect()).unwrap()
    }

    #[test]
    fn line_is_degenerate() {
        let s = sys(2, &[&[1, -1], &[-1, 1]]);
        match is_full_dimensional(&s) {
            FullDim::Degenerate { vanishing, .. } => assert!(!vanishing.is_zero()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn quadrant_has_basis() {
        let s = sys(2, &[&[1, 0], &[0, 1]]);
        let FullDim::Full { basis } = is_full_dimensional(&s) else { panic!() };
        assert_eq!(rank(&basis), 2);
        assert!(basis.iter().all(|v| s.contains(v)));
    }

    #[test]
    fn empty_system_is_full() {
        let s = IneqSystem::empty(3);
        let FullDim::Full { basis } = is_full_dimensional(&s) else { panic!() };
        assert_eq!(rank(&basis), 3);
    }

    #[test]
    fn zero_rows_ignored() {
        let s = sys(1, &[&[0]]);
        assert!(is_full_dimensional(&s).is_full());
    }

    #[test]
    fn zero_dimensional_ambient() {
        let s = IneqSystem::empty(0);
        assert_eq!(is_full_dimensional(&s), FullDim::Full { basis: vec![] });
    }
}
