//! Piecewise-linear canonical form of group terms.

use std::fmt;

use serde::Serialize;

use super::normal::{lattice_normal_form, x_coords, LatticeNormalForm};
use super::CanonError;
use crate::geometry::{interior_point, IneqSystem, LinearForm, Q};
use crate::term::{Node, Signature, Term, VarKind};

/// Default bound on the number of distinct linear forms.
pub const DEFAULT_CAP: usize = 8;

/// One linear piece: `form` on the cone `region`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Piece {
    pub region: IneqSystem,
    pub form: LinearForm,
}

/// Finite list of pieces whose regions are full-dimensional cones covering
/// `Q^n`; the function is the form of the first piece containing a point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PiecewiseLinear {
    pub n: usize,
    pub pieces: Vec<Piece>,
}

impl PiecewiseLinear {
    pub fn piece_at(&self, point: &[Q]) -> Option<&Piece> {
        self.pieces.iter().find(|p| p.region.contains(point))
    }

    pub fn eval(&self, point: &[Q]) -> Option<Q> {
        self.piece_at(point).map(|p| p.form.eval(point))
    }

    pub fn display_with(&self, names: &dyn Fn(usize) -> String) -> String {
        self.pieces
            .iter()
            .map(|p| format!("{{ {} |-> {} }}", p.region.display_with(names), p.form.display_with(names)))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for PiecewiseLinear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&|i| format!("x{}", i + 1)))
    }
}

/// Number of x-coordinates a term needs: its largest x-index.
pub fn arity(node: &Node) -> usize {
    node.vars().iter().filter(|v| v.kind == VarKind::X).map(|v| v.index).max().unwrap_or(0)
}

/// Canonical form of an x-only group term, with `n` its largest x-index.
pub fn piecewise_canonical(term: &Term, cap: usize) -> Result<PiecewiseLinear, CanonError> {
    if term.signature() != Signature::Group {
        return Err(CanonError::NotGroupTerm(term.signature().to_string()));
    }
    piecewise_canonical_n(term.node(), arity(term.node()), cap)
}

/// Canonical form of an x-only group term in `n` coordinates.
///
/// The distinct linear forms `u_1..u_p` of the normal form are ordered in
/// every way whose chain region `u_s(1) <= ... <= u_s(p)` is
/// full-dimensional; on such a region every join and meet resolves to one
/// form. Orders are enumerated lexicographically with pruning of prefixes
/// whose region is already thin.
pub fn piecewise_canonical_n(node: &Node, n: usize, cap: usize) -> Result<PiecewiseLinear, CanonError> {
    let nf = lattice_normal_form(node, n, &x_coords)?;
    from_normal_form(&nf, cap)
}

pub fn from_normal_form(nf: &LatticeNormalForm, cap: usize) -> Result<PiecewiseLinear, CanonError> {
    let p = nf.forms.len();
    if p > cap {
        return Err(CanonError::CapExceeded { forms: p, cap });
    }
    let mut pieces = Vec::new();
    let mut prefix = Vec::with_capacity(p);
    let mut used = vec![false; p];
    search(nf, &mut prefix, &mut used, IneqSystem::empty(nf.n), &mut pieces);
    Ok(PiecewiseLinear { n: nf.n, pieces })
}

fn search(
    nf: &LatticeNormalForm,
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    region: IneqSystem,
    out: &mut Vec<Piece>,
) {
    let p = nf.forms.len();
    if prefix.len() == p {
        let mut rank = vec![0; p];
        for (pos, &i) in prefix.iter().enumerate() {
            rank[i] = pos;
        }
        let form = nf.forms[nf.expr.resolve(&rank)].clone();
        out.push(Piece { region, form });
        return;
    }
    for j in 0..p {
        if used[j] {
            continue;
        }
        let mut next = region.clone();
        if let Some(&last) = prefix.last() {
            next.push(nf.forms[j].sub(&nf.forms[last]));
            if interior_point(&next).is_none() {
                continue;
            }
        }
        used[j] = true;
        prefix.push(j);
        search(nf, prefix, used, next, out);
        prefix.pop();
        used[j] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::qi;
    use crate::term::parse_term;

    fn canon(src: &str) -> PiecewiseLinear {
        let t = Term::new(Signature::Group, parse_term(src, Signature::Group).unwrap()).unwrap();
        piecewise_canonical(&t, DEFAULT_CAP).unwrap()
    }

    #[test]
    fn join_of_two_variables() {
        let pl = canon("x1 \\/ x2");
        assert_eq!(pl.to_string(), "{ -x1 + x2 >= 0 |-> x2 }\n{ x1 - x2 >= 0 |-> x1 }");
    }

    #[test]
    fn scaled_join_orders_by_sign() {
        let pl = canon("2 x1 \\/ 6 x1");
        assert_eq!(pl.to_string(), "{ x1 >= 0 |-> 6 x1 }\n{ -x1 >= 0 |-> 2 x1 }");
    }

    #[test]
    fn linear_term_single_piece() {
        let pl = canon("x1 + 2 x2");
        assert_eq!(pl.pieces.len(), 1);
        assert!(pl.pieces[0].region.rows.is_empty());
    }

    #[test]
    fn absolute_value() {
        let pl = canon("x1 \\/ -x1");
        for v in -3..=3 {
            assert_eq!(pl.eval(&[qi(v)]), Some(qi(v.abs())));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let t = Term::new(
            Signature::Group,
            parse_term("x1 \\/ 2 x1 \\/ 3 x1", Signature::Group).unwrap(),
        )
        .unwrap();
        assert!(matches!(piecewise_canonical(&t, 2), Err(CanonError::CapExceeded { forms: 3, cap: 2 })));
    }
}
