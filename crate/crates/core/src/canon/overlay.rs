//! Bottom-up piecewise-linear arithmetic on common refinements.
//!
//! Unlike [`super::piecewise_canonical`] this has no bound on the number of
//! linear forms; it is used by the solver and as a cross-check.

use super::normal::Coords;
use super::piecewise::{Piece, PiecewiseLinear};
use super::CanonError;
use crate::geometry::{interior_point, IneqSystem, LinearForm};
use crate::term::Node;

fn full(region: &IneqSystem) -> bool {
    interior_point(region).is_some()
}

fn constant(n: usize, form: LinearForm) -> PiecewiseLinear {
    PiecewiseLinear { n, pieces: vec![Piece { region: IneqSystem::empty(n), form }] }
}

fn combine(
    a: &PiecewiseLinear,
    b: &PiecewiseLinear,
    mut f: impl FnMut(&IneqSystem, &LinearForm, &LinearForm, &mut Vec<Piece>),
) -> PiecewiseLinear {
    let mut pieces = Vec::new();
    for pa in &a.pieces {
        for pb in &b.pieces {
            let region = pa.region.and(&pb.region);
            if full(&region) {
                f(&region, &pa.form, &pb.form, &mut pieces);
            }
        }
    }
    PiecewiseLinear { n: a.n, pieces }
}

pub fn add(a: &PiecewiseLinear, b: &PiecewiseLinear) -> PiecewiseLinear {
    combine(a, b, |r, f, g, out| out.push(Piece { region: r.clone(), form: f.add(g) }))
}

pub fn neg(a: &PiecewiseLinear) -> PiecewiseLinear {
    let pieces =
        a.pieces.iter().map(|p| Piece { region: p.region.clone(), form: p.form.neg() }).collect();
    PiecewiseLinear { n: a.n, pieces }
}

pub fn scale(a: &PiecewiseLinear, k: i64) -> PiecewiseLinear {
    let k = num_bigint::BigInt::from(k);
    let pieces = a
        .pieces
        .iter()
        .map(|p| Piece { region: p.region.clone(), form: p.form.scale(&k) })
        .collect();
    PiecewiseLinear { n: a.n, pieces }
}

fn extremum(a: &PiecewiseLinear, b: &PiecewiseLinear, take_max: bool) -> PiecewiseLinear {
    combine(a, b, |r, f, g, out| {
        if f == g {
            out.push(Piece { region: r.clone(), form: f.clone() });
            return;
        }
        let mut f_wins = r.clone();
        f_wins.push(if take_max { f.sub(g) } else { g.sub(f) });
        let mut g_wins = r.clone();
        g_wins.push(if take_max { g.sub(f) } else { f.sub(g) });
        if full(&f_wins) {
            out.push(Piece { region: f_wins, form: f.clone() });
        }
        if full(&g_wins) {
            out.push(Piece { region: g_wins, form: g.clone() });
        }
    })
}

pub fn max(a: &PiecewiseLinear, b: &PiecewiseLinear) -> PiecewiseLinear {
    extremum(a, b, true)
}

pub fn min(a: &PiecewiseLinear, b: &PiecewiseLinear) -> PiecewiseLinear {
    extremum(a, b, false)
}

/// Piecewise-linear function of a group term in `n` coordinates.
pub fn overlay(node: &Node, n: usize, coords: Coords) -> Result<PiecewiseLinear, CanonError> {
    Ok(match node {
        Node::Var(v) => match coords(*v) {
            Some(i) if i < n => constant(n, LinearForm::unit(n, i)),
            _ => return Err(CanonError::UnexpectedVariable(v.to_string())),
        },
        Node::Zero => constant(n, LinearForm::zero(n)),
        Node::Plus { lhs, rhs } => add(&overlay(lhs, n, coords)?, &overlay(rhs, n, coords)?),
        Node::Neg { arg } => neg(&overlay(arg, n, coords)?),
        Node::Join { lhs, rhs } => max(&overlay(lhs, n, coords)?, &overlay(rhs, n, coords)?),
        Node::Meet { lhs, rhs } => min(&overlay(lhs, n, coords)?, &overlay(rhs, n, coords)?),
        Node::Diff { lhs, rhs } => {
            let d = add(&overlay(lhs, n, coords)?, &neg(&overlay(rhs, n, coords)?));
            max(&d, &constant(n, LinearForm::zero(n)))
        }
        Node::Scalar { k, arg } => scale(&overlay(arg, n, coords)?, *k),
        Node::MvNeg { .. } | Node::Power { .. } => {
            return Err(CanonError::NotGroupTerm(node.op_name().to_string()))
        }
    })
}
