//! Exact analysis of group sentences with one existential variable.
//!
//! For `forall x exists! z : alpha(x, z)` the defect
//! `D = sum |lhs_i - rhs_i|` is piecewise linear in `(x, z)` and vanishes
//! exactly on the solutions. Uniqueness and existence over `Q` are decided
//! by linear programs on its pieces. When both hold, the solution is a
//! continuous piecewise-linear function `g`, written as `K z = t(x)` with
//! `t` a max-min term, which turns the sentence into a `delta_{K,t}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::overlay::overlay;
use super::piecewise::Piece;
use super::reduce::DeltaKt;
use super::CanonError;
use crate::geometry::simplex::{feasible_point, Constraint};
use crate::geometry::{interior_point, IneqSystem, LinearForm, Q};
use crate::term::{EfdSentence, Node, Signature, Var, VarKind};

/// Result of solving a one-output sentence over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SingleOutput {
    /// `K z = form` on each region; regions cover `Q^n`.
    Function { scale: u64, pieces: Vec<Piece> },
    /// No `z` satisfies the equations at `witness`.
    NoSolution {
        #[serde(serialize_with = "ser_point")]
        witness: Vec<Q>,
    },
    /// Two distinct solutions exist at `witness`.
    NotUnique {
        #[serde(serialize_with = "ser_point")]
        witness: Vec<Q>,
        #[serde(serialize_with = "ser_point")]
        solutions: Vec<Q>,
    },
}

fn ser_point<S: serde::Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
    use serde::Serialize;
    v.iter().map(crate::geometry::fmt_q).collect::<Vec<_>>().serialize(s)
}

fn full(s: &IneqSystem) -> bool {
    interior_point(s).is_some()
}

/// Builds `D = |l_1 - r_1| + ... + |l_k - r_k|`.
fn defect(phi: &EfdSentence) -> Node {
    let mut terms = phi.equations().iter().map(|eq| {
        let d = Node::minus(eq.lhs.clone(), eq.rhs.clone());
        Node::join(d.clone(), Node::neg(d))
    });
    let first = terms.next().expect("nonempty");
    terms.fold(first, Node::plus)
}

fn embed(row: &LinearForm, width: usize, offset_z: usize, n: usize) -> Vec<Q> {
    // Row over (x, z) placed into a vector of length `width`, with z at `offset_z`.
    let mut v = vec![Q::zero(); width];
    for i in 0..n {
        v[i] = Q::from_integer(row.0[i].clone());
    }
    v[offset_z] = Q::from_integer(row.0[n].clone());
    v
}

/// Solves a group sentence with `m = 1` over `Q`.
pub fn solve_single_output(phi: &EfdSentence) -> Result<SingleOutput, CanonError> {
    if phi.signature() != Signature::Group {
        return Err(CanonError::NotGroupTerm(phi.signature().to_string()));
    }
    if phi.m() != 1 {
        return Err(CanonError::Unsupported(format!(
            "exact solving needs exactly one existential variable, found {}",
            phi.m()
        )));
    }
    let n = phi.n();
    let coords = move |v: Var| match v.kind {
        VarKind::X => Some(v.index - 1),
        VarKind::Z => Some(n),
        VarKind::Y => None,
    };
    let d = overlay(&defect(phi), n + 1, &coords)?;

    // Uniqueness: no x with solutions z, z' such that z' >= z + 1 (scaling).
    let width = n + 2;
    for pi in &d.pieces {
        for pj in &d.pieces {
            let mut cs = Vec::new();
            for (piece, zcol) in [(pi, n), (pj, n + 1)] {
                for row in &piece.region.rows {
                    cs.push(Constraint::new(embed(row, width, zcol, n), Q::zero()));
                }
                let l = embed(&piece.form, width, zcol, n);
                cs.push(Constraint::new(l.iter().map(|a| -a).collect(), Q::zero()));
                cs.push(Constraint::new(l, Q::zero()));
            }
            let mut gap = vec![Q::zero(); width];
            gap[n] = -Q::one();
            gap[n + 1] = Q::one();
            cs.push(Constraint::new(gap, Q::one()));
            if let Some(p) = feasible_point(width, &cs) {
                return Ok(SingleOutput::NotUnique {
                    witness: p[..n].to_vec(),
                    solutions: vec![p[n].clone(), p[n + 1].clone()],
                });
            }
        }
    }

    // Candidate solution pieces: z = -L_x(x) / c where c is the z-coefficient.
    let mut sol: Vec<(IneqSystem, Vec<Q>)> = Vec::new();
    for piece in &d.pieces {
        let c = &piece.form.0[n];
        if c.is_zero() {
            continue;
        }
        let abs_c = c.abs();
        let sign = if c.is_negative() { BigInt::from(-1) } else { BigInt::one() };
        // |c| g(x) = -sign(c) L_x(x)
        let scaled_g: Vec<BigInt> = piece.form.0[..n].iter().map(|a| -a * &sign).collect();
        let mut region = IneqSystem::empty(n);
        for row in &piece.region.rows {
            let r: Vec<BigInt> = (0..n).map(|i| &row.0[i] * &abs_c + &row.0[n] * &scaled_g[i]).collect();
            region.push(LinearForm(r));
        }
        if !full(&region) {
            continue;
        }
        let g: Vec<Q> = scaled_g.iter().map(|a| Q::new(a.clone(), abs_c.clone())).collect();
        sol.push((region, g));
    }

    // Existence: the regions must cover Q^n up to a lower-dimensional set.
    let mut uncovered = vec![IneqSystem::empty(n)];
    for (region, _) in &sol {
        uncovered = uncovered.iter().flat_map(|r| subtract(r, region)).collect();
        if uncovered.is_empty() {
            break;
        }
    }
    if let Some(r) = uncovered.first() {
        let witness = interior_point(r).expect("kept only full-dimensional cells");
        return Ok(SingleOutput::NoSolution { witness });
    }

    let scale = sol
        .iter()
        .flat_map(|(_, g)| g.iter())
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scale_q = Q::from_integer(scale.clone());
    let pieces = sol
        .into_iter()
        .map(|(region, g)| {
            let form = LinearForm(g.iter().map(|q| (q * &scale_q).to_integer()).collect());
            Piece { region, form }
        })
        .collect();
    let scale = scale.to_u64().ok_or_else(|| CanonError::Unsupported("scale too large".into()))?;
    Ok(SingleOutput::Function { scale, pieces })
}

/// Closed full-dimensional cells covering `r` minus the interior of `p`.
fn subtract(r: &IneqSystem, p: &IneqSystem) -> Vec<IneqSystem> {
    let mut out = Vec::new();
    let mut inside = r.clone();
    for row in &p.rows {
        let mut cell = inside.clone();
        cell.push(row.neg());
        if full(&cell) {
            out.push(cell);
        }
        inside.push(row.clone());
        if !full(&inside) {
            break;
        }
    }
    out
}

/// Writes an integer linear form as a group term in `x1..xn`.
pub fn form_to_node(form: &LinearForm) -> Node {
    let mut acc: Option<Node> = None;
    for (i, a) in form.0.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let mag = a.abs().to_i64().expect("coefficient fits in i64");
        let atom = Node::times(mag, Node::x(i + 1));
        acc = Some(match acc {
            None if a.is_negative() => {
                if mag == 1 {
                    Node::neg(atom)
                } else {
                    Node::scalar(-mag, Node::x(i + 1))
                }
            }
            None => atom,
            Some(prev) if a.is_negative() => Node::minus(prev, atom),
            Some(prev) => Node::plus(prev, atom),
        });
    }
    acc.unwrap_or(Node::Zero)
}

/// A max-min term equal to the continuous function given by `pieces`:
/// the join over pieces `j` of the meet of all forms dominating form `j` on
/// region `j`.
pub fn max_min_term(n: usize, pieces: &[Piece]) -> Node {
    let mut forms: Vec<LinearForm> = Vec::new();
    for p in pieces {
        if !forms.contains(&p.form) {
            forms.push(p.form.clone());
        }
    }
    if forms.len() == 1 {
        return form_to_node(&forms[0]);
    }
    let mut meets: Vec<Vec<usize>> = Vec::new();
    for p in pieces {
        let dominating: Vec<usize> = (0..forms.len())
            .filter(|&a| {
                if forms[a] == p.form {
                    return true;
                }
                // forms[a] >= p.form on the region unless p.form - forms[a] >= 1 somewhere.
                let mut cs: Vec<Constraint> =
                    p.region.rows.iter().map(|r| Constraint::new(r.to_rational(), Q::zero())).collect();
                cs.push(Constraint::new(p.form.sub(&forms[a]).to_rational(), Q::one()));
                feasible_point(n, &cs).is_none()
            })
            .collect();
        if !meets.contains(&dominating) {
            meets.push(dominating);
        }
    }
    let meet_node = |idx: &Vec<usize>| {
        let mut it = idx.iter().map(|&a| form_to_node(&forms[a]));
        let first = it.next().expect("contains own form");
        it.fold(first, Node::meet)
    };
    let mut it = meets.iter().map(meet_node);
    let first = it.next().expect("nonempty");
    it.fold(first, Node::join)
}

/// The `delta_{K,t}` equivalent to `phi` over nontrivial Abelian l-groups,
/// or the reason `phi` fails in `Q` (and hence has only trivial models).
pub fn to_delta_kt(phi: &EfdSentence) -> Result<Result<DeltaKt, SingleOutput>, CanonError> {
    if let Some(d) = DeltaKt::from_sentence(phi) {
        return Ok(Ok(d));
    }
    match solve_single_output(phi)? {
        SingleOutput::Function { scale, pieces } => {
            let t = max_min_term(phi.n(), &pieces);
            Ok(Ok(DeltaKt::new(scale, phi.n(), t)?))
        }
        failure => Ok(Err(failure)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::overlay::overlay as pl;
    use crate::canon::normal::x_coords;
    use crate::geometry::qi;
    use crate::term::parse_sentence;

    fn solve(src: &str) -> SingleOutput {
        solve_single_output(&parse_sentence(src, Signature::Group).unwrap()).unwrap()
    }

    #[test]
    fn halving() {
        match solve("forall x1 exists! z1 : z1 + z1 = x1") {
            SingleOutput::Function { scale, pieces } => {
                assert_eq!(scale, 2);
                assert!(pieces.iter().all(|p| p.form == LinearForm::from_i64(&[1])));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn positive_part_not_unique() {
        assert!(matches!(solve("forall x1 exists! z1 : z1 \\/ 0 = x1 \\/ 0"), SingleOutput::NotUnique { .. }));
    }

    #[test]
    fn no_solution_for_negative_inputs() {
        match solve("forall x1 exists! z1 : z1 \\/ -z1 = x1") {
            SingleOutput::NoSolution { witness } => assert!(witness[0] < Q::zero()),
            SingleOutput::NotUnique { .. } => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn two_equation_system() {
        // z = x1 \/ x2 written as a system with a meet side condition.
        let phi = parse_sentence("forall x1 x2 exists! z1 : z1 - x1 \\/ z1 - x2 = z1 - (x1 /\\ x2) & 2 z1 = 2 (x1 \\/ x2)", Signature::Group).unwrap();
        let Ok(d) = to_delta_kt(&phi).unwrap() else { panic!() };
        let f = pl(&d.t, 2, &x_coords).unwrap();
        for a in -2..=2 {
            for b in -2..=2 {
                let v = f.eval(&[qi(a), qi(b)]).unwrap();
                assert_eq!(v, qi(d.k as i64) * qi(a.max(b)));
            }
        }
    }

    #[test]
    fn max_min_of_abs() {
        let phi = parse_sentence("forall x1 exists! z1 : 3 z1 = x1 \\/ -x1", Signature::Group).unwrap();
        let SingleOutput::Function { scale, pieces } = solve_single_output(&phi).unwrap() else { panic!() };
        assert_eq!(scale, 3);
        let t = max_min_term(1, &pieces);
        let f = pl(&t, 1, &x_coords).unwrap();
        for a in -3..=3 {
            assert_eq!(f.eval(&[qi(a)]).unwrap(), qi(a.abs()));
        }
    }
}
