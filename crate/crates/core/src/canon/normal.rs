//! Join/meet normal form: sums, negations and scalars pushed to the leaves.

use serde::Serialize;

use super::CanonError;
use crate::geometry::LinearForm;
use crate::term::{Node, Var};

/// Lattice polynomial over indexed linear forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum LatticeExpr {
    Leaf { form: usize },
    Join { args: Vec<LatticeExpr> },
    Meet { args: Vec<LatticeExpr> },
}

impl LatticeExpr {
    /// Index of the form selected when the forms are totally ordered by `rank`.
    pub fn resolve(&self, rank: &[usize]) -> usize {
        match self {
            LatticeExpr::Leaf { form } => *form,
            LatticeExpr::Join { args } => {
                args.iter().map(|a| a.resolve(rank)).max_by_key(|&i| rank[i]).expect("nonempty")
            }
            LatticeExpr::Meet { args } => {
                args.iter().map(|a| a.resolve(rank)).min_by_key(|&i| rank[i]).expect("nonempty")
            }
        }
    }
}

/// A lattice polynomial together with its distinct linear forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeNormalForm {
    pub n: usize,
    pub forms: Vec<LinearForm>,
    pub expr: LatticeExpr,
}

#[derive(Debug, Clone)]
enum Lx {
    Leaf(LinearForm),
    Join(Box<Lx>, Box<Lx>),
    Meet(Box<Lx>, Box<Lx>),
}

impl Lx {
    fn join(a: Lx, b: Lx) -> Lx {
        Lx::Join(Box::new(a), Box::new(b))
    }

    fn meet(a: Lx, b: Lx) -> Lx {
        Lx::Meet(Box::new(a), Box::new(b))
    }

    fn add(a: Lx, b: Lx) -> Lx {
        match (a, b) {
            (Lx::Leaf(f), Lx::Leaf(g)) => Lx::Leaf(f.add(&g)),
            (Lx::Join(a1, a2), b) => Lx::join(Lx::add(*a1, b.clone()), Lx::add(*a2, b)),
            (Lx::Meet(a1, a2), b) => Lx::meet(Lx::add(*a1, b.clone()), Lx::add(*a2, b)),
            (a @ Lx::Leaf(_), Lx::Join(b1, b2)) => {
                Lx::join(Lx::add(a.clone(), *b1), Lx::add(a, *b2))
            }
            (a @ Lx::Leaf(_), Lx::Meet(b1, b2)) => {
                Lx::meet(Lx::add(a.clone(), *b1), Lx::add(a, *b2))
            }
        }
    }

    fn neg(self) -> Lx {
        match self {
            Lx::Leaf(f) => Lx::Leaf(f.neg()),
            Lx::Join(a, b) => Lx::meet(a.neg(), b.neg()),
            Lx::Meet(a, b) => Lx::join(a.neg(), b.neg()),
        }
    }

    /// Multiplication by `k >= 0`, which is a lattice homomorphism.
    fn scale(self, k: &num_bigint::BigInt) -> Lx {
        match self {
            Lx::Leaf(f) => Lx::Leaf(f.scale(k)),
            Lx::Join(a, b) => Lx::join(a.scale(k), b.scale(k)),
            Lx::Meet(a, b) => Lx::meet(a.scale(k), b.scale(k)),
        }
    }
}

/// Maps a term variable to a coordinate, or `None` if it is not allowed.
pub type Coords<'a> = &'a dyn Fn(Var) -> Option<usize>;

/// Coordinates for x-only terms: `x_i` is coordinate `i - 1`.
pub fn x_coords(v: Var) -> Option<usize> {
    (v.kind == crate::term::VarKind::X).then(|| v.index - 1)
}

fn distribute(node: &Node, n: usize, coords: Coords) -> Result<Lx, CanonError> {
    Ok(match node {
        Node::Var(v) => match coords(*v) {
            Some(i) if i < n => Lx::Leaf(LinearForm::unit(n, i)),
            _ => return Err(CanonError::UnexpectedVariable(v.to_string())),
        },
        Node::Zero => Lx::Leaf(LinearForm::zero(n)),
        Node::Plus { lhs, rhs } => Lx::add(distribute(lhs, n, coords)?, distribute(rhs, n, coords)?),
        Node::Neg { arg } => distribute(arg, n, coords)?.neg(),
        Node::Join { lhs, rhs } => Lx::join(distribute(lhs, n, coords)?, distribute(rhs, n, coords)?),
        Node::Meet { lhs, rhs } => Lx::meet(distribute(lhs, n, coords)?, distribute(rhs, n, coords)?),
        Node::Diff { lhs, rhs } => {
            let d = Lx::add(distribute(lhs, n, coords)?, distribute(rhs, n, coords)?.neg());
            Lx::join(d, Lx::Leaf(LinearForm::zero(n)))
        }
        Node::Scalar { k, arg } => {
            let inner = distribute(arg, n, coords)?.scale(&num_bigint::BigInt::from(k.unsigned_abs()));
            if *k < 0 {
                inner.neg()
            } else {
                inner
            }
        }
        Node::MvNeg { .. } | Node::Power { .. } => {
            return Err(CanonError::NotGroupTerm(node.op_name().to_string()))
        }
    })
}

fn index(lx: &Lx, forms: &mut Vec<LinearForm>) -> LatticeExpr {
    match lx {
        Lx::Leaf(f) => {
            let i = match forms.iter().position(|g| g == f) {
                Some(i) => i,
                None => {
                    forms.push(f.clone());
                    forms.len() - 1
                }
            };
            LatticeExpr::Leaf { form: i }
        }
        Lx::Join(a, b) => flatten(true, vec![index(a, forms), index(b, forms)]),
        Lx::Meet(a, b) => flatten(false, vec![index(a, forms), index(b, forms)]),
    }
}

fn flatten(is_join: bool, parts: Vec<LatticeExpr>) -> LatticeExpr {
    let mut args: Vec<LatticeExpr> = Vec::new();
    for p in parts {
        let inner = match p {
            LatticeExpr::Join { args } if is_join => args,
            LatticeExpr::Meet { args } if !is_join => args,
            other => vec![other],
        };
        for a in inner {
            if !args.contains(&a) {
                args.push(a);
            }
        }
    }
    if args.len() == 1 {
        args.pop().expect("one")
    } else if is_join {
        LatticeExpr::Join { args }
    } else {
        LatticeExpr::Meet { args }
    }
}

/// Normal form of a group term in `n` coordinates. Equal linear forms share
/// one index, assigned in left-to-right order of first appearance.
pub fn lattice_normal_form(
    node: &Node,
    n: usize,
    coords: Coords,
) -> Result<LatticeNormalForm, CanonError> {
    let lx = distribute(node, n, coords)?;
    let mut forms = Vec::new();
    let expr = index(&lx, &mut forms);
    Ok(LatticeNormalForm { n, forms, expr })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::{parse_term, Signature};

    fn nf(src: &str, n: usize) -> LatticeNormalForm {
        lattice_normal_form(&parse_term(src, Signature::Group).unwrap(), n, &x_coords).unwrap()
    }

    #[test]
    fn sum_distributes_over_join() {
        let f = nf("x1 + (x2 \\/ 0)", 2);
        assert_eq!(f.forms, vec![LinearForm::from_i64(&[1, 1]), LinearForm::from_i64(&[1, 0])]);
        assert!(matches!(f.expr, LatticeExpr::Join { .. }));
    }

    #[test]
    fn negation_swaps() {
        let f = nf("-(x1 \\/ x2)", 2);
        assert_eq!(
            f.expr,
            LatticeExpr::Meet { args: vec![LatticeExpr::Leaf { form: 0 }, LatticeExpr::Leaf { form: 1 }] }
        );
        assert_eq!(f.forms[0], LinearForm::from_i64(&[-1, 0]));
    }

    #[test]
    fn duplicates_merge() {
        let f = nf("x1 \\/ x1", 1);
        assert_eq!(f.forms.len(), 1);
        assert_eq!(f.expr, LatticeExpr::Leaf { form: 0 });
    }

    #[test]
    fn z_variable_rejected() {
        let t = parse_term("z1 + x1", Signature::Group).unwrap();
        assert!(lattice_normal_form(&t, 1, &x_coords).is_err());
    }
}
