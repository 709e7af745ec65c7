//! Phase-one simplex over exact rationals with Bland's anti-cycling rule.

use num_traits::{Signed, Zero};

use super::Q;

/// Constraint `coeffs . x >= rhs` over free variables `x`.
#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub rhs: Q,
}

impl Constraint {
    pub fn new(coeffs: Vec<Q>, rhs: Q) -> Constraint {
        Constraint { coeffs, rhs }
    }
}

/// Returns a point satisfying every constraint, or `None` if the system is
/// infeasible. Variables are unrestricted in sign.
pub fn feasible_point(n: usize, constraints: &[Constraint]) -> Option<Vec<Q>> {
    if constraints.iter().all(|c| !c.rhs.is_positive()) {
        return Some(vec![Q::zero(); n]);
    }
    let r = constraints.len();
    // Columns: x+ (n), x- (n), slack (r), artificials (one per positive rhs).
    let art_rows: Vec<usize> = (0..r).filter(|&i| constraints[i].rhs.is_positive()).collect();
    let n_cols = 2 * n + r + art_rows.len();
    let mut tab: Vec<Vec<Q>> = Vec::with_capacity(r);
    let mut basis: Vec<usize> = Vec::with_capacity(r);
    for (i, c) in constraints.iter().enumerate() {
        let mut row = vec![Q::zero(); n_cols + 1];
        let flip = !c.rhs.is_positive();
        for j in 0..n {
            let a = if flip { -c.coeffs[j].clone() } else { c.coeffs[j].clone() };
            row[n + j] = -a.clone();
            row[j] = a;
        }
        row[2 * n + i] = if flip { Q::from_integer(1.into()) } else { Q::from_integer((-1).into()) };
        row[n_cols] = c.rhs.abs();
        if flip {
            basis.push(2 * n + i);
        } else {
            let a = 2 * n + r + art_rows.iter().position(|&k| k == i).expect("artificial");
            row[a] = Q::from_integer(1.into());
            basis.push(a);
        }
        tab.push(row);
    }
    let first_art = 2 * n + r;
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost = vec![Q::zero(); n_cols + 1];
    for (i, &b) in basis.iter().enumerate() {
        if b >= first_art {
            for (cj, tj) in cost.iter_mut().zip(&tab[i]) {
                *cj -= tj;
            }
        }
    }
    for j in first_art..n_cols {
        cost[j] += Q::from_integer(1.into());
    }
    loop {
        let Some(enter) = (0..n_cols).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Q)> = None;
        for i in 0..r {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][n_cols] / &tab[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((pr, _)) = leave else {
            // Unbounded direction; cannot happen for a phase-one objective
            // bounded below by zero.
            unreachable!("phase-one objective is bounded");
        };
        pivot(&mut tab, &mut cost, pr, enter);
        basis[pr] = enter;
    }
    // Objective value is -cost[n_cols].
    if !cost[n_cols].is_zero() {
        return None;
    }
    let mut vals = vec![Q::zero(); n_cols];
    for (i, &b) in basis.iter().enumerate() {
        vals[b] = tab[i][n_cols].clone();
    }
    Some((0..n).map(|j| &vals[j] - &vals[n + j]).collect())
}

fn pivot(tab: &mut [Vec<Q>], cost: &mut [Q], pr: usize, pc: usize) {
    let p = tab[pr][pc].clone();
    for v in tab[pr].iter_mut() {
        *v /= &p;
    }
    let prow = tab[pr].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i != pr && !row[pc].is_zero() {
            let f = row[pc].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
    }
    if !cost[pc].is_zero() {
        let f = cost[pc].clone();
        for (v, pv) in cost.iter_mut().zip(&prow) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::qi;

    fn c(coeffs: &[i64], rhs: i64) -> Constraint {
        Constraint::new(coeffs.iter().map(|&a| qi(a)).collect(), qi(rhs))
    }

    fn satisfies(x: &[Q], cs: &[Constraint]) -> bool {
        cs.iter().all(|c| {
            let lhs: Q = c.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
            lhs >= c.rhs
        })
    }

    #[test]
    fn feasible_strip() {
        let cs = vec![c(&[1, -1], 1), c(&[-1, 1], -3), c(&[0, 1], 5)];
        let x = feasible_point(2, &cs).unwrap();
        assert!(satisfies(&x, &cs));
    }

    #[test]
    fn infeasible_pair() {
        let cs = vec![c(&[1], 1), c(&[-1], 0)];
        assert!(feasible_point(1, &cs).is_none());
    }

    #[test]
    fn strict_cone_of_a_line_is_empty() {
        let cs = vec![c(&[1, -1], 1), c(&[-1, 1], 1)];
        assert!(feasible_point(2, &cs).is_none());
    }

    #[test]
    fn degenerate_cycling_candidate() {
        // Beale-style degenerate system; Bland's rule must terminate.
        let cs = vec![
            c(&[1, 0, 0, 0], 1),
            c(&[-1, 0, 0, 0], -1),
            c(&[0, 1, -1, 0], 0),
            c(&[0, -1, 1, 0], 0),
            c(&[1, 1, 1, 1], 2),
            c(&[-1, -1, -1, -1], -2),
        ];
        let x = feasible_point(4, &cs).unwrap();
        assert!(satisfies(&x, &cs));
    }
}
