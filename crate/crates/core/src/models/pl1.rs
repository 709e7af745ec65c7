//! Continuous piecewise-linear functions of one rational variable.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::geometry::{fmt_q, Q};

/// `f(g) = lines[i].0 * g + lines[i].1` between `breaks[i-1]` and `breaks[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pl1 {
    breaks: Vec<Q>,
    lines: Vec<(Q, Q)>,
}

/// A closed interval; `None` marks an infinite end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Option<Q>,
    pub hi: Option<Q>,
}

impl Interval {
    pub fn all() -> Interval {
        Interval { lo: None, hi: None }
    }

    pub fn at_least(q: Q) -> Interval {
        Interval { lo: Some(q), hi: None }
    }

    pub fn at_most(q: Q) -> Interval {
        Interval { lo: None, hi: Some(q) }
    }

    pub fn point(q: Q) -> Interval {
        Interval { lo: Some(q.clone()), hi: Some(q) }
    }

    pub fn is_point(&self) -> bool {
        matches!((&self.lo, &self.hi), (Some(a), Some(b)) if a == b)
    }

    pub fn contains(&self, q: &Q) -> bool {
        self.lo.as_ref().map_or(true, |lo| lo <= q) && self.hi.as_ref().map_or(true, |hi| q <= hi)
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = match (&self.lo, &other.lo) {
            (Some(a), Some(b)) => Some(a.max(b).clone()),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        let hi = match (&self.hi, &other.hi) {
            (Some(a), Some(b)) => Some(a.min(b).clone()),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        match (&lo, &hi) {
            (Some(a), Some(b)) if a > b => None,
            _ => Some(Interval { lo, hi }),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.lo.as_ref().map_or("-inf".to_string(), fmt_q);
        let hi = self.hi.as_ref().map_or("inf".to_string(), fmt_q);
        write!(f, "[{lo}, {hi}]")
    }
}

impl Pl1 {
    pub fn constant(c: Q) -> Pl1 {
        Pl1 { breaks: vec![], lines: vec![(Q::zero(), c)] }
    }

    pub fn identity() -> Pl1 {
        Pl1 { breaks: vec![], lines: vec![(Q::one(), Q::zero())] }
    }

    pub fn eval(&self, g: &Q) -> Q {
        let i = self.breaks.partition_point(|b| b < g);
        let (a, b) = &self.lines[i];
        a * g + b
    }

    /// The constant value, when the function does not depend on its input.
    pub fn as_constant(&self) -> Option<&Q> {
        match self.lines.as_slice() {
            [(a, b)] if a.is_zero() => Some(b),
            _ => None,
        }
    }

    /// A point strictly inside segment `i`.
    fn inner_point(breaks: &[Q], i: usize) -> Q {
        let one = Q::one();
        match (i.checked_sub(1).map(|j| &breaks[j]), breaks.get(i)) {
            (None, None) => Q::zero(),
            (None, Some(hi)) => hi - one,
            (Some(lo), None) => lo + one,
            (Some(lo), Some(hi)) => (lo + hi) / Q::from_integer(2.into()),
        }
    }

    /// Restates the function over a finer set of breakpoints.
    fn refine(&self, breaks: &[Q]) -> Vec<(Q, Q)> {
        (0..=breaks.len())
            .map(|i| {
                let p = Pl1::inner_point(breaks, i);
                let j = self.breaks.partition_point(|b| b < &p);
                self.lines[j].clone()
            })
            .collect()
    }

    fn merged_breaks(&self, other: &Pl1) -> Vec<Q> {
        let mut all: Vec<Q> = self.breaks.iter().chain(&other.breaks).cloned().collect();
        all.sort();
        all.dedup();
        all
    }

    fn simplify(mut breaks: Vec<Q>, mut lines: Vec<(Q, Q)>) -> Pl1 {
        let mut i = 0;
        while i < breaks.len() {
            if lines[i] == lines[i + 1] {
                breaks.remove(i);
                lines.remove(i + 1);
            } else {
                i += 1;
            }
        }
        Pl1 { breaks, lines }
    }

    fn zip(&self, other: &Pl1, f: impl Fn(&(Q, Q), &(Q, Q)) -> (Q, Q)) -> Pl1 {
        let breaks = self.merged_breaks(other);
        let lines = self.refine(&breaks).iter().zip(other.refine(&breaks).iter()).map(|(a, b)| f(a, b)).collect();
        Pl1::simplify(breaks, lines)
    }

    pub fn add(&self, other: &Pl1) -> Pl1 {
        self.zip(other, |(a1, b1), (a2, b2)| (a1 + a2, b1 + b2))
    }

    pub fn neg(&self) -> Pl1 {
        let lines = self.lines.iter().map(|(a, b)| (-a, -b)).collect();
        Pl1 { breaks: self.breaks.clone(), lines }
    }

    pub fn sub(&self, other: &Pl1) -> Pl1 {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Q) -> Pl1 {
        if k.is_zero() {
            return Pl1::constant(Q::zero());
        }
        let lines = self.lines.iter().map(|(a, b)| (a * k, b * k)).collect();
        Pl1 { breaks: self.breaks.clone(), lines }
    }

    fn extremum(&self, other: &Pl1, want: Ordering) -> Pl1 {
        let base = self.merged_breaks(other);
        let (l1, l2) = (self.refine(&base), other.refine(&base));
        let mut breaks = base.clone();
        for i in 0..=base.len() {
            let ((a1, b1), (a2, b2)) = (&l1[i], &l2[i]);
            if a1 == a2 {
                continue;
            }
            let c = (b2 - b1) / (a1 - a2);
            let above = i == 0 || base[i - 1] < c;
            let below = i == base.len() || c < base[i];
            if above && below {
                breaks.push(c);
            }
        }
        breaks.sort();
        breaks.dedup();
        let lines = (0..=breaks.len())
            .map(|i| {
                let p = Pl1::inner_point(&breaks, i);
                let j = base.partition_point(|b| b < &p);
                let (x, y) = (&l1[j], &l2[j]);
                let (vx, vy) = (&x.0 * &p + &x.1, &y.0 * &p + &y.1);
                if vx.cmp(&vy) == want || vx == vy {
                    x.clone()
                } else {
                    y.clone()
                }
            })
            .collect();
        Pl1::simplify(breaks, lines)
    }

    pub fn max(&self, other: &Pl1) -> Pl1 {
        self.extremum(other, Ordering::Greater)
    }

    pub fn min(&self, other: &Pl1) -> Pl1 {
        self.extremum(other, Ordering::Less)
    }

    /// The closed set where the function vanishes, as disjoint intervals in
    /// increasing order.
    pub fn zero_set(&self) -> Vec<Interval> {
        let mut out: Vec<Interval> = Vec::new();
        let mut push = |iv: Interval| {
            if let Some(last) = out.last_mut() {
                if let (Some(h), Some(l)) = (&last.hi, &iv.lo) {
                    if h >= l {
                        last.hi = iv.hi;
                        return;
                    }
                }
            }
            out.push(iv);
        };
        for (i, (a, b)) in self.lines.iter().enumerate() {
            let lo = i.checked_sub(1).map(|j| self.breaks[j].clone());
            let hi = self.breaks.get(i).cloned();
            let seg = Interval { lo, hi };
            if a.is_zero() {
                if b.is_zero() {
                    push(seg);
                }
            } else {
                let root = -b / a;
                if seg.contains(&root) {
                    push(Interval::point(root));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{q, qi};

    #[test]
    fn max_introduces_crossing() {
        let f = Pl1::identity().max(&Pl1::identity().neg());
        assert_eq!(f.eval(&qi(-3)), qi(3));
        assert_eq!(f.eval(&q(1, 2)), q(1, 2));
        assert_eq!(f.breaks, vec![qi(0)]);
    }

    #[test]
    fn zero_sets() {
        let x = Pl1::identity();
        let f = x.max(&Pl1::constant(qi(0)));
        assert_eq!(f.zero_set(), vec![Interval::at_most(qi(0))]);
        let g = x.scale(&qi(2)).sub(&Pl1::constant(qi(3)));
        assert_eq!(g.zero_set(), vec![Interval::point(q(3, 2))]);
        let h = x.min(&Pl1::constant(qi(1))).max(&Pl1::constant(qi(1)));
        assert_eq!(h.sub(&Pl1::constant(qi(1))).zero_set(), vec![Interval::all()]);
    }

    #[test]
    fn intervals() {
        let a = Interval::at_least(qi(0));
        let b = Interval::at_most(qi(0));
        assert_eq!(a.intersect(&b), Some(Interval::point(qi(0))));
        assert_eq!(Interval::at_least(qi(1)).intersect(&b), None);
    }
}
