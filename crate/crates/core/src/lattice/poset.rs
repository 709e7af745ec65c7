//! Small finite posets, used to check the shape of finite sublattices.

/// A finite poset given by its order relation on `0..size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    le: Vec<Vec<bool>>,
}

impl Poset {
    pub fn from_relation(size: usize, le: impl Fn(usize, usize) -> bool) -> Poset {
        Poset { le: (0..size).map(|a| (0..size).map(|b| le(a, b)).collect()).collect() }
    }

    pub fn size(&self) -> usize {
        self.le.len()
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.le[a][b]
    }

    pub fn chain(n: usize) -> Poset {
        Poset::from_relation(n, |a, b| a <= b)
    }

    /// Subsets of a `k`-element set under inclusion.
    pub fn boolean(k: u32) -> Poset {
        Poset::from_relation(1 << k, |a, b| a & b == a)
    }

    /// Every element of `self` below every element of `upper`.
    pub fn ordinal_sum(&self, upper: &Poset) -> Poset {
        let n = self.size();
        Poset::from_relation(n + upper.size(), |a, b| match (a < n, b < n) {
            (true, true) => self.le(a, b),
            (false, false) => upper.le(a - n, b - n),
            (true, false) => true,
            (false, true) => false,
        })
    }

    pub fn dual(&self) -> Poset {
        Poset::from_relation(self.size(), |a, b| self.le(b, a))
    }

    pub fn is_partial_order(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| self.le(a, a))
            && (0..n).all(|a| (0..n).all(|b| a == b || !(self.le(a, b) && self.le(b, a))))
            && (0..n).all(|a| {
                (0..n).all(|b| (0..n).all(|c| !(self.le(a, b) && self.le(b, c)) || self.le(a, c)))
            })
    }

    /// Backtracking search for an order isomorphism.
    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        let n = self.size();
        if n != other.size() {
            return false;
        }
        let profile = |p: &Poset, a: usize| {
            let up = (0..p.size()).filter(|&b| p.le(a, b)).count();
            let down = (0..p.size()).filter(|&b| p.le(b, a)).count();
            (up, down)
        };
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            a: &Poset,
            b: &Poset,
            i: usize,
            map: &mut [usize],
            used: &mut [bool],
            profile: &dyn Fn(&Poset, usize) -> (usize, usize),
        ) -> bool {
            if i == a.size() {
                return true;
            }
            for j in 0..b.size() {
                if used[j] || profile(a, i) != profile(b, j) {
                    continue;
                }
                let consistent = (0..i).all(|k| {
                    a.le(k, i) == b.le(map[k], j) && a.le(i, k) == b.le(j, map[k])
                });
                if consistent {
                    map[i] = j;
                    used[j] = true;
                    if extend(a, b, i + 1, map, used, profile) {
                        return true;
                    }
                    used[j] = false;
                }
            }
            false
        }
        extend(self, other, 0, &mut map, &mut used, &profile)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_cube_is_self_dual() {
        let b3 = Poset::boolean(3);
        assert!(b3.is_partial_order());
        assert!(b3.is_isomorphic(&b3.dual()));
    }

    #[test]
    fn ordinal_sums_differ() {
        let a = Poset::chain(1).ordinal_sum(&Poset::boolean(3));
        let b = Poset::boolean(3).ordinal_sum(&Poset::chain(1));
        assert!(!a.is_isomorphic(&b));
        assert!(a.is_isomorphic(&b.dual()));
    }
}
