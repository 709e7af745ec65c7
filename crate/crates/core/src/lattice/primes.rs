use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use super::LatticeError;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order; empty for `k <= 1`.
pub fn prime_factors(mut k: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= k {
        if k % d == 0 {
            out.push(d);
            while k % d == 0 {
                k /= d;
            }
        }
        d += 1;
    }
    if k > 1 {
        out.push(k);
    }
    out
}

/// A finite or cofinite set of primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeSet {
    Finite(BTreeSet<u64>),
    /// All primes except the listed ones.
    Cofinite(BTreeSet<u64>),
}

fn checked(ps: impl IntoIterator<Item = u64>) -> Result<BTreeSet<u64>, LatticeError> {
    let set: BTreeSet<u64> = ps.into_iter().collect();
    match set.iter().find(|&&p| !is_prime(p)) {
        Some(&p) => Err(LatticeError::NotPrime(p)),
        None => Ok(set),
    }
}

impl PrimeSet {
    pub fn empty() -> PrimeSet {
        PrimeSet::Finite(BTreeSet::new())
    }

    pub fn all() -> PrimeSet {
        PrimeSet::Cofinite(BTreeSet::new())
    }

    pub fn finite(ps: impl IntoIterator<Item = u64>) -> Result<PrimeSet, LatticeError> {
        Ok(PrimeSet::Finite(checked(ps)?))
    }

    pub fn cofinite(excluded: impl IntoIterator<Item = u64>) -> Result<PrimeSet, LatticeError> {
        Ok(PrimeSet::Cofinite(checked(excluded)?))
    }

    /// Prime divisors of `k`.
    pub fn of(k: u64) -> PrimeSet {
        PrimeSet::Finite(prime_factors(k).into_iter().collect())
    }

    pub fn contains(&self, p: u64) -> bool {
        match self {
            PrimeSet::Finite(s) => s.contains(&p),
            PrimeSet::Cofinite(e) => is_prime(p) && !e.contains(&p),
        }
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        use PrimeSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.is_subset(b),
            (Finite(a), Cofinite(e)) => a.is_disjoint(e),
            (Cofinite(_), Finite(_)) => false,
            (Cofinite(e1), Cofinite(e2)) => e2.is_subset(e1),
        }
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        use PrimeSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.union(b).copied().collect()),
            (Finite(a), Cofinite(e)) | (Cofinite(e), Finite(a)) => {
                Cofinite(e.difference(a).copied().collect())
            }
            (Cofinite(e1), Cofinite(e2)) => Cofinite(e1.intersection(e2).copied().collect()),
        }
    }

    pub fn intersection(&self, other: &PrimeSet) -> PrimeSet {
        use PrimeSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.intersection(b).copied().collect()),
            (Finite(a), Cofinite(e)) | (Cofinite(e), Finite(a)) => {
                Finite(a.difference(e).copied().collect())
            }
            (Cofinite(e1), Cofinite(e2)) => Cofinite(e1.union(e2).copied().collect()),
        }
    }

    /// `[2,3]` for finite sets, `{"all_except":[2]}` for cofinite ones.
    pub fn to_json(&self) -> Value {
        match self {
            PrimeSet::Finite(s) => json!(s.iter().collect::<Vec<_>>()),
            PrimeSet::Cofinite(e) => json!({ "all_except": e.iter().collect::<Vec<_>>() }),
        }
    }

    /// Reads `2,3`, the empty string, `*` (all primes) or `*-2,3`.
    pub fn parse(src: &str) -> Result<PrimeSet, LatticeError> {
        let src = src.trim();
        let list = |s: &str| -> Result<Vec<u64>, LatticeError> {
            s.split(',')
                .map(str::trim)
                .filter(|w| !w.is_empty())
                .map(|w| w.parse::<u64>().map_err(|_| LatticeError::Syntax(format!("bad prime `{w}`"))))
                .collect()
        };
        match src.strip_prefix('*') {
            Some(rest) => {
                let rest = rest.trim();
                let rest = rest.strip_prefix('-').unwrap_or(rest);
                PrimeSet::cofinite(list(rest)?)
            }
            None => PrimeSet::finite(list(src)?),
        }
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<u64>| s.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        match self {
            PrimeSet::Finite(s) => write!(f, "{{{}}}", list(s)),
            PrimeSet::Cofinite(e) if e.is_empty() => f.write_str("{all primes}"),
            PrimeSet::Cofinite(e) => write!(f, "{{all primes except {}}}", list(e)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors() {
        assert_eq!(prime_factors(12), vec![2, 3]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(97), vec![97]);
    }

    #[test]
    fn cofinite_algebra() {
        let a = PrimeSet::parse("*-2").unwrap();
        let b = PrimeSet::parse("2,3").unwrap();
        assert_eq!(a.union(&b), PrimeSet::all());
        assert_eq!(a.intersection(&b), PrimeSet::finite([3]).unwrap());
        assert!(!a.is_subset(&b));
        assert!(PrimeSet::finite([3]).unwrap().is_subset(&a));
    }

    #[test]
    fn rejects_composites() {
        assert_eq!(PrimeSet::finite([4]), Err(LatticeError::NotPrime(4)));
    }
}
