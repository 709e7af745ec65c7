//! Exact rational polyhedral geometry: linear forms, homogeneous inequality
//! systems, feasibility, full-dimensionality and solution sampling.

mod fulldim;
mod sample;
pub mod simplex;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use fulldim::{interior_point, is_full_dimensional, FullDim};
pub use sample::sample_solutions;

/// Exact rational scalar.
pub type Q = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("gcd of an all-zero family is undefined")]
    AllZero,
    #[error("row {row} has {found} coefficients, expected {expected}")]
    Arity { row: usize, expected: usize, found: usize },
}

/// Integer linear form `a_1 x_1 + ... + a_n x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(pub Vec<BigInt>);

impl LinearForm {
    pub fn zero(n: usize) -> LinearForm {
        LinearForm(vec![BigInt::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> LinearForm {
        let mut f = LinearForm::zero(n);
        f.0[i] = BigInt::one();
        f
    }

    pub fn from_i64(coeffs: &[i64]) -> LinearForm {
        LinearForm(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        LinearForm(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LinearForm) -> LinearForm {
        LinearForm(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &BigInt) -> LinearForm {
        LinearForm(self.0.iter().map(|a| a * k).collect())
    }

    /// Divides by the gcd of the coefficients; the zero form is unchanged.
    pub fn primitive(&self) -> LinearForm {
        match gcd_all(&self.0) {
            Ok(g) if !g.is_one() => LinearForm(self.0.iter().map(|a| a / &g).collect()),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        self.0
            .iter()
            .zip(point)
            .fold(Q::zero(), |acc, (a, x)| acc + Q::from_integer(a.clone()) * x)
    }

    pub fn to_rational(&self) -> Vec<Q> {
        self.0.iter().map(|a| Q::from_integer(a.clone())).collect()
    }

    /// Renders the form in variables `x1..xn`, e.g. `x1 - 2 x3`.
    pub fn display_with(&self, names: &dyn Fn(usize) -> String) -> String {
        let mut out = String::new();
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if out.is_empty() {
                if a.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if a.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push(' ');
            }
            out.push_str(&names(i));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&|i| format!("x{}", i + 1)))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<IntRepr> = self
            .0
            .iter()
            .map(|a| match i64::try_from(a) {
                Ok(v) => IntRepr::Small(v),
                Err(_) => IntRepr::Big(a.to_string()),
            })
            .collect();
        reprs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let reprs = Vec::<IntRepr>::deserialize(d)?;
        reprs
            .into_iter()
            .map(|r| match r {
                IntRepr::Small(v) => Ok(BigInt::from(v)),
                IntRepr::Big(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(LinearForm)
    }
}

/// Homogeneous system `row . x >= 0` for every row, in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IneqSystem {
    pub n: usize,
    pub rows: Vec<LinearForm>,
}

impl IneqSystem {
    pub fn new(n: usize, rows: Vec<LinearForm>) -> Result<IneqSystem, GeometryError> {
        for (row, r) in rows.iter().enumerate() {
            if r.dim() != n {
                return Err(GeometryError::Arity { row, expected: n, found: r.dim() });
            }
        }
        Ok(IneqSystem { n, rows })
    }

    pub fn empty(n: usize) -> IneqSystem {
        IneqSystem { n, rows: Vec::new() }
    }

    pub fn contains(&self, point: &[Q]) -> bool {
        self.rows.iter().all(|r| !r.eval(point).is_negative())
    }

    /// Conjunction of both systems, dropping repeated and zero rows.
    pub fn and(&self, other: &IneqSystem) -> IneqSystem {
        let mut out = self.clone();
        for r in &other.rows {
            out.push(r.clone());
        }
        out
    }

    /// Adds a row unless it is zero or already present.
    pub fn push(&mut self, row: LinearForm) {
        let row = row.primitive();
        if !row.is_zero() && !self.rows.contains(&row) {
            self.rows.push(row);
        }
    }

    pub fn display_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.rows.is_empty() {
            return "true".into();
        }
        self.rows
            .iter()
            .map(|r| format!("{} >= 0", r.display_with(names)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for IneqSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&|i| format!("x{}", i + 1)))
    }
}

/// Greatest common divisor of the absolute values, ignoring zeros.
pub fn gcd_all(values: &[BigInt]) -> Result<BigInt, GeometryError> {
    let g = values.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if g.is_zero() {
        Err(GeometryError::AllZero)
    } else {
        Ok(g)
    }
}

/// Rank of a family of rational vectors (Gaussian elimination).
pub fn rank(vectors: &[Vec<Q>]) -> usize {
    let mut m: Vec<Vec<Q>> = vectors.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in c..cols {
                    let delta = &f * &m[rank][k];
                    m[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| Q::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}
