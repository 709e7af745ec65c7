//! Exact and sampled satisfaction checks in witness algebras.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use super::eval::{check_env, check_species, eval_node};
use super::pl1::{Interval, Pl1};
use super::{sample_element, small_elements, Assignment, Element, ModelError, WitnessAlgebra};
use crate::geometry::Q;
use crate::lattice::PrimeSet;
use crate::term::{EfdSentence, Equation, Identity, Node, QuasiIdentity, Var};

pub const DEFAULT_SEED: u64 = 0x00e7_d5eed;
pub const DEFAULT_BUDGET: usize = 500;

/// Upper bound on candidate tuples tried per point by the fallback search.
const SEARCH_LIMIT: usize = 20_000;
/// Largest number of variables enumerated in a finite model.
const EXHAUSTIVE_VARS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Number of sample points.
    pub budget: usize,
    pub seed: u64,
    /// Bound on numerators and denominators of sampled rationals.
    pub cap: i64,
}

impl Default for CheckOptions {
    fn default() -> CheckOptions {
        CheckOptions { budget: DEFAULT_BUDGET, seed: DEFAULT_SEED, cap: 12 }
    }
}

impl CheckOptions {
    pub fn new(budget: usize, seed: u64) -> CheckOptions {
        CheckOptions { budget, seed, ..CheckOptions::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Confidence {
    /// Every per-point answer was computed by a complete procedure.
    Exact,
    /// Some answer relied on a bounded candidate search.
    Sampled,
}

/// Solutions of the existential block at one point, at most two of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointOutcome {
    pub solutions: Vec<Assignment>,
    /// `true` when `solutions` lists all solutions (or two of infinitely
    /// many); `false` when found by search, so more may exist.
    pub exact: bool,
}

impl PointOutcome {
    pub fn unique(&self) -> Option<&Assignment> {
        match self.solutions.as_slice() {
            [s] => Some(s),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    NoSolution,
    NotUnique { first: Assignment, second: Assignment },
    Unequal { lhs: Element, rhs: Element },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    ConsistentOnSample { points: usize, confidence: Confidence },
    Falsified { witness: Assignment, failure: Failure, confidence: Confidence },
}

impl Verdict {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Verdict::ConsistentOnSample { .. })
    }

    pub fn confidence(&self) -> Confidence {
        match self {
            Verdict::ConsistentOnSample { confidence, .. } | Verdict::Falsified { confidence, .. } => *confidence,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Verdict::ConsistentOnSample { points, confidence } => json!({
                "verdict": "consistent-on-sample",
                "points": points,
                "confidence": confidence,
            }),
            Verdict::Falsified { witness, failure, confidence } => {
                let mut v = json!({
                    "verdict": "falsified",
                    "witness": assignment_json(witness),
                    "confidence": confidence,
                });
                match failure {
                    Failure::NoSolution => v["failure"] = json!("no-solution"),
                    Failure::NotUnique { first, second } => {
                        v["failure"] = json!("not-unique");
                        v["solutions"] = json!([assignment_json(first), assignment_json(second)]);
                    }
                    Failure::Unequal { lhs, rhs } => {
                        v["failure"] = json!("unequal");
                        v["values"] = json!([lhs.to_string(), rhs.to_string()]);
                    }
                }
                v
            }
        }
    }
}

pub fn assignment_json(env: &Assignment) -> Value {
    let map: Map<String, Value> = env.iter().map(|(v, e)| (v.to_string(), e.to_json())).collect();
    Value::Object(map)
}

/// `delta_k` in a group (or its positive cone), decided from the
/// structure of the group.
pub fn holds_delta_exact(a: &WitnessAlgebra, k: u64) -> Result<bool, ModelError> {
    if k == 0 {
        return Err(ModelError::Unsupported("k must be positive".into()));
    }
    match a {
        WitnessAlgebra::Trivial(_) => Ok(true),
        WitnessAlgebra::RationalGroup => Ok(true),
        WitnessAlgebra::IntegerGroup | WitnessAlgebra::LexProduct(_) => Ok(k == 1),
        WitnessAlgebra::LocalizedRationals(s) => Ok(PrimeSet::of(k).is_subset(&PrimeSet::Finite(s.clone()))),
        WitnessAlgebra::PositiveCone(g) => holds_delta_exact(g, k),
        other => Err(ModelError::Unsupported(format!("delta_k is decided for groups and cones, not {other}"))),
    }
}

/// `epsilon_k` in a perfect MV-algebra: it holds iff the radical, the
/// positive cone of the inner group, satisfies `delta_k`.
pub fn holds_epsilon_exact(a: &WitnessAlgebra, k: u64) -> Result<bool, ModelError> {
    if k == 0 {
        return Err(ModelError::Unsupported("k must be positive".into()));
    }
    match a {
        WitnessAlgebra::GammaPerfect(g) => holds_delta_exact(g, k),
        WitnessAlgebra::TwoMv | WitnessAlgebra::Trivial(_) => Ok(true),
        other => Err(ModelError::Unsupported(format!("epsilon_k is decided for MV witnesses, not {other}"))),
    }
}

/// Subgroups of `Q` in a form usable for picking members of intervals.
enum Lattice1 {
    Integers,
    /// Dense; members can be found with denominators powers of `p`.
    Dense { p: u64 },
}

fn rational_lattice(g: &WitnessAlgebra) -> Option<Lattice1> {
    match g {
        WitnessAlgebra::IntegerGroup => Some(Lattice1::Integers),
        WitnessAlgebra::RationalGroup => Some(Lattice1::Dense { p: 2 }),
        WitnessAlgebra::LocalizedRationals(s) => {
            Some(s.iter().next().map_or(Lattice1::Integers, |&p| Lattice1::Dense { p }))
        }
        _ => None,
    }
}

/// Whether [`solve_one`] applies to `a`.
fn supports_exact(a: &WitnessAlgebra) -> bool {
    match a {
        WitnessAlgebra::GammaPerfect(g) | WitnessAlgebra::PositiveCone(g) => rational_lattice(g).is_some(),
        g => rational_lattice(g).is_some(),
    }
}

fn qint(v: BigInt) -> Q {
    Q::from_integer(v)
}

/// Up to two members of the subgroup inside `iv`.
fn members_in(iv: &Interval, g: &WitnessAlgebra, lat: &Lattice1) -> Vec<Q> {
    if iv.is_point() {
        let p = iv.lo.clone().expect("point");
        return if Element::Num(p.clone()).is_member(g) { vec![p] } else { vec![] };
    }
    let one = Q::one();
    let step = match (lat, &iv.lo, &iv.hi) {
        (Lattice1::Dense { p }, Some(lo), Some(hi)) => {
            let half = (hi - lo) / qint(2.into());
            let mut step = one.clone();
            while step > half {
                step /= qint(BigInt::from(*p));
            }
            step
        }
        _ => one.clone(),
    };
    let first = match (&iv.lo, &iv.hi) {
        (Some(lo), _) => (lo / &step).ceil() * &step,
        (None, Some(hi)) => (hi / &step).floor() * &step - &step,
        (None, None) => Q::zero(),
    };
    [first.clone(), first + &step].into_iter().filter(|q| iv.contains(q)).collect()
}

#[derive(Clone)]
enum Sym {
    Grp(Pl1),
    Lex(BigInt, Pl1),
}

impl Sym {
    fn add(&self, o: &Sym) -> Sym {
        match (self, o) {
            (Sym::Grp(a), Sym::Grp(b)) => Sym::Grp(a.add(b)),
            (Sym::Lex(i, a), Sym::Lex(j, b)) => Sym::Lex(i + j, a.add(b)),
            _ => unreachable!("mixed symbolic values"),
        }
    }

    fn neg(&self) -> Sym {
        match self {
            Sym::Grp(a) => Sym::Grp(a.neg()),
            Sym::Lex(i, a) => Sym::Lex(-i, a.neg()),
        }
    }

    fn scale(&self, k: i64) -> Sym {
        let kq = qint(BigInt::from(k));
        match self {
            Sym::Grp(a) => Sym::Grp(a.scale(&kq)),
            Sym::Lex(i, a) => Sym::Lex(i * k, a.scale(&kq)),
        }
    }

    fn max(&self, o: &Sym) -> Sym {
        match (self, o) {
            (Sym::Grp(a), Sym::Grp(b)) => Sym::Grp(a.max(b)),
            (Sym::Lex(i, a), Sym::Lex(j, b)) => match i.cmp(j) {
                std::cmp::Ordering::Greater => self.clone(),
                std::cmp::Ordering::Less => o.clone(),
                std::cmp::Ordering::Equal => Sym::Lex(i.clone(), a.max(b)),
            },
            _ => unreachable!("mixed symbolic values"),
        }
    }

    fn min(&self, o: &Sym) -> Sym {
        self.neg().max(&o.neg()).neg()
    }
}

/// Evaluates `node` with the unknown `z` bound to `zval` and every other
/// variable fixed by `env`, in a subgroup of `Q`, its cone, or `Gamma` of
/// such a group.
fn sym_eval(a: &WitnessAlgebra, node: &Node, env: &Assignment, z: Var, zval: &Sym) -> Result<Sym, ModelError> {
    let rec = |n: &Node| sym_eval(a, n, env, z, zval);
    let gamma = matches!(a, WitnessAlgebra::GammaPerfect(_));
    let konst = |i: i64| {
        if gamma {
            Sym::Lex(BigInt::from(i), Pl1::constant(Q::zero()))
        } else {
            Sym::Grp(Pl1::constant(Q::zero()))
        }
    };
    let (zero, unit) = (konst(0), konst(1));
    let mv_plus = |x: &Sym, y: &Sym| x.add(y).min(&unit);
    let mv_neg = |x: &Sym| unit.add(&x.neg());
    Ok(match (gamma, node) {
        (_, Node::Var(v)) if *v == z => zval.clone(),
        (_, Node::Var(v)) => match env.get(v).ok_or_else(|| ModelError::Unassigned(v.to_string()))? {
            Element::Num(q) => Sym::Grp(Pl1::constant(q.clone())),
            Element::Pair(i, g) => match g.as_num() {
                Some(q) => Sym::Lex(i.clone(), Pl1::constant(q.clone())),
                None => return Err(ModelError::Unsupported(format!("nested inner group in {a}"))),
            },
            other => return Err(ModelError::NotMember { element: other.to_string(), algebra: a.to_string() }),
        },
        (_, Node::Zero) => zero,
        (false, Node::Plus { lhs, rhs }) => rec(lhs)?.add(&rec(rhs)?),
        (false, Node::Neg { arg }) => rec(arg)?.neg(),
        (false, Node::Scalar { k, arg }) => rec(arg)?.scale(*k),
        (false, Node::Diff { lhs, rhs }) => rec(lhs)?.add(&rec(rhs)?.neg()).max(&zero),
        (true, Node::Plus { lhs, rhs }) => mv_plus(&rec(lhs)?, &rec(rhs)?),
        (true, Node::MvNeg { arg }) => mv_neg(&rec(arg)?),
        (true, Node::Scalar { k, arg }) => rec(arg)?.scale(*k).min(&unit),
        (true, Node::Power { k, arg }) => {
            let k = i64::from(*k);
            rec(arg)?.scale(k).add(&unit.scale(k - 1).neg()).max(&zero)
        }
        (true, Node::Diff { lhs, rhs }) => mv_neg(&mv_plus(&mv_neg(&rec(lhs)?), &rec(rhs)?)),
        (_, Node::Join { lhs, rhs }) => rec(lhs)?.max(&rec(rhs)?),
        (_, Node::Meet { lhs, rhs }) => rec(lhs)?.min(&rec(rhs)?),
        (_, other) => {
            return Err(ModelError::Unsupported(format!("`{}` has no interpretation in {a}", other.op_name())))
        }
    })
}

/// Exact solutions (at most two) of a system in one unknown at a fixed
/// point. `None` when the algebra is outside the supported family.
fn solve_one(a: &WitnessAlgebra, eqs: &[Equation], env: &Assignment, z: Var) -> Result<Option<Vec<Element>>, ModelError> {
    let (branches, g): (Vec<(Option<i64>, Interval)>, &WitnessAlgebra) = match a {
        WitnessAlgebra::GammaPerfect(g) => {
            (vec![(Some(0), Interval::at_least(Q::zero())), (Some(1), Interval::at_most(Q::zero()))], g)
        }
        WitnessAlgebra::PositiveCone(g) => (vec![(None, Interval::at_least(Q::zero()))], g),
        g => (vec![(None, Interval::all())], g),
    };
    if !supports_exact(a) {
        return Ok(None);
    }
    let lat = rational_lattice(g).expect("supported");
    let mut found = Vec::new();
    for (bit, domain) in branches {
        let zval = match bit {
            Some(b) => Sym::Lex(BigInt::from(b), Pl1::identity()),
            None => Sym::Grp(Pl1::identity()),
        };
        let mut region = vec![domain];
        for eq in eqs {
            let zeros = match (sym_eval(a, &eq.lhs, env, z, &zval)?, sym_eval(a, &eq.rhs, env, z, &zval)?) {
                (Sym::Grp(f), Sym::Grp(h)) => f.sub(&h).zero_set(),
                (Sym::Lex(i, f), Sym::Lex(j, h)) if i == j => f.sub(&h).zero_set(),
                _ => vec![],
            };
            region = region.iter().flat_map(|iv| zeros.iter().filter_map(move |w| iv.intersect(w))).collect();
            if region.is_empty() {
                break;
            }
        }
        for iv in &region {
            for q in members_in(iv, g, &lat) {
                found.push(match bit {
                    Some(b) => Element::pair(b, Element::Num(q)),
                    None => Element::Num(q),
                });
            }
        }
    }
    found.dedup();
    found.truncate(2);
    Ok(Some(found))
}

fn z_vars(m: usize) -> Vec<Var> {
    (1..=m).map(Var::z).collect()
}

fn is_finite(a: &WitnessAlgebra) -> bool {
    matches!(a, WitnessAlgebra::TwoMv | WitnessAlgebra::Trivial(_))
}

/// Every tuple over `elems` of length `len`, in lexicographic order.
fn tuples(elems: &[Element], len: usize, limit: usize) -> Vec<Vec<Element>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        'outer: for t in &out {
            for e in elems {
                if next.len() >= limit {
                    break 'outer;
                }
                let mut t = t.clone();
                t.push(e.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn holds_all(a: &WitnessAlgebra, eqs: &[Equation], env: &Assignment) -> Result<bool, ModelError> {
    for eq in eqs {
        if eval_node(a, &eq.lhs, env)? != eval_node(a, &eq.rhs, env)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Candidate values for the fallback search: structured small elements,
/// the point's own coordinates and their fractions, and random elements.
fn candidates(a: &WitnessAlgebra, env: &Assignment, opts: &CheckOptions) -> Vec<Element> {
    let mut out = small_elements(a);
    for e in env.values() {
        out.push(e.clone());
        for k in 2..=12 {
            if let Some(d) = divide(e, k) {
                if d.is_member(a) {
                    out.push(d);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
    for _ in 0..16 {
        out.push(sample_element(a, &mut rng, opts.cap));
    }
    if a.is_group() {
        let negs: Vec<Element> = out.iter().map(Element::g_neg).collect();
        out.extend(negs);
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|e| seen.insert(e.clone()));
    out
}

fn divide(e: &Element, k: i64) -> Option<Element> {
    match e {
        Element::Num(q) => Some(Element::Num(q / qint(BigInt::from(k)))),
        Element::Pair(i, g) => Some(Element::Pair(i.clone(), Box::new(divide(g, k)?))),
        _ => None,
    }
}

/// Solutions of the existential block of `phi` at the point `x`.
pub fn solve_at(
    a: &WitnessAlgebra,
    phi: &EfdSentence,
    x: &Assignment,
    opts: &CheckOptions,
) -> Result<PointOutcome, ModelError> {
    check_species(a, phi.signature())?;
    check_env(a, x)?;
    let zs = z_vars(phi.m());
    let with = |vals: &[Element]| {
        let mut env = x.clone();
        env.extend(zs.iter().copied().zip(vals.iter().cloned()));
        env
    };
    let z_part = |env: &Assignment| -> Assignment {
        env.iter().filter(|(v, _)| zs.contains(v)).map(|(v, e)| (*v, e.clone())).collect()
    };
    if is_finite(a) && phi.m() <= EXHAUSTIVE_VARS {
        let mut solutions = Vec::new();
        for t in tuples(&small_elements(a), phi.m(), usize::MAX) {
            let env = with(&t);
            if holds_all(a, phi.equations(), &env)? {
                solutions.push(z_part(&env));
                if solutions.len() == 2 {
                    break;
                }
            }
        }
        return Ok(PointOutcome { solutions, exact: true });
    }
    if phi.m() == 1 {
        if let Some(found) = solve_one(a, phi.equations(), x, zs[0])? {
            let solutions = found.into_iter().map(|e| [(zs[0], e)].into_iter().collect()).collect();
            return Ok(PointOutcome { solutions, exact: true });
        }
    }
    // Search over the first m-1 unknowns and solve for the last one
    // exactly when the algebra allows it.
    let cands = candidates(a, x, opts);
    let last = zs[phi.m() - 1];
    let lead = phi.m() - 1;
    let exact_last = supports_exact(a);
    let free = if exact_last { lead } else { phi.m() };
    let per_var = (SEARCH_LIMIT as f64).powf(1.0 / free as f64).floor().max(2.0) as usize;
    let cands: Vec<Element> = cands.into_iter().take(per_var).collect();
    let mut solutions: Vec<Assignment> = Vec::new();
    'search: for t in tuples(&cands, free, SEARCH_LIMIT) {
        let env = with(&t);
        let full: Vec<Assignment> = if exact_last {
            let found = solve_one(a, phi.equations(), &env, last)?.unwrap_or_default();
            found
                .into_iter()
                .map(|e| {
                    let mut env = env.clone();
                    env.insert(last, e);
                    env
                })
                .collect()
        } else if holds_all(a, phi.equations(), &env)? {
            vec![env]
        } else {
            vec![]
        };
        for env in full {
            let zs_only = z_part(&env);
            if !solutions.contains(&zs_only) {
                solutions.push(zs_only);
            }
            if solutions.len() == 2 {
                break 'search;
            }
        }
    }
    Ok(PointOutcome { solutions, exact: false })
}

/// Sample assignments of `vars`: every tuple in a finite algebra when the
/// budget allows, otherwise structured tuples of small elements followed by
/// seeded random ones.
pub fn sample_assignments(a: &WitnessAlgebra, vars: &[Var], opts: &CheckOptions) -> Vec<Assignment> {
    let budget = opts.budget.max(1);
    let small = small_elements(a);
    let mut rows: Vec<Vec<Element>> = if is_finite(a) {
        tuples(&small, vars.len(), budget)
    } else {
        let mut s = 2usize;
        while s < small.len() && (s + 1).checked_pow(vars.len() as u32).map_or(false, |c| c <= budget / 2) {
            s += 1;
        }
        tuples(&small[..s.min(small.len())], vars.len(), budget / 2)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    while rows.len() < budget && !is_finite(a) {
        rows.push(vars.iter().map(|_| sample_element(a, &mut rng, opts.cap)).collect());
    }
    rows.into_iter().map(|row| vars.iter().copied().zip(row).collect()).collect()
}

fn x_vars(n: usize) -> Vec<Var> {
    (1..=n).map(Var::x).collect()
}

fn check_points(
    a: &WitnessAlgebra,
    phi: &EfdSentence,
    opts: &CheckOptions,
    require_existence: bool,
) -> Result<Verdict, ModelError> {
    check_species(a, phi.signature())?;
    let points = sample_assignments(a, &x_vars(phi.n()), opts);
    let mut exact = true;
    for x in &points {
        let out = solve_at(a, phi, x, opts)?;
        exact &= out.exact;
        let confidence = if out.exact { Confidence::Exact } else { Confidence::Sampled };
        match out.solutions.len() {
            0 if require_existence => {
                return Ok(Verdict::Falsified { witness: x.clone(), failure: Failure::NoSolution, confidence })
            }
            2.. => {
                let failure =
                    Failure::NotUnique { first: out.solutions[0].clone(), second: out.solutions[1].clone() };
                return Ok(Verdict::Falsified { witness: x.clone(), failure, confidence: Confidence::Exact });
            }
            _ => {}
        }
    }
    let confidence = if exact { Confidence::Exact } else { Confidence::Sampled };
    Ok(Verdict::ConsistentOnSample { points: points.len(), confidence })
}

/// Checks existence and uniqueness of solutions at sampled points.
pub fn check_sentence_sampled(a: &WitnessAlgebra, phi: &EfdSentence, opts: &CheckOptions) -> Result<Verdict, ModelError> {
    check_points(a, phi, opts, true)
}

/// Checks `U(phi)` at sampled points: no point may have two solutions.
pub fn check_uniqueness_sampled(a: &WitnessAlgebra, phi: &EfdSentence, opts: &CheckOptions) -> Result<Verdict, ModelError> {
    check_points(a, phi, opts, false)
}

/// Checks an identity at sampled points.
pub fn check_identity_sampled(a: &WitnessAlgebra, id: &Identity, opts: &CheckOptions) -> Result<Verdict, ModelError> {
    check_species(a, id.signature())?;
    let points = sample_assignments(a, &x_vars(id.n()), opts);
    for x in &points {
        let lhs = eval_node(a, &id.equation().lhs, x)?;
        let rhs = eval_node(a, &id.equation().rhs, x)?;
        if lhs != rhs {
            return Ok(Verdict::Falsified {
                witness: x.clone(),
                failure: Failure::Unequal { lhs, rhs },
                confidence: Confidence::Exact,
            });
        }
    }
    let confidence = if is_finite(a) && points.len() == small_elements(a).len().pow(id.n() as u32) {
        Confidence::Exact
    } else {
        Confidence::Sampled
    };
    Ok(Verdict::ConsistentOnSample { points: points.len(), confidence })
}

fn require_finite(a: &WitnessAlgebra, vars: usize) -> Result<Vec<Element>, ModelError> {
    if !is_finite(a) {
        return Err(ModelError::Unsupported(format!("{a} is infinite")));
    }
    if vars > EXHAUSTIVE_VARS {
        return Err(ModelError::Unsupported(format!("{vars} variables exceed the exhaustive bound")));
    }
    Ok(small_elements(a))
}

/// Decides an identity in a finite algebra by enumeration.
pub fn holds_identity_exhaustive(a: &WitnessAlgebra, id: &Identity) -> Result<bool, ModelError> {
    check_species(a, id.signature())?;
    let elems = require_finite(a, id.n())?;
    let vars = x_vars(id.n());
    for t in tuples(&elems, id.n(), usize::MAX) {
        let env: Assignment = vars.iter().copied().zip(t).collect();
        if !holds_all(a, std::slice::from_ref(id.equation()), &env)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decides a quasi-identity in a finite algebra by enumeration.
pub fn holds_quasi_identity_exhaustive(a: &WitnessAlgebra, q: &QuasiIdentity) -> Result<bool, ModelError> {
    check_species(a, q.signature)?;
    let mut vars = x_vars(q.n);
    vars.extend((1..=q.m).map(Var::y));
    vars.extend(z_vars(q.m));
    let elems = require_finite(a, vars.len())?;
    for t in tuples(&elems, vars.len(), usize::MAX) {
        let env: Assignment = vars.iter().copied().zip(t).collect();
        if holds_all(a, &q.hypotheses, &env)? && !holds_all(a, &q.conclusions, &env)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::named::{delta_k, epsilon_k};
    use crate::term::{parse_sentence, Signature};

    fn model(d: &str) -> WitnessAlgebra {
        WitnessAlgebra::parse(d).unwrap()
    }

    #[test]
    fn delta2_on_integers_fails_at_one() {
        let v = check_sentence_sampled(&model("z"), &delta_k(2, Signature::Group).unwrap(), &CheckOptions::default())
            .unwrap();
        match v {
            Verdict::Falsified { witness, failure: Failure::NoSolution, confidence: Confidence::Exact } => {
                assert_eq!(witness[&Var::x(1)], Element::int(1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn delta_exact_matches_sampling() {
        for d in ["z", "q", "qs:2", "qs:3", "qs:2,3"] {
            let a = model(d);
            for k in 1..=6u32 {
                let sampled = check_sentence_sampled(&a, &delta_k(k, Signature::Group).unwrap(), &CheckOptions::new(60, 1))
                    .unwrap();
                assert_eq!(sampled.is_consistent(), holds_delta_exact(&a, k.into()).unwrap(), "{d} k={k}");
            }
        }
    }

    #[test]
    fn epsilon_on_gamma() {
        let a = model("gamma(qs:2)");
        let opts = CheckOptions::new(80, 3);
        assert!(check_sentence_sampled(&a, &epsilon_k(2).unwrap(), &opts).unwrap().is_consistent());
        assert!(!check_sentence_sampled(&a, &epsilon_k(3).unwrap(), &opts).unwrap().is_consistent());
        assert!(holds_epsilon_exact(&a, 4).unwrap());
        assert!(!holds_epsilon_exact(&a, 6).unwrap());
    }

    #[test]
    fn d_k_inverts_t_k() {
        let a = model("gamma(q)");
        let phi = epsilon_k(3).unwrap();
        let x: Assignment = [(Var::x(1), Element::pair(0, Element::ratio(3, 2)))].into_iter().collect();
        let out = solve_at(&a, &phi, &x, &CheckOptions::default()).unwrap();
        assert_eq!(out.unique().unwrap()[&Var::z(1)], Element::pair(0, Element::ratio(1, 2)));
    }

    #[test]
    fn non_uniqueness_is_witnessed() {
        let phi = parse_sentence("forall x1 exists! z1 : z1 \\/ 0 = x1 \\/ 0", Signature::Group).unwrap();
        let v = check_sentence_sampled(&model("q"), &phi, &CheckOptions::new(10, 0)).unwrap();
        assert!(matches!(v, Verdict::Falsified { failure: Failure::NotUnique { .. }, .. }), "{v:?}");
    }

    #[test]
    fn finite_models() {
        let phi = parse_sentence("forall x1 exists! z1 : z1 = x1 & z1 = ~x1", Signature::Mv).unwrap();
        assert!(!check_sentence_sampled(&model("two"), &phi, &CheckOptions::default()).unwrap().is_consistent());
        let e2 = epsilon_k(2).unwrap();
        assert!(check_sentence_sampled(&model("two"), &e2, &CheckOptions::default()).unwrap().is_consistent());
        assert!(holds_quasi_identity_exhaustive(&model("two"), &e2.uniqueness()).unwrap());
        let triv = model("trivial:group");
        let phi = parse_sentence("forall x1 exists! z1 : z1 \\/ 0 = x1", Signature::Group).unwrap();
        assert!(check_sentence_sampled(&triv, &phi, &CheckOptions::default()).unwrap().is_consistent());
    }

    #[test]
    fn second_unknown_solved_exactly() {
        let phi = parse_sentence("forall x1 exists! z1 z2 : z1 = x1 & 3 z2 = z1 + x1", Signature::Group).unwrap();
        let v = check_sentence_sampled(&model("q"), &phi, &CheckOptions::new(40, 0)).unwrap();
        assert!(v.is_consistent());
        let v = check_sentence_sampled(&model("z"), &phi, &CheckOptions::new(40, 0)).unwrap();
        assert!(!v.is_consistent());
    }

    #[test]
    fn two_unknowns_use_search() {
        let phi = parse_sentence("forall x1 exists! z1 z2 : z1 = x1 & z2 = -x1", Signature::Group).unwrap();
        let v = check_sentence_sampled(&model("q"), &phi, &CheckOptions::new(20, 0)).unwrap();
        assert_eq!(v, Verdict::ConsistentOnSample { points: 20, confidence: Confidence::Sampled });
    }
}
