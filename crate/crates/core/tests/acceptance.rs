//! Acceptance criteria. Each check compares the library against an oracle
//! written here from first principles, prints one PASS/FAIL line, and the
//! process exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use efd::canon::{piecewise_canonical_n, reduce_delta_kt, DEFAULT_CAP};
use efd::gen::{group_terms_within_cap, hoop_term, small_systems, test_delta_kts, GenConfig};
use efd::geometry::{is_full_dimensional, FullDim, IneqSystem, LinearForm, Q};
use efd::lattice::{
    expansion_order, includes, join, meet, AeClass, BaseLogic, ExpansionOrder, Family, LogicExpansion, PrimeSet,
};
use efd::models::{
    check_sentence_sampled, eval, holds_delta_exact, holds_epsilon_exact, solve_at, Assignment, CheckOptions,
    Element, WitnessAlgebra,
};
use efd::term::named::{delta_k, epsilon_k, t_k};
use efd::term::{Node, Signature, Statement, Term, Var};
use efd::translate::{classify_mv, phi_rad_decompose, star_sentence, star_term};

const SEED: u64 = 0x00ac_ce97;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------- oracles

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn factor(mut k: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut p = 2;
    while p * p <= k {
        while k % p == 0 {
            out.insert(p);
            k /= p;
        }
        p += 1;
    }
    if k > 1 {
        out.insert(k);
    }
    out
}

/// Whether every prime of the denominator lies in `s`.
fn s_smooth(v: &Q, s: &BTreeSet<u64>) -> bool {
    let mut d = v.denom().clone();
    for &p in s {
        let bp = BigInt::from(p);
        while (&d % &bp).is_zero() {
            d /= &bp;
        }
    }
    d.is_one()
}

/// Value of a group term at a rational point.
fn group_value(t: &Node, x: &[Q]) -> Q {
    let r = |n: &Node| group_value(n, x);
    match t {
        Node::Var(v) => x[v.index - 1].clone(),
        Node::Zero => Q::zero(),
        Node::Plus { lhs, rhs } => r(lhs) + r(rhs),
        Node::Neg { arg } => -r(arg),
        Node::Join { lhs, rhs } => r(lhs).max(r(rhs)),
        Node::Meet { lhs, rhs } => r(lhs).min(r(rhs)),
        Node::Diff { lhs, rhs } => (r(lhs) - r(rhs)).max(Q::zero()),
        Node::Scalar { k, arg } => Q::from_integer(BigInt::from(*k)) * r(arg),
        other => panic!("not a group node: {other:?}"),
    }
}

/// Value of a hoop term at a point of the nonnegative rationals.
fn hoop_value(t: &Node, x: &[Q]) -> Q {
    let r = |n: &Node| hoop_value(n, x);
    match t {
        Node::Var(v) => x[v.index - 1].clone(),
        Node::Zero => Q::zero(),
        Node::Plus { lhs, rhs } => r(lhs) + r(rhs),
        Node::Diff { lhs, rhs } => (r(lhs) - r(rhs)).max(Q::zero()),
        Node::Scalar { k, arg } => Q::from_integer(BigInt::from(*k)) * r(arg),
        other => panic!("not a hoop node: {other:?}"),
    }
}

/// Elements `(i, x)` of Gamma(Z x G, (1, 0)): either `(0, x >= 0)` or `(1, x <= 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Gam(i64, Q);

impl Gam {
    fn to_element(&self) -> Element {
        Element::pair(self.0, Element::Num(self.1.clone()))
    }

    fn from_element(e: &Element) -> Gam {
        match e {
            Element::Pair(i, g) => Gam(i.to_i64().expect("small"), g.as_num().expect("rational").clone()),
            other => panic!("not a pair: {other:?}"),
        }
    }

    /// Truncated sum `min(u, a + b)` in the lexicographic order.
    fn add(&self, o: &Gam) -> Gam {
        let (i, x) = (self.0 + o.0, &self.1 + &o.1);
        if i > 1 || (i == 1 && x.is_positive()) {
            Gam(1, Q::zero())
        } else {
            Gam(i, x)
        }
    }

    fn neg(&self) -> Gam {
        Gam(1 - self.0, -self.1.clone())
    }

    fn t(&self, k: i64) -> Gam {
        Gam(self.0, &self.1 * Q::from_integer(k.into()))
    }

    fn d(&self, k: i64) -> Gam {
        Gam(self.0, &self.1 / Q::from_integer(k.into()))
    }

    fn radical(&self) -> bool {
        self.0 == 0
    }
}

/// A random element of Gamma(Z x Q_S); `s = None` means all of Q.
fn random_gam<R: Rng>(rng: &mut R, s: Option<&BTreeSet<u64>>) -> Gam {
    let den = match s {
        None => rng.gen_range(1..=12),
        Some(s) => s.iter().map(|&p| p.pow(rng.gen_range(0..3)) as i64).product(),
    };
    let x = q(rng.gen_range(0..=60), den);
    if rng.gen_bool(0.5) {
        Gam(0, x)
    } else {
        Gam(1, -x)
    }
}

/// Rank of integer vectors by fraction-free elimination.
fn int_rank(rows: &[Vec<i64>], n: usize) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&v| i128::from(v)).collect()).collect();
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for j in 0..n {
                    m[r][j] = m[r][j] * a - m[rank][j] * b;
                }
                let g = m[r].iter().fold(0i128, |g, &v| g.gcd(&v));
                if g > 1 {
                    m[r].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rational_rank(vs: &[Vec<Q>]) -> usize {
    let mut m = vs.to_vec();
    let n = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            let f = &m[r][c] / &m[rank][c];
            for j in 0..n {
                let d = &f * &m[rank][j];
                m[r][j] -= d;
            }
        }
        rank += 1;
    }
    rank
}

fn int_rows(s: &IneqSystem) -> Vec<Vec<i64>> {
    s.rows.iter().map(|r| r.0.iter().map(|c| c.to_i64().expect("small")).collect()).collect()
}

fn dot(r: &[i64], x: &[i64]) -> i64 {
    r.iter().zip(x).map(|(a, b)| a * b).sum()
}

fn box_points(n: usize, radius: i64) -> Vec<Vec<i64>> {
    let side = 2 * radius + 1;
    (0..side.pow(n as u32))
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let d = idx % side - radius;
                    idx /= side;
                    d
                })
                .collect()
        })
        .collect()
}

fn x_env(values: &[Element]) -> Assignment {
    values.iter().enumerate().map(|(i, e)| (Var::x(i + 1), e.clone())).collect()
}

fn qs(s: &BTreeSet<u64>) -> WitnessAlgebra {
    WitnessAlgebra::LocalizedRationals(s.clone())
}

fn prime_subsets(ps: &[u64]) -> Vec<BTreeSet<u64>> {
    (0..1u32 << ps.len())
        .map(|m| ps.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &p)| p).collect())
        .collect()
}

// ------------------------------------------------------------- criteria

fn piecewise_soundness() -> Outcome {
    let terms = group_terms_within_cap(SEED, 200, GenConfig::default(), DEFAULT_CAP);
    let a = WitnessAlgebra::RationalGroup;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut points = 0usize;
    for (n, t) in &terms {
        let pl = piecewise_canonical_n(t, *n, DEFAULT_CAP).map_err(|e| format!("{t:?}: {e}"))?;
        let tt = Term::new(Signature::Group, t.clone()).map_err(|e| e.to_string())?;
        for i in 0..1000 {
            let x: Vec<Q> = if i < 3usize.pow(*n as u32) {
                (0..*n).map(|j| Q::from_integer(BigInt::from((i / 3usize.pow(j as u32)) as i64 % 3 - 1))).collect()
            } else {
                (0..*n).map(|_| q(rng.gen_range(-40..=40), rng.gen_range(1..=9))).collect()
            };
            let want = group_value(t, &x);
            let lib = eval(&a, &tt, &x_env(&x.iter().cloned().map(Element::Num).collect::<Vec<_>>()))
                .map_err(|e| e.to_string())?;
            ensure(lib.as_num() == Some(&want), || format!("eval mismatch for {t:?} at {x:?}"))?;
            let containing: Vec<_> =
                pl.pieces.iter().filter(|p| p.region.rows.iter().all(|r| !r.eval(&x).is_negative())).collect();
            ensure(!containing.is_empty(), || format!("{t:?}: no piece contains {x:?}"))?;
            for p in containing {
                ensure(p.form.eval(&x) == want, || format!("{t:?}: piece {} disagrees at {x:?}", p.form))?;
            }
            points += 1;
        }
    }
    Ok(format!("{} terms, {points} points, full coverage", terms.len()))
}

fn reduction_oracle() -> Outcome {
    let family = test_delta_kts(SEED, 60);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let opts = CheckOptions { budget: 200, seed: SEED, cap: 12 };
    let mut checks = 0;
    for d in &family {
        let red = reduce_delta_kt(d, DEFAULT_CAP).map_err(|e| e.to_string())?;
        // t is homogeneous, so integer points stand in for all of Q_S^n.
        let mut pts = box_points(d.n, 4);
        pts.extend((0..300).map(|_| (0..d.n).map(|_| rng.gen_range(-1000..=1000)).collect()));
        let values: Vec<Q> = pts
            .iter()
            .map(|p| group_value(&d.t, &p.iter().map(|&v| Q::from_integer(v.into())).collect::<Vec<_>>()))
            .collect();
        let k = Q::from_integer(BigInt::from(d.k));
        let phi = d.sentence();
        for s in prime_subsets(&[2, 3, 5]) {
            let oracle = values.iter().all(|v| s_smooth(&(v / &k), &s));
            let predicted = factor(red.k_prime).is_subset(&s);
            let exact = holds_delta_exact(&qs(&s), red.k_prime).map_err(|e| e.to_string())?;
            let sampled = check_sentence_sampled(&qs(&s), &phi, &opts).map_err(|e| e.to_string())?.is_consistent();
            ensure(oracle == predicted && exact == predicted && sampled == predicted, || {
                format!(
                    "k={} t={:?} k'={} S={s:?}: oracle {oracle}, predicted {predicted}, exact {exact}, sampled {sampled}",
                    d.k, d.t, red.k_prime
                )
            })?;
            checks += 1;
        }
    }
    Ok(format!("{} sentences, {checks} (sentence, S) pairs", family.len()))
}

fn fulldim_case(s: &IneqSystem, pts: &[Vec<i64>]) -> Result<bool, String> {
    let rows = int_rows(s);
    let inside: Vec<Vec<i64>> = pts.iter().filter(|p| rows.iter().all(|r| dot(r, p) >= 0)).cloned().collect();
    let oracle_full = int_rank(&inside, s.n) == s.n;
    match is_full_dimensional(s) {
        FullDim::Full { basis } => {
            ensure(basis.len() == s.n && basis.iter().all(|v| s.contains(v)) && rational_rank(&basis) == s.n, || {
                format!("{s:?}: bad basis")
            })?;
        }
        FullDim::Degenerate { vanishing, .. } => {
            ensure(!oracle_full, || format!("{s:?}: oracle finds n independent solutions, verdict is degenerate"))?;
            let f: Vec<i64> = vanishing.0.iter().map(|c| c.to_i64().expect("small")).collect();
            ensure(f.iter().any(|&c| c != 0) && inside.iter().all(|p| dot(&f, p) == 0), || {
                format!("{s:?}: form {f:?} does not vanish on the solutions")
            })?;
        }
    }
    Ok(oracle_full)
}

fn fulldim_oracle() -> Outcome {
    let boxes: Vec<Vec<Vec<i64>>> = (0..=3).map(|n| box_points(n, 4)).collect();
    let mut systems = 0;
    let mut full_rank = 0;
    for s in small_systems(3, 3, 3) {
        full_rank += usize::from(fulldim_case(&s, &boxes[s.n])?);
        systems += 1;
    }
    // In one and two variables, also run the unreduced family.
    for n in 1..=2usize {
        let dirs: Vec<Vec<i64>> = box_points(n, 3).into_iter().filter(|v| v.iter().any(|&c| c != 0)).collect();
        let mut idx: Vec<Vec<usize>> = vec![vec![]];
        for len in 1..=3 {
            let mut next = Vec::new();
            for set in idx.iter().filter(|s| s.len() == len - 1) {
                for i in set.last().map_or(0, |&l| l + 1)..dirs.len() {
                    next.push([set.as_slice(), &[i]].concat());
                }
            }
            idx.extend(next);
        }
        for set in &idx {
            let s = IneqSystem::new(n, set.iter().map(|&i| LinearForm::from_i64(&dirs[i])).collect())
                .map_err(|e| e.to_string())?;
            full_rank += usize::from(fulldim_case(&s, &boxes[n])?);
            systems += 1;
        }
    }
    Ok(format!("{systems} systems, {full_rank} with full-rank samples"))
}

fn endomorphism() -> Outcome {
    let a = WitnessAlgebra::gamma(WitnessAlgebra::RationalGroup).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let opts = CheckOptions::default();
    let mv = |n: Node| Term::new(Signature::Mv, n).expect("mv term");
    let ev = |t: &Term, xs: &[&Gam]| {
        let vals: Vec<Element> = xs.iter().map(|g| g.to_element()).collect();
        Gam::from_element(&eval(&a, t, &x_env(&vals)).expect("evaluates"))
    };
    let mut pairs = 0;
    for k in [2i64, 3, 5] {
        let ku = k as u32;
        let t1 = mv(t_k(ku, Node::x(1)));
        let t_sum = mv(t_k(ku, Node::plus(Node::x(1), Node::x(2))));
        let t_neg = mv(t_k(ku, Node::mv_neg(Node::x(1))));
        let eps = epsilon_k(ku).map_err(|e| e.to_string())?;
        let solve = |g: &Gam| -> Option<Gam> {
            let out = solve_at(&a, &eps, &x_env(&[g.to_element()]), &opts).ok()?;
            out.unique().map(|s| Gam::from_element(&s[&Var::z(1)]))
        };
        for _ in 0..1000 {
            let (p, r) = (random_gam(&mut rng, None), random_gam(&mut rng, None));
            let tp = ev(&t1, &[&p]);
            ensure(tp == p.t(k), || format!("t_{k}({p:?}) = {tp:?}"))?;
            ensure(ev(&t_sum, &[&p, &r]) == p.t(k).add(&r.t(k)), || format!("additivity fails: k={k} {p:?} {r:?}"))?;
            ensure(ev(&t_neg, &[&p]) == p.t(k).neg(), || format!("negation fails: k={k} {p:?}"))?;
            ensure(p == r || tp != ev(&t1, &[&r]), || format!("t_{k} identifies {p:?} and {r:?}"))?;
            ensure(solve(&tp).as_ref() == Some(&p), || format!("d_{k}(t_{k}({p:?})) != {p:?}"))?;
            let dp = solve(&p);
            ensure(dp.as_ref() == Some(&p.d(k)) && ev(&t1, &[&p.d(k)]) == p, || {
                format!("t_{k}(d_{k}({p:?})) != {p:?}")
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn star_transfer() -> Outcome {
    let opts = CheckOptions { budget: 200, seed: SEED, cap: 12 };
    for k in [1u32, 2, 3, 4, 6] {
        let hoop = delta_k(k, Signature::Hoop).map_err(|e| e.to_string())?;
        let star = star_sentence(&hoop).map_err(|e| e.to_string())?.sentence;
        for s in prime_subsets(&[2, 3]) {
            let want = factor(u64::from(k)).is_subset(&s);
            let g = qs(&s);
            let cone = WitnessAlgebra::cone(g.clone()).map_err(|e| e.to_string())?;
            let on_cone = check_sentence_sampled(&cone, &hoop, &opts).map_err(|e| e.to_string())?.is_consistent();
            let on_group = check_sentence_sampled(&g, &star, &opts).map_err(|e| e.to_string())?.is_consistent();
            ensure(on_cone == want && on_group == want, || {
                format!("k={k} S={s:?}: expected {want}, cone {on_cone}, group {on_group}")
            })?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let qa = WitnessAlgebra::RationalGroup;
    let cone = WitnessAlgebra::cone(qa.clone()).map_err(|e| e.to_string())?;
    for _ in 0..100 {
        let n = rng.gen_range(1..=3);
        let t = hoop_term(&mut rng, n, 5, 6);
        let ht = Term::new(Signature::Hoop, t.clone()).map_err(|e| e.to_string())?;
        let gt = Term::new(Signature::Group, star_term(&t).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        for _ in 0..100 {
            let x: Vec<Q> = (0..n).map(|_| q(rng.gen_range(0..=40), rng.gen_range(1..=9))).collect();
            let env = x_env(&x.iter().cloned().map(Element::Num).collect::<Vec<_>>());
            let want = hoop_value(&t, &x);
            let (h, g) = (eval(&cone, &ht, &env), eval(&qa, &gt, &env));
            ensure(
                h.as_ref().ok().and_then(Element::as_num) == Some(&want)
                    && g.as_ref().ok().and_then(Element::as_num) == Some(&want),
                || format!("{t:?} at {x:?}: cone {h:?}, star {g:?}, expected {want}"),
            )?;
        }
    }
    Ok("5 values of k x 4 prime sets, 100 terms x 100 points".into())
}

fn mv_classification() -> Outcome {
    for k in 1..=12u32 {
        let eps = epsilon_k(k).map_err(|e| e.to_string())?;
        let got = classify_mv(&[Statement::Sentence(eps)], DEFAULT_CAP).map_err(|e| e.to_string())?.class;
        let want = AeClass::Divisible(PrimeSet::finite(factor(u64::from(k))).map_err(|e| e.to_string())?);
        ensure(got == want, || format!("epsilon {k}: got {got}, expected {want}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let opts = CheckOptions::default();
    for s in prime_subsets(&[2, 3, 5, 7]) {
        let a = WitnessAlgebra::gamma(qs(&s)).map_err(|e| e.to_string())?;
        for p in [2u32, 3, 5, 7] {
            let want = s.contains(&u64::from(p));
            let exact = holds_epsilon_exact(&a, u64::from(p)).map_err(|e| e.to_string())?;
            ensure(exact == want, || format!("epsilon {p} in {a}: exact {exact}, expected {want}"))?;
            // Pointwise: the unique solution at x is x scaled down by p when it exists.
            let eps = epsilon_k(p).map_err(|e| e.to_string())?;
            let mut xs = vec![Gam(0, Q::one()), Gam(1, -Q::one())];
            xs.extend((0..20).map(|_| random_gam(&mut rng, Some(&s))));
            for x in xs {
                let out = solve_at(&a, &eps, &x_env(&[x.to_element()]), &opts).map_err(|e| e.to_string())?;
                let d = x.d(i64::from(p));
                let expected: Vec<Gam> = if s_smooth(&d.1, &s) { vec![d] } else { vec![] };
                let got: Vec<Gam> = out.solutions.iter().map(|z| Gam::from_element(&z[&Var::z(1)])).collect();
                ensure(got == expected, || format!("epsilon {p} in {a} at {x:?}: {got:?} vs {expected:?}"))?;
            }
        }
    }
    Ok("k = 1..12 and 16 prime sets x 4 primes".into())
}

fn decomposition() -> Outcome {
    let opts = CheckOptions { budget: 500, seed: SEED, cap: 12 };
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    for k in [2i64, 3] {
        let phi = epsilon_k(k as u32).map_err(|e| e.to_string())?;
        let parts = phi_rad_decompose(&phi).map_err(|e| e.to_string())?;
        for s in [None, Some(BTreeSet::from([2u64]))] {
            let a = WitnessAlgebra::gamma(s.as_ref().map_or(WitnessAlgebra::RationalGroup, qs))
                .map_err(|e| e.to_string())?;
            // Solutions of epsilon_k at x, computed directly.
            let sol = |x: &Gam| -> Vec<Gam> {
                let d = x.d(k);
                match &s {
                    Some(s) if !s_smooth(&d.1, s) => vec![],
                    _ => vec![d],
                }
            };
            let mut input_holds = true;
            let mut outputs_hold = vec![true; parts.len()];
            for _ in 0..500 {
                let x = random_gam(&mut rng, s.as_ref());
                input_holds &= sol(&x).len() == 1;
                for (j, part) in parts.iter().enumerate() {
                    let out = solve_at(&a, &part.sentence, &x_env(&[x.to_element()]), &opts)
                        .map_err(|e| e.to_string())?;
                    let got: Vec<Gam> = out.solutions.iter().map(|z| Gam::from_element(&z[&Var::z(1)])).collect();
                    let want: Vec<Gam> = if x.radical() {
                        let flipped = if part.sign[0] { x.neg() } else { x.clone() };
                        sol(&flipped).into_iter().map(|z| if part.witness[0] { z.neg() } else { z }).collect()
                    } else {
                        vec![Gam(0, Q::zero())]
                    };
                    ensure(got == want, || format!("k={k} {a} sign {:?} at {x:?}: {got:?} vs {want:?}", part.sign))?;
                    if x.radical() {
                        ensure(got.iter().all(Gam::radical), || format!("k={k} {a}: non-radical solution at {x:?}"))?;
                    }
                    outputs_hold[j] &= got.len() == 1;
                }
            }
            let all = outputs_hold.iter().all(|&b| b);
            ensure(all == input_holds, || format!("k={k} {a}: input {input_holds}, outputs {outputs_hold:?}"))?;
        }
    }
    Ok("epsilon 2 and epsilon 3, 500 samples in each of two models".into())
}

/// Isomorphism of two finite posets given by their order relations.
fn isomorphic(a: &[Vec<bool>], b: &[Vec<bool>]) -> bool {
    fn extend(a: &[Vec<bool>], b: &[Vec<bool>], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] || (0..i).any(|p| a[p][i] != b[map[p]][j] || a[i][p] != b[j][map[p]]) {
                continue;
            }
            map.push(j);
            used[j] = true;
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[j] = false;
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

/// A chain of length `c` placed below the cube of subsets of a 3-set.
fn chain_below_cube(c: usize) -> Vec<Vec<bool>> {
    let size = c + 8;
    let le = |a: usize, b: usize| match (a < c, b < c) {
        (true, true) => a <= b,
        (true, false) => true,
        (false, true) => false,
        (false, false) => (a - c) & !(b - c) == 0,
    };
    (0..size).map(|a| (0..size).map(|b| le(a, b)).collect()).collect()
}

fn dual(m: &[Vec<bool>]) -> Vec<Vec<bool>> {
    (0..m.len()).map(|a| (0..m.len()).map(|b| m[b][a]).collect()).collect()
}

fn lattice_structure() -> Outcome {
    let sets: Vec<PrimeSet> =
        prime_subsets(&[2, 3, 5]).into_iter().map(|s| PrimeSet::finite(s).expect("primes")).collect();
    for (family, chain) in [(Family::G, 1), (Family::P, 2)] {
        let mut classes = vec![AeClass::Trivial];
        if family == Family::P {
            classes.push(AeClass::Boolean);
        }
        classes.extend(sets.iter().cloned().map(AeClass::Divisible));
        let rel: Vec<Vec<bool>> = classes
            .iter()
            .map(|a| classes.iter().map(|b| includes(family, a, b).expect("family")).collect())
            .collect();
        ensure(isomorphic(&rel, &chain_below_cube(chain)), || format!("{} classes: wrong shape", family.name()))?;

        let base = if family == Family::G { BaseLogic::Bal } else { BaseLogic::Lp };
        let mut exps: Vec<LogicExpansion> = sets.iter().cloned().map(|s| LogicExpansion::new(base, s)).collect();
        exps.push(LogicExpansion::inconsistent(base));
        if base == BaseLogic::Lp {
            exps.push(LogicExpansion::classical());
        }
        let order: Vec<Vec<ExpansionOrder>> =
            exps.iter().map(|a| exps.iter().map(|b| expansion_order(a, b).expect("base")).collect()).collect();
        let morph: Vec<Vec<bool>> = order
            .iter()
            .map(|r| r.iter().map(|o| matches!(o, ExpansionOrder::Forward | ExpansionOrder::Equipollent)).collect())
            .collect();
        ensure(isomorphic(&morph, &dual(&chain_below_cube(chain))), || format!("{} expansions: wrong shape", base.name()))?;
        for (i, a) in exps.iter().enumerate() {
            for (j, b) in exps.iter().enumerate() {
                let (ca, cb) = (a.class().expect("class"), b.class().expect("class"));
                let want = match (includes(family, &cb, &ca).expect("f"), includes(family, &ca, &cb).expect("f")) {
                    (true, true) => ExpansionOrder::Equipollent,
                    (true, false) => ExpansionOrder::Forward,
                    (false, true) => ExpansionOrder::Backward,
                    (false, false) => ExpansionOrder::Incomparable,
                };
                ensure(order[i][j] == want, || format!("{a:?} vs {b:?}: {:?}, expected {want:?}", order[i][j]))?;
            }
        }
    }

    // Random pairs: meet and join against set algebra on prime membership.
    const PROBE: [u64; 7] = [2, 3, 5, 7, 11, 13, 17];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    for family in [Family::G, Family::P] {
        // Classes as ranks: 0 trivial, 1 boolean, 2 divisible with membership bits.
        let random = |rng: &mut ChaCha8Rng| -> AeClass {
            match rng.gen_range(0..10) {
                0 => AeClass::Trivial,
                1 if family == Family::P => AeClass::Boolean,
                _ => {
                    let pick: Vec<u64> = PROBE[..5].iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
                    AeClass::Divisible(if rng.gen_bool(0.3) {
                        PrimeSet::cofinite(pick).expect("primes")
                    } else {
                        PrimeSet::finite(pick).expect("primes")
                    })
                }
            }
        };
        let key = |c: &AeClass| -> (u8, Vec<bool>) {
            match c {
                AeClass::Trivial => (0, vec![]),
                AeClass::Boolean => (1, vec![]),
                AeClass::Divisible(s) => (2, PROBE.iter().map(|&p| s.contains(p)).collect()),
            }
        };
        for _ in 0..500 {
            let (a, b) = (random(&mut rng), random(&mut rng));
            let (ka, kb) = (key(&a), key(&b));
            let m = meet(family, &a, &b).map_err(|e| e.to_string())?;
            let j = join(family, &a, &b).map_err(|e| e.to_string())?;
            // Intersection of divisibility classes divides by the union of primes.
            let want_meet = if ka.0 < 2 || kb.0 < 2 {
                (ka.0.min(kb.0), vec![])
            } else {
                (2, ka.1.iter().zip(&kb.1).map(|(x, y)| *x || *y).collect())
            };
            let want_join = if ka.0 < 2 || kb.0 < 2 {
                if ka.0 >= kb.0 { ka.clone() } else { kb.clone() }
            } else {
                (2, ka.1.iter().zip(&kb.1).map(|(x, y)| *x && *y).collect())
            };
            ensure(key(&m) == want_meet && key(&j) == want_join, || format!("{a} and {b}: meet {m}, join {j}"))?;
            let mm = |x: &AeClass, y: &AeClass| meet(family, x, y).expect("family");
            let jj = |x: &AeClass, y: &AeClass| join(family, x, y).expect("family");
            ensure(
                mm(&a, &jj(&a, &b)) == a && jj(&a, &mm(&a, &b)) == a && mm(&a, &a) == a && jj(&a, &a) == a,
                || format!("absorption or idempotence fails for {a} and {b}"),
            )?;
            let inc = includes(family, &a, &b).map_err(|e| e.to_string())?;
            ensure(inc == (m == a) && inc == (j == b), || format!("includes disagrees with meet/join on {a}, {b}"))?;
        }
    }
    Ok("class and expansion shapes, 1000 random pairs".into())
}

fn main() {
    let criteria: [(&str, Duration, fn() -> Outcome); 8] = [
        ("piecewise soundness", Duration::from_secs(60), piecewise_soundness),
        ("reduction oracle", Duration::from_secs(120), reduction_oracle),
        ("full-dimensionality oracle", Duration::from_secs(120), fulldim_oracle),
        ("t_k endomorphism", Duration::from_secs(10), endomorphism),
        ("star transfer", Duration::from_secs(30), star_transfer),
        ("MV classification", Duration::from_secs(30), mv_classification),
        ("radical decomposition", Duration::from_secs(60), decomposition),
        ("lattice structure", Duration::from_secs(10), lattice_structure),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let outcome = outcome.and_then(|m| {
            if took <= *limit {
                Ok(m)
            } else {
                Err(format!("{m}; took {took:.1?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(m) => println!("PASS {} {name}: {m} ({took:.2?})", i + 1),
            Err(m) => {
                failed += 1;
                println!("FAIL {} {name}: {m} ({took:.2?})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
