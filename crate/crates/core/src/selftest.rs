//! Property suites that cross-check the symbolic pipeline against the
//! witness algebras. Each suite reports every property it checked together
//! with a few counterexamples when something fails.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::{piecewise_canonical_n, reduce_delta_kt, DEFAULT_CAP};
use crate::gen::{group_terms_within_cap, hoop_term, small_systems, test_delta_kts, GenConfig};
use crate::geometry::{is_full_dimensional, rank, sample_solutions, FullDim, Q};
use crate::lattice::{
    expansion_order, includes, join, meet, prime_factors, structure_check, subsets, AeClass, BaseLogic,
    ExpansionOrder, Family, LogicExpansion, PrimeSet,
};
use crate::models::{
    check_sentence_sampled, eval, holds_delta_exact, holds_epsilon_exact, is_radical, sample_element, solve_at,
    Assignment, CheckOptions, Element, WitnessAlgebra,
};
use crate::term::named::{delta_k, epsilon_k, t_k};
use crate::term::{print_node, EfdSentence, Node, Signature, Statement, Term, Var};
use crate::translate::{classify_mv, phi_rad_decompose, star_sentence, star_term};

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 8] = [
    "piecewise-soundness",
    "reduction-oracle",
    "fulldim-oracle",
    "endomorphism",
    "star-transfer",
    "mv-classification",
    "decomposition",
    "lattice-laws",
];

const MAX_EXAMPLES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SelftestError {
    #[error("unknown suite `{0}`; expected one of {}", SUITES.join(", "))]
    UnknownSuite(String),
}

/// Outcome of one property.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub checked: usize,
    pub failures: usize,
    pub counterexamples: Vec<Value>,
}

impl PropertyReport {
    fn new(name: &str) -> PropertyReport {
        PropertyReport { name: name.to_string(), checked: 0, failures: 0, counterexamples: Vec::new() }
    }

    fn check(&mut self, ok: bool, example: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.counterexamples.len() < MAX_EXAMPLES {
                self.counterexamples.push(example());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub budget: usize,
    pub passed: bool,
    pub properties: Vec<PropertyReport>,
}

impl SuiteReport {
    fn new(suite: &str, seed: u64, budget: usize, properties: Vec<PropertyReport>) -> SuiteReport {
        let passed = properties.iter().all(PropertyReport::passed);
        SuiteReport { suite: suite.to_string(), seed, budget, passed, properties }
    }
}

/// The default size parameter of each suite.
pub fn default_budget(suite: &str) -> Option<usize> {
    Some(match suite {
        "piecewise-soundness" => 200,
        "reduction-oracle" => 60,
        "fulldim-oracle" => 40,
        "endomorphism" => 1000,
        "star-transfer" => 100,
        "mv-classification" => 100,
        "decomposition" => 500,
        "lattice-laws" => 500,
        _ => return None,
    })
}

/// Runs one suite. `budget` overrides the suite's main size parameter.
pub fn run_suite(suite: &str, seed: u64, budget: Option<usize>) -> Result<SuiteReport, SelftestError> {
    let budget = budget.or_else(|| default_budget(suite)).ok_or_else(|| SelftestError::UnknownSuite(suite.into()))?;
    // Suites draw from independent streams even under a shared seed.
    let idx = SUITES.iter().position(|s| *s == suite).expect("known suite") as u64;
    let seed_for = seed ^ (idx + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    let props = match suite {
        "piecewise-soundness" => piecewise_soundness(seed_for, budget),
        "reduction-oracle" => reduction_oracle(seed_for, budget),
        "fulldim-oracle" => fulldim_oracle(seed_for, budget),
        "endomorphism" => endomorphism(seed_for, budget),
        "star-transfer" => star_transfer(seed_for, budget),
        "mv-classification" => mv_classification(seed_for, budget),
        "decomposition" => decomposition(seed_for, budget),
        _ => lattice_laws(seed_for, budget),
    };
    Ok(SuiteReport::new(suite, seed, budget, props))
}

fn err_json(e: impl std::fmt::Display) -> Value {
    json!({ "error": e.to_string() })
}

fn point_json(p: &[Q]) -> Value {
    json!(p.iter().map(crate::geometry::fmt_q).collect::<Vec<_>>())
}

fn localized(s: &PrimeSet) -> WitnessAlgebra {
    match s {
        PrimeSet::Finite(ps) => WitnessAlgebra::LocalizedRationals(ps.clone()),
        PrimeSet::Cofinite(_) => WitnessAlgebra::RationalGroup,
    }
}

fn term(sig: Signature, node: &Node) -> Term {
    Term::new(sig, node.clone()).expect("generated terms respect their signature")
}

fn x_env(values: &[Element]) -> Assignment {
    values.iter().enumerate().map(|(i, e)| (Var::x(i + 1), e.clone())).collect()
}

const POINTS_PER_TERM: usize = 1000;

fn piecewise_soundness(seed: u64, terms: usize) -> Vec<PropertyReport> {
    let mut covered = PropertyReport::new("every point lies in some region");
    let mut value = PropertyReport::new("term value equals the form of the containing piece");
    let mut full = PropertyReport::new("every region is full-dimensional");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = WitnessAlgebra::RationalGroup;
    for (n, t) in group_terms_within_cap(seed, terms, GenConfig::default(), DEFAULT_CAP) {
        let pl = match piecewise_canonical_n(&t, n, DEFAULT_CAP) {
            Ok(pl) => pl,
            Err(e) => {
                covered.check(false, || json!({ "term": print_node(&t), "error": e.to_string() }));
                continue;
            }
        };
        for piece in &pl.pieces {
            full.check(is_full_dimensional(&piece.region).is_full(), || {
                json!({ "term": print_node(&t), "region": piece.region.display_with(&|i| format!("x{}", i + 1)) })
            });
        }
        let tt = term(Signature::Group, &t);
        for i in 0..POINTS_PER_TERM {
            // Small integer points first: they sit on region boundaries.
            let point: Vec<Element> = if i < 3usize.pow(n as u32) {
                let mut r = i;
                (0..n)
                    .map(|_| {
                        let c = (r % 3) as i64 - 1;
                        r /= 3;
                        Element::int(c)
                    })
                    .collect()
            } else {
                (0..n).map(|_| sample_element(&q, &mut rng, 12)).collect()
            };
            let coords: Vec<Q> = point.iter().map(|e| e.as_num().expect("rational").clone()).collect();
            let exact = eval(&q, &tt, &x_env(&point)).map(|e| e.as_num().cloned());
            match pl.piece_at(&coords) {
                None => covered.check(false, || json!({ "term": print_node(&t), "point": point_json(&coords) })),
                Some(piece) => {
                    covered.check(true, || Value::Null);
                    let got = piece.form.eval(&coords);
                    value.check(exact.as_ref().ok().and_then(|v| v.as_ref()) == Some(&got), || {
                        json!({
                            "term": print_node(&t),
                            "point": point_json(&coords),
                            "piece": crate::geometry::fmt_q(&got),
                            "exact": exact.as_ref().map(|v| v.as_ref().map(crate::geometry::fmt_q)).map_err(|e| e.to_string()),
                        })
                    });
                }
            }
        }
    }
    vec![covered, value, full]
}

fn reduction_oracle(seed: u64, instances: usize) -> Vec<PropertyReport> {
    let mut exact = PropertyReport::new("exact divisibility of k' matches primes(k') within S");
    let mut sampled = PropertyReport::new("sampled check of delta_{k,t} matches primes(k') within S");
    let opts = CheckOptions { budget: 200, seed, cap: 12 };
    for d in test_delta_kts(seed, instances.max(2)) {
        let red = match reduce_delta_kt(&d, DEFAULT_CAP) {
            Ok(r) => r,
            Err(e) => {
                exact.check(false, || json!({ "k": d.k, "term": print_node(&d.t), "error": e.to_string() }));
                continue;
            }
        };
        let phi = d.sentence();
        for s in subsets(&[2, 3, 5]) {
            let model = localized(&s);
            let predicted = PrimeSet::of(red.k_prime).is_subset(&s);
            let ex = holds_delta_exact(&model, red.k_prime);
            let sm = check_sentence_sampled(&model, &phi, &opts);
            let case = || json!({ "sentence": phi.to_string(), "k_prime": red.k_prime, "model": model.to_string() });
            exact.check(ex.as_ref().ok() == Some(&predicted), case);
            sampled.check(sm.as_ref().map(|v| v.is_consistent()).ok() == Some(predicted), || {
                let mut c = case();
                c["verdict"] = sm.as_ref().map(|v| v.to_json()).unwrap_or_else(err_json);
                c
            });
        }
    }
    vec![exact, sampled]
}

fn fulldim_oracle(seed: u64, samples: usize) -> Vec<PropertyReport> {
    let mut agree = PropertyReport::new("full rank of sampled solutions implies a full verdict");
    let mut basis = PropertyReport::new("full verdicts carry n independent solutions");
    let mut vanish = PropertyReport::new("degenerate verdicts carry a form vanishing on all sampled solutions");
    for s in small_systems(3, 3, 3) {
        let pts = sample_solutions(&s, samples.max(s.n), seed);
        let oracle_full = rank(&pts) == s.n;
        let verdict = is_full_dimensional(&s);
        let case = || json!({ "n": s.n, "rows": s.rows.iter().map(|r| r.0.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>() });
        if oracle_full {
            agree.check(verdict.is_full(), case);
        }
        match &verdict {
            FullDim::Full { basis: b } => {
                basis.check(b.len() == s.n && b.iter().all(|v| s.contains(v)) && rank(b) == s.n, case)
            }
            FullDim::Degenerate { vanishing, .. } => {
                vanish.check(!vanishing.is_zero() && pts.iter().all(|p| vanishing.eval(p) == Q::from_integer(0.into())), case)
            }
        }
    }
    vec![agree, basis, vanish]
}

fn endomorphism(seed: u64, pairs: usize) -> Vec<PropertyReport> {
    let a = WitnessAlgebra::gamma(WitnessAlgebra::RationalGroup).expect("group");
    let mut add = PropertyReport::new("t_k(a + b) = t_k(a) + t_k(b)");
    let mut neg = PropertyReport::new("t_k(~a) = ~t_k(a)");
    let mut inj = PropertyReport::new("t_k is injective on the sample");
    let mut left = PropertyReport::new("d_k(t_k(a)) = a");
    let mut right = PropertyReport::new("t_k(d_k(a)) = a");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let x1 = Node::x(1);
    let x2 = Node::x(2);
    let opts = CheckOptions::default();
    for k in [2u32, 3, 5] {
        let tk = |arg: Node| term(Signature::Mv, &t_k(k, arg));
        let ev = |t: &Term, vals: &[Element]| eval(&a, t, &x_env(vals)).expect("evaluates");
        let t1 = tk(x1.clone());
        let t_sum = tk(Node::plus(x1.clone(), x2.clone()));
        let sum_t = term(Signature::Mv, &Node::plus(t_k(k, x1.clone()), t_k(k, x2.clone())));
        let t_neg = tk(Node::mv_neg(x1.clone()));
        let neg_t = term(Signature::Mv, &Node::mv_neg(t_k(k, x1.clone())));
        let eps = epsilon_k(k).expect("k >= 1");
        let solve = |v: &Element| -> Option<Element> {
            let out = solve_at(&a, &eps, &x_env(std::slice::from_ref(v)), &opts).ok()?;
            out.unique().map(|s| s[&Var::z(1)].clone())
        };
        for _ in 0..pairs {
            let p = sample_element(&a, &mut rng, 12);
            let q = sample_element(&a, &mut rng, 12);
            let pq = [p.clone(), q.clone()];
            let case = || json!({ "k": k, "a": p.to_string(), "b": q.to_string() });
            add.check(ev(&t_sum, &pq) == ev(&sum_t, &pq), case);
            neg.check(ev(&t_neg, &pq) == ev(&neg_t, &pq), case);
            let (tp, tq) = (ev(&t1, &[p.clone()]), ev(&t1, &[q.clone()]));
            inj.check(p == q || tp != tq, case);
            left.check(solve(&tp).as_ref() == Some(&p), case);
            right.check(solve(&p).map(|d| ev(&t1, &[d])).as_ref() == Some(&p), case);
        }
    }
    vec![add, neg, inj, left, right]
}

fn star_transfer(seed: u64, terms: usize) -> Vec<PropertyReport> {
    let mut sentences = PropertyReport::new("delta_k on the cone agrees with its star image on the group");
    let mut values = PropertyReport::new("hoop terms evaluate identically through the star map");
    let opts = CheckOptions { budget: 200, seed, cap: 12 };
    for k in [1u32, 2, 3, 4, 6] {
        let hoop = delta_k(k, Signature::Hoop).expect("k >= 1");
        let star = star_sentence(&hoop).expect("hoop sentence").sentence;
        for s in subsets(&[2, 3]) {
            let g = localized(&s);
            let cone = WitnessAlgebra::cone(g.clone()).expect("group");
            let exact = holds_delta_exact(&g, u64::from(k)).ok();
            let on_cone = check_sentence_sampled(&cone, &hoop, &opts).map(|v| v.is_consistent()).ok();
            let on_group = check_sentence_sampled(&g, &star, &opts).map(|v| v.is_consistent()).ok();
            sentences.check(exact.is_some() && exact == on_cone && exact == on_group, || {
                json!({ "k": k, "model": g.to_string(), "exact": exact, "cone": on_cone, "star": on_group })
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = WitnessAlgebra::RationalGroup;
    let cone = WitnessAlgebra::cone(q.clone()).expect("group");
    for _ in 0..terms {
        let n = rng.gen_range(1..=3);
        let t = hoop_term(&mut rng, n, 5, 6);
        let st = star_term(&t).expect("hoop term");
        let (ht, gt) = (term(Signature::Hoop, &t), term(Signature::Group, &st));
        for _ in 0..100 {
            let vals: Vec<Element> = (0..n).map(|_| sample_element(&cone, &mut rng, 12)).collect();
            let env = x_env(&vals);
            let (h, g) = (eval(&cone, &ht, &env), eval(&q, &gt, &env));
            values.check(h.is_ok() && h == g, || {
                json!({ "term": print_node(&t), "point": vals.iter().map(|e| e.to_string()).collect::<Vec<_>>() })
            });
        }
    }
    vec![sentences, values]
}

fn mv_classification(seed: u64, points: usize) -> Vec<PropertyReport> {
    let mut classes = PropertyReport::new("epsilon_k classifies as divisible by primes(k)");
    let mut exact = PropertyReport::new("epsilon_p holds in Gamma(Z x Q_S) iff p is in S");
    let mut sampled = PropertyReport::new("sampled check of epsilon_p agrees with the exact decision");
    for k in 1..=12u32 {
        let eps = epsilon_k(k).expect("k >= 1");
        let got = classify_mv(&[Statement::Sentence(eps)], DEFAULT_CAP);
        let want = AeClass::divisible_by(u64::from(k));
        classes.check(got.as_ref().map(|c| &c.class).ok() == Some(&want), || {
            json!({ "k": k, "got": got.as_ref().map(|c| c.class.to_json()).unwrap_or_else(err_json) })
        });
    }
    let opts = CheckOptions { budget: points, seed, cap: 12 };
    for s in subsets(&[2, 3, 5, 7]) {
        let model = WitnessAlgebra::gamma(localized(&s)).expect("group");
        for p in [2u64, 3, 5, 7] {
            let want = s.contains(p);
            let ex = holds_epsilon_exact(&model, p);
            exact.check(ex.as_ref().ok() == Some(&want), || json!({ "p": p, "model": model.to_string() }));
            let eps = epsilon_k(p as u32).expect("p >= 1");
            let sm = check_sentence_sampled(&model, &eps, &opts);
            sampled.check(sm.as_ref().map(|v| v.is_consistent()).ok() == Some(want), || {
                json!({ "p": p, "model": model.to_string(), "verdict": sm.as_ref().map(|v| v.to_json()).unwrap_or_else(err_json) })
            });
        }
    }
    vec![classes, exact, sampled]
}

/// Flips the inputs selected by `sign` to their negations.
fn flip(a: &WitnessAlgebra, x: &Assignment, sign: &[bool]) -> Assignment {
    let not = term(Signature::Mv, &Node::mv_neg(Node::x(1)));
    x.iter()
        .map(|(v, e)| {
            let e = if sign[v.index - 1] { eval(a, &not, &x_env(std::slice::from_ref(e))).expect("evaluates") } else { e.clone() };
            (*v, e)
        })
        .collect()
}

fn decomposition(seed: u64, points: usize) -> Vec<PropertyReport> {
    let mut pointwise = PropertyReport::new("each output has the solution predicted by the input sentence");
    let mut overall = PropertyReport::new("input holds on the sample iff every output does");
    let mut radical = PropertyReport::new("radical inputs only have radical solutions");
    let opts = CheckOptions { budget: points, seed, cap: 12 };
    for k in [2u32, 3] {
        let phi = epsilon_k(k).expect("k >= 1");
        let parts = match phi_rad_decompose(&phi) {
            Ok(p) => p,
            Err(e) => {
                overall.check(false, || json!({ "k": k, "error": e.to_string() }));
                continue;
            }
        };
        for inner in [WitnessAlgebra::RationalGroup, WitnessAlgebra::LocalizedRationals([2].into())] {
            let a = WitnessAlgebra::gamma(inner).expect("group");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut input_holds = true;
            let mut outputs_hold = vec![true; parts.len()];
            for _ in 0..points {
                let x = x_env(&[sample_element(&a, &mut rng, 12)]);
                let sols = |s: &EfdSentence, at: &Assignment| solve_at(&a, s, at, &opts).map(|o| o.solutions);
                let Ok(base) = sols(&phi, &x) else {
                    overall.check(false, || json!({ "k": k, "model": a.to_string(), "error": "solver failed" }));
                    continue;
                };
                input_holds &= base.len() == 1;
                let x_rad = x.values().all(|e| is_radical(&a, e).unwrap_or(false));
                for (j, part) in parts.iter().enumerate() {
                    let got = sols(&part.sentence, &x).unwrap_or_default();
                    outputs_hold[j] &= got.len() == 1;
                    // Expected: at a radical point the solutions of phi at the
                    // flipped point, flipped back; elsewhere only zero.
                    let want: Vec<Assignment> = if x_rad {
                        sols(&phi, &flip(&a, &x, &part.sign))
                            .unwrap_or_default()
                            .iter()
                            .map(|z| {
                                z.iter()
                                    .map(|(v, e)| {
                                        let e = if part.witness[v.index - 1] {
                                            eval(&a, &term(Signature::Mv, &Node::mv_neg(Node::x(1))), &x_env(std::slice::from_ref(e)))
                                                .expect("evaluates")
                                        } else {
                                            e.clone()
                                        };
                                        (*v, e)
                                    })
                                    .collect()
                            })
                            .collect()
                    } else {
                        vec![[(Var::z(1), Element::pair(0, Element::int(0)))].into_iter().collect()]
                    };
                    let case = || {
                        json!({
                            "k": k, "model": a.to_string(), "sign": part.sign, "x": x[&Var::x(1)].to_string(),
                            "got": got.iter().map(|z| z[&Var::z(1)].to_string()).collect::<Vec<_>>(),
                            "want": want.iter().map(|z| z[&Var::z(1)].to_string()).collect::<Vec<_>>(),
                        })
                    };
                    pointwise.check(got == want, case);
                    if x_rad {
                        radical.check(got.iter().all(|z| z.values().all(|e| is_radical(&a, e).unwrap_or(false))), case);
                    }
                }
            }
            let all_outputs = outputs_hold.iter().all(|&b| b);
            overall.check(input_holds == all_outputs, || {
                json!({ "k": k, "model": a.to_string(), "input": input_holds, "outputs": outputs_hold })
            });
        }
    }
    vec![pointwise, overall, radical]
}

fn random_prime_set<R: Rng>(rng: &mut R) -> PrimeSet {
    const POOL: [u64; 5] = [2, 3, 5, 7, 11];
    let pick: Vec<u64> = POOL.iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
    if rng.gen_bool(0.3) {
        PrimeSet::cofinite(pick).expect("primes")
    } else {
        PrimeSet::finite(pick).expect("primes")
    }
}

fn random_class<R: Rng>(rng: &mut R, family: Family) -> AeClass {
    match rng.gen_range(0..10) {
        0 => AeClass::Trivial,
        1 if family == Family::P => AeClass::Boolean,
        _ => AeClass::Divisible(random_prime_set(rng)),
    }
}

fn lattice_laws(seed: u64, pairs: usize) -> Vec<PropertyReport> {
    let mut shape = PropertyReport::new("finite class and expansion posets have the expected shape");
    let mut laws = PropertyReport::new("meet and join are idempotent, commutative and absorptive");
    let mut order = PropertyReport::new("includes agrees with meet and join");
    let mut duality = PropertyReport::new("expansion order is dual to class inclusion");
    let report = structure_check(&[2, 3, 5]);
    shape.check(report.all(), || serde_json::to_value(&report).unwrap_or(Value::Null));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for family in [Family::G, Family::P] {
        for _ in 0..pairs {
            let (a, b) = (random_class(&mut rng, family), random_class(&mut rng, family));
            let m = |x: &AeClass, y: &AeClass| meet(family, x, y).expect("same family");
            let j = |x: &AeClass, y: &AeClass| join(family, x, y).expect("same family");
            let case = || json!({ "family": family.name(), "a": a.to_json(), "b": b.to_json() });
            laws.check(
                m(&a, &a) == a
                    && j(&a, &a) == a
                    && m(&a, &b) == m(&b, &a)
                    && j(&a, &b) == j(&b, &a)
                    && m(&a, &j(&a, &b)) == a
                    && j(&a, &m(&a, &b)) == a,
                case,
            );
            let inc = includes(family, &a, &b).expect("same family");
            order.check(inc == (m(&a, &b) == a) && inc == (j(&a, &b) == b), case);
        }
    }
    for base in [BaseLogic::Bal, BaseLogic::Lp] {
        let mut exps: Vec<LogicExpansion> =
            subsets(&[2, 3, 5]).into_iter().map(|s| LogicExpansion::new(base, s)).collect();
        exps.push(LogicExpansion::inconsistent(base));
        if base == BaseLogic::Lp {
            exps.push(LogicExpansion::classical());
        }
        for e1 in &exps {
            for e2 in &exps {
                let rel = expansion_order(e1, e2).expect("same base");
                let (c1, c2) = (e1.class().expect("class"), e2.class().expect("class"));
                let fwd = includes(base.family(), &c2, &c1).expect("same family");
                let morphism = matches!(rel, ExpansionOrder::Forward | ExpansionOrder::Equipollent);
                duality.check(morphism == fwd, || json!({ "e1": format!("{e1:?}"), "e2": format!("{e2:?}") }));
            }
        }
    }
    // Prime factors and divisibility classes stay in step.
    for k in 1..=30u64 {
        let c = AeClass::divisible_by(k);
        order.check(c == AeClass::Divisible(PrimeSet::finite(prime_factors(k)).expect("primes")), || json!({ "k": k }));
    }
    vec![shape, laws, order, duality]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(run_suite("nope", 0, None), Err(SelftestError::UnknownSuite(_))));
    }

    #[test]
    fn small_runs_pass() {
        for (suite, budget) in [
            ("piecewise-soundness", 5),
            ("reduction-oracle", 4),
            ("endomorphism", 20),
            ("star-transfer", 5),
            ("mv-classification", 20),
            ("decomposition", 20),
            ("lattice-laws", 50),
        ] {
            let r = run_suite(suite, 1, Some(budget)).unwrap();
            assert!(r.passed, "{}", serde_json::to_string_pretty(&r).unwrap());
        }
    }
}
