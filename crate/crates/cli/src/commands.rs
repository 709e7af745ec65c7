use std::fmt::Write as _;

use serde_json::{json, Value};

use efd::canon::{arity, piecewise_canonical_n, reduce_delta_kt, DeltaKt};
use efd::geometry::{fmt_q, is_full_dimensional, sample_solutions, IneqSystem};
use efd::lattice::{
    emit_axioms, expansion_order, includes, join, meet, structure_check, AeClass, Family, LogicExpansion,
};
use efd::models::{
    check_identity_sampled, check_sentence_sampled, check_uniqueness_sampled, eval, holds_delta_exact,
    holds_epsilon_exact, Assignment, CheckOptions, Element, WitnessAlgebra,
};
use efd::selftest::{run_suite, SuiteReport, SUITES};
use efd::term::named::{epsilon_k, parse_named_or_statement};
use efd::term::{expand_macros, parse_term, print_node, EfdSentence, Node, Signature, Statement, Term, Var};
use efd::translate::{classify, mv_to_hoop, phi_rad_decompose, star_sentence};

use crate::error::{CliError, PROPERTY};
use crate::{Cli, Command, Format, LatticeOp, StatementInput};

pub struct Output {
    pub code: u8,
    pub json: Value,
    pub text: String,
}

impl Output {
    fn ok(schema: &str, mut json: Value, text: String) -> Output {
        json["schema"] = json!(format!("efd.{schema}/1"));
        Output { code: 0, json, text }
    }

    pub fn emit(&self, format: Format) {
        use std::io::Write;
        let mut out = std::io::stdout().lock();
        // A closed pipe (e.g. `efd ... | head`) is not an error worth reporting.
        let _ = match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&self.json).expect("serializable")),
            Format::Text => write!(out, "{}", self.text),
        };
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Parse { sig, text, expand } => parse(Signature::from(*sig), text, *expand),
        Command::Canon { sig, term, n, cap } => canon(Signature::from(*sig), term, *n, *cap),
        Command::Reduce { k, term, n, cap } => reduce(*k, term, *n, *cap),
        Command::Classify { sig, input, cap } => classify_cmd(Signature::from(*sig), input, *cap),
        Command::Translate { sig, sentence } => translate(Signature::from(*sig), sentence),
        Command::Decompose { sentence } => decompose(sentence),
        Command::Fulldim { system, sample } => fulldim(system, *sample, cli),
        Command::Eval { model, term, assign } => eval_cmd(model, term, assign),
        Command::Check { model, input, uniqueness } => check(model, input, *uniqueness, cli),
        Command::Lattice { op, family, args, primes } => lattice(*op, family, args, primes),
        Command::Axioms { expansion } => axioms(expansion),
        Command::Selftest { suite } => selftest(suite, cli),
    }
}

fn looks_like_statement(text: &str) -> bool {
    let t = text.trim_start();
    text.contains('=')
        || ["forall", "delta", "epsilon", "boolean", "absurd"].iter().any(|w| t.starts_with(w))
}

fn statement(text: &str, sig: Signature) -> Result<Statement, CliError> {
    Ok(parse_named_or_statement(text, sig)?)
}

fn sentence(text: &str, sig: Signature) -> Result<EfdSentence, CliError> {
    match statement(text, sig)? {
        Statement::Sentence(s) => Ok(s),
        Statement::Identity(_) => Err(CliError::input("expected a sentence with an `exists!` block")),
    }
}

fn read_statements(input: &StatementInput, sig: Signature) -> Result<Vec<Statement>, CliError> {
    let mut lines: Vec<String> = input.sentences.clone();
    if let Some(path) = &input.file {
        let body = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        lines.extend(
            body.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from),
        );
    }
    lines.iter().map(|l| statement(l, sig)).collect()
}

fn parse(sig: Signature, text: &str, expand: bool) -> Result<Output, CliError> {
    if looks_like_statement(text) {
        let st = statement(text, sig)?;
        let mut v = json!({ "kind": "statement", "statement": st, "printed": st.to_string() });
        let mut out = format!("{st}\n");
        if let Statement::Sentence(s) = &st {
            let u = s.uniqueness().to_string();
            v["existence"] = json!(s.existence_text());
            v["uniqueness"] = json!(u);
            let _ = writeln!(out, "E: {}\nU: {u}", s.existence_text());
        }
        return Ok(Output::ok("parse", v, out));
    }
    let node = parse_term(text, sig)?;
    let mut v = json!({ "kind": "term", "signature": sig.name(), "ast": node, "printed": print_node(&node) });
    let mut out = format!("{}\n", print_node(&node));
    if expand {
        let e = expand_macros(&Term::new(sig, node)?)?;
        v["expanded"] = json!(print_node(e.node()));
        let _ = writeln!(out, "expanded: {}", print_node(e.node()));
    }
    Ok(Output::ok("parse", v, out))
}

fn group_term(sig: Signature, text: &str) -> Result<Node, CliError> {
    if sig != Signature::Group {
        return Err(CliError::input("canonical forms are defined for group terms only"));
    }
    Ok(parse_term(text, Signature::Group)?)
}

fn canon(sig: Signature, text: &str, n: Option<usize>, cap: usize) -> Result<Output, CliError> {
    let t = group_term(sig, text)?;
    let n = n.unwrap_or_else(|| arity(&t));
    let pl = piecewise_canonical_n(&t, n, cap)?;
    let pieces: Vec<Value> = pl
        .pieces
        .iter()
        .map(|p| json!({ "region": p.region, "form": p.form, "text": format!("{} |-> {}", p.region, p.form) }))
        .collect();
    let v = json!({ "term": print_node(&t), "n": n, "pieces": pieces });
    Ok(Output::ok("canon", v, format!("{pl}\n")))
}

fn reduce(k: u64, text: &str, n: Option<usize>, cap: usize) -> Result<Output, CliError> {
    let t = parse_term(text, Signature::Group)?;
    let n = n.unwrap_or_else(|| arity(&t));
    let d = DeltaKt::new(k, n, t)?;
    let r = reduce_delta_kt(&d, cap)?;
    let v = json!({
        "sentence": d.sentence().to_string(),
        "k": r.k,
        "d": r.d,
        "k_prime": r.k_prime,
        "pieces": r.canonical.pieces.len(),
    });
    let text = format!("{}\nd = {}, k' = {}\n", d.sentence(), r.d, r.k_prime);
    Ok(Output::ok("reduce", v, text))
}

fn classify_cmd(sig: Signature, input: &StatementInput, cap: usize) -> Result<Output, CliError> {
    let stmts = read_statements(input, sig)?;
    let c = classify(sig, &stmts, cap)?;
    let text = format!("{} ({} family)\n", c.class(), c.family().name());
    Ok(Output::ok("classify", c.to_json(), text))
}

fn translate(sig: Signature, text: &str) -> Result<Output, CliError> {
    match sig {
        Signature::Hoop => {
            let phi = sentence(text, sig)?;
            let star = star_sentence(&phi)?.sentence;
            let v = json!({ "input": phi.to_string(), "target": "group", "sentence": star.to_string() });
            Ok(Output::ok("translate", v, format!("{star}\n")))
        }
        Signature::Mv => {
            let phi = sentence(text, sig)?;
            let mut branches = Vec::new();
            let mut out = String::new();
            for part in phi_rad_decompose(&phi)? {
                let hoop = mv_to_hoop(&part.sentence)?;
                let star = star_sentence(&hoop)?.sentence;
                let _ = writeln!(out, "{:?}: {hoop}", part.sign);
                branches.push(json!({
                    "sign": part.sign,
                    "witness": part.witness,
                    "hoop": hoop.to_string(),
                    "group": star.to_string(),
                }));
            }
            let v = json!({ "input": phi.to_string(), "target": "hoop", "branches": branches });
            Ok(Output::ok("translate", v, out))
        }
        Signature::Group => Err(CliError::input("translation starts from hoop or MV sentences")),
    }
}

fn decompose(text: &str) -> Result<Output, CliError> {
    let phi = sentence(text, Signature::Mv)?;
    let parts = phi_rad_decompose(&phi)?;
    let mut out = String::new();
    let branches: Vec<Value> = parts
        .iter()
        .map(|p| {
            let _ = writeln!(out, "{:?} -> {:?}: {}", p.sign, p.witness, p.sentence);
            json!({ "sign": p.sign, "witness": p.witness, "sentence": p.sentence.to_string() })
        })
        .collect();
    let v = json!({ "input": phi.to_string(), "branches": branches });
    Ok(Output::ok("decompose", v, out))
}

fn fulldim(text: &str, sample: bool, cli: &Cli) -> Result<Output, CliError> {
    let raw: IneqSystem =
        serde_json::from_str(text).map_err(|e| CliError::input(format!("cannot read the system: {e}")))?;
    let s = IneqSystem::new(raw.n, raw.rows)?;
    let verdict = is_full_dimensional(&s);
    let mut v = json!({ "system": s, "full_dimensional": verdict.is_full(), "certificate": verdict });
    let mut out = format!("{}\n", if verdict.is_full() { "full-dimensional" } else { "not full-dimensional" });
    if sample {
        let pts = sample_solutions(&s, cli.budget.unwrap_or(10), cli.seed);
        let pts: Vec<Vec<String>> = pts.iter().map(|p| p.iter().map(fmt_q).collect()).collect();
        for p in &pts {
            let _ = writeln!(out, "({})", p.join(", "));
        }
        v["solutions"] = json!(pts);
    }
    Ok(Output::ok("fulldim", v, out))
}

fn parse_var(name: &str) -> Result<Var, CliError> {
    let bad = || CliError::input(format!("`{name}` is not a variable name"));
    let (head, digits) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
    let index: usize = digits.parse().map_err(|_| bad())?;
    if index == 0 {
        return Err(bad());
    }
    match head {
        "x" => Ok(Var::x(index)),
        "y" => Ok(Var::y(index)),
        "z" => Ok(Var::z(index)),
        _ => Err(bad()),
    }
}

fn eval_cmd(model: &str, text: &str, assign: &[String]) -> Result<Output, CliError> {
    let a = WitnessAlgebra::parse(model)?;
    let sig = a.species();
    let node = parse_term(text, sig)?;
    let mut env = Assignment::new();
    for item in assign {
        let (name, value) =
            item.split_once('=').ok_or_else(|| CliError::input(format!("expected VAR=VALUE, found `{item}`")))?;
        env.insert(parse_var(name.trim())?, Element::parse(&a, value)?);
    }
    let value = eval(&a, &Term::new(sig, node.clone())?, &env)?;
    let v = json!({ "model": a.to_string(), "term": print_node(&node), "value": value.to_string() });
    Ok(Output::ok("eval", v, format!("{value}\n")))
}

/// Exact decisions available for a sentence in a model, if any.
fn exact_decision(a: &WitnessAlgebra, phi: &EfdSentence) -> Result<Option<(bool, String)>, CliError> {
    if a.is_group() {
        if let Some(d) = DeltaKt::from_sentence(phi) {
            let r = reduce_delta_kt(&d, efd::canon::DEFAULT_CAP)?;
            let holds = holds_delta_exact(a, r.k_prime)?;
            return Ok(Some((holds, format!("equivalent to divisibility by {}", r.k_prime))));
        }
    }
    if matches!(a, WitnessAlgebra::GammaPerfect(_) | WitnessAlgebra::TwoMv) && phi.n() == 1 && phi.m() == 1 {
        for k in 1..=64u32 {
            if epsilon_k(k).map_or(false, |e| &e == phi) {
                return Ok(holds_epsilon_exact(a, u64::from(k)).ok().map(|h| (h, format!("epsilon {k}"))));
            }
        }
    }
    Ok(None)
}

fn check(model: &str, input: &StatementInput, uniqueness: bool, cli: &Cli) -> Result<Output, CliError> {
    let a = WitnessAlgebra::parse(model)?;
    let stmts = read_statements(input, a.species())?;
    if stmts.is_empty() {
        return Err(CliError::input("nothing to check; pass --sentence or --file"));
    }
    let opts = CheckOptions::new(cli.budget_or_default(), cli.seed);
    let mut results = Vec::new();
    let mut out = String::new();
    for st in &stmts {
        let (verdict, exact) = match st {
            Statement::Sentence(phi) if uniqueness => (check_uniqueness_sampled(&a, phi, &opts)?, None),
            Statement::Sentence(phi) => (check_sentence_sampled(&a, phi, &opts)?, exact_decision(&a, phi)?),
            Statement::Identity(id) => (check_identity_sampled(&a, id, &opts)?, None),
        };
        let mut r = json!({ "input": st.to_string(), "verdict": verdict.to_json() });
        let _ = write!(out, "{st}: {}", verdict.to_json()["verdict"].as_str().unwrap_or("?"));
        if let Some((holds, method)) = exact {
            r["exact"] = json!({ "holds": holds, "method": method });
            let _ = write!(out, " (exact: {holds}, {method})");
        }
        out.push('\n');
        results.push(r);
    }
    let v = json!({ "model": a.to_string(), "results": results });
    Ok(Output::ok("check", v, out))
}

fn two_args<'a>(args: &'a [String], what: &str) -> Result<(&'a str, &'a str), CliError> {
    match args {
        [a, b] => Ok((a, b)),
        _ => Err(CliError::input(format!("expected two {what}"))),
    }
}

fn lattice(op: LatticeOp, family: &str, args: &[String], primes: &[u64]) -> Result<Output, CliError> {
    let fam = Family::parse(family)?;
    let class_pair = || -> Result<(AeClass, AeClass), CliError> {
        let (a, b) = two_args(args, "classes")?;
        Ok((AeClass::parse(a)?, AeClass::parse(b)?))
    };
    match op {
        LatticeOp::Includes => {
            let (a, b) = class_pair()?;
            let inc = includes(fam, &a, &b)?;
            let v = json!({ "family": fam.name(), "a": a.to_json(), "b": b.to_json(), "includes": inc });
            Ok(Output::ok("lattice", v, format!("{inc}\n")))
        }
        LatticeOp::Meet | LatticeOp::Join => {
            let (a, b) = class_pair()?;
            let c = if op == LatticeOp::Meet { meet(fam, &a, &b)? } else { join(fam, &a, &b)? };
            Ok(Output::ok("lattice", c.to_lattice_json(fam), format!("{c}\n")))
        }
        LatticeOp::Order => {
            let (a, b) = two_args(args, "expansions")?;
            let (e1, e2) = (LogicExpansion::parse(a)?, LogicExpansion::parse(b)?);
            let rel = expansion_order(&e1, &e2)?;
            let mut v = rel.to_json();
            v["first"] = json!(e1.to_string());
            v["second"] = json!(e2.to_string());
            Ok(Output::ok("lattice", v, format!("{e1} vs {e2}: {}\n", rel.to_json()["relation"].as_str().unwrap_or("?"))))
        }
        LatticeOp::Structure => {
            let report = structure_check(primes);
            let v = json!({ "primes": primes, "report": report, "passed": report.all() });
            let mut out = Output::ok("lattice", v, format!("{}\n", if report.all() { "pass" } else { "fail" }));
            if !report.all() {
                out.code = PROPERTY;
            }
            Ok(out)
        }
    }
}

fn axioms(expansion: &str) -> Result<Output, CliError> {
    let e = LogicExpansion::parse(expansion)?;
    let ax = emit_axioms(&e)?;
    let text: String = ax.iter().map(|a| format!("{}: {}\n", a.name, a.text)).collect();
    let v = json!({
        "expansion": e.to_string(),
        "equivalence_formulas": e.base.equivalence_formulas(),
        "defining_equations": e.base.defining_equations(),
        "axioms": ax,
    });
    Ok(Output::ok("axioms", v, text))
}

fn suite_text(r: &SuiteReport) -> String {
    let mut out = format!("{} {}\n", if r.passed { "PASS" } else { "FAIL" }, r.suite);
    for p in &r.properties {
        let _ = writeln!(out, "  [{}] {} ({} checked, {} failed)", if p.passed() { "ok" } else { "!!" }, p.name, p.checked, p.failures);
        for c in &p.counterexamples {
            let _ = writeln!(out, "      {c}");
        }
    }
    out
}

fn selftest(suite: &str, cli: &Cli) -> Result<Output, CliError> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let mut reports = Vec::new();
    for name in names {
        reports.push(run_suite(name, cli.seed, cli.budget).map_err(|e| CliError::input(e.to_string()))?);
    }
    let passed = reports.iter().all(|r| r.passed);
    let text: String = reports.iter().map(suite_text).collect();
    let v = json!({ "passed": passed, "suites": reports });
    let mut out = Output::ok("selftest", v, text);
    if !passed {
        out.code = PROPERTY;
    }
    Ok(out)
}
