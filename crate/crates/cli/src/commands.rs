use std::fmt::Write as _;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};
use thiserror::Error;

use detring::equivalence::{direct_equivalence_witness, nonequivalence_fixture, sl_witness, DEFAULT_EVALUATION_RANGE};
use detring::expr::{parse_str, Binding, Value};
use detring::identities::{
    example31, example33, phk_example, proof, proofs, render, render_matrix, trace_counterexample, CheckKind,
    IdentityError, IdentityReport,
};
use detring::matrix::{algorithms, Matrix};
use detring::random;
use detring::ring::{Ring, RingElement};

use crate::input::{parse_ring, InputDocument, InputError};
use crate::report::RunReport;

/// Problems with the request itself (exit code 2).
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Input { path: String, source: InputError },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    /// Already formatted with a caret under the offending span.
    #[error("{0}")]
    Expression(String),
}

fn internal(e: IdentityError) -> CliError {
    CliError::Usage(e.to_string())
}

fn value_check(name: &str, ring: &Ring, n: usize, got: &RingElement, expected: &RingElement) -> IdentityReport {
    IdentityReport::new(name, ring, n, CheckKind::Theorem).with_values(got, expected)
}

pub fn cmd_examples() -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut rep = RunReport::new("examples");

    rep.heading("example31");
    let z = Ring::Integers;
    let e = example31(&z).map_err(internal)?;
    rep.line(format!("A = {}, B = {}, X = {}", e.a, e.b, e.x));
    let labels = ["det(I-AXB)", "det(I-BXA)", "det(A+B-AXB)", "det(A+B-BXA)"];
    let expected = [1, 0, 0, 0];
    for ((label, got), want) in labels.iter().zip(e.values()).zip(expected) {
        rep.line(format!("{label} = {got}"));
        rep.check(value_check(&format!("example31 {label}"), &z, 2, got, &z.from_i64(want)));
    }
    for r in e.reports() {
        rep.check(r);
    }

    rep.heading("example33");
    let e = example33().map_err(internal)?;
    let ring = &e.ring;
    let v = |name| ring.var_by_name(name).expect("declared");
    let sr = &v("s") * &v("r");
    let (det_want, tr_want) = (&ring.one() + &sr, &ring.from_i64(2) + &sr);
    rep.line(format!("A = {}, X = {}", e.a, e.x));
    for (k, m) in e.ms.iter().enumerate() {
        let i = k + 1;
        rep.line(format!("M{i} = {m}"));
        rep.line(format!("det(M{i}) = {}, tr(M{i}) = {}", e.dets[k], e.traces[k]));
        rep.check(value_check(&format!("example33 det(M{i})"), ring, 2, &e.dets[k], &det_want));
        rep.check(value_check(&format!("example33 tr(M{i})"), ring, 2, &e.traces[k], &tr_want));
    }
    rep.line(format!("common determinant {det_want}, common trace {tr_want}"));

    rep.heading("trace counterexample");
    let ring = Ring::polynomial(["s"]);
    let s = ring.var(0).expect("declared");
    let c = trace_counterexample(&s, 2).map_err(internal)?;
    rep.line(format!("A = {}, B = {}, X = {}", c.a, c.b, c.x));
    rep.line(format!("tr(A+B-AXB) = {}, tr(A+B-BXA) = {}", c.tr_p, c.tr_q));
    rep.check(c.report());
    rep.check(value_check("trace difference equals s", &ring, 2, &c.difference(), &s));

    rep.heading("phk");
    let ring = Ring::polynomial(["x", "y"]);
    let (x, y) = (ring.var(0).expect("declared"), ring.var(1).expect("declared"));
    let (dp, dh, dk) = phk_example(&x, &y).map_err(internal)?;
    let two = ring.from_i64(2);
    rep.line(format!("det(P) = {dp}, det(H) = {dh}, det(K) = {dk}"));
    rep.check(value_check("phk det(A+B-AXB)", &ring, 2, &dp, &(&y - &two)));
    rep.check(value_check("phk det(A+B-XBA)", &ring, 2, &dh, &(&x - &two)));
    rep.check(value_check("phk det(A+B-BAX)", &ring, 2, &dk, &(&(&two * &y) - &two)));

    rep.heading("nonequivalence fixture");
    let f = nonequivalence_fixture(DEFAULT_EVALUATION_RANGE).map_err(|e| CliError::Usage(e.to_string()))?;
    let ring = f.p.ring().clone();
    rep.line(format!("A = {}, B = {}, X = {}", f.a, f.b, f.x));
    rep.check(IdentityReport::new("fixture P = A+B-AXB", &ring, 2, CheckKind::Theorem).with_matrices(&f.p, &f.expected_p));
    rep.check(IdentityReport::new("fixture Q = A+B-BXA", &ring, 2, CheckKind::Theorem).with_matrices(&f.q, &f.expected_q));
    for (label, prof) in [("P", &f.profile_p), ("Q", &f.profile_q)] {
        rep.line(format!("{label}: det {}, trace {}", prof.determinant, prof.trace));
        let gens: Vec<String> = prof.entry_generators.iter().map(ToString::to_string).collect();
        rep.line(format!("{label}: entry generators [{}]", gens.join(", ")));
        let evals: Vec<String> = prof
            .evaluations
            .iter()
            .map(|(c, d)| format!("{c}:{}", d.iter().map(ToString::to_string).collect::<Vec<_>>().join("/")))
            .collect();
        rep.line(format!("{label}: smith forms at x=c {}", evals.join(" ")));
    }
    let sep = f.separating_invariants();
    let mut obs = IdentityReport::new("invariant profile separates P and Q", &ring, 2, CheckKind::Observation);
    obs.holds = !sep.is_empty();
    obs.left = render_matrix(&f.p);
    obs.right = render_matrix(&f.q);
    let sep_text = if sep.is_empty() { "none".to_string() } else { sep.join(", ") };
    obs = obs.detail("separating invariants", sep_text);
    rep.check(obs);

    rep.elapsed = start.elapsed();
    Ok(rep)
}

pub fn cmd_prove(id: &str, n: usize, force: bool) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let p = proof(id).ok_or_else(|| {
        let ids: Vec<&str> = proofs().iter().map(|p| p.id()).collect();
        CliError::Usage(format!("unknown identity `{id}`; available: {}", ids.join(", ")))
    })?;
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if n > p.budget() && !force {
        return Err(CliError::Usage(format!(
            "n={n} exceeds the budget n<={} for `{id}`; pass --force to run anyway",
            p.budget()
        )));
    }
    let mut rep = RunReport::new(format!("prove {id} --n {n}{}", if force { " --force" } else { "" }));
    rep.check(p.prove(n));
    rep.elapsed = start.elapsed();
    Ok(rep)
}

fn load(path: &str) -> Result<InputDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    InputDocument::parse(&text).map_err(|source| CliError::Input {
        path: path.to_string(),
        source,
    })
}

pub fn cmd_verify(dsl: &str, input: &str) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let doc = load(input)?;
    let expr = parse_str(dsl).map_err(|e| CliError::Expression(e.diagnostic(dsl)))?;
    let env = doc.environment().map_err(|e| CliError::Usage(format!("{input}: {e}")))?;
    let resolved = env.resolve().map_err(|e| CliError::Usage(format!("{input}: {e}")))?;
    let value = resolved.evaluate(&expr).map_err(|e| CliError::Expression(e.diagnostic(dsl)))?;
    let mut rep = RunReport::new(format!("verify \"{dsl}\" --input {input}"));
    rep.line(format!("ring {}, n = {}", resolved.ring, resolved.n));
    rep.line(format!("parsed: {expr}"));
    let Value::Bool(holds) = value else {
        return Err(CliError::Usage(format!("`{dsl}` is not an equation; it evaluates to {value}")));
    };
    let mut r = IdentityReport::new(expr.to_string(), &resolved.ring, resolved.n, CheckKind::Theorem);
    r.holds = holds;
    r.left = "true".into();
    r.right = holds.to_string();
    r.stats.left_terms = 1;
    r.stats.right_terms = 1;
    rep.check(r);
    rep.elapsed = start.elapsed();
    Ok(rep)
}

pub fn cmd_witness(input: &str) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let doc = load(input)?;
    let resolved = doc
        .environment()
        .and_then(|env| env.resolve())
        .map_err(|e| CliError::Usage(format!("{input}: {e}")))?;
    let get = |name: &str| -> Result<Matrix, CliError> {
        match resolved.bindings.iter().find(|(k, _)| k == name) {
            Some((_, Binding::Matrix(m))) => Ok(m.clone()),
            _ => Err(CliError::Usage(format!("{input}: witness needs a matrix binding `{name}`"))),
        }
    };
    let (a, b, x) = (get("A")?, get("B")?, get("X")?);
    let ring = resolved.ring.clone();
    let n = resolved.n;
    let mut rep = RunReport::new(format!("witness --input {input}"));
    rep.line(format!("ring {ring}, n = {n}"));
    rep.heading("SL witness for diag(P, I) ~ diag(Q, I)");
    let sl = IdentityReport::new("U diag(P,I) V = diag(Q,I), det U = det V = 1", &ring, n, CheckKind::Theorem);
    match sl_witness(&a, &b, &x) {
        Ok(w) => {
            rep.line(w.serialize().trim_end().to_string());
            let lhs = &(&w.u * &w.p.suspend(n)) * &w.v;
            rep.check(
                sl.with_matrices(&lhs, &w.q.suspend(n))
                    .detail_value("det U", &w.u.det())
                    .detail_value("det V", &w.v.det()),
            );
        }
        Err(e) => {
            let mut r = sl.detail("error", e.to_string());
            r.holds = false;
            rep.check(r);
        }
    }
    rep.heading("direct witness");
    if a.is_invertible() && b.is_invertible() {
        let direct = IdentityReport::new("(B A^-1) P (B^-1 A) = Q", &ring, n, CheckKind::Theorem);
        match direct_equivalence_witness(&a, &b, &x) {
            Ok((u, v)) => {
                rep.line(format!("U = B*A^-1 = {u}"));
                rep.line(format!("V = B^-1*A = {v}"));
                let p = &(&a + &b) - &(&(&a * &x) * &b);
                let q = &(&a + &b) - &(&(&b * &x) * &a);
                rep.check(direct.with_matrices(&(&(&u * &p) * &v), &q));
            }
            Err(e) => {
                let mut r = direct.detail("error", e.to_string());
                r.holds = false;
                rep.check(r);
            }
        }
    } else {
        rep.line(format!("skipped: det A = {}, det B = {}", render(&a.det()), render(&b.det())));
    }
    rep.elapsed = start.elapsed();
    Ok(rep)
}

/// `2..6` (inclusive) or a single `4`.
pub fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("bad range `{s}`; expected <a>..<b> with 1 <= a <= b"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let k = s.trim().parse().map_err(|_| bad())?;
            (k, k)
        }
    };
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// Ring names on the command line: `Z`, `Z/6`, `Zmod6`, or a document
/// declaration such as `Poly x y`.
pub fn parse_ring_arg(s: &str) -> Result<Ring, CliError> {
    let s = s.trim();
    let words: Vec<String> = if let Some(m) = s.strip_prefix("Z/").or_else(|| s.strip_prefix("Zmod").filter(|m| !m.starts_with(' '))) {
        vec!["Zmod".into(), m.to_string()]
    } else if let Some(vars) = s.strip_prefix("Z[").and_then(|r| r.strip_suffix(']')) {
        std::iter::once("Poly".to_string()).chain(vars.split(',').map(|v| v.trim().to_string())).collect()
    } else {
        s.split_whitespace().map(str::to_string).collect()
    };
    let refs: Vec<&str> = words.iter().map(String::as_str).collect();
    parse_ring(&refs).map_err(|e| CliError::Usage(format!("bad ring `{s}`: {e}")))
}

pub struct BenchRow {
    pub algorithm: &'static str,
    pub n: usize,
    pub trial: usize,
    pub nanoseconds: u128,
    pub digest: String,
}

pub struct BenchReport {
    pub ring: Ring,
    pub rows: Vec<BenchRow>,
    /// (n, trial) pairs whose digests disagree across algorithms.
    pub mismatches: Vec<(usize, usize)>,
}

fn digest(e: &RingElement) -> String {
    hex::encode(&Sha256::digest(e.to_string().as_bytes())[..8])
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl BenchReport {
    pub fn csv(&self, timing: bool) -> String {
        let mut out = String::from("algorithm,ring,n,trial,nanoseconds,result_digest\n");
        let ring = csv_field(&self.ring.to_string());
        for r in &self.rows {
            let ns = if timing { r.nanoseconds } else { 0 };
            let _ = writeln!(out, "{},{ring},{},{},{ns},{}", r.algorithm, r.n, r.trial, r.digest);
        }
        out
    }

    pub fn exit_code(&self) -> i32 {
        if self.mismatches.is_empty() {
            0
        } else {
            1
        }
    }
}

pub fn cmd_bench(range: (usize, usize), ring: &Ring, trials: usize, seed: u64) -> BenchReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algs: Vec<_> = algorithms().iter().copied().filter(|a| a.supports(ring)).collect();
    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    for n in range.0..=range.1 {
        for trial in 0..trials {
            let m = random::matrix(&mut rng, ring, n);
            let mut first: Option<String> = None;
            let mut agree = true;
            for alg in &algs {
                let t = Instant::now();
                let d = alg.determinant(&m).expect("supported ring");
                let nanoseconds = t.elapsed().as_nanos();
                let digest = digest(&d);
                match &first {
                    None => first = Some(digest.clone()),
                    Some(f) => agree &= *f == digest,
                }
                rows.push(BenchRow {
                    algorithm: alg.name(),
                    n,
                    trial,
                    nanoseconds,
                    digest,
                });
            }
            if !agree {
                mismatches.push((n, trial));
            }
        }
    }
    BenchReport {
        ring: ring.clone(),
        rows,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_ring_arguments() {
        assert_eq!(parse_range("2..6").unwrap(), (2, 6));
        assert_eq!(parse_range("3").unwrap(), (3, 3));
        assert!(parse_range("6..2").is_err());
        assert!(parse_range("0..2").is_err());
        assert!(parse_range("a..b").is_err());
        assert_eq!(parse_ring_arg("Z").unwrap(), Ring::Integers);
        assert_eq!(parse_ring_arg("Z/6").unwrap().to_string(), "Z/6");
        assert_eq!(parse_ring_arg("Zmod6").unwrap().to_string(), "Z/6");
        assert_eq!(parse_ring_arg("Zmod 7").unwrap().to_string(), "Z/7");
        assert_eq!(parse_ring_arg("Z[x,y]").unwrap().to_string(), "Z[x,y]");
        assert_eq!(parse_ring_arg("Poly x").unwrap().to_string(), "Z[x]");
        assert!(parse_ring_arg("Q").is_err());
    }

    #[test]
    fn csv_quotes_ring_names_with_commas() {
        let b = cmd_bench((1, 1), &parse_ring_arg("Z[x,y]").unwrap(), 1, 0);
        assert!(b.csv(false).lines().nth(1).unwrap().contains(",\"Z[x,y]\",1,0,0,"));
    }

    #[test]
    fn bench_rows_and_agreement() {
        let b = cmd_bench((2, 6), &Ring::Integers, 5, 42);
        assert_eq!(b.rows.len(), 3 * 5 * 5);
        assert!(b.mismatches.is_empty());
        let b6 = cmd_bench((2, 3), &Ring::modular(6).unwrap(), 2, 1);
        assert!(b6.rows.iter().all(|r| r.algorithm != "bareiss"));
        assert_eq!(b6.rows.len(), 2 * 2 * 2);
        assert_eq!(cmd_bench((2, 4), &Ring::Integers, 3, 9).csv(false), cmd_bench((2, 4), &Ring::Integers, 3, 9).csv(false));
    }
}
