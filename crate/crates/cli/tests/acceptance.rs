//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use detring::equivalence::{
    nonequivalence_fixture, sl_witness, verify_block_identity_24, verify_block_identity_25, verify_block_identity_26,
    DEFAULT_EVALUATION_RANGE,
};
use detring::expr::{parse_str, Expr};
use detring::identities::{
    example31, example33, make_generic_triple, phk_example, prove_identity_generic, trace_counterexample, CheckKind,
};
use detring::matrix::{algorithms, charpoly, det_cofactor, Matrix};
use detring::random;
use detring::ring::{Ring, RingElement};
use detring_cli::run;

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

/// Runs the CLI in-process and requires `expected` as exit code.
fn cli(args: &[&str], expected: i32) -> Result<String, String> {
    let out = run(std::iter::once("detring").chain(args.iter().copied()));
    ensure(out.code == expected, || {
        format!("`detring {}` exited {} (wanted {expected}): {}{}", args.join(" "), out.code, out.stdout, out.stderr)
    })?;
    Ok(out.stdout)
}

// 1 -----------------------------------------------------------------------

fn generic_ternary() -> Outcome {
    let mut notes = Vec::new();
    for (n, limit) in [(1, 1.0), (2, 1.0), (3, 60.0)] {
        let start = Instant::now();
        let out = cli(&["prove", "ternary-det", "--n", &n.to_string(), "--no-timing"], 0)?;
        let t = start.elapsed().as_secs_f64();
        ensure(out.contains("overall: PASS"), || format!("n={n}: {out}"))?;
        ensure(t < limit, || format!("n={n} took {t:.2}s, limit {limit}s"))?;
        let r = prove_identity_generic("ternary-det", n).map_err(|e| e.to_string())?;
        ensure(r.holds && r.kind == CheckKind::Theorem, || format!("n={n}: report {r:?}"))?;
        notes.push(format!("n={n} {t:.2}s"));
    }
    Ok(notes.join(", "))
}

// 2 -----------------------------------------------------------------------

fn generic_sylvester() -> Outcome {
    for k in 1..=4 {
        let out = cli(&["prove", "sylvester", "--n", &k.to_string(), "--no-timing"], 0)?;
        ensure(out.contains("overall: PASS"), || format!("k={k}: {out}"))?;
    }
    Ok("k = 1..4".into())
}

// 3 -----------------------------------------------------------------------

fn fixtures() -> Outcome {
    let z = Ring::Integers;
    let e31 = example31(&z).map_err(|e| e.to_string())?;
    let got: Vec<RingElement> = e31.values().into_iter().cloned().collect();
    let want: Vec<RingElement> = [1, 0, 0, 0].iter().map(|&k| z.from_i64(k)).collect();
    ensure(got == want, || format!("naive ternary example determinants {got:?}"))?;

    let e33 = example33().map_err(|e| e.to_string())?;
    let v = |i| e33.ring.var(i).unwrap();
    let sr = &v(1) * &v(0);
    let det = &e33.ring.one() + &sr;
    let tr = &e33.ring.from_i64(2) + &sr;
    ensure(e33.dets.iter().all(|d| *d == det), || format!("dets {:?}", e33.dets))?;
    ensure(e33.traces.iter().all(|t| *t == tr), || format!("traces {:?}", e33.traces))?;

    let zs = Ring::polynomial(["s"]);
    let s = zs.var(0).unwrap();
    let cx = trace_counterexample(&s, 2).map_err(|e| e.to_string())?;
    ensure(cx.difference() == s, || format!("trace difference {}", cx.difference()))?;

    let zxy = Ring::polynomial(["x", "y"]);
    let (x, y) = (zxy.var(0).unwrap(), zxy.var(1).unwrap());
    let two = zxy.from_i64(2);
    let (p, h, k) = phk_example(&x, &y).map_err(|e| e.to_string())?;
    ensure(p == &y - &two && h == &x - &two && k == &(&two * &y) - &two, || format!("P/H/K dets {p}, {h}, {k}"))?;

    let f = nonequivalence_fixture(DEFAULT_EVALUATION_RANGE).map_err(|e| e.to_string())?;
    let zx = Ring::polynomial(["x"]);
    let xv = zx.var(0).unwrap();
    let (o, t) = (zx.zero(), zx.from_i64(2));
    let corner = &(&t * &xv) - &(&xv * &xv);
    let want_p = Matrix::from_rows(&zx, vec![vec![o.clone(), t.clone()], vec![o.clone(), corner.clone()]]).unwrap();
    let want_q = Matrix::from_rows(&zx, vec![vec![o.clone(), &t - &(&t * &xv)], vec![o, corner]]).unwrap();
    ensure(f.p == want_p && f.q == want_q, || format!("fixture P = {}, Q = {}", f.p, f.q))?;

    let out = cli(&["examples", "--no-timing"], 0)?;
    ensure(out.contains("overall: PASS"), || out.clone())?;
    Ok("naive ternary and binary examples, trace difference, P/H/K, fixture P and Q".into())
}

// 4 -----------------------------------------------------------------------

fn theorem32() -> Outcome {
    for (id, n) in [
        ("theorem32-det", 2),
        ("theorem32-trace", 2),
        ("theorem32-charpoly", 2),
        ("theorem32-det", 3),
        ("theorem32-trace", 3),
    ] {
        let r = prove_identity_generic(id, n).map_err(|e| e.to_string())?;
        ensure(r.holds && r.kind == CheckKind::Theorem, || format!("{id} n={n}: {r:?}"))?;
    }
    let r = prove_identity_generic("theorem32-charpoly", 3).map_err(|e| e.to_string())?;
    ensure(r.kind == CheckKind::Observation, || format!("n=3 charpoly should be an observation: {r:?}"))?;
    let out = cli(&["prove", "theorem32-charpoly", "--n", "3", "--no-timing"], 0)?;
    ensure(out.contains("theorem32-charpoly"), || out.clone())?;
    Ok(format!(
        "n=2 det/trace/charpoly, n=3 det/trace; n=3 charpolys {}",
        if r.holds { "equal" } else { "differ" }
    ))
}

// 5 -----------------------------------------------------------------------

fn fraction_proof() -> Outcome {
    let out = cli(&["prove", "fraction-proof", "--n", "2", "--no-timing"], 0)?;
    ensure(out.contains("overall: PASS"), || out.clone())?;
    Ok("n=2".into())
}

// 6 -----------------------------------------------------------------------

fn block_identities() -> Outcome {
    type Check = fn(&Matrix, &Matrix, &Matrix) -> Result<bool, detring::matrix::MatrixError>;
    let checks: [(&str, Check); 3] = [
        ("first", verify_block_identity_24),
        ("second", verify_block_identity_25),
        ("third", verify_block_identity_26),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut count = 0;
    for ring in random::standard_rings() {
        for n in 1..=3 {
            for trial in 0..100 {
                let (a, b, x) = (
                    random::matrix(&mut rng, &ring, n),
                    random::matrix(&mut rng, &ring, n),
                    random::matrix(&mut rng, &ring, n),
                );
                for (name, f) in checks {
                    let ok = f(&a, &b, &x).map_err(|e| e.to_string())?;
                    ensure(ok, || format!("{name} block identity over {ring}, n={n}, trial {trial}"))?;
                }
                count += 1;
            }
        }
    }
    let g = make_generic_triple(2);
    for (name, f) in checks {
        ensure(f(&g.a, &g.b, &g.x).map_err(|e| e.to_string())?, || format!("{name} block identity, generic n=2"))?;
    }
    Ok(format!("{count} random triples + generic n=2"))
}

// 7 -----------------------------------------------------------------------

fn check_witness(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<(), String> {
    let w = sl_witness(a, b, x).map_err(|e| e.to_string())?;
    let n = a.n();
    let lhs = &(&w.u * &w.p.suspend(n)) * &w.v;
    ensure(lhs == w.q.suspend(n), || "U diag(P,I) V differs from diag(Q,I)".into())?;
    ensure(w.u.det().is_one() && w.v.det().is_one(), || "det U or det V is not 1".into())?;
    Ok(())
}

fn witnesses() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut count = 0;
    for ring in random::standard_rings() {
        for trial in 0..100 {
            let n = 1 + trial % 3;
            let (a, b, x) = (
                random::matrix(&mut rng, &ring, n),
                random::matrix(&mut rng, &ring, n),
                random::matrix(&mut rng, &ring, n),
            );
            check_witness(&a, &b, &x).map_err(|e| format!("{ring}, n={n}, trial {trial}: {e}"))?;
            count += 1;
        }
    }
    let g = make_generic_triple(2);
    check_witness(&g.a, &g.b, &g.x).map_err(|e| format!("generic n=2: {e}"))?;
    Ok(format!("{count} random triples + generic n=2"))
}

// 8 -----------------------------------------------------------------------

fn determinant_oracles() -> Outcome {
    let mut contexts = random::standard_rings();
    contexts.push(Ring::fraction_of(Ring::Integers).unwrap());
    contexts.push(Ring::fraction_of(Ring::polynomial(["x"])).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut bareiss_on_required = 0;
    for i in 0..500 {
        let ring = &contexts[i % contexts.len()];
        let n = 1 + (i / contexts.len()) % 5;
        let m = random::matrix(&mut rng, ring, n);
        let reference = det_cofactor(&m);
        for alg in algorithms() {
            if !alg.supports(ring) {
                continue;
            }
            let d = alg.determinant(&m).map_err(|e| format!("{} over {ring}: {e}", alg.name()))?;
            ensure(d == reference, || format!("{} disagrees with cofactor over {ring}, n={n}: {d} vs {reference}", alg.name()))?;
            if alg.name() == "bareiss" && matches!(ring, Ring::Integers | Ring::Polynomial(_)) {
                bareiss_on_required += 1;
            }
        }
    }
    ensure(bareiss_on_required > 0, || "Bareiss never ran on Z or Z[x]".into())?;
    Ok(format!("500 matrices over {} contexts, {bareiss_on_required} Bareiss runs on Z/Z[x]", contexts.len()))
}

// 9 -----------------------------------------------------------------------

fn property_suite() -> Outcome {
    const CASES: usize = 200;
    let mut rings = random::standard_rings();
    rings.push(Ring::fraction_of(Ring::polynomial(["x"])).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let pick = |rng: &mut ChaCha8Rng| (rings[rng.gen_range(0..rings.len())].clone(), rng.gen_range(1..=4));

    for case in 0..CASES {
        let (ring, _) = pick(&mut rng);
        let [a, b, c] = [0; 3].map(|_| random::element(&mut rng, &ring));
        let ok = &(&a + &b) + &c == &a + &(&b + &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a + &b == &b + &a
            && &a * &b == &b * &a
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &a + &ring.zero() == a
            && &a * &ring.one() == a
            && (&a + &(-&a)).is_zero();
        ensure(ok, || format!("ring axioms, case {case} over {ring}: {a}, {b}, {c}"))?;
    }
    for case in 0..CASES {
        let (ring, n) = pick(&mut rng);
        let (a, b) = (random::matrix(&mut rng, &ring, n), random::matrix(&mut rng, &ring, n));
        ensure((&a * &b).det() == &a.det() * &b.det(), || format!("det multiplicativity, case {case} over {ring}"))?;
    }
    for case in 0..CASES {
        let (ring, n) = pick(&mut rng);
        let a = random::matrix(&mut rng, &ring, n);
        let d = Matrix::scalar(n, &a.det());
        ensure(&a * &a.adjugate() == d && &a.adjugate() * &a == d, || format!("adjugate, case {case} over {ring}"))?;
    }
    for case in 0..CASES {
        let (ring, n) = pick(&mut rng);
        let a = random::matrix(&mut rng, &ring, n);
        let c = charpoly(&a).coefficients().to_vec();
        let sign = if n % 2 == 0 { ring.one() } else { -&ring.one() };
        let mut acc = Matrix::zero(n, &ring);
        for coeff in c.iter().rev() {
            acc = &(&acc * &a) + &Matrix::scalar(n, coeff);
        }
        let ok = c.len() == n + 1 && c[n].is_one() && c[n - 1] == -&a.trace() && c[0] == &sign * &a.det() && acc.is_zero();
        ensure(ok, || format!("charpoly coefficients, case {case} over {ring}"))?;
    }
    for case in 0..CASES {
        let (ring, n) = pick(&mut rng);
        let [a, b, c] = [0; 3].map(|_| random::matrix(&mut rng, &ring, n));
        let ok = (&a * &b).trace() == (&b * &a).trace() && (&(&a * &b) * &c).trace() == (&(&c * &a) * &b).trace();
        ensure(ok, || format!("trace cyclicity, case {case} over {ring}"))?;
    }
    for case in 0..CASES {
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(2..=30i64);
        let a = random::integer_matrix(&mut rng, n, 50);
        let zm = Ring::modular(m).unwrap();
        let red = a.try_map(&zm, |e| e.reduce_mod(&zm)).unwrap();
        let cp: Vec<RingElement> = charpoly(&a).coefficients().iter().map(|c| c.reduce_mod(&zm).unwrap()).collect();
        let ok = a.det().reduce_mod(&zm).unwrap() == red.det() && charpoly(&red).coefficients() == cp.as_slice();
        ensure(ok, || format!("reduction mod {m}, case {case}"))?;

        // the same naturality for x ↦ c on ℤ[x]
        let zx = Ring::polynomial(["x"]);
        let p = random::matrix(&mut rng, &zx, n);
        let z = Ring::Integers;
        let point: BTreeMap<usize, RingElement> = [(0, z.from_i64(rng.gen_range(-6..=6)))].into();
        let at = |e: &RingElement| e.substitute(&point, &z).unwrap();
        ensure(at(&p.det()) == p.map(&z, at).det(), || format!("substitution, case {case}"))?;
    }
    Ok(format!("6 properties x {CASES} cases"))
}

// 10 ----------------------------------------------------------------------

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..3) {
            0 => Expr::var(["A", "B", "X", "M1", "s_2"][rng.gen_range(0..5)]),
            1 => Expr::identity(),
            _ => Expr::int(rng.gen_range(0u32..20)),
        };
    }
    let sub = |rng: &mut ChaCha8Rng| random_expr(rng, depth - 1);
    match rng.gen_range(0..7) {
        0 => Expr::add(sub(rng), sub(rng)),
        1 => Expr::sub(sub(rng), sub(rng)),
        2 => Expr::mul(sub(rng), sub(rng)),
        3 => Expr::neg(sub(rng)),
        4 => {
            let k = rng.gen_range(0..4);
            Expr::pow(sub(rng), k)
        }
        5 => Expr::det(sub(rng)),
        _ => Expr::tr(sub(rng)),
    }
}

fn expected_asts() -> Result<(), String> {
    let (a, b, x) = (Expr::var("A"), Expr::var("B"), Expr::var("X"));
    let i = Expr::identity;
    let sum = || Expr::add(a.clone(), b.clone());
    let triple = |p: &Expr, q: &Expr, r: &Expr| Expr::mul(Expr::mul(p.clone(), q.clone()), r.clone());
    let ternary = |f: fn(Expr) -> Expr, l: [&Expr; 3], r: [&Expr; 3]| {
        Expr::equation(f(Expr::sub(sum(), triple(l[0], l[1], l[2]))), f(Expr::sub(sum(), triple(r[0], r[1], r[2]))))
    };
    let m = [
        Expr::add(Expr::sub(i(), Expr::mul(a.clone(), x.clone())), triple(&a, &x, &a)),
        Expr::add(Expr::sub(i(), Expr::mul(x.clone(), a.clone())), triple(&a, &x, &a)),
        Expr::add(Expr::sub(i(), Expr::mul(a.clone(), x.clone())), Expr::mul(Expr::pow(a.clone(), 2), x.clone())),
        Expr::add(Expr::sub(i(), Expr::mul(x.clone(), a.clone())), Expr::mul(x.clone(), Expr::pow(a.clone(), 2))),
    ];
    let cases = vec![
        ("det(A+B-A*X*B) == det(A+B-B*X*A)", ternary(Expr::det, [&a, &x, &b], [&b, &x, &a])),
        ("tr(A+B-A*X*B) == tr(A+B-X*B*A)", ternary(Expr::tr, [&a, &x, &b], [&x, &b, &a])),
        ("tr(A+B-X*B*A) == tr(A+B-B*A*X)", ternary(Expr::tr, [&x, &b, &a], [&b, &a, &x])),
        ("I - A*X + A*X*A", m[0].clone()),
        ("I - X*A + A*X*A", m[1].clone()),
        ("I - A*X + A^2*X", m[2].clone()),
        ("I - X*A + X*A^2", m[3].clone()),
        ("det(I - A*X + A*X*A) == det(I - X*A + X*A^2)", Expr::equation(Expr::det(m[0].clone()), Expr::det(m[3].clone()))),
    ];
    for (src, want) in cases {
        let got = parse_str(src).map_err(|e| format!("{src}: {}", e.diagnostic(src)))?;
        ensure(got == want, || format!("{src} parsed as {}", got.sexpr()))?;
    }
    Ok(())
}

fn exit_codes() -> Result<(), String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let doc = dir.path().join("example.txt");
    std::fs::write(&doc, "ring Z\ndim 2\nmatrix A = [[1,0],[0,0]]\nmatrix X = [[0,1],[1,0]]\nmatrix B = [[1,1],[0,0]]\n")
        .map_err(|e| e.to_string())?;
    let doc = doc.to_str().unwrap();
    let cases: [(&[&str], i32); 4] = [
        (&["verify", "det(A+B-A*X*B) == det(A+B-B*X*A)", "--input", doc], 0),
        (&["verify", "det(I-A*X*B) == det(I-B*X*A)", "--input", doc], 1),
        (&["verify", "det(A+B-", "--input", doc], 2),
        (&["no-such-command"], 2),
    ];
    for (args, want) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_detring")).args(args).output().map_err(|e| e.to_string())?;
        let code = out.status.code();
        ensure(code == Some(want), || format!("`detring {}` exited {code:?}, wanted {want}", args.join(" ")))?;
    }
    Ok(())
}

fn parser_suite() -> Outcome {
    expected_asts()?;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for case in 0..100 {
        let e = if rng.gen_bool(0.5) {
            Expr::equation(random_expr(&mut rng, 4), random_expr(&mut rng, 4))
        } else {
            random_expr(&mut rng, 5)
        };
        let printed = e.to_string();
        let back = parse_str(&printed).map_err(|err| format!("case {case}: {}", err.diagnostic(&printed)))?;
        ensure(back == e && back.to_string() == printed, || format!("round trip {case} unstable: {printed}"))?;
    }
    exit_codes()?;
    Ok("expected ASTs, 100 round trips, exit codes 0/1/2".into())
}

fn main() {
    let criteria: [(u32, &str, u64, fn() -> Outcome); 10] = [
        (1, "generic ternary determinant identity, n = 1..3", 61, generic_ternary),
        (2, "generic Sylvester identity, k = 1..4", 60, generic_sylvester),
        (3, "fixture values", 5, fixtures),
        (4, "binary specialisations M1..M4", 60, theorem32),
        (5, "fraction-field proof", 60, fraction_proof),
        (6, "block identities", 30, block_identities),
        (7, "SL witnesses", 60, witnesses),
        (8, "determinant algorithm oracles", 60, determinant_oracles),
        (9, "property suite", 120, property_suite),
        (10, "parser suite and exit codes", 10, parser_suite),
    ];
    let mut failed = 0;
    for (k, name, limit, f) in criteria {
        let start = Instant::now();
        let result = f();
        let t = start.elapsed();
        let result = result.and_then(|note| {
            if t > Duration::from_secs(limit) {
                Err(format!("{note}; took {:.2}s, limit {limit}s", t.as_secs_f64()))
            } else {
                Ok(note)
            }
        });
        match result {
            Ok(note) => println!("[PASS] criterion {k}: {name} ({note}) [{:.2}s]", t.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] criterion {k}: {name}: {why} [{:.2}s]", t.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
