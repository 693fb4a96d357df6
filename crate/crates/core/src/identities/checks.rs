//! Identity checks on concrete matrices over any supported ring.

use crate::matrix::{charpoly, Matrix, MatrixError};
use crate::ring::{Ring, RingElement};

use super::report::{render, CheckKind, IdentityReport};
use super::IdentityError;

fn compatible(ms: &[&Matrix]) -> Result<(), MatrixError> {
    for m in &ms[1..] {
        ms[0].check_compatible(m)?;
    }
    Ok(())
}

/// `(A+B−AXB, A+B−BXA)`.
pub fn ternary_pair(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<(Matrix, Matrix), MatrixError> {
    compatible(&[a, b, x])?;
    let sum = a + b;
    let p = &sum - &(&(a * x) * b);
    let q = &sum - &(&(b * x) * a);
    Ok((p, q))
}

/// `(A+B−XBA, A+B−BAX)`, the other two members of the trace triple.
pub fn trace_partners(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<(Matrix, Matrix), MatrixError> {
    compatible(&[a, b, x])?;
    let sum = a + b;
    let h = &sum - &(&(x * b) * a);
    let k = &sum - &(&(b * a) * x);
    Ok((h, k))
}

pub fn check_ternary_det(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<IdentityReport, MatrixError> {
    let (p, q) = ternary_pair(a, b, x)?;
    Ok(IdentityReport::new("ternary-det", a.ring(), a.n(), CheckKind::Theorem).with_values(&p.det(), &q.det()))
}

pub fn check_ternary_units(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<IdentityReport, MatrixError> {
    let (p, q) = ternary_pair(a, b, x)?;
    let (dp, dq) = (p.det(), q.det());
    Ok(IdentityReport::new("ternary-units", a.ring(), a.n(), CheckKind::Theorem)
        .with_flags(dp.is_unit(), dq.is_unit())
        .detail_value("det(A+B-AXB)", &dp)
        .detail_value("det(A+B-BXA)", &dq))
}

/// tr(A+B−AXB) = tr(A+B−XBA) = tr(A+B−BAX).
pub fn check_trace_identity(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<IdentityReport, MatrixError> {
    let (p, _) = ternary_pair(a, b, x)?;
    let (h, k) = trace_partners(a, b, x)?;
    let (tp, th, tk) = (p.trace(), h.trace(), k.trace());
    let right = if tp != th { &th } else { &tk };
    Ok(IdentityReport::new("trace", a.ring(), a.n(), CheckKind::Theorem)
        .with_values(&tp, right)
        .detail_value("tr(A+B-XBA)", &th)
        .detail_value("tr(A+B-BAX)", &tk))
}

pub fn sylvester_check(a: &Matrix, b: &Matrix) -> Result<IdentityReport, MatrixError> {
    compatible(&[a, b])?;
    let i = Matrix::identity(a.n(), a.ring());
    let left = (&i - &(a * b)).det();
    let right = (&i - &(b * a)).det();
    Ok(IdentityReport::new("sylvester", a.ring(), a.n(), CheckKind::Theorem).with_values(&left, &right))
}

pub fn jacobson_check(a: &Matrix, b: &Matrix) -> Result<IdentityReport, MatrixError> {
    compatible(&[a, b])?;
    let i = Matrix::identity(a.n(), a.ring());
    let (l, r) = ((&i - &(a * b)).det(), (&i - &(b * a)).det());
    Ok(IdentityReport::new("jacobson", a.ring(), a.n(), CheckKind::Theorem)
        .with_flags(l.is_unit(), r.is_unit())
        .detail_value("det(I-ab)", &l)
        .detail_value("det(I-ba)", &r))
}

pub fn super_jacobson_check(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<IdentityReport, MatrixError> {
    let (p, q) = ternary_pair(a, b, x)?;
    let (dp, dq) = (p.det(), q.det());
    Ok(IdentityReport::new("super-jacobson", a.ring(), a.n(), CheckKind::Theorem)
        .with_flags(dp.is_unit(), dq.is_unit())
        .detail_value("det(a+b-axb)", &dp)
        .detail_value("det(a+b-bxa)", &dq))
}

/// First route back to Sylvester: X = I, A ↦ I−A, B ↦ I−B. Both sides of the
/// ternary pair must equal I−AB and I−BA entry-wise.
pub fn specialize_sylvester_route1(a: &Matrix, b: &Matrix) -> Result<IdentityReport, MatrixError> {
    compatible(&[a, b])?;
    let i = Matrix::identity(a.n(), a.ring());
    let (p, q) = ternary_pair(&(&i - a), &(&i - b), &i)?;
    sylvester_reduction("sylvester-route1", a, b, &p, &q)
}

/// How to read "set B = I and X = I + B".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route2Reading {
    /// The B slot receives I and X receives I + B, with B the free matrix.
    Slots,
    /// B := I first, so X = 2I; both sides collapse to I − A.
    Sequential,
}

pub fn specialize_sylvester_route2(a: &Matrix, b: &Matrix, reading: Route2Reading) -> Result<IdentityReport, MatrixError> {
    compatible(&[a, b])?;
    let i = Matrix::identity(a.n(), a.ring());
    match reading {
        Route2Reading::Slots => {
            let (p, q) = ternary_pair(a, &i, &(&i + b))?;
            sylvester_reduction("sylvester-route2", a, b, &p, &q)
        }
        Route2Reading::Sequential => {
            let x = &i + &i;
            let (p, q) = ternary_pair(a, &i, &x)?;
            let target = &i - a;
            let ok = p == target && q == target;
            let mut r = IdentityReport::new("sylvester-route2-sequential", a.ring(), a.n(), CheckKind::Observation)
                .with_matrices(&p, &q)
                .detail("both sides equal I-A", ok.to_string());
            r.holds = r.holds && ok;
            Ok(r)
        }
    }
}

fn sylvester_reduction(name: &str, a: &Matrix, b: &Matrix, p: &Matrix, q: &Matrix) -> Result<IdentityReport, MatrixError> {
    let i = Matrix::identity(a.n(), a.ring());
    let (lhs, rhs) = (&i - &(a * b), &i - &(b * a));
    let left_ok = *p == lhs;
    let right_ok = *q == rhs;
    let mut r = IdentityReport::new(name, a.ring(), a.n(), CheckKind::Theorem)
        .with_matrices(p, &lhs)
        .detail("A+B-AXB equals I-AB", left_ok.to_string())
        .detail("A+B-BXA equals I-BA", right_ok.to_string());
    r.holds = left_ok && right_ok;
    if !right_ok && r.witness.is_none() {
        r.witness = Some("A+B-BXA differs from I-BA".into());
    }
    Ok(r)
}

/// Matrices M₁..M₄ of the binary specialisations:
/// I−AX+AXA, I−XA+AXA, I−AX+A²X, I−XA+XA².
pub fn theorem32_matrices(a: &Matrix, x: &Matrix) -> Result<[Matrix; 4], MatrixError> {
    compatible(&[a, x])?;
    let i = Matrix::identity(a.n(), a.ring());
    let ax = a * x;
    let xa = x * a;
    let axa = &ax * a;
    let a2 = a * a;
    Ok([
        &(&i - &ax) + &axa,
        &(&i - &xa) + &axa,
        &(&i - &ax) + &(&a2 * x),
        &(&i - &xa) + &(x * &a2),
    ])
}

/// Which invariants of M₁..M₄ to compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem32Part {
    Det,
    Trace,
    Charpoly,
}

/// Compares one invariant across M₁..M₄; `right` is the first one differing
/// from M₁'s (or M₂'s when all agree).
pub fn theorem32_part(ms: &[Matrix; 4], part: Theorem32Part) -> IdentityReport {
    let (n, ring) = (ms[0].n(), ms[0].ring().clone());
    let (name, kind) = match part {
        Theorem32Part::Det => ("theorem32-det", CheckKind::Theorem),
        Theorem32Part::Trace => ("theorem32-trace", CheckKind::Theorem),
        Theorem32Part::Charpoly if n <= 2 => ("theorem32-charpoly", CheckKind::Theorem),
        Theorem32Part::Charpoly => ("theorem32-charpoly", CheckKind::Observation),
    };
    let report = IdentityReport::new(name, &ring, n, kind);
    match part {
        Theorem32Part::Det | Theorem32Part::Trace => {
            let v: Vec<RingElement> =
                ms.iter().map(|m| if part == Theorem32Part::Det { m.det() } else { m.trace() }).collect();
            let right = v[1..].iter().find(|e| **e != v[0]).unwrap_or(&v[1]);
            let mut r = report.with_values(&v[0], right);
            for (k, e) in v.iter().enumerate().skip(1) {
                r = r.detail_value(format!("M{}", k + 1), e);
            }
            r
        }
        Theorem32Part::Charpoly => {
            let cps: Vec<_> = ms.iter().map(charpoly).collect();
            let differing = (1..4).find(|&k| cps[k] != cps[0]);
            let other = &cps[differing.unwrap_or(1)];
            let mut r = report;
            r.holds = differing.is_none();
            r.left = render_coefficients(cps[0].coefficients());
            r.right = render_coefficients(other.coefficients());
            r.stats.left_terms = cps[0].coefficients().iter().map(RingElement::size).sum();
            r.stats.right_terms = other.coefficients().iter().map(RingElement::size).sum();
            if let Some(k) = differing {
                let j = (0..=n).find(|&j| cps[0].coefficients()[j] != cps[k].coefficients()[j]).expect("differ");
                r.witness = Some(format!("M1 and M{} differ in the coefficient of t^{j}", k + 1));
            }
            r
        }
    }
}

fn render_coefficients(c: &[RingElement]) -> String {
    let parts: Vec<String> = c.iter().map(render).collect();
    format!("[{}] (ascending powers of t)", parts.join(", "))
}

/// Equal determinants and traces of M₁..M₄, plus equal characteristic
/// polynomials when n ≤ 2. For larger n the charpoly comparison is recorded
/// as a detail only.
pub fn check_theorem32(a: &Matrix, x: &Matrix) -> Result<IdentityReport, MatrixError> {
    let ms = theorem32_matrices(a, x)?;
    let det = theorem32_part(&ms, Theorem32Part::Det);
    let tr = theorem32_part(&ms, Theorem32Part::Trace);
    let cp = theorem32_part(&ms, Theorem32Part::Charpoly);
    let mut r = IdentityReport::new("theorem32", a.ring(), a.n(), CheckKind::Theorem);
    r.left = det.left.clone();
    r.right = det.right.clone();
    r.stats = det.stats.clone();
    r.holds = det.holds && tr.holds && (a.n() > 2 || cp.holds);
    r.witness = det.witness.or(tr.witness).or(if a.n() <= 2 { cp.witness.clone() } else { None });
    Ok(r.detail("common trace", if tr.holds { tr.left.clone() } else { "differs".into() })
        .detail("charpolys equal", cp.holds.to_string()))
}

/// A = E₁₁, X = E₁₂, B = s·E₂₁: the traces of A+B−AXB and A+B−BXA differ by s.
#[derive(Clone, Debug)]
pub struct TraceCounterexample {
    pub a: Matrix,
    pub b: Matrix,
    pub x: Matrix,
    pub tr_axb: RingElement,
    pub tr_bxa: RingElement,
    pub tr_p: RingElement,
    pub tr_q: RingElement,
}

impl TraceCounterexample {
    pub fn difference(&self) -> RingElement {
        &self.tr_q - &self.tr_p
    }

    pub fn report(&self) -> IdentityReport {
        IdentityReport::new("trace-cx", self.a.ring(), self.a.n(), CheckKind::Counterexample)
            .with_values(&self.tr_p, &self.tr_q)
            .detail_value("tr(AXB)", &self.tr_axb)
            .detail_value("tr(BXA)", &self.tr_bxa)
            .detail_value("tr(A+B-BXA) - tr(A+B-AXB)", &self.difference())
    }
}

pub fn trace_counterexample(s: &RingElement, n: usize) -> Result<TraceCounterexample, IdentityError> {
    if n < 2 {
        return Err(IdentityError::InvalidArgument("trace counterexample needs n >= 2".into()));
    }
    if s.is_zero() {
        return Err(IdentityError::InvalidArgument("trace counterexample needs s != 0".into()));
    }
    let ring = s.ring();
    let a = Matrix::unit(n, 1, 1, &ring)?;
    let x = Matrix::unit(n, 1, 2, &ring)?;
    let b = Matrix::unit(n, 2, 1, &ring)?.scale(s);
    let (p, q) = ternary_pair(&a, &b, &x)?;
    Ok(TraceCounterexample {
        tr_axb: (&(&a * &x) * &b).trace(),
        tr_bxa: (&(&b * &x) * &a).trace(),
        tr_p: p.trace(),
        tr_q: q.trace(),
        a,
        b,
        x,
    })
}

/// det(A+B−AXB), det(A+B−XBA), det(A+B−BAX) for A = E₁₂, B = [[0,1],[1,0]],
/// X = [[0,x],[y,1]].
pub fn phk_example(x: &RingElement, y: &RingElement) -> Result<(RingElement, RingElement, RingElement), IdentityError> {
    let ring = x.ring();
    if !y.belongs_to(&ring) {
        return Err(MatrixError::RingMismatch(ring.to_string(), y.ring().to_string()).into());
    }
    let a = Matrix::from_i64(&ring, &[&[0, 1], &[0, 0]])?;
    let b = Matrix::from_i64(&ring, &[&[0, 1], &[1, 0]])?;
    let xm = Matrix::from_rows(&ring, vec![vec![ring.zero(), x.clone()], vec![y.clone(), ring.one()]])?;
    let (p, _) = ternary_pair(&a, &b, &xm)?;
    let (h, k) = trace_partners(&a, &b, &xm)?;
    Ok((p.det(), h.det(), k.det()))
}

#[derive(Clone, Debug)]
pub struct Example31 {
    pub a: Matrix,
    pub b: Matrix,
    pub x: Matrix,
    pub p: Matrix,
    pub q: Matrix,
    pub det_i_axb: RingElement,
    pub det_i_bxa: RingElement,
    pub det_p: RingElement,
    pub det_q: RingElement,
}

impl Example31 {
    pub fn values(&self) -> [&RingElement; 4] {
        [&self.det_i_axb, &self.det_i_bxa, &self.det_p, &self.det_q]
    }

    /// The failing naive ternary generalisation and the holding identity.
    pub fn reports(&self) -> [IdentityReport; 2] {
        let ring = self.a.ring();
        let naive = IdentityReport::new("example31: I-AXB in GL iff I-BXA in GL", ring, 2, CheckKind::Counterexample)
            .with_flags(self.det_i_axb.is_unit(), self.det_i_bxa.is_unit())
            .detail_value("det(I-AXB)", &self.det_i_axb)
            .detail_value("det(I-BXA)", &self.det_i_bxa);
        let ternary = IdentityReport::new("example31: det(A+B-AXB) = det(A+B-BXA)", ring, 2, CheckKind::Theorem)
            .with_values(&self.det_p, &self.det_q)
            .detail("A+B-AXB", self.p.to_string())
            .detail("A+B-BXA", self.q.to_string());
        [naive, ternary]
    }
}

/// A = [[1,0],[0,0]], X = [[0,1],[1,0]], B = [[1,1],[0,0]] over `ring`.
pub fn example31(ring: &Ring) -> Result<Example31, IdentityError> {
    let a = Matrix::from_i64(ring, &[&[1, 0], &[0, 0]])?;
    let x = Matrix::from_i64(ring, &[&[0, 1], &[1, 0]])?;
    let b = Matrix::from_i64(ring, &[&[1, 1], &[0, 0]])?;
    let i = Matrix::identity(2, ring);
    let (p, q) = ternary_pair(&a, &b, &x)?;
    Ok(Example31 {
        det_i_axb: (&i - &(&(&a * &x) * &b)).det(),
        det_i_bxa: (&i - &(&(&b * &x) * &a)).det(),
        det_p: p.det(),
        det_q: q.det(),
        a,
        b,
        x,
        p,
        q,
    })
}

#[derive(Clone, Debug)]
pub struct Example33 {
    pub ring: Ring,
    pub a: Matrix,
    pub x: Matrix,
    pub ms: [Matrix; 4],
    pub dets: [RingElement; 4],
    pub traces: [RingElement; 4],
}

/// A = [[1,r],[1,0]], X = [[s,t],[0,0]] over ℤ[r,s,t].
pub fn example33() -> Result<Example33, IdentityError> {
    let ring = Ring::polynomial(["r", "s", "t"]);
    let v = |i| ring.var(i).expect("declared");
    let (r, s, t) = (v(0), v(1), v(2));
    let (z, o) = (ring.zero(), ring.one());
    let a = Matrix::from_rows(&ring, vec![vec![o.clone(), r], vec![o, z.clone()]])?;
    let x = Matrix::from_rows(&ring, vec![vec![s, t], vec![z.clone(), z]])?;
    let ms = theorem32_matrices(&a, &x)?;
    let dets = [ms[0].det(), ms[1].det(), ms[2].det(), ms[3].det()];
    let traces = [ms[0].trace(), ms[1].trace(), ms[2].trace(), ms[3].trace()];
    Ok(Example33 {
        ring,
        a,
        x,
        ms,
        dets,
        traces,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(ring: &Ring, src: &str) -> RingElement {
        // tiny helper for fixtures: sums of ±c*var products, e.g. "1 + s*r"
        let mut total = ring.zero();
        for (sign, term) in split_terms(src) {
            let mut t = ring.from_i64(sign);
            for f in term.split('*') {
                let f = f.trim();
                t = &t * &match f.parse::<i64>() {
                    Ok(k) => ring.from_i64(k),
                    Err(_) => ring.var_by_name(f).unwrap_or_else(|| panic!("unknown variable {f}")),
                };
            }
            total = &total + &t;
        }
        total
    }

    fn split_terms(src: &str) -> Vec<(i64, String)> {
        let mut out = Vec::new();
        let mut sign = 1;
        let mut cur = String::new();
        for ch in src.chars() {
            match ch {
                '+' | '-' => {
                    if !cur.trim().is_empty() {
                        out.push((sign, cur.trim().to_string()));
                    }
                    cur.clear();
                    sign = if ch == '-' { -1 } else { 1 };
                }
                _ => cur.push(ch),
            }
        }
        if !cur.trim().is_empty() {
            out.push((sign, cur.trim().to_string()));
        }
        out
    }

    fn pm(ring: &Ring, rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(ring, rows.iter().map(|r| r.iter().map(|e| poly(ring, e)).collect()).collect()).unwrap()
    }

    #[test]
    fn example31_values() {
        let z = Ring::Integers;
        let e = example31(&z).unwrap();
        assert_eq!(e.p, Matrix::from_i64(&z, &[&[2, 1], &[0, 0]]).unwrap());
        assert_eq!(e.q, Matrix::from_i64(&z, &[&[1, 1], &[0, 0]]).unwrap());
        let vals: Vec<_> = e.values().iter().map(|v| v.to_string()).collect();
        assert_eq!(vals, ["1", "0", "0", "0"]);
        for ring in [Ring::modular(5).unwrap(), Ring::polynomial(["x"])] {
            let e = example31(&ring).unwrap();
            let expected = [ring.one(), ring.zero(), ring.zero(), ring.zero()];
            assert!(e.values().iter().zip(&expected).all(|(a, b)| *a == b));
        }
        let [naive, ternary] = e.reports();
        assert!(naive.as_expected() && !naive.holds);
        assert!(ternary.holds);
    }

    #[test]
    fn example33_matrices() {
        let e = example33().unwrap();
        let r = &e.ring;
        assert_eq!(e.ms[0], pm(r, &[&["1 + t", "s*r - t"], &["t", "1 + s*r - t"]]));
        assert_eq!(e.ms[1], pm(r, &[&["1", "0"], &["s + t", "1 + s*r"]]));
        let m34 = pm(r, &[&["1 + s*r", "r*t"], &["0", "1"]]);
        assert_eq!(e.ms[2], m34);
        assert_eq!(e.ms[3], m34);
        for d in &e.dets {
            assert_eq!(*d, poly(r, "1 + s*r"));
        }
        for t in &e.traces {
            assert_eq!(*t, poly(r, "2 + s*r"));
        }
    }

    #[test]
    fn phk_symbolic_and_substituted() {
        let r = Ring::polynomial(["x", "y"]);
        let (x, y) = (r.var(0).unwrap(), r.var(1).unwrap());
        let (p, h, k) = phk_example(&x, &y).unwrap();
        assert_eq!(p, poly(&r, "y - 2"));
        assert_eq!(h, poly(&r, "x - 2"));
        assert_eq!(k, poly(&r, "2*y - 2"));
        assert!(p != h && h != k && p != k);

        let z = Ring::Integers;
        let (p, h, k) = phk_example(&z.from_i64(2), &z.from_i64(2)).unwrap();
        assert_eq!([p, h, k], [z.zero(), z.zero(), z.from_i64(2)]);
        let (p, h, k) = phk_example(&z.zero(), &z.zero()).unwrap();
        assert_eq!([p, h, k], [z.from_i64(-2), z.from_i64(-2), z.from_i64(-2)]);
    }

    #[test]
    fn trace_counterexample_cases() {
        let z = Ring::Integers;
        let cx = trace_counterexample(&z.one(), 2).unwrap();
        assert_eq!(cx.difference(), z.one());
        let cx = trace_counterexample(&z.from_i64(5), 2).unwrap();
        assert_eq!(cx.tr_axb, z.from_i64(5));
        assert!(cx.tr_bxa.is_zero());
        assert!(cx.report().as_expected());
        let z7 = Ring::modular(7).unwrap();
        let cx = trace_counterexample(&z7.from_i64(3), 3).unwrap();
        assert_eq!(cx.difference(), z7.from_i64(3));
        assert!(trace_counterexample(&z.zero(), 2).is_err());
        assert!(trace_counterexample(&z.one(), 1).is_err());
    }

    #[test]
    fn ternary_pair_degenerate_inputs() {
        let z = Ring::Integers;
        let a = Matrix::from_i64(&z, &[&[1, 2], &[3, 4]]).unwrap();
        let b = Matrix::from_i64(&z, &[&[0, -1], &[5, 2]]).unwrap();
        let zero = Matrix::zero(2, &z);
        let (p, q) = ternary_pair(&a, &b, &zero).unwrap();
        assert_eq!(p, &a + &b);
        assert_eq!(q, &a + &b);
        let (p, q) = ternary_pair(&zero, &b, &a).unwrap();
        assert_eq!((p, q.clone()), (b.clone(), b));
    }

    #[test]
    fn units_over_different_rings() {
        for (ring, expect) in [(Ring::modular(5).unwrap(), true), (Ring::Integers, false)] {
            let i = Matrix::identity(2, &ring);
            let zero = Matrix::zero(2, &ring);
            let r = check_ternary_units(&i, &i, &zero).unwrap();
            assert!(r.holds);
            assert_eq!(r.left, expect.to_string());
        }
    }

    #[test]
    fn sylvester_specialisations() {
        let z = Ring::Integers;
        let zero = Matrix::zero(3, &z);
        let r = specialize_sylvester_route1(&zero, &zero).unwrap();
        assert!(r.holds);
        let a = Matrix::from_i64(&z, &[&[1, 2], &[0, 1]]).unwrap();
        let b = Matrix::from_i64(&z, &[&[3, 0], &[1, 1]]).unwrap();
        assert!(specialize_sylvester_route2(&a, &b, Route2Reading::Slots).unwrap().holds);
        let seq = specialize_sylvester_route2(&a, &b, Route2Reading::Sequential).unwrap();
        assert!(seq.holds);
        assert_eq!(seq.kind, CheckKind::Observation);
        assert!(sylvester_check(&Matrix::zero(2, &z), &b).unwrap().holds);
    }

    #[test]
    fn theorem32_degenerate_cases() {
        let z = Ring::Integers;
        let x = Matrix::from_i64(&z, &[&[1, 2], &[3, 4]]).unwrap();
        for a in [Matrix::zero(2, &z), Matrix::identity(2, &z)] {
            let ms = theorem32_matrices(&a, &x).unwrap();
            for m in &ms {
                assert_eq!(*m, Matrix::identity(2, &z));
            }
        }
    }

    #[test]
    fn example31_in_jacobson_form() {
        let z = Ring::Integers;
        let e = example31(&z).unwrap();
        let r = jacobson_check(&(&e.a * &e.x), &e.b).unwrap();
        assert!(r.holds);
        let r = super_jacobson_check(&e.a, &e.b, &e.x).unwrap();
        assert!(r.holds);
        assert_eq!(r.left, "false");
    }
}
