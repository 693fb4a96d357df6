use std::fmt::Write as _;
use std::time::Duration;

use num_bigint::BigInt;

use crate::matrix::Matrix;
use crate::ring::RingElement;

/// Values with more monomials than this are printed as a digest.
pub const DEFAULT_SIZE_CAP: usize = 200;

/// What a check is expected to do.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// A theorem: must hold on every input.
    Theorem,
    /// A counterexample: must fail by construction.
    Counterexample,
    /// Recorded but not asserted either way.
    Observation,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub left_terms: usize,
    pub right_terms: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub ring: String,
    pub n: usize,
    pub kind: CheckKind,
    pub holds: bool,
    pub left: String,
    pub right: String,
    pub witness: Option<String>,
    pub details: Vec<(String, String)>,
    pub stats: Stats,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, ring: impl ToString, n: usize, kind: CheckKind) -> Self {
        IdentityReport {
            name: name.into(),
            ring: ring.to_string(),
            n,
            kind,
            holds: true,
            left: String::new(),
            right: String::new(),
            witness: None,
            details: Vec::new(),
            stats: Stats::default(),
        }
    }

    /// Fills in `holds`, both sides, sizes and, on failure, the difference.
    pub fn with_values(mut self, left: &RingElement, right: &RingElement) -> Self {
        self.holds = left == right;
        self.left = render(left);
        self.right = render(right);
        self.stats.left_terms = left.size();
        self.stats.right_terms = right.size();
        if !self.holds {
            self.witness = Some(format!("left - right = {}", render(&(left - right))));
        }
        self
    }

    pub fn with_matrices(mut self, left: &Matrix, right: &Matrix) -> Self {
        self.holds = left == right;
        self.left = render_matrix(left);
        self.right = render_matrix(right);
        self.stats.left_terms = left.entries().iter().map(RingElement::size).sum();
        self.stats.right_terms = right.entries().iter().map(RingElement::size).sum();
        if !self.holds {
            let diff = left - right;
            let pos = diff.entries().iter().position(|e| !e.is_zero()).expect("matrices differ");
            self.witness = Some(format!(
                "entry ({}, {}) differs by {}",
                pos / left.n() + 1,
                pos % left.n() + 1,
                render(&diff.entries()[pos])
            ));
        }
        self
    }

    pub fn with_flags(mut self, left: bool, right: bool) -> Self {
        self.holds = left == right;
        self.left = left.to_string();
        self.right = right.to_string();
        self.stats.left_terms = 1;
        self.stats.right_terms = 1;
        if !self.holds {
            self.witness = Some(format!("left is {left}, right is {right}"));
        }
        self
    }

    pub fn detail(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.details.push((key.into(), value.into()));
        self
    }

    pub fn detail_value(self, key: impl Into<String>, value: &RingElement) -> Self {
        let v = render(value);
        self.detail(key, v)
    }

    pub fn elapsed(mut self, d: Duration) -> Self {
        self.stats.elapsed = d;
        self
    }

    /// True when the outcome is the expected one for the check's kind.
    pub fn as_expected(&self) -> bool {
        match self.kind {
            CheckKind::Theorem => self.holds,
            CheckKind::Counterexample => !self.holds,
            CheckKind::Observation => true,
        }
    }

    pub fn status(&self) -> &'static str {
        match (self.kind, self.as_expected()) {
            (CheckKind::Observation, _) => "INFO",
            (_, true) => "PASS",
            (_, false) => "FAIL",
        }
    }

    /// Multi-line text block; elapsed time is omitted when `timing` is false.
    pub fn render(&self, timing: bool) -> String {
        let mut out = String::new();
        let verdict = if self.holds { "holds" } else { "does not hold" };
        let _ = writeln!(out, "[{}] {} (n={}, ring {}): {}", self.status(), self.name, self.n, self.ring, verdict);
        let _ = writeln!(out, "  left:  {}", self.left);
        let _ = writeln!(out, "  right: {}", self.right);
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "  witness: {w}");
        }
        for (k, v) in &self.details {
            let _ = writeln!(out, "  {k}: {v}");
        }
        let _ = writeln!(out, "  monomials: left={} right={}", self.stats.left_terms, self.stats.right_terms);
        if timing {
            let _ = writeln!(out, "  elapsed: {:.3?}", self.stats.elapsed);
        }
        out
    }
}

pub fn render(e: &RingElement) -> String {
    render_capped(e, DEFAULT_SIZE_CAP)
}

/// Full text for small values; otherwise monomial count, content and the
/// value at the point sending variable `i` to `i + 2`.
pub fn render_capped(e: &RingElement, cap: usize) -> String {
    if e.size() <= cap {
        return e.to_string();
    }
    match e {
        RingElement::Poly(p) => {
            let point: Vec<BigInt> = (0..p.vars().len()).map(|i| BigInt::from(i + 2)).collect();
            format!(
                "<{} monomials, content {}, value at v_i=i+2: {}>",
                p.num_terms(),
                p.content(),
                p.eval_integers(&point)
            )
        }
        RingElement::Frac(q) => {
            format!("({}) / ({})", render_capped(q.numer(), cap), render_capped(q.denom(), cap))
        }
        other => other.to_string(),
    }
}

pub fn render_matrix(m: &Matrix) -> String {
    let total: usize = m.entries().iter().map(RingElement::size).sum();
    if total <= DEFAULT_SIZE_CAP {
        return m.to_string();
    }
    let rows: Vec<String> = m
        .rows()
        .map(|row| format!("[{}]", row.iter().map(render).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn large_values_are_digested() {
        let r = Ring::polynomial(["x", "y"]);
        let (x, y) = (r.var(0).unwrap(), r.var(1).unwrap());
        let p = (&(&x + &y) + &r.one()).pow(20);
        assert!(p.size() > DEFAULT_SIZE_CAP);
        let s = render(&p);
        assert!(s.starts_with(&format!("<{} monomials, content 1, value at v_i=i+2: ", p.size())), "{s}");
        // (2 + 3 + 1)^20
        assert!(s.ends_with(&format!("{}>", BigInt::from(6).pow(20))));
        assert_eq!(render(&(&x + &y)), "x + y");
    }

    #[test]
    fn holds_iff_values_equal() {
        let z = Ring::Integers;
        let r = IdentityReport::new("t", &z, 1, CheckKind::Theorem).with_values(&z.from_i64(2), &z.from_i64(3));
        assert!(!r.holds && !r.as_expected());
        assert_eq!(r.witness.as_deref(), Some("left - right = -1"));
        let r = IdentityReport::new("t", &z, 1, CheckKind::Counterexample).with_values(&z.one(), &z.zero());
        assert!(r.as_expected());
        assert_eq!(r.status(), "PASS");
    }
}
