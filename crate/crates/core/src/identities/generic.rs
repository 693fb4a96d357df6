//! Symbolic proofs over generic matrices.
//!
//! With every entry an independent indeterminate over ℤ, an identity between
//! polynomial expressions in the entries holds for all n×n matrices over every
//! commutative ring as soon as it holds in ℤ[entries]: any concrete instance
//! is the image under a substitution homomorphism.

use std::time::Instant;

use crate::matrix::Matrix;
use crate::ring::Ring;

use super::checks::{self, theorem32_matrices, theorem32_part, Theorem32Part};
use super::report::{CheckKind, IdentityReport};
use super::IdentityError;

/// Three n×n matrices with 3n² distinct indeterminates a_i_j, b_i_j, x_i_j.
#[derive(Clone, Debug)]
pub struct GenericTriple {
    pub n: usize,
    pub ring: Ring,
    pub a: Matrix,
    pub b: Matrix,
    pub x: Matrix,
}

/// Generic matrices named by `prefixes`, sharing one polynomial ring. Variable
/// `prefix_i_j` (1-based) has index `k·n² + (i−1)·n + (j−1)` for the k-th prefix.
pub fn generic_matrices(n: usize, prefixes: &[&str]) -> (Ring, Vec<Matrix>) {
    assert!(n >= 1);
    let mut names = Vec::with_capacity(prefixes.len() * n * n);
    for p in prefixes {
        for i in 1..=n {
            for j in 1..=n {
                names.push(format!("{p}_{i}_{j}"));
            }
        }
    }
    let ring = Ring::polynomial(names);
    let ms = (0..prefixes.len())
        .map(|k| Matrix::from_fn(n, &ring, |i, j| ring.var(k * n * n + i * n + j).expect("declared")))
        .collect();
    (ring, ms)
}

pub fn make_generic_triple(n: usize) -> GenericTriple {
    let (ring, mut ms) = generic_matrices(n, &["a", "b", "x"]);
    let x = ms.pop().expect("three matrices");
    let b = ms.pop().expect("three matrices");
    let a = ms.pop().expect("three matrices");
    GenericTriple { n, ring, a, b, x }
}

/// A polynomial identity in generic matrices, proved by exact expansion.
pub trait GenericProof: Sync {
    fn id(&self) -> &'static str;

    /// Number of generic n×n matrices involved (2 or 3).
    fn arity(&self) -> usize;

    /// Largest n run without an explicit override.
    fn budget(&self) -> usize {
        if self.arity() == 3 {
            3
        } else {
            4
        }
    }

    fn prove(&self, n: usize) -> IdentityReport;
}

struct TernaryDet;
struct TraceTriple;
struct Sylvester;
struct Theorem32(Theorem32Part);
struct FractionProof;

static PROOFS: [&dyn GenericProof; 7] = [
    &TernaryDet,
    &TraceTriple,
    &Sylvester,
    &Theorem32(Theorem32Part::Det),
    &Theorem32(Theorem32Part::Trace),
    &Theorem32(Theorem32Part::Charpoly),
    &FractionProof,
];

pub fn proofs() -> &'static [&'static dyn GenericProof] {
    &PROOFS
}

pub fn proof(id: &str) -> Option<&'static dyn GenericProof> {
    PROOFS.iter().copied().find(|p| p.id() == id)
}

pub fn prove_identity_generic(id: &str, n: usize) -> Result<IdentityReport, IdentityError> {
    let p = proof(id).ok_or_else(|| IdentityError::UnknownIdentity(id.to_string()))?;
    if n == 0 {
        return Err(IdentityError::InvalidArgument("n must be at least 1".into()));
    }
    Ok(p.prove(n))
}

fn timed(f: impl FnOnce() -> IdentityReport) -> IdentityReport {
    let start = Instant::now();
    let r = f();
    r.elapsed(start.elapsed())
}

fn variables_detail(r: IdentityReport, ring: &Ring) -> IdentityReport {
    let count = ring.variables().map_or(0, |v| v.len());
    r.detail("variables", count.to_string())
}

impl GenericProof for TernaryDet {
    fn id(&self) -> &'static str {
        "ternary-det"
    }

    fn arity(&self) -> usize {
        3
    }

    fn prove(&self, n: usize) -> IdentityReport {
        timed(|| {
            let g = make_generic_triple(n);
            let r = checks::check_ternary_det(&g.a, &g.b, &g.x).expect("generic matrices share a ring");
            variables_detail(r, &g.ring)
        })
    }
}

impl GenericProof for TraceTriple {
    fn id(&self) -> &'static str {
        "trace"
    }

    fn arity(&self) -> usize {
        3
    }

    fn prove(&self, n: usize) -> IdentityReport {
        timed(|| {
            let g = make_generic_triple(n);
            let r = checks::check_trace_identity(&g.a, &g.b, &g.x).expect("generic matrices share a ring");
            variables_detail(r, &g.ring)
        })
    }
}

impl GenericProof for Sylvester {
    fn id(&self) -> &'static str {
        "sylvester"
    }

    fn arity(&self) -> usize {
        2
    }

    fn prove(&self, n: usize) -> IdentityReport {
        timed(|| {
            let (ring, ms) = generic_matrices(n, &["a", "b"]);
            let r = checks::sylvester_check(&ms[0], &ms[1]).expect("generic matrices share a ring");
            variables_detail(r, &ring)
        })
    }
}

impl GenericProof for Theorem32 {
    fn id(&self) -> &'static str {
        match self.0 {
            Theorem32Part::Det => "theorem32-det",
            Theorem32Part::Trace => "theorem32-trace",
            Theorem32Part::Charpoly => "theorem32-charpoly",
        }
    }

    fn arity(&self) -> usize {
        2
    }

    fn prove(&self, n: usize) -> IdentityReport {
        timed(|| {
            let (ring, ms) = generic_matrices(n, &["a", "x"]);
            let m = theorem32_matrices(&ms[0], &ms[1]).expect("generic matrices share a ring");
            let mut r = variables_detail(theorem32_part(&m, self.0), &ring);
            if self.0 == Theorem32Part::Charpoly && !r.holds {
                r = match find_charpoly_counterexample(n, 4) {
                    Some((a, x)) => r.detail("smallest concrete counterexample", format!("A = {a}, X = {x}")),
                    None => r.detail("smallest concrete counterexample", "none with at most 4 nonzero 0/1 entries"),
                };
            }
            r
        })
    }
}

impl GenericProof for FractionProof {
    fn id(&self) -> &'static str {
        "fraction-proof"
    }

    fn arity(&self) -> usize {
        3
    }

    fn budget(&self) -> usize {
        2
    }

    fn prove(&self, n: usize) -> IdentityReport {
        fraction_proof_check(n)
    }
}

/// Searches 0/1 integer matrices A, X by increasing number of nonzero entries
/// for one where M₁..M₄ have different characteristic polynomials.
pub fn find_charpoly_counterexample(n: usize, max_weight: usize) -> Option<(Matrix, Matrix)> {
    let z = Ring::Integers;
    let slots = 2 * n * n;
    for weight in 1..=max_weight.min(slots) {
        let mut idx: Vec<usize> = (0..weight).collect();
        loop {
            let mut a = Matrix::zero(n, &z);
            let mut x = Matrix::zero(n, &z);
            for &k in &idx {
                let (m, k) = if k < n * n { (&mut a, k) } else { (&mut x, k - n * n) };
                m.set(k / n, k % n, z.one());
            }
            let ms = theorem32_matrices(&a, &x).expect("same ring");
            if !theorem32_part(&ms, Theorem32Part::Charpoly).holds {
                return Some((a, x));
            }
            // next combination in lexicographic order
            let mut i = weight;
            while i > 0 && idx[i - 1] == slots - weight + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..weight {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

/// Over the fraction field of ℤ[3n² vars]: A⁻¹PB⁻¹ = B⁻¹+A⁻¹−X = B⁻¹QA⁻¹
/// entry-wise, then det P = det Q via cancelling det A·det A⁻¹ = 1 and
/// det B·det B⁻¹ = 1.
pub fn fraction_proof_check(n: usize) -> IdentityReport {
    timed(|| {
        let g = make_generic_triple(n);
        let field = Ring::fraction_of(g.ring.clone()).expect("polynomial rings are domains");
        let lift = |m: &Matrix| m.embed_into(&field).expect("domain embeds in its fraction field");
        let (a, b, x) = (lift(&g.a), lift(&g.b), lift(&g.x));
        let a_inv = a.inverse().expect("generic determinant is nonzero");
        let b_inv = b.inverse().expect("generic determinant is nonzero");
        let (p, q) = checks::ternary_pair(&a, &b, &x).expect("same ring");
        let left = &(&a_inv * &p) * &b_inv;
        let middle = &(&b_inv + &a_inv) - &x;
        let right = &(&b_inv * &q) * &a_inv;

        let left_eq = left == middle;
        let right_eq = right == middle;
        let (da, db) = (a.det(), b.det());
        let cancel_a = (&da * &a_inv.det()).is_one();
        let cancel_b = (&db * &b_inv.det()).is_one();
        let dm = middle.det();
        let (dp, dq) = (p.det(), q.det());
        let det_p_ok = dp == &(&da * &dm) * &db;
        let det_q_ok = dq == &(&db * &dm) * &da;

        let mut r = IdentityReport::new("fraction-proof", &field, n, CheckKind::Theorem)
            .with_matrices(&left, &right)
            .detail("A^-1 P B^-1 = B^-1 + A^-1 - X", left_eq.to_string())
            .detail("B^-1 Q A^-1 = B^-1 + A^-1 - X", right_eq.to_string())
            .detail("det(A) det(A^-1) = 1", cancel_a.to_string())
            .detail("det(B) det(B^-1) = 1", cancel_b.to_string())
            .detail("det(P) = det(A) det(B^-1+A^-1-X) det(B)", det_p_ok.to_string())
            .detail("det(Q) = det(B) det(B^-1+A^-1-X) det(A)", det_q_ok.to_string());
        r.holds = left_eq && right_eq && cancel_a && cancel_b && det_p_ok && det_q_ok && dp == dq;
        if n > 2 {
            r = r.detail("warning", "fraction arithmetic over many variables grows quickly beyond n = 2");
        }
        r
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_triple_layout() {
        let g = make_generic_triple(1);
        assert_eq!(g.a.to_string(), "[[a_1_1]]");
        assert_eq!(g.b.to_string(), "[[b_1_1]]");
        assert_eq!(g.x.to_string(), "[[x_1_1]]");
        let g = make_generic_triple(2);
        assert_eq!(g.ring.variables().unwrap().len(), 12);
        let entries: Vec<_> = g.a.entries().to_vec();
        for i in 0..entries.len() {
            assert_eq!(entries[i].size(), 1);
            for j in i + 1..entries.len() {
                assert_ne!(entries[i], entries[j]);
            }
        }
        assert_eq!(g.b.get(1, 0).to_string(), "b_2_1");
    }

    #[test]
    fn registry_ids() {
        let ids: Vec<_> = proofs().iter().map(|p| p.id()).collect();
        assert_eq!(
            ids,
            [
                "ternary-det",
                "trace",
                "sylvester",
                "theorem32-det",
                "theorem32-trace",
                "theorem32-charpoly",
                "fraction-proof"
            ]
        );
        assert_eq!(proof("ternary-det").unwrap().budget(), 3);
        assert_eq!(proof("sylvester").unwrap().budget(), 4);
        assert!(matches!(prove_identity_generic("nope", 2), Err(IdentityError::UnknownIdentity(_))));
    }

    #[test]
    fn small_generic_proofs() {
        for id in ["ternary-det", "trace", "sylvester", "theorem32-det", "theorem32-trace", "theorem32-charpoly"] {
            for n in 1..=2 {
                let r = prove_identity_generic(id, n).unwrap();
                assert!(r.holds, "{id} n={n}: {}", r.render(false));
            }
        }
    }

    #[test]
    fn ternary_det_n1_is_commutativity() {
        let r = prove_identity_generic("ternary-det", 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.left, r.right);
        assert_eq!(r.left, "-a_1_1*b_1_1*x_1_1 + a_1_1 + b_1_1");
    }

    #[test]
    fn fraction_proof_small() {
        let r = fraction_proof_check(1);
        assert!(r.holds, "{}", r.render(false));
    }

    #[test]
    fn no_small_charpoly_counterexample_for_n2() {
        assert!(find_charpoly_counterexample(2, 3).is_none());
    }
}
