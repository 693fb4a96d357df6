use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::identities::ternary_pair;
use crate::matrix::Matrix;
use crate::ring::{Ring, RingElement};

use super::smith::smith_normal_form;
use super::EquivalenceError;

/// Necessary conditions for equivalence, computed for a single matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    pub determinant: RingElement,
    pub trace: RingElement,
    /// Distinct nonzero entries (generators of the ideal of 1×1 minors).
    pub entry_generators: Vec<RingElement>,
    /// `minors[k-1]` lists every k×k minor, rows then columns in lexicographic order.
    pub minors: Vec<Vec<RingElement>>,
    /// Integer point (every variable sent to it) → Smith invariant factors.
    pub evaluations: BTreeMap<i64, Vec<BigInt>>,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

pub fn all_minors(m: &Matrix, k: usize) -> Vec<RingElement> {
    let sets = subsets(m.n(), k);
    let mut out = Vec::with_capacity(sets.len() * sets.len());
    for rows in &sets {
        for cols in &sets {
            out.push(m.select(rows, cols).det());
        }
    }
    out
}

/// Profile of `m`; over a polynomial ring the Smith forms are taken at each
/// integer point of `points`, over ℤ at the matrix itself (keyed by 0).
pub fn invariant_profile(m: &Matrix, points: RangeInclusive<i64>) -> Result<InvariantProfile, EquivalenceError> {
    let mut entry_generators: Vec<RingElement> = Vec::new();
    for e in m.entries() {
        if !e.is_zero() && !entry_generators.contains(e) {
            entry_generators.push(e.clone());
        }
    }
    let minors = (1..=m.n()).map(|k| all_minors(m, k)).collect();
    let mut evaluations = BTreeMap::new();
    match m.ring() {
        Ring::Integers => {
            evaluations.insert(0, smith_normal_form(m)?.invariant_factors());
        }
        Ring::Polynomial(vars) => {
            let z = Ring::Integers;
            for c in points {
                let bindings: BTreeMap<usize, RingElement> = (0..vars.len()).map(|i| (i, z.from_i64(c))).collect();
                let mc = m.try_map(&z, |e| e.substitute(&bindings, &z))?;
                evaluations.insert(c, smith_normal_form(&mc)?.invariant_factors());
            }
        }
        _ => {}
    }
    Ok(InvariantProfile {
        determinant: m.det(),
        trace: m.trace(),
        entry_generators,
        minors,
        evaluations,
    })
}

impl InvariantProfile {
    /// Names of the equivalence invariants on which the two profiles differ.
    /// Traces and raw minor lists are not invariants and are not compared.
    pub fn separating_invariants(&self, other: &InvariantProfile) -> Vec<String> {
        let mut out = Vec::new();
        if self.determinant != other.determinant {
            out.push("determinant".to_string());
        }
        for (c, f) in &self.evaluations {
            if other.evaluations.get(c).is_some_and(|g| g != f) {
                out.push(format!("smith form at {c}"));
            }
        }
        out
    }
}

/// Over ℤ[x] with X = I₂, A = [[0,0],[0,x]], B = [[0,2],[0,x]].
#[derive(Clone, Debug)]
pub struct NonEquivalenceFixture {
    pub a: Matrix,
    pub b: Matrix,
    pub x: Matrix,
    pub p: Matrix,
    pub q: Matrix,
    /// P and Q as displayed: [[0,2],[0,2x−x²]] and [[0,2−2x],[0,2x−x²]].
    pub expected_p: Matrix,
    pub expected_q: Matrix,
    pub profile_p: InvariantProfile,
    pub profile_q: InvariantProfile,
}

impl NonEquivalenceFixture {
    pub fn matches_expected(&self) -> bool {
        self.p == self.expected_p && self.q == self.expected_q
    }

    pub fn separating_invariants(&self) -> Vec<String> {
        self.profile_p.separating_invariants(&self.profile_q)
    }
}

pub const DEFAULT_EVALUATION_RANGE: RangeInclusive<i64> = -10..=10;

pub fn nonequivalence_fixture(points: RangeInclusive<i64>) -> Result<NonEquivalenceFixture, EquivalenceError> {
    let ring = Ring::polynomial(["x"]);
    let x = ring.var(0).expect("declared");
    let (z, two) = (ring.zero(), ring.from_i64(2));
    let a = Matrix::from_rows(&ring, vec![vec![z.clone(), z.clone()], vec![z.clone(), x.clone()]])?;
    let b = Matrix::from_rows(&ring, vec![vec![z.clone(), two.clone()], vec![z.clone(), x.clone()]])?;
    let xm = Matrix::identity(2, &ring);
    let (p, q) = ternary_pair(&a, &b, &xm)?;
    let corner = &(&two * &x) - &(&x * &x);
    let expected_p = Matrix::from_rows(&ring, vec![vec![z.clone(), two.clone()], vec![z.clone(), corner.clone()]])?;
    let expected_q = Matrix::from_rows(&ring, vec![vec![z.clone(), &two - &(&two * &x)], vec![z, corner]])?;
    let profile_p = invariant_profile(&p, points.clone())?;
    let profile_q = invariant_profile(&q, points)?;
    Ok(NonEquivalenceFixture {
        a,
        b,
        x: xm,
        p,
        q,
        expected_p,
        expected_q,
        profile_p,
        profile_q,
    })
}
