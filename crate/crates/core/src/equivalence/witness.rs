use std::fmt::Write as _;

use crate::identities::ternary_pair;
use crate::matrix::Matrix;

use super::blocks::Blocks;
use super::EquivalenceError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub name: &'static str,
    pub matrix: Matrix,
}

/// `U · diag(P, I) · V = diag(Q, I)` with `det U = det V = 1`, where `U` and
/// `V` are the ordered products of their recorded block-elementary factors.
#[derive(Clone, Debug)]
pub struct SlWitness {
    pub p: Matrix,
    pub q: Matrix,
    pub left_factors: Vec<Factor>,
    pub right_factors: Vec<Factor>,
    pub u: Matrix,
    pub v: Matrix,
}

fn product(factors: &[Factor]) -> Matrix {
    let mut it = factors.iter();
    let first = it.next().expect("at least one factor").matrix.clone();
    it.fold(first, |acc, f| &acc * &f.matrix)
}

impl SlWitness {
    /// Re-checks every claim by multiplication.
    pub fn verify(&self) -> Result<(), EquivalenceError> {
        let fail = |what: &str| Err(EquivalenceError::Verification(what.to_string()));
        let n = self.p.n();
        for f in self.left_factors.iter().chain(&self.right_factors) {
            if !f.matrix.is_sl() {
                return fail(&format!("factor {} does not have determinant 1", f.name));
            }
        }
        if product(&self.left_factors) != self.u {
            return fail("U is not the product of its factors");
        }
        if product(&self.right_factors) != self.v {
            return fail("V is not the product of its factors");
        }
        if !self.u.is_sl() || !self.v.is_sl() {
            return fail("det(U) or det(V) is not 1");
        }
        let lhs = &(&self.u * &self.p.suspend(n)) * &self.v;
        if lhs != self.q.suspend(n) {
            return fail("U diag(P, I) V differs from diag(Q, I)");
        }
        Ok(())
    }

    /// Ordered factor names for U and V, then each factor's matrix literal.
    pub fn serialize(&self) -> String {
        let names = |fs: &[Factor]| fs.iter().map(|f| f.name).collect::<Vec<_>>().join(" * ");
        let mut out = String::new();
        let _ = writeln!(out, "U = {}", names(&self.left_factors));
        let _ = writeln!(out, "V = {}", names(&self.right_factors));
        let mut seen: Vec<&str> = Vec::new();
        for f in self.left_factors.iter().chain(&self.right_factors) {
            if seen.contains(&f.name) {
                continue;
            }
            seen.push(f.name);
            let _ = writeln!(out, "{} = {}", f.name, f.matrix);
        }
        let n = self.p.n();
        let _ = writeln!(out, "P = {}", self.p);
        let _ = writeln!(out, "Q = {}", self.q);
        let _ = writeln!(out, "U matrix = {}", self.u);
        let _ = writeln!(out, "V matrix = {}", self.v);
        let _ = writeln!(out, "U diag(P,I) V = {}", &(&self.u * &self.p.suspend(n)) * &self.v);
        out
    }
}

/// Builds the witness from the block column operations relating
/// `[[I, −B], [I−AX, A]]` and `[[I−BX, −B], [I, A]]`:
///
/// ```text
/// [[I,0],[I−AX,P]] = RowFix1 · diag(I,P)
/// [[I−BX,−Q],[I,0]] = [[I,0],[I−AX,P]] · C_B_inv · C_X · C_negA
/// RowFix2 · [[I−BX,−Q],[I,0]] = SwapJ · diag(I,Q)
/// diag(I,M) = SwapJ · diag(M,I) · SwapJ_inv
/// ```
///
/// so `U = SwapJ_inv² · RowFix2 · RowFix1 · SwapJ` and
/// `V = SwapJ_inv · C_B_inv · C_X · C_negA · SwapJ`.
pub fn sl_witness(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<SlWitness, EquivalenceError> {
    let k = Blocks::new(a, b, x)?;
    let (p, q) = ternary_pair(a, b, x)?;
    let f = |name, matrix| Factor { name, matrix };
    let left_factors = vec![
        f("SwapJ_inv", k.swap_j_inv()),
        f("SwapJ_inv", k.swap_j_inv()),
        f("RowFix2", k.row_fix2()),
        f("RowFix1", k.row_fix1()),
        f("SwapJ", k.swap_j()),
    ];
    let right_factors = vec![
        f("SwapJ_inv", k.swap_j_inv()),
        f("C_B_inv", k.c_b_inv()),
        f("C_X", k.c_x()),
        f("C_negA", k.c_neg_a()),
        f("SwapJ", k.swap_j()),
    ];
    let u = product(&left_factors);
    let v = product(&right_factors);
    let w = SlWitness {
        p,
        q,
        left_factors,
        right_factors,
        u,
        v,
    };
    w.verify()?;
    Ok(w)
}

/// For invertible A, B: `(B·A⁻¹) · P · (B⁻¹·A) = Q`.
pub fn direct_equivalence_witness(a: &Matrix, b: &Matrix, x: &Matrix) -> Result<(Matrix, Matrix), EquivalenceError> {
    let (p, q) = ternary_pair(a, b, x)?;
    let a_inv = a.inverse().map_err(|_| EquivalenceError::NotInvertible {
        which: "A",
        det: a.det().to_string(),
    })?;
    let b_inv = b.inverse().map_err(|_| EquivalenceError::NotInvertible {
        which: "B",
        det: b.det().to_string(),
    })?;
    let u = b * &a_inv;
    let v = &b_inv * a;
    if &(&u * &p) * &v != q {
        return Err(EquivalenceError::Verification("U P V differs from Q".into()));
    }
    if !u.is_invertible() || !v.is_invertible() {
        return Err(EquivalenceError::Verification("U or V is not invertible".into()));
    }
    Ok((u, v))
}
