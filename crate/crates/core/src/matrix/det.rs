//! Interchangeable determinant strategies, registered by name.

use crate::ring::{Ring, RingElement};

use super::{Matrix, MatrixError};

pub trait DeterminantAlgorithm: Sync {
    fn name(&self) -> &'static str;

    fn supports(&self, _ring: &Ring) -> bool {
        true
    }

    fn determinant(&self, m: &Matrix) -> Result<RingElement, MatrixError>;
}

/// Laplace expansion, memoised over column subsets (O(n·2ⁿ) products).
pub struct Cofactor;

/// Division-free characteristic polynomial; works over every commutative ring.
pub struct Berkowitz;

/// Fraction-free elimination; needs exact division, so integral domains only.
pub struct Bareiss;

static REGISTRY: [&dyn DeterminantAlgorithm; 3] = [&Cofactor, &Berkowitz, &Bareiss];

pub fn algorithms() -> &'static [&'static dyn DeterminantAlgorithm] {
    &REGISTRY
}

pub fn algorithm(name: &str) -> Option<&'static dyn DeterminantAlgorithm> {
    REGISTRY.iter().copied().find(|a| a.name() == name)
}

pub fn det_cofactor(m: &Matrix) -> RingElement {
    cofactor(m)
}

pub fn det_berkowitz(m: &Matrix) -> RingElement {
    let c = charpoly(m);
    let c0 = c.coefficients()[0].clone();
    if m.n() % 2 == 0 {
        c0
    } else {
        -c0
    }
}

pub fn det_bareiss(m: &Matrix) -> Result<RingElement, MatrixError> {
    Bareiss.determinant(m)
}

impl DeterminantAlgorithm for Cofactor {
    fn name(&self) -> &'static str {
        "cofactor"
    }

    fn determinant(&self, m: &Matrix) -> Result<RingElement, MatrixError> {
        Ok(cofactor(m))
    }
}

impl DeterminantAlgorithm for Berkowitz {
    fn name(&self) -> &'static str {
        "berkowitz"
    }

    fn determinant(&self, m: &Matrix) -> Result<RingElement, MatrixError> {
        Ok(det_berkowitz(m))
    }
}

impl DeterminantAlgorithm for Bareiss {
    fn name(&self) -> &'static str {
        "bareiss"
    }

    fn supports(&self, ring: &Ring) -> bool {
        ring.is_integral_domain()
    }

    fn determinant(&self, m: &Matrix) -> Result<RingElement, MatrixError> {
        if !self.supports(m.ring()) {
            return Err(MatrixError::Unsupported {
                algorithm: self.name(),
                ring: m.ring().to_string(),
            });
        }
        bareiss(m)
    }
}

fn cofactor(m: &Matrix) -> RingElement {
    let n = m.n();
    assert!(n < usize::BITS as usize, "cofactor expansion limited to small matrices");
    // minors[mask] = det of rows 0..|mask| restricted to the columns in mask
    let mut minors: Vec<Option<RingElement>> = vec![None; 1 << n];
    minors[0] = Some(m.ring().one());
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for mask in 1usize..(1 << n) {
        by_size[mask.count_ones() as usize].push(mask);
    }
    for (k, masks) in by_size.iter().enumerate().skip(1) {
        let row = k - 1;
        for &mask in masks {
            let mut acc: Option<RingElement> = None;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let entry = m.get(row, j);
                if entry.is_zero() {
                    continue;
                }
                let rest = minors[mask & !(1 << j)].as_ref().expect("smaller minors computed first");
                if rest.is_zero() {
                    continue;
                }
                let term = entry * rest;
                let above = (mask >> (j + 1)).count_ones();
                acc = Some(match acc {
                    None if above % 2 == 0 => term,
                    None => -term,
                    Some(s) if above % 2 == 0 => &s + &term,
                    Some(s) => &s - &term,
                });
            }
            minors[mask] = Some(acc.unwrap_or_else(|| m.ring().zero()));
        }
        // minors two sizes down are no longer needed
        if k >= 2 {
            for &mask in &by_size[k - 2] {
                if mask != 0 {
                    minors[mask] = None;
                }
            }
        }
    }
    minors[(1 << n) - 1].take().expect("full minor")
}

fn bareiss(m: &Matrix) -> Result<RingElement, MatrixError> {
    let n = m.n();
    let mut a: Vec<Vec<RingElement>> = m.rows().map(<[_]>::to_vec).collect();
    let mut negate = false;
    let mut prev = m.ring().one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(m.ring().zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Coefficients `c_0..c_n` of `det(t·I − M)`, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    coefficients: Vec<RingElement>,
}

impl CharPoly {
    pub fn coefficients(&self) -> &[RingElement] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }
}

impl std::fmt::Display for CharPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 if c.is_one() => f.write_str("t")?,
                1 => write!(f, "({c})*t")?,
                _ if c.is_one() => write!(f, "t^{k}")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Berkowitz: grow the leading principal submatrix one row/column at a time,
/// multiplying by a Toeplitz matrix built from `a_rr`, `R·C`, `R·A·C`, ...
pub fn charpoly(m: &Matrix) -> CharPoly {
    let n = m.n();
    let ring = m.ring();
    // descending coefficients of the charpoly of the current leading block
    let mut p: Vec<RingElement> = vec![ring.one()];
    for r in 0..n {
        let mut q: Vec<RingElement> = Vec::with_capacity(r + 2);
        q.push(ring.one());
        q.push(-m.get(r, r));
        // v = A_r^k · C for k = 0.., where C is column r above the diagonal
        let mut v: Vec<RingElement> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for k in 0..r {
            let rc = (0..r).fold(ring.zero(), |acc, j| &acc + &(m.get(r, j) * &v[j]));
            q.push(-rc);
            if k + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).fold(ring.zero(), |acc, j| &acc + &(m.get(i, j) * &v[j])))
                    .collect();
            }
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..=r + 1 {
            let mut acc = ring.zero();
            for j in 0..=i.min(r) {
                let (qi, pj) = (&q[i - j], &p[j]);
                if !qi.is_zero() && !pj.is_zero() {
                    acc = &acc + &(qi * pj);
                }
            }
            next.push(acc);
        }
        p = next;
    }
    p.reverse();
    CharPoly { coefficients: p }
}
