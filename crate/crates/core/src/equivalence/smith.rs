use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::matrix::Matrix;
use crate::ring::{Ring, RingElement};

use super::EquivalenceError;

/// `left · M · right = diagonal`, with `det left, det right = ±1` and the
/// diagonal non-negative and divisibility-ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Matrix,
    pub left: Matrix,
    pub right: Matrix,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.diagonal.n())
            .map(|i| self.diagonal.get(i, i).as_integer().expect("integer matrix").clone())
            .collect()
    }
}

type Grid = Vec<Vec<BigInt>>;

fn to_grid(m: &Matrix) -> Grid {
    m.rows()
        .map(|r| r.iter().map(|e| e.as_integer().expect("integer matrix").clone()).collect())
        .collect()
}

fn identity_grid(n: usize) -> Grid {
    (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(u8::from(i == j))).collect())
        .collect()
}

fn from_grid(g: &Grid) -> Matrix {
    let z = Ring::Integers;
    Matrix::from_fn(g.len(), &z, |i, j| RingElement::Int(g[i][j].clone()))
}

/// row_dst += k · row_src
fn add_row(g: &mut Grid, dst: usize, src: usize, k: &BigInt) {
    if k.is_zero() {
        return;
    }
    let src_row = g[src].clone();
    for (d, s) in g[dst].iter_mut().zip(src_row) {
        *d += k * s;
    }
}

fn add_col(g: &mut Grid, dst: usize, src: usize, k: &BigInt) {
    if k.is_zero() {
        return;
    }
    for row in g.iter_mut() {
        let s = row[src].clone();
        row[dst] += k * s;
    }
}

fn swap_cols(g: &mut Grid, a: usize, b: usize) {
    for row in g.iter_mut() {
        row.swap(a, b);
    }
}

/// Smith normal form over ℤ. Pivot: smallest nonzero absolute value in the
/// remaining block, ties broken by lowest (row, column).
pub fn smith_normal_form(m: &Matrix) -> Result<SmithForm, EquivalenceError> {
    if !m.ring().is_integers() {
        return Err(EquivalenceError::NotIntegral(m.ring().to_string()));
    }
    let n = m.n();
    let mut d = to_grid(m);
    let mut u = identity_grid(n);
    let mut v = identity_grid(n);
    for t in 0..n {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if d[i][j].is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if d[pi][pj].abs() <= d[i][j].abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break;
            };
            d.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..n {
                let q = -(&d[i][t] / &d[t][t]);
                add_row(&mut d, i, t, &q);
                add_row(&mut u, i, t, &q);
                clean &= d[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = -(&d[t][j] / &d[t][t]);
                add_col(&mut d, j, t, &q);
                add_col(&mut v, j, t, &q);
                clean &= d[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // enforce divisibility of the rest by the pivot
            let bad = (t + 1..n).find(|&i| (t + 1..n).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
            match bad {
                Some(i) => {
                    let one = BigInt::from(1);
                    add_row(&mut d, t, i, &one);
                    add_row(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    Ok(SmithForm {
        diagonal: from_grid(&d),
        left: from_grid(&u),
        right: from_grid(&v),
    })
}
