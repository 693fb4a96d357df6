//! Seeded random elements and matrices for property checks and benchmarks.

use num_bigint::BigInt;
use rand::Rng;

use crate::matrix::Matrix;
use crate::ring::{Monomial, MultiPoly, Ring, RingElement};

/// Small-magnitude random element of `ring`. Polynomials get at most three
/// terms of degree ≤ 2; fraction denominators are a constant times at most
/// one variable, which keeps multivariate sums small.
pub fn element<R: Rng + ?Sized>(rng: &mut R, ring: &Ring) -> RingElement {
    match ring {
        Ring::Integers => ring.from_i64(rng.gen_range(-5..=5)),
        Ring::Modular(m) => {
            let bound = u64::try_from(m.as_ref()).unwrap_or(u64::MAX);
            ring.from_bigint(BigInt::from(rng.gen_range(0..bound)))
        }
        Ring::Polynomial(vars) => {
            let nterms = rng.gen_range(0..=3);
            let terms = (0..nterms).map(|_| {
                let mut powers = Vec::new();
                if !vars.is_empty() {
                    for _ in 0..rng.gen_range(0..=2) {
                        powers.push((rng.gen_range(0..vars.len()), 1));
                    }
                }
                (Monomial::from_powers(powers), BigInt::from(rng.gen_range(-3..=3)))
            });
            RingElement::Poly(MultiPoly::from_terms(terms.collect::<Vec<_>>(), vars.clone()))
        }
        Ring::Fraction(base) => {
            let numer = element(rng, base);
            let mut denom = base.from_i64(rng.gen_range(1..=3));
            if rng.gen_bool(0.5) {
                if let Some(v) = base.variables().filter(|v| !v.is_empty()).map(|v| rng.gen_range(0..v.len())) {
                    denom = &denom * &base.var(v).expect("index in range");
                }
            }
            if rng.gen_bool(0.3) {
                denom = -denom;
            }
            let f = crate::ring::Fraction::new(numer, denom).expect("nonzero denominator");
            RingElement::Frac(f)
        }
    }
}

pub fn matrix<R: Rng + ?Sized>(rng: &mut R, ring: &Ring, n: usize) -> Matrix {
    Matrix::from_fn(n, ring, |_, _| element(rng, ring))
}

/// Integer matrix with entries in `[-bound, bound]`.
pub fn integer_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Matrix {
    let z = Ring::Integers;
    Matrix::from_fn(n, &z, |_, _| z.from_i64(rng.gen_range(-bound..=bound)))
}

/// Random matrix with unit determinant over ℤ/p (rejection sampling).
pub fn invertible_matrix<R: Rng + ?Sized>(rng: &mut R, ring: &Ring, n: usize) -> Matrix {
    loop {
        let m = matrix(rng, ring, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// Product of random elementary integer matrices; determinant ±1.
pub fn unimodular_integer_matrix<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    let z = Ring::Integers;
    let mut m = Matrix::identity(n, &z);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        let mut e = Matrix::identity(n, &z);
        if i == j {
            if rng.gen_bool(0.5) {
                e.set(i, i, z.from_i64(-1));
            }
        } else {
            e.set(i, j, z.from_i64(rng.gen_range(-2..=2)));
        }
        m = &m * &e;
    }
    m
}

/// The ring contexts exercised by the randomized checks: ℤ, ℤ/6, ℤ/7, ℤ[x].
pub fn standard_rings() -> Vec<Ring> {
    vec![
        Ring::Integers,
        Ring::modular(6).expect("valid modulus"),
        Ring::modular(7).expect("valid modulus"),
        Ring::polynomial(["x"]),
    ]
}
