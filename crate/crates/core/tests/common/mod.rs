#![allow(dead_code)]

use detring::matrix::Matrix;
use detring::ring::{Ring, RingElement};
use proptest::prelude::*;

pub fn rings() -> Vec<Ring> {
    vec![
        Ring::Integers,
        Ring::modular(6).unwrap(),
        Ring::modular(7).unwrap(),
        Ring::polynomial(["x"]),
        Ring::fraction_of(Ring::polynomial(["x"])).unwrap(),
    ]
}

fn poly_from(ring: &Ring, coeffs: &[i64]) -> RingElement {
    let x = ring.var(0).unwrap();
    coeffs.iter().rev().fold(ring.zero(), |acc, &c| &(&acc * &x) + &ring.from_i64(c))
}

pub fn element(ring: &Ring) -> BoxedStrategy<RingElement> {
    let r = ring.clone();
    match ring {
        Ring::Integers => (-20i64..=20).prop_map(move |k| r.from_i64(k)).boxed(),
        Ring::Modular(m) => {
            let m = i64::try_from(m.as_ref()).unwrap();
            (0..m).prop_map(move |k| r.from_i64(k)).boxed()
        }
        Ring::Polynomial(_) => prop::collection::vec(-3i64..=3, 0..=3)
            .prop_map(move |c| poly_from(&r, &c))
            .boxed(),
        Ring::Fraction(base) => {
            let base = (**base).clone();
            let denominators: [&[i64]; 6] = [&[1], &[2], &[-1], &[0, 1], &[1, 1], &[-1, 2]];
            (prop::collection::vec(-3i64..=3, 0..=3), 0..denominators.len())
                .prop_map(move |(c, d)| {
                    let num = poly_from(&base, &c).embed_into(&r).unwrap();
                    let den = poly_from(&base, denominators[d]).embed_into(&r).unwrap();
                    &num * &den.inverse().unwrap()
                })
                .boxed()
        }
    }
}

pub fn matrix(ring: &Ring, n: usize) -> BoxedStrategy<Matrix> {
    let r = ring.clone();
    prop::collection::vec(element(ring), n * n)
        .prop_map(move |es| Matrix::from_fn(n, &r, |i, j| es[i * n + j].clone()))
        .boxed()
}

/// A ring from [`rings`] (without the fraction field unless `with_frac`),
/// a dimension in `1..=max_n`, and `k` matrices over it.
pub fn matrices(k: usize, max_n: usize, with_frac: bool) -> BoxedStrategy<(Ring, Vec<Matrix>)> {
    let count: usize = if with_frac { 5 } else { 4 };
    (0..count, 1..=max_n)
        .prop_flat_map(move |(ri, n)| {
            let ring = rings()[ri].clone();
            let ms = prop::collection::vec(matrix(&ring, n), k);
            (Just(ring), ms)
        })
        .boxed()
}

pub fn int_matrix(n: usize, bound: i64) -> BoxedStrategy<Matrix> {
    prop::collection::vec(-bound..=bound, n * n)
        .prop_map(move |es| Matrix::from_fn(n, &Ring::Integers, |i, j| Ring::Integers.from_i64(es[i * n + j])))
        .boxed()
}
