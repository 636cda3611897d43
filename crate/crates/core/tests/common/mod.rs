#![allow(dead_code)]

use proptest::prelude::*;
use relpoisson::linear::{int, ratio, Matrix, Scalar};

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
}

pub fn small_int() -> impl Strategy<Value = Scalar> {
    (-3i64..=3).prop_map(int)
}

pub fn vector(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(scalar(), n)
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(small_int(), rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| v[i * cols + j].clone()))
}

/// Product of unipotent upper and lower triangular matrices, so always
/// invertible with integer entries.
pub fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    (matrix(n, n), matrix(n, n)).prop_map(move |(u, l)| {
        let upper = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => u[(i, j)].clone(),
            std::cmp::Ordering::Equal => int(1),
            _ => int(0),
        });
        let lower = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Greater => l[(i, j)].clone(),
            std::cmp::Ordering::Equal => int(1),
            _ => int(0),
        });
        upper.mul(&lower)
    })
}

/// Random linear combination of the given matrices with small integer weights.
pub fn combination(mats: Vec<Matrix>, n: usize) -> impl Strategy<Value = Matrix> {
    let k = mats.len();
    prop::collection::vec(small_int(), k).prop_map(move |w| {
        mats.iter().zip(&w).fold(Matrix::zeros(n, n), |acc, (m, c)| acc.add(&m.scale(c)))
    })
}

use relpoisson::algebra::RelPoissonAlgebra;

/// The same structure written in the basis given by the columns of `g`.
pub fn transport(a: &RelPoissonAlgebra, g: &Matrix) -> RelPoissonAlgebra {
    let gi = g.inverse().unwrap();
    RelPoissonAlgebra::new(
        a.dot().transported(g).unwrap(),
        a.bracket().transported(g).unwrap(),
        gi.mul(a.p()).mul(g),
    )
    .unwrap()
}
