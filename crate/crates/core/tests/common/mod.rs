#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::Zero;
use permclass::{Permutation, Scalar, SparseBinaryMatrix};
use proptest::prelude::*;

pub type Dense = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Dense {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn from_sparse(m: &SparseBinaryMatrix) -> Dense {
    let mut d = vec![vec![0; m.n()]; m.n()];
    for (r, c) in m.entries() {
        d[r - 1][c - 1] = 1;
    }
    d
}

pub fn from_perm(p: &Permutation) -> Dense {
    p.to_dense()
        .into_iter()
        .map(|r| r.into_iter().map(i64::from).collect())
        .collect()
}

pub fn mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn add(a: &Dense, b: &Dense) -> Dense {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect())
        .collect()
}

pub fn is_zero(a: &Dense) -> bool {
    a.iter().flatten().all(|&x| x == 0)
}

/// Dense rational product, independent of the monomial arithmetic.
pub fn mul_rational(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = BigRational::zero();
                    for k in 0..n {
                        acc += a[i][k].as_rational() * b[k][j].as_rational();
                    }
                    Scalar::from(acc)
                })
                .collect()
        })
        .collect()
}

pub fn dense_diag(w: &[Scalar]) -> Vec<Vec<Scalar>> {
    let n = w.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { w[i].clone() } else { Scalar::zero() })
                .collect()
        })
        .collect()
}

pub fn dense_perm_rational(p: &Permutation) -> Vec<Vec<Scalar>> {
    p.to_dense()
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| Scalar::from_integer(i64::from(x)))
                .collect()
        })
        .collect()
}

pub fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n).prop_flat_map(perm_of)
}

pub fn perm_of(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    (prop_oneof![-60i64..=-1, 1i64..=60], 1i64..=24).prop_map(|(a, b)| Scalar::ratio(a, b))
}
