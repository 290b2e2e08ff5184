//! Reference oracles for the acceptance checks. They are written
//! independently of the library algorithms they are compared with.

use num_bigint::BigUint;
use permclass::{Permutation, Scalar};

/// `p(0..=limit)` by the coin-change recurrence over part sizes.
pub fn dp_partitions(limit: usize) -> Vec<BigUint> {
    let mut p = vec![BigUint::from(0u32); limit + 1];
    p[0] = BigUint::from(1u32);
    for part in 1..=limit {
        for m in part..=limit {
            let add = p[m - part].clone();
            p[m] += add;
        }
    }
    p
}

pub type Dense = Vec<Vec<Scalar>>;

/// Dense product that skips zero entries; independent of the monomial code.
pub fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let nonzero = |m: &Dense| -> Vec<Vec<usize>> {
        m.iter()
            .map(|row| (0..n).filter(|&j| !row[j].is_zero()).collect())
            .collect()
    };
    let (na, nb) = (nonzero(a), nonzero(b));
    let mut out = vec![vec![Scalar::zero(); n]; n];
    for i in 0..n {
        for &k in &na[i] {
            for &j in &nb[k] {
                let term = a[i][k].as_rational() * b[k][j].as_rational();
                out[i][j] = Scalar::from(out[i][j].as_rational() + term);
            }
        }
    }
    out
}

pub fn dense_diag(w: &[Scalar]) -> Dense {
    let n = w.len();
    let mut d = vec![vec![Scalar::zero(); n]; n];
    for (i, x) in w.iter().enumerate() {
        d[i][i] = x.clone();
    }
    d
}

pub fn dense_perm(p: &Permutation) -> Dense {
    p.to_dense()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| Scalar::from_integer(i64::from(x)))
                .collect()
        })
        .collect()
}
