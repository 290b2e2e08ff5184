//! Permutations, sparse 0-1 matrices and monomial matrices.
//!
//! A permutation matrix `A` is stored column-wise as the permutation `σ` with
//! `A e_j = e_σ(j)`, i.e. the unit of column `j` sits in row `σ(j)`. All public
//! indices are 1-based; storage is 0-based.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A bijection on `{1..n}` in one-line form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-based images `[σ(1), ..., σ(n)]`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut map = images;
        for (j, v) in map.iter_mut().enumerate() {
            if *v == 0 || *v > n {
                return Err(Error::NotPermutation(format!(
                    "image {} of position {} is outside 1..{}",
                    v,
                    j + 1,
                    n
                )));
            }
            *v -= 1;
        }
        Self::from_zero_based(map)
    }

    /// Builds a permutation from 0-based images.
    pub fn from_zero_based(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for (j, &v) in map.iter().enumerate() {
            if v >= n {
                return Err(Error::NotPermutation(format!(
                    "image {} of position {} is outside 1..{}",
                    v + 1,
                    j + 1,
                    n
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotPermutation(format!("image {} repeats", v + 1)));
            }
        }
        Ok(Permutation { map })
    }

    pub(crate) fn from_map_unchecked(map: Vec<usize>) -> Self {
        debug_assert!(Self::from_zero_based(map.clone()).is_ok());
        Permutation { map }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            map: (0..n).collect(),
        }
    }

    /// Order of the associated matrix.
    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// `σ(j)` for 1-based `j`.
    pub fn image(&self, j: usize) -> usize {
        self.map[j - 1] + 1
    }

    /// 1-based one-line form.
    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    pub fn as_zero_based(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(j, &v)| j == v)
    }

    /// Number of points moved, i.e. zero entries on the matrix diagonal.
    pub fn moved_points(&self) -> usize {
        self.map
            .iter()
            .enumerate()
            .filter(|&(j, &v)| j != v)
            .count()
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_same(self.n(), other.n())?;
        Ok(Permutation {
            map: other.map.iter().map(|&v| self.map[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (j, &v) in self.map.iter().enumerate() {
            inv[v] = j;
        }
        Permutation { map: inv }
    }

    /// `self^m` by repeated squaring.
    pub fn pow(&self, mut m: u64) -> Permutation {
        let mut result = Permutation::identity(self.n());
        let mut base = self.clone();
        while m > 0 {
            if m & 1 == 1 {
                result = base.compose(&result).expect("same order");
            }
            m >>= 1;
            if m > 0 {
                base = base.compose(&base).expect("same order");
            }
        }
        result
    }

    /// `T⁻¹ · self · T`.
    pub fn conjugate_by(&self, t: &Permutation) -> Result<Permutation> {
        check_same(self.n(), t.n())?;
        let t_inv = t.inverse();
        Ok(Permutation {
            map: t.map.iter().map(|&v| t_inv.map[self.map[v]]).collect(),
        })
    }

    /// Every permutation of order `n`, in lexicographic order of one-line form.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..n).collect()),
        }
    }

    /// Dense 0-1 expansion, rows of columns.
    pub fn to_dense(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut m = vec![vec![0u8; n]; n];
        for (j, &i) in self.map.iter().enumerate() {
            m[i][j] = 1;
        }
        m
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.map {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

/// Iterator over all permutations of a fixed order.
#[derive(Clone, Debug)]
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // standard next-permutation step
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len())
                .rev()
                .find(|&j| succ[j] > succ[i - 1])
                .unwrap();
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation { map: current })
    }
}

fn check_same(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    a.compose(b)
}

pub fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

pub fn power(p: &Permutation, m: u64) -> Permutation {
    p.pow(m)
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                row: i + 1,
                found: row.len(),
                expected: n,
            });
        }
    }
    Ok(n)
}

/// Reads a dense 0-1 matrix (given as rows) as a permutation.
pub fn perm_from_matrix(m: &[Vec<i64>]) -> Result<Permutation> {
    let n = check_square(m)?;
    let mut col_row: Vec<Option<usize>> = vec![None; n];
    let mut row_used = vec![false; n];
    for (i, row) in m.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            match x {
                0 => {}
                1 => {
                    if col_row[j].is_some() {
                        return Err(Error::NotPermutation(format!(
                            "column {} has more than one unit",
                            j + 1
                        )));
                    }
                    if row_used[i] {
                        return Err(Error::NotPermutation(format!(
                            "row {} has more than one unit",
                            i + 1
                        )));
                    }
                    col_row[j] = Some(i);
                    row_used[i] = true;
                }
                _ => {
                    return Err(Error::BadEntry {
                        row: i + 1,
                        col: j + 1,
                    })
                }
            }
        }
    }
    let map = col_row
        .into_iter()
        .enumerate()
        .map(|(j, r)| {
            r.ok_or_else(|| Error::NotPermutation(format!("column {} has no unit", j + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Permutation::from_map_unchecked(map))
}

pub fn matrix_from_perm(p: &Permutation) -> SparseBinaryMatrix {
    SparseBinaryMatrix {
        col_row: p.map.iter().map(|&i| Some(i)).collect(),
    }
}

/// A 0-1 matrix with at most one unit per row and per column, stored as the
/// row of each column's unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseBinaryMatrix {
    col_row: Vec<Option<usize>>,
}

impl SparseBinaryMatrix {
    /// Builds a matrix of order `n` from 1-based `(row, col)` entries.
    pub fn new(n: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut col_row = vec![None; n];
        let mut row_used = vec![false; n];
        for (r, c) in entries {
            if r == 0 || c == 0 || r > n || c > n {
                return Err(Error::InvalidSparse(format!(
                    "entry ({r}, {c}) outside order {n}"
                )));
            }
            if col_row[c - 1].is_some() || row_used[r - 1] {
                return Err(Error::InvalidSparse(format!(
                    "entry ({r}, {c}) shares a row or column with another entry"
                )));
            }
            col_row[c - 1] = Some(r - 1);
            row_used[r - 1] = true;
        }
        Ok(SparseBinaryMatrix { col_row })
    }

    pub fn zero(n: usize) -> Self {
        SparseBinaryMatrix {
            col_row: vec![None; n],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseBinaryMatrix {
            col_row: (0..n).map(Some).collect(),
        }
    }

    /// Diagonal matrix with units at the given 1-based positions.
    pub fn diagonal(n: usize, support: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(n, support.into_iter().map(|i| (i, i)))
    }

    pub(crate) fn from_col_rows(col_row: Vec<Option<usize>>) -> Self {
        SparseBinaryMatrix { col_row }
    }

    pub fn n(&self) -> usize {
        self.col_row.len()
    }

    /// 1-based `(row, col)` pairs, ordered by column.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        self.col_row
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (r + 1, c + 1)))
            .collect()
    }

    /// 1-based row of the unit in column `col`, if any.
    pub fn row_of(&self, col: usize) -> Option<usize> {
        self.col_row[col - 1].map(|r| r + 1)
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.row_of(col) == Some(row)
    }

    /// Number of unit entries.
    pub fn nnz(&self) -> usize {
        self.col_row.iter().filter(|r| r.is_some()).count()
    }

    /// Units sit in distinct rows and columns, so the rank is the entry count.
    pub fn rank(&self) -> usize {
        self.nnz()
    }

    pub fn is_zero(&self) -> bool {
        self.col_row.iter().all(Option::is_none)
    }

    pub fn is_diagonal(&self) -> bool {
        self.col_row
            .iter()
            .enumerate()
            .all(|(c, r)| r.is_none_or(|r| r == c))
    }

    pub fn transpose(&self) -> Self {
        let mut col_row = vec![None; self.n()];
        for (c, r) in self.col_row.iter().enumerate() {
            if let Some(r) = *r {
                col_row[r] = Some(c);
            }
        }
        SparseBinaryMatrix { col_row }
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SparseBinaryMatrix) -> Result<SparseBinaryMatrix> {
        check_same(self.n(), other.n())?;
        Ok(SparseBinaryMatrix {
            col_row: other
                .col_row
                .iter()
                .map(|r| r.and_then(|r| self.col_row[r]))
                .collect(),
        })
    }

    /// `self^k` by repeated squaring on the entry set.
    pub fn pow(&self, mut k: u64) -> SparseBinaryMatrix {
        let mut result = SparseBinaryMatrix::identity(self.n());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = base.mul(&result).expect("same order");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        result
    }

    /// No position is shared by both matrices.
    pub fn is_disjoint(&self, other: &SparseBinaryMatrix) -> bool {
        self.n() == other.n()
            && self
                .col_row
                .iter()
                .zip(&other.col_row)
                .all(|(a, b)| a.is_none() || b.is_none() || a != b)
    }

    /// Entrywise sum as a 0-1 matrix. Fails when the sum is not a 0-1 matrix
    /// with at most one unit per row and column.
    pub fn add(&self, other: &SparseBinaryMatrix) -> Result<SparseBinaryMatrix> {
        check_same(self.n(), other.n())?;
        Self::new(self.n(), self.entries().into_iter().chain(other.entries()))
    }

    /// The permutation this matrix encodes, when it is a full permutation matrix.
    pub fn to_permutation(&self) -> Option<Permutation> {
        let map = self.col_row.iter().copied().collect::<Option<Vec<_>>>()?;
        Some(Permutation::from_map_unchecked(map))
    }
}

/// A permutation matrix whose units are replaced by nonzero exact weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMatrix {
    perm: Permutation,
    col_weights: Vec<Scalar>,
}

impl MonomialMatrix {
    /// `col_weights[j]` is the nonzero value in column `j + 1`, which sits in
    /// row `perm.image(j + 1)`.
    pub fn new(perm: Permutation, col_weights: Vec<Scalar>) -> Result<Self> {
        if perm.n() != col_weights.len() {
            return Err(Error::DimensionMismatch {
                left: perm.n(),
                right: col_weights.len(),
            });
        }
        if let Some(j) = col_weights.iter().position(Scalar::is_zero) {
            return Err(Error::NotMonomial(format!(
                "column {} has weight zero",
                j + 1
            )));
        }
        Ok(MonomialMatrix { perm, col_weights })
    }

    pub fn from_permutation(perm: Permutation) -> Self {
        let col_weights = vec![Scalar::one(); perm.n()];
        MonomialMatrix { perm, col_weights }
    }

    /// Invertible diagonal matrix with the given entries.
    pub fn diagonal(weights: Vec<Scalar>) -> Result<Self> {
        Self::new(Permutation::identity(weights.len()), weights)
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn col_weights(&self) -> &[Scalar] {
        &self.col_weights
    }

    /// `row_weights()[i]` is the nonzero value in row `i + 1`.
    pub fn row_weights(&self) -> Vec<Scalar> {
        let mut rows = vec![Scalar::zero(); self.n()];
        for (j, &i) in self.perm.map.iter().enumerate() {
            rows[i] = self.col_weights[j].clone();
        }
        rows
    }

    /// 1-based `(row, col)` positions of the nonzero entries, ordered by column.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        matrix_from_perm(&self.perm).entries()
    }

    /// Matrix product `self · other`, exact.
    pub fn mul(&self, other: &MonomialMatrix) -> Result<MonomialMatrix> {
        let perm = self.perm.compose(&other.perm)?;
        let col_weights = other
            .perm
            .map
            .iter()
            .zip(&other.col_weights)
            .map(|(&i, w)| w * &self.col_weights[i])
            .collect();
        Ok(MonomialMatrix { perm, col_weights })
    }

    /// `T⁻¹ · self · T`.
    pub fn conjugate_by(&self, t: &Permutation) -> Result<MonomialMatrix> {
        let perm = self.perm.conjugate_by(t)?;
        let col_weights = t.map.iter().map(|&c| self.col_weights[c].clone()).collect();
        Ok(MonomialMatrix { perm, col_weights })
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let n = self.n();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (j, &i) in self.perm.map.iter().enumerate() {
            m[i][j] = self.col_weights[j].clone();
        }
        m
    }
}

/// Reads a dense scalar matrix (given as rows) as a monomial matrix.
pub fn monomial_from_matrix(m: &[Vec<Scalar>]) -> Result<MonomialMatrix> {
    let n = check_square(m)?;
    let mut col_entry: Vec<Option<(usize, Scalar)>> = vec![None; n];
    let mut row_used = vec![false; n];
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if col_entry[j].is_some() {
                return Err(Error::NotMonomial(format!(
                    "column {} has more than one nonzero entry",
                    j + 1
                )));
            }
            if row_used[i] {
                return Err(Error::NotMonomial(format!(
                    "row {} has more than one nonzero entry",
                    i + 1
                )));
            }
            col_entry[j] = Some((i, x.clone()));
            row_used[i] = true;
        }
    }
    if let Some(i) = row_used.iter().position(|used| !used) {
        return Err(Error::NotMonomial(format!("row {} is zero", i + 1)));
    }
    let mut map = Vec::with_capacity(n);
    let mut col_weights = Vec::with_capacity(n);
    for (j, e) in col_entry.into_iter().enumerate() {
        let (i, w) = e.ok_or_else(|| Error::NotMonomial(format!("column {} is zero", j + 1)))?;
        map.push(i);
        col_weights.push(w);
    }
    Ok(MonomialMatrix {
        perm: Permutation::from_map_unchecked(map),
        col_weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn dense(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    fn p1_dense() -> Vec<Vec<i64>> {
        dense(&[
            &[0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 1, 0, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 1, 0, 0, 0],
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
        ])
    }

    #[test]
    fn new_rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
    }

    #[test]
    fn perm_from_matrix_examples() {
        let id = dense(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(perm_from_matrix(&id).unwrap(), p(&[1, 2, 3]));
        assert_eq!(
            perm_from_matrix(&p1_dense()).unwrap(),
            p(&[5, 3, 4, 2, 1, 6])
        );
        assert!(matches!(
            perm_from_matrix(&dense(&[&[1, 1], &[0, 0]])),
            Err(Error::NotPermutation(_))
        ));
        assert!(matches!(
            perm_from_matrix(&dense(&[&[1, 0], &[0]])),
            Err(Error::NotSquare { row: 2, .. })
        ));
        assert_eq!(
            perm_from_matrix(&dense(&[&[2, 0], &[0, 1]])),
            Err(Error::BadEntry { row: 1, col: 1 })
        );
        assert!(matches!(
            perm_from_matrix(&dense(&[&[0, 0], &[1, 1]])),
            Err(Error::NotPermutation(_))
        ));
    }

    #[test]
    fn matrix_from_perm_examples() {
        assert_eq!(
            matrix_from_perm(&p(&[1, 2, 3])).entries(),
            vec![(1, 1), (2, 2), (3, 3)]
        );
        assert_eq!(
            matrix_from_perm(&p(&[5, 3, 4, 2, 1, 6])).entries(),
            vec![(5, 1), (3, 2), (4, 3), (2, 4), (1, 5), (6, 6)]
        );
        assert_eq!(
            matrix_from_perm(&p(&[2, 1])).entries(),
            vec![(2, 1), (1, 2)]
        );
        assert_eq!(
            p(&[5, 3, 4, 2, 1, 6]).to_dense(),
            p1_dense()
                .iter()
                .map(|r| r.iter().map(|&x| x as u8).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn compose_examples() {
        let s = p(&[5, 3, 4, 2, 1, 6]);
        assert_eq!(compose(&s, &Permutation::identity(6)).unwrap(), s);
        assert_eq!(
            compose(&p(&[5, 2, 3, 4, 1, 6]), &p(&[1, 3, 4, 2, 5, 6])).unwrap(),
            s
        );
        assert_eq!(compose(&p(&[2, 1]), &p(&[2, 1])).unwrap(), p(&[1, 2]));
        assert_eq!(
            compose(&p(&[2, 1]), &p(&[1, 2, 3])),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn compose_matches_dense_product() {
        let a = p(&[5, 2, 3, 4, 1, 6]);
        let b = p(&[1, 3, 4, 2, 5, 6]);
        let (da, db) = (a.to_dense(), b.to_dense());
        let n = 6;
        let mut prod = vec![vec![0u8; n]; n];
        for i in 0..n {
            for j in 0..n {
                prod[i][j] = (0..n).map(|k| da[i][k] * db[k][j]).sum();
            }
        }
        assert_eq!(compose(&a, &b).unwrap().to_dense(), prod);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(inverse(&p(&[1, 2, 3])), p(&[1, 2, 3]));
        let t1 = p(&[6, 1, 5, 2, 3, 4]);
        assert_eq!(inverse(&t1), p(&[2, 4, 5, 6, 3, 1]));
        assert_eq!(
            matrix_from_perm(&inverse(&t1)),
            matrix_from_perm(&t1).transpose()
        );
        assert_eq!(inverse(&p(&[2, 1])), p(&[2, 1]));
    }

    #[test]
    fn power_examples() {
        let s = p(&[5, 3, 4, 2, 1, 6]);
        assert!(power(&s, 0).is_identity());
        assert_eq!(power(&p(&[2, 3, 1]), 3), p(&[1, 2, 3]));
        assert!(power(&s, 6).is_identity());
        let mut acc = Permutation::identity(6);
        for m in 0..13u64 {
            assert_eq!(power(&s, m), acc);
            acc = s.compose(&acc).unwrap();
        }
    }

    #[test]
    fn all_permutations_counts() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(1).count(), 1);
        assert_eq!(Permutation::all(4).count(), 24);
        let v: Vec<_> = Permutation::all(3).map(|p| p.images()).collect();
        assert_eq!(v[0], vec![1, 2, 3]);
        assert_eq!(v[5], vec![3, 2, 1]);
    }

    #[test]
    fn round_trip_exhaustive_small() {
        for n in 0..=6 {
            for q in Permutation::all(n) {
                let dense: Vec<Vec<i64>> = q
                    .to_dense()
                    .into_iter()
                    .map(|r| r.into_iter().map(i64::from).collect())
                    .collect();
                assert_eq!(perm_from_matrix(&dense).unwrap(), q);
                let m = matrix_from_perm(&q);
                assert_eq!(m.to_permutation().unwrap(), q);
            }
        }
    }

    #[test]
    fn sparse_validation_and_ops() {
        assert!(SparseBinaryMatrix::new(2, [(1, 1), (1, 2)]).is_err());
        assert!(SparseBinaryMatrix::new(2, [(3, 1)]).is_err());
        assert!(SparseBinaryMatrix::new(2, [(1, 1), (1, 1)]).is_err());
        let q = SparseBinaryMatrix::new(6, [(3, 2), (4, 3), (2, 4)]).unwrap();
        assert_eq!(q.rank(), 3);
        assert!(!q.is_diagonal());
        let cube = q.pow(3);
        assert!(cube.is_diagonal());
        assert_eq!(cube.entries(), vec![(2, 2), (3, 3), (4, 4)]);
        assert!(q.pow(0).is_diagonal());
        let d = SparseBinaryMatrix::diagonal(6, [6]).unwrap();
        assert!(q.mul(&d).unwrap().is_zero());
        assert!(q.is_disjoint(&d));
        assert_eq!(q.add(&d).unwrap().nnz(), 4);
        assert!(q.add(&q).is_err());
    }

    #[test]
    fn monomial_from_matrix_examples() {
        let s = |v: i64| Scalar::from_integer(v);
        let diag = vec![vec![s(2), s(0)], vec![s(0), s(3)]];
        let m = monomial_from_matrix(&diag).unwrap();
        assert_eq!(m.perm(), &p(&[1, 2]));
        assert_eq!(m.col_weights(), &[s(2), s(3)]);
        assert_eq!(m.to_dense(), diag);

        let anti = vec![vec![s(0), s(3)], vec![s(2), s(0)]];
        let m = monomial_from_matrix(&anti).unwrap();
        assert_eq!(m.perm(), &p(&[2, 1]));
        assert_eq!(m.col_weights(), &[s(2), s(3)]);
        assert_eq!(m.row_weights(), vec![s(3), s(2)]);
        assert_eq!(m.to_dense(), anti);

        let bad = vec![vec![s(1), s(1)], vec![s(1), s(0)]];
        assert!(matches!(
            monomial_from_matrix(&bad),
            Err(Error::NotMonomial(_))
        ));
        let zero_row = vec![vec![s(0), s(0)], vec![s(1), s(0)]];
        assert!(matches!(
            monomial_from_matrix(&zero_row),
            Err(Error::NotMonomial(_))
        ));
        assert!(MonomialMatrix::new(p(&[1]), vec![s(0)]).is_err());
    }
}
