//! Additive and multiplicative splitting of a permutation matrix into
//! generalized cycle matrices.
//!
//! For a permutation matrix `A` with nontrivial orbits `F_1..F_r` and `t` fixed
//! points:
//!
//! * `A = Q_1 + ... + Q_r + D_t`, where `Q_i` keeps the columns of `A` indexed
//!   by `F_i` (a Type II generalized cycle matrix) and `D_t` is the diagonal on
//!   the fixed points;
//! * `A = P_1 P_2 ... P_r` with `P_i = Q_i + (I - J_i)`, `J_i` the diagonal
//!   projector onto `F_i`. The `P_i` are Type I generalized cycle matrices and
//!   commute pairwise.
//!
//! Summands and factors are ordered by ascending (orbit size, minimal
//! element), the same order as the canonical form. The identity yields `r = 0`.

use crate::cycle_structure::{canonical_orbit_order, orbit_partition};
use crate::error::{Error, Result};
use crate::perm::{matrix_from_perm, Permutation, SparseBinaryMatrix};

/// Diagonal 0-1 matrix with units exactly on `support`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportProjector {
    mask: Vec<bool>,
}

impl SupportProjector {
    /// `support` is 1-based; out-of-range indices are rejected.
    pub fn new(n: usize, support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![false; n];
        for i in support {
            if i == 0 || i > n {
                return Err(Error::OutOfRange {
                    what: "projector support",
                    detail: format!("index {i} outside 1..{n}"),
                });
            }
            mask[i - 1] = true;
        }
        Ok(SupportProjector { mask })
    }

    pub fn n(&self) -> usize {
        self.mask.len()
    }

    pub fn support(&self) -> Vec<usize> {
        self.mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i + 1))
            .collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask[i - 1]
    }

    /// `I - self`.
    pub fn complement(&self) -> Self {
        SupportProjector {
            mask: self.mask.iter().map(|m| !m).collect(),
        }
    }

    pub fn to_matrix(&self) -> SparseBinaryMatrix {
        SparseBinaryMatrix::from_col_rows(
            self.mask
                .iter()
                .enumerate()
                .map(|(i, &m)| m.then_some(i))
                .collect(),
        )
    }
}

/// `A = Q_1 + ... + Q_r + D_t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandDecomposition {
    pub n: usize,
    pub summands: Vec<SparseBinaryMatrix>,
    pub fixed_diagonal: SparseBinaryMatrix,
    pub orders: Vec<usize>,
}

impl SummandDecomposition {
    /// Projector `J_i` onto the support of summand `i` (0-based).
    pub fn support_projector(&self, i: usize) -> SupportProjector {
        let q = &self.summands[i];
        SupportProjector::new(self.n, q.entries().into_iter().map(|(_, c)| c))
            .expect("entries lie in range")
    }

    pub fn fixed_points(&self) -> usize {
        self.fixed_diagonal.nnz()
    }
}

/// `A = P_1 P_2 ... P_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorDecomposition {
    pub n: usize,
    pub factors: Vec<Permutation>,
    pub orders: Vec<usize>,
}

impl FactorDecomposition {
    /// Product of the factors in listed order; the identity when empty.
    pub fn product(&self) -> Permutation {
        self.factors
            .iter()
            .fold(Permutation::identity(self.n), |acc, f| {
                acc.compose(f).expect("factors share the order")
            })
    }
}

pub fn cycle_summands(p: &Permutation) -> SummandDecomposition {
    let n = p.n();
    let (fixed, cycles) = canonical_orbit_order(p);
    let summands = cycles
        .iter()
        .map(|orbit| {
            let mut col_row = vec![None; n];
            for &j in orbit {
                col_row[j - 1] = Some(p.image(j) - 1);
            }
            SparseBinaryMatrix::from_col_rows(col_row)
        })
        .collect();
    let fixed_diagonal = SparseBinaryMatrix::diagonal(n, fixed.iter().map(|o| o[0]))
        .expect("fixed points are distinct");
    SummandDecomposition {
        n,
        summands,
        fixed_diagonal,
        orders: cycles.iter().map(Vec::len).collect(),
    }
}

pub fn cycle_factors(p: &Permutation) -> FactorDecomposition {
    let summands = cycle_summands(p);
    let factors = (0..summands.summands.len())
        .map(|i| {
            let rest = summands.support_projector(i).complement().to_matrix();
            summands.summands[i]
                .add(&rest)
                .ok()
                .and_then(|m| m.to_permutation())
                .expect("Q_i + (I - J_i) is a permutation matrix")
        })
        .collect();
    FactorDecomposition {
        n: p.n(),
        factors,
        orders: summands.orders,
    }
}

fn prime_divisors(mut k: usize) -> Vec<usize> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= k {
        if k.is_multiple_of(d) {
            primes.push(d);
            while k.is_multiple_of(d) {
                k /= d;
            }
        }
        d += 1;
    }
    if k > 1 {
        primes.push(k);
    }
    primes
}

/// The literal power conditions on a permutation matrix: with `k` the number
/// of zero diagonal entries, `2 <= k`, `p^k = I` and `p^i != I` for
/// `1 <= i < k`. Returns `k` when they hold.
///
/// The set of `i` with `p^i = I` is the multiples of the order of `p`, so only
/// `i = k / q` for primes `q | k` need checking.
pub fn satisfies_type_i_powers(p: &Permutation) -> Option<usize> {
    let k = p.moved_points();
    if k < 2 || !p.pow(k as u64).is_identity() {
        return None;
    }
    prime_divisors(k)
        .into_iter()
        .all(|q| !p.pow((k / q) as u64).is_identity())
        .then_some(k)
}

/// The literal power conditions on a sparse 0-1 matrix: with `k` the entry
/// count (which is also its rank), `2 <= k`, `m^k` diagonal of rank `k` and
/// `m^i` not diagonal for `1 <= i < k`. Returns `k` when they hold.
///
/// If `m^k` keeps all `k` entries then `m` permutes its support, its powers
/// form a cyclic group, and the prime-divisor shortcut applies as for
/// permutations.
pub fn satisfies_type_ii_powers(m: &SparseBinaryMatrix) -> Option<usize> {
    let k = m.nnz();
    if k < 2 {
        return None;
    }
    let top = m.pow(k as u64);
    if !top.is_diagonal() || top.rank() != k {
        return None;
    }
    prime_divisors(k)
        .into_iter()
        .all(|q| !m.pow((k / q) as u64).is_diagonal())
        .then_some(k)
}

/// Cycle order `k` if `p` is a Type I generalized cycle matrix: a single
/// `k`-cycle (`k >= 2`) plus fixed points.
pub fn classify_type_i(p: &Permutation) -> Option<usize> {
    let partition = orbit_partition(p);
    let mut nontrivial = partition.orbits().iter().filter(|o| o.len() > 1);
    let structural = match (nontrivial.next(), nontrivial.next()) {
        (Some(orbit), None) => Some(orbit.len()),
        _ => None,
    };
    if structural.is_some() {
        assert_eq!(
            satisfies_type_i_powers(p),
            structural,
            "single cycle failed the power conditions"
        );
    }
    structural
}

/// Cycle order `k` if `m` is a Type II generalized cycle matrix: exactly `k`
/// entries (`k >= 2`) forming one `k`-cycle on a `k`-subset of indices.
pub fn classify_type_ii(m: &SparseBinaryMatrix) -> Option<usize> {
    let entries = m.entries();
    let k = entries.len();
    let structural = if k < 2 {
        None
    } else {
        // follow column -> row from the first entry; a single cycle returns
        // to the start after exactly k steps without leaving the support
        let start = entries[0].1;
        let mut col = start;
        let mut steps = 0;
        while let Some(row) = m.row_of(col) {
            steps += 1;
            col = row;
            if col == start || steps > k {
                break;
            }
        }
        (col == start && steps == k).then_some(k)
    };
    if structural.is_some() {
        assert_eq!(
            satisfies_type_ii_powers(m),
            structural,
            "single cycle failed the power conditions"
        );
    }
    structural
}

/// Per-condition outcome of [`validate_summands`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandReport {
    /// The union of all entry sets is the entry set of `A`.
    pub sum_matches: bool,
    /// No two parts share a position.
    pub pairwise_disjoint: bool,
    /// `Σ rank Q_i + t = n` and `rank Q_i = k_i`.
    pub ranks_consistent: bool,
    /// `D_t` is diagonal.
    pub diagonal_ok: bool,
    /// `classify_type_ii(Q_i) = k_i` for each summand.
    pub type_ii: Vec<bool>,
    /// `Q_a Q_b = 0` for `a != b`, and `Q_i D_t = D_t Q_i = 0`.
    pub orthogonal: bool,
}

impl SummandReport {
    pub fn all_pass(&self) -> bool {
        self.sum_matches
            && self.pairwise_disjoint
            && self.ranks_consistent
            && self.diagonal_ok
            && self.type_ii.iter().all(|&ok| ok)
            && self.orthogonal
    }
}

pub fn validate_summands(p: &Permutation, d: &SummandDecomposition) -> Result<SummandReport> {
    let n = p.n();
    for m in d.summands.iter().chain(std::iter::once(&d.fixed_diagonal)) {
        if m.n() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: m.n(),
            });
        }
    }
    if d.n != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: d.n,
        });
    }

    let parts: Vec<&SparseBinaryMatrix> = d
        .summands
        .iter()
        .chain(std::iter::once(&d.fixed_diagonal))
        .collect();

    // owners[c] lists every part with an entry in column c
    let mut owners: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut covered = vec![0usize; n];
    let mut pairwise_disjoint = true;
    let mut sum_matches = true;
    let a = matrix_from_perm(p);
    for (idx, part) in parts.iter().enumerate() {
        for (r, c) in part.entries() {
            if !a.contains(r, c) {
                sum_matches = false;
            }
            owners[c - 1].push(idx);
            covered[c - 1] += 1;
            if covered[c - 1] > 1 {
                pairwise_disjoint = false;
            }
        }
    }
    if covered.contains(&0) {
        sum_matches = false;
    }

    // X·Y != 0 iff some entry (r, c) of Y has column r of X nonempty
    let mut orthogonal = true;
    for (y, part) in parts.iter().enumerate() {
        for (r, _) in part.entries() {
            if owners[r - 1].iter().any(|&x| x != y) {
                orthogonal = false;
            }
        }
    }

    let ranks_consistent = d.summands.len() == d.orders.len()
        && d.summands
            .iter()
            .zip(&d.orders)
            .all(|(q, &k)| q.rank() == k)
        && d.summands
            .iter()
            .map(SparseBinaryMatrix::rank)
            .sum::<usize>()
            + d.fixed_diagonal.rank()
            == n;
    let type_ii = d
        .summands
        .iter()
        .enumerate()
        .map(|(i, q)| {
            classify_type_ii(q).is_some() && classify_type_ii(q) == d.orders.get(i).copied()
        })
        .collect();

    Ok(SummandReport {
        sum_matches,
        pairwise_disjoint,
        ranks_consistent,
        diagonal_ok: d.fixed_diagonal.is_diagonal(),
        type_ii,
        orthogonal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn sparse(n: usize, e: &[(usize, usize)]) -> SparseBinaryMatrix {
        SparseBinaryMatrix::new(n, e.iter().copied()).unwrap()
    }

    const P1: [usize; 6] = [5, 3, 4, 2, 1, 6];

    #[test]
    fn cycle_summands_examples() {
        let d = cycle_summands(&p(&P1));
        assert_eq!(d.summands.len(), 2);
        assert_eq!(d.summands[0].entries(), vec![(5, 1), (1, 5)]);
        assert_eq!(d.summands[1].entries(), vec![(3, 2), (4, 3), (2, 4)]);
        assert_eq!(d.fixed_diagonal.entries(), vec![(6, 6)]);
        assert_eq!(d.orders, vec![2, 3]);

        let d = cycle_summands(&Permutation::identity(3));
        assert!(d.summands.is_empty());
        assert_eq!(d.fixed_diagonal.entries(), vec![(1, 1), (2, 2), (3, 3)]);

        let d = cycle_summands(&p(&[2, 3, 1]));
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].entries(), vec![(2, 1), (3, 2), (1, 3)]);
        assert!(d.fixed_diagonal.is_zero());
    }

    #[test]
    fn cycle_factors_examples() {
        let s = p(&P1);
        let f = cycle_factors(&s);
        assert_eq!(
            f.factors,
            vec![p(&[5, 2, 3, 4, 1, 6]), p(&[1, 3, 4, 2, 5, 6])]
        );
        assert_eq!(f.orders, vec![2, 3]);
        assert_eq!(f.factors[0].compose(&f.factors[1]).unwrap(), s);
        assert_eq!(f.factors[1].compose(&f.factors[0]).unwrap(), s);

        let f = cycle_factors(&p(&[2, 1, 4, 3]));
        assert_eq!(f.factors, vec![p(&[2, 1, 3, 4]), p(&[1, 2, 4, 3])]);
        assert_eq!(f.product(), p(&[2, 1, 4, 3]));

        let f = cycle_factors(&p(&[2, 3, 1]));
        assert_eq!(f.factors, vec![p(&[2, 3, 1])]);

        let f = cycle_factors(&Permutation::identity(4));
        assert!(f.factors.is_empty());
        assert!(f.product().is_identity());
    }

    #[test]
    fn classify_type_i_examples() {
        assert_eq!(classify_type_i(&p(&[5, 2, 3, 4, 1, 6])), Some(2));
        assert_eq!(classify_type_i(&Permutation::identity(3)), None);
        assert_eq!(classify_type_i(&p(&[2, 1, 4, 3])), None);
        assert_eq!(satisfies_type_i_powers(&p(&[2, 1, 4, 3])), None);
        assert_eq!(classify_type_i(&p(&[1, 3, 4, 2, 5, 6])), Some(3));
    }

    #[test]
    fn classify_type_ii_examples() {
        assert_eq!(
            classify_type_ii(&sparse(6, &[(3, 2), (4, 3), (2, 4)])),
            Some(3)
        );
        assert_eq!(classify_type_ii(&sparse(2, &[(1, 1), (2, 2)])), None);
        assert_eq!(
            satisfies_type_ii_powers(&sparse(2, &[(1, 1), (2, 2)])),
            None
        );
        let two_swaps = sparse(4, &[(2, 1), (1, 2), (4, 3), (3, 4)]);
        assert_eq!(classify_type_ii(&two_swaps), None);
        assert_eq!(satisfies_type_ii_powers(&two_swaps), None);
        // a path is not a cycle
        assert_eq!(classify_type_ii(&sparse(3, &[(2, 1), (3, 2)])), None);
        assert_eq!(
            satisfies_type_ii_powers(&sparse(3, &[(2, 1), (3, 2)])),
            None
        );
        // a fixed entry next to a 2-cycle
        assert_eq!(
            classify_type_ii(&sparse(3, &[(1, 1), (3, 2), (2, 3)])),
            None
        );
        assert_eq!(classify_type_ii(&SparseBinaryMatrix::zero(3)), None);
    }

    #[test]
    fn power_conditions_accept_some_multi_cycle_matrices() {
        // cycles of lengths 2, 4, 6: lcm = sum = 12
        let mut images: Vec<usize> = Vec::new();
        let mut offset = 0;
        for k in [2usize, 4, 6] {
            images.extend((1..k).map(|v| offset + v + 1));
            images.push(offset + 1);
            offset += k;
        }
        let q = p(&images);
        assert_eq!(satisfies_type_i_powers(&q), Some(12));
        assert_eq!(classify_type_i(&q), None);
        let m = matrix_from_perm(&q);
        assert_eq!(satisfies_type_ii_powers(&m), Some(12));
        assert_eq!(classify_type_ii(&m), None);
    }

    #[test]
    fn power_shortcut_matches_full_scan() {
        fn scan(p: &Permutation) -> Option<usize> {
            let k = p.moved_points();
            if k < 2 || !p.pow(k as u64).is_identity() {
                return None;
            }
            (1..k).all(|i| !p.pow(i as u64).is_identity()).then_some(k)
        }
        for n in 0..=7 {
            for q in Permutation::all(n) {
                assert_eq!(satisfies_type_i_powers(&q), scan(&q), "{q}");
            }
        }
    }

    #[test]
    fn validate_summands_examples() {
        let s = p(&P1);
        let d = cycle_summands(&s);
        assert!(validate_summands(&s, &d).unwrap().all_pass());

        let merged = d.summands[0].add(&d.summands[1]).unwrap();
        let bad = SummandDecomposition {
            n: 6,
            summands: vec![merged],
            fixed_diagonal: d.fixed_diagonal.clone(),
            orders: vec![5],
        };
        let report = validate_summands(&s, &bad).unwrap();
        assert_eq!(report.type_ii, vec![false]);
        assert!(report.sum_matches && report.orthogonal && report.ranks_consistent);
        assert!(!report.all_pass());

        let id = Permutation::identity(2);
        let d = SummandDecomposition {
            n: 2,
            summands: vec![],
            fixed_diagonal: SparseBinaryMatrix::identity(2),
            orders: vec![],
        };
        assert!(validate_summands(&id, &d).unwrap().all_pass());
        assert!(validate_summands(&Permutation::identity(3), &d).is_err());
    }

    #[test]
    fn validate_summands_detects_overlap_and_missing_entries() {
        let s = p(&P1);
        let mut d = cycle_summands(&s);
        d.fixed_diagonal = SparseBinaryMatrix::zero(6);
        let report = validate_summands(&s, &d).unwrap();
        assert!(!report.sum_matches && !report.ranks_consistent);

        let mut d = cycle_summands(&s);
        d.summands.push(d.summands[0].clone());
        d.orders.push(2);
        let report = validate_summands(&s, &d).unwrap();
        assert!(!report.pairwise_disjoint && !report.orthogonal);
    }

    #[test]
    fn projector_complement_and_idempotence() {
        let j = SupportProjector::new(5, [1, 4]).unwrap();
        let m = j.to_matrix();
        assert_eq!(m.mul(&m).unwrap(), m);
        assert_eq!(j.complement().support(), vec![2, 3, 5]);
        assert_eq!(
            m.add(&j.complement().to_matrix()).unwrap(),
            SparseBinaryMatrix::identity(5)
        );
        assert!(SupportProjector::new(3, [4]).is_err());
    }
}
