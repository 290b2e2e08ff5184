//! Orbit tracing, cycle types and the canonical form under permutation
//! similarity.
//!
//! The canonical form of `A` is `B = T⁻¹ A T = diag{I_t, N_k1, ..., N_kr}` with
//! `2 <= k1 <= ... <= kr`, where `N_k` is the standard cycle matrix (units on
//! the subdiagonal and in the top-right corner). `T` is built from the
//! reordered basis: fixed points first, then the nontrivial orbits by
//! ascending size (ties by minimal element), each orbit listed in traversal
//! order from its minimal element. `T` is not unique in general; the one
//! returned here is the output of this construction.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Orbits of a permutation in discovery order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    n: usize,
    orbits: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    /// 1-based orbits `[a1, ..., ak]` with `σ(a_v) = a_{v+1}` and `σ(ak) = a1`.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn into_orbits(self) -> Vec<Vec<usize>> {
        self.orbits
    }
}

/// Traces the orbits of `p`, each seeded at the smallest index not yet seen.
pub fn orbit_partition(p: &Permutation) -> OrbitPartition {
    let map = p.as_zero_based();
    let n = map.len();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = start;
        loop {
            seen[x] = true;
            orbit.push(x + 1);
            x = map[x];
            if x == start {
                break;
            }
        }
        orbits.push(orbit);
    }
    OrbitPartition { n, orbits }
}

/// Fixed-point count plus the sorted nontrivial cycle lengths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleType {
    n: usize,
    t: usize,
    lengths: Vec<usize>,
}

impl CycleType {
    /// Fails unless every length is at least 2 and `t + Σ lengths = n`.
    /// The lengths are sorted on construction.
    pub fn new(n: usize, t: usize, mut lengths: Vec<usize>) -> Result<Self> {
        if lengths.iter().any(|&k| k < 2) || t + lengths.iter().sum::<usize>() != n {
            return Err(Error::OutOfRange {
                what: "cycle type",
                detail: format!("t = {t}, lengths = {lengths:?} do not describe order {n}"),
            });
        }
        lengths.sort_unstable();
        Ok(CycleType { n, t, lengths })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn fixed_points(&self) -> usize {
        self.t
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Number of nontrivial cycles.
    pub fn r(&self) -> usize {
        self.lengths.len()
    }

    /// The same type as a partition of `n` in ascending parts.
    pub fn as_partition(&self) -> Vec<usize> {
        std::iter::repeat_n(1, self.t)
            .chain(self.lengths.iter().copied())
            .collect()
    }

    /// The canonical representative `diag{I_t, N_k1, ..., N_kr}`.
    pub fn representative(&self) -> Permutation {
        let mut map: Vec<usize> = (0..self.t).collect();
        let mut offset = self.t;
        for &k in &self.lengths {
            map.extend((1..k).map(|v| offset + v));
            map.push(offset);
            offset += k;
        }
        Permutation::from_map_unchecked(map)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {:?})", self.t, self.lengths)
    }
}

pub fn cycle_type(p: &Permutation) -> CycleType {
    let partition = orbit_partition(p);
    let mut t = 0;
    let mut lengths = Vec::new();
    for orbit in partition.orbits() {
        match orbit.len() {
            1 => t += 1,
            k => lengths.push(k),
        }
    }
    lengths.sort_unstable();
    CycleType {
        n: p.n(),
        t,
        lengths,
    }
}

/// `N_k` embedded on the block `offset+1 ..= offset+k` of order `n`.
pub fn standard_cycle_matrix(k: usize, n: usize, offset: usize) -> Result<Permutation> {
    if k < 2 || offset + k > n {
        return Err(Error::BlockOutOfRange { k, n, offset });
    }
    let mut map: Vec<usize> = (0..n).collect();
    for v in 0..k - 1 {
        map[offset + v] = offset + v + 1;
    }
    map[offset + k - 1] = offset;
    Ok(Permutation::from_map_unchecked(map))
}

/// Canonical form `B`, conjugator `T` with `B = T⁻¹ A T`, and the cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub canonical: Permutation,
    pub conjugator: Permutation,
    pub cycle_type: CycleType,
}

/// Orbits ordered as in the canonical layout: fixed points, then nontrivial
/// orbits by (size, minimal element). Discovery order already sorts by
/// minimal element, so a stable sort on size suffices.
pub(crate) fn canonical_orbit_order(p: &Permutation) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let (fixed, mut cycles): (Vec<_>, Vec<_>) = orbit_partition(p)
        .into_orbits()
        .into_iter()
        .partition(|o| o.len() == 1);
    cycles.sort_by_key(Vec::len);
    (fixed, cycles)
}

pub fn canonical_form(p: &Permutation) -> CanonicalDecomposition {
    let (fixed, cycles) = canonical_orbit_order(p);
    let basis: Vec<usize> = fixed
        .iter()
        .chain(cycles.iter())
        .flat_map(|o| o.iter().map(|&x| x - 1))
        .collect();
    let conjugator = Permutation::from_map_unchecked(basis);
    let cycle_type = CycleType {
        n: p.n(),
        t: fixed.len(),
        lengths: cycles.iter().map(Vec::len).collect(),
    };
    let canonical = cycle_type.representative();
    let check = p.conjugate_by(&conjugator).expect("same order");
    assert_eq!(check, canonical, "T⁻¹AT differs from the canonical layout");
    CanonicalDecomposition {
        canonical,
        conjugator,
        cycle_type,
    }
}

/// Outcome of a similarity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Similarity {
    /// `W⁻¹ · a · W = b`.
    Similar {
        witness: Permutation,
    },
    NotSimilar,
}

impl Similarity {
    pub fn is_similar(&self) -> bool {
        matches!(self, Similarity::Similar { .. })
    }
}

pub fn are_permutation_similar(a: &Permutation, b: &Permutation) -> Result<Similarity> {
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let ca = canonical_form(a);
    let cb = canonical_form(b);
    if ca.cycle_type != cb.cycle_type {
        return Ok(Similarity::NotSimilar);
    }
    let witness = ca.conjugator.compose(&cb.conjugator.inverse())?;
    debug_assert_eq!(a.conjugate_by(&witness)?, *b);
    Ok(Similarity::Similar { witness })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    const P1: [usize; 6] = [5, 3, 4, 2, 1, 6];

    #[test]
    fn orbit_partition_examples() {
        assert_eq!(
            orbit_partition(&p(&[1, 2, 3])).orbits(),
            &[vec![1], vec![2], vec![3]]
        );
        assert_eq!(
            orbit_partition(&p(&P1)).orbits(),
            &[vec![1, 5], vec![2, 3, 4], vec![6]]
        );
        assert_eq!(orbit_partition(&p(&[2, 3, 1])).orbits(), &[vec![1, 2, 3]]);
        assert!(orbit_partition(&Permutation::identity(0))
            .orbits()
            .is_empty());
    }

    #[test]
    fn cycle_type_examples() {
        let ct = cycle_type(&p(&P1));
        assert_eq!(
            (ct.n(), ct.fixed_points(), ct.lengths()),
            (6, 1, &[2, 3][..])
        );
        let ct = cycle_type(&Permutation::identity(4));
        assert_eq!((ct.n(), ct.fixed_points(), ct.lengths()), (4, 4, &[][..]));
        let ct = cycle_type(&p(&[2, 3, 4, 5, 1]));
        assert_eq!((ct.n(), ct.fixed_points(), ct.lengths()), (5, 0, &[5][..]));
    }

    #[test]
    fn cycle_type_constructor_validates() {
        assert!(CycleType::new(6, 1, vec![3, 2]).is_ok());
        assert!(CycleType::new(6, 1, vec![3, 1, 1]).is_err());
        assert!(CycleType::new(6, 2, vec![3]).is_err());
        assert_eq!(CycleType::new(6, 1, vec![3, 2]).unwrap().lengths(), &[2, 3]);
    }

    #[test]
    fn standard_cycle_matrix_examples() {
        assert_eq!(standard_cycle_matrix(2, 2, 0).unwrap(), p(&[2, 1]));
        assert_eq!(standard_cycle_matrix(3, 3, 0).unwrap(), p(&[2, 3, 1]));
        assert_eq!(
            standard_cycle_matrix(3, 6, 3).unwrap(),
            p(&[1, 2, 3, 5, 6, 4])
        );
        assert_eq!(
            standard_cycle_matrix(3, 6, 4),
            Err(Error::BlockOutOfRange {
                k: 3,
                n: 6,
                offset: 4
            })
        );
        assert!(standard_cycle_matrix(1, 6, 0).is_err());
    }

    #[test]
    fn standard_cycle_order() {
        for k in 2..=12 {
            let nk = standard_cycle_matrix(k, k, 0).unwrap();
            assert!(nk.pow(k as u64).is_identity());
            for i in 1..k {
                assert!(!nk.pow(i as u64).is_identity());
            }
        }
    }

    #[test]
    fn canonical_form_examples() {
        let d = canonical_form(&p(&P1));
        assert_eq!(d.canonical, p(&[1, 3, 2, 5, 6, 4]));
        assert_eq!(d.conjugator, p(&[6, 1, 5, 2, 3, 4]));
        // P1 = T1 B1 T1⁻¹
        let back = d
            .conjugator
            .compose(&d.canonical)
            .unwrap()
            .compose(&d.conjugator.inverse())
            .unwrap();
        assert_eq!(back, p(&P1));

        let d = canonical_form(&Permutation::identity(5));
        assert!(d.canonical.is_identity() && d.conjugator.is_identity());

        let full = p(&[2, 3, 4, 5, 1]);
        let d = canonical_form(&full);
        assert_eq!(d.canonical, full);
        assert!(d.conjugator.is_identity());

        let d = canonical_form(&Permutation::identity(0));
        assert_eq!(d.canonical.n(), 0);
    }

    #[test]
    fn ties_broken_by_minimal_element() {
        // two 2-cycles {2,4} and {1,3}: {1,3} is discovered first
        let d = canonical_form(&p(&[3, 4, 1, 2]));
        assert_eq!(d.conjugator, p(&[1, 3, 2, 4]));
        assert_eq!(d.canonical, p(&[2, 1, 4, 3]));
    }

    #[test]
    fn similarity_examples() {
        let b1 = p(&[1, 3, 2, 5, 6, 4]);
        assert_eq!(
            are_permutation_similar(&p(&P1), &b1).unwrap(),
            Similarity::Similar {
                witness: p(&[6, 1, 5, 2, 3, 4])
            }
        );
        assert_eq!(
            are_permutation_similar(&Permutation::identity(3), &p(&[2, 3, 1])).unwrap(),
            Similarity::NotSimilar
        );
        let (a, b) = (p(&[2, 1, 3]), p(&[1, 3, 2]));
        let Similarity::Similar { witness } = are_permutation_similar(&a, &b).unwrap() else {
            panic!("expected similar");
        };
        assert_eq!(a.conjugate_by(&witness).unwrap(), b);
        // brute force agrees that a conjugator exists
        assert!(Permutation::all(3).any(|w| a.conjugate_by(&w).unwrap() == b));
        assert!(are_permutation_similar(&a, &Permutation::identity(4)).is_err());
    }
}
