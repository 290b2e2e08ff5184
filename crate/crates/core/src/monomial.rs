//! Monomial matrices: splitting into permutation and diagonal parts, and
//! carrying the permutation canonical form over to weighted matrices.
//!
//! `M = P D₂ = D₁ P`, where `D₂` holds the column weights `d_j` and `D₁` the
//! row weights `c_i = d_{σ⁻¹(i)}`. With `T`, `Y` the conjugator and canonical
//! form of `P`, conjugation only moves entries, so `T⁻¹ M T` has the nonzero
//! pattern of `Y` and factors as `D₃ Y = Y D₄`.

use crate::cycle_structure::canonical_form;
use crate::perm::{MonomialMatrix, Permutation};
use crate::scalar::Scalar;

/// `M = P · D₂ = D₁ · P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSplit {
    pub perm: Permutation,
    /// `D₁`: the nonzero value of each row.
    pub row_diag: Vec<Scalar>,
    /// `D₂`: the nonzero value of each column.
    pub col_diag: Vec<Scalar>,
}

/// `T⁻¹ · M · T = D₃ · Y = Y · D₄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialCanonical {
    pub conjugator: Permutation,
    pub canonical_perm: Permutation,
    /// `D₃`: row values of `T⁻¹ M T`.
    pub left_diag: Vec<Scalar>,
    /// `D₄`: column values of `T⁻¹ M T`.
    pub right_diag: Vec<Scalar>,
}

impl MonomialCanonical {
    /// `T⁻¹ M T` as a monomial matrix.
    pub fn conjugated(&self) -> MonomialMatrix {
        MonomialMatrix::new(self.canonical_perm.clone(), self.right_diag.clone())
            .expect("weights are nonzero")
    }
}

fn diag(weights: &[Scalar]) -> MonomialMatrix {
    MonomialMatrix::diagonal(weights.to_vec()).expect("weights are nonzero")
}

pub fn monomial_split(m: &MonomialMatrix) -> MonomialSplit {
    let split = MonomialSplit {
        perm: m.perm().clone(),
        row_diag: m.row_weights(),
        col_diag: m.col_weights().to_vec(),
    };
    let p = MonomialMatrix::from_permutation(split.perm.clone());
    assert_eq!(
        &p.mul(&diag(&split.col_diag)).expect("same order"),
        m,
        "M != P·D₂"
    );
    assert_eq!(
        &diag(&split.row_diag).mul(&p).expect("same order"),
        m,
        "M != D₁·P"
    );
    split
}

pub fn monomial_canonical(m: &MonomialMatrix) -> MonomialCanonical {
    let canon = canonical_form(m.perm());
    let conjugated = m.conjugate_by(&canon.conjugator).expect("same order");
    assert_eq!(
        conjugated.perm(),
        &canon.canonical,
        "T⁻¹MT and T⁻¹PT differ in pattern"
    );
    let result = MonomialCanonical {
        conjugator: canon.conjugator,
        canonical_perm: canon.canonical,
        left_diag: conjugated.row_weights(),
        right_diag: conjugated.col_weights().to_vec(),
    };
    let y = MonomialMatrix::from_permutation(result.canonical_perm.clone());
    assert_eq!(
        diag(&result.left_diag).mul(&y).expect("same order"),
        conjugated,
        "T⁻¹MT != D₃·Y"
    );
    assert_eq!(
        y.mul(&diag(&result.right_diag)).expect("same order"),
        conjugated,
        "T⁻¹MT != Y·D₄"
    );
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::monomial_from_matrix;

    fn s(v: i64) -> Scalar {
        Scalar::from_integer(v)
    }

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn split_examples() {
        let m = MonomialMatrix::diagonal(vec![s(2), s(3)]).unwrap();
        let sp = monomial_split(&m);
        assert!(sp.perm.is_identity());
        assert_eq!(sp.row_diag, vec![s(2), s(3)]);
        assert_eq!(sp.col_diag, vec![s(2), s(3)]);

        let m = monomial_from_matrix(&[vec![s(0), s(3)], vec![s(2), s(0)]]).unwrap();
        let sp = monomial_split(&m);
        assert_eq!(sp.perm, p(&[2, 1]));
        assert_eq!(sp.col_diag, vec![s(2), s(3)]);
        assert_eq!(sp.row_diag, vec![s(3), s(2)]);

        let m = MonomialMatrix::from_permutation(p(&[3, 1, 2]));
        let sp = monomial_split(&m);
        assert_eq!(sp.perm, p(&[3, 1, 2]));
        assert!(sp.row_diag.iter().chain(&sp.col_diag).all(Scalar::is_one));
    }

    #[test]
    fn canonical_examples() {
        let m = MonomialMatrix::from_permutation(p(&[5, 3, 4, 2, 1, 6]));
        let c = monomial_canonical(&m);
        assert_eq!(c.conjugator, p(&[6, 1, 5, 2, 3, 4]));
        assert_eq!(c.canonical_perm, p(&[1, 3, 2, 5, 6, 4]));
        assert!(c.left_diag.iter().chain(&c.right_diag).all(Scalar::is_one));

        let m = MonomialMatrix::diagonal(vec![s(5)]).unwrap();
        let c = monomial_canonical(&m);
        assert!(c.conjugator.is_identity() && c.canonical_perm.is_identity());
        assert_eq!(
            (c.left_diag.clone(), c.right_diag.clone()),
            (vec![s(5)], vec![s(5)])
        );

        let m = monomial_from_matrix(&[vec![s(0), s(3)], vec![s(2), s(0)]]).unwrap();
        let c = monomial_canonical(&m);
        assert_eq!(c.canonical_perm, p(&[2, 1]));
        assert!(c.conjugator.is_identity());
        assert_eq!(c.left_diag, vec![s(3), s(2)]);
        assert_eq!(c.right_diag, vec![s(2), s(3)]);
        assert_eq!(c.conjugated(), m);
    }

    #[test]
    fn weights_move_with_conjugation() {
        let m = MonomialMatrix::new(
            p(&[5, 3, 4, 2, 1, 6]),
            vec![s(1), s(2), s(3), s(4), s(5), Scalar::ratio(-1, 7)],
        )
        .unwrap();
        let c = monomial_canonical(&m);
        // column c of T⁻¹MT carries the weight of column T(c) of M
        let expected: Vec<_> = [6, 1, 5, 2, 3, 4]
            .iter()
            .map(|&j| m.col_weights()[j - 1].clone())
            .collect();
        assert_eq!(c.right_diag, expected);
    }
}
