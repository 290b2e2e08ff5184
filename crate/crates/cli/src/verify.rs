//! Re-verification of every result before it is printed.
//!
//! These checks recompute the defining identities from the emitted objects
//! alone, so a wrong answer can never leave the process with status 0.

use permclass::{
    classify_type_i, classify_type_ii, CanonicalDecomposition, FactorDecomposition,
    MonomialCanonical, MonomialMatrix, MonomialSplit, Permutation, SparseBinaryMatrix,
    SummandDecomposition,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure(pub String);

type Check = Result<(), Failure>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(Failure(what()))
    }
}

fn product(parts: &[&MonomialMatrix]) -> Result<MonomialMatrix, Failure> {
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = acc.mul(p).map_err(|e| Failure(e.to_string()))?;
    }
    Ok(acc)
}

fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation, Failure> {
    a.compose(b).map_err(|e| Failure(e.to_string()))
}

/// `T B T⁻¹ = A`, and `B` is the block-diagonal representative of its type.
pub fn canonical(a: &Permutation, d: &CanonicalDecomposition) -> Check {
    let t = &d.conjugator;
    let back = compose(&compose(t, &d.canonical)?, &t.inverse())?;
    ensure(&back == a, || format!("T B T^-1 = {back}, expected {a}"))?;
    ensure(d.canonical == d.cycle_type.representative(), || {
        format!(
            "B = {} is not the representative of {}",
            d.canonical, d.cycle_type
        )
    })
}

/// The summands are disjoint single cycles of the stated orders and, with
/// the fixed-point diagonal, add up to `A`.
pub fn summands(a: &Permutation, d: &SummandDecomposition) -> Check {
    let mut total = d.fixed_diagonal.clone();
    for (q, &k) in d.summands.iter().zip(&d.orders) {
        ensure(classify_type_ii(q) == Some(k), || {
            format!("summand is not a {k}-cycle")
        })?;
        ensure(total.is_disjoint(q), || "summands overlap".into())?;
        total = total.add(q).map_err(|e| Failure(e.to_string()))?;
    }
    ensure(d.summands.len() == d.orders.len(), || {
        "order list length".into()
    })?;
    ensure(d.fixed_diagonal.is_diagonal(), || {
        "D is not diagonal".into()
    })?;
    let expected = SparseBinaryMatrix::new(a.n(), (1..=a.n()).map(|j| (a.image(j), j)))
        .map_err(|e| Failure(e.to_string()))?;
    ensure(total == expected, || "summands do not add up to A".into())
}

/// The factors are commuting single cycles whose product is `A`.
pub fn factors(a: &Permutation, f: &FactorDecomposition) -> Check {
    ensure(f.factors.len() == f.orders.len(), || {
        "order list length".into()
    })?;
    let mut acc = Permutation::identity(a.n());
    for (i, (p, &k)) in f.factors.iter().zip(&f.orders).enumerate() {
        ensure(classify_type_i(p) == Some(k), || {
            format!("factor {} is not a {k}-cycle", i + 1)
        })?;
        for q in &f.factors[i + 1..] {
            ensure(compose(p, q)? == compose(q, p)?, || {
                "factors do not commute".into()
            })?;
        }
        acc = compose(&acc, p)?;
    }
    ensure(&acc == a, || {
        format!("product of factors is {acc}, expected {a}")
    })
}

/// `W⁻¹ A W = B`.
pub fn witness(a: &Permutation, b: &Permutation, w: &Permutation) -> Check {
    let c = a.conjugate_by(w).map_err(|e| Failure(e.to_string()))?;
    ensure(&c == b, || format!("W^-1 A W = {c}, expected {b}"))
}

/// `M = P D₂ = D₁ P`.
pub fn split(m: &MonomialMatrix, s: &MonomialSplit) -> Check {
    let p = MonomialMatrix::from_permutation(s.perm.clone());
    let d1 = MonomialMatrix::diagonal(s.row_diag.clone()).map_err(|e| Failure(e.to_string()))?;
    let d2 = MonomialMatrix::diagonal(s.col_diag.clone()).map_err(|e| Failure(e.to_string()))?;
    ensure(&product(&[&p, &d2])? == m, || "M != P D2".into())?;
    ensure(&product(&[&d1, &p])? == m, || "M != D1 P".into())
}

/// `T⁻¹ M T = D₃ Y = Y D₄`, checked by multiplying back to `M`.
pub fn monomial_canonical(m: &MonomialMatrix, c: &MonomialCanonical) -> Check {
    let t = MonomialMatrix::from_permutation(c.conjugator.clone());
    let t_inv = MonomialMatrix::from_permutation(c.conjugator.inverse());
    let y = MonomialMatrix::from_permutation(c.canonical_perm.clone());
    let d3 = MonomialMatrix::diagonal(c.left_diag.clone()).map_err(|e| Failure(e.to_string()))?;
    let d4 = MonomialMatrix::diagonal(c.right_diag.clone()).map_err(|e| Failure(e.to_string()))?;
    ensure(&product(&[&t, &d3, &y, &t_inv])? == m, || {
        "T D3 Y T^-1 != M".into()
    })?;
    ensure(&product(&[&t, &y, &d4, &t_inv])? == m, || {
        "T Y D4 T^-1 != M".into()
    })
}
