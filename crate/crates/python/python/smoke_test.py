"""Smoke test for the permclass extension module.

Build the module and run this script from the repository root:

    cargo build -p permclass-py --release --features extension-module
    cp target/release/libpermclass_py.so crates/python/python/permclass.so
    python3 crates/python/python/smoke_test.py
"""

import itertools
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import permclass  # noqa: E402
from permclass import Permutation  # noqa: E402


def dp_partitions(limit):
    p = [1] + [0] * limit
    for part in range(1, limit + 1):
        for m in range(part, limit + 1):
            p[m] += p[m - part]
    return p


def main():
    p1 = Permutation([5, 3, 4, 2, 1, 6])
    b, t, ctype = permclass.canonical_form(p1)
    assert b.images() == [1, 3, 2, 5, 6, 4], b
    assert t.images() == [6, 1, 5, 2, 3, 4], t
    assert ctype == (1, [2, 3])
    assert t @ b @ t.inverse() == p1
    assert p1.conjugate_by(t) == b

    matrix = p1.to_matrix()
    assert Permutation.from_matrix(matrix) == p1
    assert Permutation.parse("6 5 3 4 2 1 6") == p1
    assert p1(1) == 5 and len(p1) == 6 and p1.n == 6

    summands, fixed = permclass.cycle_summands(p1)
    assert summands == [(2, [(5, 1), (1, 5)]), (3, [(3, 2), (4, 3), (2, 4)])]
    assert fixed == [6]
    factors = permclass.cycle_factors(p1)
    product = Permutation.identity(6)
    for _, f in factors:
        product = product @ f
    assert product == p1
    assert permclass.orbit_partition(p1) == [[1, 5], [2, 3, 4], [6]]

    w = permclass.similarity_witness(p1, b)
    assert w is not None and p1.conjugate_by(w) == b
    assert permclass.similarity_witness(Permutation([2, 3, 1]), Permutation.identity(3)) is None
    try:
        permclass.similarity_witness(p1, Permutation.identity(3))
    except ValueError:
        pass
    else:
        raise AssertionError("dimension mismatch accepted")

    # class counts by brute force
    for n in range(1, 7):
        forms = {
            tuple(permclass.canonical_form(Permutation(list(q)))[0].images())
            for q in itertools.permutations(range(1, n + 1))
        }
        assert len(forms) == permclass.partition_exact(n)
        reps = permclass.class_representatives(n)
        assert {tuple(r.images()) for r in reps} == forms

    oracle = dp_partitions(300)
    assert all(permclass.partition_exact(n) == oracle[n] for n in range(301))
    assert permclass.partition_exact(100) == 190569292
    assert permclass.modified_estimate_large(180) == 684957448733
    assert permclass.hr_estimate(1, 12) == "1.87667042261e+0"
    try:
        permclass.modified_estimate_small(2)
    except ValueError:
        pass
    else:
        raise AssertionError("n = 2 accepted by the small-n estimate")

    perm, d1, d2 = permclass.monomial_split([[0, 3], [2, 0]])
    assert perm.images() == [2, 1]
    assert d1 == [3, 2] and d2 == [2, 3]
    rows = [
        [0, 0, 0, 0, Fraction(1, 2), 0],
        [0, 0, 0, -3, 0, 0],
        [0, "1/4", 0, 0, 0, 0],
        [0, 0, 7, 0, 0, 0],
        [5, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, "-1"],
    ]
    t, y, d3, d4 = permclass.monomial_canonical(rows)
    assert t.images() == [6, 1, 5, 2, 3, 4] and y.images() == [1, 3, 2, 5, 6, 4]
    assert d4 == [-1, 5, Fraction(1, 2), Fraction(1, 4), 7, -3]
    assert sorted(d3) == sorted(d4)
    try:
        permclass.monomial_split([[0, 0], [2, 0]])
    except ValueError:
        pass
    else:
        raise AssertionError("zero row accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
