import random
from fractions import Fraction

from genpos.linalg import (IntegerEchelon, SparseEchelon, nullspace_vector,
                           rank, rref, to_integer_vec)
from genpos.scalars import QQ, PrimeField

F11 = PrimeField(11)


def q(*vals):
    return [Fraction(v) for v in vals]


def test_rref_basic():
    rows, pivots = rref([q(2, 4), q(1, 3)], QQ)
    assert pivots == [0, 1]
    assert rows == [q(1, 0), q(0, 1)]


def test_rref_dependent_rows():
    rows, pivots = rref([q(1, 2, 3), q(2, 4, 6), q(0, 0, 1)], QQ)
    assert pivots == [0, 2]
    assert rows == [q(1, 2, 0), q(0, 0, 1)]


def test_rank():
    assert rank([q(1, 2), q(2, 4)], QQ) == 1
    assert rank([q(1, 0), q(0, 1)], QQ) == 2
    assert rank([], QQ) == 0
    assert rank([[F11(1), F11(3)], [F11(2), F11(6)]], F11) == 1


def test_nullspace_vector_deterministic():
    # x + 2y = 0: free column is y, set it to 1
    v = nullspace_vector([q(1, 2)], 2, QQ)
    assert v == q(-2, 1)
    assert nullspace_vector([q(1, 0), q(0, 1)], 2, QQ) is None
    v = nullspace_vector([], 2, QQ)
    assert v == q(1, 0)


def sv(*vals):
    return {i: Fraction(v) for i, v in enumerate(vals) if v}


def test_sparse_echelon_incremental():
    ech = SparseEchelon(QQ)
    assert ech.insert(sv(1, 2, 0))
    assert ech.insert(sv(0, 1, 1))
    assert not ech.insert(sv(1, 3, 1))  # dependent on the first two
    assert ech.rank == 2
    assert ech.contains(sv(2, 5, 1))
    assert not ech.contains(sv(0, 0, 1))
    assert ech.reduce({}) == {}


def test_sparse_pivot_rows_normalized():
    ech = SparseEchelon(QQ)
    ech.insert(sv(3, 6))
    row = ech.pivots[0]
    assert row[0] == 1 and row[1] == 2


def test_integer_echelon_matches_sparse():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 5)
        vecs = [sv(*[rng.randint(-4, 4) for _ in range(n)])
                for _ in range(rng.randint(1, 6))]
        sp = SparseEchelon(QQ)
        ie = IntegerEchelon()
        for v in vecs:
            a = sp.insert(dict(v))
            b = ie.insert(to_integer_vec(v))
            assert a == b
        assert sp.rank == ie.rank
        probe = sv(*[rng.randint(-4, 4) for _ in range(n)])
        assert sp.contains(dict(probe)) == ie.contains(to_integer_vec(probe))


def test_to_integer_vec_clears_denominators():
    assert to_integer_vec({0: Fraction(1, 2), 1: Fraction(1, 3)}) == {0: 3,
                                                                      1: 2}
    assert to_integer_vec({0: Fraction(0)}) == {}
    assert to_integer_vec({0: Fraction(2), 1: Fraction(4)}) == {0: 1, 1: 2}


def test_fp_echelon():
    ech = SparseEchelon(F11)
    assert ech.insert({0: F11(3), 1: F11(1)})
    assert ech.insert({1: F11(5)})
    assert ech.rank == 2
    assert ech.contains({0: F11(7), 1: F11(9)})
