from fractions import Fraction

import pytest

from genpos.fixtures import germ_branch_curve, tangent_point_set
from genpos.groebner import Ideal
from genpos.points import PointSet
from genpos.poly import Polynomial
from genpos.scalars import QQ, PrimeField
from genpos.serialize import (canonical_json, curve_from_json, curve_to_json,
                              field_from_json, field_to_json,
                              ideal_from_json, ideal_to_json,
                              point_set_from_json, point_set_to_json,
                              scalar_to_str)

F11 = PrimeField(11)


def test_canonical_json_bytes():
    out = canonical_json({"b": 1, "a": [2, 3]})
    assert out == '{\n  "a": [\n    2,\n    3\n  ],\n  "b": 1\n}\n'
    assert canonical_json({"a": 1, "b": 1}) == canonical_json(
        {"b": 1, "a": 1})


def test_field_round_trip():
    assert field_to_json(QQ) == "Q"
    assert field_to_json(F11) == {"p": 11}
    assert field_from_json("Q") is QQ
    assert field_from_json(None) is QQ
    assert field_from_json({"p": 11}) == F11
    with pytest.raises(ValueError, match="unrecognized"):
        field_from_json({"q": 11})
    with pytest.raises(ValueError):
        field_from_json("R")


def test_scalar_to_str():
    assert scalar_to_str(Fraction(-1, 2)) == "-1/2"
    assert scalar_to_str(Fraction(3)) == "3"
    assert scalar_to_str(F11(7)) == "7 mod 11"


def test_point_set_round_trip():
    for X in (tangent_point_set(),
              PointSet.of(1, QQ, [[1, Fraction(1, 2)], [0, 1]])):
        obj = point_set_to_json(X)
        assert point_set_from_json(obj) == X
    # integer coordinates are accepted on input
    X = point_set_from_json({"r": 1, "points": [[1, 2], [1, 3]]})
    assert X.field is QQ and X.e == 2


def test_curve_round_trip():
    C = germ_branch_curve()
    obj = curve_to_json(C)
    assert curve_from_json(obj) == C
    with pytest.raises(ValueError, match="components"):
        curve_from_json({"r": 2, "field": {"p": 11},
                         "branches": [["t", "t^2"]]})


def test_ideal_round_trip():
    x, y = [Polynomial.variable(i, 2, QQ) for i in range(2)]
    I = Ideal.of(x ** 2 - y, x * y - 1)
    obj = ideal_to_json(I)
    assert "field" not in obj  # rationals are the default
    J = ideal_from_json(obj)
    assert J.nvars == 2 and J.gens == I.gens

    w = Polynomial.variable(0, 1, F11)
    K = Ideal(1, F11, [w ** 2 + 1])
    back = ideal_from_json(ideal_to_json(K))
    assert back.field == F11 and back.gens == K.gens
