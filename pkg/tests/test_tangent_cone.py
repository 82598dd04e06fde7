import pytest

from genpos.errors import StabilizationError
from genpos.fixtures import (germ_branch_curve, germ_components,
                             germ_membership_query, tangent_point_set,
                             unity_field)
from genpos.groebner import Ideal
from genpos.points import hilbert_function
from genpos.poly import Polynomial
from genpos.scalars import QQ, PrimeField
from genpos.tangent_cone import (Branch, BranchCurve, branch_tangent_points,
                                 cone_profile, cone_profile_auto,
                                 germ_profile, lowest_form_ideal,
                                 subalgebra_member)

F11 = PrimeField(11)


def tvar(field=QQ):
    return Polynomial.variable(0, 1, field)


def xyvars():
    return [Polynomial.variable(i, 2, QQ) for i in range(2)]


def test_branch_validation():
    t = tvar()
    with pytest.raises(ValueError):
        Branch((t + 1, t))  # constant term
    with pytest.raises(ValueError):
        Branch((Polynomial.zero(1, QQ), Polynomial.zero(1, QQ)))
    x, y = xyvars()
    with pytest.raises(ValueError):
        Branch((x, y))  # not univariate
    b = Branch((t, t ** 2))
    assert b.order == 1
    assert b.tangent_vector() == (QQ(1), QQ(0))
    assert Branch((t ** 2, t ** 3)).order == 2


def test_branch_tangent_points():
    t = tvar()
    curve = BranchCurve(1, QQ, (Branch((t, t ** 2)), Branch((t, t))))
    X = branch_tangent_points(curve)
    assert X.points == ((QQ(1), QQ(0)), (QQ(1), QQ(1)))

    singular = BranchCurve(1, QQ, (Branch((t ** 2, t ** 3)),))
    with pytest.raises(ValueError, match="order 2"):
        branch_tangent_points(singular)

    doubled = BranchCurve(1, QQ, (Branch((t, t ** 2)), Branch((t, t ** 3))))
    with pytest.raises(ValueError, match="coincident"):
        branch_tangent_points(doubled)


def test_germ_curve_tangents_match_fixture_points():
    curve = germ_branch_curve()
    X = branch_tangent_points(curve)
    assert set(X.points) == set(tangent_point_set().points)
    assert len(curve.branches) == 6


def test_lowest_form_ideal_cusp():
    x, y = xyvars()
    tr = lowest_form_ideal(Ideal.of(y ** 2 - x ** 3), 6)
    assert [f.text() for f in tr.slices[2]] == ["x1^2"]
    assert tr.slice_dim(0) == 0 and tr.slice_dim(1) == 0
    assert tr.slice_dim(3) == 2  # x0*x1^2 and x1^3


def test_lowest_form_ideal_hidden_low_form():
    # x*(y^2 - x^5) - y*(x*y) = -x^6: the degree-6 slice must pick it up
    x, y = xyvars()
    tr = lowest_form_ideal(Ideal.of(x * y, y ** 2 - x ** 5), 6)
    assert [f.text() for f in tr.slices[2]] == ["x0*x1", "x1^2"]
    texts = [f.text() for f in tr.slices[6]]
    assert "x0^6" in texts


def test_cone_profile_principal_and_cusp():
    x, y = xyvars()
    smooth = cone_profile(lowest_form_ideal(Ideal.of(x), 6))
    assert smooth.values == (1,) * 7
    assert smooth.multiplicity == 1

    cusp = cone_profile(lowest_form_ideal(Ideal.of(y ** 2 - x ** 3), 8))
    assert cusp.values == (1, 2, 2, 2, 2, 2, 2, 2, 2)
    assert cusp.multiplicity == 2
    assert cusp.emdim == 2
    assert cusp.stabilization_degree == 1
    assert cusp.as_dict()["multiplicity"] == 2


def test_cone_profile_needs_stable_tail():
    x, y = xyvars()
    cusp = Ideal.of(y ** 2 - x ** 3)
    with pytest.raises(StabilizationError):
        cone_profile(lowest_form_ideal(cusp, 2))
    # the automatic variant doubles the bound and succeeds
    prof = cone_profile_auto(cusp, bound=2)
    assert prof.values[-1] == 2
    with pytest.raises(StabilizationError):
        cone_profile_auto(cusp, bound=2, retries=0)


def test_cone_matches_point_hilbert_function():
    # a cone over points has the graded dimensions of the point set
    from genpos.points import PointSet
    x, y, z = [Polynomial.variable(i, 3, QQ) for i in range(3)]
    prof = cone_profile(lowest_form_ideal(Ideal.of(x * y, x * z, y * z), 8))
    X = PointSet.of(2, QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert prof.values == tuple(hilbert_function(X, d) for d in range(9))

    u, v = xyvars()
    p = u * v * (u + v) * (u - v)
    prof = cone_profile(lowest_form_ideal(Ideal.of(p), 9))
    Y = PointSet.of(1, QQ, [[1, 0], [0, 1], [1, -1], [1, 1]])
    assert prof.values == tuple(hilbert_function(Y, d) for d in range(10))


def test_cone_profile_presentation_independent():
    # unit factors at the origin do not change the germ
    x, y = xyvars()
    g = y ** 2 - x ** 3
    a = cone_profile(lowest_form_ideal(Ideal.of(g), 8))
    b = cone_profile(lowest_form_ideal(Ideal.of(g * (1 + x), g * (1 + g)), 8))
    assert a == b


def test_subalgebra_member_cusp():
    t = tvar()
    gens = (t ** 2, t ** 3)
    assert subalgebra_member(t ** 2, gens, 10)
    assert subalgebra_member(t ** 7, gens, 10)
    assert not subalgebra_member(t, gens, 10)
    assert not subalgebra_member(t ** 7, gens, 10, min_degree=4)
    with pytest.raises(ValueError, match="window"):
        subalgebra_member(t ** 12, gens, 10)


def test_subalgebra_member_validates_gens():
    t = tvar()
    with pytest.raises(ValueError):
        subalgebra_member(t, (), 5)
    with pytest.raises(ValueError):
        subalgebra_member(t, (t + 1,), 5)
    x, y = xyvars()
    with pytest.raises(ValueError):
        subalgebra_member(t, (x,), 5)


def test_germ_membership_query_frozen():
    query, window, min_factors = germ_membership_query()
    assert query.text(names=("t",)) == "t^22 + 8*t^17 + 3*t^12 + 10*t^7"
    gens = germ_components(unity_field())
    # outside the cube of the maximal ideal at two window sizes, inside m
    assert not subalgebra_member(query, gens, window, min_degree=min_factors)
    assert not subalgebra_member(query, gens, window + 10,
                                 min_degree=min_factors)
    assert subalgebra_member(query, gens, window)


def test_germ_profile_frozen():
    for field in (QQ, unity_field()):
        prof = germ_profile(germ_components(field))
        assert prof.values == (1, 3, 5, 5, 6, 6, 6)
        assert prof.multiplicity == 6
        assert prof.emdim == 3
        assert prof.stabilization_degree == 4


def test_germ_profile_cusp():
    t = tvar()
    prof = germ_profile((t ** 2, t ** 3))
    assert prof.values == (1, 2, 2, 2, 2, 2, 2)
    assert prof.multiplicity == 2
    assert prof.emdim == 2


def test_germ_profile_validation_and_drift():
    t = tvar()
    with pytest.raises(ValueError):
        germ_profile((t + 1,))
    with pytest.raises(StabilizationError):
        germ_profile(germ_components(), degree_cap=3, grow_steps=2)
