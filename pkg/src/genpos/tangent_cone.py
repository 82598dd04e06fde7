"""Tangent cones of curve germs at the origin.

Three routes into the same graded object:
  * lowest_form_ideal turns a polynomial ideal into its ideal of initial
    (lowest-degree) forms, exactly up to a degree bound, by row-reducing the
    span of Groebner-basis multiples with columns sorted by ascending degree;
    a degree-compatible basis spans the ideal degreewise, so the truncation
    loses nothing below the bound.
  * germ_profile reads the graded dimensions dim m^n / m^(n+1) straight off a
    parameterized curve's coordinate subalgebra, as rank differences of nested
    degree-windowed spans of power products of the parameterization
    components, growing the window until the values hold still.
  * branch_tangent_points extracts the tangent directions of a branch
    decomposition; for a germ with smooth branches these are the points whose
    count is the multiplicity.
"""

from dataclasses import dataclass

from .errors import StabilizationError
from .linalg import IntegerEchelon, SparseEchelon, to_integer_vec
from .points import PointSet, binom, normalize_point
from .poly import DEGREVLEX, Polynomial, mono_deg, monomials_up_to
from .scalars import QQ


@dataclass(frozen=True)
class Branch:
    """One branch: r+1 univariate components in the local parameter, no constant term."""

    components: tuple

    def __post_init__(self):
        for c in self.components:
            if c.nvars != 1:
                raise ValueError("branch components must be univariate")
            if (0,) in c.terms:
                raise ValueError("branch components must vanish at the origin")
        if all(c.is_zero() for c in self.components):
            raise ValueError("branch with all components zero")

    @property
    def order(self):
        return min(c.low_degree() for c in self.components if not c.is_zero())

    def tangent_vector(self):
        field = next(c for c in self.components if not c.is_zero()).field
        return tuple(c.terms.get((1,), field.zero) for c in self.components)


@dataclass(frozen=True)
class BranchCurve:
    """A curve germ given by its branch decomposition."""

    r: int
    field: object
    branches: tuple


def branch_tangent_points(curve):
    """Tangent directions of the branches as a point set of P^r.

    Requires every branch to have order 1 (smooth branches) and the tangent
    directions to be pairwise distinct; then the point count is the
    multiplicity of the germ.
    """
    pts = []
    for i, b in enumerate(curve.branches):
        if b.order != 1:
            raise ValueError("branch %d has order %d, not 1" % (i, b.order))
        pts.append(normalize_point(b.tangent_vector(), curve.field))
    if len(set(pts)) != len(pts):
        raise ValueError("coincident tangent directions")
    return PointSet(curve.r, curve.field, tuple(pts))


@dataclass(frozen=True)
class TruncatedGradedIdeal:
    """Degreewise slices of an ideal of initial forms, valid up to `bound`."""

    nvars: int
    field: object
    bound: int
    slices: dict  # degree -> tuple of homogeneous Polynomials, echelonized

    def slice_dim(self, d):
        return len(self.slices.get(d, ()))


def lowest_form_ideal(ideal, bound):
    """Ideal of initial forms of `ideal` at the origin, degreewise to `bound`.

    Works modulo terms of degree > bound: a degree-compatible basis spans the
    ideal in each total degree, so the truncations of the multiples m*g with
    deg(m) + lowdeg(g) <= bound span the ideal's image mod that power of the
    maximal ideal, and truncation never touches a lowest form of degree
    <= bound. Echelonizing over columns sorted by ascending degree then makes
    slice d exactly the degree-d parts of the pivot rows leading in degree d.
    """
    gb = ideal.groebner_basis(DEGREVLEX)
    monos = monomials_up_to(ideal.nvars, bound)
    index = {m: i for i, m in enumerate(monos)}
    ech = SparseEchelon(ideal.field)
    for g in gb:
        low = g.low_degree()
        if low > bound:
            continue
        for m in monomials_up_to(ideal.nvars, bound - low):
            row = {}
            for mg, c in g.terms.items():
                mm = tuple(a + b for a, b in zip(m, mg))
                if mono_deg(mm) <= bound:
                    row[index[mm]] = c
            ech.insert(row)
    slices = {}
    for lead in sorted(ech.pivots):
        row = ech.pivots[lead]
        d = mono_deg(monos[lead])
        terms = {monos[c]: v for c, v in row.items() if mono_deg(monos[c]) == d}
        form = Polynomial(ideal.nvars, ideal.field, terms)
        slices.setdefault(d, []).append(form)
    return TruncatedGradedIdeal(ideal.nvars, ideal.field, bound,
                                {d: tuple(fs) for d, fs in slices.items()})


@dataclass(frozen=True)
class ConeProfile:
    """Graded dimensions H(d) of a tangent cone, with the stabilized reading."""

    values: tuple
    stabilization_degree: int
    multiplicity: int
    emdim: int

    def as_dict(self):
        return {
            "values": list(self.values),
            "stabilization_degree": self.stabilization_degree,
            "multiplicity": self.multiplicity,
            "emdim": self.emdim,
        }


def _stabilized(values, context):
    d0 = len(values) - 1
    while d0 > 0 and values[d0 - 1] == values[-1]:
        d0 -= 1
    if len(values) - d0 < 3:
        raise StabilizationError(
            "%s did not stabilize within the bound (values %s); raise the bound"
            % (context, list(values)))
    return d0


def cone_profile(truncated):
    """H(d) = C(d + n - 1, n - 1) - dim slice_d, with stabilization detection."""
    n = truncated.nvars
    values = tuple(binom(d + n - 1, n - 1) - truncated.slice_dim(d)
                   for d in range(truncated.bound + 1))
    d0 = _stabilized(values, "cone profile")
    return ConeProfile(values=values, stabilization_degree=d0,
                       multiplicity=values[-1],
                       emdim=values[1] if len(values) > 1 else 0)


def cone_profile_auto(ideal, bound=8, retries=2):
    """cone_profile with automatic doubling of the bound on non-stabilization."""
    while True:
        try:
            return cone_profile(lowest_form_ideal(ideal, bound))
        except StabilizationError:
            if retries <= 0:
                raise
            retries -= 1
            bound *= 2


def _dict_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e)
            s = ca * cb if s is None else s + ca * cb
            out[e] = s
    return {e: c for e, c in out.items() if c}


def _power_products(gens, cap):
    """Power products of the generators with polynomial degree <= cap, each
    once, as (factor count, coefficient dict) pairs. Degrees add, so pruning
    on the exact degree makes the tree finite; products are never truncated.
    """
    vecs = [({e[0]: c for e, c in g.terms.items()}, g.degree()) for g in gens]
    out = []

    def rec(i0, cur, deg, count):
        out.append((count, cur))
        for i in range(i0, len(vecs)):
            v, d = vecs[i]
            if deg + d <= cap:
                rec(i, _dict_mul(cur, v), deg + d, count + 1)

    rec(0, {0: gens[0].field.one}, 0, 0)
    return out


def _check_subalgebra_gens(gens):
    if not gens:
        raise ValueError("need at least one generator")
    for g in gens:
        if g.nvars != 1:
            raise ValueError("generators must be univariate")
        if g.is_zero() or (0,) in g.terms:
            raise ValueError("generators must be nonzero with zero constant term")


def _echelon_for(field):
    if field == QQ:
        return IntegerEchelon(), to_integer_vec
    return SparseEchelon(field), (lambda v: v)


def subalgebra_member(p, gens, bound, min_degree=1):
    """Whether p lies in the span of the power products of the generators that
    use at least min_degree factors and have polynomial degree <= bound.

    Exact row reduction over that finite spanning set: min_degree 1 windows
    the maximal ideal of the generated subalgebra, min_degree 3 its cube.
    True always exhibits a combination, hence certifies ideal membership;
    False is exact for the degree window.
    """
    _check_subalgebra_gens(gens)
    if p.nvars != 1:
        raise ValueError("query must be univariate")
    if p.degree() > bound:
        raise ValueError("degree window %d smaller than deg p = %d"
                         % (bound, p.degree()))
    ech, conv = _echelon_for(p.field)
    for count, vec in _power_products(gens, bound):
        if count >= min_degree:
            ech.insert(conv(dict(vec)))
    query = conv({e[0]: c for e, c in p.terms.items()})
    return ech.contains(query)


def _germ_values(gens, cap, max_degree):
    buckets = {}
    for count, vec in _power_products(gens, cap):
        buckets.setdefault(count, []).append(vec)
    top = max(buckets)
    ech, conv = _echelon_for(gens[0].field)
    # levels the window cannot reach span nothing yet
    dims = {n: 0 for n in range(top + 1, max_degree + 2)}
    for level in range(top, 0, -1):
        for vec in buckets.get(level, ()):
            ech.insert(conv(dict(vec)))
        dims[level] = ech.rank
    return tuple([1] + [dims[n] - dims[n + 1]
                        for n in range(1, max_degree + 1)])


def germ_profile(gens, max_degree=6, degree_cap=None, grow_steps=8):
    """Graded dimensions dim m^n / m^(n+1) of the subalgebra generated by
    `gens`, where m is the ideal the generators span in it.

    m^n is the field-span of the power products with at least n factors, so
    each H(n) is a difference of ranks of nested degree-windowed spans. The
    window grows until the whole profile holds still for three consecutive
    windows; drifting values raise StabilizationError rather than being
    reported.
    """
    _check_subalgebra_gens(gens)
    maxdeg = max(g.degree() for g in gens)
    cap = degree_cap or maxdeg * (max_degree + 3)
    history = []
    for _ in range(grow_steps):
        history.append(_germ_values(gens, cap, max_degree))
        if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
            values = history[-1]
            d0 = _stabilized(values, "germ profile")
            return ConeProfile(values=values, stabilization_degree=d0,
                               multiplicity=values[-1], emdim=values[1])
        cap += maxdeg
    raise StabilizationError(
        "germ profile kept drifting as the degree window grew: %s"
        % [list(v) for v in history])
