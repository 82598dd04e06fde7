"""Deterministic Buchberger engine and ideal operations built on it.

Pair selection is the normal strategy (smallest lcm degree), ties broken by
pair creation index, so runs are reproducible. Both classic Buchberger
criteria prune pairs; the chain criterion only trusts pairs that were
actually processed, never pairs it skipped itself, which avoids the circular
variant of that optimization. Resource caps raise BudgetExceededError.
"""

from .errors import BudgetExceededError
from .linalg import SparseEchelon
from .poly import (DEGREVLEX, BlockOrder, Polynomial, mono_deg, mono_div,
                   mono_divides, mono_lcm, mono_mul, monomials_up_to)

DEFAULT_MAX_BASIS = 500
DEFAULT_MAX_PAIRS = 50000


def spolynomial(f, g, order):
    """S-polynomial of f and g."""
    lmf, lmg = f.leading_monomial(order), g.leading_monomial(order)
    l = mono_lcm(lmf, lmg)
    mf = Polynomial.monomial(mono_div(l, lmf), f.nvars, f.field,
                             f.field.one / f.leading_coefficient(order))
    mg = Polynomial.monomial(mono_div(l, lmg), g.nvars, g.field,
                             g.field.one / g.leading_coefficient(order))
    return mf * f - mg * g


def normal_form(f, basis, order):
    """Remainder of f under full multivariate division by `basis`."""
    if f.is_zero() or not basis:
        return f
    lm_basis = [(g.leading_monomial(order), g) for g in basis if not g.is_zero()]
    field = f.field
    work = dict(f.terms)
    remainder = {}
    while work:
        lm = max(work, key=order.key)
        lc = work[lm]
        for lmg, g in lm_basis:
            if mono_divides(lmg, lm):
                factor = lc / g.leading_coefficient(order)
                shift = mono_div(lm, lmg)
                for m, c in g.terms.items():
                    mm = mono_mul(m, shift)
                    s = work.get(mm, field.zero) - factor * c
                    if s == field.zero:
                        work.pop(mm, None)
                    else:
                        work[mm] = s
                break
        else:
            remainder[lm] = lc
            del work[lm]
    return Polynomial(f.nvars, field, remainder)


def buchberger(gens, order=DEGREVLEX, max_basis=None, max_pairs=None):
    """Reduced Groebner basis of the given generators.

    Budgets default to the module-level DEFAULT_* values at call time, so a
    front end can raise them globally for one process.
    """
    if max_basis is None:
        max_basis = DEFAULT_MAX_BASIS
    if max_pairs is None:
        max_pairs = DEFAULT_MAX_PAIRS
    basis = [g.monic(order) for g in gens if not g.is_zero()]
    if not basis:
        return ()
    lms = [g.leading_monomial(order) for g in basis]

    pairs = {}
    seq = 0
    processed = set()

    def push_pairs(j):
        nonlocal seq
        for i in range(j):
            l = mono_lcm(lms[i], lms[j])
            pairs[(i, j)] = (mono_deg(l), seq)
            seq += 1

    for j in range(len(basis)):
        push_pairs(j)

    handled = 0
    while pairs:
        (i, j) = min(pairs, key=lambda k: pairs[k])
        del pairs[(i, j)]
        handled += 1
        if handled > max_pairs:
            raise BudgetExceededError("pair budget %d exceeded" % max_pairs)
        l = mono_lcm(lms[i], lms[j])
        if l == mono_mul(lms[i], lms[j]):
            processed.add((i, j))  # coprime leading terms
            continue
        chain = False
        for k in range(len(basis)):
            if k in (i, j) or not mono_divides(lms[k], l):
                continue
            if (min(i, k), max(i, k)) in processed and (min(j, k), max(j, k)) in processed:
                chain = True
                break
        if chain:
            continue
        s = normal_form(spolynomial(basis[i], basis[j], order), basis, order)
        processed.add((i, j))
        if s.is_zero():
            continue
        basis.append(s.monic(order))
        lms.append(basis[-1].leading_monomial(order))
        if len(basis) > max_basis:
            raise BudgetExceededError("basis budget %d exceeded" % max_basis)
        push_pairs(len(basis) - 1)

    # minimalize: drop elements whose leading monomial another one divides
    keep = []
    for i, g in enumerate(basis):
        if not any(j != i and mono_divides(lms[j], lms[i])
                   and (lms[j] != lms[i] or j < i) for j in range(len(basis))):
            keep.append(g)
    # interreduce to the unique reduced basis
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(g, others, order)
        if not r.is_zero():
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return tuple(reduced)


class Ideal:
    """Polynomial ideal with cached reduced bases per monomial order."""

    def __init__(self, nvars, field, gens):
        self.nvars = nvars
        self.field = field
        self.gens = tuple(g for g in gens if not g.is_zero())
        for g in self.gens:
            if g.nvars != nvars or g.field != field:
                raise ValueError("generator in the wrong ring")
        self._bases = {}

    @classmethod
    def of(cls, *gens):
        if len(gens) == 1 and not hasattr(gens[0], "nvars"):
            gens = tuple(gens[0])
        if not gens:
            raise ValueError("need at least one generator to infer the ring")
        return cls(gens[0].nvars, gens[0].field, gens)

    def groebner_basis(self, order=DEGREVLEX, max_basis=None, max_pairs=None):
        got = self._bases.get(order)
        if got is None:
            got = buchberger(self.gens, order, max_basis, max_pairs)
            self._bases[order] = got
        return got

    def __repr__(self):
        return "Ideal(%s)" % ", ".join(g.text() for g in self.gens)


def ideal_member(f, ideal, order=DEGREVLEX):
    if f.is_zero():
        return True
    gb = ideal.groebner_basis(order)
    return normal_form(f, gb, order).is_zero()


def ideal_equal(a, b, order=DEGREVLEX):
    return (all(ideal_member(g, b, order) for g in a.gens)
            and all(ideal_member(g, a, order) for g in b.gens))


def _shift_vars(p, offset, nvars):
    """Reinterpret p in a ring with `offset` new leading variables."""
    terms = {(0,) * offset + m + (0,) * (nvars - offset - p.nvars): c
             for m, c in p.terms.items()}
    return Polynomial(nvars, p.field, terms)


def ideal_intersect(a, b):
    """Intersection of two ideals via one auxiliary variable and elimination."""
    if a.nvars != b.nvars or a.field != b.field:
        raise ValueError("ideals in different rings")
    n = a.nvars + 1
    field = a.field
    u = Polynomial.variable(0, n, field)
    one = Polynomial.constant(field.one, n, field)
    gens = [u * _shift_vars(g, 1, n) for g in a.gens]
    gens += [(one - u) * _shift_vars(g, 1, n) for g in b.gens]
    gb = buchberger(gens, BlockOrder(split=1))
    out = []
    for g in gb:
        if all(m[0] == 0 for m in g.terms):
            out.append(Polynomial(a.nvars, field,
                                  {m[1:]: c for m, c in g.terms.items()}))
    return Ideal(a.nvars, field, out)


def divide_exact(f, g, order=DEGREVLEX):
    """Quotient of f by g when the division is exact; errors otherwise."""
    q = Polynomial.zero(f.nvars, f.field)
    r = f
    while not r.is_zero():
        lm = r.leading_monomial(order)
        lmg = g.leading_monomial(order)
        if not mono_divides(lmg, lm):
            raise ValueError("division is not exact")
        t = Polynomial.monomial(mono_div(lm, lmg), f.nvars, f.field,
                                r.leading_coefficient(order) / g.leading_coefficient(order))
        q = q + t
        r = r - t * g
    return q


def ideal_quotient(ideal, f):
    """(ideal : f) for a single nonzero polynomial f."""
    if f.is_zero():
        raise ValueError("quotient by the zero polynomial")
    fi = Ideal(ideal.nvars, ideal.field, [f])
    inter = ideal_intersect(ideal, fi)
    return Ideal(ideal.nvars, ideal.field,
                 [divide_exact(g, f) for g in inter.gens])


def saturation(ideal, f):
    """(ideal : f^infinity) together with the stabilization exponent."""
    cur = ideal
    k = 0
    while True:
        nxt = ideal_quotient(cur, f)
        if ideal_equal(nxt, cur):
            return cur, k
        cur = nxt
        k += 1


def ideal_power(ideal, m):
    """m-th power; the zeroth power is the unit ideal."""
    if m < 0:
        raise ValueError("negative ideal power")
    field = ideal.field
    if m == 0:
        return Ideal(ideal.nvars, field,
                     [Polynomial.constant(field.one, ideal.nvars, field)])
    from itertools import combinations_with_replacement
    gens = []
    for combo in combinations_with_replacement(ideal.gens, m):
        p = combo[0]
        for q in combo[1:]:
            p = p * q
        gens.append(p)
    return Ideal(ideal.nvars, field, gens)


def truncated_membership(f, gens, bound):
    """Whether f lies in the span of {m*g : deg(m*g) <= bound} by row reduction.

    Independent of the Buchberger engine; used as a cross-check oracle. A True
    answer certifies membership; for small bounds a False answer only says no
    witness exists within the truncation.
    """
    if f.degree() > bound:
        raise ValueError("bound %d smaller than deg f = %d" % (bound, f.degree()))
    field = f.field
    index = {m: i for i, m in enumerate(monomials_up_to(f.nvars, bound))}
    ech = SparseEchelon(field)
    for g in gens:
        if g.is_zero():
            continue
        dg = g.degree()
        for m in monomials_up_to(f.nvars, bound - dg):
            row = {}
            for mg, c in g.terms.items():
                row[index[mono_mul(m, mg)]] = c
            ech.insert(row)
    vec = {index[m]: c for m, c in f.terms.items()}
    return ech.contains(vec)
