"""JSON formats for point sets, branch curves, ideals, and certificates.

All output goes through canonical_json so byte-identical reruns are possible:
sorted keys, two-space indent, trailing newline.
"""

import json
from fractions import Fraction

from .poly import parse_polynomial
from .points import PointSet
from .scalars import QQ, FpElement, PrimeField
from .tangent_cone import Branch, BranchCurve


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def field_to_json(field):
    if field is QQ:
        return "Q"
    return {"p": field.p}


def field_from_json(obj):
    if obj == "Q" or obj is None:
        return QQ
    if isinstance(obj, dict) and set(obj) == {"p"}:
        return PrimeField(obj["p"])
    raise ValueError("unrecognized field descriptor: %r" % (obj,))


def scalar_to_str(x):
    if isinstance(x, FpElement):
        return "%d mod %d" % (x.val, x.p)
    x = Fraction(x)
    return str(x)


def point_set_to_json(X):
    return {
        "field": field_to_json(X.field),
        "r": X.r,
        "points": [[scalar_to_str(c) for c in p] for p in X.points],
    }


def point_set_from_json(obj):
    field = field_from_json(obj.get("field"))
    r = obj["r"]
    points = [[field.parse(c) if isinstance(c, str) else field(c)
               for c in row] for row in obj["points"]]
    return PointSet.of(r, field, points)


def curve_to_json(C):
    return {
        "field": field_to_json(C.field),
        "r": C.r,
        "branches": [[comp.text(names=("t",)) for comp in B.components]
                     for B in C.branches],
    }


def curve_from_json(obj):
    field = field_from_json(obj.get("field"))
    r = obj["r"]
    branches = []
    for comps in obj["branches"]:
        if len(comps) != r + 1:
            raise ValueError("branch needs %d components, got %d"
                             % (r + 1, len(comps)))
        branches.append(Branch(tuple(
            parse_polynomial(c, 1, field, names=("t",)) for c in comps)))
    return BranchCurve(r=r, field=field, branches=tuple(branches))


def ideal_to_json(I):
    out = {
        "vars": I.nvars,
        "gens": [g.text() for g in I.gens],
    }
    if I.field is not QQ:
        out["field"] = field_to_json(I.field)
    return out


def ideal_from_json(obj):
    from .groebner import Ideal
    field = field_from_json(obj.get("field"))
    nvars = obj["vars"]
    gens = [parse_polynomial(s, nvars, field) for s in obj["gens"]]
    return Ideal(nvars, field, gens)


def load_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(obj))
