"""Command-line front end: JSON models in, human report plus certificate out.

Subcommands:
  points-check        genericity of a point set (optionally of every t-subset)
  conductor           conductor formula vs brute-force oracle for one of four
                      model kinds: points, semigroup, monomial-algebra,
                      arrangement
  tangent-cone        graded profile of a singularity, from a branch
                      decomposition, a parametrization, or an ideal
  reproduce-examples  run the bundled example suite against golden outputs

Exit codes: 0 positive result (generic / match / all reproduced), 1 negative
result (not generic / mismatch / golden divergence), 2 error, 3 a conductor
hypothesis failed.

Environment variables GENPOS_MAX_BASIS, GENPOS_MAX_PAIRS and
GENPOS_SUBSET_BUDGET change the default budgets; flags beat the environment.
"""

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import __version__
from . import fixtures as fx
from . import groebner
from .conductor import (arrangement_certificate, monomial_conductor_certificate,
                        points_conductor_certificate, points_conductor_sigma,
                        semigroup_certificate, symbolic_power)
from .errors import BudgetExceededError, StabilizationError
from .groebner import Ideal, ideal_equal, ideal_power
from .points import (DEFAULT_SUBSET_BUDGET, is_generic_position,
                     is_generic_t_position, nu, random_point_set)
from .poly import Polynomial, parse_polynomial
from .scalars import QQ, PrimeField
from .serialize import (canonical_json, curve_from_json, field_from_json,
                        ideal_from_json, load_json, point_set_from_json,
                        point_set_to_json)
from .tangent_cone import (branch_tangent_points, cone_profile_auto,
                           germ_profile, subalgebra_member)


@dataclass
class RunConfig:
    command: str
    inputs: tuple = ()
    field: object = None        # JSON field descriptor override, or None
    degree_bound: object = None
    box: object = None
    subset_budget: int = DEFAULT_SUBSET_BUDGET
    seed: int = 0
    jobs: int = 1
    json_out: object = None
    t: object = None
    only: object = None
    write_golden: bool = False
    golden_dir: object = None
    max_basis: int = groebner.DEFAULT_MAX_BASIS
    max_pairs: int = groebner.DEFAULT_MAX_PAIRS

    def validate(self):
        for name in ("subset_budget", "jobs", "max_basis", "max_pairs"):
            if getattr(self, name) < 1:
                raise ValueError("%s must be positive" % name)
        for name in ("degree_bound", "box", "t"):
            v = getattr(self, name)
            if v is not None and v < 1:
                raise ValueError("%s must be positive" % name)


def _env_int(name, fallback):
    raw = os.environ.get(name)
    if raw in (None, ""):
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise ValueError("%s must be an integer, got %r" % (name, raw))


def parse_field_spec(s):
    s = s.strip()
    if s.upper() in ("Q", "QQ"):
        return "Q"
    if s.isdigit():
        return {"p": int(s)}
    raise ValueError("--field expects Q or a prime, got %r" % s)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="genpos",
        description="Exact genericity, tangent-cone, and conductor checks.")
    parser.add_argument("--version", action="version",
                        version="genpos " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs=True):
        if inputs:
            p.add_argument("inputs", nargs="+", metavar="INPUT",
                           help="input JSON file(s)")
        p.add_argument("--field", default=None,
                       help="override the input's coefficient field: Q or a prime")
        p.add_argument("--degree-bound", type=int, default=None,
                       help="degree window / truncation bound override")
        p.add_argument("--box", type=int, default=None,
                       help="lattice box for monomial-algebra models")
        p.add_argument("--subset-budget", type=int, default=None,
                       help="cap on the number of t-subsets to check")
        p.add_argument("--seed", type=int, default=0,
                       help="seed recorded in certificates and used by "
                            "randomized suites")
        p.add_argument("--jobs", type=int, default=1,
                       help="run independent certificates concurrently")
        p.add_argument("--json-out", default=None,
                       help="write the certificate JSON here instead of stdout")

    p = sub.add_parser("points-check",
                       help="certify generic (t-)position of a point set")
    common(p)
    p.add_argument("--t", type=int, default=None,
                   help="check every t-point subset instead of the full set")

    common(sub.add_parser("conductor",
                          help="check a conductor formula against its oracle"))
    common(sub.add_parser("tangent-cone",
                          help="graded profile of a curve singularity"))

    p = sub.add_parser("reproduce-examples",
                       help="run the bundled example suite against goldens")
    common(p, inputs=False)
    p.add_argument("--only", default=None,
                   help="run only example ids containing this substring")
    p.add_argument("--write-golden", action="store_true",
                   help="record current outputs as the golden files")
    p.add_argument("--golden-dir", default=None,
                   help="directory of golden files (default: bundled)")
    return parser


def config_from_args(args):
    subset = args.subset_budget
    if subset is None:
        subset = _env_int("GENPOS_SUBSET_BUDGET", DEFAULT_SUBSET_BUDGET)
    return RunConfig(
        command=args.command,
        inputs=tuple(getattr(args, "inputs", ()) or ()),
        field=None if args.field is None else parse_field_spec(args.field),
        degree_bound=args.degree_bound,
        box=args.box,
        subset_budget=subset,
        seed=args.seed,
        jobs=args.jobs,
        json_out=args.json_out,
        t=getattr(args, "t", None),
        only=getattr(args, "only", None),
        write_golden=getattr(args, "write_golden", False),
        golden_dir=getattr(args, "golden_dir", None),
        max_basis=_env_int("GENPOS_MAX_BASIS", groebner.DEFAULT_MAX_BASIS),
        max_pairs=_env_int("GENPOS_MAX_PAIRS", groebner.DEFAULT_MAX_PAIRS))


def envelope(cfg):
    """Reproducibility header embedded in every emitted certificate."""
    return {
        "tool": "genpos",
        "tool_version": __version__,
        "seed": cfg.seed,
        "budgets": {
            "degree_bound": cfg.degree_bound,
            "box": cfg.box,
            "subset_budget": cfg.subset_budget,
            "max_basis": cfg.max_basis,
            "max_pairs": cfg.max_pairs,
        },
    }


def emit_json(cfg, payload):
    text = canonical_json(payload)
    if cfg.json_out:
        with open(cfg.json_out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _combine(codes):
    if any(c == 2 for c in codes):
        return 2
    return max(codes, default=0)


def run_batch(cfg, one):
    """Run `one` over every input path; print reports in input order."""
    if cfg.jobs > 1 and len(cfg.inputs) > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(one, cfg.inputs))
    else:
        results = [one(path) for path in cfg.inputs]
    payloads = []
    codes = []
    for code, lines, payload in results:
        for line in lines:
            print(line)
        codes.append(code)
        payloads.append(payload)
    emit_json(cfg, payloads[0] if len(payloads) == 1 else payloads)
    return _combine(codes)


# ------------------------------------------------------------ points-check

def cmd_points_check(cfg):
    def one(path):
        obj = load_json(path)
        if cfg.field is not None:
            obj = dict(obj, field=cfg.field)
        X = point_set_from_json(obj)
        if cfg.t is None:
            cert = is_generic_position(X)
            label = "generic position"
        else:
            cert = is_generic_t_position(X, cfg.t, cfg.subset_budget)
            label = "generic %d-position" % cfg.t
        lines = ["%d points of P^%d over %s" % (X.e, X.r, X.field)]
        if cert.generic:
            lines.append("%s: yes (degrees checked: 0..%d)"
                         % (label, cert.checked_degrees[-1]))
        else:
            lines.append("%s: NO (failing degree %d)"
                         % (label, cert.failing_degree))
            lines.append("witness hypersurface: %s" % cert.witness.text())
            if cert.failing_subset is not None:
                lines.append("failing subset: %s" % (list(cert.failing_subset),))
        payload = {"command": "points-check", "envelope": envelope(cfg),
                   "certificate": cert.as_dict()}
        return (0 if cert.generic else 1), lines, payload

    return run_batch(cfg, one)


# ------------------------------------------------------------ conductor

def _summarize(d):
    parts = []
    for k in sorted(d):
        v = d[k]
        if isinstance(v, (int, bool, str)) or v is None:
            parts.append("%s=%s" % (k, v))
        elif isinstance(v, list) and len(v) <= 8:
            parts.append("%s=%s" % (k, v))
    return ", ".join(parts)


def conductor_certificate_for(obj, cfg):
    model = obj.get("model")
    if model == "points":
        pts = obj["points"]
        if cfg.field is not None:
            pts = dict(pts, field=cfg.field)
        X = point_set_from_json(pts)
        return points_conductor_certificate(X, dmax=cfg.degree_bound,
                                            subset_budget=cfg.subset_budget)
    if model == "semigroup":
        return semigroup_certificate(obj["generators"])
    if model == "monomial-algebra":
        box = cfg.box if cfg.box is not None else obj.get("box")
        if box is None:
            raise ValueError("monomial-algebra model needs a box "
                             "(--box or a \"box\" key)")
        gens = [tuple(int(c) for c in g) for g in obj["generators"]]
        cand = [tuple(int(c) for c in v) for v in obj["candidate"]]
        return monomial_conductor_certificate(gens, int(box), cand)
    if model == "arrangement":
        spec = cfg.field if cfg.field is not None else obj.get("field")
        field = field_from_json(spec)
        nvars = obj["vars"]
        forms = [parse_polynomial(s, nvars, field) for s in obj["forms"]]
        return arrangement_certificate(forms)
    raise ValueError("unknown conductor model %r (expected points, semigroup, "
                     "monomial-algebra, or arrangement)" % (model,))


def cmd_conductor(cfg):
    def one(path):
        cert = conductor_certificate_for(load_json(path), cfg)
        flags = {k: v for k, v in cert.hypotheses.items()
                 if isinstance(v, bool)}
        lines = [
            "model: %s" % cert.model,
            "claimed: %s" % _summarize(cert.claimed),
            "oracle: %s" % _summarize(cert.oracle),
            "hypotheses: " + ", ".join(
                "%s=%s" % (k, "ok" if v else "FAILED")
                for k, v in sorted(flags.items())),
            "verdict: %s" % cert.verdict,
        ]
        reason = cert.hypotheses.get("reason")
        if reason:
            lines.insert(4, "note: %s" % reason)
        payload = {"command": "conductor", "envelope": envelope(cfg),
                   "certificate": cert.as_dict()}
        if cert.hypotheses_failed:
            code = 3
        elif cert.verdict == "match":
            code = 0
        else:
            code = 1
        return code, lines, payload

    return run_batch(cfg, one)


# ------------------------------------------------------------ tangent-cone

def cmd_tangent_cone(cfg):
    def one(path):
        obj = load_json(path)
        if "branches" in obj:
            return _cone_from_branches(obj, cfg)
        if "parametrization" in obj:
            return _cone_from_parametrization(obj, cfg)
        if "gens" in obj:
            return _cone_from_ideal(obj, cfg)
        raise ValueError('tangent-cone input needs "branches", '
                         '"parametrization", or "gens"')

    return run_batch(cfg, one)


def _cone_from_branches(obj, cfg):
    if cfg.field is not None:
        obj = dict(obj, field=cfg.field)
    curve = curve_from_json(obj)
    pts = branch_tangent_points(curve)
    cert = is_generic_position(pts)
    lines = ["branches: %d, all smooth with pairwise distinct tangents"
             % len(curve.branches),
             "multiplicity of the union: %d" % pts.e]
    if cert.generic:
        lines.append("tangent directions in generic position: yes")
    else:
        lines.append("tangent directions in generic position: NO "
                     "(degree %d, witness %s)"
                     % (cert.failing_degree, cert.witness.text()))
    payload = {"command": "tangent-cone", "route": "branches",
               "envelope": envelope(cfg), "multiplicity": pts.e,
               "tangent_points": point_set_to_json(pts),
               "genericity": cert.as_dict()}
    return 0, lines, payload


def _cone_from_parametrization(obj, cfg):
    spec = cfg.field if cfg.field is not None else obj.get("field")
    field = field_from_json(spec)
    gens = [parse_polynomial(s, 1, field, names=("t",))
            for s in obj["parametrization"]]
    profile = germ_profile(gens, degree_cap=cfg.degree_bound)
    lines = ["graded quotient dimensions: %s" % (list(profile.values),),
             "multiplicity: %d, embedding dimension: %d"
             % (profile.multiplicity, profile.emdim)]
    payload = {"command": "tangent-cone", "route": "parametrization",
               "envelope": envelope(cfg), "profile": profile.as_dict()}
    mem = obj.get("membership")
    if mem:
        q = parse_polynomial(mem["query"], 1, field, names=("t",))
        window = (cfg.degree_bound if cfg.degree_bound is not None
                  else int(mem.get("window", 4 * q.degree())))
        min_factors = int(mem.get("min_factors", 1))
        member = subalgebra_member(q, gens, window, min_factors)
        in_ideal = member or subalgebra_member(q, gens, window, 1)
        lines.append(
            "query %s factor-count >= %d span (degree window %d): %s"
            % ("inside" if member else "outside", min_factors, window,
               mem["query"]))
        lines.append("query inside the span of all products: %s"
                     % ("yes" if in_ideal else "no"))
        payload["membership"] = {"query": mem["query"], "window": window,
                                 "min_factors": min_factors, "member": member,
                                 "member_at_min_factors_1": in_ideal}
    return 0, lines, payload


def _cone_from_ideal(obj, cfg):
    if cfg.field is not None:
        obj = dict(obj, field=cfg.field)
    ideal = ideal_from_json(obj)
    if cfg.degree_bound is not None:
        profile = cone_profile_auto(ideal, bound=cfg.degree_bound)
    else:
        profile = cone_profile_auto(ideal)
    lines = ["graded cone dimensions: %s" % (list(profile.values),),
             "multiplicity: %d, embedding dimension: %d"
             % (profile.multiplicity, profile.emdim)]
    payload = {"command": "tangent-cone", "route": "ideal",
               "envelope": envelope(cfg), "profile": profile.as_dict()}
    return 0, lines, payload


# ------------------------------------------------------------ example suite

def _case_line_points(cfg):
    X = point_set_from_json(load_json(fx.fixture_path("line_points.json")))
    ok = all(is_generic_t_position(X, t, cfg.subset_budget).generic
             for t in range(1, X.e + 1))
    computed = ("generic t-position for every t" if ok
                else "some t-subset is degenerate")
    return computed, {"e": X.e, "r": X.r, "all_t_generic": ok}


def _case_hypersurface_detection(cfg):
    on = point_set_from_json(load_json(fx.fixture_path("on_conic_points.json")))
    off = point_set_from_json(load_json(fx.fixture_path("off_conic_points.json")))
    c_on = is_generic_position(on)
    c_off = is_generic_position(off)
    computed = ("on-curve set fails at degree %s; control set %s"
                % (c_on.failing_degree,
                   "generic" if c_off.generic else "degenerate"))
    return computed, {"on_curve": c_on.as_dict(), "control": c_off.as_dict()}


def _case_tangent_points(cfg):
    X = point_set_from_json(load_json(fx.fixture_path("tangent_points.json")))
    cert = is_generic_position(X)
    sigma, values = points_conductor_sigma(X)
    computed = ("e = %d, fails at degree %s, witness %s, conductor degree %s"
                % (X.e, cert.failing_degree,
                   None if cert.witness is None else cert.witness.text(),
                   sigma))
    return computed, {"certificate": cert.as_dict(), "sigma": sigma,
                      "hilbert": list(values)}


def _case_germ_profile(cfg):
    model = load_json(fx.fixture_path("germ_model.json"))
    field = field_from_json(model["field"])
    gens = [parse_polynomial(s, 1, field, names=("t",))
            for s in model["parametrization"]]
    profile = germ_profile(gens)
    mem = model["membership"]
    q = parse_polynomial(mem["query"], 1, field, names=("t",))
    in_cube = subalgebra_member(q, gens, mem["window"], mem["min_factors"])
    in_max = subalgebra_member(q, gens, mem["window"], 1)
    curve = curve_from_json(load_json(fx.fixture_path("germ_curve.json")))
    pts = branch_tangent_points(curve)
    X = point_set_from_json(load_json(fx.fixture_path("tangent_points.json")))
    same = set(pts.points) == set(X.points)
    bits = ["mult %d" % profile.multiplicity,
            "emdim %d" % profile.emdim,
            "query outside the cube" if in_max and not in_cube
            else "cube membership check failed",
            "tangents match" if same else "tangents differ"]
    payload = {"profile": profile.as_dict(), "in_maximal_ideal": in_max,
               "in_cube": in_cube, "tangents_match_fixture": same}
    return ", ".join(bits), payload


def _case_random_generic(cfg):
    rng = random.Random(cfg.seed)
    field = PrimeField(fx.BIG_PRIME)
    rows = []
    resampled = 0
    matches = 0
    for i in range(30):
        e = 3 + (i % 8)
        r = 1 + (i % 3)
        cert = None
        for _ in range(50):
            X, _ = random_point_set(rng, e, r, field)
            cert = points_conductor_certificate(X,
                                                subset_budget=cfg.subset_budget)
            if not cert.hypotheses_failed:
                break
            resampled += 1
        rows.append({"e": e, "r": r, "nu": nu(e, r),
                     "sigma": cert.oracle["sigma"], "verdict": cert.verdict})
        matches += cert.verdict == "match"
    computed = "conductor exponent equals nu in %d/30 seeded sets" % matches
    return computed, {"cases": rows, "resamples": resampled,
                      "prime": fx.BIG_PRIME}


def _case_line_ladder(cfg):
    rows = []
    ok = True
    for e in range(2, 11):
        sigma, _ = points_conductor_sigma(fx.line_points(e))
        rows.append({"e": e, "sigma": sigma})
        ok = ok and sigma == e - 1
    computed = ("sigma = e - 1 for e = 2..10" if ok
                else "sigma deviates: %s" % rows)
    return computed, {"cases": rows}


def _case_arrangement(fixture_name):
    def run(cfg):
        obj = load_json(fx.fixture_path(fixture_name))
        field = field_from_json(obj.get("field"))
        forms = [parse_polynomial(s, obj["vars"], field)
                 for s in obj["forms"]]
        cert = arrangement_certificate(forms)
        computed = ("formula matches the oracle ideal"
                    if cert.verdict == "match"
                    else "formula misses the oracle ideal")
        return computed, {"certificate": cert.as_dict()}
    return run


def _case_monomial(cfg):
    rows = []
    ok = True
    for n in (2, 3, 4, 5):
        model = fx.monomial_model(n)
        cert = monomial_conductor_certificate(
            [tuple(g) for g in model["generators"]], model["box"],
            [tuple(c) for c in model["candidate"]])
        rows.append({"n": n, "verdict": cert.verdict,
                     "window": cert.oracle["window"]})
        ok = ok and cert.verdict == "match"
    computed = ("claimed generators match the bounded oracle for n = 2..5"
                if ok else "divergence: %s" % rows)
    return computed, {"cases": rows}


def _case_semigroups(cfg):
    certs = {}
    for name in ("semigroup_2_5.json", "semigroup_2_3.json",
                 "semigroup_3_4_5.json"):
        obj = load_json(fx.fixture_path(name))
        key = ",".join(str(g) for g in obj["generators"])
        certs[key] = semigroup_certificate(obj["generators"])
    flagged = all(c.hypotheses_failed for c in certs.values())
    computed = ("<2,5> %s, <2,3> %s, <3,4,5> %s, hypotheses flagged in all"
                % (certs["2,5"].verdict, certs["2,3"].verdict,
                   certs["3,4,5"].verdict))
    if not flagged:
        computed += " (flag missing)"
    return computed, {k: c.as_dict() for k, c in certs.items()}


def _case_symbolic_powers(cfg):
    x = Polynomial.variable(0, 3, QQ)
    y = Polynomial.variable(1, 3, QQ)
    z = Polynomial.variable(2, 3, QQ)
    q = Ideal.of(x, y)
    rows = []
    ok = True
    for m in range(1, 5):
        same = ideal_equal(symbolic_power(q, m, z), ideal_power(q, m))
        rows.append({"m": m, "equals_ordinary_power": same})
        ok = ok and same
    computed = ("symbolic power equals ordinary power for m = 1..4"
                if ok else "divergence: %s" % rows)
    return computed, {"cases": rows}


CASES = (
    ("line-points", "generic t-position for every t", _case_line_points),
    ("hypersurface-detection",
     "on-curve set fails at degree 2; control set generic",
     _case_hypersurface_detection),
    ("tangent-points",
     "e = 6, fails at degree 2, witness x1*x2, conductor degree 4",
     _case_tangent_points),
    ("germ-profile",
     "mult 6, emdim 3, query outside the cube, tangents match",
     _case_germ_profile),
    ("random-generic-conductor",
     "conductor exponent equals nu in 30/30 seeded sets",
     _case_random_generic),
    ("line-conductor-ladder", "sigma = e - 1 for e = 2..10",
     _case_line_ladder),
    ("three-lines-conductor", "formula matches the oracle ideal",
     _case_arrangement("arrangement_three_lines.json")),
    ("four-lines-conductor", "formula matches the oracle ideal",
     _case_arrangement("arrangement_four_lines.json")),
    ("three-planes-conductor", "formula matches the oracle ideal",
     _case_arrangement("arrangement_three_planes.json")),
    ("monomial-surface-conductor",
     "claimed generators match the bounded oracle for n = 2..5",
     _case_monomial),
    ("semigroup-contrast",
     "<2,5> mismatch, <2,3> match, <3,4,5> match, hypotheses flagged in all",
     _case_semigroups),
    ("symbolic-powers", "symbolic power equals ordinary power for m = 1..4",
     _case_symbolic_powers),
)


def cmd_reproduce_examples(cfg):
    golden_dir = cfg.golden_dir or fx.GOLDEN_DIR
    selected = [c for c in CASES if cfg.only is None or cfg.only in c[0]]
    if not selected:
        raise ValueError("no example id contains %r (ids: %s)"
                         % (cfg.only, ", ".join(c[0] for c in CASES)))
    env = envelope(cfg)

    def run_case(case):
        cid, claim, fn = case
        computed, payload = fn(cfg)
        return {"id": cid, "claim": claim, "computed": computed,
                "envelope": env, "result": payload}

    if cfg.jobs > 1 and len(selected) > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            records = list(pool.map(run_case, selected))
    else:
        records = [run_case(c) for c in selected]

    rows = []
    divergent = []
    missing = []
    written = 0
    for record in records:
        cid, claim, computed = record["id"], record["claim"], record["computed"]
        text = canonical_json(record)
        gpath = os.path.join(golden_dir, cid + ".json")
        if cfg.write_golden:
            if computed != claim:
                divergent.append(cid)
                status = "DIVERGES (golden not written)"
            else:
                os.makedirs(golden_dir, exist_ok=True)
                with open(gpath, "w", encoding="utf-8") as fh:
                    fh.write(text)
                written += 1
                status = "written"
        elif not os.path.exists(gpath):
            missing.append(cid)
            status = "missing-golden"
        else:
            with open(gpath, "r", encoding="utf-8") as fh:
                golden = fh.read()
            if text == golden and computed == claim:
                status = "pass"
            else:
                divergent.append(cid)
                status = "DIVERGES"
        rows.append((cid, claim, computed, status))

    header = ("id", "expected", "computed", "verdict")
    widths = [max(len(str(row[i])) for row in rows + [header])
              for i in range(4)]
    print(" | ".join(h.ljust(w) for h, w in zip(header, widths)))
    print("-+-".join("-" * w for w in widths))
    for row in rows:
        print(" | ".join(str(c).ljust(w) for c, w in zip(row, widths)))

    if cfg.json_out:
        emit_json(cfg, {"command": "reproduce-examples", "envelope": env,
                        "cases": records})
    if missing:
        print("missing golden files: %s (use --write-golden to create them)"
              % ", ".join(missing))
        return 2
    if divergent:
        print("divergence in: %s" % ", ".join(divergent))
        return 1
    if cfg.write_golden:
        print("wrote %d golden files to %s" % (written, golden_dir))
        return 0
    print("%d/%d examples reproduced" % (len(rows), len(rows)))
    return 0


# ------------------------------------------------------------ entry point

def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        cfg.validate()
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    saved = (groebner.DEFAULT_MAX_BASIS, groebner.DEFAULT_MAX_PAIRS)
    groebner.DEFAULT_MAX_BASIS = cfg.max_basis
    groebner.DEFAULT_MAX_PAIRS = cfg.max_pairs
    try:
        if cfg.command == "points-check":
            return cmd_points_check(cfg)
        if cfg.command == "conductor":
            return cmd_conductor(cfg)
        if cfg.command == "tangent-cone":
            return cmd_tangent_cone(cfg)
        return cmd_reproduce_examples(cfg)
    except BudgetExceededError as exc:
        print("error: budget exceeded: %s" % exc, file=sys.stderr)
        return 2
    except StabilizationError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print("error: missing input file: %s" % exc, file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print("error: malformed JSON: %s" % exc, file=sys.stderr)
        return 2
    except KeyError as exc:
        print("error: missing key %s in input" % exc, file=sys.stderr)
        return 2
    except (ValueError, TypeError, OSError, RuntimeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    finally:
        groebner.DEFAULT_MAX_BASIS, groebner.DEFAULT_MAX_PAIRS = saved


if __name__ == "__main__":
    sys.exit(main())
