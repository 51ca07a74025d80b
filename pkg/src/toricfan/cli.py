"""
Command-line front end.

Fans are read from FanFile JSON documents::

    {"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]],
     "cones": [[0, 1], [1, 2], [0, 2]], "name": "P2"}

Every command prints one JSON object with sorted keys. Exit status is 0 when
a result was computed, 1 when a check command found a failure, and 2 on
bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .ab import build_ab, evenness_probe, orbit_closure_sweep, torsion_probe
from .cone_algebra import Cone
from .errors import ParseError, ToricFanError
from .fan import (
    Fan,
    barycentric_fan,
    fan_from_maximal,
    hereditary_report,
    is_complete,
    is_fan_simplicial,
    is_fan_smooth,
    validate_completion,
)
from .fixtures import FIXTURES
from .pp import hilbert_function, piecewise_constant_components, pp_basis
from .topo import FIELDS, cell_census, cubical_subdivision, free_link_check, link_homology


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def fan_from_dict(d: Any) -> Fan:
    """Validate a FanFile-shaped object and build its fan."""
    if not isinstance(d, dict):
        raise ParseError("top level must be an object", field="")
    for key in ("dim", "rays", "cones"):
        if key not in d:
            raise ParseError(f"missing required field {key!r}", field=key)
    n = d["dim"]
    if not _is_int(n) or n < 0:
        raise ParseError("dim must be a non-negative integer", field="dim")
    rays = d["rays"]
    if not isinstance(rays, list):
        raise ParseError("rays must be a list", field="rays")
    for i, r in enumerate(rays):
        if not isinstance(r, list) or not all(_is_int(x) for x in r):
            raise ParseError(f"ray {i} must be a list of integers", field=f"rays[{i}]")
        if len(r) != n:
            raise ParseError(f"ray {i} has length {len(r)}, expected {n}", field=f"rays[{i}]")
        if not any(r):
            raise ParseError(f"ray {i} is zero", field=f"rays[{i}]")
    cones = d["cones"]
    if not isinstance(cones, list):
        raise ParseError("cones must be a list", field="cones")
    for k, c in enumerate(cones):
        if not isinstance(c, list):
            raise ParseError(f"cone {k} must be a list of ray indices", field=f"cones[{k}]")
        for j, idx in enumerate(c):
            if not _is_int(idx) or not 0 <= idx < len(rays):
                raise ParseError(
                    f"cone {k} refers to ray index {idx!r}, but there are {len(rays)} rays",
                    field=f"cones[{k}][{j}]")
    if "name" in d and not isinstance(d["name"], str):
        raise ParseError("name must be a string", field="name")
    return fan_from_maximal(n, cones, rays)


def parse_fan(path: str) -> Fan:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    return fan_from_dict(data)


def fan_to_dict(f: Fan, name: str | None = None) -> dict:
    """FanFile for ``f``: rays in fan order, maximal cones as index lists."""
    index = {r: i for i, r in enumerate(f.rays)}
    out = {
        "dim": f.ambient_rank,
        "rays": [list(r) for r in f.rays],
        "cones": [[index[r] for r in f.cones[i].rays] for i in f.maximal],
    }
    if name is not None:
        out["name"] = name
    return out


def _rays(c: Cone) -> list[list[int]]:
    return [list(r) for r in c.rays]


def _groups(groups) -> list[dict]:
    return [{"position": g.position, "rank": g.rank, "torsion": list(g.torsion)} for g in groups]


# commands: each returns (report, exit code)

def cmd_validate(f: Fan, args) -> tuple[dict, int]:
    return {"valid": True, "dim": f.ambient_rank, "f_vector": list(f.f_vector),
            "maximal": [_rays(f.cones[i]) for i in f.maximal]}, 0


def cmd_complete(f: Fan, args):
    return {"complete": is_complete(f)}, 0


def cmd_smooth(f: Fan, args):
    return {"smooth": is_fan_smooth(f)}, 0


def cmd_simplicial(f: Fan, args):
    return {"simplicial": is_fan_simplicial(f)}, 0


def cmd_hereditary(f: Fan, args):
    rep = hereditary_report(f)
    failures = [{"cone": _rays(f.cones[t]),
                 "components": [[_rays(f.cones[j]) for j in comp] for comp in comps]}
                for t, comps in sorted(rep.failures.items())]
    return {"hereditary": rep.hereditary, "maximal_full_dim": rep.maximal_full_dim,
            "failures": failures}, 0


def cmd_components(f: Fan, args):
    comps = piecewise_constant_components(f)
    groups: dict[int, list] = {}
    for i in f.maximal:
        groups.setdefault(comps.labels[i], []).append(_rays(f.cones[i]))
    return {"count": comps.count, "degenerate": comps.degenerate,
            "components": [groups[k] for k in sorted(groups)]}, 0


def cmd_hilbert(f: Fan, args):
    return {"ranks": hilbert_function(f, args.max_degree)}, 0


def cmd_pp_basis(f: Fan, args):
    basis = pp_basis(f, args.degree)
    return {"degree": args.degree, "rank": len(basis),
            "maximal": [_rays(f.cones[i]) for i in f.maximal],
            "basis": [[list(p.coefficients) for p in e.pieces] for e in basis]}, 0


def cmd_ab_check(f: Fan, args):
    coeffs = "Z" if args.mod is None else args.mod
    degrees = []
    ok = True
    for q in range(args.max_degree + 1):
        cx = build_ab(f, q)
        vanish = cx.squares_vanish()
        ok = ok and vanish
        degrees.append({"degree": q, "term_ranks": cx.term_ranks,
                        "differential_ranks": cx.differential_ranks(),
                        "squares_vanish": vanish,
                        "cohomology": _groups(cx.cohomology(coeffs))})
    return {"coefficients": str(coeffs), "squares_vanish": ok, "degrees": degrees}, 0 if ok else 1


def cmd_evenness(f: Fan, args):
    rep = evenness_probe(f, args.max_degree)
    degrees = [{"degree": r.degree, "term_ranks": r.term_ranks, "h0_rank": r.h0_rank,
                "exact_at": r.exact_at, "passed": r.passed, "cohomology": _groups(r.groups)}
               for r in rep.degrees]
    return {"passed": rep.passed, "max_degree": rep.d_max, "degrees": degrees}, 0 if rep.passed else 1


def cmd_torsion(f: Fan, args):
    rep = torsion_probe(f, args.max_degree)
    degrees = [{"degree": d.degree,
                "torsion": {str(i): list(t) for i, t in d.torsion.items() if t},
                "rational_ranks": d.rational_ranks,
                "mod_p_ranks": {str(p): v for p, v in d.mod_p_dims.items()},
                "mismatches": {str(p): v for p, v in d.mismatches.items()},
                "h0_saturated": d.h0_saturated}
               for d in rep.degrees]
    return ({"torsion_free": rep.torsion_free, "primes": list(rep.primes), "degrees": degrees},
            0 if rep.torsion_free else 1)


def cmd_sweep(f: Fan, args):
    rep = orbit_closure_sweep(f, args.max_degree)
    per_cone = [{"cone": _rays(f.cones[i]), "passed": ok} for i, ok in sorted(rep.per_cone.items())]
    return ({"whole_fan_passed": rep.whole_fan_passed, "max_degree": rep.d_max,
             "per_cone": per_cone,
             "counterexamples": [_rays(f.cones[i]) for i in rep.counterexamples]},
            1 if rep.counterexamples else 0)


def cmd_links(f: Fan, args):
    out = []
    for i, c in enumerate(f.cones):
        h = link_homology(f, i)
        out.append({"cone": _rays(c),
                    "homology": [{"degree": d, "rank": g.free_rank, "torsion": list(g.torsion)}
                                 for d, g in sorted(h.items())],
                    "free": free_link_check(f, i)})
    return {"links": out, "all_free": all(x["free"] for x in out)}, 0


def cmd_cubes(f: Fan, args):
    sub = cubical_subdivision(f)
    return {"counts": list(sub.counts), "euler": sub.euler,
            "top_cubes": sub.counts[-1]}, 0


def cmd_census(f: Fan, args):
    c = cell_census(f, args.field)
    return {"field": c.variant, "counts": list(c.counts), "euler": c.euler}, 0


def cmd_subdivide(f: Fan, args):
    g = barycentric_fan(f, 0)
    text = json.dumps(fan_to_dict(g), sort_keys=True) + "\n"
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise ParseError(f"cannot write {args.out}: {exc.strerror}") from None
    return {"out": args.out, "f_vector": list(g.f_vector)}, 0


def cmd_check_completion(f: Fan, args):
    g = parse_fan(args.ambient)
    ok = validate_completion(f, g)
    return {"completion": ok}, 0 if ok else 1


COMMANDS = {
    "validate": cmd_validate,
    "complete": cmd_complete,
    "smooth": cmd_smooth,
    "simplicial": cmd_simplicial,
    "hereditary": cmd_hereditary,
    "components": cmd_components,
    "hilbert": cmd_hilbert,
    "pp-basis": cmd_pp_basis,
    "ab-check": cmd_ab_check,
    "evenness": cmd_evenness,
    "torsion": cmd_torsion,
    "sweep": cmd_sweep,
    "links": cmd_links,
    "cubes": cmd_cubes,
    "census": cmd_census,
    "subdivide": cmd_subdivide,
    "check-completion": cmd_check_completion,
}


def _non_negative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _prime(text: str) -> int:
    p = int(text)
    if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
        raise argparse.ArgumentTypeError(f"{p} is not a prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toricfan",
                                     description="Invariants of rational fans.")
    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("path", nargs="?", help="FanFile JSON")
    source.add_argument("--fixture", choices=sorted(FIXTURES), help="use a built-in fan")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[source])
        if name in ("hilbert", "ab-check", "evenness", "torsion", "sweep"):
            p.add_argument("--max-degree", type=_non_negative, default=None)
        if name == "ab-check":
            p.add_argument("--mod", type=_prime, default=None)
        if name == "pp-basis":
            p.add_argument("--degree", type=_non_negative, required=True)
        if name == "census":
            p.add_argument("--field", choices=FIELDS, required=True)
        if name == "subdivide":
            p.add_argument("--out", required=True)
        if name == "check-completion":
            p.add_argument("--ambient", required=True)
    return parser


def _error(exc: ToricFanError) -> dict:
    return {"error": {"type": type(exc).__name__, "message": str(exc),
                      "context": exc.context()}}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if (args.path is None) == (args.fixture is None):
            raise ParseError("give exactly one of a fan file path or --fixture")
        if args.fixture is not None:
            f = fan_from_dict(FIXTURES[args.fixture])
        else:
            f = parse_fan(args.path)
        if getattr(args, "max_degree", 0) is None:
            args.max_degree = 2 * f.ambient_rank
        report, code = COMMANDS[args.command](f, args)
    except ToricFanError as exc:
        report, code = _error(exc), 2
    sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
