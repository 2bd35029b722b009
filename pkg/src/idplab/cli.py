"""Command-line front end.

Subcommands: ``gen`` (build and validate a pentagon-family fan), ``idp``
(exact IDP check), ``decompose`` (constructive certificates), ``sweep``
(grid validation of the decomposer against brute force), ``fans2d``
(bounded search over smooth complete plane fans).

Exit codes: 0 success/pass, 1 IDP witness found (a finding, not an error),
2 invalid input, 3 precondition failure, 4 internal invariant breach.

Reports written to --out (or stdout) are deterministic for fixed inputs:
wall time and worker count are diagnostics and go to stderr only.
"""

import argparse
import json
import sys
import time

from . import batyrev, fans2d
from .decompose import Decomposer, structure_case
from .errors import (CompletenessViolation, IdpLabError, NoLatticePoint, NonPrimitiveRay,
                     NotConvex, PointNotInSum, SmoothnessViolation)
from .fan import fan_from_dict, is_splitting
from .polytope import LatticePolytope, idp_check
from .sweep import run_sweep

EXIT_OK = 0
EXIT_WITNESS = 1
EXIT_INVALID = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


class CliError(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(EXIT_INVALID, f"cannot read {path}: {exc}")


def _emit(report, args, start):
    if args.format == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        text = _render_text(report) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"[idplab] wall time {time.time() - start:.2f}s, "
          f"workers {getattr(args, 'workers', 1)}", file=sys.stderr)


def _render_text(obj, indent=""):
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append(f"{indent}{k}:")
                lines.append(_render_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {json.dumps(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append(_render_text(v, indent + "  "))
            else:
                lines.append(f"{indent}- {json.dumps(v)}")
    else:
        lines.append(f"{indent}{json.dumps(obj)}")
    return "\n".join(lines)


def _is_flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) for x in v)
    return False


def _build_structure(spec):
    try:
        return batyrev.batyrev_from_dict(spec)
    except (ValueError, KeyError, TypeError) as exc:
        raise CliError(EXIT_INVALID, f"invalid parameters: {exc}")
    except (SmoothnessViolation, CompletenessViolation, NonPrimitiveRay) as exc:
        raise CliError(EXIT_INVALID, f"parameters give an invalid fan: {exc}")


def cmd_gen(args):
    spec = _load_json(args.spec)
    st = _build_structure(spec)
    report = {
        "command": "gen",
        "inputs": {"spec": spec},
        "results": {
            "dim": st.n,
            "rays": [list(r) for r in st.A],
            "labels": list(st.labels),
            "primitive_collections": [list(c) for c in st.fan.primitive_collections],
            "maximal_cones": [list(c) for c in st.fan.maximal_cones],
            "case": structure_case(st.params),
            "splitting": is_splitting(st.fan),
            "valid": True,
        },
    }
    return report, EXIT_OK


def _polytopes_for_idp(args):
    spec = _load_json(args.spec)
    if "points_p" in spec:
        p = LatticePolytope.from_points(spec["points_p"])
        q = LatticePolytope.from_points(spec["points_q"])
        return spec, None, p, q
    if "p" in spec:
        st = _build_structure(spec)
        if not args.heights:
            raise CliError(EXIT_INVALID, "--heights is required for fan specs")
        hdata = _load_json(args.heights)
        try:
            h = batyrev.heights_from_dict(st, hdata["h"])
            h2 = batyrev.heights_from_dict(st, hdata["h_prime"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError(EXIT_INVALID, f"invalid heights file: {exc}")
        fan = st.fan
    else:
        try:
            fan = fan_from_dict(spec)
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError(EXIT_INVALID, f"invalid fan spec: {exc}")
        except (SmoothnessViolation, CompletenessViolation, NonPrimitiveRay) as exc:
            raise CliError(EXIT_INVALID, f"invalid fan: {exc}")
        if not args.heights:
            raise CliError(EXIT_INVALID, "--heights is required for fan specs")
        hdata = _load_json(args.heights)
        try:
            h = tuple(int(v) for v in hdata["h"])
            h2 = tuple(int(v) for v in hdata["h_prime"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CliError(EXIT_INVALID, f"invalid heights file: {exc}")
    try:
        p = LatticePolytope(fan, h)
        q = LatticePolytope(fan, h2)
    except NotConvex as exc:
        raise CliError(EXIT_PRECONDITION, str(exc))
    return spec, hdata, p, q


def _poly_entry(p):
    return {"vertices": [list(v) for v in p.vertices()],
            "num_lattice_points": len(p.lattice_points())}


def cmd_idp(args):
    spec, hdata, p, q = _polytopes_for_idp(args)
    result = idp_check(p, q)
    report = {
        "command": "idp",
        "inputs": {"spec": spec, "heights": hdata},
        "results": {"p": _poly_entry(p), "q": _poly_entry(q), **result.to_dict()},
    }
    return report, EXIT_OK if result.ok else EXIT_WITNESS


def cmd_decompose(args):
    spec = _load_json(args.spec)
    if "p" not in spec:
        raise CliError(EXIT_INVALID,
                       "decompose needs a pentagon-family spec (five class sizes)")
    st = _build_structure(spec)
    hdata = _load_json(args.heights)
    try:
        h = batyrev.heights_from_dict(st, hdata["h"])
        h2 = batyrev.heights_from_dict(st, hdata["h_prime"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(EXIT_INVALID, f"invalid heights file: {exc}")
    try:
        dec = Decomposer(st, h, h2)
    except NotConvex as exc:
        raise CliError(EXIT_PRECONDITION, str(exc))
    try:
        if args.all:
            certs = dec.decompose_all()
        else:
            if not args.alpha:
                raise CliError(EXIT_INVALID, "need --alpha or --all")
            try:
                alpha = tuple(int(v) for v in args.alpha.split(","))
            except ValueError as exc:
                raise CliError(EXIT_INVALID, f"bad --alpha: {exc}")
            if len(alpha) != st.n:
                raise CliError(EXIT_INVALID, f"--alpha needs {st.n} coordinates")
            certs = [dec.decompose(alpha)]
    except PointNotInSum as exc:
        raise CliError(EXIT_PRECONDITION, str(exc))
    except NoLatticePoint as exc:
        raise CliError(EXIT_INTERNAL, str(exc))
    report = {
        "command": "decompose",
        "inputs": {"spec": spec, "heights": hdata,
                   "alpha": None if args.all else args.alpha, "all": bool(args.all)},
        "results": {"certificates": [c.to_dict() for c in certs],
                    "count": len(certs)},
    }
    return report, EXIT_OK


def cmd_sweep(args):
    grid = _load_json(args.grid)
    try:
        hv = grid.get("height_values")
        if hv is None:
            hv = list(range(int(grid.get("height_min", 0)),
                            int(grid.get("height_max", 2)) + 1))
        kwargs = dict(
            n_min=int(grid.get("n_min", 2)), n_max=int(grid.get("n_max", 4)),
            b_max=int(grid.get("b_max", 1)), c_max=int(grid.get("c_max", 1)),
            height_values=tuple(int(v) for v in hv),
        )
    except (TypeError, ValueError) as exc:
        raise CliError(EXIT_INVALID, f"invalid grid file: {exc}")
    try:
        rep = run_sweep(workers=args.workers, max_instances=args.max_instances,
                        audit=not grid.get("skip_audit", False), **kwargs)
    except ValueError as exc:
        raise CliError(EXIT_INVALID, str(exc))
    report = {"command": "sweep", "inputs": {"grid": grid},
              "results": rep.to_dict()}
    return report, EXIT_OK if rep.ok else EXIT_INTERNAL


def cmd_fans2d(args):
    if args.rays < 3:
        raise CliError(EXIT_INVALID, "--rays must be at least 3")
    if args.rays > 8:
        raise CliError(EXIT_INVALID, "--rays above 8 is not supported by this harness")
    try:
        rep = fans2d.search(args.rays, args.height_bound,
                            stop_on_witness=args.stop_on_witness,
                            max_instances=args.max_instances, workers=args.workers)
    except ValueError as exc:
        raise CliError(EXIT_INVALID, str(exc))
    report = {"command": "fans2d",
              "inputs": {"rays": args.rays, "height_bound": args.height_bound,
                         "stop_on_witness": bool(args.stop_on_witness)},
              "results": rep.to_dict()}
    return report, EXIT_OK if rep.all_pass else EXIT_WITNESS


def build_parser():
    parser = argparse.ArgumentParser(
        prog="idplab",
        description="Exact integer-decomposition-property lab for lattice polytopes "
                    "from smooth complete fans")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, workers=False, max_instances=False):
        p.add_argument("--out", help="write the report to this file instead of stdout")
        p.add_argument("--format", choices=("json", "text"), default="json")
        if workers:
            p.add_argument("--workers", type=int, default=1)
        if max_instances:
            p.add_argument("--max-instances", type=int, default=None,
                           help="refuse grids with more instances than this")

    p = sub.add_parser("gen", help="build and validate a pentagon-family fan")
    p.add_argument("--spec", required=True)
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("idp", help="exact IDP check for a pair of polytopes")
    p.add_argument("--spec", required=True,
                   help="fan spec, pentagon-family spec, or raw point-set fixture")
    p.add_argument("--heights", help="JSON with 'h' and 'h_prime'")
    common(p)
    p.set_defaults(func=cmd_idp)

    p = sub.add_parser("decompose", help="constructive decomposition certificates")
    p.add_argument("--spec", required=True)
    p.add_argument("--heights", required=True)
    p.add_argument("--alpha", help="comma-separated point to decompose")
    p.add_argument("--all", action="store_true",
                   help="decompose every lattice point of the sum polytope")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("sweep", help="validate the decomposer over a parameter grid")
    p.add_argument("--grid", required=True)
    common(p, workers=True, max_instances=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fans2d", help="search smooth complete plane fans for IDP failures")
    p.add_argument("--rays", type=int, required=True)
    p.add_argument("--height-bound", type=int, default=2)
    p.add_argument("--stop-on-witness", action="store_true",
                   help="stop each fan's scan at its first counterexample")
    common(p, workers=True, max_instances=True)
    p.set_defaults(func=cmd_fans2d)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    start = time.time()
    try:
        report, code = args.func(args)
    except CliError as exc:
        print(f"idplab: {exc}", file=sys.stderr)
        return exc.code
    except IdpLabError as exc:
        print(f"idplab: internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    _emit(report, args, start)
    return code


if __name__ == "__main__":
    sys.exit(main())
