"""Command-line entry point: ``willems COMMAND [options] [FILE]``.

Exit status: 0 success, 1 conditional or undecided result, 2 usage or
input error, 3 computation error.
"""
import argparse
import sys

from .. import __version__
from ..closure import NO_HINTS, SignalSpaceKind, is_controllable, willems_closure
from ..core.poly import poly_eval
from ..decomp import primary_decomposition
from ..errors import DimensionMismatch, ParseError, WillemsError
from ..core.order import GREVLEX, LEX
from ..groebner import Ideal, is_zero_dimensional
from ..points import density_verdict, enumerate_points, solve_rational_zero_dim
from ..signals import apply_operator, is_in_behavior
from . import report as R
from .parse import parse_point, parse_signal
from .problem import bounds_from, load_hints, parse_problem

COMMANDS = ("closure", "controllable", "points", "decompose", "groebner", "eval")
EXIT_OK, EXIT_CONDITIONAL, EXIT_INPUT, EXIT_ERROR = 0, 1, 2, 3


def build_parser():
    ap = argparse.ArgumentParser(prog="willems", description="Willems closures of constant-coefficient PDE systems")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("file", nargs="?", default="-", help="problem file ('-' for stdin)")
        p.add_argument("-e", "--expr", help="generators given inline instead of a file")
        p.add_argument("--space", help="torus|protorus - smooth|fin|poly")
        p.add_argument("--ring", choices=("Q", "Z"))
        p.add_argument("--height", type=int)
        p.add_argument("--denominator", type=int)
        p.add_argument("--degree-bound", type=int)
        p.add_argument("--budget", type=int)
        p.add_argument("--depth-cap", type=int)
        p.add_argument("--seed", type=int)
        p.add_argument("--hints")
        p.add_argument("--strict", action="store_true", default=None)
        p.add_argument("--out", choices=("json", "pretty"), default="json")
        p.add_argument("--output", help="write the report to this file")
        if name == "points":
            p.add_argument("--density", action="store_true", help="also compute the density verdict")
        if name == "groebner":
            p.add_argument("--order", choices=("grevlex", "lex"))
        if name == "eval":
            p.add_argument("--at", help="frequency point, e.g. '1,-1/2'")
            p.add_argument("--signal", help="signal literal, e.g. 'e(1,2)*[-2, 1]'")
    return ap


class Options:
    """Header options merged with command-line overrides."""

    def __init__(self, spec, args):
        o = dict(spec.options)
        for key in ("space", "ring", "height", "denominator", "degree_bound", "budget", "depth_cap", "seed",
                    "order", "at", "signal"):
            v = getattr(args, key, None)
            if v is not None:
                o[key.replace("_", "-")] = str(v)
        if args.strict:
            o["strict"] = "true"
        self.raw = o
        self.space = SignalSpaceKind.parse(o.get("space", "protorus-poly"))
        self.ring = o.get("ring", self.space.ring)
        self.bounds = bounds_from(o)
        self.seed = int(o.get("seed", 0))
        self.depth_cap = int(o.get("depth-cap", 8))
        self.strict = o.get("strict", "false").lower() in ("1", "true", "yes")

    def as_json(self):
        return {"space": str(self.space), "ring": self.ring, "bounds": self.bounds.as_dict(),
                "seed": self.seed, "depth_cap": self.depth_cap, "strict": self.strict}


def run_command(spec, command, opts, hints=NO_HINTS, extra=None):
    """Dispatch one command; returns (result dict, conditional flag)."""
    extra = extra or {}
    M = spec.module
    if command == "closure":
        r = willems_closure(M, opts.space, opts.bounds, opts.strict, opts.seed, hints, opts.depth_cap)
        return R.closure_json(r), r.conditional
    if command == "controllable":
        space = opts.space if opts.space.flavor == "poly" else SignalSpaceKind(opts.space.base, "poly")
        v = is_controllable(M, space, opts.bounds, opts.strict, opts.seed, hints)
        return {"space": str(space), "verdict": v.verdict, "witness_prime": R.module_json(v.witness_prime),
                "witness_point": R.point_json(v.witness_point),
                "image_matrix": [R.poly_text(c) for c in v.image_matrix],
                "torsion_closure": R.module_json(v.torsion_closure), "ledger": R.ledger_json(v.ledger),
                "notes": v.notes}, v.verdict == "Conditional"
    if command == "points":
        I = _ideal(M)
        if not I.is_unit() and I.is_rational() and is_zero_dimensional(I).zero_dimensional:
            ps = solve_rational_zero_dim(I)
            if opts.ring == "Z":
                ps.points = [p for p in ps.points if p.integral]
        else:
            ps = enumerate_points(I, opts.bounds, opts.ring)
        out = {"ring": opts.ring, "complete": ps.complete, "truncated": ps.truncated,
               "points": [R.point_json(p) for p in ps.points]}
        cond = False
        if extra.get("density"):
            v = density_verdict(I, opts.ring, opts.bounds, hints.points_for(I.n))
            out["density"] = R.verdict_json(v)
            cond = not v.certified
        return out, cond
    if command == "decompose":
        d = primary_decomposition(M, opts.seed)
        return {"associated_primes": [R.module_json(p) for p in d.primes],
                "components": [{"prime": R.module_json(c.prime), "component": R.module_json(c.component),
                                "exponent": c.exponent, "status": c.status} for c in d.components]}, False
    if command == "groebner":
        order = LEX if opts.raw.get("order") == "lex" else GREVLEX
        return {"order": "lex" if order is LEX else "grevlex",
                "groebner_basis": [R.poly_text(g) for g in M.groebner(order)]}, False
    if command == "eval":
        out = {}
        if opts.raw.get("at"):
            a = parse_point(opts.raw["at"])
            out["at"] = R.point_json(a)
            out["values"] = [[str(poly_eval(p, a)) for p in g.components()] for g in M.gens]
        if opts.raw.get("signal"):
            f = parse_signal(opts.raw["signal"], spec.n, spec.q, spec.transcendentals)
            out["signal"] = str(f)
            out["images"] = [str(apply_operator(g, f)) for g in M.gens]
            out["in_behavior"] = is_in_behavior(M, f)
        if not out:
            raise ValueError("eval needs --at or --signal")
        return out, False
    raise ValueError(f"unknown command {command}")


def _ideal(M):
    if M.q != 1:
        raise ValueError("points needs an ideal (q = 1)")
    return M if isinstance(M, Ideal) else Ideal._wrap(M)


def _read(args):
    if args.expr is not None:
        return args.expr
    if args.file == "-":
        return sys.stdin.read()
    with open(args.file, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None):
    args = build_parser().parse_args(argv)
    report = {"schema": R.SCHEMA, "version": __version__, "command": args.command}
    code = EXIT_OK
    try:
        text = _read(args)
        report["input"] = text
        spec = parse_problem(text)
        opts = Options(spec, args)
        hints = load_hints(args.hints, spec.n, spec.transcendentals) if args.hints else NO_HINTS
        report["problem"] = {"n": spec.n, "q": spec.q, "transcendentals": list(spec.transcendentals),
                             "generators": [R.poly_text(g if g.q > 1 else g.as_poly()) for g in spec.generators]}
        report["options"] = opts.as_json()
        extra = {"density": getattr(args, "density", False)}
        result, conditional = run_command(spec, args.command, opts, hints, extra)
        report["result"] = result
        report["conditional"] = conditional
        code = EXIT_CONDITIONAL if conditional else EXIT_OK
    except (ParseError, DimensionMismatch) as err:
        code = EXIT_INPUT
        report["error"] = _error(err)
    except WillemsError as err:
        code = EXIT_ERROR
        report["error"] = _error(err)
    except (ValueError, OSError) as err:
        code = EXIT_INPUT
        report["error"] = _error(err)
    report["status"] = {EXIT_OK: "ok", EXIT_CONDITIONAL: "conditional", EXIT_INPUT: "input-error",
                        EXIT_ERROR: "error"}[code]
    report["exit_code"] = code
    text = R.dumps(report) if args.out == "json" else R.pretty(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def _error(err):
    kind = err.kind if isinstance(err, WillemsError) else type(err).__name__
    ctx = err.context() if isinstance(err, WillemsError) else {}
    return {"kind": kind, "message": getattr(err, "message", None) or str(err), "context": ctx}


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
