"""Command-line interface: ``gencheeger {gen,phi,eig,sweep,verify}``.

Exit codes: 0 success, 1 bad input (including oracle guards), 2 numerical
failure, 3 a verification check failed.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Sequence

from .eigen import EigenConfig, inverse_power_minimize
from .errors import GenerationError, InputError, NumericalError
from .fileio import format_graph, format_number, format_vector, read_graph, read_vector
from .graph import FAMILIES, demand_graph, generate, kn_identity_graph, st_edge_graph
from .oracles import (
    OracleLimit,
    conductance_exact,
    generalized_conductance_exact,
    isoperimetric_exact,
    min_st_cut_exact,
)
from .solver import SolveConfig
from .sweep import generalized_sweep
from .verify import CHECK_NAMES, run_verification

EXIT_OK, EXIT_INPUT, EXIT_NUMERICAL, EXIT_FAILED = 0, 1, 2, 3
GEN_FAMILIES = FAMILIES + ("demand-of", "kn-identity", "st-edge")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=_u64, default=0)
    common.add_argument("--json", action="store_true", help="emit JSON on stdout")
    common.add_argument("--out", help="output file")

    eig_opts = _Parser(add_help=False)
    eig_opts.add_argument("--eps", type=float, default=0.05)
    eig_opts.add_argument("--prob", type=float, default=0.01)
    eig_opts.add_argument("--max-rounds", type=int, default=None)
    eig_opts.add_argument("--cg-tol", type=float, default=1e-10)
    eig_opts.add_argument("--precond", choices=("none", "diagonal"), default="diagonal")

    guard = _Parser(add_help=False)
    guard.add_argument("--max-n", type=int, default=20, help="enumeration guard")

    p = _Parser(prog="gencheeger", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="write a graph file")
    g.add_argument("family", choices=GEN_FAMILIES)
    g.add_argument("params", nargs="*")
    g.add_argument(
        "--weights",
        choices=("unit", "random"),
        default=None,
        help="unit weights or uniform in [0.5, 2); default random for gnp only",
    )

    f = sub.add_parser("phi", parents=[common, guard], help="exact conductance oracles")
    f.add_argument("graph")
    which = f.add_mutually_exclusive_group()
    which.add_argument("--against", metavar="H", help="generalized conductance against H")
    which.add_argument("--iso", action="store_true", help="isoperimetric number")
    which.add_argument("--st", nargs=2, type=int, metavar=("S", "T"), help="min s-t cut")

    e = sub.add_parser("eig", parents=[common, eig_opts], help="inverse power iteration")
    e.add_argument("graph")
    e.add_argument("h")

    s = sub.add_parser("sweep", parents=[common, eig_opts], help="generalized sweep cut")
    s.add_argument("graph")
    s.add_argument("h")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--vector", help="vector file, one value per line")
    src.add_argument("--from-eig", action="store_true", help="sweep the computed eigenvector")

    v = sub.add_parser("verify", parents=[common, eig_opts, guard], help="run checks")
    v.add_argument("graph")
    v.add_argument("h", nargs="?")
    v.add_argument("--checks", default=None, help=f"comma list from {','.join(CHECK_NAMES)}")
    v.add_argument("--samples", type=int, default=50)
    return p


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj: Any) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _configs(args) -> tuple[EigenConfig, SolveConfig]:
    return (
        EigenConfig(
            epsilon=args.eps,
            failure_prob=args.prob,
            max_rounds=args.max_rounds,
            seed=args.seed,
        ),
        SolveConfig(rel_residual_tol=args.cg_tol, preconditioner=args.precond),
    )


def _int_params(params: list[str], count: int, family: str) -> list[int]:
    if len(params) != count:
        raise InputError(f"{family} takes {count} parameter(s), got {len(params)}")
    try:
        return [int(x) for x in params]
    except ValueError:
        raise InputError(f"{family}: parameters must be integers") from None


def cmd_gen(args) -> int:
    fam, params = args.family, args.params
    if fam == "demand-of":
        if len(params) != 1:
            raise InputError("demand-of takes one graph file")
        g = demand_graph(read_graph(params[0]))
    elif fam == "kn-identity":
        (n,) = _int_params(params, 1, fam)
        g = kn_identity_graph(n)
    elif fam == "st-edge":
        n, s, t = _int_params(params, 3, fam)
        g = st_edge_graph(n, s, t)
    else:
        try:
            values = [float(x) if fam == "gnp" and i == 1 else int(x) for i, x in enumerate(params)]
        except ValueError:
            raise InputError(f"{fam}: bad parameters {params}") from None
        weighted = None if args.weights is None else args.weights == "random"
        g = generate(fam, *values, seed=args.seed, weighted=weighted)
    text = format_graph(g)
    if args.json:
        sys.stdout.write(_dump({"command": "gen", "n": g.n, "m": g.m, "graph": text}))
        if args.out:
            _emit(text, args.out)
    else:
        _emit(text, args.out)
    return EXIT_OK


def cmd_phi(args) -> int:
    g = read_graph(args.graph)
    limit = OracleLimit(args.max_n)
    if args.against:
        value, cut = generalized_conductance_exact(g, read_graph(args.against), limit)
    elif args.iso:
        value, cut = isoperimetric_exact(g, limit)
    elif args.st:
        value, cut = min_st_cut_exact(g, args.st[0], args.st[1], limit)
    else:
        value, cut = conductance_exact(g, limit)
    if args.json:
        _emit(_dump({"value": value, "cut": cut.vertices}), args.out)
    else:
        _emit(f"value {format_number(value)}\ncut {' '.join(map(str, cut.vertices))}\n", args.out)
    return EXIT_OK


def cmd_eig(args) -> int:
    g, h = read_graph(args.graph), read_graph(args.h)
    cfg, scfg = _configs(args)
    res = inverse_power_minimize(g, h, cfg, scfg)
    if args.out:
        _emit(format_vector(res.x), args.out)
    if args.json:
        sys.stdout.write(
            _dump(
                {
                    "command": "eig",
                    "seed": res.seed,
                    "lambda": res.lambda_estimate,
                    "rounds": res.rounds_used,
                    "restarts": res.restarts_used,
                    "converged": res.converged,
                    "residual": res.max_rel_residual,
                    "trace": res.trace,
                    "trial_lambdas": [None if math.isnan(v) else v for v in res.trial_lambdas],
                }
            )
        )
    else:
        sys.stdout.write(
            f"lambda {format_number(res.lambda_estimate)}\n"
            f"rounds {res.rounds_used}\nrestarts {res.restarts_used}\n"
            f"converged {str(res.converged).lower()}\n"
            f"residual {res.max_rel_residual:.3e}\n"
        )
    return EXIT_OK


def cmd_sweep(args) -> int:
    g, h = read_graph(args.graph), read_graph(args.h)
    if args.from_eig:
        cfg, scfg = _configs(args)
        x = inverse_power_minimize(g, h, cfg, scfg).x
    else:
        x = read_vector(args.vector, g.n)
    sw = generalized_sweep(g, h, x)
    k = sw.best_index - 1
    out = {
        "command": "sweep",
        "cut": sorted(int(v) for v in sw.ordering[: sw.best_index]),
        "cap_g": float(sw.prefix_caps_g[k]),
        "cap_h": float(sw.prefix_caps_h[k]),
        "ratio": sw.best_value,
    }
    if args.json:
        _emit(_dump(out), args.out)
    else:
        _emit(
            f"cut {' '.join(map(str, out['cut']))}\n"
            f"cap_g {format_number(out['cap_g'])}\ncap_h {format_number(out['cap_h'])}\n"
            f"ratio {format_number(out['ratio'])}\n",
            args.out,
        )
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    h = read_graph(args.h) if args.h else None
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    if args.samples < 0:
        raise InputError("--samples must be non-negative")
    cfg, scfg = _configs(args)
    graphs = [{"file": args.graph, "n": g.n, "m": g.m}]
    if h is not None:
        graphs.append({"file": args.h, "n": h.n, "m": h.m})
    report = run_verification(
        g,
        h,
        checks,
        samples=args.samples,
        seed=args.seed,
        eig_cfg=cfg,
        solve_cfg=scfg,
        graphs=graphs,
        limit=OracleLimit(args.max_n),
    )
    text = report.to_json() + "\n"
    if args.out:
        _emit(text, args.out)
    if args.json:
        sys.stdout.write(text)
    else:
        for c in report.checks:
            mark = "PASS" if c.passed else "FAIL"
            sys.stdout.write(f"{mark} {c.name}: {c.lhs!r} {c.relation} {c.rhs!r}\n")
        sys.stdout.write(f"overall {'PASS' if report.overall_pass else 'FAIL'}\n")
    return EXIT_OK if report.overall_pass else EXIT_FAILED


COMMANDS = {"gen": cmd_gen, "phi": cmd_phi, "eig": cmd_eig, "sweep": cmd_sweep, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except (InputError, GenerationError, OSError) as exc:
        print(f"gencheeger: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalError as exc:
        print(f"gencheeger: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
