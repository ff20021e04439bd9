"""Command-line front end: ``horadam-gf {gf,series,eval,verify}``.

Exit codes: 0 success, 1 usage or evaluation error, 2 a verification FAIL
(or an ``--oracle`` mismatch).
"""

import argparse
import json
import sys

from .errors import PoleError, SymbolicResidueError
from .exactnum import rat_parse, rat_str
from .gfengine import DEFAULT_N, eval_at, horadam_gf, series_coeffs
from .horadam import PRESET_NAMES, HoradamParams, power_series_oracle, preset, symbolic_params
from .polyring import scalar_text
from .verify import DEFAULT_SEED, ERRATUM, FAIL, GROUPS, PASS, run_all

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_params(sp):
    g = sp.add_argument_group("sequence parameters")
    g.add_argument("--preset", choices=PRESET_NAMES)
    for name in "abpq":
        g.add_argument(f"--{name}", metavar="VALUE",
                       help="rational like 1/2, or a polynomial in the symbols, e.g. 2*t")
    g.add_argument("--symbolic", action="store_true", help="keep a, b, p, q symbolic")
    sp.add_argument("--k", type=int, required=True, help="power k >= 1")


def _params(args) -> HoradamParams:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    explicit = [getattr(args, n) for n in "abpq"]
    chosen = sum([args.preset is not None, any(v is not None for v in explicit), args.symbolic])
    if chosen != 1:
        raise UsageError("choose exactly one of --preset, --a/--b/--p/--q, --symbolic")
    if args.preset:
        return preset(args.preset)
    if args.symbolic:
        return symbolic_params()
    if any(v is None for v in explicit):
        raise UsageError("--a, --b, --p and --q must all be given")
    try:
        return HoradamParams(*explicit)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from exc


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_gf(args) -> int:
    params = _params(args)
    gf = horadam_gf(args.k, params)
    _emit(args, gf.to_json(), [
        f"numerator:   {gf.numerator.to_text()}",
        f"denominator: {gf.denominator.to_text()}",
        f"H_{args.k}(x) = {gf.reduced.to_text()}",
    ])
    return EXIT_OK


def cmd_series(args) -> int:
    params = _params(args)
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    coeffs = series_coeffs(horadam_gf(args.k, params), args.n)
    payload = {
        "k": args.k,
        "params": params.to_json(),
        "n": args.n,
        "coefficients": [scalar_text(c) for c in coeffs],
    }
    texts = payload["coefficients"]
    lines = [" ".join(texts)] if not params.symbolic else list(texts)
    status = EXIT_OK
    if args.oracle:
        oracle = power_series_oracle(params, args.k, args.n)
        match = oracle == coeffs
        payload["oracle"] = [scalar_text(c) for c in oracle]
        payload["match"] = match
        lines = [
            f"{i}\t{g}\t{o}\t{'ok' if g == o else 'MISMATCH'}"
            for i, (g, o) in enumerate(zip(texts, payload["oracle"]))
        ]
        lines.append(f"match: {'yes' if match else 'no'}")
        status = EXIT_OK if match else EXIT_FAIL
    _emit(args, payload, lines)
    return status


def cmd_eval(args) -> int:
    params = _params(args)
    if args.x is None:
        raise UsageError("eval needs --x")
    try:
        x0 = rat_parse(args.x)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(str(exc)) from exc
    value = eval_at(horadam_gf(args.k, params), x0)
    payload = {"k": args.k, "params": params.to_json(), "x": rat_str(x0), "value": rat_str(value)}
    _emit(args, payload, [rat_str(value)])
    return EXIT_OK


def cmd_verify(args) -> int:
    only = None
    if args.only:
        only = [g.strip() for chunk in args.only for g in chunk.split(",") if g.strip()]
    try:
        reports = run_all(only, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    counts = {s: sum(r.status == s for r in reports) for s in (PASS, ERRATUM, FAIL)}
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.line())
        print(f"{len(reports)} checks: {counts[PASS]} PASS, {counts[ERRATUM]} ERRATUM, {counts[FAIL]} FAIL")
    return EXIT_FAIL if counts[FAIL] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="horadam-gf", description=(
        "Exact generating functions of k-th powers of Horadam sequences "
        "w[n+2] = p*w[n+1] + q*w[n], w[0] = a, w[1] = b."))
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("gf", help="print det(delta_hat)/det(delta) and its reduced form")
    _add_params(sp)
    sp.set_defaults(func=cmd_gf)

    sp = sub.add_parser("series", help="power series coefficients of H_k")
    _add_params(sp)
    sp.add_argument("--n", type=int, default=DEFAULT_N, help=f"number of coefficients (default {DEFAULT_N})")
    sp.add_argument("--oracle", action="store_true", help="compare with the brute-force recurrence")
    sp.set_defaults(func=cmd_series)

    sp = sub.add_parser("eval", help="exact value of H_k at a rational point")
    _add_params(sp)
    sp.add_argument("--x", help="rational point, e.g. 1/100")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("verify", help="run the verification harness")
    sp.add_argument("--only", action="append", metavar="GROUP",
                    help=f"restrict to groups: {', '.join(GROUPS)} (comma separated or repeated)")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.set_defaults(func=cmd_verify)

    for name, p in sub.choices.items():
        p.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"horadam-gf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PoleError, SymbolicResidueError) as exc:
        print(f"horadam-gf: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
