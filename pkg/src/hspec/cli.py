"""Command-line front end.

Exit status: 0 success, 1 input error, 2 non-convergence, 3 a proved bound
reported as violated. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import formats
from .bounds import ReportConfig, SCHEMA, fmt, full_report, round12
from .clique import clique_number
from .errors import InputError, NotConverged
from .hypercore import complete_r_graph, edge_types, random_r_graph, vertex_profile
from .lagrange import maximize_L
from .spectral import PowerIterationConfig, principal_eigenvector_sum, spectral_radius

EXIT_OK, EXIT_INPUT, EXIT_NOT_CONVERGED, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _types(text):
    try:
        return sorted({int(t) for t in text.split(",") if t.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hspec", description="Spectral analysis of general hypergraphs.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    numeric = _Parser(add_help=False)
    numeric.add_argument("--tol", type=_positive_float, default=1e-10)
    numeric.add_argument("--max-iter", type=int, default=100_000)
    numeric.add_argument("--shift", type=float, default=1.0)
    numeric.add_argument("--starts", type=int, default=32)
    numeric.add_argument("--seed", type=int, default=0)

    for verb, helptext in [
        ("analyze", "full analysis and bound report"),
        ("spectral", "spectral radius and principal eigenvector"),
        ("lagrangian", "maximize L(H, x) over the simplex"),
        ("clique", "exact clique number"),
        ("bounds", "bound report only"),
    ]:
        p = sub.add_parser(verb, help=helptext, parents=[common, numeric])
        p.add_argument("path", help="hypergraph file (text or JSON), '-' for stdin")

    gen = sub.add_parser("gen", help="generate a hypergraph")
    gsub = gen.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    g = gsub.add_parser("complete", parents=[common])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--types", type=_types, required=True)
    g = gsub.add_parser("random", parents=[common])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--types", type=_types, required=True)
    g.add_argument("--prob", type=float, required=True)
    g.add_argument("--seed", type=int, default=0)
    return parser


def _load(path):
    if path == "-":
        return formats.parse(sys.stdin.read())
    try:
        return formats.load(path)
    except FileNotFoundError:
        raise InputError(f"file not found: {path}") from None
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _power_cfg(args):
    return PowerIterationConfig(tolerance=args.tol, max_iterations=args.max_iter, shift=args.shift)


def _report_cfg(args):
    return ReportConfig(power=_power_cfg(args), starts=args.starts, seed=args.seed, tol=args.tol)


def _vec(x):
    return [round12(float(v)) for v in x]


def _emit(args, out, payload: dict, lines: list[str]):
    if args.format == "json":
        out.write(json.dumps({"schema": SCHEMA, **payload}, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def _cmd_gen(args, out):
    if args.kind == "complete":
        H = complete_r_graph(args.n, args.types)
    else:
        H = random_r_graph(args.n, args.types, args.prob, args.seed)
    out.write(formats.dumps_json(H) if args.format == "json" else formats.dumps_text(H))
    return EXIT_OK


def _cmd_spectral(args, out):
    H = _load(args.path)
    r = spectral_radius(H, _power_cfg(args))
    U = principal_eigenvector_sum(r)
    payload = {
        "rho": round12(r.rho),
        "U": round12(U),
        "eigenvector": _vec(r.eigenvector),
        "residual": round12(r.residual),
        "iterations": r.iterations,
        "bracket": [round12(r.lambda_lo), round12(r.lambda_hi)],
        "connected": r.positive_support,
        "component_rho": [[list(c), round12(v)] for c, v in r.component_rhos],
    }
    lines = [
        f"rho {fmt(r.rho)}",
        f"U {fmt(U)}",
        "eigenvector " + " ".join(fmt(float(v)) for v in r.eigenvector),
        f"residual {fmt(r.residual)}",
        f"iterations {r.iterations}",
    ]
    if not r.positive_support:
        lines += [f"component {list(c)} rho {fmt(v)}" for c, v in r.component_rhos]
    _emit(args, out, payload, lines)
    return EXIT_OK


def _cmd_lagrangian(args, out):
    H = _load(args.path)
    res = maximize_L(H, starts=args.starts, seed=args.seed, tol=args.tol)
    payload = {
        "value": round12(res.value),
        "maximizer": _vec(res.maximizer),
        "kkt_residual": round12(res.kkt_residual),
        "starts": res.starts_used,
        "converged_starts": res.converged_starts,
    }
    lines = [
        f"L {fmt(res.value)}",
        "maximizer " + " ".join(fmt(float(v)) for v in res.maximizer),
        f"kkt_residual {fmt(res.kkt_residual)}",
        f"starts {res.starts_used} converged {res.converged_starts}",
    ]
    _emit(args, out, payload, lines)
    return EXIT_OK


def _cmd_clique(args, out):
    H = _load(args.path)
    c = clique_number(H)
    payload = {"omega": c.omega, "witness": list(c.witness), "nodes_explored": c.nodes_explored}
    lines = [f"omega {c.omega}", "witness " + " ".join(map(str, c.witness))]
    _emit(args, out, payload, lines)
    return EXIT_OK


def _report_or_partial(H, args):
    try:
        return full_report(H, _report_cfg(args)), EXIT_OK
    except NotConverged as exc:
        print(f"hspec: {exc}", file=sys.stderr)
        return exc.diagnostics["report"], EXIT_NOT_CONVERGED


def _status(report, status):
    if status == EXIT_OK and report.violations:
        names = ", ".join(r.name for r in report.violations)
        print(f"hspec: bound violated: {names}", file=sys.stderr)
        return EXIT_VIOLATION
    return status


def _cmd_bounds(args, out):
    H = _load(args.path)
    report, status = _report_or_partial(H, args)
    out.write(report.to_json() if args.format == "json" else report.to_text())
    return _status(report, status)


def _cmd_analyze(args, out):
    H = _load(args.path)
    report, status = _report_or_partial(H, args)
    s = report.summary
    profiles = {str(v): vertex_profile(H, v).as_list() for v in range(1, H.n + 1)}
    if args.format == "json":
        doc = {"schema": SCHEMA, "profiles": profiles, **report.to_dict()}
        out.write(json.dumps(doc, indent=2) + "\n")
        return _status(report, status)

    lines = [
        f"n {H.n}",
        f"m {H.rank}",
        "R {" + ",".join(map(str, edge_types(H))) + "}",
        "edges by type " + " ".join(f"{k}:{v}" for k, v in s["edges_by_type"].items()),
        f"components {len(s['components'])}: " + " ".join(
            "{" + ",".join(map(str, c)) + "}" for c in s["components"]
        ),
    ]
    lines += [
        f"R({v}) " + "{" + ",".join(map(str, p)) + "}" for v, p in profiles.items()
    ]
    lines.append(f"omega {s['omega']} witness " + " ".join(map(str, s["clique_witness"])))
    if "rho" in s:
        lines.append(f"rho {fmt(s['rho'])}")
        if len(s.get("component_rho", [])) > 1:
            lines += [f"  component {c} rho {fmt(r)}" for c, r in s["component_rho"]]
        lines.append(f"U {fmt(s['U'])}")
    if "L_measured" in s:
        lines.append(f"L measured {fmt(s['L_measured'])}")
        lines.append("L maximizer " + " ".join(fmt(v) for v in s["L_maximizer"]))
        if s.get("L_predicted") is not None:
            lines.append(f"L predicted {fmt(s['L_predicted'])}")
    lines.append("")
    out.write("\n".join(lines) + "\n" + report.to_text())
    return _status(report, status)


COMMANDS = {
    "analyze": _cmd_analyze,
    "spectral": _cmd_spectral,
    "lagrangian": _cmd_lagrangian,
    "clique": _cmd_clique,
    "bounds": _cmd_bounds,
    "gen": _cmd_gen,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.verb](args, out)
    except NotConverged as exc:
        print(f"hspec: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    except InputError as exc:
        print(f"hspec: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
