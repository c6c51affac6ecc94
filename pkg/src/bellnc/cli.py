"""Command-line driver: ``bellnc {factor,state,support,collapse,verify-all}``.

Exit codes: 0 when every check passes, 1 on a verification failure, 2 on
input errors (unreadable or invalid scenario files, unknown presets).
"""

from __future__ import annotations

import argparse
import sys

from .blowup import ORDERINGS, BlowupRing
from .errors import KernelError
from .mstates import (
    born_weights,
    density,
    full_trace,
    is_emergent,
    is_normalized,
    is_pure,
    partial_trace,
    verify_ensemble,
)
from .poly import SPACETIME, Point
from .report import Report
from .scalars import Scalar
from .scenario import THETAS, Scenario, load_scenario_file
from .suites import (
    FACTOR_PRESETS,
    SUITE_ALIASES,
    SUITES,
    _b,
    bell_density_records,
    collapse_grid_records,
    collapse_point_records,
    factorization_preset,
    factorization_record,
    grid_points,
    run_suites,
    support_records,
    emergent_state_records,
)
from .support import SupportingRing, SupportScenario

STATE_PRESETS = ("emergent", "thm31", "bell-density")
SUPPORT_PRESETS = ("real", "instrumental")
COLLAPSE_PRESETS = ("default",)
DEFAULT_POINTS = ((0, 0, 1, 1), (1, 0, 0, 0))


class InputError(Exception):
    pass


def _scenario(args) -> Scenario:
    return load_scenario_file(args.file) if args.file else Scenario()


def _theta(args, sc: Scenario, default: str) -> str:
    return args.theta or sc.theta or default


def _preset(args, allowed):
    if args.preset and args.preset not in allowed:
        raise InputError(f"unknown preset {args.preset!r}; choose from {', '.join(allowed)}")
    return args.preset


def cmd_factor(args) -> Report:
    sc = _scenario(args)
    theta = _theta(args, sc, "formal")
    report = Report("factor")
    if sc.factorizations and not args.preset:
        for f in sc.factorizations:
            p, a, b = f.p, f.phi1, f.phi2
            if theta != "formal":
                p, a, b = p.specialize_theta(theta), a.specialize_theta(theta), b.specialize_theta(theta)
            factorization_record(report, f"factor/{f.name}", p, a, b, "derived")
        return report
    names = [_preset(args, FACTOR_PRESETS)] if args.preset else list(FACTOR_PRESETS)
    for name in names:
        thunk, prov, desc = factorization_preset(name, theta)
        F = thunk()
        factorization_record(report, f"factor/{name}", F.p, F.phi1, F.phi2, prov, desc)
    return report


def _state_records(report: Report, name, s):
    rho = density(s)
    herm = rho.is_hermitian()
    report.add(f"state/{name}/density", "Hermitian block matrix", "trivial", str(rho), herm)
    ft, pt = full_trace(rho), partial_trace(rho)
    report.add(
        f"state/{name}/trace", "full trace = trace of partial trace", "trivial",
        f"full={ft}, partial={pt}", ft == pt.trace(),
    )
    report.add(
        f"state/{name}/purity", "exact comparison of rho^2 with rho", "trivial",
        f"pure={_b(is_pure(rho))}, emergent={_b(is_emergent(s))}", True,
    )
    w = born_weights(s)
    label = "probabilities" if is_normalized(s) else "weights (unnormalized)"
    report.add(
        f"state/{name}/born", "Born weights sum to the full trace", "derived",
        f"{label} ({', '.join(map(str, w))})", sum(w, Scalar.of(0)) == ft,
    )


def cmd_state(args) -> Report:
    sc = _scenario(args)
    theta = _theta(args, sc, None)
    report = Report("state")
    preset = _preset(args, STATE_PRESETS)
    if preset in ("emergent", "thm31") or (not preset and not args.file):
        emergent_state_records(report, theta or "formal")
    elif preset == "bell-density":
        bell_density_records(report, theta or "zero")
    else:
        states = dict(sc.states)
        if theta and theta != "formal":
            states = {n: s.specialize_theta(theta) for n, s in states.items()}
        for name, s in sorted(states.items()):
            _state_records(report, name, s)
        for target, parts in sc.ensembles:
            try:
                ok = verify_ensemble(density(states[target]), [(w, states[n]) for w, n in parts])
            except ValueError as exc:
                raise InputError(str(exc)) from None
            text = " + ".join(f"{w} |{n}><{n}|" for w, n in parts)
            report.add(f"state/{target}/ensemble", f"rho = {text}", "derived", _b(ok), ok)
    return report


def cmd_support(args) -> Report:
    sc = _scenario(args)
    report = Report("support")
    preset = _preset(args, SUPPORT_PRESETS)
    if sc.support is not None and not preset:
        support_records(report, sc.support, sc.samples, "support")
        return report
    if preset in (None, "real"):
        support_records(report, SupportScenario.real(1), (), "support/real")
    if preset in (None, "instrumental"):
        support_records(report, SupportScenario.instrumental((0, 0, 1, 1), (0, 0, -1, 1)), (), "support/instrumental")
    return report


def cmd_collapse(args) -> Report:
    sc = _scenario(args)
    _preset(args, COLLAPSE_PRESETS)
    theta = _theta(args, sc, "pi")
    support = sc.support or SupportScenario.real(1)
    A = BlowupRing(SupportingRing.from_scenario(support))
    tags = ("RI", "IR") if args.ordering in (None, "both") else (args.ordering,)
    if args.ordering is None and sc.orderings:
        tags = sc.orderings
    orderings = [ORDERINGS[t] for t in tags]
    grid = args.grid if args.grid is not None else sc.grid
    points = list(sc.points)
    if not points and grid is None:
        points = [Point(SPACETIME, tuple(map(Scalar.of, c))) for c in DEFAULT_POINTS]
    report = Report("collapse")
    for p in points:
        for g in orderings:
            collapse_point_records(report, A, p, g, theta, "collapse")
    if grid is not None:
        collapse_grid_records(report, A, grid_points(grid), orderings, theta, f"collapse/grid-{grid}")
    return report


def cmd_verify_all(args) -> Report:
    sc = _scenario(args)
    names = [args.only] if args.only else list(sc.suites)
    unknown = [n for n in names if n not in SUITES and n not in SUITE_ALIASES]
    if unknown:
        raise InputError(f"unknown suite {unknown[0]!r}; choose from {', '.join(SUITES)}")
    return run_suites(names or None)


COMMANDS = {
    "factor": cmd_factor,
    "state": cmd_state,
    "support": cmd_support,
    "collapse": cmd_collapse,
    "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bellnc", description="Exact verification of Bell-state algebra.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("file", nargs="?", help="scenario file (YAML)")
        p.add_argument("--json", action="store_true", help="emit one JSON document")
        if name != "verify-all":
            p.add_argument("--preset")
        if name in ("factor", "state", "collapse"):
            p.add_argument("--theta", choices=THETAS)
        if name == "collapse":
            p.add_argument("--ordering", choices=("RI", "IR", "both"))
            p.add_argument("--grid", type=int, metavar="N")
        if name == "verify-all":
            p.add_argument("--only", metavar="SUITE")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "grid", None) is not None and args.grid < 0:
        print("error: --grid must be nonnegative", file=sys.stderr)
        return 2
    try:
        report = COMMANDS[args.command](args)
    except (InputError, KernelError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if args.json else report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
