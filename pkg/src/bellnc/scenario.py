"""Scenario files: a small YAML document validated into typed inputs.

Example::

    theta: pi
    support:
      kind: real
      v: 1
    points: [[0, 0, 1, 1], [1, 0, 0, 0]]
    orderings: [RI, IR]
    factorizations:
      - name: xy-zw
        vars: [x, y, z, w]
        p: "x*y - z*w"
        phi1: [["x", "z"], ["w", "y"]]
        phi2: [["y", "-z"], ["-w", "x"]]
    states:
      - name: bell
        basis: psi
        coefficients: [[["1/2*s2"]], [["1/2*s2"]]]
    ensembles:
      - state: bell
        parts: [[1, bell]]

Polynomials and scalars use the textio grammar.  Unknown keys are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import yaml

from .errors import ScenarioError
from .matrices import Matrix
from .mstates import PHI_BASIS, PSI_BASIS, SPIN_BASIS, Basis, MState
from .poly import SPACETIME, SPIN, Point, VarSet
from .support import SupportScenario
from .textio import parse_matrix, parse_poly, parse_scalar, parse_scalar_matrix

THETAS = ("formal", "zero", "pi")
ORDERING_TAGS = ("RI", "IR")

_TOP_KEYS = {
    "theta", "support", "points", "orderings", "grid", "factorizations",
    "states", "ensembles", "samples", "suites",
}
_SUPPORT_KEYS = {"kind", "v", "points"}
_FACTOR_KEYS = {"name", "vars", "p", "phi1", "phi2"}
_STATE_KEYS = {"name", "basis", "gram", "coefficients"}
_ENSEMBLE_KEYS = {"state", "parts"}
_NAMED_BASES = {"psi": PSI_BASIS, "phi": PHI_BASIS, "spin": SPIN_BASIS}


@dataclass(frozen=True)
class FactorizationInput:
    name: str
    p: object
    phi1: Matrix
    phi2: Matrix


@dataclass(frozen=True)
class Scenario:
    theta: str = None
    support: SupportScenario = None
    points: tuple = ()
    orderings: tuple = ()
    grid: int = None
    factorizations: tuple = ()
    states: tuple = ()  # (name, MState)
    ensembles: tuple = ()  # (state name, ((weight, state name), ...))
    samples: tuple = ()
    suites: tuple = ()


def _check_keys(block, allowed, where):
    if not isinstance(block, dict):
        raise ScenarioError(f"{where} must be a mapping")
    unknown = sorted(set(block) - allowed)
    if unknown:
        raise ScenarioError(f"unknown key(s) in {where}: {', '.join(map(str, unknown))}")


def _require(block, key, where):
    if key not in block:
        raise ScenarioError(f"{where} is missing {key!r}")
    return block[key]


def _rational(x, where) -> Fraction:
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError):
        raise ScenarioError(f"{where}: {x!r} is not a rational number") from None


def parse_point(coords, where="point") -> Point:
    if not isinstance(coords, (list, tuple)) or len(coords) != len(SPACETIME):
        raise ScenarioError(f"{where} needs {len(SPACETIME)} coordinates")
    return Point(SPACETIME, tuple(_rational(c, where) for c in coords))


def _varset(spec) -> VarSet:
    if spec in (None, "spacetime"):
        return SPACETIME
    if spec == "spin":
        return SPIN
    if isinstance(spec, list) and all(isinstance(v, str) for v in spec):
        if tuple(spec) == SPACETIME.names:
            return SPACETIME
        if tuple(spec) == SPIN.names:
            return SPIN
        try:
            return VarSet(tuple(spec), "extended")
        except ValueError as exc:
            raise ScenarioError(str(exc)) from None
    raise ScenarioError(f"bad variable declaration {spec!r}")


def _matrix_rows(rows, where):
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ScenarioError(f"{where} must be a nested list")
    return rows


def _support(block) -> SupportScenario:
    _check_keys(block, _SUPPORT_KEYS, "support")
    kind = _require(block, "kind", "support")
    if kind == "real":
        return SupportScenario.real(_rational(_require(block, "v", "support"), "support.v"))
    if kind == "instrumental":
        pts = _require(block, "points", "support")
        if not isinstance(pts, list) or len(pts) != 2:
            raise ScenarioError("instrumental support needs exactly two points")
        return SupportScenario.instrumental(parse_point(pts[0], "support point"), parse_point(pts[1], "support point"))
    raise ScenarioError(f"unknown support kind {kind!r}")


def _factorization(block, k) -> FactorizationInput:
    where = f"factorizations[{k}]"
    _check_keys(block, _FACTOR_KEYS, where)
    vs = _varset(block.get("vars"))
    return FactorizationInput(
        str(block.get("name", f"f{k}")),
        parse_poly(str(_require(block, "p", where)), vs),
        parse_matrix(_matrix_rows(_require(block, "phi1", where), where), vs),
        parse_matrix(_matrix_rows(_require(block, "phi2", where), where), vs),
    )


def _state(block, k):
    where = f"states[{k}]"
    _check_keys(block, _STATE_KEYS, where)
    basis = _require(block, "basis", where)
    if isinstance(basis, str) and basis in _NAMED_BASES:
        basis = _NAMED_BASES[basis]
    elif isinstance(basis, list):
        gram = block.get("gram")
        gram = parse_scalar_matrix(_matrix_rows(gram, where)) if gram is not None else None
        try:
            basis = Basis(tuple(map(str, basis)), gram)
        except ValueError as exc:
            raise ScenarioError(f"{where}: {exc}") from None
    else:
        raise ScenarioError(f"{where}: unknown basis {basis!r}")
    coeffs = _require(block, "coefficients", where)
    if not isinstance(coeffs, list):
        raise ScenarioError(f"{where}: coefficients must be a list of matrices")
    try:
        state = MState(basis, tuple(parse_scalar_matrix(_matrix_rows(c, where)) for c in coeffs))
    except ValueError as exc:
        if isinstance(exc, ScenarioError):
            raise
        raise ScenarioError(f"{where}: {exc}") from None
    return str(block.get("name", f"s{k}")), state


def _ensemble(block, k, names):
    where = f"ensembles[{k}]"
    _check_keys(block, _ENSEMBLE_KEYS, where)
    target = _require(block, "state", where)
    parts = _require(block, "parts", where)
    if target not in names:
        raise ScenarioError(f"{where}: unknown state {target!r}")
    out = []
    for part in parts:
        if not isinstance(part, list) or len(part) != 2 or part[1] not in names:
            raise ScenarioError(f"{where}: each part is [weight, state name]")
        out.append((parse_scalar(str(part[0])), part[1]))
    return target, tuple(out)


def load_scenario(text: str) -> Scenario:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ScenarioError(f"malformed scenario file: {exc}") from None
    if data is None:
        data = {}
    _check_keys(data, _TOP_KEYS, "scenario")
    theta = data.get("theta")
    if theta is not None and theta not in THETAS:
        raise ScenarioError(f"theta must be one of {', '.join(THETAS)}")
    orderings = tuple(data.get("orderings", ()))
    if any(o not in ORDERING_TAGS for o in orderings):
        raise ScenarioError("orderings must be RI or IR")
    grid = data.get("grid")
    if grid is not None and (not isinstance(grid, int) or grid < 0):
        raise ScenarioError("grid must be a nonnegative integer")
    states = tuple(_state(b, k) for k, b in enumerate(data.get("states", []) or []))
    names = {n for n, _ in states}
    support = _support(data["support"]) if "support" in data else None
    return Scenario(
        theta=theta,
        support=support,
        points=tuple(parse_point(p) for p in data.get("points", []) or []),
        orderings=orderings,
        grid=grid,
        factorizations=tuple(_factorization(b, k) for k, b in enumerate(data.get("factorizations", []) or [])),
        states=states,
        ensembles=tuple(_ensemble(b, k, names) for k, b in enumerate(data.get("ensembles", []) or [])),
        samples=tuple(parse_poly(str(s), SPACETIME) for s in data.get("samples", []) or []),
        suites=tuple(map(str, data.get("suites", []) or [])),
    )


def load_scenario_file(path) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return load_scenario(fh.read())
