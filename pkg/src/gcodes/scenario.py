"""Loading and validating scenario files.

A scenario is a JSON object::

    {
      "name": "S1",
      "ring": {"modulus": 2, "module_rank": 1},
      "involution": [0, 1],                      (optional, default identity)
      "group": {"degree": 3, "generators": [[2, 3, 1]], "cap": 10000},
      "forms": [{"gram": [["1/2"]]}],
      "quadratic": [{"table": ["0", "1/2"]}],    (optional)
      "codes": [{"generators": [[1, 1, 1]]}],
      "checks": ["all"],
      "caps": {"dual": 4096, "ambient": 256}     (optional)
    }

The first form is the designated form of the form ring; duals are taken
against all listed forms.  For k > 1 each word entry is a coordinate list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any

from .codes import DEFAULT_AMBIENT_CAP, DEFAULT_DUAL_CAP, DualSpec, GCode, code_closure, g_dual, theta_code
from .cwgroup import (
    DEFAULT_CLOSURE_DIM, DEFAULT_DENSE_CAP, DEFAULT_MATRIX_GROUP_CAP, GRepresentation, compute_conductor,
    find_symmetric_idempotents,
)
from .errors import AssumptionViolated, NotAUnit, ParseError
from .exactnum import parse_rational
from .forms import BilinearForm, FormRingRep, QuadraticMap
from .perm import DEFAULT_GROUP_CAP, PermGroup, ThetaImage, group_closure
from .ring import Involution, RingSpec, check_unit, validate_involution

DEFAULT_CAPS = {
    "group": DEFAULT_GROUP_CAP,
    "dual": DEFAULT_DUAL_CAP,
    "ambient": DEFAULT_AMBIENT_CAP,
    "matrix_group": DEFAULT_MATRIX_GROUP_CAP,
    "dense": DEFAULT_DENSE_CAP,
    "closure_dim": DEFAULT_CLOSURE_DIM,
}


@dataclass
class Scenario:
    name: str
    R: RingSpec
    J: Involution
    G: PermGroup
    ambient: ThetaImage
    forms: tuple[BilinearForm, ...]
    quadratic: tuple[QuadraticMap, ...]
    codes: tuple[GCode, ...]
    checks: tuple[str, ...]
    caps: dict[str, int]
    conductor: int
    echo: dict[str, Any] = field(default_factory=dict)

    @property
    def M(self) -> DualSpec:
        return DualSpec(self.forms)

    @cached_property
    def rep(self) -> FormRingRep:
        return FormRingRep(self.forms[0], self.quadratic, self.J)

    @cached_property
    def rho(self) -> GRepresentation:
        return GRepresentation(self.ambient, self.rep, self.conductor)

    def orbit_dual_agrees(self) -> bool:
        """Whether duals against the listed forms equal duals against their (R x R)-orbit."""
        orbit = DualSpec.orbit_of(*self.forms)
        return all(
            g_dual(theta_code(C), self.M, self.ambient) == g_dual(theta_code(C), orbit, self.ambient)
            for C in self.codes
        )


def _get(obj: dict, key: str, where: str, kind=None, default=...):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", where)
    if key not in obj:
        if default is ...:
            raise ParseError(f"missing key {key!r}", where)
        return default
    val = obj[key]
    if kind is not None and not isinstance(val, kind) or isinstance(val, bool) and kind is int:
        raise ParseError(f"{key!r} has the wrong type", f"{where}.{key}")
    return val


def _rational(text, where: str):
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise ParseError(str(exc), where) from None


def _element(R: RingSpec, x, where: str) -> int:
    if R.module_rank == 1 and isinstance(x, int) and not isinstance(x, bool):
        if not 0 <= x < R.modulus:
            raise ParseError(f"{x} is not a residue mod {R.modulus}", where)
        return x
    if isinstance(x, list) and len(x) == R.module_rank and all(isinstance(c, int) for c in x):
        if any(not 0 <= c < R.modulus for c in x):
            raise ParseError(f"{x} has a coordinate outside [0, {R.modulus})", where)
        return R.index(x)
    raise ParseError(f"cannot read {x!r} as an element of (Z/{R.modulus})^{R.module_rank}", where)


def scenario_from_dict(data: dict, source: str = "<scenario>",
                       cap_overrides: dict[str, int] | None = None) -> Scenario:
    """Validate ``data`` and build a Scenario; every standing assumption is checked here.

    ``cap_overrides`` wins over caps given in the file.
    """
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", source)
    caps = dict(DEFAULT_CAPS)
    for key, val in _get(data, "caps", source, dict, {}).items():
        if key not in caps or not isinstance(val, int) or val < 1:
            raise ParseError(f"bad cap {key!r}", f"{source}.caps")
        caps[key] = val

    ring = _get(data, "ring", source, dict)
    m = _get(ring, "modulus", f"{source}.ring", int)
    k = _get(ring, "module_rank", f"{source}.ring", int, 1)
    if m < 2 or k < 1:
        raise ParseError("need modulus >= 2 and module_rank >= 1", f"{source}.ring")
    R = RingSpec(m, k)

    inv = _get(data, "involution", source, list, None)
    if inv is not None and not all(isinstance(x, int) for x in inv):
        raise ParseError("involution must list residues", f"{source}.involution")
    J = Involution.identity(R) if inv is None else Involution(tuple(inv))
    if inv is not None:
        validate_involution(R, J)

    grp = _get(data, "group", source, dict)
    n = _get(grp, "degree", f"{source}.group", int)
    if n < 1:
        raise ParseError("degree must be positive", f"{source}.group.degree")
    gens = _get(grp, "generators", f"{source}.group", list, [])
    for i, g in enumerate(gens):
        if not isinstance(g, list) or not all(isinstance(x, int) for x in g):
            raise ParseError("generator must list images", f"{source}.group.generators[{i}]")
    caps["group"] = _get(grp, "cap", f"{source}.group", int, caps["group"])
    caps.update(cap_overrides or {})
    G = group_closure(n, [tuple(g) for g in gens], caps["group"])
    try:
        check_unit(R, G.order)
    except NotAUnit:
        raise AssumptionViolated(
            f"|G| = {G.order} is not a unit in Z/{m}: the averaging idempotent "
            f"|G|^-1 sum_g g does not exist, so theta(V^n) and the G-duals are undefined"
        ) from None
    ambient = ThetaImage(G, R)

    forms = []
    for i, f in enumerate(_get(data, "forms", source, list)):
        where = f"{source}.forms[{i}]"
        gram = _get(f, "gram", where, list)
        entries = [[_rational(c, f"{where}.gram[{a}][{b}]") for b, c in enumerate(row)]
                   for a, row in enumerate(gram)]
        try:
            forms.append(BilinearForm(R, entries))
        except ValueError as exc:
            raise ParseError(str(exc), where) from None
    if not forms:
        raise ParseError("at least one form is required", f"{source}.forms")

    quadratic = []
    for i, q in enumerate(_get(data, "quadratic", source, list, [])):
        where = f"{source}.quadratic[{i}]"
        table = [_rational(x, f"{where}.table[{j}]") for j, x in enumerate(_get(q, "table", where, list))]
        try:
            quadratic.append(QuadraticMap(R, table))
        except ValueError as exc:
            raise ParseError(str(exc), where) from None

    codes = []
    for i, c in enumerate(_get(data, "codes", source, list, [])):
        where = f"{source}.codes[{i}]"
        words = []
        for j, w in enumerate(_get(c, "generators", where, list)):
            if not isinstance(w, list) or len(w) != n:
                raise ParseError(f"word must have length {n}", f"{where}.generators[{j}]")
            words.append(tuple(_element(R, x, f"{where}.generators[{j}]") for x in w))
        codes.append(code_closure(R, G, words, caps["dual"]))

    checks = _get(data, "checks", source, list, ["all"])
    if not all(isinstance(c, str) for c in checks):
        raise ParseError("checks must be names", f"{source}.checks")

    dens = [f.den for f in forms] + [q.den for q in quadratic]
    K = compute_conductor(ambient, dens, find_symmetric_idempotents(R, J))

    echo = {
        "name": data.get("name", Path(source).stem),
        "modulus": m,
        "module_rank": k,
        "degree": n,
        "group_order": G.order,
        "orbits": [list(o) for o in ambient.orbits.orbits],
        "t": ambient.t,
        "forms": [[[str(c) for c in row] for row in f.gram] for f in forms],
        "quadratic": [[str(x) for x in q.table] for q in quadratic],
        "involution": list(J.table),
        "code_generators": [[list(g) for g in C.generators] for C in codes],
    }
    return Scenario(echo["name"], R, J, G, ambient, tuple(forms), tuple(quadratic),
                    tuple(codes), tuple(checks), caps, K, echo)


def parse_scenario(path, cap_overrides: dict[str, int] | None = None) -> Scenario:
    """Read a scenario file; ParseError names the location of any problem."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", str(path)) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from None
    return scenario_from_dict(data, str(path), cap_overrides)

