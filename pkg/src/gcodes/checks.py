"""Check dispatch, report assembly and report output."""

from __future__ import annotations

import json
from typing import Callable

from . import __version__
from .codes import (
    dual_identities_check, hayden_check, iota_selfdual_check, lemma_dual_check, ru_lemma_check,
)
from .cwgroup import (
    conjecture_explore, group_closure_matrices, verify_cwinv, verify_parainv,
)
from .enumerators import verify_fwemac, verify_gmac, verify_hwemac
from .errors import CapExceeded, GCodesError, NotSelfDualIsotropic, UnknownCheck
from .results import ERROR, FAILING, FINDING, MISMATCH, OK, SKIPPED, CheckResult
from .scenario import Scenario

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _lemma_dual(s, C):
    return lemma_dual_check(C, s.M, s.ambient)


def _hayden(s, C):
    return hayden_check(C, s.M, s.caps["dual"])


def _gmac(s, C):
    return verify_gmac(C, s.M, s.ambient)


def _hwemac(s, C):
    return verify_hwemac(C, s.M, s.ambient)


def _fwemac(s, C):
    return verify_fwemac(C, s.forms, s.ambient, s.conductor)


def _dual_identities(s, C):
    return dual_identities_check(C, s.M, s.ambient, s.caps["dual"])


def _cwinv(s, C):
    return verify_cwinv(s.rho, C)


def _iota_selfdual(s, C):
    results = []
    for idem in s.rho.idempotents:
        if idem.iota in (0, 1):
            continue
        results.append(iota_selfdual_check(C, idem.iota, s.M, s.ambient))
    return results or CheckResult("iota-selfdual", SKIPPED, {"reason": "no symmetric idempotent other than 0 and 1"})


def _parainv(s):
    return verify_parainv(s.rho, s.caps["ambient"])


def _conjecture(s):
    return conjecture_explore(s.rho, s.caps["ambient"], s.caps["dense"])


def _cw_group(s):
    """Generator matrices and, when the closure fits under the cap, the group order."""
    if s.rho.size > s.caps["closure_dim"]:
        raise CapExceeded("|theta(V^n)| for matrix group closure", s.caps["closure_dim"])
    gens = s.rho.cw_generators()
    payload = {"generator_matrices": {name: g.to_strings() for name, g in gens}}
    try:
        payload["group_order"] = group_closure_matrices([g for _, g in gens], s.caps["matrix_group"]).order
    except CapExceeded:
        payload["group_order"] = "cap-exceeded"
        payload["cap_exceeded"] = True
        return CheckResult("cw-group", SKIPPED, payload)
    return CheckResult("cw-group", OK, payload)


def _ru_lemma(s):
    return ru_lemma_check(s.R, s.ambient)


CODE_CHECKS: dict[str, Callable] = {
    "lemma-dual": _lemma_dual,
    "hayden": _hayden,
    "macwilliams-gmac": _gmac,
    "macwilliams-hwe": _hwemac,
    "macwilliams-fwe": _fwemac,
    "dual-identities": _dual_identities,
    "cwinv": _cwinv,
    "iota-selfdual": _iota_selfdual,
}

SCENARIO_CHECKS: dict[str, Callable] = {
    "parainv": _parainv,
    "conjecture": _conjecture,
    "cw-group": _cw_group,
    "ru-lemma": _ru_lemma,
}

CHECK_NAMES = tuple(CODE_CHECKS) + tuple(SCENARIO_CHECKS)


def _error(name: str, exc: GCodesError) -> CheckResult:
    payload = {"error": type(exc).__name__, "message": str(exc)}
    witness = getattr(exc, "witness", None)
    if witness is not None:
        payload["witness"] = list(witness) if isinstance(witness, tuple) else witness
    if isinstance(exc, CapExceeded):
        return CheckResult(name, SKIPPED, {**payload, "cap_exceeded": True})
    return CheckResult(name, ERROR, payload)


def _run_one(fn, name: str, args, explicit: bool) -> list[CheckResult]:
    """Under "all" (explicit=False) a check whose precondition or size cap
    does not hold is skipped quietly; asked for by name it reports why."""
    try:
        out = fn(*args)
    except GCodesError as exc:
        if not explicit and isinstance(exc, (NotSelfDualIsotropic, CapExceeded)):
            return [CheckResult(name, SKIPPED, {"reason": str(exc)})]
        return [_error(name, exc)]
    return out if isinstance(out, list) else [out]


def run_check(s: Scenario, name: str, explicit: bool = True) -> list[dict]:
    """Run one named check (or "all") and return report fragments in a fixed order."""
    if name == "all":
        out = []
        for each in CHECK_NAMES:
            out.extend(run_check(s, each, explicit=False))
        return out
    if name in CODE_CHECKS:
        frags = []
        for i, C in enumerate(s.codes):
            for res in _run_one(CODE_CHECKS[name], name, (s, C), explicit):
                frags.append({"code": i, **res.to_json()})
        return frags
    if name in SCENARIO_CHECKS:
        return [res.to_json() for res in _run_one(SCENARIO_CHECKS[name], name, (s,), explicit)]
    raise UnknownCheck(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES + ('all',))}")


def _instantiation(s: Scenario) -> dict:
    info = {"dual_forms": "listed", "orbit_dual_agrees": s.orbit_dual_agrees()}
    try:
        rep = s.rep
    except GCodesError as exc:
        info["form_ring"] = {"error": type(exc).__name__, "message": str(exc)}
        return info
    info["form_ring"] = {
        "designated_form": 0,
        "psi": rep.psi_note,
        "qmodule_generators": [[str(x) for x in q.table] for q in rep.phi_generators],
        "diagonal_listed": rep.diagonal_listed,
    }
    return info


def exit_status(results: list[dict]) -> int:
    statuses = [r["status"] for r in results]
    if any(st in FAILING for st in statuses):
        return EXIT_FAILED
    if any(r["payload"].get("cap_exceeded") for r in results):
        return EXIT_CAP
    return EXIT_OK


def build_report(s: Scenario, names: list[str] | None = None) -> dict:
    """Run the checks (default: the scenario's own list) and assemble the report."""
    names = list(names or s.checks)
    results = []
    for name in names:
        results.extend(run_check(s, name))
    counts = {st: 0 for st in (OK, MISMATCH, ERROR, SKIPPED, FINDING)}
    for r in results:
        counts[r["status"]] += 1
    return {
        "tool": "gcodes",
        "version": __version__,
        "scenario": s.echo,
        "conductor": s.conductor,
        "orderings": {
            "module": "elements of (Z/m)^k in lexicographic order of coordinates",
            "ambient": "theta(V^n) in lexicographic order of (u_alpha_1, ..., u_alpha_t), alpha_i the least position of orbit i",
            "words": "sorted lexicographically by element index",
            "cyclotomic": "coefficients of 1, z, ..., z^(phi(K)-1) modulo the K-th cyclotomic polynomial",
        },
        "instantiation": _instantiation(s),
        "checks": names,
        "results": results,
        "summary": {"counts": counts, "exit_status": exit_status(results)},
    }


def emit_report(report: dict, fmt: str = "json", timings: dict | None = None) -> str:
    """Canonical JSON (sorted keys, no timings) or a plain-text summary table."""
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    sc = report["scenario"]
    lines = [
        f"scenario {sc['name']}: Z/{sc['modulus']}^{sc['module_rank']}, n={sc['degree']}, "
        f"|G|={sc['group_order']}, t={sc['t']}, K={report['conductor']}",
    ]
    width = max([len(r["check"]) for r in report["results"]] + [5])
    for r in report["results"]:
        where = f"code {r['code']}" if "code" in r else "scenario"
        line = f"  {r['check']:<{width}}  {where:<9}  {r['status']}"
        note = _short_note(r)
        if note:
            line += f"  ({note})"
        lines.append(line)
    counts = report["summary"]["counts"]
    lines.append("  " + ", ".join(f"{k}={v}" for k, v in counts.items() if v))
    if timings:
        lines.append("  timings: " + ", ".join(f"{k}={v:.3f}s" for k, v in timings.items()))
    return "\n".join(lines) + "\n"


def _short_note(r: dict) -> str:
    p = r["payload"]
    if "message" in p:
        return p["message"]
    if "dim_fwe_span" in p:
        extra = f", verdict {p['verdict']}" if "verdict" in p else ""
        return f"dims {p['dim_fwe_span']} / {p['dim_fixed']}{extra}"
    if "reason" in p:
        return p["reason"]
    if "group_order" in p:
        return f"order {p['group_order']}"
    if "literal_reading" in p:
        lit = "holds" if p["literal_reading"]["passes"] else "fails"
        cor = "holds" if p["corrected_reading"]["passes"] else "fails"
        return f"literal reading {lit}, corrected reading {cor}"
    if "self_dual_in_ambient" in p:
        return (f"iota={p['iota']}: self-dual in ambient {p['self_dual_in_ambient']}, "
                f"in iota part {p['self_dual_in_iota_part']}")
    return ""
