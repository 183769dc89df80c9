"""The desk-scale corpus: every small (m, n, G, Phi) with all cyclic codes."""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import product
from math import gcd

from .checks import build_report
from .codes import DEFAULT_DUAL_CAP, code_closure
from .cwgroup import DEFAULT_DENSE_CAP
from .errors import CapExceeded
from .exactnum import format_rational
from .perm import DEFAULT_GROUP_CAP, all_subgroups, orbit_decomposition
from .results import FAILING
from .ring import RingSpec
from .scenario import scenario_from_dict

CODE_LEVEL = ["lemma-dual", "hayden", "macwilliams-gmac", "macwilliams-hwe",
              "macwilliams-fwe", "dual-identities"]


def phi_options(m: int) -> list[list[Fraction]]:
    """Phi = {}, {x^2/m} and, for even m > 2, {x^2/2}."""
    opts: list[list[Fraction]] = [[], [Fraction(1, m)]]
    if m % 2 == 0 and m != 2:
        opts.append([Fraction(1, 2)])
    return opts


def cyclic_code_generators(R: RingSpec, G, cap: int = DEFAULT_DUAL_CAP) -> list[tuple[int, ...]]:
    """One generator (the least word) for each distinct code R[G] u."""
    if R.size ** G.n > cap:
        raise CapExceeded("|V|^n", cap)
    seen = set()
    out = []
    for u in product(range(R.size), repeat=G.n):
        C = code_closure(R, G, [u], cap)
        if C.word_set not in seen:
            seen.add(C.word_set)
            out.append(u)
    return out


def corpus_generate(moduli, max_n: int, group_cap: int = DEFAULT_GROUP_CAP,
                    dense_cap: int = DEFAULT_DENSE_CAP) -> list[dict]:
    """Scenario dictionaries in a fixed order.

    The code-level checks depend only on (m, n, G), so they are attached to
    the first Phi variant; every variant runs parainv, and conjecture when
    theta(V^n) is small enough for dense matrices.
    """
    out = []
    for m in moduli:
        R = RingSpec(m)
        for n in range(1, max_n + 1):
            for gi, G in enumerate(all_subgroups(n, group_cap)):
                if gcd(G.order, m) != 1:
                    continue
                t = orbit_decomposition(G).t
                gens = [list(g.images) for g in G.generators]
                codes = [{"generators": [list(u)]} for u in cyclic_code_generators(R, G)]
                for pi, coeffs in enumerate(phi_options(m)):
                    checks = (CODE_LEVEL if pi == 0 else []) + ["parainv"]
                    if m ** t <= dense_cap:
                        checks.append("conjecture")
                    quadratic = [{"table": [format_rational(c * x * x % 1) for x in range(m)]} for c in coeffs]
                    out.append({
                        "name": f"m{m}-n{n}-g{gi}-phi{pi}",
                        "ring": {"modulus": m},
                        "group": {"degree": n, "generators": gens, "cap": group_cap},
                        "forms": [{"gram": [[f"1/{m}"]]}],
                        "quadratic": quadratic,
                        "codes": codes if pi == 0 else [],
                        "checks": checks,
                    })
    return out


def run_corpus(scenarios: list[dict]) -> dict:
    """Run every scenario; returns per-scenario status counts, totals and per-check totals."""
    rows = []
    totals: dict[str, int] = {}
    by_check: dict[str, dict[str, int]] = {}
    start = time.perf_counter()
    for data in scenarios:
        s = scenario_from_dict(data, data["name"])
        report = build_report(s)
        counts = report["summary"]["counts"]
        failed = [
            {k: r[k] for k in ("check", "status", "payload", "code") if k in r}
            for r in report["results"] if r["status"] in FAILING
        ]
        for r in report["results"]:
            per = by_check.setdefault(r["check"], {})
            per[r["status"]] = per.get(r["status"], 0) + 1
        for k, v in counts.items():
            totals[k] = totals.get(k, 0) + v
        rows.append({"name": s.name, "codes": len(s.codes), "counts": counts, "failed": failed,
                     "exit_status": report["summary"]["exit_status"]})
    return {
        "scenarios": rows,
        "totals": totals,
        "by_check": {name: dict(sorted(per.items())) for name, per in sorted(by_check.items())},
        "exit_status": max((r["exit_status"] for r in rows), default=0),
        "seconds": time.perf_counter() - start,
    }
