"""G-weight enumerators and the MacWilliams-type identities relating them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .codes import GCode, DualSpec, dual, g_dual, theta_code, words_json
from .errors import DegenerateForm
from .exactnum import Cyclotomic, format_rational
from .forms import BilinearForm, nondegenerate_check
from .perm import ThetaImage
from .results import MISMATCH, OK, CheckResult


def g_weight(ambient: ThetaImage, u) -> int:
    """Number of nonzero orbit-representative coordinates."""
    return sum(1 for a in ambient.collapse(u) if a)


@dataclass(frozen=True)
class HwePoly:
    """sum_w coeffs[w] x^(t-w) y^w."""

    t: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.t + 1:
            raise ValueError("need t + 1 coefficients")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    def __call__(self, x, y):
        return sum(c * x ** (self.t - w) * y ** w for w, c in enumerate(self.coeffs))

    def scaled(self, c) -> "HwePoly":
        return HwePoly(self.t, tuple(a * c for a in self.coeffs))

    def to_json(self) -> dict:
        return {"t": self.t,
                "coeffs": {str(w): format_rational(c) for w, c in enumerate(self.coeffs) if c}}

    def __str__(self):
        terms = []
        for w, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "*".join(
                p for p in (_power("x", self.t - w), _power("y", w)) if p
            ) or "1"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"


def _power(v: str, e: int) -> str:
    return "" if e == 0 else (v if e == 1 else f"{v}^{e}")


def hwe_g(ambient: ThetaImage, words: Sequence) -> HwePoly:
    counts = [0] * (ambient.t + 1)
    for u in words:
        counts[g_weight(ambient, u)] += 1
    return HwePoly(ambient.t, tuple(counts))


def cwe_g(ambient: ThetaImage, words: Sequence) -> dict[tuple[int, ...], int]:
    """Monomial exponents (one per element of V, canonical order) -> count.

    Obtained from the full enumerator by sending e_u to prod_i x_{u_alpha_i}.
    """
    q = ambient.R.size
    out: Counter = Counter()
    for u in words:
        exps = [0] * q
        for a in ambient.collapse(u):
            exps[a] += 1
        out[tuple(exps)] += 1
    return dict(sorted(out.items()))


def cwe_to_hwe(cwe: dict[tuple[int, ...], int], t: int) -> HwePoly:
    """Substitute x_0 = x and x_a = y for a != 0."""
    coeffs = [0] * (t + 1)
    for exps, c in cwe.items():
        coeffs[t - exps[0]] += c
    return HwePoly(t, tuple(coeffs))


def fwe_g(ambient: ThetaImage, words: Sequence, K: int = 1) -> tuple[Cyclotomic, ...]:
    """Indicator vector of the words in the ambient order."""
    hits = {ambient.position(u) for u in words}
    one = Cyclotomic.from_rational(K, 1)
    zero = Cyclotomic.from_rational(K, 0)
    return tuple(one if i in hits else zero for i in range(len(ambient)))


def macwilliams_hwe_transform(p: HwePoly, dual_size: int, q: int) -> HwePoly:
    """p(x + (q-1) y, x - y) / dual_size, expanded exactly."""
    if dual_size < 1:
        raise ValueError("dual size must be positive")
    t = p.t
    out = [Fraction(0)] * (t + 1)
    for w, c in enumerate(p.coeffs):
        if not c:
            continue
        # (x + (q-1) y)^(t-w) * (x - y)^w
        a = [comb(t - w, i) * (q - 1) ** i for i in range(t - w + 1)]
        b = [comb(w, j) * (-1) ** j for j in range(w + 1)]
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] += c * ai * bj
    return HwePoly(t, tuple(x / dual_size for x in out))


def macwilliams_fwe_transform(ambient: ThetaImage, theta_words: Sequence, beta: BilinearForm,
                              K: int) -> tuple[Cyclotomic, ...]:
    """(1/|theta C|) sum_v sum_u exp(2 pi i beta^n_G(v, u)) e_v."""
    if K % beta.den:
        raise ValueError(f"conductor {K} does not contain the values of {beta}")
    step = K // beta.den
    cols = [ambient.collapse(u) for u in theta_words]
    size = len(cols)
    out = []
    for v in ambient.elements:
        vg = ambient.collapse(v)
        counts = [0] * K
        for ug in cols:
            counts[beta.eval_n_int(vg, ug) * step] += 1
        out.append(Cyclotomic.from_exponent_counts(K, counts, size))
    return tuple(out)


def _require_nondegenerate(M: DualSpec) -> None:
    for beta in M.forms:
        bad = nondegenerate_check(beta)
        if bad is not None:
            raise DegenerateForm(bad.witness)


def verify_gmac(C: GCode, M: DualSpec, ambient: ThetaImage) -> CheckResult:
    """hwe(theta C) against the transform of the G-dual's enumerator."""
    _require_nondegenerate(M)
    th = theta_code(C)
    gd = g_dual(th, M, ambient)
    lhs = hwe_g(ambient, th)
    rhs = macwilliams_hwe_transform(hwe_g(ambient, gd), len(gd), ambient.R.size)
    return CheckResult("macwilliams-gmac", OK if lhs == rhs else MISMATCH,
                       {"hwe": lhs.to_json(), "transformed_g_dual": rhs.to_json(), "g_dual_size": len(gd)})


def verify_hwemac(C: GCode, M: DualSpec, ambient: ThetaImage) -> CheckResult:
    """hwe(theta C) against the transform of hwe(theta(C^perp)), C^perp recomputed."""
    _require_nondegenerate(M)
    th = theta_code(C)
    thd = theta_code(dual(C, M))
    lhs = hwe_g(ambient, th)
    rhs = macwilliams_hwe_transform(hwe_g(ambient, thd), len(thd), ambient.R.size)
    return CheckResult("macwilliams-hwe", OK if lhs == rhs else MISMATCH,
                       {"hwe": lhs.to_json(), "transformed_theta_dual": rhs.to_json(),
                        "theta_dual": words_json(C.R, thd)})


def verify_fwemac(C: GCode, forms: Sequence[BilinearForm], ambient: ThetaImage, K: int) -> CheckResult:
    """For each form, the character-sum transform of fwe(theta C) is fwe of its G-dual."""
    for beta in forms:
        bad = nondegenerate_check(beta)
        if bad is not None:
            raise DegenerateForm(bad.witness)
    th = theta_code(C)
    per_form = []
    ok = True
    for beta in forms:
        gd = g_dual(th, DualSpec((beta,)), ambient)
        lhs = macwilliams_fwe_transform(ambient, th, beta, K)
        rhs = fwe_g(ambient, gd, K)
        same = lhs == rhs
        ok &= same
        entry = {"equal": same, "g_dual": words_json(C.R, gd)}
        if not same:
            entry["transform"] = [x.to_strings() for x in lhs]
        per_form.append(entry)
    return CheckResult("macwilliams-fwe", OK if ok else MISMATCH, {"conductor": K, "forms": per_form})
