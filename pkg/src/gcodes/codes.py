"""
G-codes, duals, G-duals, the decomposition of (theta C)^perp, code predicates
and submodule enumeration.

Every dual here is found by scanning the whole ambient set, never by solving a
linear system: these scans are the reference the identities are checked
against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Iterable, Sequence

from .errors import CapExceeded, NotIdempotent
from .forms import BilinearForm, QuadraticMap
from .perm import PermGroup, ThetaImage, Word, apply_orbit_lengths, theta_apply
from .results import FINDING, MISMATCH, OK, SKIPPED, CheckResult
from .ring import RingSpec, list_units

DEFAULT_DUAL_CAP = 4096
DEFAULT_AMBIENT_CAP = 256


def word_json(R: RingSpec, w: Sequence[int]):
    if R.module_rank == 1:
        return list(w)
    return [list(R.coords(a)) for a in w]


def words_json(R: RingSpec, words: Iterable[Sequence[int]]):
    return [word_json(R, w) for w in words]


def add_words(R: RingSpec, u: Sequence[int], v: Sequence[int]) -> Word:
    add = R.add_table
    return tuple(add[a][b] for a, b in zip(u, v))


def scale_word(R: RingSpec, r: int, u: Sequence[int]) -> Word:
    s = R.smul_table[r % R.modulus]
    return tuple(s[a] for a in u)


@dataclass(frozen=True)
class DualSpec:
    """The set M of forms a dual is taken against."""

    forms: tuple[BilinearForm, ...]

    def __post_init__(self):
        if not self.forms:
            raise ValueError("a dual needs at least one form")

    @classmethod
    def orbit_of(cls, *forms: BilinearForm) -> "DualSpec":
        """All beta(r -, s -) for the given forms, deduplicated."""
        out, seen = [], set()
        for beta in forms:
            for f in beta.orbit():
                if f.gram not in seen:
                    seen.add(f.gram)
                    out.append(f)
        return cls(tuple(out))


@dataclass(frozen=True)
class GCode:
    R: RingSpec
    G: PermGroup
    words: tuple[Word, ...]
    generators: tuple[Word, ...] = field(default=())

    @property
    def length(self) -> int:
        return self.G.n

    def __len__(self):
        return len(self.words)

    def __contains__(self, w) -> bool:
        return tuple(w) in self.word_set

    def __iter__(self):
        return iter(self.words)

    @cached_property
    def word_set(self) -> frozenset:
        return frozenset(self.words)


def _extend(R: RingSpec, span: set, x: Word, cap: int | None = None) -> set:
    """span + R x."""
    if x in span:
        return span
    multiples = {scale_word(R, r, x) for r in range(R.modulus)}
    out = {add_words(R, s, y) for s in span for y in multiples}
    if cap is not None and len(out) > cap:
        raise CapExceeded("code size", cap)
    return out


def module_span(R: RingSpec, n: int, vectors: Iterable[Sequence[int]], cap: int | None = None) -> set:
    span = {tuple([0] * n)}
    for x in vectors:
        span = _extend(R, span, tuple(x), cap)
    return span


def code_closure(R: RingSpec, G: PermGroup, gens: Iterable[Sequence[int]], cap: int = DEFAULT_DUAL_CAP) -> GCode:
    """The R[G]-submodule of V^n generated by ``gens``."""
    gens = tuple(tuple(g) for g in gens)
    for g in gens:
        if len(g) != G.n:
            raise ValueError(f"generator {list(g)} does not have length {G.n}")
    orbit = sorted({g.act(x) for x in gens for g in G.elements})
    words = module_span(R, G.n, orbit, cap)
    return GCode(R, G, tuple(sorted(words)), gens)


def is_gcode(R: RingSpec, G: PermGroup, words: Iterable[Sequence[int]]) -> bool:
    """Whether ``words`` is an R-submodule of V^n stable under G."""
    ws = set(map(tuple, words))
    if not ws:
        return False
    n = G.n
    if tuple([0] * n) not in ws:
        return False
    if any(g.act(w) not in ws for g in G.generators for w in ws):
        return False
    return module_span(R, n, sorted(ws)) == ws


def annihilator(R: RingSpec, n: int, words: Sequence[Sequence[int]], M: DualSpec,
                cap: int = DEFAULT_DUAL_CAP) -> list[Word]:
    """{v in V^n : beta^n(v, u) = 0 for all beta in M, u in words}, sorted."""
    if R.size ** n > cap:
        raise CapExceeded("|V|^n", cap)
    words = [tuple(u) for u in words]
    out = []
    for v in product(range(R.size), repeat=n):
        if all(beta.eval_n_int(v, u) == 0 for beta in M.forms for u in words):
            out.append(v)
    return out


def dual(C: GCode, M: DualSpec, cap: int = DEFAULT_DUAL_CAP) -> GCode:
    """C^perp by exhaustive scan of V^n."""
    words = annihilator(C.R, C.length, C.words, M, cap)
    return GCode(C.R, C.G, tuple(words))


def theta_code(C: GCode) -> list[Word]:
    """theta C, sorted."""
    return sorted({theta_apply(C.G, C.R, u) for u in C.words})


def g_dual(theta_words: Sequence[Sequence[int]], M: DualSpec, ambient: ThetaImage) -> list[Word]:
    """{v in theta(V^n) : beta^n_G(v, u) = 0 for all beta in M, u}, sorted."""
    collapsed = [ambient.collapse(u) for u in theta_words]
    out = []
    for v in ambient.elements:
        vg = ambient.collapse(v)
        if all(beta.eval_n_int(vg, ug) == 0 for beta in M.forms for ug in collapsed):
            out.append(v)
    return sorted(out)


def lemma_dual_check(C: GCode, M: DualSpec, ambient: ThetaImage) -> CheckResult:
    """Compare the G-dual of theta C with theta(C^perp) M_G as sets."""
    th = theta_code(C)
    lhs = g_dual(th, M, ambient)
    rhs = sorted({apply_orbit_lengths(C.G, C.R, u, ambient.orbits) for u in theta_code(dual(C, M))})
    R = C.R
    payload = {"g_dual": words_json(R, lhs), "theta_dual_scaled": words_json(R, rhs)}
    return CheckResult("lemma-dual", OK if lhs == rhs else MISMATCH, payload)


def dual_identities_check(C: GCode, M: DualSpec, ambient: ThetaImage,
                          cap: int = DEFAULT_DUAL_CAP) -> CheckResult:
    """C^perp^perp = C and |theta C| * |G-dual of theta C| = |theta(V^n)|."""
    d = dual(C, M, cap)
    dd = dual(d, M, cap)
    th = theta_code(C)
    gd = g_dual(th, M, ambient)
    clauses = {
        "double_dual": dd.word_set == C.word_set,
        "cardinality": len(th) * len(gd) == len(ambient),
    }
    payload = {"clauses": clauses, "theta_code_size": len(th), "g_dual_size": len(gd),
               "ambient_size": len(ambient)}
    return CheckResult("dual-identities", OK if all(clauses.values()) else MISMATCH, payload)


def theta_matrix_symmetric(G: PermGroup) -> bool:
    """sum_g P_g^T == sum_g P_g, i.e. theta^T = theta on V^n."""
    n = G.n
    total = [[0] * n for _ in range(n)]
    total_t = [[0] * n for _ in range(n)]
    for g in G.elements:
        P = g.matrix()
        for i in range(n):
            for j in range(n):
                total[i][j] += P[i][j]
                total_t[j][i] += P[i][j]
    return total == total_t


def hayden_check(C: GCode, M: DualSpec, cap: int = DEFAULT_DUAL_CAP) -> CheckResult:
    """(theta C)^perp = ker theta (+) theta(C^perp), clause by clause."""
    R, G, n = C.R, C.G, C.length
    th = theta_code(C)
    lhs = set(annihilator(R, n, th, M, cap))
    ker = sorted(v for v in product(range(R.size), repeat=n) if not any(theta_apply(G, R, v)))
    th_dual = theta_code(dual(C, M, cap))
    summed = {add_words(R, k, w) for k in ker for w in th_dual}
    meet = set(ker) & set(th_dual)
    zero = tuple([0] * n)
    clauses = {
        "theta_transpose_is_theta": theta_matrix_symmetric(G),
        "sum_equals_perp": summed == lhs,
        "intersection_trivial": meet == {zero},
        "sum_is_direct": len(summed) == len(ker) * len(th_dual),
    }
    payload = {
        "clauses": clauses,
        "ker_theta": words_json(R, ker),
        "theta_dual": words_json(R, th_dual),
        "perp_of_theta_code": words_json(R, sorted(lhs)),
    }
    return CheckResult("hayden", OK if all(clauses.values()) else MISMATCH, payload)


def predicates(C: GCode, M: DualSpec, phis: Sequence[QuadraticMap], ambient: ThetaImage) -> dict[str, bool]:
    cw = C.word_set
    cd = set(dual(C, M).words)
    th = theta_code(C)
    gd = set(g_dual(th, M, ambient))
    ths = set(th)
    so = cw <= cd
    gso = ths <= gd
    iso_n = all(phi.eval_n_int(u) == 0 for phi in phis for u in C.words)
    iso_g = all(phi.eval_n_int(ambient.collapse(u)) == 0 for phi in phis for u in th)
    return {
        "self_orthogonal": so,
        "self_dual": cw == cd,
        "g_self_orthogonal": gso,
        "g_self_dual": ths == gd,
        "isotropic": so and iso_n,
        "g_isotropic": gso and iso_g,
    }


def is_g_isotropic_set(idx: Iterable[int], M: DualSpec, phis: Sequence[QuadraticMap], ambient: ThetaImage) -> bool:
    """Self-orthogonal under every beta^n_G and killed by every phi^n_G."""
    cols = [ambient.collapse(ambient.elements[i]) for i in idx]
    if any(phi.eval_n_int(u) for phi in phis for u in cols):
        return False
    return all(beta.eval_n_int(u, v) == 0 for beta in M.forms for u in cols for v in cols)


def enumerate_submodules(ambient: ThetaImage, cap: int = DEFAULT_AMBIENT_CAP,
                         keep: Callable[[frozenset], bool] | None = None) -> list[tuple[int, ...]]:
    """R-submodules of theta(V^n) as sorted tuples of ambient positions.

    Built by adjoining one element at a time from {0}.  When ``keep`` is given
    (a predicate closed under passing to submodules) only submodules passing it
    are produced, and the search never leaves them.
    """
    N = len(ambient)
    if N > cap:
        raise CapExceeded("|theta(V^n)|", cap)
    add, smul = ambient.add_idx, ambient.smul_idx
    m = ambient.R.modulus
    zero = frozenset({0})
    found = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for D in frontier:
            for x in range(N):
                if x in D:
                    continue
                mult = {smul[r][x] for r in range(m)}
                E = frozenset(add[d][y] for d in D for y in mult)
                if E in found:
                    continue
                if keep is not None and not keep(E):
                    continue
                found.add(E)
                nxt.append(E)
        frontier = nxt
    return sorted((tuple(sorted(D)) for D in found), key=lambda D: (len(D), D))


def isotropic_submodules(ambient: ThetaImage, M: DualSpec, phis: Sequence[QuadraticMap],
                         cap: int = DEFAULT_AMBIENT_CAP) -> list[tuple[int, ...]]:
    return enumerate_submodules(ambient, cap, keep=lambda E: is_g_isotropic_set(E, M, phis, ambient))


def idempotent_image(C: GCode, iota: int) -> GCode:
    m = C.R.modulus
    if (iota * iota - iota) % m:
        raise NotIdempotent(f"{iota} is not idempotent mod {m}")
    words = sorted({scale_word(C.R, iota, u) for u in C.words})
    return GCode(C.R, C.G, tuple(words))


def iota_selfdual_check(C: GCode, iota: int, M: DualSpec, ambient: ThetaImage) -> CheckResult:
    """Is iota C G-self-dual whenever C is?

    Reports two readings: self-dual inside all of theta(V^n), and self-dual
    inside iota theta(V^n).  Report only.
    """
    R = C.R
    th = set(theta_code(C))
    if th != set(g_dual(sorted(th), M, ambient)):
        return CheckResult("iota-selfdual", SKIPPED, {"iota": iota, "reason": "C is not G-self-dual"})
    iC = idempotent_image(C, iota)
    ith = theta_code(iC)
    gd = set(g_dual(ith, M, ambient))
    part = {scale_word(R, iota, u) for u in ambient.elements}
    literal = set(ith) == gd
    within = set(ith) == (gd & part)
    payload = {"iota": iota, "iota_code": words_json(R, ith),
               "self_dual_in_ambient": literal, "self_dual_in_iota_part": within}
    if literal:
        return CheckResult("iota-selfdual", OK, payload)
    return CheckResult("iota-selfdual", FINDING, payload)


def ru_lemma_check(R: RingSpec, ambient: ThetaImage, max_witnesses: int = 64) -> CheckResult:
    """Test "v in R w => v in R* w" and "R v = R w => v in R* w" on all pairs."""
    units = list_units(R)
    smul = ambient.smul_idx
    N = len(ambient)
    cyc = [frozenset(smul[r][w] for r in range(R.modulus)) for w in range(N)]
    unit_orbit = [frozenset(smul[r][w] for r in units) for w in range(N)]
    literal, corrected = [], []
    for v in range(N):
        for w in range(N):
            if v in unit_orbit[w]:
                continue
            pair = [word_json(R, ambient.elements[v]), word_json(R, ambient.elements[w])]
            if v in cyc[w] and len(literal) < max_witnesses:
                literal.append(pair)
            if cyc[v] == cyc[w] and len(corrected) < max_witnesses:
                corrected.append(pair)
    payload = {
        "literal_reading": {"passes": not literal, "witnesses": literal},
        "corrected_reading": {"passes": not corrected, "witnesses": corrected},
    }
    if corrected:
        status = MISMATCH
    elif literal:
        status = FINDING
    else:
        status = OK
    return CheckResult("ru-lemma", status, payload)
