"""
Parabolic and Clifford-Weil generators acting on the group algebra
C[theta(V^n)], their fixed spaces, and the invariance checks built on them.

Coordinates of C[theta(V^n)] follow ``ThetaImage`` order.  All matrices live
over one cyclotomic field Q(zeta_K) chosen by ``compute_conductor``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .codes import DualSpec, GCode, g_dual, isotropic_submodules, predicates, theta_code, words_json
from .errors import CapExceeded, ConductorMismatch, NotSelfDualIsotropic
from .exactnum import (
    CycMatrix, Cyclotomic, RowReducer, lcm, root_of_unity, span_compare, sqrt_of_nat,
    squarefree_part,
)
from .forms import FormRingRep, QuadraticMap
from .perm import ThetaImage
from .results import FINDING, MISMATCH, OK, CheckResult
from .ring import Involution, RingSpec, check_unit, list_idempotents, list_units

DEFAULT_MATRIX_GROUP_CAP = 10_000
DEFAULT_DENSE_CAP = 64
DEFAULT_CLOSURE_DIM = 8


@dataclass(frozen=True)
class SymmetricIdempotent:
    iota: int
    mu: int
    nu: int
    pairs: tuple[tuple[int, int], ...] = ()


def _right_module_iso_exists(m: int, a: int, b: int) -> bool:
    """Is there an R-isomorphism aR -> bR (R = Z/m), a r -> x r for some x in bR?"""
    aR = sorted({a * r % m for r in range(m)})
    bR = sorted({b * r % m for r in range(m)})
    if len(aR) != len(bR):
        return False
    for x in bR:
        f: dict[int, int] = {}
        ok = True
        for r in range(m):
            src, dst = a * r % m, x * r % m
            if f.setdefault(src, dst) != dst:
                ok = False
                break
        if ok and sorted(f.values()) == bR and len(set(f.values())) == len(bR):
            return True
    return False


def idempotent_report(R: RingSpec, J: Involution | None = None) -> dict:
    """Symmetric idempotents of R with every factorisation iota = mu nu found."""
    J = J or Involution.identity(R)
    m = R.modulus
    accepted, rejected = [], []
    for iota in list_idempotents(R):
        ij = J(iota)
        if not _right_module_iso_exists(m, iota, ij):
            rejected.append({"iota": iota, "reason": "iota R and iota^J R are not isomorphic"})
            continue
        mus = sorted({iota * r * ij % m for r in range(m)})
        nus = sorted({ij * r * iota % m for r in range(m)})
        pairs = [(mu, nu) for mu in mus for nu in nus if mu * nu % m == iota]
        if not pairs:
            rejected.append({"iota": iota, "reason": "no mu, nu with mu nu = iota"})
            continue
        accepted.append(SymmetricIdempotent(iota, pairs[0][0], pairs[0][1], tuple(pairs)))
    return {"accepted": accepted, "rejected": rejected}


def find_symmetric_idempotents(R: RingSpec, J: Involution | None = None) -> list[SymmetricIdempotent]:
    return idempotent_report(R, J)["accepted"]


def compute_conductor(ambient: ThetaImage, denominators: Sequence[int],
                      idempotents: Sequence[SymmetricIdempotent] = ()) -> int:
    """lcm of 8, the given form/map denominators and 4 * squarefree(|iota theta(V^n)|)."""
    R = ambient.R
    parts = [8, *denominators]
    for s in idempotents:
        size = len({R.smul(s.iota, a) for a in range(R.size)}) ** ambient.t
        parts.append(4 * squarefree_part(size))
    return lcm(*parts)


class GRepresentation:
    """A form-ring representation on theta(V^n) with its generator matrices."""

    def __init__(self, ambient: ThetaImage, rep: FormRingRep, K: int | None = None):
        if ambient.R != rep.R:
            raise ValueError("representation and ambient use different modules")
        check_unit(ambient.R, ambient.G.order)
        self.ambient = ambient
        self.rep = rep
        self.R = ambient.R
        self.G = ambient.G
        self.idempotents = find_symmetric_idempotents(self.R, rep.J)
        dens = [rep.beta0.den] + [phi.den for phi in rep.phis]
        needed = compute_conductor(ambient, dens, self.idempotents)
        if K is not None and K % needed:
            raise ConductorMismatch(f"conductor {K} is not a multiple of the required {needed}")
        self.K = K or needed
        self.M = DualSpec((rep.beta0,))

    @property
    def size(self) -> int:
        return len(self.ambient)

    @cached_property
    def _collapsed(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.ambient.collapse(u) for u in self.ambient.elements)

    def phi_value(self, phi: QuadraticMap, i: int):
        return root_of_unity(Fraction(phi.eval_n_int(self._collapsed[i]), phi.den), self.K)

    def isotropic_codes(self, cap: int) -> list[tuple[int, ...]]:
        return isotropic_submodules(self.ambient, self.M, self.rep.phi_generators, cap)

    def parabolic_generators(self) -> list[tuple[str, CycMatrix]]:
        gens = [(f"m_{r}", gen_m_r(self, r)) for r in list_units(self.R)]
        for i, phi in enumerate(self.rep.phi_generators):
            gens.append((f"d_phi{i}", gen_d_phi(self, phi)))
        return gens

    def cw_generators(self) -> list[tuple[str, CycMatrix]]:
        gens = self.parabolic_generators()
        for s in self.idempotents:
            gens.append((f"h_{s.iota}_{s.mu}_{s.nu}", gen_h(self, s)))
        return gens


def gen_m_r(rho: GRepresentation, r: int) -> CycMatrix:
    """e_u -> e_{r u}."""
    check_unit(rho.R, r)
    smul = rho.ambient.smul_idx[r % rho.R.modulus]
    one = Cyclotomic.from_rational(rho.K, 1)
    return CycMatrix.monomial(smul, [one] * rho.size, rho.K)


def gen_d_phi(rho: GRepresentation, phi: QuadraticMap) -> CycMatrix:
    """e_u -> exp(2 pi i phi^n_G(u)) e_u."""
    return CycMatrix.monomial(range(rho.size), [rho.phi_value(phi, i) for i in range(rho.size)], rho.K)


def gen_h(rho: GRepresentation, s: SymmetricIdempotent) -> CycMatrix:
    """e_u -> |I|^-1/2 sum_{v in I} exp(2 pi i beta(v, nu u)) e_{(1 - iota) u + v}, I = iota theta(V^n)."""
    A, R, K = rho.ambient, rho.R, rho.K
    beta = rho.rep.beta0
    smul, add = A.smul_idx, A.add_idx
    N = rho.size
    part = sorted({smul[s.iota][i] for i in range(N)})
    scale = sqrt_of_nat(len(part), K).inverse()
    co = (1 - s.iota) % R.modulus
    step = K // beta.den
    cols = rho._collapsed
    zero = Cyclotomic.from_rational(K, 0)
    rows = [[zero] * N for _ in range(N)]
    phases = [scale * Cyclotomic.zeta(K, e) for e in range(K)]
    for u in range(N):
        nu_u = cols[smul[s.nu][u]]
        base = smul[co][u]
        for v in part:
            e = beta.eval_n_int(cols[v], nu_u) * step
            rows[add[base][v]][u] = rows[add[base][v]][u] + phases[e]
    return CycMatrix(rows, K)


def is_invertible(M: CycMatrix) -> bool:
    red = RowReducer(M.cols, M.K)
    for row in M.entries:
        red.add(row)
    return red.rank == M.rows


@dataclass
class CWGroup:
    generators: list[CycMatrix]
    elements: list[CycMatrix] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.elements)


def group_closure_matrices(gens: Sequence[CycMatrix], cap: int = DEFAULT_MATRIX_GROUP_CAP) -> CWGroup:
    """Breadth-first closure under left multiplication by the generators."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    ident = CycMatrix.identity(gens[0].rows, gens[0].K)
    seen = {ident}
    order = [ident]
    queue = deque([ident])
    while queue:
        h = queue.popleft()
        for g in gens:
            x = g @ h
            if x not in seen:
                seen.add(x)
                order.append(x)
                if len(seen) > cap:
                    raise CapExceeded("matrix group order", cap)
                queue.append(x)
    return CWGroup(gens, order)


def fixed_space(gens: Sequence[CycMatrix], size: int | None = None, K: int | None = None) -> list[tuple[Cyclotomic, ...]]:
    """Basis of the common fixed vectors: the kernel of the stacked g - I."""
    if not gens and (size is None or K is None):
        raise ValueError("size and K are required without generators")
    size = size if size is not None else gens[0].cols
    K = K if K is not None else gens[0].K
    red = RowReducer(size, K)
    one = Cyclotomic.from_rational(K, 1)
    for g in gens:
        for i, row in enumerate(g.entries):
            sparse = {j: a for j, a in enumerate(row) if a}
            d = sparse.get(i)
            d = -one if d is None else d - one
            if d:
                sparse[i] = d
            else:
                sparse.pop(i, None)
            if sparse:
                red.add(sparse)
    return red.kernel_basis()


def _vec_json(vec) -> list[list[str]]:
    return [x.to_strings() for x in vec]


def verify_parainv(rho: GRepresentation, cap: int = 256) -> CheckResult:
    """Span of fwe over G-isotropic codes versus the fixed space of the parabolic generators."""
    K = rho.K
    codes = rho.isotropic_codes(cap)
    one = Cyclotomic.from_rational(K, 1)
    zero = Cyclotomic.from_rational(K, 0)
    vecs = [tuple(one if i in set(D) else zero for i in range(rho.size)) for D in codes]
    gens = [g for _, g in rho.parabolic_generators()]
    fixed = fixed_space(gens, rho.size, K)
    cmp = span_compare(vecs, fixed)
    payload = {
        "isotropic_codes": len(codes),
        "dim_fwe_span": cmp.dim_a,
        "dim_fixed": cmp.dim_b,
        "relation": cmp.relation,
        "diagonal_listed": rho.rep.diagonal_listed,
    }
    if rho.size <= 16:
        payload["fixed_basis"] = [_vec_json(v) for v in fixed]
    return CheckResult("parainv", OK if cmp.relation == "equal" else MISMATCH, payload)


def self_dual_isotropic(rho: GRepresentation, C: GCode) -> bool:
    p = predicates(C, rho.M, rho.rep.phi_generators, rho.ambient)
    return p["g_self_dual"] and p["g_isotropic"]


def verify_cwinv(rho: GRepresentation, C: GCode) -> CheckResult:
    """Every Clifford-Weil generator fixes fwe(theta C) for G-self-dual isotropic C."""
    if not self_dual_isotropic(rho, C):
        raise NotSelfDualIsotropic("code is not G-self-dual and G-isotropic for this representation")
    th = theta_code(C)
    hits = {rho.ambient.position(u) for u in th}
    one = Cyclotomic.from_rational(rho.K, 1)
    zero = Cyclotomic.from_rational(rho.K, 0)
    vec = tuple(one if i in hits else zero for i in range(rho.size))
    failing = [name for name, g in rho.cw_generators() if g.apply(vec) != vec]
    payload = {"theta_code": words_json(C.R, th), "failing_generators": failing,
               "generators": [name for name, _ in rho.cw_generators()]}
    return CheckResult("cwinv", MISMATCH if failing else OK, payload)


def conjecture_explore(rho: GRepresentation, cap: int = 256, dense_cap: int = DEFAULT_DENSE_CAP) -> CheckResult:
    """Compare the span of fwe over G-self-dual isotropic codes with the CW fixed space."""
    if rho.size > dense_cap:
        raise CapExceeded("|theta(V^n)| for dense Clifford-Weil matrices", dense_cap)
    A, K, N = rho.ambient, rho.K, rho.size
    selfdual = []
    for D in rho.isotropic_codes(cap):
        if len(D) ** 2 != N:
            continue
        words = [A.elements[i] for i in D]
        if set(g_dual(words, rho.M, A)) == set(words):
            selfdual.append(D)
    one = Cyclotomic.from_rational(K, 1)
    zero = Cyclotomic.from_rational(K, 0)
    vecs = [tuple(one if i in set(D) else zero for i in range(N)) for D in selfdual]
    gens = rho.cw_generators()
    fixed = fixed_space([g for _, g in gens], N, K)
    cmp = span_compare(vecs, fixed)
    payload = {
        "self_dual_isotropic_codes": [words_json(rho.R, [A.elements[i] for i in D]) for D in selfdual],
        "dim_fwe_span": cmp.dim_a,
        "dim_fixed": cmp.dim_b,
        "generators": [name for name, _ in gens],
        "diagonal_listed": rho.rep.diagonal_listed,
    }
    if N <= 16:
        payload["fixed_basis"] = [_vec_json(v) for v in fixed]
    if cmp.relation == "equal":
        payload["verdict"] = "equal"
        return CheckResult("conjecture", OK, payload)
    if cmp.relation == "a_subset_b":
        payload["verdict"] = "strict"
        return CheckResult("conjecture", FINDING, payload)
    payload["verdict"] = "inclusion-fails"
    return CheckResult("conjecture", MISMATCH, payload)
