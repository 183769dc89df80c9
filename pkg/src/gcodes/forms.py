"""
Q/Z-valued bilinear forms and quadratic maps on V = (Z/m)^k, their
orthogonal sums over n (or t collapsed) coordinates, and the concrete
form-ring data used to build Clifford-Weil generators.

Values are computed on integer tables: a form with common denominator D keeps
``table[a][b] = D * beta(a, b) mod D`` indexed by module elements, so sums over
coordinates are plain integer sums mod D.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

from .errors import CocycleViolation, DegenerateForm, TwistViolation
from .exactnum import QmodZ, lcm
from .perm import ThetaImage
from .ring import Involution, RingSpec


class BilinearForm:
    """beta(x, y) = sum_ij x_i gram[i][j] y_j mod 1 on V = R^k."""

    def __init__(self, R: RingSpec, gram: Sequence[Sequence]):
        k = R.module_rank
        gram = tuple(tuple(g if isinstance(g, QmodZ) else QmodZ(g) for g in row) for row in gram)
        if len(gram) != k or any(len(row) != k for row in gram):
            raise ValueError(f"gram matrix must be {k}x{k}")
        for row in gram:
            for c in row:
                if c * R.modulus:
                    raise ValueError(f"entry {c} is not killed by m={R.modulus}; form is not well defined")
        self.R = R
        self.gram = gram
        self.den = lcm(*(c.denominator for row in gram for c in row))
        D = self.den
        g = [[int(c.value * D) for c in row] for row in gram]
        els = R.elements
        self.table: tuple[tuple[int, ...], ...] = tuple(
            tuple(
                sum(x[i] * g[i][j] * y[j] for i in range(k) for j in range(k)) % D for y in els
            )
            for x in els
        )

    @classmethod
    def standard(cls, R: RingSpec, value=None) -> "BilinearForm":
        """value * identity Gram matrix (default value 1/m)."""
        value = Fraction(1, R.modulus) if value is None else value
        k = R.module_rank
        return cls(R, [[value if i == j else 0 for j in range(k)] for i in range(k)])

    def __eq__(self, other):
        return isinstance(other, BilinearForm) and self.R == other.R and self.gram == other.gram

    def __hash__(self):
        return hash((self.R, self.gram))

    def __repr__(self):
        return f"BilinearForm({[[str(c) for c in row] for row in self.gram]})"

    def __call__(self, x: int, y: int) -> QmodZ:
        return QmodZ(Fraction(self.table[x][y], self.den))

    def act(self, r: int, s: int) -> "BilinearForm":
        """The form (x, y) -> beta(r x, s y)."""
        return BilinearForm(self.R, [[c * (r * s) for c in row] for row in self.gram])

    def swap(self) -> "BilinearForm":
        """tau(beta)(x, y) = beta(y, x)."""
        return BilinearForm(self.R, [list(col) for col in zip(*self.gram)])

    def is_symmetric(self) -> bool:
        return self.gram == self.swap().gram

    def orbit(self) -> list["BilinearForm"]:
        """Distinct forms beta(r - , s -) for r, s in R, in (r, s) order."""
        out, seen = [], set()
        m = self.R.modulus
        for r in range(m):
            for s in range(m):
                f = self.act(r, s)
                if f.gram not in seen:
                    seen.add(f.gram)
                    out.append(f)
        return out

    def eval_n_int(self, u: Sequence[int], v: Sequence[int]) -> int:
        t = self.table
        return sum(t[a][b] for a, b in zip(u, v)) % self.den


def bilinear_eval(beta: BilinearForm, x: int, y: int) -> QmodZ:
    return beta(x, y)


def bilinear_eval_n(beta: BilinearForm, u: Sequence[int], v: Sequence[int]) -> QmodZ:
    """beta^n(u, v) = sum_i beta(u_i, v_i)."""
    if len(u) != len(v):
        raise ValueError("words of different length")
    return QmodZ(Fraction(beta.eval_n_int(u, v), beta.den))


def bilinear_eval_G(beta: BilinearForm, ambient: ThetaImage, u, v) -> QmodZ:
    """beta^n_G(u, v) = beta^t(u_G, v_G) for u, v in theta(V^n)."""
    return bilinear_eval_n(beta, ambient.collapse(u), ambient.collapse(v))


@dataclass(frozen=True)
class Degenerate:
    witness: int  # module-element index
    side: str  # "left": beta(v, -) = 0; "right": beta(-, v) = 0


def nondegenerate_check(beta: BilinearForm) -> Degenerate | None:
    """None when beta is nondegenerate, else the smallest witness."""
    t = beta.table
    N = beta.R.size
    for v in range(1, N):
        if not any(t[v]):
            return Degenerate(v, "left")
    for v in range(1, N):
        if not any(t[u][v] for u in range(N)):
            return Degenerate(v, "right")
    return None


def require_nondegenerate(beta: BilinearForm) -> None:
    bad = nondegenerate_check(beta)
    if bad is not None:
        raise DegenerateForm(bad.witness)


class QuadraticMap:
    """A map V -> Q/Z given by its full table in the canonical order of V."""

    def __init__(self, R: RingSpec, table: Sequence):
        if len(table) != R.size:
            raise ValueError(f"quadratic map table needs {R.size} entries, got {len(table)}")
        self.R = R
        self.table = tuple(x if isinstance(x, QmodZ) else QmodZ(x) for x in table)
        self.den = lcm(*(x.denominator for x in self.table))
        D = self.den
        self.int_table = tuple(int(x.value * D) for x in self.table)

    @classmethod
    def diagonal(cls, beta: BilinearForm) -> "QuadraticMap":
        """x -> beta(x, x)."""
        return cls(beta.R, [beta(a, a) for a in range(beta.R.size)])

    def __eq__(self, other):
        return isinstance(other, QuadraticMap) and self.R == other.R and self.table == other.table

    def __hash__(self):
        return hash((self.R, self.table))

    def __repr__(self):
        return f"QuadraticMap({[str(x) for x in self.table]})"

    def __call__(self, a: int) -> QmodZ:
        return self.table[a]

    def __add__(self, other: "QuadraticMap") -> "QuadraticMap":
        return QuadraticMap(self.R, [a + b for a, b in zip(self.table, other.table)])

    def is_zero(self) -> bool:
        return not any(self.table)

    def eval_n_int(self, u: Sequence[int]) -> int:
        t = self.int_table
        return sum(t[a] for a in u) % self.den


def cocycle_witness(phi: QuadraticMap) -> tuple[int, int, int] | None:
    R, f = phi.R, phi.table
    add = R.add_table
    N = R.size
    for u in range(N):
        for v in range(N):
            uv = add[u][v]
            for w in range(N):
                lhs = f[add[uv][w]] + f[u] + f[v] + f[w]
                rhs = f[uv] + f[add[v][w]] + f[add[w][u]] + f[0]
                if lhs != rhs:
                    return (u, v, w)
    return None


def quadratic_check(phi: QuadraticMap) -> None:
    """Raise CocycleViolation unless phi satisfies the three-variable law."""
    bad = cocycle_witness(phi)
    if bad is not None:
        raise CocycleViolation(bad)


def quadratic_eval_n(phi: QuadraticMap, u: Sequence[int]) -> QmodZ:
    return QmodZ(Fraction(phi.eval_n_int(u), phi.den))


def quadratic_eval_G(phi: QuadraticMap, ambient: ThetaImage, u) -> QmodZ:
    """phi^n_G(u) = sum over orbit representatives of phi(u_alpha)."""
    return quadratic_eval_n(phi, ambient.collapse(u))


def qmap_action(phi: QuadraticMap, r: int) -> QuadraticMap:
    """phi[r](v) = phi(r v)."""
    s = phi.R.smul_table[r % phi.R.modulus]
    return QuadraticMap(phi.R, [phi.table[s[a]] for a in range(phi.R.size)])


def polarization_is_bilinear(phi: QuadraticMap) -> bool:
    """(u, v) -> phi(u+v) - phi(u) - phi(v) is biadditive."""
    R, f = phi.R, phi.table
    add = R.add_table
    N = R.size

    def b(u, v):
        return f[add[u][v]] - f[u] - f[v]

    return all(
        b(add[u][v], w) == b(u, w) + b(v, w)
        for u in range(N)
        for v in range(N)
        for w in range(N)
    )


FormFn = Callable[[int, int], QmodZ]
Action = Callable[[FormFn, int, int], FormFn]


def _default_action(R: RingSpec) -> Action:
    def act(f: FormFn, r: int, s: int) -> FormFn:
        return lambda x, y: f(R.smul(r, x), R.smul(s, y))

    return act


def twist_checks(beta: BilinearForm, r: int, s: int, action: Action | None = None) -> None:
    """Check that beta(r -, s -) is a right R (x) R action compatible with the swap.

    ``action`` may replace the standard action (used for negative controls).
    Raises TwistViolation with a witness on failure.
    """
    R = beta.R
    act = action or _default_action(R)
    m, N = R.modulus, R.size
    f: FormFn = beta
    g = act(f, r, s)
    for r2 in range(m):
        for s2 in range(m):
            lhs = act(g, r2, s2)
            rhs = act(f, r * r2 % m, s * s2 % m)
            for x in range(N):
                for y in range(N):
                    if lhs(x, y) != rhs(x, y):
                        raise TwistViolation("not a right (R x R)-action", (r2, s2, x, y))

    def tau(h: FormFn) -> FormFn:
        return lambda x, y: h(y, x)

    lhs_t = tau(g)
    rhs_t = act(tau(f), s, r)
    for x in range(N):
        for y in range(N):
            if lhs_t(x, y) != rhs_t(x, y):
                raise TwistViolation("tau(beta (r x s)) != tau(beta) (s x r)", (x, y))
            if tau(tau(f))(x, y) != f(x, y):
                raise TwistViolation("tau is not an involution", (x, y))


def _additive_span(tables: Sequence[tuple], size: int) -> frozenset:
    zero = tuple(QmodZ(0) for _ in range(size))
    found, frontier = {zero}, [zero]
    while frontier:
        nxt = []
        for a in frontier:
            for g in tables:
                b = tuple(x + y for x, y in zip(a, g))
                if b not in found:
                    found.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(found)


class FormRingRep:
    """The instantiated form ring: one designated form and a list of quadratic maps.

    A form ring's Phi always receives the diagonal maps x -> beta(x, x) of
    the forms in M, so the qmodule used here is generated by the listed maps
    together with x -> beta0(x, x).  ``phi_generators`` lists the distinct
    nonzero maps phi[r] for phi among those and r in R.  The involution J is
    configuration; psi is never materialised (``psi_note``).
    """

    psi_note = "psi realised implicitly by r -> beta0(r x, y); J is configured data"

    def __init__(self, beta0: BilinearForm, phis: Sequence[QuadraticMap] = (), J: Involution | None = None):
        require_nondegenerate(beta0)
        R = beta0.R
        for phi in phis:
            if phi.R != R:
                raise ValueError("quadratic map over a different module")
            quadratic_check(phi)
            if phi.table[0]:
                raise ValueError(f"{phi} does not vanish at 0")
        self.beta0 = beta0
        self.phis = tuple(phis)
        self.J = J or Involution.identity(R)
        self.R = R

    @cached_property
    def phi_generators(self) -> tuple[QuadraticMap, ...]:
        out: list[QuadraticMap] = []
        seen = set()
        for phi in self.phis + (self.diagonal,):
            for r in range(self.R.modulus):
                q = qmap_action(phi, r)
                if not q.is_zero() and q.table not in seen:
                    seen.add(q.table)
                    out.append(q)
        return tuple(out)

    @cached_property
    def qmodule(self) -> frozenset:
        """Tables of the additive group generated by ``phi_generators``."""
        return _additive_span([q.table for q in self.phi_generators], self.R.size)

    def is_qmodule_closed(self) -> bool:
        return all(qmap_action(QuadraticMap(self.R, t), r).table in self.qmodule
                   for t in self.qmodule for r in range(self.R.modulus))

    @cached_property
    def diagonal(self) -> QuadraticMap:
        return QuadraticMap.diagonal(self.beta0)

    @cached_property
    def diagonal_listed(self) -> bool:
        """Whether x -> beta0(x, x) already lies in the additive span of the listed maps phi[r]."""
        gens = [qmap_action(phi, r).table for phi in self.phis for r in range(self.R.modulus)]
        return self.diagonal.table in _additive_span(gens, self.R.size)
