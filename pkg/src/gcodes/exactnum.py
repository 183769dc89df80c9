"""
Exact arithmetic: rationals, Q/Z, the cyclotomic fields Q(zeta_K), dense
cyclotomic matrices and the exact linear algebra built on them.

Rationals are ``fractions.Fraction``.  A cyclotomic number is stored as an
integer coefficient vector over a common positive denominator, in the power
basis 1, z, ..., z^(phi(K)-1) reduced modulo the K-th cyclotomic polynomial.
Every value is canonical, so ``==`` is structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from .errors import ConductorMismatch, DimensionMismatch, ParseError

Rational = Fraction


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction."""
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"not a rational: {text!r}")
    parts = text.strip().split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            num, den = int(parts[0]), int(parts[1])
            if den == 0:
                raise ParseError(f"zero denominator in {text!r}")
            return Fraction(num, den)
    except ValueError:
        pass
    raise ParseError(f"not a rational: {text!r}")


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def lcm(*values: int) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


# ---------------------------------------------------------------------------
# Q/Z

@dataclass(frozen=True, order=True)
class QmodZ:
    """An element of Q/Z, kept as its representative in [0, 1)."""

    value: Fraction = Fraction(0)

    def __post_init__(self):
        v = Fraction(self.value)
        object.__setattr__(self, "value", v - (v.numerator // v.denominator))

    @classmethod
    def parse(cls, text) -> "QmodZ":
        return cls(parse_rational(text))

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def __add__(self, other):
        if not isinstance(other, QmodZ):
            return NotImplemented
        return QmodZ(self.value + other.value)

    def __sub__(self, other):
        if not isinstance(other, QmodZ):
            return NotImplemented
        return QmodZ(self.value - other.value)

    def __neg__(self):
        return QmodZ(-self.value)

    def __mul__(self, z):
        if isinstance(z, bool) or not isinstance(z, int):
            return NotImplemented
        return QmodZ(self.value * z)

    __rmul__ = __mul__

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return format_rational(self.value)


def qmz_arith(a: QmodZ, b, op: str) -> QmodZ:
    """Dispatch ``add``, ``neg`` (b ignored) or ``smul`` (b an integer)."""
    if op == "add":
        return a + b
    if op == "neg":
        return -a
    if op == "smul":
        return a * b
    raise ValueError(f"unknown Q/Z operation {op!r}")


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction tables

def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den is monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dd]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(K: int) -> tuple[int, ...]:
    """Coefficients (lowest degree first) of the K-th cyclotomic polynomial."""
    if K < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (K - 1) + [1]
    den = [1]
    for d in range(1, K):
        if K % d == 0:
            den = _poly_mul(den, list(cyclotomic_polynomial(d)))
    return tuple(_poly_divexact(num, den))


def totient(K: int) -> int:
    return len(cyclotomic_polynomial(K)) - 1


@lru_cache(maxsize=None)
def _power_table(K: int) -> tuple[tuple[int, ...], ...]:
    # row e: z^e reduced modulo Phi_K, for 0 <= e < K
    poly = cyclotomic_polynomial(K)
    deg = len(poly) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(K):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * poly[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _units_mod(K: int) -> tuple[int, ...]:
    return tuple(a for a in range(1, K + 1) if gcd(a, K) == 1)


# ---------------------------------------------------------------------------
# Q(zeta_K)

def _normalize(num: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = gcd(g, c)
            if g == 1:
                break
    if not any(num):
        return tuple(0 for _ in num), 1
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class Cyclotomic:
    """An exact element of the cyclotomic field Q(zeta_K)."""

    __slots__ = ("K", "_num", "_den", "_hash")

    def __init__(self, K: int, coeffs: Iterable = ()):
        deg = totient(K)
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > deg:
            # arbitrary polynomial in z: reduce through z^K = 1 and Phi_K
            table = _power_table(K)
            red = [Fraction(0)] * deg
            for e, c in enumerate(coeffs):
                if c:
                    for i, t in enumerate(table[e % K]):
                        if t:
                            red[i] += c * t
            coeffs = red
        coeffs = coeffs + [Fraction(0)] * (deg - len(coeffs))
        den = lcm(*(c.denominator for c in coeffs))
        num = [c.numerator * (den // c.denominator) for c in coeffs]
        self._set(K, *_normalize(num, den))

    def _set(self, K, num, den):
        self.K = K
        self._num = num
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, K: int, num, den: int = 1) -> "Cyclotomic":
        obj = cls.__new__(cls)
        obj._set(K, *_normalize(num, den))
        return obj

    @classmethod
    def from_rational(cls, K: int, x) -> "Cyclotomic":
        x = Fraction(x)
        num = [0] * totient(K)
        num[0] = x.numerator
        return cls._raw(K, num, x.denominator)

    @classmethod
    def zeta(cls, K: int, e: int = 1) -> "Cyclotomic":
        return cls._raw(K, _power_table(K)[e % K], 1)

    @classmethod
    def from_exponent_counts(cls, K: int, counts: Sequence[int], den: int = 1) -> "Cyclotomic":
        """Build sum_e counts[e] * zeta_K^e / den from integer counts."""
        table = _power_table(K)
        acc = [0] * totient(K)
        for e, c in enumerate(counts):
            if c:
                for i, t in enumerate(table[e % K]):
                    if t:
                        acc[i] += c * t
        return cls._raw(K, acc, den)

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def __bool__(self):
        return any(self._num)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if self.K == other.K:
                return self._num == other._num and self._den == other._den
            if self.is_rational() and other.is_rational():
                return self.rational_value() == other.rational_value()
            return False
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self.K, self._num, self._den))
        return self._hash

    def __repr__(self):
        return f"Cyclotomic({self.K}, {self})"

    def __str__(self):
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mono = f"z{self.K}" + (f"^{e}" if e > 1 else "")
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.K == self.K:
                return other
            if other.is_rational():
                return Cyclotomic.from_rational(self.K, other.rational_value())
            if self.is_rational():
                raise _Swap
            raise ConductorMismatch(f"conductors {self.K} and {other.K}")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Cyclotomic.from_rational(self.K, other)
        raise TypeError(f"cannot combine Cyclotomic with {type(other).__name__}")

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except _Swap:
            return Cyclotomic.from_rational(other.K, self.rational_value()) + other
        except TypeError:
            return NotImplemented
        d1, d2 = self._den, o._den
        if d1 == d2:
            return Cyclotomic._raw(self.K, [a + b for a, b in zip(self._num, o._num)], d1)
        return Cyclotomic._raw(
            self.K, [a * d2 + b * d1 for a, b in zip(self._num, o._num)], d1 * d2
        )

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.K, [-a for a in self._num], self._den)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except _Swap:
            return Cyclotomic.from_rational(other.K, self.rational_value()) * other
        except TypeError:
            return NotImplemented
        den = self._den * o._den
        if o.is_rational():
            c = o._num[0]
            return Cyclotomic._raw(self.K, [a * c for a in self._num], den)
        if self.is_rational():
            c = self._num[0]
            return Cyclotomic._raw(self.K, [a * c for a in o._num], den)
        a, b = self._num, o._num
        deg = len(a)
        conv = [0] * (2 * deg - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:deg]
        table = _power_table(self.K)
        for d in range(deg, len(conv)):
            c = conv[d]
            if c:
                for i, t in enumerate(table[d % self.K]):
                    if t:
                        out[i] += c * t
        return Cyclotomic._raw(self.K, out, den)

    __rmul__ = __mul__

    def galois(self, a: int) -> "Cyclotomic":
        """Apply the automorphism zeta_K -> zeta_K^a (gcd(a, K) = 1)."""
        if gcd(a, self.K) != 1:
            raise ValueError(f"{a} is not a unit mod {self.K}")
        if self.is_rational():
            return self
        table = _power_table(self.K)
        acc = [0] * len(self._num)
        for e, c in enumerate(self._num):
            if c:
                for i, t in enumerate(table[(a * e) % self.K]):
                    if t:
                        acc[i] += c * t
        return Cyclotomic._raw(self.K, acc, self._den)

    def conj(self) -> "Cyclotomic":
        return self.galois(-1)

    def inverse(self) -> "Cyclotomic":
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        if self.is_rational():
            return Cyclotomic.from_rational(self.K, 1 / self.rational_value())
        # x^-1 = prod_{a != 1} sigma_a(x) / N(x)
        rest = Cyclotomic.from_rational(self.K, 1)
        for a in _units_mod(self.K):
            if a != 1:
                rest = rest * self.galois(a)
        norm = (self * rest).rational_value()
        return rest * (1 / norm)

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = Cyclotomic.from_rational(self.K, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def lift(self, K2: int) -> "Cyclotomic":
        """Embed into Q(zeta_K2) for a multiple K2 of K."""
        if K2 % self.K:
            raise ConductorMismatch(f"{self.K} does not divide {K2}")
        step = K2 // self.K
        counts = [0] * K2
        for e, c in enumerate(self._num):
            if c:
                counts[e * step] += c
        return Cyclotomic.from_exponent_counts(K2, counts, self._den)


class _Swap(Exception):
    # internal: rational self meets an irrational operand of another conductor
    pass


def cyc_field_ops(x: Cyclotomic, y, op: str) -> Cyclotomic:
    """Dispatch ``add``, ``mul``, ``inv`` or ``conj`` (y ignored for unary ops)."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inverse()
    if op == "conj":
        return x.conj()
    raise ValueError(f"unknown field operation {op!r}")


def root_of_unity(a: QmodZ, K: int) -> Cyclotomic:
    """exp(2 pi i a) as an element of Q(zeta_K)."""
    a = a if isinstance(a, QmodZ) else QmodZ(a)
    if K % a.denominator:
        raise ConductorMismatch(f"denominator {a.denominator} does not divide {K}")
    return Cyclotomic.zeta(K, a.value.numerator * (K // a.denominator))


def factorize(s: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= s:
        while s % p == 0:
            out[p] = out.get(p, 0) + 1
            s //= p
        p += 1
    if s > 1:
        out[s] = out.get(s, 0) + 1
    return out


def squarefree_part(s: int) -> int:
    out = 1
    for p, e in factorize(s).items():
        if e % 2:
            out *= p
    return out


def sqrt_of_nat(s: int, K: int) -> Cyclotomic:
    """The positive square root of s in Q(zeta_K), built from Gauss sums."""
    if s < 1:
        raise ValueError("s must be positive")
    out = Cyclotomic.from_rational(K, 1)
    for p, e in sorted(factorize(s).items()):
        if e // 2:
            out = out * p ** (e // 2)
        if e % 2 == 0:
            continue
        if p == 2:
            if K % 8:
                raise ConductorMismatch(f"sqrt(2) needs 8 | K, got K={K}")
            out = out * (Cyclotomic.zeta(K, K // 8) + Cyclotomic.zeta(K, -(K // 8)))
            continue
        if K % p or (p % 4 == 3 and K % 4):
            raise ConductorMismatch(f"sqrt({p}) is not available in Q(zeta_{K})")
        counts = [0] * K
        for j in range(p):
            counts[(j * j % p) * (K // p)] += 1
        gauss = Cyclotomic.from_exponent_counts(K, counts)
        if p % 4 == 3:
            gauss = gauss * Cyclotomic.zeta(K, -(K // 4))
        out = out * gauss
    return out


# ---------------------------------------------------------------------------
# matrices

class CycMatrix:
    """A dense rows x cols matrix over Q(zeta_K)."""

    __slots__ = ("rows", "cols", "K", "entries", "_hash")

    def __init__(self, entries, K: int):
        rows = []
        for row in entries:
            rows.append(tuple(_as_cyc(x, K) for x in row))
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must be non-empty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("ragged matrix")
        self.entries = tuple(rows)
        self.rows = len(rows)
        self.cols = len(rows[0])
        self.K = K
        self._hash = None

    @classmethod
    def identity(cls, n: int, K: int) -> "CycMatrix":
        one = Cyclotomic.from_rational(K, 1)
        zero = Cyclotomic.from_rational(K, 0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], K)

    @classmethod
    def monomial(cls, images: Sequence[int], phases: Sequence[Cyclotomic], K: int) -> "CycMatrix":
        """Column j has the single entry phases[j] in row images[j]."""
        n = len(images)
        zero = Cyclotomic.from_rational(K, 0)
        rows = [[zero] * n for _ in range(n)]
        for j, (i, ph) in enumerate(zip(images, phases)):
            rows[i][j] = ph
        return cls(rows, K)

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.entries)
        return self._hash

    def __repr__(self):
        return f"CycMatrix({self.rows}x{self.cols}, K={self.K})"

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, other):
        if isinstance(other, CycMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
            _check_same_k(self.K, other.K)
            zero = Cyclotomic.from_rational(self.K, 0)
            out = []
            ocols = list(zip(*other.entries))
            for row in self.entries:
                nz = [(k, a) for k, a in enumerate(row) if a]
                out_row = []
                for col in ocols:
                    acc = zero
                    for k, a in nz:
                        b = col[k]
                        if b:
                            acc = acc + a * b
                    out_row.append(acc)
                out.append(out_row)
            return CycMatrix(out, self.K)
        return self.apply(other)

    def apply(self, vec: Sequence) -> tuple[Cyclotomic, ...]:
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} for {self.cols} columns")
        vec = [_as_cyc(x, self.K) for x in vec]
        zero = Cyclotomic.from_rational(self.K, 0)
        nz = [(k, v) for k, v in enumerate(vec) if v]
        out = []
        for row in self.entries:
            acc = zero
            for k, v in nz:
                a = row[k]
                if a:
                    acc = acc + a * v
            out.append(acc)
        return tuple(out)

    def __sub__(self, other):
        _check_same_k(self.K, other.K)
        return CycMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
            self.K,
        )

    def scaled(self, c) -> "CycMatrix":
        return CycMatrix([[a * c for a in row] for row in self.entries], self.K)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            (a == 1) if i == j else (not a)
            for i, row in enumerate(self.entries)
            for j, a in enumerate(row)
        )

    def is_monomial(self) -> bool:
        """Exactly one nonzero entry in every row and every column."""
        if self.rows != self.cols:
            return False
        col_hits = [0] * self.cols
        for row in self.entries:
            nz = [j for j, a in enumerate(row) if a]
            if len(nz) != 1:
                return False
            col_hits[nz[0]] += 1
        return all(c == 1 for c in col_hits)

    def transpose(self) -> "CycMatrix":
        return CycMatrix(list(zip(*self.entries)), self.K)

    def to_strings(self) -> list[list[list[str]]]:
        return [[a.to_strings() for a in row] for row in self.entries]


def _check_same_k(k1, k2):
    if k1 != k2:
        raise ConductorMismatch(f"conductors {k1} and {k2}")


def _as_cyc(x, K: int) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        if x.K == K:
            return x
        if x.is_rational():
            return Cyclotomic.from_rational(K, x.rational_value())
        if K % x.K == 0:
            return x.lift(K)
        raise ConductorMismatch(f"entry of conductor {x.K} in a matrix of conductor {K}")
    return Cyclotomic.from_rational(K, x)


# ---------------------------------------------------------------------------
# exact elimination

class RowReducer:
    """Incremental reduced row echelon form over Q(zeta_K) with sparse rows.

    Rows are dicts ``column -> nonzero Cyclotomic``.  Pivot rows are kept fully
    reduced: each has a 1 at its pivot and zeros in every other pivot column.
    """

    def __init__(self, ncols: int, K: int):
        self.ncols = ncols
        self.K = K
        self.pivots: dict[int, dict[int, Cyclotomic]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict[int, Cyclotomic]) -> dict[int, Cyclotomic]:
        row = dict(row)
        for p in [c for c in row if c in self.pivots]:
            c = row.pop(p, None)
            if not c:
                continue
            for j, a in self.pivots[p].items():
                if j == p:
                    continue
                v = row.get(j)
                v = -(a * c) if v is None else v - a * c
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
        return row

    def add(self, row) -> bool:
        """Insert a row; return True when it raised the rank."""
        if not isinstance(row, dict):
            row = {j: _as_cyc(x, self.K) for j, x in enumerate(row) if x}
        else:
            row = {j: _as_cyc(x, self.K) for j, x in row.items() if x}
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = row[p].inverse()
        row = {j: (a * inv if j != p else Cyclotomic.from_rational(self.K, 1)) for j, a in row.items()}
        for q, prow in self.pivots.items():
            c = prow.get(p)
            if c:
                for j, a in row.items():
                    if j == p:
                        prow.pop(p)
                        continue
                    v = prow.get(j)
                    v = -(a * c) if v is None else v - a * c
                    if v:
                        prow[j] = v
                    else:
                        prow.pop(j, None)
        self.pivots[p] = row
        return True

    def kernel_basis(self) -> list[tuple[Cyclotomic, ...]]:
        """Canonical basis of the solution space: one vector per free column."""
        zero = Cyclotomic.from_rational(self.K, 0)
        one = Cyclotomic.from_rational(self.K, 1)
        basis = []
        for f in range(self.ncols):
            if f in self.pivots:
                continue
            vec = [zero] * self.ncols
            vec[f] = one
            for p, prow in self.pivots.items():
                c = prow.get(f)
                if c:
                    vec[p] = -c
            basis.append(tuple(vec))
        return basis


def nullspace(M: CycMatrix) -> list[tuple[Cyclotomic, ...]]:
    """Exact basis of {x : Mx = 0} in canonical (reduced echelon) form."""
    red = RowReducer(M.cols, M.K)
    for row in M.entries:
        red.add(row)
    return red.kernel_basis()


def _infer_conductor(vectors) -> int:
    K = 1
    for vec in vectors:
        for x in vec:
            if isinstance(x, Cyclotomic) and not x.is_rational():
                if K == 1 or K == x.K:
                    K = x.K
                else:
                    raise ConductorMismatch(f"conductors {K} and {x.K}")
    return K


def rank(vectors: Sequence[Sequence], ncols: int | None = None, K: int | None = None) -> int:
    vectors = list(vectors)
    if ncols is None:
        ncols = len(vectors[0]) if vectors else 0
    if K is None:
        K = _infer_conductor(vectors)
    red = RowReducer(ncols, K)
    for v in vectors:
        if len(v) != ncols:
            raise DimensionMismatch(f"vector of length {len(v)}, expected {ncols}")
        red.add(v)
    return red.rank


@dataclass(frozen=True)
class SpanComparison:
    relation: str  # "equal", "a_subset_b", "b_subset_a" or "incomparable"
    dim_a: int
    dim_b: int
    dim_union: int


def span_compare(A: Sequence[Sequence], B: Sequence[Sequence]) -> SpanComparison:
    """Compare span(A) and span(B) by exact ranks."""
    A, B = list(A), list(B)
    lengths = {len(v) for v in A + B}
    if len(lengths) > 1:
        raise DimensionMismatch(f"vectors of lengths {sorted(lengths)}")
    ncols = lengths.pop() if lengths else 0
    K = _infer_conductor(A + B)
    da = rank(A, ncols, K)
    db = rank(B, ncols, K)
    du = rank(A + B, ncols, K)
    if da == du and db == du:
        rel = "equal"
    elif db == du:
        rel = "a_subset_b"
    elif da == du:
        rel = "b_subset_a"
    else:
        rel = "incomparable"
    return SpanComparison(rel, da, db, du)
