"""The ring R = Z/m, the module V = R^k, and involutions on R."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import gcd
from typing import Sequence

from .errors import InvalidInvolution, NotAUnit


@dataclass(frozen=True)
class RingSpec:
    """R = Z/modulus acting on V = R^module_rank.

    Elements of V are addressed by their index in lexicographic coordinate
    order (index = coordinates read as a base-m numeral); for k = 1 the index
    is the residue itself.
    """

    modulus: int
    module_rank: int = 1

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if self.module_rank < 1:
            raise ValueError(f"module rank must be >= 1, got {self.module_rank}")

    @property
    def size(self) -> int:
        """|V|."""
        return self.modulus ** self.module_rank

    @cached_property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        return tuple(product(range(self.modulus), repeat=self.module_rank))

    def coords(self, a: int) -> tuple[int, ...]:
        return self.elements[a]

    def index(self, coords: Sequence[int]) -> int:
        out = 0
        for c in coords:
            out = out * self.modulus + (c % self.modulus)
        return out

    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        m, els = self.modulus, self.elements
        return tuple(
            tuple(self.index([(x + y) % m for x, y in zip(a, b)]) for b in els) for a in els
        )

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        return tuple(self.index([-x for x in a]) for a in self.elements)

    @cached_property
    def smul_table(self) -> tuple[tuple[int, ...], ...]:
        """smul_table[r][a] = index of r * a."""
        return tuple(
            tuple(self.index([r * x for x in a]) for a in self.elements)
            for r in range(self.modulus)
        )

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def smul(self, r: int, a: int) -> int:
        return self.smul_table[r % self.modulus][a]


def list_units(R: RingSpec) -> list[int]:
    return [r for r in range(R.modulus) if gcd(r, R.modulus) == 1]


def list_idempotents(R: RingSpec) -> list[int]:
    m = R.modulus
    return [r for r in range(m) if (r * r - r) % m == 0]


def check_unit(R: RingSpec, z: int) -> int:
    """Inverse of z mod m; NotAUnit when gcd(z, m) != 1."""
    m = R.modulus
    if gcd(z % m, m) != 1:
        raise NotAUnit(z, m)
    return pow(z, -1, m)


@dataclass(frozen=True)
class Involution:
    """An involution J on R given by its table of images (table[r] = J(r))."""

    table: tuple[int, ...]

    @classmethod
    def identity(cls, R: RingSpec) -> "Involution":
        return cls(tuple(range(R.modulus)))

    def __call__(self, r: int) -> int:
        return self.table[r]


def validate_involution(R: RingSpec, J: Involution) -> None:
    """Raise InvalidInvolution unless J is an additive anti-automorphism of order 2."""
    m = R.modulus
    t = J.table
    if len(t) != m or any(not 0 <= x < m for x in t):
        raise InvalidInvolution(f"table must list {m} residues in [0, {m})")
    if t[1 % m] != 1 % m:
        raise InvalidInvolution("J(1) != 1", (1,))
    for r in range(m):
        if t[t[r]] != r:
            raise InvalidInvolution("J(J(r)) != r", (r,))
        for s in range(m):
            if t[(r + s) % m] != (t[r] + t[s]) % m:
                raise InvalidInvolution("J(r+s) != J(r)+J(s)", (r, s))
            if t[(r * s) % m] != (t[s] * t[r]) % m:
                raise InvalidInvolution("J(rs) != J(s)J(r)", (r, s))
