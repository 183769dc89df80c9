"""
Permutation groups acting on coordinates, orbit data, the averaging
idempotent theta = |G|^-1 sum_g g, and the identification theta(V^n) = V^t.

Codewords are tuples of n module-element indices (see ``RingSpec``).
Permutations are given 1-based, ``images[i-1] = g(i)``, and act on words by
``(g.v)_j = v_{g^-1(j)}``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import CapExceeded, InvalidPermutation, NotThetaFixed
from .ring import RingSpec, check_unit

DEFAULT_GROUP_CAP = 10_000

Word = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutation(f"{list(images)} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        """(self * other)(i) = self(other(i))."""
        return Perm(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Perm(tuple(inv))

    def act(self, word: Sequence[int]) -> Word:
        out = [0] * len(word)
        for i, j in enumerate(self.images):
            out[j - 1] = word[i]
        return tuple(out)

    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Permutation matrix P with P[g(i)][i] = 1, so P @ v = g.v."""
        n = self.degree
        rows = [[0] * n for _ in range(n)]
        for i, j in enumerate(self.images):
            rows[j - 1][i] = 1
        return tuple(tuple(r) for r in rows)


@dataclass(frozen=True)
class PermGroup:
    n: int
    elements: tuple[Perm, ...]
    generators: tuple[Perm, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Perm) -> bool:
        return g in self._element_set

    @cached_property
    def _element_set(self) -> frozenset:
        return frozenset(self.elements)

    @classmethod
    def trivial(cls, n: int) -> "PermGroup":
        e = Perm.identity(n)
        return cls(n, (e,), ())


def group_closure(n: int, gens: Iterable, cap: int = DEFAULT_GROUP_CAP) -> PermGroup:
    """All products of the generators, found breadth first."""
    gens = tuple(g if isinstance(g, Perm) else Perm(tuple(g)) for g in gens)
    for g in gens:
        if g.degree != n:
            raise InvalidPermutation(f"generator {list(g.images)} has degree {g.degree}, expected {n}")
    e = Perm.identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        h = queue.popleft()
        for g in gens:
            x = g * h
            if x not in seen:
                seen.add(x)
                if len(seen) > cap:
                    raise CapExceeded("group order", cap)
                queue.append(x)
    return PermGroup(n, tuple(sorted(seen)), gens)


def all_subgroups(n: int, cap: int = DEFAULT_GROUP_CAP) -> list[PermGroup]:
    """Every subgroup of S_n, each once, sorted by (order, elements).

    Found by repeatedly joining a known subgroup with one more permutation,
    starting from the trivial group; exhaustive, so only for small n.
    """
    sym = group_closure(n, _sn_generators(n), cap)
    found: dict[frozenset, PermGroup] = {}
    trivial = PermGroup.trivial(n)
    found[frozenset(trivial.elements)] = trivial
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            for g in sym.elements:
                if g in H:
                    continue
                gens = H.generators + (g,)
                J = group_closure(n, gens, cap)
                key = frozenset(J.elements)
                if key not in found:
                    found[key] = J
                    nxt.append(J)
        frontier = nxt
    return sorted(found.values(), key=lambda G: (G.order, G.elements))


def _sn_generators(n: int) -> list[Perm]:
    if n == 1:
        return []
    swap = Perm((2, 1) + tuple(range(3, n + 1)))
    cycle = Perm(tuple(range(2, n + 1)) + (1,))
    return [swap, cycle]


@dataclass(frozen=True)
class OrbitData:
    orbits: tuple[tuple[int, ...], ...]  # 1-based positions, each sorted
    reps: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.orbits)

    @cached_property
    def orbit_index(self) -> tuple[int, ...]:
        """orbit_index[j-1] = i when position j lies in orbit i (0-based)."""
        n = sum(self.sizes)
        out = [0] * n
        for i, orb in enumerate(self.orbits):
            for j in orb:
                out[j - 1] = i
        return tuple(out)


def orbit_decomposition(G: PermGroup) -> OrbitData:
    orbits = []
    placed: set[int] = set()
    for a in range(1, G.n + 1):
        if a in placed:
            continue
        orb = sorted({g.inverse()(a) for g in G.elements})
        placed.update(orb)
        orbits.append(tuple(orb))
    orbits.sort(key=lambda o: o[0])
    return OrbitData(tuple(orbits), tuple(o[0] for o in orbits), tuple(len(o) for o in orbits))


def theta_apply(G: PermGroup, R: RingSpec, u: Sequence[int]) -> Word:
    """|G|^-1 sum_g g.u, computed coordinatewise in V."""
    inv = check_unit(R, G.order)
    acc = [0] * G.n
    add = R.add_table
    for g in G.elements:
        gu = g.act(u)
        acc = [add[a][b] for a, b in zip(acc, gu)]
    return tuple(R.smul(inv, a) for a in acc)


def orbit_length_matrix(G: PermGroup) -> tuple[tuple[int, ...], ...]:
    """The diagonal matrix whose j-th entry is the size of j's orbit."""
    od = orbit_decomposition(G)
    n = G.n
    return tuple(
        tuple(od.sizes[od.orbit_index[i]] if i == j else 0 for j in range(n)) for i in range(n)
    )


def apply_orbit_lengths(G: PermGroup, R: RingSpec, u: Sequence[int], od: OrbitData | None = None) -> Word:
    """u M_G: coordinate j multiplied by the size of its orbit."""
    od = od or orbit_decomposition(G)
    return tuple(R.smul(od.sizes[od.orbit_index[j]], a) for j, a in enumerate(u))


class ThetaImage:
    """theta(V^n) in the canonical order induced by V^t (lexicographic in u_G).

    ``index`` maps each theta-fixed word to its position, which is also the
    coordinate index of the group algebra C[theta(V^n)].
    """

    def __init__(self, G: PermGroup, R: RingSpec):
        check_unit(R, G.order)
        self.G = G
        self.R = R
        self.orbits = orbit_decomposition(G)
        self.t = self.orbits.t
        self.elements: tuple[Word, ...] = tuple(
            self.expand(c) for c in product(range(R.size), repeat=self.t)
        )
        self.index: dict[Word, int] = {u: i for i, u in enumerate(self.elements)}
        if len(self.index) != R.size ** self.t:
            raise AssertionError("theta(V^n) does not have |V|^t elements")

    def __len__(self):
        return len(self.elements)

    @cached_property
    def add_idx(self) -> tuple[tuple[int, ...], ...]:
        """add_idx[i][j] = position of elements[i] + elements[j]."""
        add, pos = self.R.add_table, self.index
        els = self.elements
        return tuple(
            tuple(pos[tuple(add[a][b] for a, b in zip(u, v))] for v in els) for u in els
        )

    @cached_property
    def smul_idx(self) -> tuple[tuple[int, ...], ...]:
        """smul_idx[r][i] = position of r * elements[i]."""
        pos = self.index
        return tuple(
            tuple(pos[tuple(s[a] for a in u)] for u in self.elements)
            for s in self.R.smul_table
        )

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, u) -> bool:
        return tuple(u) in self.index

    def expand(self, c: Sequence[int]) -> Word:
        """sum_i c_i * indicator(orbit i)."""
        oi = self.orbits.orbit_index
        return tuple(c[oi[j]] for j in range(self.G.n))

    def collapse(self, u: Sequence[int]) -> Word:
        """u_G = (u_{alpha_1}, ..., u_{alpha_t}); NotThetaFixed off theta(V^n)."""
        if len(u) != self.G.n:
            raise NotThetaFixed(f"word of length {len(u)} for degree {self.G.n}")
        for orb in self.orbits.orbits:
            first = u[orb[0] - 1]
            if any(u[j - 1] != first for j in orb):
                raise NotThetaFixed(f"{list(u)} is not constant on orbit {list(orb)}")
        return tuple(u[a - 1] for a in self.orbits.reps)

    def position(self, u: Sequence[int]) -> int:
        try:
            return self.index[tuple(u)]
        except KeyError:
            self.collapse(u)  # raises with a precise message
            raise

    def require(self, words: Iterable[Sequence[int]]) -> None:
        for u in words:
            if tuple(u) not in self.index:
                self.collapse(u)


def theta_image(G: PermGroup, R: RingSpec) -> ThetaImage:
    return ThetaImage(G, R)


def collapse(ambient: ThetaImage, u: Sequence[int]) -> Word:
    return ambient.collapse(u)


def expand(ambient: ThetaImage, c: Sequence[int]) -> Word:
    return ambient.expand(c)
