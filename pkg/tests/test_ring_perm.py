from itertools import product
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from gcodes.errors import CapExceeded, InvalidInvolution, InvalidPermutation, NotAUnit, NotThetaFixed
from gcodes.perm import (
    Perm, PermGroup, ThetaImage, all_subgroups, apply_orbit_lengths, group_closure,
    orbit_decomposition, orbit_length_matrix, theta_apply,
)
from gcodes.ring import Involution, RingSpec, check_unit, list_idempotents, list_units, validate_involution


def test_units_and_idempotents():
    assert list_units(RingSpec(2)) == [1]
    assert list_units(RingSpec(6)) == [1, 5]
    assert list_units(RingSpec(3)) == [1, 2]
    assert list_idempotents(RingSpec(2)) == [0, 1]
    assert list_idempotents(RingSpec(6)) == [0, 1, 3, 4]
    assert list_idempotents(RingSpec(4)) == [0, 1]


@pytest.mark.parametrize("m", range(2, 31))
def test_idempotents_brute_force(m):
    R = RingSpec(m)
    idem = list_idempotents(R)
    assert idem == [a for a in range(m) if a * a % m == a]
    assert 0 in idem and 1 in idem


def test_check_unit():
    assert check_unit(RingSpec(2), 3) == 1
    assert check_unit(RingSpec(3), 2) == 2
    with pytest.raises(NotAUnit):
        check_unit(RingSpec(2), 2)


def test_involutions():
    validate_involution(RingSpec(6), Involution.identity(RingSpec(6)))
    validate_involution(RingSpec(5), Involution.identity(RingSpec(5)))
    with pytest.raises(InvalidInvolution):
        validate_involution(RingSpec(4), Involution((0, 2, 1, 3)))


def test_module_rank_two_indexing():
    R = RingSpec(3, 2)
    assert R.size == 9
    assert [R.index(R.coords(a)) for a in range(9)] == list(range(9))
    assert R.coords(5) == (1, 2)
    assert R.add(R.index((1, 2)), R.index((2, 2))) == R.index((0, 1))
    assert R.smul(2, R.index((1, 2))) == R.index((2, 1))


def test_group_closure_examples():
    assert group_closure(3, [(2, 3, 1)], 100).order == 3
    assert group_closure(2, []).order == 1
    assert group_closure(3, [(2, 1, 3), (1, 3, 2)], 100).order == 6
    with pytest.raises(CapExceeded):
        group_closure(4, [(2, 1, 3, 4), (2, 3, 4, 1)], 10)
    with pytest.raises(InvalidPermutation):
        group_closure(3, [(1, 1, 2)])


def test_subgroup_counts():
    assert len(all_subgroups(3)) == 6
    assert len(all_subgroups(4)) == 30


def test_perm_action_convention():
    g = Perm((2, 3, 1))
    assert g.act((1, 0, 0)) == (0, 1, 0)
    assert (g * g.inverse()) == Perm.identity(3)
    h = Perm((2, 1, 3))
    u = (5, 6, 7)
    assert (g * h).act(u) == g.act(h.act(u))


def test_orbits():
    od = orbit_decomposition(group_closure(3, [(2, 3, 1)]))
    assert od.orbits == ((1, 2, 3),) and od.t == 1
    od = orbit_decomposition(PermGroup.trivial(2))
    assert od.orbits == ((1,), (2,)) and od.sizes == (1, 1)
    od = orbit_decomposition(group_closure(3, [(2, 1, 3)]))
    assert od.orbits == ((1, 2), (3,)) and od.sizes == (2, 1)


def test_theta_examples():
    R2 = RingSpec(2)
    G = group_closure(3, [(2, 3, 1)])
    assert theta_apply(G, R2, (1, 0, 0)) == (1, 1, 1)
    assert theta_apply(G, R2, (1, 1, 0)) == (0, 0, 0)
    assert theta_apply(G, R2, (0, 0, 0)) == (0, 0, 0)


def test_theta_image_examples():
    A = ThetaImage(group_closure(3, [(2, 3, 1)]), RingSpec(2))
    assert A.elements == ((0, 0, 0), (1, 1, 1))
    assert A.collapse((1, 1, 1)) == (1,)
    assert A.expand((0,)) == (0, 0, 0)
    with pytest.raises(NotThetaFixed):
        A.collapse((1, 0, 0))
    assert len(ThetaImage(PermGroup.trivial(2), RingSpec(2))) == 4
    B = ThetaImage(group_closure(2, [(2, 1)]), RingSpec(3))
    assert B.elements == ((0, 0), (1, 1), (2, 2))
    with pytest.raises(NotAUnit):
        ThetaImage(group_closure(2, [(2, 1)]), RingSpec(2))


def test_orbit_length_matrix():
    G = group_closure(3, [(2, 3, 1)])
    assert orbit_length_matrix(G) == ((3, 0, 0), (0, 3, 0), (0, 0, 3))
    assert apply_orbit_lengths(G, RingSpec(2), (1, 1, 1)) == (1, 1, 1)
    assert orbit_length_matrix(PermGroup.trivial(2)) == ((1, 0), (0, 1))
    assert apply_orbit_lengths(group_closure(2, [(2, 1)]), RingSpec(3), (1, 1)) == (2, 2)


SMALL = [(m, n, G) for m in (2, 3, 4, 5) for n in (1, 2, 3) for G in all_subgroups(n)
         if gcd(G.order, m) == 1]


@pytest.mark.parametrize("m,n,G", SMALL, ids=lambda x: str(getattr(x, "order", x)))
def test_theta_is_an_idempotent_onto_the_fixed_words(m, n, G):
    R = RingSpec(m)
    A = ThetaImage(G, R)
    fixed = set(A.elements)
    for u in product(range(m), repeat=n):
        tu = theta_apply(G, R, u)
        assert theta_apply(G, R, tu) == tu
        assert tu in fixed
        assert all(g.act(tu) == tu for g in G.generators)
    assert len(fixed) == m ** A.t


@settings(max_examples=50, deadline=None)
@given(st.permutations(range(1, 6)), st.permutations(range(1, 6)))
def test_group_closure_contains_products(a, b):
    G = group_closure(5, [tuple(a), tuple(b)], 200)
    els = set(G.elements)
    for x in G.elements[:10]:
        for y in G.elements[:10]:
            assert x * y in els
    assert 120 % G.order == 0
