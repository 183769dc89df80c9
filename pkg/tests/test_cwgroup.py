from fractions import Fraction as F

import pytest

from helpers import Setup
from gcodes.codes import theta_code
from gcodes.cwgroup import (
    CycMatrix, GRepresentation, SymmetricIdempotent, compute_conductor, conjecture_explore,
    find_symmetric_idempotents, fixed_space, gen_d_phi, gen_h, gen_m_r, group_closure_matrices,
    idempotent_report, is_invertible, verify_cwinv, verify_parainv,
)
from gcodes.errors import CapExceeded, ConductorMismatch, NotAUnit, NotSelfDualIsotropic
from gcodes.exactnum import Cyclotomic, sqrt_of_nat
from gcodes.forms import FormRingRep, qmap_action
from gcodes.results import FINDING, OK
from gcodes.ring import RingSpec, list_units


def rep(S, *phis, K=None):
    return GRepresentation(S.A, FormRingRep(S.beta, [S.phi(*p) for p in phis]), K)


def hadamard(K=8):
    s = sqrt_of_nat(2, K).inverse()
    return CycMatrix([[s, s], [s, -s]], K)


def test_m_r_examples(s1):
    rho = rep(Setup(3, 1))
    assert gen_m_r(rho, 1).is_identity()
    assert gen_m_r(rho, 2) == CycMatrix([[1, 0, 0], [0, 0, 1], [0, 1, 0]], rho.K)
    assert gen_m_r(rep(s1), 1).is_identity()
    with pytest.raises(NotAUnit):
        gen_m_r(rho, 3)


def test_d_phi_examples():
    S = Setup(2, 1)
    rho = rep(S, (0, F(1, 4)))
    assert gen_d_phi(rho, S.phi(0, F(1, 2))) == CycMatrix([[1, 0], [0, -1]], 8)
    assert gen_d_phi(rho, S.phi(0, F(1, 4))) == CycMatrix([[1, 0], [0, Cyclotomic.zeta(8, 2)]], 8)
    assert gen_d_phi(rho, S.phi(0, 0)).is_identity()


def test_symmetric_idempotents():
    got = find_symmetric_idempotents(RingSpec(2))
    assert [(s.iota, s.mu, s.nu) for s in got] == [(0, 0, 0), (1, 1, 1)]
    got = {s.iota: (s.mu, s.nu) for s in find_symmetric_idempotents(RingSpec(6))}
    assert got[3] == (3, 3) and got[4] == (2, 2) and got[1] == (1, 1)
    for m in range(2, 25):
        found = find_symmetric_idempotents(RingSpec(m))
        assert any(s.iota == 1 and (s.mu, s.nu) == (1, 1) for s in found)
        for s in found:
            assert s.mu * s.nu % m == s.iota and s.iota * s.iota % m == s.iota
    assert idempotent_report(RingSpec(6))["rejected"] == []


def test_h_examples(z2_n2):
    rho = rep(Setup(2, 1))
    h1 = gen_h(rho, SymmetricIdempotent(1, 1, 1))
    assert h1 == hadamard()
    assert gen_h(rho, SymmetricIdempotent(0, 0, 0)).is_identity()
    rho2 = rep(z2_n2)
    h = gen_h(rho2, SymmetricIdempotent(1, 1, 1))
    half = F(1, 2)
    expect = [[half * (-1) ** sum(a * b for a, b in zip(v, u)) for u in rho2.ambient.elements]
              for v in rho2.ambient.elements]
    assert h == CycMatrix(expect, 8)


def test_conductor_and_mismatch():
    S = Setup(3, 2, [(2, 1)])
    assert compute_conductor(S.A, [3], find_symmetric_idempotents(S.R)) == 24
    S5 = Setup(5, 1)
    assert compute_conductor(S5.A, [5], find_symmetric_idempotents(S5.R)) == 40
    with pytest.raises(ConductorMismatch):
        rep(S, K=8)


def test_closure_orders():
    assert group_closure_matrices([CycMatrix.identity(2, 8)]).order == 1
    d1 = CycMatrix([[1, 0], [0, -1]], 8)
    d2 = CycMatrix([[1, 0], [0, Cyclotomic.zeta(8, 2)]], 8)
    assert group_closure_matrices([d1, hadamard()]).order == 16
    assert group_closure_matrices([d2, hadamard()]).order == 192
    with pytest.raises(CapExceeded):
        group_closure_matrices([d2, hadamard()], cap=100)


def test_fixed_space_examples(z2_n2):
    assert len(fixed_space([CycMatrix.identity(3, 8)])) == 3
    assert fixed_space([CycMatrix([[1, 0], [0, -1]], 8), hadamard()]) == []
    rho = rep(z2_n2, (0, F(1, 2)))
    basis = fixed_space([g for _, g in rho.cw_generators()])
    assert basis == [(1, 0, 0, 1)]


def test_fixed_space_equals_fixed_space_of_closure():
    d2 = CycMatrix([[1, 0], [0, Cyclotomic.zeta(8, 2)]], 8)
    gens = [d2 @ d2, hadamard()]
    G = group_closure_matrices(gens)
    assert fixed_space(gens) == fixed_space(G.elements)
    S = Setup(2, 2)
    rho = rep(S, (0, F(1, 2)))
    gens = [g for _, g in rho.cw_generators()]
    assert fixed_space(gens) == fixed_space(group_closure_matrices(gens).elements)


REPS = [(Setup(2, 2), [(0, F(1, 2))]), (Setup(3, 2), [(0, F(1, 3), F(1, 3))]), (Setup(4, 1), [(0, F(1, 4), 0, F(1, 4))]),
        (Setup(5, 1), []), (Setup(3, 2, [(2, 1)]), []), (Setup(6, 1), []), (Setup(2, 1), [(0, F(1, 4))])]


@pytest.mark.parametrize("S,phis", REPS)
def test_parabolic_relations(S, phis):
    rho = rep(S, *phis)
    R = S.R
    units = list_units(R)
    for r in units:
        for r2 in units:
            assert gen_m_r(rho, r) @ gen_m_r(rho, r2) == gen_m_r(rho, r * r2 % R.modulus)
        for phi in rho.rep.phi_generators:
            lhs = gen_d_phi(rho, phi) @ gen_m_r(rho, r)
            assert lhs == gen_m_r(rho, r) @ gen_d_phi(rho, qmap_action(phi, r))


@pytest.mark.parametrize("S,phis", REPS)
def test_generators_invertible_and_h_squared_monomial(S, phis):
    rho = rep(S, *phis)
    for name, g in rho.cw_generators():
        assert is_invertible(g), name
    for s in rho.idempotents:
        h = gen_h(rho, s)
        assert (h @ h).is_monomial()


def test_parainv_examples(s1, z2_n2):
    r = verify_parainv(rep(s1, (0, F(1, 2))))
    assert r.status == OK and (r.payload["dim_fwe_span"], r.payload["dim_fixed"]) == (1, 1)
    assert r.payload["fixed_basis"] == [[["1/1", "0/1", "0/1", "0/1"], ["0/1", "0/1", "0/1", "0/1"]]]
    r = verify_parainv(rep(z2_n2, (0, F(1, 2))))
    assert r.status == OK and r.payload["isotropic_codes"] == 2 and r.payload["dim_fixed"] == 2


@pytest.mark.parametrize("S,phis", REPS)
def test_parainv_holds(S, phis):
    assert verify_parainv(rep(S, *phis)).status == OK


def test_cwinv_examples(s1, z2_n2):
    rho = rep(z2_n2, (0, F(1, 2)))
    r = verify_cwinv(rho, z2_n2.code((1, 1)))
    assert r.status == OK and r.payload["failing_generators"] == []
    assert {"m_1", "d_phi0", "h_1_1_1"} <= set(r.payload["generators"])
    with pytest.raises(NotSelfDualIsotropic):
        verify_cwinv(rep(s1), s1.code((1, 1, 1)))


def test_cwinv_on_every_self_dual_isotropic_code():
    for S, phis in REPS:
        rho = rep(S, *phis)
        for D in rho.isotropic_codes(256):
            if len(D) ** 2 != len(S.A):
                continue
            C = S.code(*[S.A.elements[i] for i in D])
            if set(theta_code(C)) == {S.A.elements[i] for i in D}:
                try:
                    assert verify_cwinv(rho, C).status == OK
                except NotSelfDualIsotropic:
                    pass


def test_conjecture_examples(s1, z2_n2):
    r = conjecture_explore(rep(z2_n2, (0, F(1, 2))))
    assert r.status == OK and r.payload["verdict"] == "equal"
    assert (r.payload["dim_fwe_span"], r.payload["dim_fixed"]) == (1, 1)
    r = conjecture_explore(rep(Setup(2, 1), (0, F(1, 2))))
    assert (r.payload["dim_fwe_span"], r.payload["dim_fixed"], r.payload["verdict"]) == (0, 0, "equal")
    r = conjecture_explore(rep(s1))
    assert r.payload["verdict"] in ("equal", "strict")
    with pytest.raises(CapExceeded):
        conjecture_explore(rep(Setup(3, 3)), dense_cap=10)


def test_strict_inclusion_is_a_finding(monkeypatch):
    # a CW group with its h generators removed fixes more than the codes span
    S = Setup(2, 2)
    rho = rep(S, (0, F(1, 2)))
    monkeypatch.setattr(rho, "cw_generators", rho.parabolic_generators)
    r = conjecture_explore(rho)
    assert r.status == FINDING and r.payload["verdict"] == "strict"
