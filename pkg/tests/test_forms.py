from fractions import Fraction as F
from math import gcd

import pytest

from gcodes.errors import CocycleViolation, DegenerateForm, TwistViolation
from gcodes.exactnum import QmodZ
from gcodes.forms import (
    BilinearForm, FormRingRep, QuadraticMap, bilinear_eval_G, bilinear_eval_n, nondegenerate_check,
    polarization_is_bilinear, qmap_action, quadratic_check, quadratic_eval_G, quadratic_eval_n,
    twist_checks,
)
from gcodes.ring import RingSpec


def test_bilinear_evaluation_examples(s1):
    R2 = RingSpec(2)
    beta = BilinearForm.standard(R2)
    assert bilinear_eval_n(beta, (1, 1), (1, 1)) == QmodZ(0)
    assert bilinear_eval_G(s1.beta, s1.A, (1, 1, 1), (1, 1, 1)) == QmodZ(F(1, 2))
    assert bilinear_eval_n(beta, (0, 0), (1, 0)) == QmodZ(0)


def test_form_must_be_well_defined():
    with pytest.raises(ValueError):
        BilinearForm(RingSpec(3), [[F(1, 2)]])


def test_nondegenerate_examples():
    assert nondegenerate_check(BilinearForm.standard(RingSpec(2))) is None
    assert nondegenerate_check(BilinearForm.standard(RingSpec(3))) is None
    bad = nondegenerate_check(BilinearForm(RingSpec(6), [[F(1, 2)]]))
    assert bad is not None and bad.witness == 2
    with pytest.raises(DegenerateForm) as exc:
        FormRingRep(BilinearForm(RingSpec(6), [[F(1, 2)]]))
    assert exc.value.witness == 2


@pytest.mark.parametrize("m", range(2, 16))
def test_standard_form_nondegenerate_and_multiples(m):
    R = RingSpec(m)
    for c in range(1, m):
        beta = BilinearForm(R, [[F(c, m)]])
        # c/m xy is degenerate exactly when gcd(c, m) > 1; the witness is m / gcd
        bad = nondegenerate_check(beta)
        if gcd(c, m) == 1:
            assert bad is None
        else:
            assert bad.witness == m // gcd(c, m)


def test_quadratic_examples():
    R2, R3 = RingSpec(2), RingSpec(3)
    quadratic_check(QuadraticMap(R2, [0, F(1, 2)]))
    quadratic_check(QuadraticMap(R2, [0, F(1, 4)]))
    with pytest.raises(CocycleViolation):
        quadratic_check(QuadraticMap(R3, [0, F(1, 2), 0]))


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 8])
def test_scaled_squares_are_quadratic(m):
    R = RingSpec(m)
    for c in range(1, 2 * m):
        table = [F(c * x * x, 2 * m) for x in range(m)]
        phi = QuadraticMap(R, table)
        well_defined = all(F(c * (x + m) ** 2, 2 * m) % 1 == F(c * x * x, 2 * m) % 1 for x in range(m))
        if well_defined:
            quadratic_check(phi)
            assert polarization_is_bilinear(phi)


def test_quadratic_eval_examples(s1, z2_n2):
    phi = s1.phi(0, F(1, 2))
    assert quadratic_eval_G(phi, s1.A, (1, 1, 1)) == QmodZ(F(1, 2))
    assert quadratic_eval_n(z2_n2.phi(0, F(1, 2)), (1, 1)) == QmodZ(0)
    assert quadratic_eval_G(phi, s1.A, (0, 0, 0)) == QmodZ(0)


def test_qmap_action_examples():
    R2, R3 = RingSpec(2), RingSpec(3)
    assert qmap_action(QuadraticMap(R2, [0, F(1, 2)]), 0).is_zero()
    phi = QuadraticMap(R3, [0, F(1, 3), F(1, 3)])
    assert qmap_action(phi, 2).table == phi.table


def test_twist_examples():
    for m in (2, 3, 4, 6):
        beta = BilinearForm.standard(RingSpec(m))
        for r in range(m):
            for s in range(m):
                twist_checks(beta, r, s)
    R = RingSpec(2, 2)
    beta = BilinearForm(R, [[0, F(1, 2)], [0, 0]])
    assert not beta.is_symmetric()
    twist_checks(beta, 1, 1)
    twist_checks(beta, 0, 1)


def test_twist_negative_control():
    beta = BilinearForm.standard(RingSpec(3))

    def broken(f, r, s):
        # ignores s and doubles r: not an action of R (x) R
        return lambda x, y: f(2 * r * x % 3, y)

    with pytest.raises(TwistViolation):
        twist_checks(beta, 1, 2, action=broken)


def test_form_ring_includes_diagonal():
    R2 = RingSpec(2)
    beta = BilinearForm.standard(R2)
    rep = FormRingRep(beta)
    assert [q.table for q in rep.phi_generators] == [(QmodZ(0), QmodZ(F(1, 2)))]
    assert not rep.diagonal_listed
    rep2 = FormRingRep(beta, [QuadraticMap(R2, [0, F(1, 4)])])
    assert rep2.diagonal_listed
    assert rep2.is_qmodule_closed()
    assert len(rep2.qmodule) == 4


def test_form_ring_rejects_bad_maps():
    R3 = RingSpec(3)
    beta = BilinearForm.standard(R3)
    with pytest.raises(CocycleViolation):
        FormRingRep(beta, [QuadraticMap(R3, [0, F(1, 2), 0])])
    with pytest.raises(ValueError):
        FormRingRep(beta, [QuadraticMap(R3, [F(1, 3), F(1, 3), F(1, 3)])])
