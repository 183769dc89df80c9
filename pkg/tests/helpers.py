import functools
from fractions import Fraction

from gcodes.codes import DualSpec, code_closure
from gcodes.forms import BilinearForm, QuadraticMap
from gcodes.perm import PermGroup, ThetaImage, group_closure
from gcodes.ring import RingSpec


class Setup:
    """A ring, group, ambient and the standard form xy/m."""

    def __init__(self, m: int, n: int, gens=()):
        self.R = RingSpec(m)
        self.G = group_closure(n, gens) if gens else PermGroup.trivial(n)
        self.A = ThetaImage(self.G, self.R)
        self.beta = BilinearForm.standard(self.R)
        self.M = DualSpec((self.beta,))

    def code(self, *gens):
        return code_closure(self.R, self.G, gens)

    def phi(self, *table):
        return QuadraticMap(self.R, [Fraction(x) for x in table])


CRITERIA_LINES: list[str] = []


def criterion(number: int, label: str):
    """Print and record one PASS/FAIL line for the wrapped acceptance test."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                line = f"criterion {number} FAIL: {label}"
                print(line)
                CRITERIA_LINES.append(line)
                raise
            line = f"criterion {number} PASS: {label}"
            print(line)
            CRITERIA_LINES.append(line)

        return run

    return wrap
