import numpy
from fractions import Fraction
from scipy.special import bernoulli as classical_bernoulli

from .. import CheckResult, SuiteBase, check
from src.algebra.scalar_qcore import QContext
from src.etc.consts import CLASSICAL_Q
from src.families.bernoulli import bernoulli_numbers
from src.families.euler import euler_numbers

# (degree, absolute tolerance) against the classical Bernoulli numbers at q close to 1
BERNOULLI_TOLERANCES = ((1, 5e-4), (2, 1e-2), (3, 1e-2))


class Suite(SuiteBase):
    description = "q -> 1 behaviour of the q-Bernoulli numbers and E_1 = -1/2"

    def checks(self, ctx, n):
        near_one = QContext(Fraction(CLASSICAL_Q))
        top = max(degree for degree, _ in BERNOULLI_TOLERANCES)
        values = numpy.array([float(b) for b in bernoulli_numbers(near_one, 1, top)])
        reference = classical_bernoulli(top)
        for degree, tolerance in BERNOULLI_TOLERANCES:
            close = bool(numpy.isclose(values[degree], reference[degree], rtol=0, atol=tolerance))
            yield CheckResult(f"B_{degree} at q={CLASSICAL_Q} within {tolerance} of the classical value",
                              close, f"{values[degree]:.6f} vs {reference[degree]:.6f}")

        if n >= 1:
            yield check(f"E_1 = -1/2 at q={ctx.q}",
                        None if euler_numbers(ctx, 1, 1)[1] == Fraction(-1, 2) else 1)
