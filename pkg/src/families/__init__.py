"""concrete q-Appell families of type II

Each sub-package is a family plug-in exposing

    build(ctx, n, **params) -> AppellSeq
    PARAMETERS: the names of the keyword parameters build accepts
    DESCRIPTION: one line for the info command

and is loaded by name through src.etc.structure.load_family.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple

from src.algebra.polyring import Poly
from src.algebra.scalar_qcore import QContext, binom2, q_binomial
from src.etc.structure import load_family


@dataclass(frozen=True)
class FamilySpec:
    """ a family plug-in name with its parameters, q context and truncation order """
    kind: str
    ctx: QContext
    n: int
    params: Tuple[Tuple[str, object], ...] = field(default=())

    def build(self):
        return load_family(self.kind).build(self.ctx, self.n, **dict(self.params))

    def label(self):
        extra = ','.join(f"{key}={value}" for key, value in self.params)
        return f"{self.kind}({extra})" if extra else self.kind


def representation_sum(ctx, numbers, n):
    """sum_k [n k]_q q^binom(k,2) c_(n-k) x^k

    The representation of a family polynomial through its numbers, summed over
    the power of x rather than over the number index.
    """
    coeffs = [q_binomial(ctx, n, k) * ctx.q ** binom2(k) * Fraction(numbers[n - k]) for k in range(n + 1)]
    return Poly(coeffs)
