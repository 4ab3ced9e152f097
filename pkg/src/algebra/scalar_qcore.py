""" exact rational scalars and the q-combinatorial quantities built on them """
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from src.etc.consts import FORBIDDEN_Q, invalid_q_message
from src.etc.exceptions import InvalidQError

# the coefficient field: Fraction is always in lowest terms with positive denominator
Scalar = Fraction


def binom2(n):
    """ binom(n, 2) = n(n-1)/2, defined for every integer n """
    return n * (n - 1) // 2


@dataclass(frozen=True)
class QContext:
    """the deformation parameter q

    q is an exact rational outside {0, 1, -1}, so q^n != 1 for every n >= 1 and
    every [n]_q! is invertible.
    """
    q: Fraction

    def __post_init__(self):
        q = Fraction(self.q)
        if q in FORBIDDEN_Q:
            raise InvalidQError(invalid_q_message)
        object.__setattr__(self, 'q', q)

    def power(self, k):
        """ q^k for any integer k """
        return self.q ** k

    def inverse(self):
        """ the context with q replaced by 1/q """
        return QContext(1 / self.q)

    def __str__(self):
        return f"q={self.q}"


def q_number(ctx, n):
    """[n]_q = 1 + q + ... + q^(n-1)

    :ctx: the QContext
    :n: a non-negative integer
    :returns: the exact q-number, 0 when n == 0

    """
    return sum((ctx.q ** i for i in range(n)), Fraction(0))


@lru_cache(maxsize=None)
def q_factorial(ctx, n):
    """ [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1 """
    result = Fraction(1)
    for k in range(1, n + 1):
        result *= q_number(ctx, k)
    return result


def q_binomial(ctx, n, k):
    """the q-binomial coefficient [n k]_q

    :ctx: the QContext
    :n: a non-negative integer
    :k: any integer; out-of-range values give 0
    :returns: [n]_q! / ([k]_q! [n-k]_q!)

    """
    if k < 0 or k > n:
        return Fraction(0)
    return q_factorial(ctx, n) / (q_factorial(ctx, k) * q_factorial(ctx, n - k))


def q_pochhammer(ctx, a, n):
    """ (a;q)_n = (1-a)(1-aq)...(1-aq^(n-1)), with (a;q)_0 = 1 """
    a = Fraction(a)
    result = Fraction(1)
    for k in range(n):
        result *= 1 - a * ctx.q ** k
    return result


def big_qexp_coeff(ctx, k):
    """ coefficient of x^k in E_q(x): q^binom(k,2) / [k]_q! """
    return ctx.q ** binom2(k) / q_factorial(ctx, k)


def small_qexp_coeff(ctx, k):
    """ coefficient of x^k in e_q(x): 1 / [k]_q! """
    return 1 / q_factorial(ctx, k)
