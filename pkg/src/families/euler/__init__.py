"""q-Euler numbers and polynomials of type II

(2 / (E_q(t) + 1))^m = sum E^(m)_n t^n / [n]_q!
"""
from fractions import Fraction

from src.algebra.appell import from_coeffs, polynomial
from src.algebra.qseries import TruncSeries, series_int_pow, to_exponential
from src.algebra.scalar_qcore import big_qexp_coeff, binom2, q_binomial

PARAMETERS = ('order',)
DESCRIPTION = "one-parameter q-Euler polynomials, A(t) = (2/(E_q(t)+1))^order"


def base_series(ctx, n):
    """ (E_q(t) + 1) / 2 mod t^(n+1) """
    return TruncSeries([Fraction(1)] + [big_qexp_coeff(ctx, k) / 2 for k in range(1, n + 1)], n)


def euler_numbers(ctx, m, n):
    return to_exponential(ctx, series_int_pow(base_series(ctx, n), -m))


def euler_polys(ctx, m, n):
    return from_coeffs(ctx, euler_numbers(ctx, m, n), name=f"euler^({m})")


def inverse_coefficients(ctx, n):
    """ b_0 = 1, b_k = q^binom(k,2) / 2 """
    return [Fraction(1)] + [ctx.q ** binom2(k) / 2 for k in range(1, n + 1)]


def power_theorem_polynomial(ctx, n, seq=None):
    """(E_n(x) + sum_k [n k]_q q^binom(k,2) E_(n-k)(x)) / (2 q^binom(n,2))

    The specialized power representation; equals x^n.
    """
    seq = euler_polys(ctx, 1, n) if seq is None else seq
    total = polynomial(seq, n)
    for k in range(n + 1):
        total = total + polynomial(seq, n - k) * (q_binomial(ctx, n, k) * ctx.q ** binom2(k))
    return total * (1 / (2 * ctx.q ** binom2(n)))


def build(ctx, n, order=1):
    return euler_polys(ctx, int(order), n)
