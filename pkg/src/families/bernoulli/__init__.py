"""q-Bernoulli numbers and polynomials of type II

(t / (E_q(t) - 1))^m = sum B^(m)_n t^n / [n]_q!

with the t^n/[n]_q! normalization used throughout, for any integer order m.
"""
from src.algebra.appell import from_coeffs, polynomial
from src.algebra.polyring import Poly
from src.algebra.qseries import TruncSeries, series_int_pow, to_exponential
from src.algebra.scalar_qcore import big_qexp_coeff, binom2, q_binomial, q_number

PARAMETERS = ('order',)
DESCRIPTION = "one-parameter q-Bernoulli polynomials, A(t) = (t/(E_q(t)-1))^order"


def base_series(ctx, n):
    """ (E_q(t) - 1) / t mod t^(n+1) """
    return TruncSeries((big_qexp_coeff(ctx, k + 1) for k in range(n + 1)), n)


def bernoulli_numbers(ctx, m, n):
    """B^(m)_0 .. B^(m)_n

    :ctx: the QContext
    :m: the integer order
    :n: the truncation order
    :returns: a list of Fractions

    """
    return to_exponential(ctx, series_int_pow(base_series(ctx, n), -m))


def bernoulli_polys(ctx, m, n):
    return from_coeffs(ctx, bernoulli_numbers(ctx, m, n), name=f"bernoulli^({m})")


def inverse_coefficients(ctx, n):
    """ closed form of the coefficients of (E_q(t)-1)/t: q^binom(k+1,2) / [k+1]_q """
    return [ctx.q ** binom2(k + 1) / q_number(ctx, k + 1) for k in range(n + 1)]


def power_theorem_polynomial(ctx, n, seq=None):
    """q^-binom(n,2) sum_k q^binom(k+1,2)/[k+1]_q [n k]_q B_(n-k)(x)

    The specialized power representation; equals x^n.
    """
    seq = bernoulli_polys(ctx, 1, n) if seq is None else seq
    b = inverse_coefficients(ctx, n)
    total = Poly()
    for k in range(n + 1):
        total = total + polynomial(seq, n - k) * (b[k] * q_binomial(ctx, n, k))
    return total * ctx.q ** (-binom2(n))


def build(ctx, n, order=1):
    return bernoulli_polys(ctx, int(order), n)
