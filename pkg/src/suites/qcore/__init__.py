from fractions import Fraction

from .. import SuiteBase, check, first_false
from src.algebra.polyring import Poly, dilate, q_derivative, q_derivative_power, q_difference_quotient
from src.algebra.qseries import TruncSeries, big_qexp_series, series_mul, small_qexp_series
from src.algebra.scalar_qcore import binom2, q_binomial, q_factorial, q_number, q_pochhammer

# e_q(x) E_q(-x) = 1 is checked at least up to t^20
EXP_IDENTITY_ORDER = 20


class Suite(SuiteBase):
    description = "q-numbers, q-binomials, q-exponentials and the D_q / D_(1/q) commutation"

    def checks(self, ctx, n):
        q = ctx.q
        degrees = range(1, n + 1)

        yield check("[n+1]_q = 1 + q [n]_q",
                    first_false(lambda m: q_number(ctx, m + 1) == 1 + q * q_number(ctx, m), degrees))

        def pascal(m):
            return all(
                q_binomial(ctx, m, k) == q_binomial(ctx, m - 1, k - 1) + q ** k * q_binomial(ctx, m - 1, k)
                and q_binomial(ctx, m, k) == q ** (m - k) * q_binomial(ctx, m - 1, k - 1) + q_binomial(ctx, m - 1, k)
                for k in range(1, m))
        yield check("q-Pascal rules", first_false(pascal, degrees))

        yield check("[n k]_q = [n n-k]_q", first_false(
            lambda m: all(q_binomial(ctx, m, k) == q_binomial(ctx, m, m - k) for k in range(m + 1)), degrees))

        yield check("(q;q)_n = (1-q)^n [n]_q!", first_false(
            lambda m: q_pochhammer(ctx, q, m) == (1 - q) ** m * q_factorial(ctx, m), degrees))

        order = max(n, EXP_IDENTITY_ORDER)
        product = series_mul(small_qexp_series(ctx, order), big_qexp_series(ctx, order, Fraction(-1)))
        yield check(f"e_q(t) E_q(-t) = 1 mod t^{order + 1}",
                    None if product == TruncSeries.one(order) else order)

        def commutation(k):
            return all(
                dilate(q_derivative_power(ctx, Poly.monomial(m), k), q ** -k)
                == q_derivative_power(ctx, Poly.monomial(m), k, inverse=True) * q ** binom2(k)
                for m in range(n + 1))
        yield check("D_q^n x^m (x/q^n) = q^binom(n,2) D_(1/q)^n x^m",
                    first_false(commutation, range(n + 1)))

        yield check("difference quotient agrees with the monomial rule", first_false(
            lambda m: q_difference_quotient(ctx, Poly.monomial(m)) == q_derivative(ctx, Poly.monomial(m)),
            range(n + 1)))
