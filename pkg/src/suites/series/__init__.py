from fractions import Fraction

from .. import SuiteBase, check, first_false, random_sequence
from src.algebra.polyring import Poly, dilate, q_derivative
from src.algebra.qseries import (
    TruncSeries, big_qexp_series, exponential_product, series_int_pow, series_mul,
    series_reciprocal, small_qexp_series, t_q_derivative, to_exponential)


class Suite(SuiteBase):
    description = "truncated series arithmetic and the q-Leibniz rule"

    def checks(self, ctx, n):
        s = random_sequence(ctx, n, seed=1).series()
        r = random_sequence(ctx, n, seed=2).series()
        one = TruncSeries.one(n)

        yield check("S * (1/S) = 1", None if series_mul(s, series_reciprocal(s)) == one else n)
        yield check("S^3 = S S S", None if series_int_pow(s, 3) == s * s * s else n)
        yield check("S^-2 = (1/S)^2",
                    None if series_int_pow(s, -2) == series_int_pow(series_reciprocal(s), 2) else n)
        yield check("convolution of exponential coefficients is the series product",
                    None if exponential_product(ctx, to_exponential(ctx, s), to_exponential(ctx, r))
                    == to_exponential(ctx, series_mul(s, r)) else n)

        # a derivative of an order-0 series carries no information
        if n >= 1:
            big = big_qexp_series(ctx, n)
            small = small_qexp_series(ctx, n)
            yield check("D_q E_q(t) = E_q(qt)",
                        None if t_q_derivative(ctx, big) == big_qexp_series(ctx, n - 1, ctx.q) else n)
            yield check("D_q e_q(t) = e_q(t)",
                        None if t_q_derivative(ctx, small) == small_qexp_series(ctx, n - 1) else n)

        f = Poly(s.coeffs)
        g = Poly(r.coeffs)

        def leibniz(k):
            u, v = Poly(f.coeffs[:k + 1]), Poly(g.coeffs[:k + 1])
            return q_derivative(ctx, u * v) == dilate(u, ctx.q) * q_derivative(ctx, v) + v * q_derivative(ctx, u)
        yield check("D_q(fg) = f(qx) D_q g + g D_q f", first_false(leibniz, range(n + 1)))

        yield check("p(x) evaluates as a Horner sum", first_false(
            lambda k: f(Fraction(k, 3)) == sum(c * Fraction(k, 3) ** i for i, c in enumerate(f.coeffs)),
            range(-2, 3)))
