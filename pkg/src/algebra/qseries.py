"""truncated formal power series in t

Coefficients are stored plainly (c_n is the coefficient of t^n). The exponential
view a_n = c_n [n]_q! is produced by `to_exponential` / `from_exponential`.
Coefficients are Fractions or Polys in x; every series carries its truncation
order N and arithmetic is exact modulo t^(N+1).
"""
from fractions import Fraction

from src.algebra.polyring import Poly
from src.algebra.scalar_qcore import q_factorial, q_number, q_binomial, big_qexp_coeff, small_qexp_coeff
from src.etc.exceptions import OrderMismatchError, NonUnitConstantTermError


def _invert_unit(c):
    """ the inverse of a constant term, or raise if it is not a unit """
    if isinstance(c, Poly):
        if c.degree != 0:
            raise NonUnitConstantTermError(f"constant term {c!r} is not an invertible constant")
        return Poly.constant(1 / c.coeffs[0])
    if c == 0:
        raise NonUnitConstantTermError("constant term is 0")
    return 1 / Fraction(c)


class TruncSeries:
    """ c_0 + c_1 t + ... + c_N t^N  (mod t^(N+1)) """
    __slots__ = ('coeffs', 'order', 'zero')

    def __init__(self, coeffs, order, zero=Fraction(0)):
        coeffs = list(coeffs)[:order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        object.__setattr__(self, 'coeffs', tuple(c if isinstance(c, Poly) else Fraction(c) for c in coeffs))
        object.__setattr__(self, 'order', order)
        object.__setattr__(self, 'zero', zero)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def one(cls, order, zero=Fraction(0)):
        return cls([zero + 1], order, zero)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            return False
        if other.order != self.order:
            raise OrderMismatchError(f"series orders differ: {self.order} != {other.order}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return TruncSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order, self.zero)

    def __neg__(self):
        return TruncSeries((-c for c in self.coeffs), self.order, self.zero)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return TruncSeries((c * other for c in self.coeffs), self.order, self.zero)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r}, order={self.order})"


def series_mul(s, r):
    """plain Cauchy product truncated at the common order

    :raises OrderMismatchError: when the orders differ

    """
    if s.order != r.order:
        raise OrderMismatchError(f"series orders differ: {s.order} != {r.order}")
    n = s.order
    out = []
    for k in range(n + 1):
        total = s.zero
        for i in range(k + 1):
            total = total + s.coeffs[i] * r.coeffs[k - i]
        out.append(total)
    return TruncSeries(out, n, s.zero)


def series_reciprocal(s):
    """1/S mod t^(N+1)

    :raises NonUnitConstantTermError: when c_0 is 0 or not invertible

    """
    inv0 = _invert_unit(s.coeffs[0])
    out = [inv0]
    for n in range(1, s.order + 1):
        total = s.zero
        for k in range(1, n + 1):
            total = total + s.coeffs[k] * out[n - k]
        out.append(-(inv0 * total))
    return TruncSeries(out, s.order, s.zero)


def series_int_pow(s, m):
    """S^m for any integer m; m < 0 needs an invertible constant term

    :raises NonUnitConstantTermError: when m < 0 and S is not invertible

    """
    if m < 0:
        s, m = series_reciprocal(s), -m
    result = TruncSeries.one(s.order, s.zero)
    base = s
    # binary powering
    while m:
        if m & 1:
            result = series_mul(result, base)
        m >>= 1
        if m:
            base = series_mul(base, base)
    return result


def t_q_derivative(ctx, s):
    """D_{q,t}: c_n t^n -> [n]_q c_n t^(n-1)

    The result is only known modulo t^N, so its order is N-1 (0 for constant input).
    """
    order = max(s.order - 1, 0)
    return TruncSeries((q_number(ctx, n) * s.coeffs[n] for n in range(1, s.order + 1)), order, s.zero)


def t_times_q_derivative(ctx, s):
    """ t D_{q,t}: c_n -> [n]_q c_n, order preserved """
    return TruncSeries((q_number(ctx, n) * c for n, c in enumerate(s.coeffs)), s.order, s.zero)


def to_exponential(ctx, s):
    """ a_n = c_n [n]_q! for every n """
    return [c * q_factorial(ctx, n) for n, c in enumerate(s.coeffs)]


def from_exponential(ctx, a, zero=Fraction(0)):
    """ the series sum a_n t^n / [n]_q!, of order len(a) - 1 """
    return TruncSeries((c * (1 / q_factorial(ctx, n)) for n, c in enumerate(a)), len(a) - 1, zero)


def exponential_product(ctx, a, b):
    """the q-binomial convolution sum_k [n k]_q a_k b_(n-k)

    Multiplies two series given by exponential coefficients without leaving the
    exponential view.
    """
    if len(a) != len(b):
        raise OrderMismatchError(f"coefficient lengths differ: {len(a)} != {len(b)}")
    return [sum((q_binomial(ctx, n, k) * a[k] * b[n - k] for k in range(n + 1)), Fraction(0))
            for n in range(len(a))]


def big_qexp_series(ctx, order, scale=Fraction(1)):
    """ E_q(scale * t) mod t^(order+1) """
    return TruncSeries((big_qexp_coeff(ctx, k) * Fraction(scale) ** k for k in range(order + 1)), order)


def small_qexp_series(ctx, order, scale=Fraction(1)):
    """ e_q(scale * t) mod t^(order+1) """
    return TruncSeries((small_qexp_coeff(ctx, k) * Fraction(scale) ** k for k in range(order + 1)), order)


def big_qexp_xt(ctx, order):
    """ E_q(xt) as a series in t with Poly coefficients q^binom(n,2) x^n / [n]_q! """
    return TruncSeries((Poly.monomial(k, big_qexp_coeff(ctx, k)) for k in range(order + 1)), order, Poly())


def lift_to_poly(s):
    """ the same series with every scalar coefficient viewed as a constant Poly """
    return TruncSeries((Poly.constant(c) for c in s.coeffs), s.order, Poly())


def alpha_coefficients(ctx, a_series):
    """exponential coefficients of t D_{q,t}A(t) / A(t)

    :ctx: the QContext
    :a_series: the determining function A(t) as a TruncSeries
    :returns: [alpha_0, ..., alpha_N]; alpha_0 is always 0
    :raises NonUnitConstantTermError: when A(0) is not invertible

    """
    quotient = series_mul(t_times_q_derivative(ctx, a_series), series_reciprocal(a_series))
    return to_exponential(ctx, quotient)
