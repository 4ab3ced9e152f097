""" dense univariate polynomials in x over exact rationals """
from fractions import Fraction
from itertools import zip_longest

from src.algebra.scalar_qcore import q_number


def _trim(coeffs):
    coeffs = [Fraction(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """an immutable polynomial, coefficient i belongs to x^i

    The zero polynomial has no coefficients and degree -1.
    """
    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        object.__setattr__(self, 'coeffs', _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, n, c=1):
        """ c * x^n """
        return cls([0] * n + [c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, i):
        """ the coefficient of x^i, 0 outside the stored range """
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Poly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x0):
        return evaluate(self, x0)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return f"Poly({' + '.join(terms)})"


def add(p, r):
    return p + r


def sub(p, r):
    return p - r


def mul(p, r):
    return p * r


def scalar_mul(p, c):
    return p * Fraction(c)


def dilate(p, c):
    """p(c x): coefficient i multiplied by c^i

    :p: the polynomial
    :c: the scale factor
    :returns: the dilated polynomial

    """
    c = Fraction(c)
    return Poly(a * c ** i for i, a in enumerate(p.coeffs))


def evaluate(p, x0):
    """ Horner evaluation at x0, exact """
    result = Fraction(0)
    for c in reversed(p.coeffs):
        result = result * x0 + c
    return result


def q_derivative(ctx, p):
    """ D_q by the monomial rule D_q x^n = [n]_q x^(n-1) """
    return Poly(q_number(ctx, i) * c for i, c in enumerate(p.coeffs) if i > 0)


def q_inverse_derivative(ctx, p):
    """ D_{1/q}: D_{1/q} x^n = [n]_{1/q} x^(n-1) = q^(1-n) [n]_q x^(n-1) """
    return Poly(ctx.q ** (1 - i) * q_number(ctx, i) * c
                for i, c in enumerate(p.coeffs) if i > 0)


def q_derivative_power(ctx, p, k, inverse=False):
    """k-fold application of D_q, or of D_{1/q} when inverse is set

    :ctx: the QContext
    :p: the polynomial
    :k: number of applications, k >= 0
    :inverse: use D_{1/q} instead of D_q
    :returns: the resulting polynomial

    """
    derivative = q_inverse_derivative if inverse else q_derivative
    for _ in range(k):
        if p.is_zero():
            break
        p = derivative(ctx, p)
    return p


def q_difference_quotient(ctx, p):
    """ (p(x) - p(qx)) / ((1-q) x), computed by shifting the numerator down one degree """
    numerator = p - dilate(p, ctx.q)
    # numerator has no constant term
    return Poly(c / (1 - ctx.q) for c in numerator.coeffs[1:])
