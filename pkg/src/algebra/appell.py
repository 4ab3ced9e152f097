"""q-Appell sequences of type II

A sequence is held by its determining coefficients a_0..a_N in exponential
normalization, A(t) = sum a_n t^n / [n]_q!. Polynomials are derived on demand:

    f_n(x) = sum_k [n k]_q q^binom(n-k,2) a_k x^(n-k)

and every f_n satisfies D_q f_n(x) = [n]_q f_(n-1)(qx).
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import NamedTuple, Optional, Tuple

from src.algebra.polyring import Poly, dilate, q_derivative, q_derivative_power
from src.algebra.qseries import (
    alpha_coefficients, big_qexp_xt, exponential_product,
    from_exponential, lift_to_poly, series_mul, series_reciprocal, to_exponential)
from src.algebra.scalar_qcore import QContext, binom2, q_binomial, q_factorial, q_number
from src.etc.exceptions import (
    AppellPropertyError, DegenerateSumError, InsufficientCoefficientsError,
    OrderMismatchError, ZeroLeadingCoefficientError)


@dataclass(frozen=True)
class AlphaStream:
    """ exponential coefficients of t D_{q,t}A(t) / A(t); alpha[0] is always 0 """
    alpha: Tuple[Fraction, ...]

    def __getitem__(self, k):
        return self.alpha[k]

    def __len__(self):
        return len(self.alpha)


@dataclass(frozen=True)
class AppellSeq:
    ctx: QContext
    a: Tuple[Fraction, ...]
    name: Optional[str] = None

    def __post_init__(self):
        a = tuple(Fraction(c) for c in self.a)
        if not a or a[0] == 0:
            raise ZeroLeadingCoefficientError("a_0 must be nonzero")
        object.__setattr__(self, 'a', a)

    @property
    def order(self):
        """ the truncation order N: polynomials f_0..f_N are available """
        return len(self.a) - 1

    def series(self):
        """ the determining function A(t) mod t^(N+1) """
        return from_exponential(self.ctx, self.a)

    @cached_property
    def alpha(self):
        return alpha_stream(self)

    def __getitem__(self, n):
        return polynomial(self, n)

    def polynomials(self, n=None):
        """ [f_0, ..., f_n], n defaults to the truncation order """
        n = self.order if n is None else n
        return [polynomial(self, k) for k in range(n + 1)]


class AppellCheck(NamedTuple):
    ok: bool
    index: Optional[int] = None  # first failing degree, None when ok


def from_coeffs(ctx, a, name=None):
    """build a sequence from its determining coefficients

    :raises ZeroLeadingCoefficientError: when a_0 == 0

    """
    return AppellSeq(ctx, tuple(a), name)


def identity(ctx, order):
    """ the identity set I = {q^binom(n,2) x^n}, A(t) = 1 """
    return AppellSeq(ctx, (Fraction(1),) + (Fraction(0),) * order, 'identity')


def _check_degree(s, n):
    if n < 0 or n > s.order:
        raise InsufficientCoefficientsError(
            f"degree {n} requested but only a_0..a_{s.order} are known")


@lru_cache(maxsize=4096)
def polynomial(s, n):
    """f_n(x) = sum_k [n k]_q q^binom(n-k,2) a_k x^(n-k)

    :s: the AppellSeq
    :n: the degree
    :returns: the degree-n polynomial
    :raises InsufficientCoefficientsError: when n exceeds the truncation order

    """
    _check_degree(s, n)
    ctx = s.ctx
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = q_binomial(ctx, n, k) * ctx.q ** binom2(n - k) * s.a[k]
    return Poly(coeffs)


def operator_form_polynomial(s, n):
    """ (sum_k a_k q^binom(n-k,2) / [k]_q! D_q^k) x^n; terms with k > n vanish """
    _check_degree(s, n)
    ctx = s.ctx
    result = Poly()
    derived = Poly.monomial(n)
    for k in range(n + 1):
        result = result + derived * (s.a[k] * ctx.q ** binom2(n - k) / q_factorial(ctx, k))
        derived = q_derivative(ctx, derived)
    return result


def genfun_polynomials(s, order=None):
    """extract f_0..f_N from A(t) E_q(xt) = sum f_n(x) t^n / [n]_q!

    :s: the AppellSeq
    :order: N, defaults to the truncation order of s
    :returns: a list of Poly

    """
    order = s.order if order is None else order
    _check_degree(s, order)
    a_series = from_exponential(s.ctx, s.a[:order + 1])
    product = series_mul(lift_to_poly(a_series), big_qexp_xt(s.ctx, order))
    return [c * q_factorial(s.ctx, n) for n, c in enumerate(product.coeffs)]


def is_type2_appell(polys, ctx):
    """check D_q f_n = [n]_q f_(n-1)(qx) for every n >= 1

    :polys: the sequence f_0, f_1, ...
    :ctx: the QContext
    :returns: AppellCheck(ok, first failing index)

    """
    for n, p in enumerate(polys):
        if p.degree != n:
            return AppellCheck(False, n)
        if n == 0:
            continue
        if q_derivative(ctx, p) != dilate(polys[n - 1], ctx.q) * q_number(ctx, n):
            return AppellCheck(False, n)
    return AppellCheck(True)


def from_polynomials(ctx, polys, name=None):
    """recover the determining coefficients of a q-Appell set of type II

    The k = n term of f_n is the constant term, so a_n = f_n(0).

    :raises AppellPropertyError: when the polynomials are not a q-Appell set of type II

    """
    polys = list(polys)
    check = is_type2_appell(polys, ctx)
    if not check.ok:
        raise AppellPropertyError(f"not a q-Appell set of type II at degree {check.index}")
    return AppellSeq(ctx, tuple(p.coeff(0) for p in polys), name)


def _same_shape(f, g):
    if f.ctx != g.ctx:
        raise ValueError(f"sequences use different q: {f.ctx.q} != {g.ctx.q}")
    if f.order != g.order:
        raise OrderMismatchError(f"truncation orders differ: {f.order} != {g.order}")


def seq_add(f, g):
    """f + g, determining function A(t) + B(t)

    :raises DegenerateSumError: when a_0(f) + a_0(g) == 0

    """
    _same_shape(f, g)
    if f.a[0] + g.a[0] == 0:
        raise DegenerateSumError("A(0) + B(0) == 0, the sum is not a polynomial set")
    return AppellSeq(f.ctx, tuple(x + y for x, y in zip(f.a, g.a)))


def seq_scale(f, c):
    """ c f, determining function c A(t) """
    c = Fraction(c)
    if c == 0:
        raise ZeroLeadingCoefficientError("scaling by 0 gives a_0 = 0")
    return AppellSeq(f.ctx, tuple(c * x for x in f.a))


def seq_star(f, g):
    """ f * g, determining function A(t) B(t) as a q-binomial convolution """
    _same_shape(f, g)
    return AppellSeq(f.ctx, tuple(exponential_product(f.ctx, f.a, g.a)))


def star_componentwise(ctx, f_polys, g_polys, n):
    """(f*g)_n = sum_k alpha(n,k) q^-binom(k,2) g_k(x), alpha(n,k) the x^k coefficient of f_n

    Works on any two polynomial sets given as lists.
    """
    f_n = f_polys[n]
    result = Poly()
    for k in range(n + 1):
        result = result + g_polys[k] * (f_n.coeff(k) * ctx.q ** (-binom2(k)))
    return result


def seq_inverse(f):
    """the inverse under *, determining function 1/A(t)

    :raises ZeroLeadingCoefficientError: when a_0 == 0

    """
    if f.a[0] == 0:
        raise ZeroLeadingCoefficientError("a_0 must be nonzero")
    return AppellSeq(f.ctx, tuple(to_exponential(f.ctx, series_reciprocal(f.series()))))


def seq_int_pow(f, m):
    """f^m: f^0 = I, f^n = f * f^(n-1), f^-n = f^-1 * f^(-n+1)"""
    base = seq_inverse(f) if m < 0 else f
    result = identity(f.ctx, f.order)
    for _ in range(abs(m)):
        result = seq_star(base, result)
    return result


def power_representation(f, n):
    """coefficients c_0..c_n with x^n = sum_k c_k f_(n-k)(x)

    c_k = q^-binom(n,2) [n k]_q b_k, where b are the exponential coefficients of 1/A(t).
    """
    _check_degree(f, n)
    ctx = f.ctx
    b = seq_inverse(f).a
    scale = ctx.q ** (-binom2(n))
    return [scale * q_binomial(ctx, n, k) * b[k] for k in range(n + 1)]


def power_reconstruction(f, n):
    """ sum_k c_k f_(n-k)(x); equals x^n exactly """
    c = power_representation(f, n)
    result = Poly()
    for k in range(n + 1):
        result = result + polynomial(f, n - k) * c[k]
    return result


def alpha_stream(f):
    return AlphaStream(tuple(alpha_coefficients(f.ctx, f.series())))


def recursion_residual(f, n):
    """f_n(x/q) - (1/[n]_q) sum_k [n k]_q alpha_k f_(n-k)(x) - q^-1 x f_(n-1)(x)

    Zero exactly when the recursion formula holds at degree n >= 1.
    """
    ctx = f.ctx
    alpha = f.alpha
    lhs = dilate(polynomial(f, n), 1 / ctx.q)
    total = Poly()
    for k in range(n + 1):
        if alpha[k]:
            total = total + polynomial(f, n - k) * (q_binomial(ctx, n, k) * alpha[k])
    rhs = total * (1 / q_number(ctx, n)) + Poly.x() * polynomial(f, n - 1) * (1 / ctx.q)
    return lhs - rhs


def recursion_check(f, n):
    return recursion_residual(f, n).is_zero()


def q_difference_residual(f, n, binomial_weight=False):
    """sum_k alpha_k/[k]_q! D_{1/q}^k f_n + (x/q) D_{1/q} f_n - [n]_q f_n(x/q)

    Zero exactly when the q-difference equation holds at degree n. Since
    D_{1/q}^k f_n = ([n]_q!/[n-k]_q!) f_(n-k), this is -[n]_q times the
    recursion residual. binomial_weight multiplies the k-th term by
    q^binom(k,2), the weighting that fails from n = 2 for any alpha_2 != 0.
    """
    ctx = f.ctx
    alpha = f.alpha
    f_n = polynomial(f, n)
    total = Poly()
    derived = f_n
    for k in range(n + 1):
        if alpha[k]:
            weight = alpha[k] / q_factorial(ctx, k)
            if binomial_weight:
                weight = weight * ctx.q ** binom2(k)
            total = total + derived * weight
        derived = q_derivative_power(ctx, derived, 1, inverse=True)
    first = q_derivative_power(ctx, f_n, 1, inverse=True)
    total = total + Poly.x() * first * (1 / ctx.q)
    return total - dilate(f_n, 1 / ctx.q) * q_number(ctx, n)


def q_difference_check(f, n, binomial_weight=False):
    return q_difference_residual(f, n, binomial_weight).is_zero()
