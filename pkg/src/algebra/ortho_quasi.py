"""orthogonal and quasi-orthogonal q-Appell sets of type II

Orthogonality is structural: a family is orthogonal here when it obeys a genuine
three-term recurrence with nonzero C_n. The quasi-orthogonal family is

    Q_n = P_n - ([n]_q / lambda) P_(n-1),

the exact inverse of P_n = ([n]_q!/lambda^n) sum_k (lambda^k/[k]_q!) Q_k. Its
determining function is (1 - t/lambda) A(t), so it stays q-Appell of type II.
"""
import math
from dataclasses import dataclass
from fractions import Fraction

from src.algebra.appell import is_type2_appell
from src.algebra.polyring import Poly
from src.algebra.scalar_qcore import QContext, q_factorial, q_number
from src.etc.exceptions import AppellPropertyError, ZeroLambdaError

FIN_STEP = 'fin-step'
REARRANGED = 'recu-rn'
# the recurrence form that passes the q-Appell oracle, see families.asc2.arbitrate_recurrence
ADOPTED_RECURRENCE = FIN_STEP


@dataclass(frozen=True)
class ThreeTermSpec:
    B0: Fraction
    C1: Fraction
    ctx: QContext

    def __post_init__(self):
        object.__setattr__(self, 'B0', Fraction(self.B0))
        object.__setattr__(self, 'C1', Fraction(self.C1))
        if self.C1 == 0:
            raise ValueError("C_1 must be nonzero for a nondegenerate recurrence")


@dataclass(frozen=True)
class QuasiSpec:
    B0: Fraction
    C1: Fraction
    lam: Fraction
    ctx: QContext

    def __post_init__(self):
        object.__setattr__(self, 'B0', Fraction(self.B0))
        object.__setattr__(self, 'C1', Fraction(self.C1))
        object.__setattr__(self, 'lam', Fraction(self.lam))
        if self.lam == 0:
            raise ZeroLambdaError("lambda must be nonzero")

    def orthogonal(self):
        return ThreeTermSpec(self.B0, self.C1, self.ctx)


def recurrence_coefficients(ctx, B0, C1, n, form=FIN_STEP):
    """(x coefficient, constant, P_(n-1) coefficient) of the step P_n -> P_(n+1)

    fin-step:  P_(n+1) = (q^n x + B_0) P_n + C_1 (1-q^n) P_(n-1)
    recu-rn:   P_(n+1) = ((1-q^n) x - B_0) P_n - C_1 (1-q^n) P_(n-1)
    """
    qn = ctx.q ** n
    if form == FIN_STEP:
        return qn, B0, C1 * (1 - qn)
    if form == REARRANGED:
        return 1 - qn, -B0, -C1 * (1 - qn)
    raise ValueError(f"unknown recurrence form {form}")


def three_term_sequence(ctx, B0, C1, order, form=FIN_STEP):
    """P_0 = 1, P_1 = x + B_0, then the chosen recurrence up to P_order

    :returns: a list of Poly

    """
    B0, C1 = Fraction(B0), Fraction(C1)
    polys = [Poly.constant(1)]
    if order >= 1:
        polys.append(Poly([B0, 1]))
    for n in range(1, order):
        a, b, c = recurrence_coefficients(ctx, B0, C1, n, form)
        polys.append(polys[n] * Poly([b, a]) + polys[n - 1] * c)
    return polys


def _assert_appell(polys, ctx, what):
    check = is_type2_appell(polys, ctx)
    if not check.ok:
        raise AppellPropertyError(f"{what} fails the q-Appell property at degree {check.index}")
    return polys


def orthogonal_appell_family(spec, order):
    """ the orthogonal q-Appell set of type II with parameters (B_0, C_1) """
    polys = three_term_sequence(spec.ctx, spec.B0, spec.C1, order, ADOPTED_RECURRENCE)
    return _assert_appell(polys, spec.ctx, "orthogonal family")


def three_term_check(P, spec, n):
    """ P_(n+1) == (q^n x + B_0) P_n + C_1 (1-q^n) P_(n-1) """
    a, b, c = recurrence_coefficients(spec.ctx, spec.B0, spec.C1, n, FIN_STEP)
    rhs = P[n] * Poly([b, a])
    if n >= 1:
        rhs = rhs + P[n - 1] * c
    return P[n + 1] == rhs


def rational_roots(B0, C1):
    """(alpha, beta) with alpha + beta = -B_0 and alpha beta = -C_1

    :returns: the rational roots of x^2 + B_0 x - C_1, or None when they are irrational

    """
    B0, C1 = Fraction(B0), Fraction(C1)
    disc = B0 * B0 + 4 * C1
    if disc < 0:
        return None
    num, den = disc.numerator, disc.denominator
    rnum, rden = math.isqrt(num), math.isqrt(den)
    if rnum * rnum != num or rden * rden != den:
        return None
    root = Fraction(rnum, rden)
    return (-B0 + root) / 2, (-B0 - root) / 2


def quasi_coefficient(ctx, lam, n):
    """ the weight [n]_q / lambda of P_(n-1) in Q_n """
    return q_number(ctx, n) / Fraction(lam)


def quasi_from_orthogonal(P, ctx, lam):
    """ Q_0 = P_0, Q_n = P_n - ([n]_q/lambda) P_(n-1) """
    return [P[0]] + [P[n] - P[n - 1] * quasi_coefficient(ctx, lam, n) for n in range(1, len(P))]


def rel_pol(Q, ctx, lam, n):
    """ P_n = ([n]_q!/lambda^n) sum_k (lambda^k/[k]_q!) Q_k """
    lam = Fraction(lam)
    total = Poly()
    for k in range(n + 1):
        total = total + Q[k] * (lam ** k / q_factorial(ctx, k))
    return total * (q_factorial(ctx, n) / lam ** n)


def orthogonal_from_quasi(Q, ctx, lam):
    return [rel_pol(Q, ctx, lam, n) for n in range(len(Q))]


def quasi_orthogonal_family(spec, order):
    """the quasi-orthogonal q-Appell set built on the orthogonal family of a QuasiSpec

    :raises ZeroLambdaError: when lambda == 0 (raised by QuasiSpec)

    """
    P = orthogonal_appell_family(spec.orthogonal(), order)
    Q = quasi_from_orthogonal(P, spec.ctx, spec.lam)
    return _assert_appell(Q, spec.ctx, "quasi-orthogonal family")


def connection_sum_check(Q, P, ctx, lam, n):
    return P[n] == rel_pol(Q, ctx, lam, n)


def tailed_recurrence_rhs(Q, spec, n, convention=FIN_STEP):
    """the right side of the printed tailed recurrence

    (A_n x + B_n) Q_n + C_n Q_(n-1) + ([n]_q!/lambda^n) sum_(k<=n-2) (lambda^k/[k]_q!) Q_k,
    with (A_n, B_n, C_n) taken from the given recurrence convention.
    """
    ctx, lam = spec.ctx, spec.lam
    a, b, c = recurrence_coefficients(ctx, spec.B0, spec.C1, n, convention)
    rhs = Q[n] * Poly([b, a])
    if n >= 1:
        rhs = rhs + Q[n - 1] * c
    tail = Poly()
    for k in range(n - 1):
        tail = tail + Q[k] * (lam ** k / q_factorial(ctx, k))
    return rhs + tail * (q_factorial(ctx, n) / lam ** n)


def tailed_recurrence_check(Q, spec, n, convention=FIN_STEP):
    return Q[n + 1] == tailed_recurrence_rhs(Q, spec, n, convention)


def quasi_tail_weights(spec, n):
    """weights w_0..w_n with

        Q_(n+1) = (q^n x + B_0) Q_n + C_1 (1-q^n) Q_(n-1) + sum_k w_k Q_k

    Substituting Q_m = P_m - c[m]_q P_(m-1) (c = 1/lambda) into the fin-step
    recurrence leaves c(-P_n + B_0(1-q^n) P_(n-1) + C_1(1-q^n)(1-q^(n-1)) P_(n-2)),
    and every P_m expands as sum_k ([m]_q!/[k]_q!) c^(m-k) Q_k.
    """
    ctx = spec.ctx
    c = 1 / spec.lam
    qn = ctx.q ** n
    terms = [(n, Fraction(-1))]
    if n >= 1:
        terms.append((n - 1, spec.B0 * (1 - qn)))
    if n >= 2:
        terms.append((n - 2, spec.C1 * (1 - qn) * (1 - ctx.q ** (n - 1))))
    weights = [Fraction(0)] * (n + 1)
    for m, factor in terms:
        for k in range(m + 1):
            weights[k] += c * factor * q_factorial(ctx, m) / q_factorial(ctx, k) * c ** (m - k)
    return weights


def quasi_recurrence_check(Q, spec, n):
    a, b, c = recurrence_coefficients(spec.ctx, spec.B0, spec.C1, n, FIN_STEP)
    rhs = Q[n] * Poly([b, a])
    if n >= 1:
        rhs = rhs + Q[n - 1] * c
    for k, w in enumerate(quasi_tail_weights(spec, n)):
        rhs = rhs + Q[k] * w
    return Q[n + 1] == rhs


def dickinson_coefficients(ctx, lam, n):
    """ (E_n, T_n) = ([n]_q!/lambda^n, lambda^n/[n]_q!) """
    lam = Fraction(lam)
    return q_factorial(ctx, n) / lam ** n, lam ** n / q_factorial(ctx, n)


def coef3_check(ctx, lam, n):
    """E_(n+1) = ([n+1]_q/T_1) E_n, and for n >= 1
    T_n = (E_(n+1)/E_(n+2)) ([n+2]_q/[n]_q) T_(n-1), with T_1 = lambda
    """
    E = lambda m: dickinson_coefficients(ctx, lam, m)[0]
    T = lambda m: dickinson_coefficients(ctx, lam, m)[1]
    T1 = T(1)
    if E(n + 1) != q_number(ctx, n + 1) / T1 * E(n):
        return False
    if n >= 1 and T(n) != E(n + 1) / E(n + 2) * q_number(ctx, n + 2) / q_number(ctx, n) * T(n - 1):
        return False
    return True
