"""modified Al-Salam-Carlitz II polynomials

R_n(x) = beta^n q^binom(n,2) V_n^(alpha/beta)(x/beta; q) is generated by

    R_0 = 1, R_1 = x - (alpha + beta),
    R_(n+1) = (q^n x - (alpha + beta)) R_n - alpha beta (1 - q^n) R_(n-1).

Of the two recurrence readings (fin-step and the rearranged recu-Rn form) only
this one is a q-Appell set of type II; arbitrate_recurrence reproduces the verdict.
"""
from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

from src.algebra.appell import from_polynomials, is_type2_appell
from src.algebra.ortho_quasi import ADOPTED_RECURRENCE, FIN_STEP, REARRANGED, three_term_sequence
from src.algebra.polyring import dilate, q_derivative
from src.algebra.scalar_qcore import binom2, q_number
from src.etc.consts import ARBITRATION_DEPTH
from src.etc.exceptions import AppellPropertyError, ZeroBetaError

PARAMETERS = ('alpha', 'beta')
DESCRIPTION = "modified Al-Salam-Carlitz II polynomials beta^n q^binom(n,2) V_n^(alpha/beta)(x/beta)"


class Verdict(NamedTuple):
    adopted: Optional[str]  # the unique passing form, None if zero or several pass
    results: Tuple[Tuple[str, bool, Optional[int]], ...]  # (form, passes, first failing degree)

    def describe(self):
        parts = [f"{form}: {'q-Appell' if ok else f'fails at degree {index}'}"
                 for form, ok, index in self.results]
        return f"adopted={self.adopted}; " + "; ".join(parts)


def _recurrence_parameters(alpha, beta):
    alpha, beta = Fraction(alpha), Fraction(beta)
    if beta == 0:
        raise ZeroBetaError("beta must be nonzero")
    return -(alpha + beta), -alpha * beta


def arbitrate_recurrence(ctx, alpha, beta, depth=ARBITRATION_DEPTH):
    """build both candidate recurrences and keep the one that is q-Appell of type II

    :ctx: the QContext
    :alpha, beta: the Al-Salam-Carlitz parameters
    :depth: highest degree probed
    :returns: a Verdict

    """
    B0, C1 = _recurrence_parameters(alpha, beta)
    results = []
    for form in (FIN_STEP, REARRANGED):
        check = is_type2_appell(three_term_sequence(ctx, B0, C1, depth, form), ctx)
        results.append((form, check.ok, check.index))
    passing = [form for form, ok, _ in results if ok]
    return Verdict(passing[0] if len(passing) == 1 else None, tuple(results))


def asc2_modified(ctx, alpha, beta, n):
    """R_0 .. R_n

    :raises ZeroBetaError: when beta == 0
    :raises AppellPropertyError: if the generated sequence is not q-Appell of type II

    """
    B0, C1 = _recurrence_parameters(alpha, beta)
    polys = three_term_sequence(ctx, B0, C1, n, ADOPTED_RECURRENCE)
    check = is_type2_appell(polys, ctx)
    if not check.ok:
        raise AppellPropertyError(f"Al-Salam-Carlitz II recurrence fails at degree {check.index}")
    return polys


def asc2_classical(ctx, a, n):
    """ V_k^(a)(x;q) = q^-binom(k,2) R_k with alpha = a, beta = 1 """
    return [p * ctx.q ** (-binom2(k)) for k, p in enumerate(asc2_modified(ctx, a, 1, n))]


def classical_relation_check(ctx, V, n):
    """ D_q V_n = q^(1-n) [n]_q V_(n-1)(qx) """
    return q_derivative(ctx, V[n]) == dilate(V[n - 1], ctx.q) * (ctx.q ** (1 - n) * q_number(ctx, n))


def build(ctx, n, alpha=1, beta=1):
    return from_polynomials(ctx, asc2_modified(ctx, alpha, beta, n), name=f"asc2({alpha},{beta})")
