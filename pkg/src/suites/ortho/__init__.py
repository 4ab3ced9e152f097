"""orthogonal and quasi-orthogonal q-Appell sets

The recurrence arbitration verdict and the literal tailed recurrence are
reported as notes; they do not decide the exit status.
"""
from fractions import Fraction

from .. import CheckResult, SuiteBase, check, first_false
from src.algebra.appell import is_type2_appell
from src.algebra.ortho_quasi import (
    ADOPTED_RECURRENCE, FIN_STEP, REARRANGED, QuasiSpec, coef3_check, connection_sum_check,
    orthogonal_appell_family, orthogonal_from_quasi, quasi_from_orthogonal, quasi_recurrence_check,
    rational_roots, tailed_recurrence_check, three_term_check)
from src.families.asc2 import arbitrate_recurrence, asc2_classical, asc2_modified, classical_relation_check

# B_0 = -2, C_1 = -1 has the double root 1, i.e. Al-Salam-Carlitz II with alpha = beta = 1
ORTHO_PARAMETERS = (Fraction(-2), Fraction(-1))
LAMBDAS = (Fraction(1), Fraction(2))


class Suite(SuiteBase):
    description = "three-term recurrences, the Al-Salam-Carlitz II family and its quasi-orthogonal transform"

    def checks(self, ctx, n):
        verdict = arbitrate_recurrence(ctx, 1, 1)
        yield CheckResult("recurrence arbitration", True, verdict.describe(), gating=False)
        yield check("exactly one recurrence is q-Appell and it is the adopted one",
                    None if verdict.adopted == ADOPTED_RECURRENCE else 0, verdict.describe())

        B0, C1 = ORTHO_PARAMETERS
        for lam in LAMBDAS:
            spec = QuasiSpec(B0, C1, lam, ctx)
            P = orthogonal_appell_family(spec.orthogonal(), n)
            if lam == LAMBDAS[0]:
                yield from self._orthogonal_checks(ctx, spec, P, n)
            Q = quasi_from_orthogonal(P, ctx, lam)
            tag = f"lambda={lam}"
            yield check(f"{tag}: Q is q-Appell of type II", is_type2_appell(Q, ctx).index)
            recovered = orthogonal_from_quasi(Q, ctx, lam)
            yield check(f"{tag}: P recovered from Q", first_false(
                lambda k: recovered[k] == P[k], range(n + 1)))
            yield check(f"{tag}: connection sum", first_false(
                lambda k: connection_sum_check(Q, P, ctx, lam, k), range(n + 1)))
            yield check(f"{tag}: Q_1 = x + B_0 - 1/lambda",
                        None if n < 1 or Q[1](0) == B0 - 1 / lam else 1)
            yield check(f"{tag}: corrected tailed recurrence", first_false(
                lambda k: quasi_recurrence_check(Q, spec, k), range(n)))
            for convention in (FIN_STEP, REARRANGED):
                failing = first_false(lambda k: tailed_recurrence_check(Q, spec, k, convention), range(n))
                detail = "holds" if failing is None else f"fails from n={failing}"
                yield CheckResult(f"{tag}: printed tailed recurrence ({convention})",
                                  failing is None, detail, gating=False)
            yield check(f"{tag}: E_n and T_n consistency", first_false(
                lambda k: coef3_check(ctx, lam, k), range(n + 1)))

    def _orthogonal_checks(self, ctx, spec, P, n):
        ortho = spec.orthogonal()
        yield check("three-term recurrence", first_false(
            lambda k: three_term_check(P, ortho, k), range(n)))
        roots = rational_roots(ortho.B0, ortho.C1)
        if roots is not None:
            alpha, beta = roots
            R = asc2_modified(ctx, alpha, beta, n)
            yield check(f"orthogonal family = Al-Salam-Carlitz II ({alpha}, {beta})", first_false(
                lambda k: R[k] == P[k], range(n + 1)))
        V = asc2_classical(ctx, 1, n)
        yield check("D_q V_n = q^(1-n) [n]_q V_(n-1)(qx)", first_false(
            lambda k: classical_relation_check(ctx, V, k), range(1, n + 1)))
