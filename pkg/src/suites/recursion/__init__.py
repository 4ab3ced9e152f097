"""the recursion formula and the q-difference equation

The q-difference equation with the extra q^binom(k,2) weight is reported as a
note; it does not decide the exit status.
"""
from .. import CheckResult, SuiteBase, check, first_false, standard_families
from src.algebra.appell import q_difference_check, recursion_check


class Suite(SuiteBase):
    description = "the recursion formula and the q-difference equation driven by alpha_k"

    def checks(self, ctx, n):
        for spec in standard_families(ctx, n):
            seq = spec.build()
            label = spec.label()
            yield check(f"{label}: alpha_0 = 0", None if seq.alpha[0] == 0 else 0)
            yield check(f"{label}: recursion formula", first_false(
                lambda k: recursion_check(seq, k), range(1, n + 1)))
            yield check(f"{label}: q-difference equation", first_false(
                lambda k: q_difference_check(seq, k), range(n + 1)))
            failing = first_false(lambda k: q_difference_check(seq, k, binomial_weight=True), range(n + 1))
            detail = "holds" if failing is None else f"fails from n={failing}"
            yield CheckResult(f"{label}: q-difference equation with q^binom(k,2) weights",
                              failing is None, detail, gating=False)
