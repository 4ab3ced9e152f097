import random
from fractions import Fraction
from typing import List, NamedTuple

from src.algebra.appell import from_coeffs
from src.families import FamilySpec
from src.etc.utilities import pif


class CheckResult(NamedTuple):
    label: str
    ok: bool
    detail: str = ''
    gating: bool = True  # informational results never fail a suite


class Report(NamedTuple):
    suite: str
    q: Fraction
    n: int
    results: List[CheckResult]

    @property
    def ok(self):
        return all(r.ok for r in self.results if r.gating)

    def first_failure(self):
        return next((r for r in self.results if r.gating and not r.ok), None)

    def notes(self):
        return [r for r in self.results if not r.gating]


class SuiteBase:
    """the base class for any verification suite"""
    description = ""

    def checks(self, ctx, n):
        """yield a CheckResult for every identity verified

        :ctx: the QContext
        :n: the highest degree / truncation order to verify
        :returns: an iterator of CheckResult

        """
        raise NotImplementedError("Must be implemented in sub-classes")

    def run(self, ctx, n, name=None, verbose=False):
        """run every check, in a deterministic order

        :returns: a Report

        """
        name = name or type(self).__module__.rsplit('.', 1)[-1]
        results = []
        for result in self.checks(ctx, n):
            status = 'ok' if result.ok else ('FAILED' if result.gating else 'note')
            pif(verbose, f"[{name}] {result.label}: {status}")
            results.append(result)
        return Report(name, ctx.q, n, results)


def standard_families(ctx, n):
    """ the families every suite runs over """
    return [
        FamilySpec('bernoulli', ctx, n, (('order', 1),)),
        FamilySpec('bernoulli', ctx, n, (('order', 2),)),
        FamilySpec('euler', ctx, n, (('order', 1),)),
        FamilySpec('identity', ctx, n),
        FamilySpec('asc2', ctx, n, (('alpha', 1), ('beta', 1))),
        FamilySpec('quasi', ctx, n, (('B0', 0), ('C1', -1), ('lam', 1))),
    ]


def random_sequence(ctx, n, seed=0):
    """ a reproducible sequence with small random rational coefficients and a_0 != 0 """
    rng = random.Random(seed)
    a = [Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))]
    a += [Fraction(rng.randint(-5, 5), rng.randint(1, 6)) for _ in range(n)]
    return from_coeffs(ctx, a, name=f"random({seed})")


def first_false(predicate, indices):
    """ the first index failing the predicate, None when all pass """
    return next((i for i in indices if not predicate(i)), None)


def check(label, failing_index=None, detail=''):
    """ a gating CheckResult from a first-failure index """
    if failing_index is None:
        return CheckResult(label, True, detail)
    return CheckResult(label, False, detail or f"first failure at n={failing_index}")
