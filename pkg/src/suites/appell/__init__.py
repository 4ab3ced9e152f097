from .. import SuiteBase, check, first_false, standard_families
from src.algebra.appell import (
    genfun_polynomials, is_type2_appell, operator_form_polynomial, polynomial)
from src.algebra.polyring import Poly
from src.algebra.scalar_qcore import binom2
from src.families import FamilySpec, representation_sum


class Suite(SuiteBase):
    description = "the type-II defining relation and the equivalent constructions of every family"

    def checks(self, ctx, n):
        for spec in standard_families(ctx, n):
            seq = spec.build()
            label = spec.label()
            polys = seq.polynomials(n)

            result = is_type2_appell(polys, ctx)
            yield check(f"{label}: D_q f_n = [n]_q f_(n-1)(qx)", result.index)

            yield check(f"{label}: explicit sum = operator form", first_false(
                lambda k: polys[k] == operator_form_polynomial(seq, k), range(n + 1)))

            generated = genfun_polynomials(seq, n)
            yield check(f"{label}: explicit sum = generating function", first_false(
                lambda k: polys[k] == generated[k], range(n + 1)))

            yield check(f"{label}: representation through the numbers", first_false(
                lambda k: polynomial(seq, k) == representation_sum(ctx, seq.a, k), range(n + 1)))

        identity = FamilySpec('identity', ctx, n).build()
        yield check("identity: f_n = q^binom(n,2) x^n", first_false(
            lambda k: polynomial(identity, k) == Poly.monomial(k, ctx.q ** binom2(k)), range(n + 1)))
