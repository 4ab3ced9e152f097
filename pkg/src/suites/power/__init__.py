from .. import SuiteBase, check, first_false, standard_families
from src.algebra.appell import power_reconstruction, seq_inverse
from src.algebra.polyring import Poly
from src.families import bernoulli, euler


class Suite(SuiteBase):
    description = "power representations x^n = q^-binom(n,2) sum [n k]_q b_k f_(n-k)(x)"

    def checks(self, ctx, n):
        degrees = range(n + 1)
        for spec in standard_families(ctx, n):
            seq = spec.build()
            yield check(f"{spec.label()}: x^n reconstructed", first_false(
                lambda k: power_reconstruction(seq, k) == Poly.monomial(k), degrees))

        b_seq = bernoulli.bernoulli_polys(ctx, 1, n)
        e_seq = euler.euler_polys(ctx, 1, n)
        b_inverse, e_inverse = seq_inverse(b_seq).a, seq_inverse(e_seq).a
        yield check("bernoulli: b_k = q^binom(k+1,2) / [k+1]_q", first_false(
            lambda k: b_inverse[k] == bernoulli.inverse_coefficients(ctx, n)[k], degrees))
        yield check("euler: b_0 = 1, b_k = q^binom(k,2) / 2", first_false(
            lambda k: e_inverse[k] == euler.inverse_coefficients(ctx, n)[k], degrees))
        yield check("bernoulli power theorem = general reconstruction", first_false(
            lambda k: bernoulli.power_theorem_polynomial(ctx, k, b_seq) == power_reconstruction(b_seq, k),
            degrees))
        yield check("euler power theorem = general reconstruction", first_false(
            lambda k: euler.power_theorem_polynomial(ctx, k, e_seq) == power_reconstruction(e_seq, k),
            degrees))
