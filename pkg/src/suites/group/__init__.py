from fractions import Fraction

from .. import SuiteBase, check, first_false, random_sequence
from src.algebra.appell import (
    identity, seq_add, seq_inverse, seq_int_pow, seq_scale, seq_star, star_componentwise)
from src.families.bernoulli import bernoulli_polys
from src.families.euler import euler_polys


def _agree(f, g):
    """ None when the determining coefficients agree, else the first differing index """
    return first_false(lambda k: f.a[k] == g.a[k], range(len(f.a)))


class Suite(SuiteBase):
    description = "the commutative group of q-Appell sets under the star product"

    def checks(self, ctx, n):
        members = [bernoulli_polys(ctx, 1, n), euler_polys(ctx, 1, n), random_sequence(ctx, n)]
        unit = identity(ctx, n)
        names = ['bernoulli', 'euler', 'random']

        for name, f in zip(names, members):
            yield check(f"{name} * I = {name}", _agree(seq_star(f, unit), f))
            yield check(f"{name} * {name}^-1 = I", _agree(seq_star(f, seq_inverse(f)), unit))

        f, g, h = members
        yield check("(f * g) * h = f * (g * h)",
                    _agree(seq_star(seq_star(f, g), h), seq_star(f, seq_star(g, h))))
        for (a, fa), (b, fb) in [((names[0], f), (names[1], g)), ((names[0], f), (names[2], h)),
                                 ((names[1], g), (names[2], h))]:
            yield check(f"{a} * {b} = {b} * {a}", _agree(seq_star(fa, fb), seq_star(fb, fa)))

        product = seq_star(f, g)
        f_polys, g_polys = f.polynomials(), g.polynomials()
        yield check("componentwise star = convolution of the numbers", first_false(
            lambda k: star_componentwise(ctx, f_polys, g_polys, k) == product[k], range(n + 1)))

        c = Fraction(3, 2)
        yield check("(c f) * g = c (f * g) = f * (c g)", first_false(
            lambda k: seq_star(seq_scale(f, c), g).a[k] == seq_scale(product, c).a[k]
            == seq_star(f, seq_scale(g, c)).a[k], range(n + 1)))
        yield check("(f + h) * g = f * g + h * g",
                    _agree(seq_star(seq_add(f, h), g), seq_add(product, seq_star(h, g)))
                    if f.a[0] + h.a[0] != 0 else None)

        yield check("bernoulli^2 = bernoulli of order 2",
                    _agree(seq_int_pow(f, 2), bernoulli_polys(ctx, 2, n)))
        yield check("euler^-1 = euler of order -1",
                    _agree(seq_int_pow(g, -1), euler_polys(ctx, -1, n)))
