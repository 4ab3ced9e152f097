from fractions import Fraction

import pytest

from src.algebra.appell import (
    from_coeffs, from_polynomials, genfun_polynomials, identity, is_type2_appell,
    operator_form_polynomial, polynomial, power_reconstruction, power_representation, q_difference_check,
    q_difference_residual, recursion_check, recursion_residual, seq_add, seq_inverse, seq_int_pow,
    seq_scale, seq_star, star_componentwise)
from src.algebra.polyring import Poly
from src.algebra.scalar_qcore import QContext, binom2, q_number
from src.etc.exceptions import (
    AppellPropertyError, DegenerateSumError, InsufficientCoefficientsError, OrderMismatchError,
    ZeroLeadingCoefficientError)
from src.etc.structure import load_family
from src.suites import random_sequence


def test_zero_leading_coefficient_rejected(half):
    with pytest.raises(ZeroLeadingCoefficientError):
        from_coeffs(half, [0, 1, 2])


def test_degree_beyond_order(half):
    seq = from_coeffs(half, [1, 2])
    with pytest.raises(InsufficientCoefficientsError):
        polynomial(seq, 2)


def test_identity_polynomials(half):
    assert polynomial(identity(half, 2), 2) == Poly([0, 0, Fraction(1, 2)])


def test_constructions_agree(random_seq):
    generated = genfun_polynomials(random_seq)
    for n in range(random_seq.order + 1):
        assert polynomial(random_seq, n) == operator_form_polynomial(random_seq, n) == generated[n]


def test_random_sequence_is_appell(ctx, random_seq):
    assert is_type2_appell(random_seq.polynomials(), ctx).ok


def test_appell_check_reports_first_failure(half):
    polys = [Poly([1]), Poly([0, 1]), Poly([0, 0, 1])]
    check = is_type2_appell(polys, half)
    assert not check.ok
    assert check.index == 2


def test_from_polynomials_recovers_coefficients(ctx, random_seq):
    recovered = from_polynomials(ctx, random_seq.polynomials())
    assert recovered.a == random_seq.a


def test_from_polynomials_rejects_non_appell(half):
    with pytest.raises(AppellPropertyError):
        from_polynomials(half, [Poly([1]), Poly([0, 1]), Poly([0, 0, 1])])


def test_group_axioms(ctx):
    f, g, h = (random_sequence(ctx, 6, seed=s) for s in (1, 2, 3))
    unit = identity(ctx, 6)
    assert seq_star(f, unit).a == f.a
    assert seq_star(f, seq_inverse(f)).a == unit.a
    assert seq_star(seq_star(f, g), h).a == seq_star(f, seq_star(g, h)).a
    assert seq_star(f, g).a == seq_star(g, f).a


def test_star_componentwise_matches_convolution(ctx):
    f, g = random_sequence(ctx, 5, seed=4), random_sequence(ctx, 5, seed=5)
    product = seq_star(f, g)
    for n in range(6):
        assert star_componentwise(ctx, f.polynomials(), g.polynomials(), n) == product[n]


def test_scaling_commutes_with_star(ctx):
    f, g = random_sequence(ctx, 4, seed=1), random_sequence(ctx, 4, seed=2)
    c = Fraction(-2, 3)
    assert seq_star(seq_scale(f, c), g).a == seq_scale(seq_star(f, g), c).a == seq_star(f, seq_scale(g, c)).a
    with pytest.raises(ZeroLeadingCoefficientError):
        seq_scale(f, 0)


def test_sum_and_degenerate_sum(half):
    f = from_coeffs(half, [1, 2])
    g = from_coeffs(half, [2, -1])
    assert seq_add(f, g).a == (3, 1)
    with pytest.raises(DegenerateSumError):
        seq_add(f, from_coeffs(half, [-1, 5]))
    with pytest.raises(OrderMismatchError):
        seq_add(f, from_coeffs(half, [1, 2, 3]))


def test_integer_powers(ctx):
    f = random_sequence(ctx, 5, seed=9)
    assert seq_int_pow(f, 0).a == identity(ctx, 5).a
    assert seq_int_pow(f, 2).a == seq_star(f, f).a
    assert seq_int_pow(f, -2).a == seq_star(seq_inverse(f), seq_inverse(f)).a


@pytest.mark.parametrize("n", range(7))
def test_power_representation(ctx, n):
    f = random_sequence(ctx, 6, seed=3)
    assert power_reconstruction(f, n) == Poly.monomial(n)
    assert len(power_representation(f, n)) == n + 1


def test_alpha_stream(ctx, random_seq):
    alpha = random_seq.alpha
    assert alpha[0] == 0
    assert len(alpha) == random_seq.order + 1


def test_alpha_of_identity_vanishes(ctx):
    assert all(a == 0 for a in identity(ctx, 5).alpha.alpha)


@pytest.mark.parametrize("n", range(1, 9))
def test_recursion_and_q_difference(random_seq, n):
    assert recursion_residual(random_seq, n).is_zero()
    assert recursion_check(random_seq, n)
    assert q_difference_residual(random_seq, n).is_zero()
    assert q_difference_check(random_seq, n)


def test_sequences_hold_their_q():
    seq = from_coeffs(QContext(3), [1, 1])
    assert seq.ctx.q == 3
    assert seq.series().order == 1


@pytest.mark.parametrize("family", ['bernoulli', 'euler'])
def test_q_difference_weighting(ctx, family):
    seq = load_family(family).build(ctx, 8, order=1)
    assert seq.alpha[2] != 0
    assert all(q_difference_check(seq, n) for n in range(9))
    # an extra q^binom(k,2) only changes the k >= 2 terms
    assert q_difference_check(seq, 1, binomial_weight=True)
    assert not any(q_difference_check(seq, n, binomial_weight=True) for n in range(2, 9))


def test_q_difference_is_recursion_times_q_number(random_seq):
    for n in range(1, 9):
        scaled = recursion_residual(random_seq, n) * q_number(random_seq.ctx, n)
        assert q_difference_residual(random_seq, n) == -scaled


@pytest.mark.parametrize("n", range(7))
def test_leading_coefficient(random_seq, n):
    expected = random_seq.a[0] * random_seq.ctx.q ** binom2(n)
    assert polynomial(random_seq, n).leading() == expected
