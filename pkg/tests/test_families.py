from fractions import Fraction

import pytest

from src.algebra.appell import is_type2_appell, power_reconstruction, seq_inverse, seq_int_pow, polynomial
from src.algebra.ortho_quasi import ADOPTED_RECURRENCE, FIN_STEP, REARRANGED
from src.algebra.polyring import Poly
from src.etc.exceptions import ZeroBetaError
from src.etc.structure import get_family_names, load_family
from src.families import FamilySpec, bernoulli, euler, representation_sum
from src.families.asc2 import arbitrate_recurrence, asc2_classical, asc2_modified, classical_relation_check
from src.families.bernoulli import bernoulli_numbers, bernoulli_polys
from src.families.euler import euler_numbers, euler_polys
from src.families.identity import identity_family
from src.suites import standard_families


def test_family_plugins_are_discovered():
    assert get_family_names() == ['asc2', 'bernoulli', 'euler', 'identity', 'quasi']


def test_unknown_family():
    with pytest.raises(ValueError):
        load_family('laguerre')


def test_bernoulli_numbers_at_half(half):
    assert bernoulli_numbers(half, 1, 2)[:2] == [1, Fraction(-1, 3)]
    assert polynomial(bernoulli_polys(half, 1, 1), 1) == Poly([Fraction(-1, 3), 1])


def test_euler_first_number(ctx):
    assert euler_numbers(ctx, 1, 3)[1] == Fraction(-1, 2)


def test_order_zero_is_identity(ctx):
    assert bernoulli_polys(ctx, 0, 5).a == identity_family(ctx, 5).a
    assert euler_polys(ctx, 0, 5).a == identity_family(ctx, 5).a


@pytest.mark.parametrize("m", [-2, -1, 2, 3])
def test_orders_are_star_powers(ctx, m):
    assert bernoulli_polys(ctx, m, 5).a == seq_int_pow(bernoulli_polys(ctx, 1, 5), m).a
    assert euler_polys(ctx, m, 5).a == seq_int_pow(euler_polys(ctx, 1, 5), m).a


def test_inverse_closed_forms(ctx):
    assert list(seq_inverse(bernoulli_polys(ctx, 1, 8)).a) == bernoulli.inverse_coefficients(ctx, 8)
    assert list(seq_inverse(euler_polys(ctx, 1, 8)).a) == euler.inverse_coefficients(ctx, 8)


@pytest.mark.parametrize("n", range(9))
def test_power_theorems(ctx, n):
    b_seq, e_seq = bernoulli_polys(ctx, 1, 8), euler_polys(ctx, 1, 8)
    assert bernoulli.power_theorem_polynomial(ctx, n, b_seq) == Poly.monomial(n) == power_reconstruction(b_seq, n)
    assert euler.power_theorem_polynomial(ctx, n, e_seq) == Poly.monomial(n) == power_reconstruction(e_seq, n)


def test_representation_through_numbers(ctx):
    seq = bernoulli_polys(ctx, 1, 6)
    assert all(representation_sum(ctx, seq.a, n) == polynomial(seq, n) for n in range(7))


def test_arbitration_adopts_fin_step(ctx):
    verdict = arbitrate_recurrence(ctx, 1, 1)
    assert verdict.adopted == FIN_STEP == ADOPTED_RECURRENCE
    results = {form: (ok, index) for form, ok, index in verdict.results}
    assert results[FIN_STEP] == (True, None)
    assert results[REARRANGED][0] is False
    assert "adopted=fin-step" in verdict.describe()


@pytest.mark.parametrize("alpha, beta", [(1, 1), (2, -3), (Fraction(1, 2), 5)])
def test_asc2_is_appell(ctx, alpha, beta):
    polys = asc2_modified(ctx, alpha, beta, 7)
    assert is_type2_appell(polys, ctx).ok
    assert polys[1] == Poly([-(Fraction(alpha) + beta), 1])


def test_asc2_zero_beta(half):
    with pytest.raises(ZeroBetaError):
        asc2_modified(half, 1, 0, 3)


def test_asc2_classical_relation(ctx):
    V = asc2_classical(ctx, Fraction(2, 3), 7)
    assert all(classical_relation_check(ctx, V, n) for n in range(1, 8))


def test_quasi_family_first_polynomial(half):
    seq = load_family('quasi').build(half, 3, B0=Fraction(1, 2), C1=-1, lam=2)
    assert polynomial(seq, 1) == Poly([0, 1])


def test_quasi_zero_lambda(half):
    with pytest.raises(ValueError):
        load_family('quasi').build(half, 3, lam=0)


def test_family_spec_builds_and_labels(half):
    spec = FamilySpec('bernoulli', half, 4, (('order', 2),))
    assert spec.label() == 'bernoulli(order=2)'
    assert spec.build().a == bernoulli_polys(half, 2, 4).a
    assert FamilySpec('identity', half, 2).label() == 'identity'

@pytest.mark.parametrize("index", range(6))
def test_standard_families_are_appell_to_degree_15(ctx, index):
    spec = standard_families(ctx, 15)[index]
    check = is_type2_appell(spec.build().polynomials(), ctx)
    assert check.ok, f"{spec.label()} fails at degree {check.index}"
