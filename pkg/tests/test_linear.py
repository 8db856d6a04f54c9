from fractions import Fraction

from hypothesis import given

from sgdbasis import LinComb, lc_add, lc_rank, lc_scale
from sgdbasis.comder import cd_monomial
from strategies import cd_polys, coeffs

m1 = cd_monomial((1, 0), (2, 1))
m2 = cd_monomial((2, 0), (1, 1))


def test_add_cancels_to_zero():
    assert lc_add(m1 * 2, m1 * -2) == LinComb.zero()
    assert len(lc_add(m1 * 2, m1 * -2)) == 0


def test_add_keeps_distinct_terms():
    s = lc_add(m1, m2)
    assert len(s) == 2
    assert s == m2 + m1


def test_rational_coefficients_add_exactly():
    s = lc_add(m1 * Fraction(1, 2), m1 * Fraction(1, 3))
    (mono, c), = s.items()
    assert c == Fraction(5, 6)
    assert isinstance(c, Fraction)


def test_scale_by_zero_one_minus_one():
    a = m1 + m2
    assert lc_scale(0, a) == 0
    assert lc_scale(1, a) == a
    assert lc_scale(-1, m1 - m2 * 2) == -m1 + m2 * 2


def test_integer_valued_coefficients_compare_equal_to_ints():
    (mono, c), = (m1 * Fraction(4, 2)).items()
    assert c == 2


def test_rank_examples():
    assert lc_rank([m1, m2, m1 + m2]) == 2
    assert lc_rank([]) == 0
    assert lc_rank([LinComb.zero()]) == 0


def test_rank_of_multilinear_degree_three_novikov_expansions():
    from sgdbasis.novikov import nov_basis, tau_nov

    vecs = [tau_nov(t) for t in nov_basis(3, 3, multilinear=True)]
    assert len(vecs) == 6
    assert lc_rank(vecs) == 6


def test_leading_term_uses_monomial_key():
    s = m1 + m2 * 3
    assert s.leading() == max(s.items(), key=lambda mc: mc[0].key)


@given(cd_polys(), cd_polys())
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(cd_polys(), cd_polys(), cd_polys())
def test_addition_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(cd_polys())
def test_subtraction_inverts(a):
    assert a - a == 0
    assert a + (-a) == LinComb.zero()


@given(coeffs, cd_polys(), cd_polys())
def test_scaling_distributes(c, a, b):
    assert lc_scale(c, a + b) == lc_scale(c, a) + lc_scale(c, b)


@given(cd_polys())
def test_no_zero_coefficients_are_stored(a):
    assert all(c != 0 for _, c in (a - a * Fraction(1, 2)).items())


@given(cd_polys(), cd_polys())
def test_rank_bounds(a, b):
    r = lc_rank([a, b, a + b])
    assert r <= 2
    assert r == lc_rank([a, b])
