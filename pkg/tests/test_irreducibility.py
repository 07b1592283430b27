from fractions import Fraction

import pytest

from conftest import CUBE, P, TWO_ROOTS
from semidomain_atoms import (FactorSearchCaps, Irreducible, Reducible,
                              Unknown, certify_irreducible, eisenstein_check,
                              rational_roots)


class TestEisenstein:
    def test_flagship(self):
        assert eisenstein_check(CUBE) == 2

    def test_square_root_shapes(self):
        assert eisenstein_check(P(-2, 0, 1)) == 2
        assert eisenstein_check(P(-3, 0, 2)) == 3

    def test_substituted_family_member(self):
        assert eisenstein_check(P(-2, 0, 4, 0, -8, 0, 1)) == 2

    def test_no_prime(self):
        assert eisenstein_check(TWO_ROOTS) is None
        assert eisenstein_check(P(-4, 0, 1)) is None  # 4 fails p^2 | const


class TestRationalRoots:
    def test_half(self):
        assert rational_roots(P(-1, 2)) == [Fraction(1, 2)]

    def test_two_integer_roots(self):
        assert rational_roots(P(2, -3, 1)) == [1, 2]

    def test_none(self):
        assert rational_roots(TWO_ROOTS) == []
        assert rational_roots(CUBE) == []

    def test_zero_root(self):
        assert Fraction(0) in rational_roots(P(0, 1, 1))


class TestCertify:
    def test_eisenstein_route(self):
        v = certify_irreducible(CUBE)
        assert isinstance(v, Irreducible)
        assert v.method == "eisenstein"
        assert v.eisenstein_prime == 2

    def test_degree_one(self):
        v = certify_irreducible(P(-1, 1))
        assert isinstance(v, Irreducible)
        assert v.method == "degree-1"

    def test_low_degree_no_rational_root(self):
        v = certify_irreducible(TWO_ROOTS)
        assert isinstance(v, Irreducible)
        v = certify_irreducible(P(-1, 6, -5, 1))
        assert isinstance(v, Irreducible)

    def test_factor_search_route(self):
        v = certify_irreducible(P(1, 0, -10, 0, 1))
        assert isinstance(v, Irreducible)
        assert v.method == "factor-search"

    def test_rational_root_reducible(self):
        v = certify_irreducible(P(2, -3, 0, 1))  # (x-1)^2 (x+2)
        assert isinstance(v, Reducible)
        assert v.factor in (P(-1, 1), P(2, 1))

    def test_quartic_with_quadratic_factors(self):
        m = TWO_ROOTS * P(-2, 0, 1)  # (x^2-3x+1)(x^2-2)
        v = certify_irreducible(m)
        assert isinstance(v, Reducible)
        q, r = divmod_check(m, v.factor)
        assert r

    def test_power_of_x(self):
        v = certify_irreducible(P(0, 1, 1))
        assert isinstance(v, Reducible)
        assert v.factor == P(0, 1)

    def test_unknown_on_tiny_budget(self):
        v = certify_irreducible(P(1, 0, -10, 0, 1),
                                FactorSearchCaps(max_candidates=1))
        assert isinstance(v, Unknown)

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            certify_irreducible(P(5))

    def test_content_removed_first(self):
        v = certify_irreducible(2 * CUBE)
        assert isinstance(v, Irreducible)


def divmod_check(m, factor):
    """Exact division: returns (quotient, divides_exactly)."""
    from semidomain_atoms import divmod_rat
    q, r = divmod_rat(m.to_rat(), factor.to_rat())
    return q, not r
