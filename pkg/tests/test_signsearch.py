from fractions import Fraction as F

import pytest

from semidomain_atoms import (Caps, ExhaustedCaps, InfeasibleProven, IntPoly,
                              MonicAtomPattern, RatPoly, SingleNegativeAt,
                              StrongPrefixPattern, UnitRepresentation,
                              Witness, descartes_prune, integer_witness_search,
                              pattern_matches, pattern_max_variations,
                              rational_feasibility)

from conftest import BINOMIAL, CUBE, GOLDEN, P, THREE_ROOTS, TWO_ROOTS


class TestPatternValidation:
    def test_monic_power_positive(self):
        with pytest.raises(ValueError):
            MonicAtomPattern(0)

    def test_strong_degree_positive(self):
        with pytest.raises(ValueError):
            StrongPrefixPattern(0)

    def test_single_negative_position(self):
        with pytest.raises(ValueError):
            SingleNegativeAt(-1, 3)
        with pytest.raises(ValueError):
            SingleNegativeAt(3, 2)

    def test_unit_cap(self):
        with pytest.raises(ValueError):
            UnitRepresentation(0)


class TestVariationCeiling:
    @pytest.mark.parametrize("kind,expected", [
        (MonicAtomPattern(3), 1),
        (StrongPrefixPattern(4), 1),
        (SingleNegativeAt(0, 5), 1),
        (SingleNegativeAt(1, 5), 2),
        (SingleNegativeAt(4, 5), 2),
        (UnitRepresentation(5), 1),
        (UnitRepresentation(5, unit_only=True), 1),
    ])
    def test_ceiling(self, kind, expected):
        assert pattern_max_variations(kind) == expected


class TestPatternMatches:
    def test_monic(self):
        assert pattern_matches(MonicAtomPattern(4), P(-2, -1, 0, 0, 1))
        assert not pattern_matches(MonicAtomPattern(4), P(-2, 0, 0, -15, 2))
        assert not pattern_matches(MonicAtomPattern(3), P(-2, -1, 0, 0, 1))
        assert not pattern_matches(MonicAtomPattern(4), P(-2, 1, 0, 0, 1))

    def test_strong_prefix(self):
        assert pattern_matches(StrongPrefixPattern(4), P(-2, 0, 0, -15, 2))
        assert not pattern_matches(StrongPrefixPattern(3), P(-2, 0, 0, -15, 2))
        assert not pattern_matches(StrongPrefixPattern(4), P(-2, 0, 1, -15, 2))

    def test_single_negative(self):
        assert pattern_matches(SingleNegativeAt(1, 4), TWO_ROOTS)
        assert not pattern_matches(SingleNegativeAt(1, 1), TWO_ROOTS)
        assert not pattern_matches(SingleNegativeAt(2, 4), TWO_ROOTS)
        assert not pattern_matches(SingleNegativeAt(1, 4), P(1, -3, -1))

    def test_unit(self):
        assert pattern_matches(UnitRepresentation(3), P(-2, 1, 1, 1))
        assert not pattern_matches(UnitRepresentation(3, unit_only=True),
                                   P(-2, 1, 1, 1))
        assert pattern_matches(UnitRepresentation(2, unit_only=True),
                               P(-1, 1, 1))
        assert not pattern_matches(UnitRepresentation(2, unit_only=True),
                                   P(-1, 1))
        assert not pattern_matches(UnitRepresentation(2), P(1, 1))

    def test_zero_polynomial_never_matches(self):
        assert not pattern_matches(UnitRepresentation(2), IntPoly.zero())


class TestDescartesPrune:
    def test_no_positive_root_no_prune(self):
        assert descartes_prune(P(1, 1), MonicAtomPattern(2)) is None

    def test_single_root_within_ceiling(self):
        assert descartes_prune(CUBE, MonicAtomPattern(4)) is None

    def test_two_roots_beat_monic(self):
        res = descartes_prune(TWO_ROOTS, MonicAtomPattern(3))
        assert isinstance(res, InfeasibleProven)
        assert res.reason == "descartes" and res.scope == "all-degrees"
        assert res.positive_roots == 2 and res.max_variations == 1

    def test_two_roots_within_interior_ceiling(self):
        assert descartes_prune(TWO_ROOTS, SingleNegativeAt(1, 6)) is None

    def test_three_roots_beat_everything(self):
        res = descartes_prune(THREE_ROOTS, SingleNegativeAt(1, 6))
        assert isinstance(res, InfeasibleProven)
        assert res.positive_roots == 3 and res.max_variations == 2

    def test_multiplicity_counts(self):
        # (x - 1)^2 has one distinct but two counted positive roots.
        square = P(1, -2, 1)
        res = descartes_prune(square, UnitRepresentation(4))
        assert isinstance(res, InfeasibleProven)
        assert res.positive_roots == 2


class TestInputValidation:
    def test_constant_modulus(self):
        with pytest.raises(ValueError):
            integer_witness_search(P(5), UnitRepresentation(3))

    def test_root_at_zero(self):
        with pytest.raises(ValueError):
            integer_witness_search(P(0, -1, 1), UnitRepresentation(3))

    def test_monic_pattern_needs_monic_modulus(self):
        with pytest.raises(ValueError):
            integer_witness_search(BINOMIAL, MonicAtomPattern(3))

    def test_strong_prefix_rejected_by_integer_search(self):
        with pytest.raises(ValueError):
            integer_witness_search(CUBE, StrongPrefixPattern(4))


class TestMonicProbes:
    def test_degree_three_infeasible(self):
        res = integer_witness_search(CUBE, MonicAtomPattern(3))
        assert isinstance(res, InfeasibleProven)
        assert res.reason == "linear" and res.scope == "query"

    def test_degree_four_rational_but_not_integer(self):
        relaxed = rational_feasibility(CUBE, MonicAtomPattern(4))
        assert isinstance(relaxed, Witness)
        assert relaxed.multiplier == RatPoly((F(1, 2), F(1)))
        assert relaxed.product == RatPoly((F(-1), F(0), F(0), F(-15, 2), F(1)))
        exact = integer_witness_search(CUBE, MonicAtomPattern(4))
        assert isinstance(exact, InfeasibleProven)
        assert exact.reason == "linear" and exact.scope == "query"

    def test_degree_five_witness(self):
        res = integer_witness_search(CUBE, MonicAtomPattern(5))
        assert isinstance(res, Witness)
        assert res.multiplier == P(1, 2, 1)
        assert res.product == P(-2, 0, -2, -11, -6, 1)
        assert res.product == res.multiplier * CUBE
        assert pattern_matches(MonicAtomPattern(5), res.product)

    def test_power_below_degree_is_infeasible(self):
        res = integer_witness_search(CUBE, MonicAtomPattern(2))
        assert isinstance(res, InfeasibleProven)
        assert res.reason == "linear"


class TestStrongPrefixProbes:
    def test_degree_three_infeasible(self):
        res = rational_feasibility(CUBE, StrongPrefixPattern(3))
        assert isinstance(res, InfeasibleProven)
        assert res.reason == "linear" and res.scope == "query"

    def test_degree_four_witness_normalized(self):
        res = rational_feasibility(CUBE, StrongPrefixPattern(4))
        assert isinstance(res, Witness)
        assert res.multiplier == P(1, 2)
        assert res.product == P(-2, 0, 0, -15, 2)
        assert res.product == res.multiplier * CUBE
        assert pattern_matches(StrongPrefixPattern(4), res.product)


class TestScaleFreeKinds:
    def test_interior_negative_witness(self):
        res = integer_witness_search(TWO_ROOTS, SingleNegativeAt(1, 6))
        assert res == Witness(P(1), TWO_ROOTS)

    def test_unit_position_pruned_for_two_roots(self):
        res = integer_witness_search(TWO_ROOTS, UnitRepresentation(6))
        assert isinstance(res, InfeasibleProven)
        assert res.reason == "descartes" and res.scope == "all-degrees"

    def test_rational_route_matches_integer_route(self):
        kind = SingleNegativeAt(1, 6)
        a = integer_witness_search(TWO_ROOTS, kind)
        b = rational_feasibility(TWO_ROOTS, kind)
        assert a == b
        assert isinstance(a.multiplier, IntPoly)


class TestUnitOnly:
    def test_unit_decomposes_for_golden_sibling(self):
        # x^2 + x - 1: the positive root r satisfies 1 = r + r^2.
        m = P(-1, 1, 1)
        res = integer_witness_search(m, UnitRepresentation(4, unit_only=True))
        assert res == Witness(P(1), m)

    def test_unit_decomposes_for_half(self):
        # 2x - 1: the root 1/2 satisfies 1 = r + r.
        m = P(-1, 2)
        res = integer_witness_search(m, UnitRepresentation(3, unit_only=True))
        assert res == Witness(P(1), m)

    def test_unit_atom_for_one(self):
        # x - 1: 1 never decomposes into at least two positive terms.
        m = P(-1, 1)
        res = integer_witness_search(m, UnitRepresentation(8, unit_only=True))
        assert isinstance(res, InfeasibleProven)
        assert res.reason == "linear" and res.scope == "query"

    def test_cube_unit_is_atom_within_cap(self):
        res = integer_witness_search(CUBE,
                                     UnitRepresentation(6, unit_only=True))
        assert isinstance(res, InfeasibleProven)
        assert res.reason == "linear" and res.scope == "query"

    def test_rational_route_keeps_rational_point(self):
        m = P(-1, 2)
        res = rational_feasibility(m, UnitRepresentation(2, unit_only=True))
        assert isinstance(res, Witness)
        assert res.multiplier == RatPoly((F(1),))


class TestCaps:
    def test_node_budget_exhaustion(self):
        res = integer_witness_search(CUBE, MonicAtomPattern(5),
                                     Caps(max_nodes=1))
        assert isinstance(res, ExhaustedCaps)

    def test_witness_degree_cap_limits_probes(self):
        # A degree cap below every admissible product degree leaves the
        # sweep with nothing to do, which is a (trivial) proof.
        res = integer_witness_search(CUBE,
                                     UnitRepresentation(12, unit_only=True),
                                     Caps(max_witness_deg=2))
        assert isinstance(res, InfeasibleProven)

    def test_golden_unit_only_infeasible(self):
        res = integer_witness_search(GOLDEN,
                                     UnitRepresentation(6, unit_only=True))
        assert isinstance(res, InfeasibleProven)
