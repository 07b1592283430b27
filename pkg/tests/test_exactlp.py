import random
from fractions import Fraction

import pytest

from semidomain_atoms._exactlp import (FM_CUTOVER, _simplex, feasible_point,
                                       fix_prefix, variable_range)

F = Fraction


def rows_of(*triples):
    """Each triple is (coeffs..., bound) meaning coeffs . x <= bound."""
    out = []
    for t in triples:
        *a, b = t
        out.append((tuple(F(v) for v in a), F(b)))
    return out


class TestFeasiblePoint:
    def test_single_variable_point(self):
        rows = rows_of((1, 1), (-1, -1))  # x <= 1 and x >= 1
        assert feasible_point(rows, 1) == (F(1),)

    def test_single_variable_infeasible(self):
        # Contradictory bounds that never become a constant row.
        rows = rows_of((1, -1), (-1, 0))  # x <= -1 and x >= 0
        assert feasible_point(rows, 1) is None

    def test_no_variables(self):
        assert feasible_point(rows_of((5,)), 0) == ()
        assert feasible_point(rows_of((-1,)), 0) is None

    def test_box(self):
        rows = rows_of((1, 0, 2), (-1, 0, -1), (0, 1, 5), (0, -1, -3))
        pt = feasible_point(rows, 2)
        assert pt is not None
        x, y = pt
        assert 1 <= x <= 2 and 3 <= y <= 5

    def test_unbounded_defaults_to_zero(self):
        assert feasible_point([], 2) == (F(0), F(0))

    def test_coupled_infeasible(self):
        # x + y <= 0, x >= 1, y >= 1
        rows = rows_of((1, 1, 0), (-1, 0, -1), (0, -1, -1))
        assert feasible_point(rows, 2) is None

    def test_point_satisfies_rows(self):
        rows = rows_of((2, 3, 12), (-1, 2, 4), (1, -4, 2), (-3, -1, -3))
        pt = feasible_point(rows, 2)
        assert pt is not None
        for a, b in rows:
            assert sum(c * v for c, v in zip(a, pt)) <= b


class TestVariableRange:
    def test_box_ranges(self):
        rows = rows_of((1, 0, 2), (-1, 0, -1), (0, 1, 5), (0, -1, -3))
        assert variable_range(rows, 2, 0) == (F(1), F(2))
        assert variable_range(rows, 2, 1) == (F(3), F(5))

    def test_unbounded_side(self):
        rows = rows_of((1, 1),)  # x <= 1
        assert variable_range(rows, 1, 0) == (None, F(1))

    def test_infeasible(self):
        rows = rows_of((1, -1), (-1, 0))
        assert variable_range(rows, 1, 0) is None

    def test_projection(self):
        # Triangle x >= 0, y >= 0, x + y <= 3: each variable spans [0, 3].
        rows = rows_of((-1, 0, 0), (0, -1, 0), (1, 1, 3))
        assert variable_range(rows, 2, 0) == (F(0), F(3))
        assert variable_range(rows, 2, 1) == (F(0), F(3))

    def test_index_bounds(self):
        with pytest.raises(IndexError):
            variable_range([], 2, 2)


class TestFixPrefix:
    def test_substitution(self):
        rows = rows_of((1, 1, 3), (2, -1, 4))
        fixed = fix_prefix(rows, 2, [F(1)])
        assert fixed == [((F(1),), F(2)), ((F(-1),), F(2))]


class TestSimplexDirect:
    def test_optimum(self):
        # min x + y over the triangle corner (1, 3).
        rows = rows_of((-1, 0, -1), (0, -1, -3), (1, 1, 10))
        status, val, pt = _simplex(rows, 2, [F(1), F(1)])
        assert status == "optimal"
        assert val == 4
        assert pt == (F(1), F(3))

    def test_unbounded(self):
        status, _, _ = _simplex(rows_of((1, 1),), 1, [F(1)])
        assert status == "unbounded"

    def test_infeasible(self):
        status, _, _ = _simplex(rows_of((1, -1), (-1, 0)), 1, [F(0)])
        assert status == "infeasible"

    def test_negative_rhs_normalization(self):
        rows = rows_of((-1, -5),)  # x >= 5
        status, val, pt = _simplex(rows, 1, [F(1)])
        assert status == "optimal"
        assert val == 5 and pt == (F(5),)


class TestEngineAgreement:
    def test_random_systems(self):
        rng = random.Random(20260819)
        for trial in range(150):
            n = rng.randint(1, 4)
            rows = []
            for _ in range(rng.randint(1, 6)):
                a = tuple(F(rng.randint(-4, 4)) for _ in range(n))
                rows.append((a, F(rng.randint(-6, 6))))
            fm_pt = feasible_point(rows, n)
            status, _, sx_pt = _simplex(rows, n, [F(0)] * n)
            assert (fm_pt is None) == (status == "infeasible"), (rows, n)
            for pt in (fm_pt, sx_pt):
                if pt is not None:
                    for a, b in rows:
                        assert sum(c * v for c, v in zip(a, pt)) <= b

    def test_random_ranges(self):
        rng = random.Random(77)
        for trial in range(80):
            n = rng.randint(1, 3)
            rows = [((tuple(F(rng.randint(-3, 3)) for _ in range(n))),
                     F(rng.randint(-5, 5)))
                    for _ in range(rng.randint(2, 5))]
            # Bound the box so both sides are finite when feasible.
            for j in range(n):
                e = [F(0)] * n
                e[j] = F(1)
                rows.append((tuple(e), F(9)))
                e2 = [F(0)] * n
                e2[j] = F(-1)
                rows.append((tuple(e2), F(9)))
            for j in range(n):
                got = variable_range(rows, n, j)
                st_lo, lo, _ = _simplex(rows, n,
                                        [F(i == j) for i in range(n)])
                if got is None:
                    assert st_lo == "infeasible"
                    continue
                st_hi, neg_hi, _ = _simplex(rows, n,
                                            [-F(i == j) for i in range(n)])
                assert got == (lo, -neg_hi), (rows, j)

    def test_cutover_is_high_enough_for_fm_tests(self):
        assert FM_CUTOVER >= 4
