"""Search for multiples of a fixed polynomial with prescribed coefficient signs.

For the minimal polynomial m of a positive algebraic number, an additive
relation among powers of that number is exactly an integer polynomial
multiple of m whose coefficient signs follow a fixed pattern.  Deciding
whether such a multiple exists is therefore the engine behind counting
atoms and strong atoms: each pattern kind below encodes one question
about decomposability of a power.

Pattern kinds (h denotes the sought product, a multiple of m):

* ``MonicAtomPattern(n)`` — h = x^n - (nonnegative integer terms of lower
  degree).  Existence means the n-th power decomposes; m must be monic.
* ``StrongPrefixPattern(s)`` — h of degree exactly s whose leading
  coefficient is the only negative one, rational coefficients allowed.
  Stored witnesses are normalized to the equivalent positive-leading
  form (lead > 0, every other coefficient <= 0).
* ``SingleNegativeAt(k, D)`` — h of degree <= D with a negative
  coefficient exactly at position k and nonnegative ones elsewhere.
  Existence means some positive multiple of the k-th power decomposes
  into other powers.
* ``UnitRepresentation(D)`` — the k = 0 case of the above; with
  ``unit_only=True`` the constant is pinned to exactly -1 and the other
  coefficients must sum to at least 2, i.e. the element 1 itself
  decomposes nontrivially.

Decision pipeline per query: a Descartes bound (any h matching the
pattern has at most 1 or 2 coefficient sign variations, so if m has more
positive roots counted with multiplicity, no multiple can match — at any
degree); then exact rational feasibility of the linear system in the
multiplier's coefficients; then, for the kinds demanding genuinely
integer coefficients, a depth-first sweep of integer points inside the
exact feasible region, enumerating each coordinate over its projected
range in ascending order (so the reported witness is the one with the
lexicographically smallest multiplier coefficient vector).  A sweep that
exhausts the finite region without clamping is a proof of integer
infeasibility for the queried degrees; sweeps cut short by caps report
``ExhaustedCaps`` and never a verdict.

``SingleNegativeAt`` and plain ``UnitRepresentation`` are scale-free:
the defining constraints survive multiplication by positive rationals,
so a rational solution scales to an integer one by clearing
denominators, and rational infeasibility already settles the integer
question for those kinds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ._exactlp import Row, feasible_point, fix_prefix, variable_range
from .polycore import IntPoly, RatPoly, content_primitive
from .rootcount import positive_root_count

__all__ = [
    "Caps",
    "MonicAtomPattern",
    "StrongPrefixPattern",
    "SingleNegativeAt",
    "UnitRepresentation",
    "Witness",
    "InfeasibleProven",
    "ExhaustedCaps",
    "pattern_max_variations",
    "pattern_matches",
    "descartes_prune",
    "rational_feasibility",
    "integer_witness_search",
]


@dataclass(frozen=True)
class Caps:
    """Search budget: witness degree, coefficient magnitude, sweep nodes."""

    max_witness_deg: int = 24
    max_coeff: int = 10**6
    max_nodes: int = 100_000


@dataclass(frozen=True)
class MonicAtomPattern:
    power: int  # n: the product is monic of degree exactly n

    def __post_init__(self) -> None:
        if self.power < 1:
            raise ValueError("power must be >= 1")


@dataclass(frozen=True)
class StrongPrefixPattern:
    degree: int  # s: the product has degree exactly s

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("degree must be >= 1")


@dataclass(frozen=True)
class SingleNegativeAt:
    power: int  # k: position of the unique negative coefficient
    degree_cap: int  # D: product degree at most D

    def __post_init__(self) -> None:
        if self.power < 0:
            raise ValueError("power must be >= 0")
        if self.degree_cap < self.power:
            raise ValueError("degree cap below the negative position")


@dataclass(frozen=True)
class UnitRepresentation:
    degree_cap: int
    unit_only: bool = False  # pin the constant to exactly -1

    def __post_init__(self) -> None:
        if self.degree_cap < 1:
            raise ValueError("degree cap must be >= 1")


PatternKind = Union[MonicAtomPattern, StrongPrefixPattern, SingleNegativeAt,
                    UnitRepresentation]


@dataclass(frozen=True)
class Witness:
    """A verified multiplier/product pair: product == multiplier * modulus."""

    multiplier: Union[IntPoly, RatPoly]
    product: Union[IntPoly, RatPoly]


@dataclass(frozen=True)
class InfeasibleProven:
    """No pattern-matching multiple exists.

    reason "descartes": the pattern admits fewer sign variations than
    the modulus has positive roots — valid at every degree
    (scope "all-degrees").  reason "linear": the exact feasible region
    for the queried degrees contains no solution (rationally empty, or
    swept completely without an integer point) — scope "query".
    """

    reason: str  # "descartes" | "linear"
    scope: str  # "all-degrees" | "query"
    positive_roots: Optional[int] = None
    max_variations: Optional[int] = None
    note: str = ""


@dataclass(frozen=True)
class ExhaustedCaps:
    note: str = ""


WitnessResult = Union[Witness, InfeasibleProven, ExhaustedCaps]


def pattern_max_variations(kind: PatternKind) -> int:
    """Most coefficient sign variations any pattern-matching product can have.

    Single block of one sign then the distinguished coefficient gives 1;
    an interior negative position splits the nonnegatives, giving 2.
    """
    if isinstance(kind, SingleNegativeAt):
        return 1 if kind.power == 0 else 2
    return 1


def pattern_matches(kind: PatternKind, product) -> bool:
    """Exact sign check of a candidate product against the pattern."""
    cs = product.coeffs
    if not cs:
        return False
    deg = len(cs) - 1
    if isinstance(kind, MonicAtomPattern):
        return (deg == kind.power and cs[-1] == 1
                and all(c <= 0 for c in cs[:-1]))
    if isinstance(kind, StrongPrefixPattern):
        return (deg == kind.degree and cs[-1] > 0
                and all(c <= 0 for c in cs[:-1]))
    if isinstance(kind, SingleNegativeAt):
        k = kind.power
        return (deg <= kind.degree_cap and k <= deg and cs[k] <= -1
                and all(c >= 0 for i, c in enumerate(cs) if i != k))
    if isinstance(kind, UnitRepresentation):
        ok = (deg <= kind.degree_cap and cs[0] <= -1
              and all(c >= 0 for c in cs[1:]))
        if ok and kind.unit_only:
            ok = cs[0] == -1 and sum(cs[1:]) >= 2
        return ok
    raise TypeError(f"unknown pattern kind: {kind!r}")


def descartes_prune(m: IntPoly, kind: PatternKind
                    ) -> Optional[InfeasibleProven]:
    """Infeasibility at every degree, from the rule of signs.

    Any product h is a multiple of m, so h inherits every positive root
    of m (with multiplicity), and sign variations of h bound those roots
    from above.  When the pattern's variation ceiling is below m's
    positive-root count, no matching multiple exists, period.  Absent
    when m has no positive root (nothing to inherit).
    """
    roots = positive_root_count(m, with_multiplicity=True)
    if roots == 0:
        return None
    ceiling = pattern_max_variations(kind)
    if ceiling < roots:
        return InfeasibleProven("descartes", "all-degrees",
                                positive_roots=roots, max_variations=ceiling)
    return None


# --------------------------------------------------------------------------
# Linear system assembly.


def _coeff_form(m: IntPoly, t: int, j: int) -> tuple[Fraction, ...]:
    """Coefficient j of f*m as a linear form in f_0..f_t."""
    mc = m.coeffs
    return tuple(Fraction(mc[j - v]) if 0 <= j - v < len(mc) else Fraction(0)
                 for v in range(t + 1))


def _pattern_rows(m: IntPoly, kind: PatternKind, prod_deg: int) -> list[Row]:
    """Inequality rows (a.f <= b) over multiplier coefficients f_0..f_t."""
    d = m.degree
    t = prod_deg - d
    rows: list[Row] = []

    def le(j, bound):  # h_j <= bound
        rows.append((_coeff_form(m, t, j), Fraction(bound)))

    def ge(j, bound):  # h_j >= bound
        a = _coeff_form(m, t, j)
        rows.append((tuple(-c for c in a), Fraction(-bound)))

    if isinstance(kind, MonicAtomPattern):
        le(prod_deg, 1)
        ge(prod_deg, 1)
        for j in range(prod_deg):
            le(j, 0)
    elif isinstance(kind, StrongPrefixPattern):
        le(prod_deg, -1)
        ge(prod_deg, -1)
        for j in range(prod_deg):
            ge(j, 0)
    elif isinstance(kind, (SingleNegativeAt, UnitRepresentation)):
        k = kind.power if isinstance(kind, SingleNegativeAt) else 0
        le(k, -1)
        ge(k, -1)
        for j in range(prod_deg + 1):
            if j != k:
                ge(j, 0)
        if isinstance(kind, UnitRepresentation) and kind.unit_only:
            # The nonconstant coefficients must sum to at least 2: a sum
            # of 1 is the relation "1 equals a bare power", which only
            # the excluded modulus x - 1 admits, not a decomposition.
            acc = [Fraction(0)] * (t + 1)
            for j in range(1, prod_deg + 1):
                for v, c in enumerate(_coeff_form(m, t, j)):
                    acc[v] += c
            rows.append((tuple(-c for c in acc), Fraction(-2)))
    else:
        raise TypeError(f"unknown pattern kind: {kind!r}")
    return rows


def _probe_degrees(m: IntPoly, kind: PatternKind, caps: Caps) -> list[int]:
    """Product degrees to probe, ascending; [] when none is admissible."""
    d = m.degree
    if isinstance(kind, MonicAtomPattern):
        return [kind.power] if kind.power >= d else []
    if isinstance(kind, StrongPrefixPattern):
        return [kind.degree] if kind.degree >= d else []
    k = kind.power if isinstance(kind, SingleNegativeAt) else 0
    top = min(kind.degree_cap, caps.max_witness_deg)
    return list(range(max(d, k), top + 1))


def _validate(m: IntPoly, kind: PatternKind) -> None:
    if m.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    if m.ord:
        raise ValueError("modulus must not vanish at zero")
    if isinstance(kind, MonicAtomPattern) and m.lead != 1:
        raise ValueError("monic pattern needs a monic modulus")


def _canonical_integer_witness(kind: PatternKind, f: RatPoly,
                               m: IntPoly) -> Witness:
    """Scale a rational solution to the primitive integer witness.

    Valid for the scale-free kinds plus StrongPrefixPattern, whose
    witness is flipped to the positive-leading normal form first.
    """
    if isinstance(kind, StrongPrefixPattern):
        f = -f
    _, fi = f.primitive_part()
    product = fi * m
    w = Witness(fi, product)
    assert pattern_matches(kind, product), (kind, product)
    return w


def rational_feasibility(m: IntPoly, kind: PatternKind,
                         caps: Caps = Caps()) -> WitnessResult:
    """Exact feasibility of the pattern with rational coefficients.

    Probes admissible product degrees in ascending order and returns the
    first witness found.  For the scale-free kinds (and the strong-prefix
    pattern, which is rational by definition) the witness is already the
    canonical integer one; for the integer-pinned kinds the witness is
    the rational relaxation point and only signals that an integer sweep
    is worthwhile.  Infeasibility at all probed degrees is a proof for
    exactly those degrees (scope "query").
    """
    _validate(m, kind)
    degrees = _probe_degrees(m, kind, caps)
    for prod_deg in degrees:
        t = prod_deg - m.degree
        rows = _pattern_rows(m, kind, prod_deg)
        point = feasible_point(rows, t + 1)
        if point is None:
            continue
        f = RatPoly(point)
        if isinstance(kind, (SingleNegativeAt, UnitRepresentation,
                             StrongPrefixPattern)):
            if not (isinstance(kind, UnitRepresentation) and kind.unit_only):
                return _canonical_integer_witness(kind, f, m)
        product = f * m.to_rat()
        assert pattern_matches(kind, product), (kind, product)
        return Witness(f, product)
    return InfeasibleProven(
        "linear", "query",
        note=f"rationally infeasible at product degrees {degrees!r}")


class _NodeBudget:
    __slots__ = ("left",)

    def __init__(self, n: int) -> None:
        self.left = n


def _integer_sweep(rows: list[Row], n_vars: int, caps: Caps,
                   budget: _NodeBudget) -> tuple[Optional[tuple[int, ...]], bool]:
    """Depth-first enumeration of integer points of the feasible region.

    Coordinates are fixed left to right, each running in ascending order
    over the exact projected range of the remaining system, so the first
    solution found is lexicographically smallest.  Returns
    (solution or None, complete); ``complete`` is False when the node
    budget ran out or a range had to be clamped to the coefficient cap,
    in which case a None solution proves nothing.
    """

    def rec(prefix: list[int]) -> tuple[Optional[tuple[int, ...]], bool]:
        level = len(prefix)
        if level == n_vars:
            return tuple(prefix), True
        sub = fix_prefix(rows, n_vars, [Fraction(v) for v in prefix])
        rng = variable_range(sub, n_vars - level, 0)
        if rng is None:
            return None, True
        lo, hi = rng
        complete = True
        lo_i = -caps.max_coeff if lo is None else max(math.ceil(lo),
                                                     -caps.max_coeff)
        hi_i = caps.max_coeff if hi is None else min(math.floor(hi),
                                                    caps.max_coeff)
        if lo is None or math.ceil(lo) < -caps.max_coeff:
            complete = False
        if hi is None or math.floor(hi) > caps.max_coeff:
            complete = False
        if hi_i - lo_i >= budget.left:
            return None, False
        for v in range(lo_i, hi_i + 1):
            budget.left -= 1
            if budget.left <= 0:
                return None, False
            sol, sub_complete = rec(prefix + [v])
            if sol is not None:
                return sol, True
            complete = complete and sub_complete
        return None, complete

    return rec([])


def integer_witness_search(m: IntPoly, kind: PatternKind,
                           caps: Caps = Caps()) -> WitnessResult:
    """Find an integer pattern witness, or prove there is none.

    The strong-prefix kind is inherently rational and is served by
    rational_feasibility; all other kinds are accepted here.  Pipeline:
    Descartes prune (all-degrees proof), rational relaxation, and — for
    the kinds whose constraints do not scale — the exact integer sweep.
    """
    if isinstance(kind, StrongPrefixPattern):
        raise ValueError("strong-prefix queries are rational; "
                         "use rational_feasibility")
    _validate(m, kind)
    pruned = descartes_prune(m, kind)
    if pruned is not None:
        return pruned
    if isinstance(kind, SingleNegativeAt) or (
            isinstance(kind, UnitRepresentation) and not kind.unit_only):
        return rational_feasibility(m, kind, caps)

    # Integer-pinned kinds: per-degree rational check, then the sweep.
    budget = _NodeBudget(caps.max_nodes)
    degrees = _probe_degrees(m, kind, caps)
    all_complete = True
    for prod_deg in degrees:
        t = prod_deg - m.degree
        rows = _pattern_rows(m, kind, prod_deg)
        if feasible_point(rows, t + 1) is None:
            continue
        sol, complete = _integer_sweep(rows, t + 1, caps, budget)
        if sol is not None:
            f = IntPoly(sol)
            product = f * m
            assert pattern_matches(kind, product), (kind, product)
            return Witness(f, product)
        all_complete = all_complete and complete
        if budget.left <= 0:
            all_complete = False
            break
    if all_complete:
        return InfeasibleProven(
            "linear", "query",
            note=f"no integer solution at product degrees {degrees!r}")
    return ExhaustedCaps(note="integer sweep stopped by caps")
