"""Brute-force enumeration oracle for small instances.

An independent second route to the same questions the search engine
answers, used to cross-check it.  Elements of the monoid generated by
the nonnegative-coefficient values of a positive algebraic number are
represented exactly: reducing a polynomial modulo the (monic) modulus
gives integer coordinates in the power basis 1, alpha, ..., alpha^(d-1),
and two polynomials name the same element exactly when their reduced
coordinates agree.

``enumerate_factorizations`` lists every way to write a target element
as a multiset of generator powers (bounded exponent, bounded multiset
size), by exact depth-first search over coordinate vectors.  Real-value
interval arithmetic — powers bracketed with exact rational endpoints
from a refined isolating interval — only prunes branches that provably
cannot reach the target; it never decides membership, so the pruned and
unpruned routes return identical lists.

``strong_check_oracle`` uses that enumeration to test whether small
multiples of a power admit any representation other than the trivial
one.  Interpreting a hit as a genuine second factorization is only
valid when the powers it uses are atoms; callers restrict the power
alphabet accordingly via ``allowed_powers``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .polycore import IntPoly, divmod_rat
from .rootcount import RootInterval, isolate_positive_roots

__all__ = [
    "OracleCaps",
    "MonoidElement",
    "FactorizationMultiset",
    "reduce_element",
    "enumerate_factorizations",
    "StrongUpTo",
    "NonStrong",
    "strong_check_oracle",
]


@dataclass(frozen=True)
class OracleCaps:
    """Enumeration bounds: largest exponent and largest multiset size."""

    max_power: int = 8
    max_total: int = 12

    def __post_init__(self) -> None:
        if self.max_power < 0 or self.max_total < 1:
            raise ValueError("need max_power >= 0 and max_total >= 1")


@dataclass(frozen=True)
class MonoidElement:
    """Exact power-basis coordinates of an element (modulus implied)."""

    coords: tuple[int, ...]
    value_interval: Optional[tuple[Fraction, Fraction]] = field(
        default=None, compare=False)


@dataclass(frozen=True)
class FactorizationMultiset:
    """A multiset of generator exponents, stored ascending."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if tuple(sorted(self.exponents)) != self.exponents:
            raise ValueError("exponents must be sorted ascending")

    @property
    def size(self) -> int:
        return len(self.exponents)


def _require_monic(m: IntPoly) -> None:
    if m.degree < 1 or m.lead != 1:
        raise ValueError(
            "the oracle requires a monic modulus of degree >= 1 "
            "(power-basis coordinates are only integral then)")


def _reduce_poly(p: IntPoly, m: IntPoly) -> tuple[int, ...]:
    _, r = divmod_rat(p.to_rat(), m.to_rat())
    ri = r.to_int()
    cs = list(ri.coeffs) + [0] * (m.degree - len(ri.coeffs))
    return tuple(cs)


def reduce_element(p: IntPoly, m: IntPoly) -> MonoidElement:
    """Canonical coordinates of p's value in the power basis."""
    _require_monic(m)
    return MonoidElement(_reduce_poly(p, m))


class _Context:
    """Deduplicated power alphabet with disjoint exact value brackets."""

    def __init__(self, m: IntPoly, max_power: int,
                 allowed_powers: Optional[Iterable[int]]) -> None:
        _require_monic(m)
        self.m = m
        self.dim = m.degree
        roots = isolate_positive_roots(m)
        if not roots:
            raise ValueError(f"{m} has no positive real root")
        allowed = (set(range(max_power + 1)) if allowed_powers is None
                   else {e for e in allowed_powers if 0 <= e <= max_power})
        coords: dict[int, tuple[int, ...]] = {}
        cur = IntPoly.one()
        for e in range(max_power + 1):
            if e in allowed:
                coords[e] = _reduce_poly(cur, m)
            cur = cur.shifted(1)
        # Powers with equal coordinates are the same element; keep the
        # smallest exponent for each.
        smallest: dict[tuple[int, ...], int] = {}
        for e in sorted(coords):
            smallest.setdefault(coords[e], e)
        self.exponents = sorted(smallest.values())
        self.coords = {e: coords[e] for e in self.exponents}
        self._bracket_powers(roots[-1])

    def _bracket_powers(self, interval: RootInterval) -> None:
        """Refine until power brackets are pairwise disjoint.

        Distinct elements have distinct real values (the value map is
        injective on elements), so refinement terminates.
        """
        lo, hi = interval.lo, interval.hi
        for _ in range(2000):
            if lo > 0 and (hi - lo) * (1 << 20) < lo:
                brackets = {e: (lo ** e, hi ** e) for e in self.exponents}
                order = sorted(self.exponents,
                               key=lambda e: brackets[e][1], reverse=True)
                if all(brackets[order[i]][0] > brackets[order[i + 1]][1]
                       for i in range(len(order) - 1)):
                    self.order = order
                    self.brackets = brackets
                    self.basis = [(lo ** i, hi ** i) for i in range(self.dim)]
                    return
            interval = interval.refined(interval.width / 2)
            lo, hi = interval.lo, interval.hi
        raise RuntimeError(
            "could not separate power values")  # pragma: no cover

    def value_bounds(self, coords: Sequence[int]) -> tuple[Fraction, Fraction]:
        lo = Fraction(0)
        hi = Fraction(0)
        for c, (blo, bhi) in zip(coords, self.basis):
            if c >= 0:
                lo += c * blo
                hi += c * bhi
            else:
                lo += c * bhi
                hi += c * blo
        return lo, hi


def enumerate_factorizations(target: Union[MonoidElement, IntPoly],
                             m: IntPoly, caps: OracleCaps = OracleCaps(),
                             *, use_pruning: bool = True,
                             allowed_powers: Optional[Iterable[int]] = None
                             ) -> tuple[FactorizationMultiset, ...]:
    """All multisets of powers (from the allowed alphabet, at most
    max_total of them) whose values sum to the target element.

    Exact: a multiset is reported iff its coordinate sum equals the
    target's coordinates.  With pruning, branches whose value brackets
    exclude the target are skipped; this cannot change the result set.
    Output is canonical: exponent tuples ascending, the list sorted.
    """
    ctx = _Context(m, caps.max_power, allowed_powers)
    if isinstance(target, IntPoly):
        target = reduce_element(target, m)
    if len(target.coords) != ctx.dim:
        raise ValueError(
            f"target has {len(target.coords)} coordinates; expected "
            f"{ctx.dim}")
    order = ctx.order
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def go(idx: int, rem: tuple[int, ...], budget: int) -> None:
        if idx == len(order):
            if not any(rem):
                found.append(tuple(sorted(chosen)))
            return
        e = order[idx]
        c_max = budget
        if use_pruning:
            rlo, rhi = ctx.value_bounds(rem)
            if rhi < 0:
                return
            # order is descending by value, so e is the largest power
            # still available; budget copies of it bound the reachable sum.
            if budget * ctx.brackets[e][1] < rlo:
                return
            c_max = min(c_max, int(rhi // ctx.brackets[e][0]))
        pc = ctx.coords[e]
        go(idx + 1, rem, budget)
        cur = rem
        pushed = 0
        for c in range(1, c_max + 1):
            cur = tuple(r - p for r, p in zip(cur, pc))
            chosen.append(e)
            pushed += 1
            go(idx + 1, cur, budget - c)
        if pushed:
            del chosen[-pushed:]

    go(0, target.coords, caps.max_total)
    return tuple(FactorizationMultiset(f) for f in sorted(found))


@dataclass(frozen=True)
class StrongUpTo:
    """No alternative representation found for any multiple up to n_max."""

    n_max: int


@dataclass(frozen=True)
class NonStrong:
    """Some multiple of the power has a second representation."""

    n: int
    factorization: FactorizationMultiset


def strong_check_oracle(k: int, m: IntPoly, n_max: int,
                        caps: OracleCaps = OracleCaps(), *,
                        use_pruning: bool = True,
                        allowed_powers: Optional[Iterable[int]] = None
                        ) -> Union[StrongUpTo, NonStrong]:
    """Search n = 2..n_max for a representation of n * alpha^k other
    than n copies of alpha^k, over the allowed power alphabet.

    Only meaningful as a strong-atom refutation when every allowed
    power is an atom; the caller is responsible for that restriction.
    """
    if k < 0 or k > caps.max_power:
        raise ValueError("need 0 <= k <= caps.max_power")
    if n_max < 2:
        raise ValueError("need n_max >= 2")
    _require_monic(m)
    for n in range(2, n_max + 1):
        target = IntPoly.monomial(n, k)
        facts = enumerate_factorizations(
            target, m, caps, use_pruning=use_pruning,
            allowed_powers=allowed_powers)
        trivial = tuple([k] * n)
        for f in facts:
            if f.exponents != trivial:
                return NonStrong(n, f)
    return StrongUpTo(n_max)
