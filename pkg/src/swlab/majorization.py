"""Majorization of alpha-arrays and the induced "smaller world" relation.

Partial sums are taken in natural distance order (distance 1 first), not
after sorting the counts. With that order, ``a`` majorized by ``b`` means
``b`` puts at least as much mass on short distances at every cutoff.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from itertools import accumulate

from .graph import AlphaArray, GraphError


class Verdict(str, enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


def cumulative(a: AlphaArray) -> list[int]:
    return list(accumulate(a.alpha))


def _check_pair(a: AlphaArray, b: AlphaArray) -> None:
    if a.n != b.n:
        raise GraphError(f"node counts differ: {a.n} vs {b.n}")
    if sum(a.alpha) != sum(b.alpha):
        raise GraphError("alpha-arrays have different totals")


def compare(a: AlphaArray, b: AlphaArray) -> Verdict:
    """Majorization verdict of ``a`` relative to ``b``.

    ``Less`` means ``a`` is majorized by ``b``: every partial sum of ``a`` is
    at most the matching partial sum of ``b``, with at least one strict.
    """
    _check_pair(a, b)
    le = ge = True
    for x, y in zip(cumulative(a), cumulative(b)):
        if x < y:
            ge = False
        elif x > y:
            le = False
    if le and ge:
        return Verdict.EQUAL
    if le:
        return Verdict.LESS
    if ge:
        return Verdict.GREATER
    return Verdict.INCOMPARABLE


def lorenz_curve(a: AlphaArray) -> list[tuple[Fraction, Fraction]]:
    """Points ``(k/(n-1), S_k/S_total)`` for ``k = 0..n-1``."""
    if a.n < 2:
        raise GraphError("Lorenz curve needs at least two nodes")
    m = a.n - 1
    total = a.pairs
    points = [(Fraction(0), Fraction(0))]
    points += [(Fraction(k, m), Fraction(s, total)) for k, s in enumerate(cumulative(a), start=1)]
    return points


def curve_dominates(upper, lower) -> bool:
    """True when ``upper`` lies nowhere below ``lower`` at shared breakpoints."""
    if len(upper) != len(lower):
        raise GraphError("curves have different breakpoints")
    return all(yu >= yl for (_, yu), (_, yl) in zip(upper, lower))


def smaller_world_than(x: AlphaArray, y: AlphaArray) -> bool:
    """True when the network with array ``y`` is a strictly smaller world than ``x``."""
    return compare(x, y) is Verdict.LESS
