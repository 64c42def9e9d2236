"""Analytic distance formulas for the deterministic families.

Exact formulas return :class:`fractions.Fraction` (or ``int``/half-integer
floats) and must agree with BFS statistics with zero error; the asymptotic
predictions return floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import AlphaArray, GraphError, median_distance


class OracleDomainError(GraphError):
    pass


@dataclass(frozen=True)
class ChainStats:
    diameter: int
    mean: Fraction
    median_exact: float
    median_approx: float


def _need(n: int, lo: int, what: str) -> None:
    if n < lo:
        raise OracleDomainError(f"{what} needs n >= {lo}, got {n}")


def star_mean(n: int) -> Fraction:
    _need(n, 2, "star_mean")
    return Fraction(2 * (n - 1), n)


def star_median(n: int) -> float:
    _need(n, 2, "star_median")
    if n <= 3:
        return 1.0
    if n == 4:
        return 1.5
    return 2.0


def chain_alpha(n: int) -> AlphaArray:
    """Alpha-array of the n-node path: ``n - k`` pairs at distance ``k``."""
    _need(n, 2, "chain_alpha")
    return AlphaArray(n, tuple(n - k for k in range(1, n)))


def chain_stats(n: int) -> ChainStats:
    _need(n, 2, "chain_stats")
    return ChainStats(
        diameter=n - 1,
        mean=Fraction(n + 1, 3),
        median_exact=median_distance(chain_alpha(n)),
        median_approx=n * (1 - math.sqrt(2) / 2),
    )


def _check_pq(p: int, q: int) -> None:
    if p < 1 or q < 0 or p + q < 2:
        raise OracleDomainError(f"need p >= 1, q >= 0, p + q >= 2; got p={p}, q={q}")


def chain_star_total(p: int, q: int) -> int:
    """Sum of distances over unordered pairs of ``chain_star(p, q)``.

    Leaf-leaf pairs contribute q(q-1), path pairs (p-1)p(p+1)/6 and
    leaf-path pairs pq(p+1)/2.
    """
    _check_pq(p, q)
    return q * (q - 1) + (p - 1) * p * (p + 1) // 6 + p * q * (p + 1) // 2


def chain_star_mean(p: int, q: int) -> Fraction:
    _check_pq(p, q)
    n = p + q
    num = 6 * q * (q - 1) + (p - 1) * p * (p + 1) + 3 * p * q * (p + 1)
    return Fraction(num, 3 * n * (n - 1))


def chain_star_median_bound(p: int, q: int) -> bool:
    """True when distances 1 and 2 form a strict majority, so the median is <= 2."""
    n = p + q
    return 2 * q * (q - 1) > n * (n - 1)


def layered_node_count(sizes) -> int:
    return 1 + sum(sizes)


def layered_diameter(steps: int) -> int:
    if steps < 1:
        raise OracleDomainError(f"steps must be >= 1, got {steps}")
    return 2 * steps


def er_mean_prediction(n: float, z: float) -> float:
    """Asymptotic mean distance ln(n)/ln(z) of a sparse random graph."""
    if n < 2:
        raise OracleDomainError(f"n must be >= 2, got {n}")
    if z <= 1:
        raise OracleDomainError(f"z must exceed 1, got {z}")
    return math.log(n) / math.log(z)


def web_mean_prediction(n: float) -> float:
    """Finite-size-scaling fit 0.35 + 2 log10(n) reported for the 1999 Web."""
    if n < 1:
        raise OracleDomainError(f"n must be >= 1, got {n}")
    return 0.35 + 2 * math.log10(n)
