"""Empirical small-world classification of growing network families.

A family is measured over an increasing size schedule. For each statistic
(diameter, average, median) the ratio ``stat / ln N`` is tracked; whether it
tends to a positive constant, to zero, or to infinity is judged from the
last few schedule points.

Window policy (all thresholds live in :class:`Policy`):

* NotSmall: the ratio increases strictly across the window and the last
  ratio exceeds the first ratio of the series by ``div_factor``.
* growth exponent ``e``: least-squares slope of ``ln stat`` against
  ``ln ln N`` over the window. A statistic growing like ``C ln N`` has
  ``e`` near 1; a bounded one has ``e`` near 0.
* UltraSmall: ``e <= zero_exponent``.
* Small(C): ``small_exponent[0] <= e <= small_exponent[1]`` and the window
  ratios agree within ``tol_conv``. ``C`` is the least-squares slope of
  ``stat`` against ``ln N`` over the window.
* anything else is Inconclusive.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from . import generators as gen
from .graph import DistanceSummary, Graph, GraphError, summary


class ClassificationError(GraphError):
    pass


class Stat(str, enum.Enum):
    DIAMETER = "diameter"
    AVERAGE = "average"
    MEDIAN = "median"

    @classmethod
    def parse(cls, text: str) -> "Stat":
        aliases = {"diam": cls.DIAMETER, "d": cls.DIAMETER, "avg": cls.AVERAGE,
                   "mean": cls.AVERAGE, "med": cls.MEDIAN, "md": cls.MEDIAN}
        key = text.lower()
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise ClassificationError(f"unknown statistic {text!r}") from None


class Verdict(str, enum.Enum):
    ULTRA_SMALL = "UltraSmall"
    SMALL = "Small"
    NOT_SMALL = "NotSmall"
    INCONCLUSIVE = "Inconclusive"

    @property
    def is_small(self) -> bool:
        return self in (Verdict.ULTRA_SMALL, Verdict.SMALL)


FAMILIES = (
    "complete",
    "star",
    "chain",
    "chain_star_sqrt",
    "chain_star_quarter",
    "erdos_renyi",
    "barabasi_albert",
    "layered",
)
RANDOM_FAMILIES = ("erdos_renyi", "barabasi_albert")


@dataclass(frozen=True)
class FamilySpec:
    """A generator family plus its size schedule.

    ``sizes`` are target node counts, except for ``layered`` where they are
    step counts (the node count follows from the layer sequence).
    """

    family: str
    sizes: tuple[int, ...]
    seeds: tuple[int, ...] = (0,)
    z: float = 6.0
    v: int = 3
    m: int = 2
    layers: gen.LayeredSpec | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ClassificationError(f"unknown family {self.family!r}")
        sizes = tuple(int(s) for s in self.sizes)
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "seeds", tuple(int(s) for s in self.seeds))
        if len(sizes) < 4:
            raise ClassificationError(f"need at least 4 sizes, got {len(sizes)}")
        if any(b <= a for a, b in zip(sizes, sizes[1:])):
            raise ClassificationError(f"sizes must be strictly increasing: {sizes}")
        if self.is_random and len(self.seeds) < 2:
            raise ClassificationError("random families need at least 2 seeds")
        if self.family == "layered" and self.layers is None:
            raise ClassificationError("layered family needs a LayeredSpec")

    @property
    def is_random(self) -> bool:
        return self.family in RANDOM_FAMILIES

    @property
    def label(self) -> str:
        if self.family == "layered":
            return f"layered[{self.layers.kind}:{self.layers.param}]"
        return self.family

    def build(self, size: int, seed: int = 0) -> Graph:
        f = self.family
        if f == "complete":
            return gen.complete(size)
        if f == "star":
            return gen.star(size)
        if f == "chain":
            return gen.chain(size)
        if f == "chain_star_sqrt":
            p = math.isqrt(size)
            return gen.chain_star(p, size - p)
        if f == "chain_star_quarter":
            p = max(1, size // 4)
            return gen.chain_star(p, size - p)
        if f == "erdos_renyi":
            return gen.erdos_renyi(size, self.z, seed).graph
        if f == "barabasi_albert":
            return gen.barabasi_albert(self.v, self.m, size - self.v, seed)
        return gen.layered(self.layers.with_steps(size))

    def params(self) -> dict:
        out = {}
        if self.family == "erdos_renyi":
            out["z"] = self.z
        if self.family == "barabasi_albert":
            out.update(v=self.v, m=self.m)
        if self.family == "layered":
            out.update(kind=self.layers.kind, param=self.layers.param)
            if self.layers.kind == "explicit":
                out["values"] = list(self.layers.values)
        return out


def geometric_sizes(start: int, count: int, factor: int = 2) -> tuple[int, ...]:
    return tuple(start * factor ** k for k in range(count))


def default_family(name: str, seeds: Sequence[int] | None = None) -> FamilySpec:
    """Built-in schedule for each family, sized for desk-scale runs."""
    if name == "complete":
        return FamilySpec(name, geometric_sizes(16, 6))
    if name in ("star", "chain", "chain_star_quarter"):
        return FamilySpec(name, geometric_sizes(16, 9))
    if name == "chain_star_sqrt":
        return FamilySpec(name, geometric_sizes(16, 10))
    if name == "erdos_renyi":
        return FamilySpec(name, geometric_sizes(1024, 4), tuple(seeds or range(4)), z=6.0)
    if name == "barabasi_albert":
        return FamilySpec(name, geometric_sizes(250, 5), tuple(seeds or range(8)), v=3, m=2)
    raise ClassificationError(f"no default schedule for {name!r}")


def default_layered(kind: str) -> FamilySpec:
    if kind == "geometric":
        return FamilySpec("layered", tuple(range(3, 13)), layers=gen.LayeredSpec("geometric", 1, 2))
    if kind == "constant":
        return FamilySpec("layered", geometric_sizes(2, 11), layers=gen.LayeredSpec("constant", 1, 2))
    if kind == "polynomial":
        return FamilySpec("layered", geometric_sizes(2, 5), layers=gen.LayeredSpec("polynomial", 1, 2))
    raise ClassificationError(f"no default layered schedule for {kind!r}")


def builtin_families() -> list[FamilySpec]:
    names = ["complete", "star", "chain", "chain_star_sqrt", "chain_star_quarter",
             "erdos_renyi", "barabasi_albert"]
    return [default_family(n) for n in names] + [
        default_layered(k) for k in ("geometric", "constant", "polynomial")
    ]


@dataclass
class Measurements:
    """Distance summaries per schedule size, one per seed."""

    spec: FamilySpec
    summaries: list[list[DistanceSummary]]


def measure(spec: FamilySpec, progress: Callable[[int, int], None] | None = None) -> Measurements:
    seeds = spec.seeds if spec.is_random else spec.seeds[:1]
    rows = []
    for size in spec.sizes:
        row = []
        for seed in seeds:
            try:
                g = spec.build(size, seed)
                row.append(summary(g))
            except GraphError as exc:
                raise ClassificationError(f"generation failed at size {size}: {exc}") from exc
            if progress:
                progress(size, seed)
        rows.append(row)
    return Measurements(spec, rows)


def _stat_value(s: DistanceSummary, stat: Stat) -> float:
    if stat is Stat.DIAMETER:
        return float(s.diameter)
    if stat is Stat.AVERAGE:
        return float(s.mean)
    return float(s.median)


@dataclass(frozen=True)
class SeriesPoint:
    target: int
    n: float
    stat: float
    ratio: float
    ratio_min: float
    ratio_max: float


@dataclass(frozen=True)
class RatioSeries:
    stat: Stat
    points: tuple[SeriesPoint, ...]


def ratio_series(spec: FamilySpec, stat: Stat | str,
                 measurements: Measurements | None = None) -> RatioSeries:
    """``stat / ln N`` at each schedule size, averaged over seeds.

    The realized node count (giant component for random graphs) enters
    ``ln N``; ``n`` and ``stat`` of a point are seed means.
    """
    stat = Stat.parse(stat) if isinstance(stat, str) else stat
    meas = measurements or measure(spec)
    points = []
    for target, row in zip(spec.sizes, meas.summaries):
        if any(s.n < 2 for s in row):
            raise ClassificationError(f"size {target} realized fewer than 2 nodes")
        ratios = [_stat_value(s, stat) / math.log(s.n) for s in row]
        points.append(SeriesPoint(
            target=target,
            n=float(np.mean([s.n for s in row])),
            stat=float(np.mean([_stat_value(s, stat) for s in row])),
            ratio=float(np.mean(ratios)),
            ratio_min=min(ratios),
            ratio_max=max(ratios),
        ))
    return RatioSeries(stat, tuple(points))


@dataclass(frozen=True)
class Policy:
    window: int = 4
    zero_exponent: float = 0.35
    small_exponent: tuple[float, float] = (0.6, 1.5)
    tol_conv: float = 0.25
    div_factor: float = 3.0


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    c_estimate: float | None
    evidence: dict = field(default_factory=dict)


def _slope(x: Sequence[float], y: Sequence[float]) -> float:
    return float(np.polyfit(np.asarray(x, dtype=float), np.asarray(y, dtype=float), 1)[0])


def classify(series: RatioSeries, policy: Policy = Policy()) -> Classification:
    pts = series.points
    if len(pts) < max(4, policy.window):
        raise ClassificationError(f"need at least {max(4, policy.window)} points, got {len(pts)}")
    win = pts[-policy.window:]
    ratios = [p.ratio for p in win]
    log_n = [math.log(p.n) for p in win]
    exponent = _slope([math.log(x) for x in log_n], [math.log(p.stat) for p in win])
    slope = _slope(log_n, [p.stat for p in win])
    mean_ratio = float(np.mean(ratios))
    spread = (max(ratios) - min(ratios)) / mean_ratio
    increasing = all(b > a for a, b in zip(ratios, ratios[1:]))
    growth = pts[-1].ratio / pts[0].ratio
    evidence = {
        "window_ratios": ratios,
        "growth_exponent": exponent,
        "log_slope": slope,
        "relative_spread": spread,
        "ratio_increasing": increasing,
        "series_growth": growth,
    }
    if increasing and growth > policy.div_factor:
        return Classification(Verdict.NOT_SMALL, None, evidence)
    if exponent <= policy.zero_exponent:
        return Classification(Verdict.ULTRA_SMALL, 0.0, evidence)
    lo, hi = policy.small_exponent
    if lo <= exponent <= hi and spread < policy.tol_conv:
        return Classification(Verdict.SMALL, slope, evidence)
    return Classification(Verdict.INCONCLUSIVE, None, evidence)


def swd_criterion_layered(
    a_seq: Callable[[int], int] | gen.LayeredSpec,
    n_max: int = 256,
    b_grid: Iterable[float] | None = None,
    epsilon: float = 0.01,
) -> tuple[bool, float | None]:
    """Tail test for exponential growth of layered node counts.

    Looks for the largest ``b`` in ``b_grid`` with
    ``b**n <= (1 + epsilon) * N_n`` for every ``n`` in ``[n_max/2, n_max]``,
    where ``N_n = 1 + a_1 + ... + a_n``. Compared in the log domain;
    ``N_n`` is an exact integer.
    """
    if n_max < 8:
        raise ClassificationError(f"n_max must be >= 8, got {n_max}")
    if epsilon <= 0:
        raise ClassificationError("epsilon must be positive")
    grid = sorted(b_grid if b_grid is not None else np.arange(1.25, 4.01, 0.25).tolist())
    if any(b <= 1 for b in grid):
        raise ClassificationError("grid values must exceed 1")
    term = a_seq.term if isinstance(a_seq, gen.LayeredSpec) else a_seq
    totals = [1]
    for i in range(1, n_max + 1):
        totals.append(totals[-1] + int(term(i)))
    tail = range(n_max // 2, n_max + 1)
    log_totals = {n: math.log(totals[n]) for n in tail}
    slack = math.log1p(epsilon)
    witness = None
    for b in grid:
        lb = math.log(b)
        if all(n * lb - log_totals[n] <= slack for n in tail):
            witness = b
    return witness is not None, witness


@dataclass
class HierarchyReport:
    family: str
    verdicts: dict[str, str]
    violations: list[str]
    warnings: list[str]

    @property
    def consistent(self) -> bool:
        return not self.violations


_IMPLICATIONS = ((Stat.DIAMETER, Stat.AVERAGE), (Stat.AVERAGE, Stat.MEDIAN),
                 (Stat.DIAMETER, Stat.MEDIAN))


def hierarchy_check(spec: FamilySpec, policy: Policy = Policy(),
                    measurements: Measurements | None = None) -> HierarchyReport:
    """Check diameter-small => average-small => median-small on one family."""
    meas = measurements or measure(spec)
    verdicts = {s: classify(ratio_series(spec, s, meas), policy).verdict for s in Stat}
    return check_verdicts(spec.label, verdicts)


def check_verdicts(label: str, verdicts: dict[Stat, Verdict]) -> HierarchyReport:
    violations, warnings = [], []
    for hi, lo in _IMPLICATIONS:
        a, b = verdicts[hi], verdicts[lo]
        if Verdict.INCONCLUSIVE in (a, b):
            warnings.append(f"{hi.value} => {lo.value} not checked ({a.value}, {b.value})")
        elif a.is_small and not b.is_small:
            violations.append(f"{hi.value} is {a.value} but {lo.value} is {b.value}")
    return HierarchyReport(label, {s.value: v.value for s, v in verdicts.items()},
                           violations, warnings)


def report(spec: FamilySpec, stat: Stat, series: RatioSeries, result: Classification,
           policy: Policy) -> dict:
    """JSON-ready classification report."""
    return {
        "family": spec.label,
        "params": spec.params(),
        "stat": stat.value,
        "points": [asdict(p) for p in series.points],
        "verdict": result.verdict.value,
        "C_estimate": result.c_estimate,
        "evidence": result.evidence,
        "policy": asdict(policy),
    }
