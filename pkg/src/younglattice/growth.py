"""Central Markov chains on the Young lattice: sampling, level laws, centrality."""

from __future__ import annotations

import random
from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import ceil, prod
from typing import Iterator, Sequence, Union

from .diagrams import Partition, RationalLike, check_alpha, format_rational
from .interlace import DiscreteDist
from .jack import JackContext, ZMeasureError, ZParams, cocovers, new_box
from .oracle import enumerate_partitions

MAX_LEVEL = 30
MAX_CENTRALITY_LEVEL = 7
_RESOLUTION = 128


@lru_cache(maxsize=None)
def jack_context(alpha: Fraction) -> JackContext:
    return JackContext(alpha)


@dataclass(frozen=True)
class PlancherelAlpha:
    alpha: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_alpha(self.alpha))

    @property
    def ctx(self) -> JackContext:
        return jack_context(self.alpha)

    def describe(self) -> dict:
        return {"variant": "plancherel", "alpha": format_rational(self.alpha)}


@dataclass(frozen=True)
class ZMeasure:
    alpha: Fraction
    s: Fraction
    p: Fraction

    def __init__(self, alpha: RationalLike, s: RationalLike, p: RationalLike):
        z = ZParams(s, p)
        object.__setattr__(self, "alpha", check_alpha(alpha))
        object.__setattr__(self, "s", z.s)
        object.__setattr__(self, "p", z.p)

    @property
    def ctx(self) -> JackContext:
        return jack_context(self.alpha)

    @property
    def params(self) -> ZParams:
        return ZParams(self.s, self.p)

    def describe(self) -> dict:
        return {"variant": "z-measure", "alpha": format_rational(self.alpha),
                "s": format_rational(self.s), "p": format_rational(self.p)}


ChainSpec = Union[PlancherelAlpha, ZMeasure]


@lru_cache(maxsize=100_000)
def step_dist(chain: ChainSpec, lam: Partition) -> DiscreteDist:
    """One-step law from ``lam``; atoms are labelled by the covering diagram."""
    lam = Partition(lam)
    if isinstance(chain, ZMeasure):
        return chain.ctx.p_z(chain.params, lam)
    return chain.ctx.p_alpha(lam)


@dataclass(frozen=True)
class GrowthPath:
    """Saturated chain ∅ = λ⁰ ↗ λ¹ ↗ … ↗ λⁿ, i.e. a standard tableau."""

    diagrams: tuple[Partition, ...]

    def __post_init__(self):
        diagrams = tuple(Partition(lam) for lam in self.diagrams)
        if not diagrams or diagrams[0] != ():
            raise ValueError("a growth path starts at the empty diagram")
        for lam, Lam in zip(diagrams, diagrams[1:]):
            new_box(lam, Lam)
        object.__setattr__(self, "diagrams", diagrams)

    @property
    def n(self) -> int:
        return len(self.diagrams) - 1

    @property
    def shape(self) -> Partition:
        return self.diagrams[-1]

    def tableau(self) -> list[list[int]]:
        rows: list[list[int]] = []
        for step, (lam, Lam) in enumerate(zip(self.diagrams, self.diagrams[1:]), 1):
            i, _ = new_box(lam, Lam)
            if i > len(rows):
                rows.append([])
            rows[i - 1].append(step)
        return rows


class GrowthSampler:
    """Draws growth paths with a private RNG seeded by a 64-bit integer.

    Each step draws a uniform 128-bit dyadic ``r / 2**128`` and picks the first
    atom whose exact cumulative weight exceeds it.
    """

    def __init__(self, chain: ChainSpec, seed: int):
        self.chain = chain
        self.rng = random.Random(seed)
        self._tables: dict[Partition, tuple[list[int], list[Partition]]] = {}

    def _table(self, lam: Partition) -> tuple[list[int], list[Partition]]:
        table = self._tables.get(lam)
        if table is None:
            dist = step_dist(self.chain, lam)
            # r < F * 2**128 iff r < ceil(F * 2**128) for integer r
            cum, thresholds = Fraction(0), []
            for w in dist.weights:
                cum += w
                thresholds.append(ceil(cum * 2 ** _RESOLUTION))
            table = self._tables[lam] = (thresholds, [a.label for a in dist.atoms])
        return table

    def step(self, lam: Partition) -> Partition:
        thresholds, targets = self._table(lam)
        r = self.rng.getrandbits(_RESOLUTION)
        return targets[bisect_right(thresholds, r)]

    def path(self, n: int) -> GrowthPath:
        if n < 0:
            raise ValueError("path length must be non-negative")
        lam = Partition(())
        diagrams = [lam]
        for _ in range(n):
            lam = self.step(lam)
            diagrams.append(lam)
        return GrowthPath(tuple(diagrams))


def sample_path(chain: ChainSpec, n: int, seed: int) -> GrowthPath:
    return GrowthSampler(chain, seed).path(n)


def sample_paths(chain: ChainSpec, n: int, count: int, seed: int) -> list[GrowthPath]:
    sampler = GrowthSampler(chain, seed)
    return [sampler.path(n) for _ in range(count)]


@dataclass(frozen=True)
class LevelDist:
    n: int
    weights: dict[Partition, Fraction]


def level_distributions(chain: ChainSpec, n: int) -> list[LevelDist]:
    """Exact laws of levels 0..n by pushing mass forward one level at a time."""
    if not 0 <= n <= MAX_LEVEL:
        raise ValueError(f"level must be in [0, {MAX_LEVEL}], got {n}")
    current = {Partition(()): Fraction(1)}
    levels = [LevelDist(0, current)]
    for k in range(1, n + 1):
        nxt: dict[Partition, Fraction] = {}
        for lam, mass in current.items():
            for atom in step_dist(chain, lam).atoms:
                nxt[atom.label] = nxt.get(atom.label, Fraction(0)) + mass * atom.weight
        current = dict(sorted(nxt.items(), reverse=True))
        levels.append(LevelDist(k, current))
    return levels


def level_distribution(chain: ChainSpec, n: int) -> LevelDist:
    return level_distributions(chain, n)[-1]


def path_probability(chain: ChainSpec, path: GrowthPath | Sequence[Sequence[int]]) -> Fraction:
    if not isinstance(path, GrowthPath):
        path = GrowthPath(tuple(path))
    out = Fraction(1)
    for lam, Lam in zip(path.diagrams, path.diagrams[1:]):
        out *= step_dist(chain, lam).by_label()[Lam]
    return out


def kappa_product(chain: ChainSpec, path: GrowthPath) -> Fraction:
    ctx = chain.ctx
    return prod((ctx.kappa(lam, Lam) for lam, Lam in zip(path.diagrams, path.diagrams[1:])),
                start=Fraction(1))


def central_value(chain: ChainSpec, Lam: Sequence[int]) -> Fraction:
    """Closed form of ``path_probability / prod(kappa)`` for any path ending at ``Lam``."""
    Lam = Partition(Lam)
    ctx = chain.ctx
    value = ctx.phi(Lam)
    if isinstance(chain, ZMeasure):
        z = chain.params
        for i, j in Lam.boxes():
            value *= z.factor(ctx.alpha_content(i, j))
        for k in range(Lam.n):
            value /= z.p + k * chain.alpha
    return value


def iter_paths(Lam: Partition) -> Iterator[GrowthPath]:
    """All saturated chains from ∅ to ``Lam``."""
    def walk(top: Partition) -> Iterator[tuple[Partition, ...]]:
        if not top:
            yield (top,)
            return
        for lam, _ in cocovers(top):
            for head in walk(lam):
                yield head + (top,)

    for diagrams in walk(Partition(Lam)):
        yield GrowthPath(diagrams)


@dataclass
class CentralityEntry:
    shape: Partition
    paths: int
    value: Fraction | None
    expected: Fraction | None
    cotransitions_ok: bool
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.value == self.expected and self.cotransitions_ok


@dataclass
class CentralityReport:
    chain: ChainSpec
    n_max: int
    entries: list[CentralityEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list[CentralityEntry]:
        return [e for e in self.entries if not e.ok]


def centrality_check(chain: ChainSpec, n_max: int) -> CentralityReport:
    """Check path independence of ``P(path) / prod(kappa)`` for every ``|Lam| <= n_max``,
    and that the chain's co-transitions are ``kappa dim(lam) / dim(Lam)``."""
    if not 0 <= n_max <= MAX_CENTRALITY_LEVEL:
        raise ValueError(f"n_max must be in [0, {MAX_CENTRALITY_LEVEL}]")
    report = CentralityReport(chain, n_max)
    try:
        levels = [lev.weights for lev in level_distributions(chain, n_max)]
    except ZMeasureError:
        levels = None
    for n in range(n_max + 1):
        for Lam in enumerate_partitions(n):
            try:
                values = {path_probability(chain, t) / kappa_product(chain, t) for t in iter_paths(Lam)}
            except ZMeasureError as exc:
                report.entries.append(CentralityEntry(Lam, 0, None, None, False, str(exc)))
                continue
            npaths = sum(1 for _ in iter_paths(Lam))
            expected = central_value(chain, Lam)
            value = values.pop() if len(values) == 1 else None
            report.entries.append(CentralityEntry(
                Lam, npaths, value, expected,
                cotransitions_ok=levels is not None and _cotransitions_match(chain, levels, Lam),
                error=None if value is not None else "path-dependent probabilities",
            ))
    return report


def _cotransitions_match(chain: ChainSpec, levels: list[dict[Partition, Fraction]], Lam: Partition) -> bool:
    if not Lam:
        return True
    n = Lam.n
    top = levels[n][Lam]
    observed = {
        lam: levels[n - 1][lam] * step_dist(chain, lam).by_label()[Lam] / top
        for lam, _ in cocovers(Lam)
    }
    return observed == chain.ctx.q_alpha(Lam).by_label()


def total_variation(p: dict, q: dict) -> Fraction:
    keys = set(p) | set(q)
    return sum((abs(Fraction(p.get(k, 0)) - Fraction(q.get(k, 0))) for k in keys), Fraction(0)) / 2
