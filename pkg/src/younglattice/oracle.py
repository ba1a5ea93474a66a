"""Brute-force ground truth and exhaustive identity checks.

Each suite compares a formula under test against something computed another
way: tableau counts from the Pascal-type cover recurrence, laws from partial
fractions of corner data.  The formula under test can be swapped out (see
``hook`` and ``context_factory``) so that the suites can be shown to catch a
corrupted formula.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Iterable, Iterator, Sequence

from .diagrams import Partition, RationalLike, as_rational, corners, format_rational
from .interlace import cotransition_dist, transition_dist
from .jack import JackContext, cocovers, covers

DEFAULT_ALPHAS = tuple(Fraction(a) for a in ("1/3", "1/2", "1", "2", "5/2", "3"))
DEFAULT_SP_VALUES = tuple(Fraction(v) for v in ("-2", "-1/2", "0", "1", "3"))
DEFAULT_SP_GRID = tuple(product(DEFAULT_SP_VALUES, repeat=2))


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(Partition(p) for p in _partitions(n, n))


def partitions_up_to(n_max: int) -> Iterator[Partition]:
    for n in range(n_max + 1):
        yield from enumerate_partitions(n)


@lru_cache(maxsize=None)
def _count_syt(lam: Partition) -> int:
    if not lam:
        return 1
    return sum(_count_syt(mu) for mu, _ in cocovers(lam))


def count_syt(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux, from ``dim(Lam) = sum dim(lam)`` over cocovers."""
    return _count_syt(Partition(lam))


@dataclass
class VerificationReport:
    suite: str
    cases: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, **details: Any) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(details)

    def to_dict(self, timing: bool = False) -> dict[str, Any]:
        out: dict[str, Any] = {
            "suite": self.suite,
            "passed": self.passed,
            "cases": self.cases,
            "failures": [_jsonable(f) for f in self.failures],
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 6)
        return out


def _jsonable(value: Any) -> Any:
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, Partition):
        return str(value)
    if isinstance(value, dict):
        return {str(_jsonable(k)): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


class _Timer:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.start = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed = time.perf_counter() - self.start
        return False


ContextFactory = Callable[[Fraction], JackContext]


def verify_hook(n_max: int, hook: Callable[[Partition], Fraction] | None = None) -> VerificationReport:
    """Hook formula against tableau counts, plus the two cover sums
    ``sum_{lam->Lam} dim(Lam) = (n+1) dim(lam)`` and ``sum_{lam->Lam} dim(lam)/dim(Lam) = 1``
    evaluated with the hook formula."""
    hook = hook or JackContext(1).dim_hook
    report = VerificationReport("hook")
    with _Timer(report):
        for lam in partitions_up_to(n_max):
            got, want = hook(lam), count_syt(lam)
            report.record(got == want, check="hook", partition=lam, formula=got, oracle=want)
            if lam.n < n_max:
                up = sum((hook(Lam) for Lam, _ in covers(lam)), Fraction(0))
                report.record(up == (lam.n + 1) * got, check="up-sum", partition=lam,
                              formula=up, oracle=(lam.n + 1) * got)
            if lam:
                down = sum((hook(mu) / got for mu, _ in cocovers(lam)), Fraction(0))
                report.record(down == 1, check="co-transition-sum", partition=lam, formula=down, oracle=1)
    return report


def verify_alpha_hook(n_max: int, alphas: Iterable[RationalLike] = DEFAULT_ALPHAS,
                      context_factory: ContextFactory = JackContext) -> VerificationReport:
    report = VerificationReport("alpha-hook")
    with _Timer(report):
        for alpha in alphas:
            ctx = context_factory(as_rational(alpha))
            for lam in partitions_up_to(n_max):
                rec, hook = ctx.dim_recurrent(lam), ctx.dim_hook(lam)
                report.record(rec == hook, alpha=ctx.alpha, partition=lam, recurrent=rec, hook=hook)
    return report


def summation_sum(ctx: JackContext, lam: Partition, s: Fraction, p: Fraction) -> Fraction:
    """``sum over covers of (c^2 + s c + p) kappa phi(Lam)`` with ``c`` the new box's alpha-content."""
    total = Fraction(0)
    for Lam, (i, j) in covers(lam):
        c = ctx.alpha_content(i, j)
        total += (c * c + s * c + p) * ctx.kappa(lam, Lam) * ctx.phi(Lam)
    return total


def verify_summation(n_max: int, alphas: Iterable[RationalLike] = DEFAULT_ALPHAS,
                     sp_grid: Iterable[tuple[RationalLike, RationalLike]] = DEFAULT_SP_GRID,
                     context_factory: ContextFactory = JackContext) -> VerificationReport:
    sp_grid = [(as_rational(s), as_rational(p)) for s, p in sp_grid]
    report = VerificationReport("summation")
    with _Timer(report):
        for alpha in alphas:
            ctx = context_factory(as_rational(alpha))
            for lam in partitions_up_to(n_max):
                for s, p in sp_grid:
                    lhs = summation_sum(ctx, lam, s, p)
                    rhs = (lam.n * ctx.alpha + p) * ctx.phi(lam)
                    report.record(lhs == rhs, alpha=ctx.alpha, partition=lam, s=s, p=p, lhs=lhs, rhs=rhs)
    return report


def verify_analytic_equals_combinatorial(n_max: int, alphas: Iterable[RationalLike] = DEFAULT_ALPHAS,
                                         context_factory: ContextFactory = JackContext) -> VerificationReport:
    report = VerificationReport("analytic")
    with _Timer(report):
        for alpha in alphas:
            ctx = context_factory(as_rational(alpha))
            for lam in partitions_up_to(n_max):
                pair = corners(lam, ctx.alpha)
                checks = [("transition", ctx.p_alpha, transition_dist)]
                if lam:
                    checks.append(("co-transition", ctx.q_alpha, cotransition_dist))
                for name, combinatorial, analytic in checks:
                    anal = analytic(pair).as_dict()
                    try:
                        comb = combinatorial(lam).as_dict()
                    except ValueError as exc:
                        # weights that are not a probability law
                        comb = str(exc)
                    report.record(comb == anal, check=name, alpha=ctx.alpha, partition=lam,
                                  combinatorial=comb, analytic=anal)
    return report


SUITES = {
    "hook": lambda n_max, alphas, sp_grid: verify_hook(n_max),
    "alpha-hook": lambda n_max, alphas, sp_grid: verify_alpha_hook(n_max, alphas),
    "summation": lambda n_max, alphas, sp_grid: verify_summation(n_max, alphas, sp_grid),
    "analytic": lambda n_max, alphas, sp_grid: verify_analytic_equals_combinatorial(n_max, alphas),
}
