"""Acceptance criteria, one test each.

Every test stores ``(passed, detail)`` under its criterion id in ``RESULTS``;
the terminal summary hook in ``conftest.py`` prints one PASS/FAIL line per
criterion at the end of the run.
"""

import random
import subprocess
import sys
import time
from fractions import Fraction
from math import factorial

from younglattice.diagrams import InterlacingPair, corners
from younglattice.growth import PlancherelAlpha, ZMeasure, centrality_check, level_distribution, sample_paths, \
    total_variation
from younglattice.interlace import check_interlacing_by_positivity, moments_by_series, moments_by_sum
from younglattice.jack import JackContext, new_box
from younglattice.oracle import (
    DEFAULT_ALPHAS,
    DEFAULT_SP_GRID,
    count_syt,
    enumerate_partitions,
    partitions_up_to,
    verify_alpha_hook,
    verify_analytic_equals_combinatorial,
    verify_hook,
    verify_summation,
)

F = Fraction
RESULTS = {}

SEED = 20240611


def record(key, ok, detail):
    RESULTS[key] = (bool(ok), detail)
    assert ok, f"{key}: {detail}"


def timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def random_rationals(rng, count):
    """``count`` distinct rationals with small numerators and denominators."""
    values = set()
    while len(values) < count:
        values.add(F(rng.randint(-60, 60), rng.randint(1, 6)))
    return list(values)


class AsPrintedKappa(JackContext):
    """Edge multiplicity with ``(a alpha + l + 1)`` where the correct form has ``((a + 1) alpha + l)``."""

    def kappa(self, lam, Lam):
        _, j = new_box(lam, Lam)
        lam = tuple(lam)
        height = sum(1 for part in lam if part >= j)
        out = F(1)
        for r in range(1, height + 1):
            a_, l_ = lam[r - 1] - j, height - r
            x = a_ * self.alpha + l_
            out *= (x + 2) * (x + 1) / (((a_ + 1) * self.alpha + l_ + 1) * (x + 1))
        return out


def test_ac1_hook_formula():
    report, elapsed = timed(verify_hook, 8)
    count = len(list(partitions_up_to(8)))
    ok = report.passed and count == 67 and elapsed < 5
    record("AC1", ok, f"{report.cases} checks over {count} partitions |lam|<=8, "
                      f"{len(report.failures)} failures, {elapsed:.2f}s (limit 5s)")


def test_ac2_alpha_hook_formula():
    report, elapsed = timed(verify_alpha_hook, 8, DEFAULT_ALPHAS)
    printed = verify_alpha_hook(8, DEFAULT_ALPHAS, context_factory=AsPrintedKappa)
    ok = report.passed and not printed.passed and elapsed < 30
    record("AC2", ok, f"corrected kappa: {report.cases} cases, {len(report.failures)} failures, {elapsed:.2f}s "
                      f"(limit 30s); as-printed kappa: {len(printed.failures)} failures (must be > 0)")


def test_ac3_analytic_equals_combinatorial():
    report, elapsed = timed(verify_analytic_equals_combinatorial, 8, DEFAULT_ALPHAS)
    record("AC3", report.passed, f"{report.cases} distribution comparisons, "
                                 f"{len(report.failures)} failures, {elapsed:.2f}s")


def test_ac4_moments():
    bad_low = []
    for alpha in DEFAULT_ALPHAS:
        for lam in partitions_up_to(10):
            h = moments_by_sum(corners(lam, alpha), 2)
            if not (h[1] == 0 and h[2] == alpha * lam.n):
                bad_low.append((alpha, lam))
    rng = random.Random(SEED)
    bad_series = 0
    for _ in range(1000):
        d = rng.randint(1, 8)
        pts = sorted(random_rationals(rng, 2 * d - 1))
        pair = InterlacingPair(pts[0::2], pts[1::2])
        if moments_by_sum(pair, 6) != moments_by_series(pair, 6):
            bad_series += 1
    record("AC4", not bad_low and bad_series == 0,
           f"h1=0, h2=alpha*n failures: {len(bad_low)}; sum-vs-series mismatches on 1000 pairs: {bad_series}")


def interlaces(xs, ys):
    tagged = sorted([(v, 0) for v in xs] + [(v, 1) for v in ys])
    return [t for _, t in tagged] == [0, 1] * len(ys) + [0]


def test_ac5_positivity_iff_interlacing():
    rng = random.Random(SEED + 1)
    mismatches, interlacing = 0, 0
    for trial in range(1000):
        d = rng.randint(1, 7)
        pts = sorted(random_rationals(rng, 2 * d - 1))
        if trial % 2:
            xs, ys = pts[0::2], pts[1::2]
        else:
            rng.shuffle(pts)
            xs, ys = pts[:d], pts[d:]
        expected = interlaces(xs, ys)
        interlacing += expected
        for via in ("mu", "nu"):
            if check_interlacing_by_positivity(xs, ys, via=via)[0] != expected:
                mismatches += 1
    ok = mismatches == 0 and 0 < interlacing < 1000
    record("AC5", ok, f"1000 pairs ({interlacing} interlacing), {mismatches} mismatches over mu and nu")


def test_ac6_summation_formula():
    report, elapsed = timed(verify_summation, 8, DEFAULT_ALPHAS, DEFAULT_SP_GRID)
    record("AC6", report.passed and len(DEFAULT_SP_GRID) == 25,
           f"{report.cases} cases on a 5x5 (s,p) grid, {len(report.failures)} failures, {elapsed:.2f}s")


CENTRALITY_CHAINS = [PlancherelAlpha(a) for a in DEFAULT_ALPHAS] + [
    ZMeasure(2, 0, 1),
    ZMeasure(1, 1, 1),
    ZMeasure(F(1, 2), F(-1, 2), 3),
    ZMeasure(3, -2, F(5, 2)),
    ZMeasure(F(1, 3), 3, F(13, 4)),
]


def test_ac7_centrality():
    start = time.perf_counter()
    failed, entries = [], 0
    for chain in CENTRALITY_CHAINS:
        report = centrality_check(chain, 6)
        entries += len(report.entries)
        if not report.passed:
            failed.append(chain.describe())
    elapsed = time.perf_counter() - start
    record("AC7", not failed and elapsed < 60,
           f"{len(CENTRALITY_CHAINS)} chains x {entries // len(CENTRALITY_CHAINS)} endpoints |Lam|<=6, "
           f"failing chains: {failed}, {elapsed:.2f}s (limit 60s)")


def test_ac8_level_distributions():
    bad = []
    for n in range(9):
        got = level_distribution(PlancherelAlpha(1), n).weights
        want = {lam: F(count_syt(lam) ** 2, factorial(n)) for lam in enumerate_partitions(n)}
        if got != want:
            bad.append((1, n))
    for alpha in DEFAULT_ALPHAS:
        ctx = JackContext(alpha)
        for n in range(9):
            got = level_distribution(PlancherelAlpha(alpha), n).weights
            want = {lam: ctx.phi(lam) * ctx.dim_hook(lam) for lam in enumerate_partitions(n)}
            if got != want or sum(got.values()) != 1:
                bad.append((alpha, n))
    record("AC8", not bad, f"levels n<=8, alpha=1 against dim^2/n! and all alpha against phi*dim; mismatches: {bad}")


def test_ac9_sampling_statistics():
    chain = PlancherelAlpha(1)
    paths, elapsed = timed(sample_paths, chain, 4, 10 ** 5, SEED)
    counts = {}
    for path in paths:
        counts[path.shape] = counts.get(path.shape, 0) + 1
    freq = {lam: F(c, len(paths)) for lam, c in counts.items()}
    tv = total_variation(freq, level_distribution(chain, 4).weights)
    record("AC9", tv < F(1, 100) and elapsed < 10,
           f"10^5 paths of length 4, seed {SEED}: TV {float(tv):.5f} (limit 0.01), {elapsed:.2f}s (limit 10s)")


CLI_INVOCATIONS = [
    ["sample", "--plancherel", "--n", "5", "--count", "200", "--seed", "7", "--histogram"],
    ["sample", "--alpha", "1/2", "--s", "1", "--p", "2", "--n", "6", "--count", "50", "--seed", "3"],
    ["dist", "--partition", "3,1", "--alpha", "5/2", "--kind", "cotransition"],
    ["dims", "--n", "5", "--alpha", "1/3", "--format", "csv"],
    ["verify", "--suite", "all", "--nmax", "4", "--alphas", "1/2,2"],
    ["profile", "--partition", "4,2,1", "--alpha", "3", "--rescale"],
]


def test_ac10_cli_determinism():
    differing = []
    for argv in CLI_INVOCATIONS:
        outputs = [subprocess.run([sys.executable, "-m", "younglattice", *argv],
                                  capture_output=True, check=True).stdout for _ in range(2)]
        if outputs[0] != outputs[1] or not outputs[0]:
            differing.append(" ".join(argv[:1]))
    record("AC10", not differing,
           f"{len(CLI_INVOCATIONS)} invocations run twice each; non-identical: {differing}")
