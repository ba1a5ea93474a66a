import sys
from fractions import Fraction
from itertools import permutations

from hypothesis import strategies as st

from younglattice.diagrams import InterlacingPair, Partition

ALPHAS = [Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5, 2), Fraction(3)]


@st.composite
def partitions(draw, max_n=10):
    n = draw(st.integers(min_value=0, max_value=max_n))
    parts = []
    while n:
        part = draw(st.integers(min_value=1, max_value=min(n, parts[-1] if parts else n)))
        parts.append(part)
        n -= part
    return Partition(parts)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
alphas = st.sampled_from(ALPHAS) | st.fractions(min_value=Fraction(1, 7), max_value=10, max_denominator=7)


@st.composite
def interlacing_pairs(draw, max_d=12):
    d = draw(st.integers(min_value=1, max_value=max_d))
    pts = draw(st.lists(rationals, min_size=2 * d - 1, max_size=2 * d - 1, unique=True))
    pts.sort()
    return InterlacingPair(pts[0::2], pts[1::2])


def brute_force_syt(shape):
    """Count fillings of ``shape`` by 1..n increasing along rows and columns."""
    n = sum(shape)
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    count = 0
    for perm in permutations(range(1, n + 1)):
        t = dict(zip(cells, perm))
        if all((i, j + 1) not in t or t[i, j] < t[i, j + 1] for i, j in cells) and \
           all((i + 1, j) not in t or t[i, j] < t[i + 1, j] for i, j in cells):
            count += 1
    return count


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    RESULTS = getattr(module, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: int(k[2:])):
        ok, detail = RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {detail}")
