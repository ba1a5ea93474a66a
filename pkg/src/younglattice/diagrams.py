"""Young diagrams, box statistics and their interlacing-sequence encoding.

A diagram dilated horizontally by ``alpha`` is encoded by the alpha-contents
of its corners: ``x`` values for the addable corners, ``y`` values for the
removable ones.  Everything here is exact (``fractions.Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction, str]

EMPTY_SYMBOLS = ("", "∅", "0", "empty")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction.

    Floats are refused: they would silently smuggle rounding into exact code.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"expected an exact rational, got {value!r}")
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        if not text:
            raise ValueError("empty rational")
        try:
            return Fraction(text)
        except ValueError:
            raise ValueError(f"cannot parse rational {value!r}") from None
    return Fraction(value)


def check_alpha(alpha: RationalLike) -> Fraction:
    alpha = as_rational(alpha)
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return alpha


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Partition(tuple):
    """An integer partition stored as a weakly decreasing tuple of positive parts.

    Compares equal to the plain tuple of its parts, so ``Partition((2, 1)) ==
    (2, 1)``.  The empty partition is ``Partition(())``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"partition parts must be ints, got {p!r}")
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,2,1"``; ``""`` or ``"∅"`` give the empty partition."""
        text = text.strip()
        if text in EMPTY_SYMBOLS:
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        return cls(parts)

    @property
    def n(self) -> int:
        return sum(self)

    def row(self, i: int) -> int:
        """Length of the 1-based row ``i`` (0 past the last row)."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return Partition(())
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def addable_rows(self) -> list[int]:
        """1-based rows where a box can be appended, top to bottom."""
        return [i for i in range(1, len(self) + 2) if i == 1 or self.row(i) < self.row(i - 1)]

    def removable_rows(self) -> list[int]:
        return [i for i in range(1, len(self) + 1) if self.row(i) > self.row(i + 1)]

    def add_box(self, i: int) -> "Partition":
        parts = list(self) + [0]
        parts[i - 1] += 1
        return Partition(p for p in parts if p)

    def remove_box(self, i: int) -> "Partition":
        parts = list(self)
        parts[i - 1] -= 1
        return Partition(p for p in parts if p)

    def boxes(self) -> list[tuple[int, int]]:
        return [(i, j) for i, length in enumerate(self, 1) for j in range(1, length + 1)]

    def arm(self, i: int, j: int) -> int:
        return self[i - 1] - j

    def leg(self, i: int, j: int) -> int:
        return self.conjugate().row(j) - i

    def __str__(self) -> str:
        return ",".join(map(str, self)) if self else "∅"

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True)
class BoxStat:
    row: int
    col: int
    arm: int
    leg: int
    content: int
    alpha_content: Fraction
    alpha_hook: Fraction


def box_stats(lam: Sequence[int], alpha: RationalLike = 1) -> list[BoxStat]:
    """Arm, leg, content and alpha-hook of every box of ``lam``, row-major."""
    alpha = check_alpha(alpha)
    lam = Partition(lam)
    conj = lam.conjugate()
    stats = []
    for i, j in lam.boxes():
        a = lam[i - 1] - j
        l = conj[j - 1] - i
        stats.append(BoxStat(
            row=i, col=j, arm=a, leg=l,
            content=j - i,
            alpha_content=(j - 1) * alpha - (i - 1),
            alpha_hook=(a + 1) * alpha + l,
        ))
    return stats


@dataclass(frozen=True)
class InterlacingPair:
    """Strictly interlacing ``x[0] < y[0] < x[1] < ... < y[-1] < x[-1]``."""

    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...]

    def __init__(self, x: Iterable[RationalLike], y: Iterable[RationalLike] = ()):
        xs = tuple(as_rational(v) for v in x)
        ys = tuple(as_rational(v) for v in y)
        if len(xs) != len(ys) + 1:
            raise ValueError(f"need len(x) == len(y) + 1, got {len(xs)} and {len(ys)}")
        merged = [xs[0]]
        for yk, xk in zip(ys, xs[1:]):
            merged += [yk, xk]
        if any(a >= b for a, b in zip(merged, merged[1:])):
            raise ValueError(f"sequences do not interlace strictly: x={fmt_seq(xs)} y={fmt_seq(ys)}")
        object.__setattr__(self, "x", xs)
        object.__setattr__(self, "y", ys)

    @property
    def d(self) -> int:
        return len(self.x)

    @property
    def center(self) -> Fraction:
        return sum(self.x, Fraction(0)) - sum(self.y, Fraction(0))

    @property
    def area(self) -> Fraction:
        # (1-based) sum over i < j of (y_i - x_i)(x_j - y_{j-1})
        x, y = self.x, self.y
        return sum(
            ((y[i] - x[i]) * (x[j] - y[j - 1]) for i, j in combinations(range(self.d), 2)),
            Fraction(0),
        )

    def points(self) -> list[Fraction]:
        """The merged breakpoints x1, y1, x2, ..., xd."""
        out = [self.x[0]]
        for yk, xk in zip(self.y, self.x[1:]):
            out += [yk, xk]
        return out


def fmt_seq(values: Iterable[Fraction]) -> str:
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


def corners(lam: Sequence[int], alpha: RationalLike = 1) -> InterlacingPair:
    """Alpha-contents of the corners of ``lam`` dilated horizontally by ``alpha``.

    Addable row i contributes ``alpha*lam_i - (i-1)`` (north-west corner of the
    new box), removable row i contributes ``alpha*lam_i - i`` (south-east corner
    of the removed box).
    """
    alpha = check_alpha(alpha)
    lam = Partition(lam)
    xs = sorted(alpha * lam.row(i) - (i - 1) for i in lam.addable_rows())
    ys = sorted(alpha * lam.row(i) - i for i in lam.removable_rows())
    return InterlacingPair(xs, ys)


def from_interlacing(pair: InterlacingPair, alpha: RationalLike = 1) -> Partition:
    """Inverse of :func:`corners`.

    Walks the border from the bottom-left: ``y_k - x_k`` is the width (in units
    of ``alpha``) gained by the next block of equal rows, ``x_{k+1} - y_k`` is
    that block's height.
    """
    alpha = check_alpha(alpha)
    if pair.center != 0:
        raise ValueError(f"center must be 0, got {format_rational(pair.center)}")
    nrows = -pair.x[0]
    if nrows.denominator != 1:
        raise ValueError(f"x1 = {format_rational(pair.x[0])} is not on the lattice")
    rows: list[int] = []
    length = 0
    for k in range(pair.d - 1):
        width = (pair.y[k] - pair.x[k]) / alpha
        height = pair.x[k + 1] - pair.y[k]
        if width.denominator != 1 or height.denominator != 1:
            raise ValueError(f"corner data not on the alpha={format_rational(alpha)} lattice")
        length += int(width)
        rows += [length] * int(height)
    lam = Partition(reversed(rows))
    if len(lam) != nrows or corners(lam, alpha) != pair:
        raise ValueError("corner data does not describe a Young diagram")
    return lam


@dataclass(frozen=True)
class Profile:
    """Piecewise-linear border ``omega`` of an interlacing pair.

    ``slopes[k]`` is the slope on ``(breakpoints[k], breakpoints[k+1])``;
    outside the breakpoints ``omega(u) = |u - center|``.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    slopes: tuple[int, ...]
    center: Fraction

    def __call__(self, u: RationalLike) -> Fraction:
        u = as_rational(u)
        pts = self.breakpoints
        if u <= pts[0] or u >= pts[-1]:
            return abs(u - self.center)
        for k in range(len(pts) - 1):
            if pts[k] <= u <= pts[k + 1]:
                return self.values[k] + self.slopes[k] * (u - pts[k])
        raise AssertionError("unreachable")

    def polyline(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.breakpoints, self.values))


def profile(pair: InterlacingPair) -> Profile:
    x, d = pair.x, pair.d
    c = pair.center
    pts = pair.points()
    values = [c - x[0]]
    for a, b in zip(pts, pts[1:]):
        # +1 from an x to the next y, -1 from a y to the next x
        slope = 1 if len(values) % 2 else -1
        values.append(values[-1] + slope * (b - a))
    if values[-1] != x[d - 1] - c:
        raise AssertionError("profile does not close; pair invariants violated")
    slopes = tuple(1 if k % 2 == 0 else -1 for k in range(len(pts) - 1))
    return Profile(tuple(pts), tuple(values), slopes, c)
