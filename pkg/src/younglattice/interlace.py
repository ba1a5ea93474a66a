"""Transition and co-transition distributions of interlacing sequences.

For ``P(u) = prod(u - x_k)`` and ``Q(u) = prod(u - y_k)`` the partial-fraction
expansions

    Q/P = sum mu_k / (u - x_k)          P/Q = u - c - sum nu_k / (u - y_k)

give a probability law ``mu`` on the x-points and, after dividing by the area,
a probability law on the y-points.  Weights are computed by product formulas;
the polynomial route is kept as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Any, Hashable, Iterable, Optional, Sequence

from .diagrams import InterlacingPair, RationalLike, as_rational, format_rational


@dataclass(frozen=True)
class Atom:
    point: Fraction
    weight: Fraction
    label: Optional[Hashable] = field(default=None, compare=False)


@dataclass(frozen=True)
class DiscreteDist:
    """Finitely supported probability law with exact positive weights.

    Atoms are sorted by strictly increasing point.  ``label`` optionally ties
    an atom to a combinatorial object (e.g. the diagram reached); it does not
    take part in equality.
    """

    atoms: tuple[Atom, ...]

    def __post_init__(self):
        points = [a.point for a in self.atoms]
        if not self.atoms:
            raise ValueError("distribution has no atoms")
        if any(p >= q for p, q in zip(points, points[1:])):
            raise ValueError("atom points must be strictly increasing")
        if any(a.weight <= 0 for a in self.atoms):
            raise ValueError("atom weights must be positive")
        total = sum((a.weight for a in self.atoms), Fraction(0))
        if total != 1:
            raise ValueError(f"weights sum to {format_rational(total)}, not 1")

    @classmethod
    def from_points(cls, points: Iterable[Fraction], weights: Iterable[Fraction],
                    labels: Optional[Iterable[Hashable]] = None) -> "DiscreteDist":
        points, weights = list(points), list(weights)
        labels = list(labels) if labels is not None else [None] * len(points)
        atoms = sorted(zip(points, weights, labels), key=lambda t: t[0])
        return cls(tuple(Atom(p, w, lab) for p, w, lab in atoms))

    @property
    def points(self) -> list[Fraction]:
        return [a.point for a in self.atoms]

    @property
    def weights(self) -> list[Fraction]:
        return [a.weight for a in self.atoms]

    def as_dict(self) -> dict[Fraction, Fraction]:
        return {a.point: a.weight for a in self.atoms}

    def by_label(self) -> dict[Any, Fraction]:
        return {a.label: a.weight for a in self.atoms}

    def moment(self, m: int) -> Fraction:
        return sum((a.weight * a.point ** m for a in self.atoms), Fraction(0))


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with Fraction coefficients, lowest degree first."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_roots(cls, roots: Iterable[Fraction]) -> "RationalPoly":
        coeffs = [Fraction(1)]
        for r in roots:
            # multiply by (u - r)
            shifted = [Fraction(0)] + coeffs
            coeffs = [s - r * c for s, c in zip(shifted, coeffs + [Fraction(0)])]
        return cls(tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, u: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def derivative(self) -> "RationalPoly":
        if self.degree == 0:
            return RationalPoly((Fraction(0),))
        return RationalPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k <= self.degree else Fraction(0)


def _check_distinct(*seqs: Sequence[Fraction]) -> None:
    seen = [v for seq in seqs for v in seq]
    if len(set(seen)) != len(seen):
        raise ValueError("support points must be pairwise distinct")


def mu_weights(xs: Sequence[RationalLike], ys: Sequence[RationalLike]) -> list[Fraction]:
    """Residues of Q/P at each x, by the product formula.

    Works for any distinct points, interlacing or not; only positivity depends
    on interlacing.
    """
    xs = sorted(as_rational(v) for v in xs)
    ys = sorted(as_rational(v) for v in ys)
    _check_distinct(xs, ys)
    return [
        prod((xk - y for y in ys), start=Fraction(1))
        / prod((xk - xi for i, xi in enumerate(xs) if i != k), start=Fraction(1))
        for k, xk in enumerate(xs)
    ]


def nu_weights(xs: Sequence[RationalLike], ys: Sequence[RationalLike]) -> list[Fraction]:
    """Coefficients ``nu_k = -P(y_k) / Q'(y_k)`` of the expansion of P/Q."""
    xs = sorted(as_rational(v) for v in xs)
    ys = sorted(as_rational(v) for v in ys)
    _check_distinct(xs, ys)
    return [
        -prod((yk - x for x in xs), start=Fraction(1))
        / prod((yk - yj for j, yj in enumerate(ys) if j != k), start=Fraction(1))
        for k, yk in enumerate(ys)
    ]


def transition_dist(pair: InterlacingPair) -> DiscreteDist:
    return DiscreteDist.from_points(pair.x, mu_weights(pair.x, pair.y))


def cotransition_weights(pair: InterlacingPair) -> list[Fraction]:
    """Co-transition probabilities in the factored form with the
    ``(x_d - y_k)(y_k - x_1)/A`` prefactor."""
    x, y, d = pair.x, pair.y, pair.d
    area = pair.area
    out = []
    for k in range(d - 1):
        yk = y[k]
        w = (x[d - 1] - yk) * (yk - x[0]) / area
        for i in range(k):
            w *= (yk - x[i + 1]) / (yk - y[i])
        for j in range(k + 1, d - 1):
            w *= (yk - x[j]) / (yk - y[j])
        out.append(w)
    return out


def cotransition_dist(pair: InterlacingPair) -> DiscreteDist:
    if not pair.y:
        raise ValueError("a pair with no y-points (the empty diagram) has no co-transitions")
    return DiscreteDist.from_points(pair.y, cotransition_weights(pair))


def expand_transition(pair: InterlacingPair) -> tuple[RationalPoly, RationalPoly, list[Fraction]]:
    """Polynomial route: ``mu_k = Q(x_k) / P'(x_k)``."""
    P = RationalPoly.from_roots(pair.x)
    Q = RationalPoly.from_roots(pair.y)
    dP = P.derivative()
    return P, Q, [Q(xk) / dP(xk) for xk in pair.x]


def elementary(values: Sequence[Fraction], k: int) -> Fraction:
    """k-th elementary symmetric function of ``values``."""
    e = [Fraction(1)] + [Fraction(0)] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * v
    return e[k]


def expand_cotransition(pair: InterlacingPair) -> tuple[Fraction, list[Fraction]]:
    """Center and coefficients of ``P/Q = u - c - sum nu_k/(u - y_k)``.

    The center is read off the elementary symmetric functions and the
    coefficients from residues, independently of the area.
    """
    if not pair.y:
        raise ValueError("expansion of P/Q needs at least one y-point")
    P = RationalPoly.from_roots(pair.x)
    Q = RationalPoly.from_roots(pair.y)
    dQ = Q.derivative()
    c = elementary(pair.x, 1) - elementary(pair.y, 1)
    return c, [-P(yk) / dQ(yk) for yk in pair.y]


def check_interlacing_by_positivity(xs: Sequence[RationalLike], ys: Sequence[RationalLike],
                                    via: str = "mu") -> tuple[bool, Optional[int]]:
    """Decide interlacing from the signs of the mu (or nu) coefficients.

    Returns ``(True, None)`` when every coefficient is positive, otherwise
    ``(False, k)`` with ``k`` the 0-based index (in sorted order) of the first
    non-positive coefficient.
    """
    xs, ys = list(xs), list(ys)
    if len(xs) != len(ys) + 1:
        raise ValueError(f"need len(x) == len(y) + 1, got {len(xs)} and {len(ys)}")
    if via == "mu":
        weights = mu_weights(xs, ys)
    elif via == "nu":
        weights = nu_weights(xs, ys)
    else:
        raise ValueError(f"via must be 'mu' or 'nu', not {via!r}")
    for k, w in enumerate(weights):
        if w <= 0:
            return False, k
    return True, None


def moments_by_sum(pair: InterlacingPair, m_max: int) -> list[Fraction]:
    mu = mu_weights(pair.x, pair.y)
    return [sum((w * xk ** m for xk, w in zip(pair.x, mu)), Fraction(0)) for m in range(m_max + 1)]


def moments_by_series(pair: InterlacingPair, m_max: int) -> list[Fraction]:
    """Moments from ``Q(u)/P(u) = sum_m h_m u^{-m-1}``.

    Matching the coefficient of ``u^{d-1-t}`` in ``Q = P * R`` gives
    ``h_t = q_{d-1-t} - sum_{m<t} p_{d-t+m} h_m``.
    """
    P = RationalPoly.from_roots(pair.x)
    Q = RationalPoly.from_roots(pair.y)
    d = pair.d
    h: list[Fraction] = []
    for t in range(m_max + 1):
        h.append(Q.coeff(d - 1 - t) - sum((P.coeff(d - t + m) * h[m] for m in range(t)), Fraction(0)))
    return h


def moments(pair: InterlacingPair, m_max: int) -> list[Fraction]:
    """Moments ``h_0..h_m_max`` of the transition distribution.

    Computed both from the weights and from the series of Q/P; the two must
    agree exactly.
    """
    if m_max < 0:
        raise ValueError("m_max must be non-negative")
    by_sum = moments_by_sum(pair, m_max)
    by_series = moments_by_series(pair, m_max)
    if by_sum != by_series:
        raise ArithmeticError(f"moment computations disagree: {by_sum} vs {by_series}")
    return by_series
