"""Jack-deformed combinatorics on the Young lattice.

Edge multiplicities ``kappa``, the alpha-dimension (by the cover recurrence
and by the alpha-hook product), the co-hook weight ``phi``, and the
transition / co-transition laws of the alpha-Plancherel and z-measure chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .diagrams import Partition, RationalLike, as_rational, check_alpha, format_rational
from .interlace import DiscreteDist


class ZMeasureError(ValueError):
    """z-measure parameters leave the positivity regime at some box."""

    def __init__(self, message: str, content: Fraction | None = None):
        super().__init__(message)
        self.content = content


def covers(lam: Sequence[int]) -> list[tuple[Partition, tuple[int, int]]]:
    """Every diagram covering ``lam`` with the (row, col) of its new box, top row first."""
    lam = Partition(lam)
    return [(lam.add_box(i), (i, lam.row(i) + 1)) for i in lam.addable_rows()]


def cocovers(lam: Sequence[int]) -> list[tuple[Partition, tuple[int, int]]]:
    """Every diagram covered by ``lam`` with the (row, col) of the removed box."""
    lam = Partition(lam)
    return [(lam.remove_box(i), (i, lam.row(i))) for i in lam.removable_rows()]


def new_box(lam: Sequence[int], Lam: Sequence[int]) -> tuple[int, int]:
    lam, Lam = Partition(lam), Partition(Lam)
    if Lam.n != lam.n + 1 or len(Lam) > len(lam) + 1:
        raise ValueError(f"{Lam} does not cover {lam}")
    diff = [i for i in range(1, len(Lam) + 1) if Lam.row(i) != lam.row(i)]
    if len(diff) != 1 or Lam.row(diff[0]) != lam.row(diff[0]) + 1:
        raise ValueError(f"{Lam} does not cover {lam}")
    i = diff[0]
    return i, Lam.row(i)


@dataclass(frozen=True)
class ZParams:
    """z-measure parameters as ``s = u + v`` and ``p = u*v``.

    Keeping the symmetric functions lets a conjugate pair ``v = conj(u)`` stay
    rational.
    """

    s: Fraction
    p: Fraction

    def __init__(self, s: RationalLike, p: RationalLike):
        object.__setattr__(self, "s", as_rational(s))
        object.__setattr__(self, "p", as_rational(p))

    @classmethod
    def from_uv(cls, u: RationalLike, v: RationalLike) -> "ZParams":
        u, v = as_rational(u), as_rational(v)
        return cls(u + v, u * v)

    @classmethod
    def conjugate_pair(cls, re: RationalLike, im: RationalLike) -> "ZParams":
        """Parameters for ``u = re + i*im``, ``v = re - i*im``."""
        re, im = as_rational(re), as_rational(im)
        return cls(2 * re, re * re + im * im)

    def factor(self, c: Fraction) -> Fraction:
        """``(c + u)(c + v)``."""
        return c * c + self.s * c + self.p


class JackContext:
    """Fixed Jack parameter ``alpha`` with a memo of recurrent dimensions."""

    def __init__(self, alpha: RationalLike = 1):
        self.alpha = check_alpha(alpha)
        self._dim_memo: dict[Partition, Fraction] = {Partition(()): Fraction(1)}

    def __repr__(self) -> str:
        return f"JackContext(alpha={format_rational(self.alpha)})"

    def alpha_content(self, i: int, j: int) -> Fraction:
        """Alpha-content of the north-west corner of box (i, j)."""
        return (j - 1) * self.alpha - (i - 1)

    def kappa(self, lam: Sequence[int], Lam: Sequence[int]) -> Fraction:
        """Edge multiplicity of ``lam -> Lam`` in the Pieri rule for Jack functions.

        Product over the boxes of ``lam`` in the column of the new box, arms and
        legs taken in ``lam``.
        """
        lam = Partition(lam)
        _, j = new_box(lam, Lam)
        a_ = self.alpha
        height = lam.conjugate().row(j)
        out = Fraction(1)
        for r in range(1, height + 1):
            arm, leg = lam[r - 1] - j, height - r
            out *= ((arm * a_ + leg + 2) * ((arm + 1) * a_ + leg)
                    / ((arm * a_ + leg + 1) * ((arm + 1) * a_ + leg + 1)))
        return out

    def dim_hook(self, lam: Sequence[int]) -> Fraction:
        """``n! alpha^n / prod((a+1) alpha + l)`` over the boxes."""
        lam = Partition(lam)
        n, a_ = lam.n, self.alpha
        conj = lam.conjugate()
        out = Fraction(factorial(n)) * a_ ** n
        for i, j in lam.boxes():
            out /= (lam[i - 1] - j + 1) * a_ + conj[j - 1] - i
        return out

    def dim_recurrent(self, lam: Sequence[int]) -> Fraction:
        """Alpha-dimension from ``dim(Lam) = sum kappa(lam, Lam) dim(lam)``, ``dim(∅) = 1``."""
        lam = Partition(lam)
        memo = self._dim_memo
        if lam in memo:
            return memo[lam]
        # fill levels bottom-up so the recursion depth stays at one
        stack = [lam]
        while stack:
            top = stack[-1]
            missing = [mu for mu, _ in cocovers(top) if mu not in memo]
            if missing:
                stack.extend(missing)
                continue
            stack.pop()
            if top not in memo:
                memo[top] = sum((self.kappa(mu, top) * memo[mu] for mu, _ in cocovers(top)), Fraction(0))
        return memo[lam]

    def phi(self, lam: Sequence[int]) -> Fraction:
        """``prod 1/(a alpha + l + 1)`` over the boxes."""
        lam = Partition(lam)
        conj = lam.conjugate()
        out = Fraction(1)
        for i, j in lam.boxes():
            out /= (lam[i - 1] - j) * self.alpha + conj[j - 1] - i + 1
        return out

    def plancherel_weight(self, lam: Sequence[int]) -> Fraction:
        """Level-n weight ``phi * dim_alpha`` of the alpha-Plancherel chain."""
        return self.phi(lam) * self.dim_hook(lam)

    def q_alpha(self, Lam: Sequence[int]) -> DiscreteDist:
        """Co-transition law ``kappa dim(lam) / dim(Lam)`` placed at the
        south-east alpha-content ``alpha*Lam_i - i`` of each removable box."""
        Lam = Partition(Lam)
        if not Lam:
            raise ValueError("the empty diagram has no co-transitions")
        dim_top = self.dim_recurrent(Lam)
        points, weights, labels = [], [], []
        for lam, (i, j) in cocovers(Lam):
            points.append(j * self.alpha - i)
            weights.append(self.kappa(lam, Lam) * self.dim_recurrent(lam) / dim_top)
            labels.append(lam)
        return DiscreteDist.from_points(points, weights, labels)

    def p_alpha(self, lam: Sequence[int]) -> DiscreteDist:
        """Transition law ``kappa phi(Lam) / phi(lam)`` at the alpha-content of each new box."""
        lam = Partition(lam)
        phi_lam = self.phi(lam)
        points, weights, labels = [], [], []
        for Lam, (i, j) in covers(lam):
            points.append(self.alpha_content(i, j))
            weights.append(self.kappa(lam, Lam) * self.phi(Lam) / phi_lam)
            labels.append(Lam)
        return DiscreteDist.from_points(points, weights, labels)

    def p_z(self, z: ZParams, lam: Sequence[int]) -> DiscreteDist:
        """z-measure transition law ``(c+u)(c+v)/(n alpha + uv) * p_alpha``.

        Raises :class:`ZMeasureError` on a zero normalizer or a factor
        ``(c+u)(c+v) <= 0``; nothing is renormalized.
        """
        lam = Partition(lam)
        denom = lam.n * self.alpha + z.p
        if denom == 0:
            raise ZMeasureError(f"n*alpha + p vanishes at level {lam.n}")
        base = self.p_alpha(lam)
        weights = []
        for atom in base.atoms:
            f = z.factor(atom.point)
            if f <= 0:
                raise ZMeasureError(
                    f"(c+u)(c+v) = {format_rational(f)} <= 0 at alpha-content "
                    f"{format_rational(atom.point)} (adding to {lam})",
                    content=atom.point,
                )
            weights.append(f / denom * atom.weight)
        return DiscreteDist.from_points(base.points, weights, [a.label for a in base.atoms])
