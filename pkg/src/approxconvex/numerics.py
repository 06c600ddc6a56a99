"""Exact scalars and points of the standard simplex.

All exact quantities are :class:`fractions.Fraction` values, which are kept in
lowest terms with a positive denominator, so equality and hashing are
structural.  Points of the n-simplex are stored in barycentric form with
``n + 1`` coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would smuggle rounding into exact code paths.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational string")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    return to_rational(text)


def format_rational(value: Fraction | int) -> str:
    """Render as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def round_half_up(value: Fraction, places: int) -> Fraction:
    """Round an exact rational to ``places`` decimals, ties away from zero."""
    scale = 10**places
    scaled = abs(value) * scale
    rounded = (scaled + Fraction(1, 2)).__floor__()
    return Fraction(rounded if value >= 0 else -rounded, scale)


def format_decimal(value: Fraction, places: int) -> str:
    rounded = round_half_up(Fraction(value), places)
    sign = "-" if rounded < 0 else ""
    units = abs(rounded.numerator) * (10**places // rounded.denominator)
    whole, frac = divmod(units, 10**places)
    if places == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


@dataclass(frozen=True)
class SimplexPoint:
    """A point of the standard n-simplex in barycentric coordinates."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable[RationalLike]):
        values = tuple(to_rational(c) for c in coords)
        if not values:
            raise ValueError("a simplex point needs at least one coordinate")
        if any(c < 0 for c in values):
            raise ValueError(f"negative coordinate in {_fmt(values)}")
        total = sum(values, Fraction(0))
        if total != 1:
            raise ValueError(f"coordinates sum to {total}, not 1: {_fmt(values)}")
        object.__setattr__(self, "coords", values)

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(j for j, c in enumerate(self.coords) if c != 0)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, j: int) -> Fraction:
        return self.coords[j]

    def __iter__(self):
        return iter(self.coords)

    def permuted(self, order: Sequence[int]) -> "SimplexPoint":
        """Return the point with coordinates ``(x[order[0]], x[order[1]], ...)``."""
        return SimplexPoint(self.coords[i] for i in order)

    def common_denominator(self) -> tuple[int, tuple[int, ...]]:
        """Return ``(D, nums)`` with ``x(j) == nums[j] / D`` for every j."""
        den = lcm(*(c.denominator for c in self.coords))
        return den, tuple(c.numerator * (den // c.denominator) for c in self.coords)

    def embed(self) -> tuple[Fraction, ...]:
        """Drop the last coordinate, mapping the n-simplex into R^n."""
        return self.coords[:-1]

    def __str__(self) -> str:
        return _fmt(self.coords)


def _fmt(values: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


def vertex(n: int, j: int) -> SimplexPoint:
    """The vertex e(j) of the n-simplex."""
    if n < 0:
        raise ValueError(f"dimension must be nonnegative, got {n}")
    if not 0 <= j <= n:
        raise IndexError(f"vertex index {j} out of range 0..{n}")
    return SimplexPoint(1 if i == j else 0 for i in range(n + 1))


def barycenter(n: int) -> SimplexPoint:
    if n < 0:
        raise ValueError(f"dimension must be nonnegative, got {n}")
    return SimplexPoint([Fraction(1, n + 1)] * (n + 1))


def convex_combination(
    points: Sequence[SimplexPoint], weights: Sequence[RationalLike]
) -> SimplexPoint:
    """Exact coordinatewise combination ``sum_k weights[k] * points[k]``."""
    if len(points) != len(weights):
        raise ValueError(f"{len(points)} points but {len(weights)} weights")
    if not points:
        raise ValueError("need at least one point")
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise ValueError(f"points have mixed dimensions {sorted(d - 1 for d in dims)}")
    ws = [to_rational(w) for w in weights]
    if any(w < 0 for w in ws):
        raise ValueError("convex weights must be nonnegative")
    if sum(ws, Fraction(0)) != 1:
        raise ValueError("convex weights must sum to 1")
    size = dims.pop()
    coords = [Fraction(0)] * size
    for p, w in zip(points, ws):
        if w == 0:
            continue
        for j in range(size):
            coords[j] += w * p.coords[j]
    return SimplexPoint(coords)
