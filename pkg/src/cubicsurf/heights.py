"""Heights, distances and empirical approximation constants over Q.

Only the real place is used.  The distance between ``[x]`` and ``[y]`` is
``|x ^ y| / (|x| |y|)`` with Euclidean norms, evaluated from exact integer
squared norms; logarithms run in a private 128-bit mpmath context so that
heights with thousands of digits lose nothing.

A sequence ``x_i -> x`` has approximation constant ``γ`` when
``d(x, x_i)^γ H(x_i)`` stays bounded; the per-point estimate is
``γ_i = log H(x_i) / -log d(x, x_i)`` and the reported value is the median
of the last half of the ``γ_i``.
"""
from __future__ import annotations

import csv
import statistics
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Sequence, Union

from mpmath import MPContext

PRECISION_BITS = 128

_mp = MPContext()
_mp.prec = PRECISION_BITS


@dataclass(frozen=True)
class ProjectivePoint:
    """Primitive integer coordinates, first nonzero coordinate positive."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        c = tuple(int(x) for x in self.coords)
        if len(c) < 2:
            raise ValueError("a projective point needs at least two coordinates")
        g = 0
        for x in c:
            g = gcd(g, x)
        if g == 0:
            raise ValueError("all coordinates are zero")
        lead = next(x for x in c if x != 0)
        if lead < 0:
            g = -g
        object.__setattr__(self, "coords", tuple(x // g for x in c))

    @classmethod
    def of(cls, *coords: int) -> ProjectivePoint:
        return cls(tuple(coords))

    @classmethod
    def from_rational(cls, value: Fraction | int) -> ProjectivePoint:
        """``[p : q]`` for the affine value ``p/q``."""
        v = Fraction(value)
        return cls((v.numerator, v.denominator))

    @property
    def dimension(self) -> int:
        return len(self.coords) - 1

    def __str__(self) -> str:
        return "[" + ":".join(map(str, self.coords)) + "]"


@dataclass(frozen=True)
class ProductPoint:
    """A point of a product of projective spaces."""

    factors: tuple[ProjectivePoint, ...]

    def __str__(self) -> str:
        return " x ".join(map(str, self.factors))


Point = Union[ProjectivePoint, ProductPoint]


def height(p: ProjectivePoint) -> int:
    """Multiplicative height relative to Q; for primitive coordinates it is ``max |x_i|``."""
    return max(abs(x) for x in p.coords)


def _wedge_ratio(p: ProjectivePoint, q: ProjectivePoint) -> tuple[int, int]:
    """``(|x ^ y|^2, |x|^2 |y|^2)`` exactly, via Lagrange's identity."""
    if p.dimension != q.dimension:
        raise ValueError(f"dimension mismatch: {p.dimension} vs {q.dimension}")
    xx = sum(a * a for a in p.coords)
    yy = sum(b * b for b in q.coords)
    xy = sum(a * b for a, b in zip(p.coords, q.coords))
    return xx * yy - xy * xy, xx * yy


def distance(p: Point, q: Point):
    """Distance in ``[0, 1]`` as an mpmath float at ``PRECISION_BITS``.

    Product points use the maximum over factors.
    """
    if isinstance(p, ProductPoint):
        _check_product(p, q)
        return max(distance(a, b) for a, b in zip(p.factors, q.factors))
    num, den = _wedge_ratio(p, q)
    return _mp.sqrt(_mp.mpf(num) / den)


def log_distance(p: Point, q: Point):
    if isinstance(p, ProductPoint):
        _check_product(p, q)
        return max(log_distance(a, b) for a, b in zip(p.factors, q.factors) if a != b)
    num, den = _wedge_ratio(p, q)
    if num == 0:
        raise ValueError(f"{p} and {q} coincide")
    return (_mp.log(num) - _mp.log(den)) / 2


def _check_product(p: Point, q: Point) -> None:
    if not isinstance(q, ProductPoint) or len(q.factors) != len(p.factors):
        raise ValueError("product points must have the same factor structure")


# ---------------------------------------------------------------------------
# test sequences

KINDS = ("line", "nodal", "cusp", "quadric")
RULINGS = ("first", "second", "diagonal")
SCHEDULES = ("linear", "geometric")


@dataclass(frozen=True)
class SequenceSpec:
    """A standard test sequence.

    ``line``: ``target + 1/n`` on the projective line.
    ``nodal``: the branch ``t -> sign`` of ``y^2 z = x^3 + x^2 z`` under
    ``x = t^2 - 1, y = t(t^2 - 1)``, at ``t = sign (n+1)/n``; node at ``[0:0:1]``.
    ``cusp``: ``[t^2 : t^3 : 1]`` on ``y^2 z = x^3`` at ``t = 1/n``.
    ``quadric``: points of P1 x P1 approaching ``(0, 0)`` along a ruling
    or the diagonal, with height ``H(x)^a H(y)^b``.

    The i-th point uses ``n = i`` (linear schedule) or ``n = 2^i``
    (geometric; a subsequence of the linear one, same constant, but
    bounded factors in the distance die out much faster).
    """

    kind: str
    length: int
    target: Fraction = Fraction(0)
    sign: int = 1
    a: int = 1
    b: int = 1
    ruling: str = "first"
    schedule: str = "linear"

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}; expected one of {KINDS}")
        if self.length < 10:
            raise ValueError(f"sequence length must be at least 10, got {self.length}")
        if self.sign not in (1, -1):
            raise ValueError(f"branch sign must be +1 or -1, got {self.sign}")
        if self.a < 1 or self.b < 1:
            raise ValueError(f"quadric weights must be positive, got ({self.a}, {self.b})")
        if self.ruling not in RULINGS:
            raise ValueError(f"unknown ruling {self.ruling!r}")
        if self.schedule not in SCHEDULES:
            raise ValueError(f"unknown schedule {self.schedule!r}")
        object.__setattr__(self, "target", Fraction(self.target))

    @classmethod
    def parse(cls, text: str, length: int, schedule: str = "linear") -> SequenceSpec:
        """``line[:p/q]``, ``cusp``, ``node[:+1|-1]``, ``quadric:a,b[,ruling]``."""
        kind, _, arg = text.partition(":")
        if kind == "line":
            return cls("line", length, target=Fraction(arg or 0), schedule=schedule)
        if kind == "cusp" and not arg:
            return cls("cusp", length, schedule=schedule)
        if kind in ("node", "nodal"):
            return cls("nodal", length, sign=int(arg or 1), schedule=schedule)
        if kind == "quadric":
            parts = arg.split(",")
            if len(parts) not in (2, 3):
                raise ValueError(f"quadric needs weights a,b: {text!r}")
            ruling = parts[2] if len(parts) == 3 else "first"
            return cls("quadric", length, a=int(parts[0]), b=int(parts[1]),
                       ruling=ruling, schedule=schedule)
        raise ValueError(f"cannot parse sequence kind {text!r}")


@dataclass(frozen=True)
class TestSequence:
    spec: SequenceSpec
    target: Point
    points: tuple[Point, ...]
    heights: tuple[int, ...]
    parameters: tuple[int, ...]

    __test__ = False  # not a pytest class


def _parameter(spec: SequenceSpec, i: int) -> int:
    return i if spec.schedule == "linear" else 2 ** i


def line_point(target: Fraction, n: int) -> ProjectivePoint:
    return ProjectivePoint.from_rational(target + Fraction(1, n))


def cusp_point(n: int) -> ProjectivePoint:
    # t = 1/n in [t^2 : t^3 : 1]
    return ProjectivePoint.of(n, 1, n ** 3)


def nodal_point(n: int, sign: int = 1) -> ProjectivePoint:
    # t = sign (n+1)/n: x = (2n+1)/n^2, y = t x
    return ProjectivePoint.of(n * (2 * n + 1), sign * (n + 1) * (2 * n + 1), n ** 3)


def quadric_point(n: int, ruling: str) -> ProductPoint:
    near, origin = ProjectivePoint.of(1, n), ProjectivePoint.of(0, 1)
    if ruling == "first":
        return ProductPoint((near, origin))
    if ruling == "second":
        return ProductPoint((origin, near))
    return ProductPoint((near, near))


def generate(spec: SequenceSpec) -> TestSequence:
    ns = tuple(_parameter(spec, i) for i in range(1, spec.length + 1))
    if spec.kind == "line":
        target = ProjectivePoint.from_rational(spec.target)
        points = tuple(line_point(spec.target, n) for n in ns)
        heights = tuple(height(p) for p in points)
    elif spec.kind == "cusp":
        target = ProjectivePoint.of(0, 0, 1)
        points = tuple(cusp_point(n) for n in ns)
        heights = tuple(height(p) for p in points)
    elif spec.kind == "nodal":
        target = ProjectivePoint.of(0, 0, 1)
        points = tuple(nodal_point(n, spec.sign) for n in ns)
        heights = tuple(height(p) for p in points)
    else:
        origin = ProjectivePoint.of(0, 1)
        target = ProductPoint((origin, origin))
        points = tuple(quadric_point(n, spec.ruling) for n in ns)
        heights = tuple(height(p.factors[0]) ** spec.a * height(p.factors[1]) ** spec.b
                        for p in points)
    if len(set(points)) != len(points) or target in points:
        raise ValueError("sequence points must be distinct and differ from the target")
    return TestSequence(spec, target, points, heights, ns)


# ---------------------------------------------------------------------------
# estimation

@dataclass(frozen=True)
class AlphaEstimate:
    gammas: tuple
    estimate: float
    tail_start: int
    tail_min: float
    tail_max: float
    distances_decreasing: bool

    @property
    def spread(self) -> float:
        return self.tail_max - self.tail_min


def estimate_alpha(points: Sequence[Point], target: Point, degree: int = 1, *,
                   heights: Sequence[int] | None = None,
                   distance_scale: Fraction | float = 1) -> AlphaEstimate:
    """Estimate the approximation constant of ``points -> target``.

    Heights default to ``height(p) ** degree`` (the height for ``O(degree)``);
    pass ``heights`` for other line bundles.  ``distance_scale`` multiplies
    every distance, for checking insensitivity to equivalent distances.
    """
    if len(points) < 2:
        raise ValueError("need at least two points")
    if heights is None:
        if any(isinstance(p, ProductPoint) for p in points):
            raise ValueError("product points need explicit heights")
        heights = [height(p) ** degree for p in points]
    if len(heights) != len(points):
        raise ValueError("one height per point is required")
    log_scale = _mp.log(_mp.mpf(Fraction(distance_scale).numerator)) - _mp.log(
        Fraction(distance_scale).denominator)
    gammas = []
    log_ds = []
    for p, h in zip(points, heights):
        if p == target:
            raise ValueError(f"sequence point {p} equals the target")
        ld = log_distance(target, p) + log_scale
        log_ds.append(ld)
        gammas.append(_mp.log(h) / -ld if ld != 0 else _mp.inf)
    start = len(gammas) // 2
    tail = [float(g) for g in gammas[start:]]
    decreasing = all(b < a for a, b in zip(log_ds[start:], log_ds[start + 1:]))
    return AlphaEstimate(
        gammas=tuple(gammas),
        estimate=float(statistics.median(tail)),
        tail_start=start,
        tail_min=min(tail),
        tail_max=max(tail),
        distances_decreasing=decreasing,
    )


def estimate_sequence(seq: TestSequence, distance_scale: Fraction | float = 1) -> AlphaEstimate:
    return estimate_alpha(seq.points, seq.target, heights=seq.heights,
                          distance_scale=distance_scale)


def estimate_split_quadric(a: int, b: int, length: int,
                           schedule: str = "linear") -> tuple[float, dict[str, AlphaEstimate]]:
    """Infimum over the ruling and diagonal sequences on P1 x P1 with ``O(a, b)``."""
    per = {}
    for ruling in RULINGS:
        seq = generate(SequenceSpec("quadric", length, a=a, b=b, ruling=ruling, schedule=schedule))
        per[ruling] = estimate_sequence(seq)
    return min(e.estimate for e in per.values()), per


def sequence_rows(seq: TestSequence, est: AlphaEstimate) -> list[tuple[int, int, str, str]]:
    """``(i, H, d, γ_i)`` rows; reals printed with 20 significant digits."""
    rows = []
    for i, (p, h, g) in enumerate(zip(seq.points, seq.heights, est.gammas), 1):
        d = distance(seq.target, p)
        rows.append((i, h, _mp.nstr(d, 20), _mp.nstr(g, 20)))
    return rows


def write_csv(path: str | Path, seq: TestSequence, est: AlphaEstimate) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(("i", "height", "distance", "gamma"))
        w.writerows(sequence_rows(seq, est))
