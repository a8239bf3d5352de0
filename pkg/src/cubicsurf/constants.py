"""Seshadri and approximation constants of nef classes on the cubic surface.

Values are exact: a ``Fraction``, or ``math.inf`` for an infinite
approximation constant.  Each result carries the curves that achieve it.
The point ``x`` is assumed to lie on none of the 27 lines; only the
anticanonical table covers points on lines.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .picard import (
    HYPERPLANE,
    NAMED_PENCILS,
    ANTI_K,
    DivisorClass,
    is_nef,
    pair,
)

ExtendedRational = Union[Fraction, float]
INF = math.inf


class NotNefError(ValueError):
    pass


class TangentType(enum.Enum):
    """Type of the tangent-plane section ``C_x`` at ``x``."""

    CUSPIDAL = "cusp"
    NODAL_SLOPES_IN_KV_NOT_K = "node-local"
    NODAL_SLOPES_IN_K_OR_NOT_IN_KV = "node-rational"


def format_value(v: ExtendedRational) -> str:
    if v == INF:
        return "inf"
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


@dataclass(frozen=True)
class Certificate:
    """A curve through ``x``: its class and multiplicity at ``x``.

    It certifies the value ``(D . curve) / multiplicity``.  Pencil members
    are smooth at ``x``; the tangent section ``C_x`` has class ``h`` and a
    double point at ``x``.
    """

    label: str
    curve: DivisorClass
    multiplicity: int

    def evaluate(self, d: DivisorClass) -> Fraction:
        return Fraction(pair(d, self.curve), self.multiplicity)


TANGENT_SECTION = Certificate("hyperplane-section", HYPERPLANE, 2)
PENCIL_CERTIFICATES = tuple(Certificate(str(n), c, 1) for n, c in NAMED_PENCILS)


@dataclass(frozen=True)
class ConstantResult:
    value: ExtendedRational
    certificates: tuple[Certificate, ...]

    def check(self, d: DivisorClass) -> bool:
        return bool(self.certificates) and all(
            c.evaluate(d) == self.value for c in self.certificates)


def _require_nef(d: DivisorClass) -> None:
    if d.rank != 7 or not is_nef(d):
        raise NotNefError(f"{d!r} is not a nef class on the cubic surface")


def _minimum(d: DivisorClass, candidates: Sequence[Certificate]) -> ConstantResult:
    values = [c.evaluate(d) for c in candidates]
    best = min(values)
    return ConstantResult(best, tuple(c for c, v in zip(candidates, values) if v == best))


def seshadri(d: DivisorClass) -> ConstantResult:
    """``ε_x(D) = min(D.L_i, D.L_ij, D.B_i, (D.h)/2)`` for x off the lines."""
    _require_nef(d)
    return _minimum(d, PENCIL_CERTIFICATES + (TANGENT_SECTION,))


def alpha(d: DivisorClass, tangent: TangentType) -> ConstantResult:
    """Approximation constant at a k-point x off the lines.

    Equal to the Seshadri constant when ``C_x`` is cuspidal or nodal with
    branches defined over ``k_v`` but not ``k``; otherwise the tangent
    section drops out and only the 27 pencils compete.
    """
    _require_nef(d)
    tangent = TangentType(tangent)
    if tangent is TangentType.NODAL_SLOPES_IN_K_OR_NOT_IN_KV:
        return _minimum(d, PENCIL_CERTIFICATES)
    return seshadri(d)


def anticanonical_constants(on_line: bool, tangent: TangentType) -> tuple[ExtendedRational, ExtendedRational]:
    """``(ε_x(-K), α_x(-K))`` for every position of x."""
    if on_line:
        return Fraction(1), Fraction(1)
    return seshadri(ANTI_K).value, alpha(ANTI_K, tangent).value


def liouville_gap(d: DivisorClass, tangent: TangentType) -> ExtendedRational:
    """``α_x(D) - ε_x(D)`` for a k-rational x; never negative."""
    a = alpha(d, tangent).value
    if a == INF:
        return INF
    return a - seshadri(d).value


# ---------------------------------------------------------------------------
# blow-up oracle

def minus_one_classes_dp2() -> list[DivisorClass]:
    """The 56 (-1)-classes on the blow-up of the plane in seven points."""
    n = 7
    out = []

    def vec(a: int, bs: dict[int, int]) -> DivisorClass:
        return DivisorClass((a,) + tuple(bs.get(i, 0) for i in range(1, n + 1)))

    for i in range(1, n + 1):
        out.append(vec(0, {i: 1}))
    for i, j in itertools.combinations(range(1, n + 1), 2):
        out.append(vec(1, {i: -1, j: -1}))
    for five in itertools.combinations(range(1, n + 1), 5):
        out.append(vec(2, {i: -1 for i in five}))
    for k in range(1, n + 1):
        bs = {i: -1 for i in range(1, n + 1)}
        bs[k] = -2
        out.append(vec(3, bs))
    k8 = DivisorClass((-3,) + (1,) * n)
    for ell in out:
        if pair(ell, ell) != -1 or pair(ell, k8) != -1:
            raise AssertionError(f"{ell!r} is not a (-1)-class")
    if len(set(out)) != 56:
        raise AssertionError("expected 56 distinct (-1)-classes")
    return out


_DP2_LINES = minus_one_classes_dp2()
_E7 = DivisorClass((0,) * 7 + (1,))


def seshadri_oracle(d: DivisorClass) -> Fraction:
    """Largest ``γ`` with ``π*D - γ E7`` nef on the blow-up at a seventh point.

    The blow-up is a degree 2 del Pezzo surface whose effective cone is
    spanned by its 56 (-1)-curves, so nefness is tested against those.
    """
    _require_nef(d)
    pulled = DivisorClass(d.coeffs + (0,))
    bounds = []
    for ell in _DP2_LINES:
        e = pair(_E7, ell)
        if e > 0:
            bounds.append(Fraction(pair(pulled, ell), e))
    return min(bounds)


# ---------------------------------------------------------------------------
# rational curves and change of field

@dataclass(frozen=True)
class BranchDatum:
    """A branch through x: multiplicity ``m`` and residue-field code ``r``.

    ``r`` is 0 if the branch point is not defined over ``k_v``, 1 if it is
    defined over ``k``, and 2 otherwise.
    """

    m: int
    r: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"branch multiplicity must be >= 1, got {self.m}")
        if self.r not in (0, 1, 2):
            raise ValueError(f"residue code must be 0, 1 or 2, got {self.r}")


def alpha_rational_curve(degree: int, branches: Sequence[BranchDatum]) -> ExtendedRational:
    """``min over branches of degree / (r m)`` on a k-rational curve; ``r = 0`` gives inf."""
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    if not branches:
        raise ValueError("need at least one branch")
    best: ExtendedRational = INF
    for b in branches:
        if b.r:
            best = min(best, Fraction(degree, b.r * b.m))
    return best


def rescale_alpha_field(alpha_k: ExtendedRational, d: int, m_v: int) -> ExtendedRational:
    """Approximation constant of the same sequence read over an extension of degree ``d``."""
    if not 1 <= m_v <= d:
        raise ValueError(f"need d >= m_v >= 1, got d={d}, m_v={m_v}")
    if alpha_k == INF:
        return INF
    return Fraction(d, m_v) * Fraction(alpha_k)
