"""Exact double-description enumeration of extreme rays, and the cubic-surface cones.

``enumerate_rays`` is the generic engine: it takes integer functionals
``a`` and returns the extreme rays of ``{x : a . x >= 0}`` under the
Euclidean dot product.  The cubic-surface layer writes constraints as
half-spaces ``pair(normal, D) >= 0`` in the Néron-Severi lattice.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

from .linalg import dot, inverse_columns, primitive, rank
from .picard import (
    HYPERPLANE,
    DivisorClass,
    functional,
    lines27,
    pair,
    pencils27,
)


class NonPointedConeError(ValueError):
    """The constraint system admits a line, so there are no extreme rays."""


def enumerate_rays(constraints: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{x : a . x >= 0 for a in constraints}``.

    Incremental double description with integer rays.  Two rays are
    combined only if the constraints tight at both have rank ``d - 2``,
    decided by exact rank computation.  Output rays are primitive and
    sorted lexicographically.
    """
    rows = [tuple(int(x) for x in a) for a in constraints]
    if not rows:
        raise ValueError("need at least one constraint")
    d = len(rows[0])
    if any(len(a) != d for a in rows):
        raise ValueError("constraints have inconsistent dimensions")
    if rank(rows) < d:
        raise NonPointedConeError(
            f"constraint matrix has rank {rank(rows)} < {d}: the cone contains a line")

    basis: list[int] = []
    for k, a in enumerate(rows):
        if rank([rows[i] for i in basis] + [a]) > len(basis):
            basis.append(k)
            if len(basis) == d:
                break
    order = basis + [k for k in range(len(rows)) if k not in basis]
    rows = [rows[k] for k in order]

    # initial simplicial cone; ray k is tight on every basis row but k
    full = (1 << d) - 1
    rays = [(r, full & ~(1 << k)) for k, r in enumerate(inverse_columns(rows[:d]))]

    rank_cache: dict[int, int] = {}

    def tight_rank(mask: int) -> int:
        if mask not in rank_cache:
            rank_cache[mask] = rank([rows[i] for i in range(len(rows)) if mask >> i & 1])
        return rank_cache[mask]

    for idx in range(d, len(rows)):
        a = rows[idx]
        bit = 1 << idx
        pos, neg, zero = [], [], []
        for r, z in rays:
            s = dot(a, r)
            if s > 0:
                pos.append((r, z, s))
            elif s < 0:
                neg.append((r, z, s))
            else:
                zero.append((r, z | bit))
        new = []
        for rp, zp, sp in pos:
            for rn, zn, sn in neg:
                common = zp & zn
                if common.bit_count() < d - 2 or tight_rank(common) != d - 2:
                    continue
                v = primitive([sp * y - sn * x for x, y in zip(rp, rn)])
                new.append((v, common | bit))
        rays = [(r, z) for r, z, _ in pos] + zero + new

    out = sorted({r for r, _ in rays})
    return out


def tight_constraints(constraints: Sequence[Sequence[int]], ray: Sequence[int]) -> list[int]:
    return [k for k, a in enumerate(constraints) if dot(a, ray) == 0]


def is_extreme(constraints: Sequence[Sequence[int]], ray: Sequence[int]) -> bool:
    """A feasible nonzero ray is extreme iff its tight constraints have rank ``d - 1``."""
    if any(dot(a, ray) < 0 for a in constraints):
        return False
    tight = [constraints[k] for k in tight_constraints(constraints, ray)]
    return rank(tight) == len(ray) - 1 if tight else len(ray) == 1


# ---------------------------------------------------------------------------
# cubic surface layer

@dataclass(frozen=True)
class HalfSpace:
    """The constraint ``pair(normal, D) >= 0``; ``normal`` is stored primitive."""

    normal: DivisorClass

    def __post_init__(self) -> None:
        object.__setattr__(self, "normal", DivisorClass(primitive(self.normal.coeffs)))

    def value(self, d: DivisorClass) -> int:
        return pair(self.normal, d)


def extreme_rays(halfspaces: Sequence[HalfSpace]) -> list[DivisorClass]:
    funcs = [functional(h.normal) for h in halfspaces]
    return [DivisorClass(r) for r in enumerate_rays(funcs)]


class Membership(enum.Enum):
    OUTSIDE = "outside"
    BOUNDARY = "boundary"
    INTERIOR = "interior"


@dataclass(frozen=True)
class Cone:
    halfspaces: tuple[HalfSpace, ...]
    rays: tuple[DivisorClass, ...]

    def contains(self, d: DivisorClass) -> Membership:
        return contains(self, d)

    def functionals(self) -> list[tuple[int, ...]]:
        return [functional(h.normal) for h in self.halfspaces]


def contains(cone: Cone, d: DivisorClass) -> Membership:
    values = [h.value(d) for h in cone.halfspaces]
    if any(v < 0 for v in values):
        return Membership.OUTSIDE
    if any(v == 0 for v in values):
        return Membership.BOUNDARY
    return Membership.INTERIOR


def _make_cone(halfspaces: Sequence[HalfSpace]) -> Cone:
    hs = tuple(halfspaces)
    return Cone(hs, tuple(extreme_rays(hs)))


def line_halfspaces() -> list[HalfSpace]:
    return [HalfSpace(ell) for ell in lines27()]


@lru_cache(maxsize=None)
def nef_cone() -> Cone:
    """The nef cone: non-negative against all 27 lines."""
    return _make_cone(line_halfspaces())


SubconeSelector = Union[DivisorClass, str]


def subcone_halfspaces(selector: SubconeSelector) -> list[HalfSpace]:
    hs = line_halfspaces()
    if isinstance(selector, str):
        if selector != "hyperplane":
            raise ValueError(f"unknown subcone selector {selector!r}")
        # (D.h)/2 <= D.C' for every pencil C'
        hs += [HalfSpace(2 * c - HYPERPLANE) for c in pencils27()]
        return hs
    if selector not in pencils27():
        raise ValueError(f"{selector!r} is not one of the 27 conic pencils")
    hs += [HalfSpace(c - selector) for c in pencils27() if c != selector]
    hs.append(HalfSpace(HYPERPLANE - 2 * selector))
    return hs


@lru_cache(maxsize=None)
def subcone(selector: SubconeSelector) -> Cone:
    """``Γ(C)`` for a pencil class ``C``, or ``Γ(h)`` for ``"hyperplane"``."""
    return _make_cone(subcone_halfspaces(selector))
