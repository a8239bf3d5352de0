"""Néron-Severi lattice of a smooth cubic surface.

The surface is the blow-up of the plane in six points, so its Picard lattice
has basis ``L, E1, ..., E6`` with intersection form ``diag(1, -1, ..., -1)``.
Everything here is exact integer arithmetic.
"""
from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

RANK = 7
N_POINTS = 6


@dataclass(frozen=True, order=True)
class DivisorClass:
    """An integer class ``a L + sum b_i E_i``, stored as ``(a, b_1, ..., b_n)``.

    Lattices of any rank are allowed; the pairing is always
    ``diag(1, -1, ..., -1)``, so the same type serves the blow-up at a
    seventh point used by the Seshadri oracle.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("a divisor class needs at least one coefficient")
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def of(cls, *coeffs: int) -> DivisorClass:
        return cls(tuple(coeffs))

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def dot(self, other: DivisorClass) -> int:
        return pair(self, other)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        _check_rank(self, other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        _check_rank(self, other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __mul__(self, m: int) -> DivisorClass:
        if isinstance(m, bool) or not isinstance(m, int):
            return NotImplemented
        return DivisorClass(tuple(m * a for a in self.coeffs))

    __rmul__ = __mul__

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def __repr__(self) -> str:
        return "DivisorClass(" + ", ".join(map(str, self.coeffs)) + ")"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sym = "L" if k == 0 else f"E{k}"
            if c == 1:
                s = f"+{sym}"
            elif c == -1:
                s = f"-{sym}"
            else:
                s = f"{c:+d}{sym}"
            terms.append(s)
        if not terms:
            return "0"
        out = "".join(terms)
        return out[1:] if out.startswith("+") else out


def _check_rank(a: DivisorClass, b: DivisorClass) -> None:
    if len(a.coeffs) != len(b.coeffs):
        raise ValueError(f"rank mismatch: {len(a.coeffs)} vs {len(b.coeffs)}")


def pair(d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number ``a a' - sum b_i b_i'``."""
    _check_rank(d1, d2)
    a, b = d1.coeffs, d2.coeffs
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


def functional(d: DivisorClass) -> tuple[int, ...]:
    """Coefficient vector ``f`` with ``f . x == pair(d, x)`` (Euclidean dot)."""
    return (d.coeffs[0],) + tuple(-b for b in d.coeffs[1:])


def basis_vector(k: int, rank: int = RANK) -> DivisorClass:
    v = [0] * rank
    v[k] = 1
    return DivisorClass(tuple(v))


L = basis_vector(0)


def E(i: int, rank: int = RANK) -> DivisorClass:
    if not 1 <= i < rank:
        raise ValueError(f"exceptional index {i} out of range 1..{rank - 1}")
    return basis_vector(i, rank)


SUM_E = DivisorClass((0,) + (1,) * N_POINTS)
K = DivisorClass((-3,) + (1,) * N_POINTS)
ANTI_K = -K
HYPERPLANE = ANTI_K


# ---------------------------------------------------------------------------
# named classes

_TAGS = ("L", "E", "F", "G", "K", "AntiK", "Hyperplane", "Li", "Lij", "B")
_ARITY = {"L": 0, "K": 0, "AntiK": 0, "Hyperplane": 0,
          "E": 1, "G": 1, "Li": 1, "B": 1, "F": 2, "Lij": 2}


@dataclass(frozen=True)
class ClassName:
    """Symbolic name of a standard class, e.g. ``ClassName("Lij", 5, 6)``.

    Text form: ``L``, ``E3``, ``F12``, ``G4``, ``K``, ``-K``, ``h``, ``L1``
    (``L - E1``), ``L56`` (the conic class ``L_{56}``) and ``B2``.
    """

    tag: str
    i: int | None = None
    j: int | None = None

    def __post_init__(self) -> None:
        if self.tag not in _TAGS:
            raise ValueError(f"unknown class tag {self.tag!r}")
        idx = [x for x in (self.i, self.j) if x is not None]
        if len(idx) != _ARITY[self.tag]:
            raise ValueError(f"{self.tag} takes {_ARITY[self.tag]} indices, got {len(idx)}")
        if self.j is not None and self.i is None:
            raise ValueError("second index given without the first")
        for x in idx:
            if not 1 <= x <= N_POINTS:
                raise ValueError(f"index {x} out of range 1..{N_POINTS}")
        if self.j is not None and not self.i < self.j:
            raise ValueError(f"indices must satisfy i < j, got {self.i}, {self.j}")

    def __str__(self) -> str:
        if self.tag == "AntiK":
            return "-K"
        if self.tag == "Hyperplane":
            return "h"
        prefix = "L" if self.tag in ("Li", "Lij") else self.tag
        return prefix + "".join(str(x) for x in (self.i, self.j) if x is not None)

    @classmethod
    def parse(cls, text: str) -> ClassName:
        s = text.strip().replace("_", "").replace("{", "").replace("}", "")
        if s == "-K":
            return cls("AntiK")
        if s == "h":
            return cls("Hyperplane")
        m = re.fullmatch(r"([LEFGKB])([1-6]*)", s)
        if m is None:
            raise ValueError(f"cannot parse class name {text!r}")
        letter, digits = m.groups()
        idx = [int(c) for c in digits]
        if letter == "L":
            tag = {0: "L", 1: "Li", 2: "Lij"}.get(len(idx))
        else:
            tag = letter
        if tag is None:
            raise ValueError(f"cannot parse class name {text!r}")
        idx += [None] * (2 - len(idx))
        return cls(tag, idx[0], idx[1])


def standard_class(name: ClassName | str) -> DivisorClass:
    """Resolve a class name to its vector in the basis ``L, E1..E6``."""
    if isinstance(name, str):
        name = ClassName.parse(name)
    return _standard_class(name)


@lru_cache(maxsize=None)
def _standard_class(name: ClassName) -> DivisorClass:
    tag, i, j = name.tag, name.i, name.j
    if tag == "L":
        return L
    if tag == "E":
        return E(i)
    if tag == "F":
        return L - E(i) - E(j)
    if tag == "G":
        return 2 * L - SUM_E + E(i)
    if tag == "K":
        return K
    if tag in ("AntiK", "Hyperplane"):
        return ANTI_K
    if tag == "Li":
        return L - E(i)
    if tag == "Lij":
        return 2 * L - SUM_E + E(i) + E(j)
    if tag == "B":
        return 3 * L - SUM_E - E(i)
    raise AssertionError(tag)


# ---------------------------------------------------------------------------
# lines and conic pencils

def _named_lines() -> tuple[tuple[ClassName, DivisorClass], ...]:
    names = [ClassName("E", i) for i in range(1, 7)]
    names += [ClassName("F", i, j) for i, j in itertools.combinations(range(1, 7), 2)]
    names += [ClassName("G", i) for i in range(1, 7)]
    out = tuple((n, standard_class(n)) for n in names)
    for n, c in out:
        if pair(c, c) != -1 or pair(c, K) != -1:
            raise AssertionError(f"{n} is not a (-1)-class")
    if len({c for _, c in out}) != 27:
        raise AssertionError("line classes are not distinct")
    return out


def _named_pencils() -> tuple[tuple[ClassName, DivisorClass], ...]:
    names = [ClassName("Li", i) for i in range(1, 7)]
    names += [ClassName("Lij", i, j) for i, j in itertools.combinations(range(1, 7), 2)]
    names += [ClassName("B", i) for i in range(1, 7)]
    out = tuple((n, standard_class(n)) for n in names)
    for n, c in out:
        if pair(c, c) != 0 or pair(c, ANTI_K) != 2:
            raise AssertionError(f"{n} is not a conic class")
    if len({c for _, c in out}) != 27:
        raise AssertionError("pencil classes are not distinct")
    return out


NAMED_LINES = _named_lines()
NAMED_PENCILS = _named_pencils()


def lines27() -> tuple[DivisorClass, ...]:
    """The 27 line classes: ``E_i``, ``L - E_i - E_j`` and ``2L - sum E + E_i``."""
    return tuple(c for _, c in NAMED_LINES)


def pencils27() -> tuple[DivisorClass, ...]:
    """The 27 conic pencils ``L_i``, ``L_ij``, ``B_i`` (the set S)."""
    return tuple(c for _, c in NAMED_PENCILS)


_PENCIL_NAMES = {c: n for n, c in NAMED_PENCILS}
_LINE_NAMES = {c: n for n, c in NAMED_LINES}


def pencil_name(c: DivisorClass) -> ClassName | None:
    return _PENCIL_NAMES.get(c)


def line_name(c: DivisorClass) -> ClassName | None:
    return _LINE_NAMES.get(c)


def is_nef(d: DivisorClass) -> bool:
    """Nef iff non-negative against all 27 lines."""
    return all(pair(d, ell) >= 0 for ell in lines27())


# ---------------------------------------------------------------------------
# Weyl group W(E6)

def is_root(r: DivisorClass) -> bool:
    return r.rank == RANK and pair(r, r) == -2 and pair(r, K) == 0


SIMPLE_ROOTS: tuple[DivisorClass, ...] = tuple(
    E(i) - E(i + 1) for i in range(1, 6)
) + (L - E(1) - E(2) - E(3),)


def reflect(d: DivisorClass, r: DivisorClass) -> DivisorClass:
    """Reflection in the root ``r``: ``D + (D.r) r``."""
    if not is_root(r):
        raise ValueError(f"{r!r} is not a root (need r.r = -2, r.K = 0)")
    return d + pair(d, r) * r


def apply_word(d: DivisorClass, word: Iterable[int]) -> DivisorClass:
    """Apply simple reflections ``SIMPLE_ROOTS[k]`` for k in ``word``, left to right."""
    for k in word:
        d = d + pair(d, SIMPLE_ROOTS[k]) * SIMPLE_ROOTS[k]
    return d


def weyl_orbit(d: DivisorClass) -> frozenset[DivisorClass]:
    """Closure of ``{d}`` under the six simple reflections."""
    return frozenset(_orbit_words(d))


def _orbit_words(d: DivisorClass) -> dict[DivisorClass, tuple[int, ...]]:
    seen = {d: ()}
    queue = deque([d])
    while queue:
        x = queue.popleft()
        for k in range(len(SIMPLE_ROOTS)):
            y = apply_word(x, (k,))
            if y not in seen:
                seen[y] = seen[x] + (k,)
                queue.append(y)
    return seen


def weyl_word(src: DivisorClass, dst: DivisorClass) -> tuple[int, ...]:
    """A word ``w`` in the simple reflections with ``apply_word(src, w) == dst``."""
    words = _orbit_words(src)
    if dst not in words:
        raise ValueError(f"{dst!r} is not in the Weyl orbit of {src!r}")
    return words[dst]


def parse_class(tokens: Sequence[str | int]) -> DivisorClass:
    """Seven integers in the basis ``L, E1..E6``."""
    if len(tokens) != RANK:
        raise ValueError(f"expected {RANK} integers, got {len(tokens)}")
    return DivisorClass(tuple(int(t) for t in tokens))
