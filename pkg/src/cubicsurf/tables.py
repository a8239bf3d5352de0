"""Embedded generator tables and their verification against the cone engine."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from . import tabledata
from .cones import Membership, contains, is_extreme, nef_cone, subcone
from .constants import seshadri
from .picard import HYPERPLANE, ClassName, DivisorClass, pair, standard_class
from .tabledata import Decomposition, Degree, Reason, RowRef

L1 = standard_class("L1")


@dataclass(frozen=True)
class TableRow:
    table_id: int
    index: int
    cls: DivisorClass
    annotation: Union[Reason, ClassName, None] = None


def table_rows(table_id: int) -> list[TableRow]:
    if table_id == 1:
        return [TableRow(1, n, DivisorClass(v)) for n, v in enumerate(tabledata.TABLE_1, 1)]
    if table_id == 2:
        return [TableRow(2, n, DivisorClass(v), r) for n, (v, r) in enumerate(tabledata.TABLE_2, 1)]
    if table_id == 3:
        return [TableRow(3, n, DivisorClass(v), c) for n, (v, c) in enumerate(tabledata.TABLE_3, 1)]
    raise ValueError(f"no table {table_id!r}; valid ids are 1, 2, 3")


def computed_cone(table_id: int):
    if table_id == 1:
        return nef_cone()
    if table_id == 2:
        return subcone(L1)
    if table_id == 3:
        return subcone("hyperplane")
    raise ValueError(f"no table {table_id!r}; valid ids are 1, 2, 3")


TABLE_TITLES = {
    1: "nef cone",
    2: "subcone Gamma(L1)",
    3: "subcone Gamma(h)",
}


@dataclass(frozen=True)
class RowVerdict:
    table_id: int
    index: int
    passed: bool
    checks: tuple[tuple[str, bool], ...] = ()
    witness: str = ""


@dataclass(frozen=True)
class VerificationReport:
    name: str
    verdicts: tuple[RowVerdict, ...]
    missing: tuple[DivisorClass, ...] = ()
    extra: tuple[DivisorClass, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts) and not self.missing and not self.extra

    def failures(self) -> list[RowVerdict]:
        return [v for v in self.verdicts if not v.passed]


def verify_table(table_id: int) -> VerificationReport:
    """Compare a table with the computed cone, as sets of primitive rays."""
    rows = table_rows(table_id)
    computed = set(computed_cone(table_id).rays)
    listed = {r.cls for r in rows}
    verdicts = tuple(
        RowVerdict(table_id, r.index, r.cls in computed, (("computed-ray", r.cls in computed),))
        for r in rows
    )
    notes = ()
    if len(listed) != len(rows):
        notes = (f"table lists {len(rows) - len(listed)} duplicate rows",)
    return VerificationReport(
        name=f"table {table_id} ({TABLE_TITLES[table_id]})",
        verdicts=verdicts,
        missing=tuple(sorted(computed - listed)),
        extra=tuple(sorted(listed - computed)),
        notes=notes,
    )


def resolve_term(term, rows: list[TableRow]) -> DivisorClass:
    if isinstance(term, RowRef):
        if not 1 <= term.index <= len(rows):
            raise ValueError(f"row reference {term.index} out of range")
        return rows[term.index - 1].cls
    return standard_class(term)


def _term_text(term) -> str:
    return f"D{term.index}" if isinstance(term, RowRef) else str(term)


def _verify_table2_row(row: TableRow, rows: list[TableRow]) -> RowVerdict:
    d = row.cls
    reason = row.annotation
    checks = []
    if isinstance(reason, Degree):
        got = pair(L1, d)
        checks.append(("degree", got == reason.value))
        witness = f"L1.D{row.index}={got}"
    elif isinstance(reason, Decomposition):
        total = DivisorClass((0,) * 7)
        for t in reason.terms:
            total = total + resolve_term(t, rows)
        checks.append(("sum", total == d))
        witness = "+".join(_term_text(t) for t in reason.terms) + f"={tuple(total)}"
    else:
        raise TypeError(f"row {row.index} has no reason")
    eps = seshadri(d).value
    checks.append(("seshadri=D.L1", eps == pair(d, L1)))
    witness += f"; eps={eps}"
    return RowVerdict(2, row.index, all(ok for _, ok in checks), tuple(checks), witness)


def _verify_table3_row(row: TableRow) -> RowVerdict:
    g = row.cls
    c = standard_class(row.annotation)
    half_h = Fraction(pair(g, HYPERPLANE), 2)
    cone = subcone(c)
    checks = (
        ("G.C=(G.h)/2", pair(g, c) == half_h),
        ("extreme-in-Gamma(C)", g in cone.rays and is_extreme(cone.functionals(), g.coeffs)),
        ("seshadri=(G.h)/2", seshadri(g).value == half_h),
    )
    witness = f"G.{row.annotation}={pair(g, c)}; (G.h)/2={half_h}"
    return RowVerdict(3, row.index, all(ok for _, ok in checks), checks, witness)


def verify_reasons() -> VerificationReport:
    """Check every Table 2 reason and every Table 3 pencil annotation."""
    rows2 = table_rows(2)
    verdicts = [_verify_table2_row(r, rows2) for r in rows2]
    verdicts += [_verify_table3_row(r) for r in table_rows(3)]
    return VerificationReport(name="reasons (tables 2 and 3)", verdicts=tuple(verdicts))


def cone_membership(table_id: int, d: DivisorClass) -> Membership:
    return contains(computed_cone(table_id), d)
