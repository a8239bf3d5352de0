import pytest

from cubicsurf.linalg import primitive
from cubicsurf.picard import HYPERPLANE, ClassName, DivisorClass, is_nef, pair, pencils27, standard_class
from cubicsurf.tabledata import Decomposition, Degree, RowRef
from cubicsurf.tables import (
    Membership,
    cone_membership,
    resolve_term,
    table_rows,
    verify_reasons,
    verify_table,
)

L1 = DivisorClass.of(1, -1, 0, 0, 0, 0, 0)


def test_row_examples():
    assert table_rows(1)[0].cls == DivisorClass.of(2, -1, -1, -1, 0, 0, 0)
    r18 = table_rows(2)[17]
    assert r18.cls == L1
    assert r18.annotation == Degree(0)
    r1 = table_rows(3)[0]
    assert r1.cls == DivisorClass.of(8, -3, -3, -3, -3, -3, -3)
    assert r1.annotation == ClassName("B", 1)


@pytest.mark.parametrize("table_id", [1, 2, 3])
def test_rows_primitive_nef_distinct(table_id):
    rows = table_rows(table_id)
    assert len(rows) == 99
    assert [r.index for r in rows] == list(range(1, 100))
    assert len({r.cls for r in rows}) == 99
    for r in rows:
        assert primitive(r.cls.coeffs) == r.cls.coeffs
        assert is_nef(r.cls)


def test_table_2_reason_kinds():
    rows = table_rows(2)
    kinds = [type(r.annotation) for r in rows]
    assert kinds.count(Degree) + kinds.count(Decomposition) == 99
    for r in rows:
        if isinstance(r.annotation, Decomposition):
            for t in r.annotation.terms:
                s = resolve_term(t, rows)
                assert is_nef(s)
                if isinstance(t, RowRef):
                    assert t.index != r.index


def test_decomposition_examples():
    rows = table_rows(2)
    # L + L56 and L23 + L2 + L3, summed by hand
    assert rows[28].cls == DivisorClass.of(1, 0, 0, 0, 0, 0, 0) + DivisorClass.of(2, -1, -1, -1, -1, 0, 0)
    assert rows[28].annotation == Decomposition((ClassName("L"), ClassName("Lij", 5, 6)))
    assert rows[43].cls == (DivisorClass.of(2, -1, 0, 0, -1, -1, -1)
                            + DivisorClass.of(1, 0, -1, 0, 0, 0, 0)
                            + DivisorClass.of(1, 0, 0, -1, 0, 0, 0))


def test_table_3_annotations_are_pencils():
    pencils = set(pencils27())
    for r in table_rows(3):
        c = standard_class(r.annotation)
        assert c in pencils
        assert 2 * pair(r.cls, c) == pair(r.cls, HYPERPLANE)


@pytest.mark.parametrize("table_id", [1, 2, 3])
def test_verify_table(table_id):
    report = verify_table(table_id)
    assert report.passed, report.failures()
    assert not report.missing and not report.extra


def test_verify_reasons():
    report = verify_reasons()
    assert len(report.verdicts) == 198
    assert report.passed, [(v.table_id, v.index, v.witness) for v in report.failures()]
    assert all(v.checks for v in report.verdicts)


def test_invalid_table_id():
    with pytest.raises(ValueError):
        table_rows(4)
    with pytest.raises(ValueError):
        verify_table(0)


def test_row_reference_out_of_range():
    with pytest.raises(ValueError):
        resolve_term(RowRef(100), table_rows(2))


def test_cone_membership():
    assert cone_membership(1, -HYPERPLANE) is Membership.OUTSIDE
    assert cone_membership(3, HYPERPLANE) is Membership.INTERIOR
    assert cone_membership(2, L1) is Membership.BOUNDARY
