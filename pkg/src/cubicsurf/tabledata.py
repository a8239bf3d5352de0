"""Generator tables of the nef cone and its two subcone types on a cubic surface.

Vectors are in the basis ``L, E1, ..., E6``.  Table 2 rows carry the
justification attached to each generator of ``Γ(L1)``: either the degree
``L1 . D_n`` or a decomposition of ``D_n`` into named classes and earlier
rows.  Table 3 rows carry the pencil ``C`` with ``G_n . C = (G_n . h)/2``.
Row order follows the source and is not meaningful across tables.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .picard import ClassName


@dataclass(frozen=True)
class Degree:
    """``L1 . D_n == value``."""

    value: int


@dataclass(frozen=True)
class RowRef:
    """Reference to row ``index`` (1-based) of the same table."""

    index: int


Term = Union[ClassName, RowRef]


@dataclass(frozen=True)
class Decomposition:
    """``D_n`` is the sum of the listed terms."""

    terms: tuple[Term, ...]


Reason = Union[Degree, Decomposition]


def _n(text: str) -> ClassName:
    return ClassName.parse(text)


TABLE_1 = (
    ( 2, -1, -1, -1,  0,  0,  0),  # 1
    ( 2, -1, -1,  0, -1,  0,  0),  # 2
    ( 2, -1, -1,  0,  0, -1,  0),  # 3
    ( 2, -1, -1,  0,  0,  0, -1),  # 4
    ( 2, -1,  0, -1, -1,  0,  0),  # 5
    ( 2, -1,  0, -1,  0, -1,  0),  # 6
    ( 2, -1,  0, -1,  0,  0, -1),  # 7
    ( 2, -1,  0,  0, -1, -1,  0),  # 8
    ( 2, -1,  0,  0, -1,  0, -1),  # 9
    ( 2, -1,  0,  0,  0, -1, -1),  # 10
    ( 1,  0,  0,  0,  0,  0,  0),  # 11
    ( 3, -2, -1, -1, -1, -1,  0),  # 12
    ( 3, -2, -1, -1, -1,  0, -1),  # 13
    ( 3, -2, -1, -1,  0, -1, -1),  # 14
    ( 3, -2, -1,  0, -1, -1, -1),  # 15
    ( 3, -2,  0, -1, -1, -1, -1),  # 16
    ( 1, -1,  0,  0,  0,  0,  0),  # 17
    ( 1,  0, -1,  0,  0,  0,  0),  # 18
    ( 1,  0,  0, -1,  0,  0,  0),  # 19
    ( 1,  0,  0,  0, -1,  0,  0),  # 20
    ( 1,  0,  0,  0,  0, -1,  0),  # 21
    ( 1,  0,  0,  0,  0,  0, -1),  # 22
    ( 2,  0, -1, -1, -1,  0,  0),  # 23
    ( 2,  0, -1, -1,  0, -1,  0),  # 24
    ( 2,  0, -1, -1,  0,  0, -1),  # 25
    ( 2,  0, -1,  0, -1, -1,  0),  # 26
    ( 2,  0, -1,  0, -1,  0, -1),  # 27
    ( 2,  0, -1,  0,  0, -1, -1),  # 28
    ( 2,  0,  0, -1, -1, -1,  0),  # 29
    ( 2,  0,  0, -1, -1,  0, -1),  # 30
    ( 2,  0,  0, -1,  0, -1, -1),  # 31
    ( 2,  0,  0,  0, -1, -1, -1),  # 32
    ( 2, -1, -1, -1, -1,  0,  0),  # 33
    ( 2, -1, -1, -1,  0, -1,  0),  # 34
    ( 2, -1, -1, -1,  0,  0, -1),  # 35
    ( 2, -1, -1,  0, -1, -1,  0),  # 36
    ( 2, -1, -1,  0, -1,  0, -1),  # 37
    ( 2, -1, -1,  0,  0, -1, -1),  # 38
    ( 2, -1,  0, -1, -1, -1,  0),  # 39
    ( 2, -1,  0, -1, -1,  0, -1),  # 40
    ( 2, -1,  0, -1,  0, -1, -1),  # 41
    ( 2, -1,  0,  0, -1, -1, -1),  # 42
    ( 2,  0, -1, -1, -1, -1,  0),  # 43
    ( 2,  0, -1, -1, -1,  0, -1),  # 44
    ( 2,  0, -1, -1,  0, -1, -1),  # 45
    ( 2,  0, -1,  0, -1, -1, -1),  # 46
    ( 2,  0,  0, -1, -1, -1, -1),  # 47
    ( 3, -1, -2, -1, -1, -1,  0),  # 48
    ( 3, -1, -2, -1, -1,  0, -1),  # 49
    ( 3, -1, -2, -1,  0, -1, -1),  # 50
    ( 3, -1, -2,  0, -1, -1, -1),  # 51
    ( 3, -1, -1, -2, -1, -1,  0),  # 52
    ( 3, -1, -1, -2, -1,  0, -1),  # 53
    ( 3, -1, -1, -2,  0, -1, -1),  # 54
    ( 3, -1, -1, -1, -2, -1,  0),  # 55
    ( 3, -1, -1, -1, -2,  0, -1),  # 56
    ( 3, -1, -1, -1, -1, -2,  0),  # 57
    ( 3, -1, -1, -1, -1,  0, -2),  # 58
    ( 3, -1, -1, -1,  0, -2, -1),  # 59
    ( 3, -1, -1, -1,  0, -1, -2),  # 60
    ( 3, -1, -1,  0, -2, -1, -1),  # 61
    ( 3, -1, -1,  0, -1, -2, -1),  # 62
    ( 3, -1, -1,  0, -1, -1, -2),  # 63
    ( 3, -1,  0, -2, -1, -1, -1),  # 64
    ( 3, -1,  0, -1, -2, -1, -1),  # 65
    ( 3, -1,  0, -1, -1, -2, -1),  # 66
    ( 3, -1,  0, -1, -1, -1, -2),  # 67
    ( 3,  0, -2, -1, -1, -1, -1),  # 68
    ( 3,  0, -1, -2, -1, -1, -1),  # 69
    ( 3,  0, -1, -1, -2, -1, -1),  # 70
    ( 3,  0, -1, -1, -1, -2, -1),  # 71
    ( 3,  0, -1, -1, -1, -1, -2),  # 72
    ( 3, -2, -1, -1, -1, -1, -1),  # 73
    ( 3, -1, -2, -1, -1, -1, -1),  # 74
    ( 3, -1, -1, -2, -1, -1, -1),  # 75
    ( 3, -1, -1, -1, -2, -1, -1),  # 76
    ( 3, -1, -1, -1, -1, -2, -1),  # 77
    ( 3, -1, -1, -1, -1, -1, -2),  # 78
    ( 4, -2, -2, -2, -1, -1, -1),  # 79
    ( 4, -2, -2, -1, -2, -1, -1),  # 80
    ( 4, -2, -2, -1, -1, -2, -1),  # 81
    ( 4, -2, -2, -1, -1, -1, -2),  # 82
    ( 4, -2, -1, -2, -2, -1, -1),  # 83
    ( 4, -2, -1, -2, -1, -2, -1),  # 84
    ( 4, -2, -1, -2, -1, -1, -2),  # 85
    ( 4, -2, -1, -1, -2, -2, -1),  # 86
    ( 4, -2, -1, -1, -2, -1, -2),  # 87
    ( 4, -2, -1, -1, -1, -2, -2),  # 88
    ( 4, -1, -2, -2, -2, -1, -1),  # 89
    ( 4, -1, -2, -2, -1, -2, -1),  # 90
    ( 4, -1, -2, -2, -1, -1, -2),  # 91
    ( 4, -1, -2, -1, -2, -2, -1),  # 92
    ( 4, -1, -2, -1, -2, -1, -2),  # 93
    ( 4, -1, -2, -1, -1, -2, -2),  # 94
    ( 4, -1, -1, -2, -2, -2, -1),  # 95
    ( 4, -1, -1, -2, -2, -1, -2),  # 96
    ( 4, -1, -1, -2, -1, -2, -2),  # 97
    ( 4, -1, -1, -1, -2, -2, -2),  # 98
    ( 5, -2, -2, -2, -2, -2, -2),  # 99
)

TABLE_2 = (
    (( 4, -3, -1, -1, -1, -1, -1), Degree(1)),  # 1
    (( 2, -1, -1,  0,  0,  0,  0), Degree(1)),  # 2
    (( 2, -1,  0, -1,  0,  0,  0), Degree(1)),  # 3
    (( 2, -1,  0,  0, -1,  0,  0), Degree(1)),  # 4
    (( 2, -1,  0,  0,  0, -1,  0), Degree(1)),  # 5
    (( 2, -1,  0,  0,  0,  0, -1), Degree(1)),  # 6
    (( 1,  0,  0,  0,  0,  0,  0), Degree(1)),  # 7
    (( 3, -2, -1, -1, -1,  0,  0), Degree(1)),  # 8
    (( 3, -2, -1, -1,  0, -1,  0), Degree(1)),  # 9
    (( 3, -2, -1, -1,  0,  0, -1), Degree(1)),  # 10
    (( 3, -2, -1,  0, -1, -1,  0), Degree(1)),  # 11
    (( 3, -2, -1,  0, -1,  0, -1), Degree(1)),  # 12
    (( 3, -2, -1,  0,  0, -1, -1), Degree(1)),  # 13
    (( 3, -2,  0, -1, -1, -1,  0), Degree(1)),  # 14
    (( 3, -2,  0, -1, -1,  0, -1), Degree(1)),  # 15
    (( 3, -2,  0, -1,  0, -1, -1), Degree(1)),  # 16
    (( 3, -2,  0,  0, -1, -1, -1), Degree(1)),  # 17
    (( 1, -1,  0,  0,  0,  0,  0), Degree(0)),  # 18
    (( 2, -1, -1, -1,  0,  0,  0), Degree(1)),  # 19
    (( 2, -1, -1,  0, -1,  0,  0), Degree(1)),  # 20
    (( 2, -1, -1,  0,  0, -1,  0), Degree(1)),  # 21
    (( 2, -1, -1,  0,  0,  0, -1), Degree(1)),  # 22
    (( 2, -1,  0, -1, -1,  0,  0), Degree(1)),  # 23
    (( 2, -1,  0, -1,  0, -1,  0), Degree(1)),  # 24
    (( 2, -1,  0, -1,  0,  0, -1), Degree(1)),  # 25
    (( 2, -1,  0,  0, -1, -1,  0), Degree(1)),  # 26
    (( 2, -1,  0,  0, -1,  0, -1), Degree(1)),  # 27
    (( 2, -1,  0,  0,  0, -1, -1), Degree(1)),  # 28
    (( 3, -1, -1, -1, -1,  0,  0), Decomposition((_n('L'), _n('L56'),))),  # 29
    (( 3, -1, -1, -1,  0, -1,  0), Decomposition((_n('L'), _n('L46'),))),  # 30
    (( 3, -1, -1, -1,  0,  0, -1), Decomposition((_n('L'), _n('L45'),))),  # 31
    (( 3, -1, -1,  0, -1, -1,  0), Decomposition((_n('L'), _n('L36'),))),  # 32
    (( 3, -1, -1,  0, -1,  0, -1), Decomposition((_n('L'), _n('L35'),))),  # 33
    (( 3, -1, -1,  0,  0, -1, -1), Decomposition((_n('L'), _n('L34'),))),  # 34
    (( 3, -1,  0, -1, -1, -1,  0), Decomposition((_n('L'), _n('L26'),))),  # 35
    (( 3, -1,  0, -1, -1,  0, -1), Decomposition((_n('L'), _n('L25'),))),  # 36
    (( 3, -1,  0, -1,  0, -1, -1), Decomposition((_n('L'), _n('L24'),))),  # 37
    (( 3, -1,  0,  0, -1, -1, -1), Decomposition((_n('L'), _n('L23'),))),  # 38
    (( 3, -1, -1, -1, -1, -1,  0), Decomposition((_n('L2'), _n('L26'),))),  # 39
    (( 3, -1, -1, -1, -1,  0, -1), Decomposition((_n('L2'), _n('L25'),))),  # 40
    (( 3, -1, -1, -1,  0, -1, -1), Decomposition((_n('L2'), _n('L24'),))),  # 41
    (( 3, -1, -1,  0, -1, -1, -1), Decomposition((_n('L2'), _n('L23'),))),  # 42
    (( 3, -1,  0, -1, -1, -1, -1), Decomposition((_n('L3'), _n('L23'),))),  # 43
    (( 4, -1, -1, -1, -1, -1, -1), Decomposition((_n('L23'), _n('L2'), _n('L3'),))),  # 44
    (( 3, -2, -1, -1, -1, -1,  0), Degree(1)),  # 45
    (( 3, -2, -1, -1, -1,  0, -1), Degree(1)),  # 46
    (( 3, -2, -1, -1,  0, -1, -1), Degree(1)),  # 47
    (( 3, -2, -1,  0, -1, -1, -1), Degree(1)),  # 48
    (( 3, -2,  0, -1, -1, -1, -1), Degree(1)),  # 49
    (( 4, -2, -2, -1, -1, -1,  0), Decomposition((RowRef(45), _n('L2'),))),  # 50
    (( 4, -2, -2, -1, -1,  0, -1), Decomposition((RowRef(46), _n('L2'),))),  # 51
    (( 4, -2, -2, -1,  0, -1, -1), Decomposition((RowRef(47), _n('L2'),))),  # 52
    (( 4, -2, -2,  0, -1, -1, -1), Decomposition((RowRef(48), _n('L2'),))),  # 53
    (( 4, -2, -1, -2, -1, -1,  0), Decomposition((RowRef(45), _n('L3'),))),  # 54
    (( 4, -2, -1, -2, -1,  0, -1), Decomposition((RowRef(46), _n('L3'),))),  # 55
    (( 4, -2, -1, -2,  0, -1, -1), Decomposition((RowRef(47), _n('L3'),))),  # 56
    (( 4, -2, -1, -1, -2, -1,  0), Decomposition((RowRef(45), _n('L4'),))),  # 57
    (( 4, -2, -1, -1, -2,  0, -1), Decomposition((RowRef(46), _n('L4'),))),  # 58
    (( 4, -2, -1, -1, -1, -2,  0), Decomposition((RowRef(45), _n('L5'),))),  # 59
    (( 4, -2, -1, -1, -1,  0, -2), Decomposition((RowRef(46), _n('L6'),))),  # 60
    (( 4, -2, -1, -1,  0, -2, -1), Decomposition((RowRef(47), _n('L5'),))),  # 61
    (( 4, -2, -1, -1,  0, -1, -2), Decomposition((RowRef(47), _n('L6'),))),  # 62
    (( 4, -2, -1,  0, -2, -1, -1), Decomposition((RowRef(48), _n('L4'),))),  # 63
    (( 4, -2, -1,  0, -1, -2, -1), Decomposition((RowRef(48), _n('L5'),))),  # 64
    (( 4, -2, -1,  0, -1, -1, -2), Decomposition((RowRef(48), _n('L6'),))),  # 65
    (( 4, -2,  0, -2, -1, -1, -1), Decomposition((RowRef(49), _n('L3'),))),  # 66
    (( 4, -2,  0, -1, -2, -1, -1), Decomposition((RowRef(49), _n('L4'),))),  # 67
    (( 4, -2,  0, -1, -1, -2, -1), Decomposition((RowRef(49), _n('L5'),))),  # 68
    (( 4, -2,  0, -1, -1, -1, -2), Decomposition((RowRef(49), _n('L6'),))),  # 69
    (( 4, -2, -2, -1, -1, -1, -1), Decomposition((_n('B1'), _n('L2'),))),  # 70
    (( 4, -2, -1, -2, -1, -1, -1), Decomposition((_n('B1'), _n('L3'),))),  # 71
    (( 4, -2, -1, -1, -2, -1, -1), Decomposition((_n('B1'), _n('L4'),))),  # 72
    (( 4, -2, -1, -1, -1, -2, -1), Decomposition((_n('B1'), _n('L5'),))),  # 73
    (( 4, -2, -1, -1, -1, -1, -2), Decomposition((_n('B1'), _n('L6'),))),  # 74
    (( 5, -2, -2, -2, -1, -1, -1), Decomposition((_n('L3'), _n('L34'), _n('L56'),))),  # 75
    (( 5, -2, -2, -1, -2, -1, -1), Decomposition((_n('L2'), _n('L23'), _n('L56'),))),  # 76
    (( 5, -2, -2, -1, -1, -2, -1), Decomposition((_n('L2'), _n('L23'), _n('L46'),))),  # 77
    (( 5, -2, -2, -1, -1, -1, -2), Decomposition((_n('L2'), _n('L23'), _n('L45'),))),  # 78
    (( 5, -2, -1, -2, -2, -1, -1), Decomposition((_n('L3'), _n('L23'), _n('L56'),))),  # 79
    (( 5, -2, -1, -2, -1, -2, -1), Decomposition((_n('L3'), _n('L23'), _n('L46'),))),  # 80
    (( 5, -2, -1, -2, -1, -1, -2), Decomposition((_n('L3'), _n('L23'), _n('L45'),))),  # 81
    (( 5, -2, -1, -1, -2, -2, -1), Decomposition((_n('L4'), _n('L23'), _n('L46'),))),  # 82
    (( 5, -2, -1, -1, -2, -1, -2), Decomposition((_n('L4'), _n('L23'), _n('L45'),))),  # 83
    (( 5, -2, -1, -1, -1, -2, -2), Decomposition((_n('L5'), _n('L23'), _n('L45'),))),  # 84
    (( 5, -3, -2, -2, -1, -1, -1), Decomposition((RowRef(45), _n('L45'),))),  # 85
    (( 5, -3, -2, -1, -2, -1, -1), Decomposition((RowRef(45), _n('L35'),))),  # 86
    (( 5, -3, -2, -1, -1, -2, -1), Decomposition((RowRef(45), _n('L34'),))),  # 87
    (( 5, -3, -2, -1, -1, -1, -2), Decomposition((RowRef(46), _n('L34'),))),  # 88
    (( 5, -3, -1, -2, -2, -1, -1), Decomposition((RowRef(45), _n('L25'),))),  # 89
    (( 5, -3, -1, -2, -1, -2, -1), Decomposition((RowRef(45), _n('L24'),))),  # 90
    (( 5, -3, -1, -2, -1, -1, -2), Decomposition((RowRef(46), _n('L24'),))),  # 91
    (( 5, -3, -1, -1, -2, -2, -1), Decomposition((RowRef(45), _n('L23'),))),  # 92
    (( 5, -3, -1, -1, -2, -1, -2), Decomposition((RowRef(46), _n('L23'),))),  # 93
    (( 5, -3, -1, -1, -1, -2, -2), Decomposition((RowRef(47), _n('L23'),))),  # 94
    (( 6, -3, -2, -2, -2, -2, -1), Decomposition((_n('L23'), _n('L46'), _n('L56'),))),  # 95
    (( 6, -3, -2, -2, -2, -1, -2), Decomposition((_n('L23'), _n('L45'), _n('L56'),))),  # 96
    (( 6, -3, -2, -2, -1, -2, -2), Decomposition((_n('L23'), _n('L45'), _n('L46'),))),  # 97
    (( 6, -3, -2, -1, -2, -2, -2), Decomposition((_n('L23'), _n('L34'), _n('L56'),))),  # 98
    (( 6, -3, -1, -2, -2, -2, -2), Decomposition((_n('L23'), _n('L24'), _n('L56'),))),  # 99
)

TABLE_3 = (
    (( 8, -3, -3, -3, -3, -3, -3), _n('B1')),  # 1
    (( 4, -1, -1, -1, -1, -1, -1), _n('L1')),  # 2
    (( 4, -2, -2, -1, -1, -1, -1), _n('L1')),  # 3
    (( 4, -2, -1, -2, -1, -1, -1), _n('L1')),  # 4
    (( 4, -2, -1, -1, -2, -1, -1), _n('L1')),  # 5
    (( 4, -2, -1, -1, -1, -2, -1), _n('L1')),  # 6
    (( 4, -2, -1, -1, -1, -1, -2), _n('L1')),  # 7
    (( 4, -1, -2, -2, -1, -1, -1), _n('L2')),  # 8
    (( 4, -1, -2, -1, -2, -1, -1), _n('L2')),  # 9
    (( 4, -1, -2, -1, -1, -2, -1), _n('L2')),  # 10
    (( 4, -1, -2, -1, -1, -1, -2), _n('L2')),  # 11
    (( 4, -1, -1, -2, -2, -1, -1), _n('L3')),  # 12
    (( 4, -1, -1, -2, -1, -2, -1), _n('L3')),  # 13
    (( 4, -1, -1, -2, -1, -1, -2), _n('L3')),  # 14
    (( 4, -1, -1, -1, -2, -2, -1), _n('L4')),  # 15
    (( 4, -1, -1, -1, -2, -1, -2), _n('L4')),  # 16
    (( 4, -1, -1, -1, -1, -2, -2), _n('L5')),  # 17
    (( 5, -2, -2, -2, -1, -1, -1), _n('L1')),  # 18
    (( 5, -2, -2, -1, -2, -1, -1), _n('L1')),  # 19
    (( 5, -2, -2, -1, -1, -2, -1), _n('L1')),  # 20
    (( 5, -2, -2, -1, -1, -1, -2), _n('L1')),  # 21
    (( 5, -2, -1, -2, -2, -1, -1), _n('L1')),  # 22
    (( 5, -2, -1, -2, -1, -2, -1), _n('L1')),  # 23
    (( 5, -2, -1, -2, -1, -1, -2), _n('L1')),  # 24
    (( 5, -2, -1, -1, -2, -2, -1), _n('L1')),  # 25
    (( 5, -2, -1, -1, -2, -1, -2), _n('L1')),  # 26
    (( 5, -2, -1, -1, -1, -2, -2), _n('L1')),  # 27
    (( 5, -1, -2, -2, -2, -1, -1), _n('L2')),  # 28
    (( 5, -1, -2, -2, -1, -2, -1), _n('L2')),  # 29
    (( 5, -1, -2, -2, -1, -1, -2), _n('L2')),  # 30
    (( 5, -1, -2, -1, -2, -2, -1), _n('L2')),  # 31
    (( 5, -1, -2, -1, -2, -1, -2), _n('L2')),  # 32
    (( 5, -1, -2, -1, -1, -2, -2), _n('L2')),  # 33
    (( 5, -1, -1, -2, -2, -2, -1), _n('L3')),  # 34
    (( 5, -1, -1, -2, -2, -1, -2), _n('L3')),  # 35
    (( 5, -1, -1, -2, -1, -2, -2), _n('L3')),  # 36
    (( 5, -1, -1, -1, -2, -2, -2), _n('L4')),  # 37
    (( 7, -3, -3, -3, -2, -2, -2), _n('B1')),  # 38
    (( 7, -3, -3, -2, -3, -2, -2), _n('B1')),  # 39
    (( 7, -3, -3, -2, -2, -3, -2), _n('B1')),  # 40
    (( 7, -3, -3, -2, -2, -2, -3), _n('B1')),  # 41
    (( 7, -3, -2, -3, -3, -2, -2), _n('B1')),  # 42
    (( 7, -3, -2, -3, -2, -3, -2), _n('B1')),  # 43
    (( 7, -3, -2, -3, -2, -2, -3), _n('B1')),  # 44
    (( 7, -3, -2, -2, -3, -3, -2), _n('B1')),  # 45
    (( 7, -3, -2, -2, -3, -2, -3), _n('B1')),  # 46
    (( 7, -3, -2, -2, -2, -3, -3), _n('B1')),  # 47
    (( 7, -2, -3, -3, -3, -2, -2), _n('B2')),  # 48
    (( 7, -2, -3, -3, -2, -3, -2), _n('B2')),  # 49
    (( 7, -2, -3, -3, -2, -2, -3), _n('B2')),  # 50
    (( 7, -2, -3, -2, -3, -3, -2), _n('B2')),  # 51
    (( 7, -2, -3, -2, -3, -2, -3), _n('B2')),  # 52
    (( 7, -2, -3, -2, -2, -3, -3), _n('B2')),  # 53
    (( 7, -2, -2, -3, -3, -3, -2), _n('B3')),  # 54
    (( 7, -2, -2, -3, -3, -2, -3), _n('B3')),  # 55
    (( 7, -2, -2, -3, -2, -3, -3), _n('B3')),  # 56
    (( 7, -2, -2, -2, -3, -3, -3), _n('B4')),  # 57
    (( 6, -3, -2, -2, -2, -2, -1), _n('B1')),  # 58
    (( 6, -3, -2, -2, -2, -1, -2), _n('B1')),  # 59
    (( 6, -3, -2, -2, -1, -2, -2), _n('B1')),  # 60
    (( 6, -3, -2, -1, -2, -2, -2), _n('B1')),  # 61
    (( 6, -3, -1, -2, -2, -2, -2), _n('B1')),  # 62
    (( 6, -2, -3, -2, -2, -2, -1), _n('B2')),  # 63
    (( 6, -2, -3, -2, -2, -1, -2), _n('B2')),  # 64
    (( 6, -2, -3, -2, -1, -2, -2), _n('B2')),  # 65
    (( 6, -2, -3, -1, -2, -2, -2), _n('B2')),  # 66
    (( 6, -2, -2, -3, -2, -2, -1), _n('B3')),  # 67
    (( 6, -2, -2, -3, -2, -1, -2), _n('B3')),  # 68
    (( 6, -2, -2, -3, -1, -2, -2), _n('B3')),  # 69
    (( 6, -2, -2, -2, -3, -2, -1), _n('B4')),  # 70
    (( 6, -2, -2, -2, -3, -1, -2), _n('B4')),  # 71
    (( 6, -2, -2, -2, -2, -3, -1), _n('B5')),  # 72
    (( 6, -2, -2, -2, -2, -1, -3), _n('B6')),  # 73
    (( 6, -2, -2, -2, -1, -3, -2), _n('B5')),  # 74
    (( 6, -2, -2, -2, -1, -2, -3), _n('B6')),  # 75
    (( 6, -2, -2, -1, -3, -2, -2), _n('B4')),  # 76
    (( 6, -2, -2, -1, -2, -3, -2), _n('B5')),  # 77
    (( 6, -2, -2, -1, -2, -2, -3), _n('B6')),  # 78
    (( 6, -2, -1, -3, -2, -2, -2), _n('B3')),  # 79
    (( 6, -2, -1, -2, -3, -2, -2), _n('B4')),  # 80
    (( 6, -2, -1, -2, -2, -3, -2), _n('B5')),  # 81
    (( 6, -2, -1, -2, -2, -2, -3), _n('B6')),  # 82
    (( 6, -1, -3, -2, -2, -2, -2), _n('B2')),  # 83
    (( 6, -1, -2, -3, -2, -2, -2), _n('B3')),  # 84
    (( 6, -1, -2, -2, -3, -2, -2), _n('B4')),  # 85
    (( 6, -1, -2, -2, -2, -3, -2), _n('B5')),  # 86
    (( 6, -1, -2, -2, -2, -2, -3), _n('B6')),  # 87
    (( 5, -2, -2, -2, -2, -2, -1), _n('B1')),  # 88
    (( 5, -2, -2, -2, -2, -1, -2), _n('B1')),  # 89
    (( 5, -2, -2, -2, -1, -2, -2), _n('B1')),  # 90
    (( 5, -2, -2, -1, -2, -2, -2), _n('B1')),  # 91
    (( 5, -2, -1, -2, -2, -2, -2), _n('B1')),  # 92
    (( 5, -1, -2, -2, -2, -2, -2), _n('B2')),  # 93
    (( 3, -1, -1, -1, -1, -1,  0), _n('L1')),  # 94
    (( 3, -1, -1, -1, -1,  0, -1), _n('L1')),  # 95
    (( 3, -1, -1, -1,  0, -1, -1), _n('L1')),  # 96
    (( 3, -1, -1,  0, -1, -1, -1), _n('L1')),  # 97
    (( 3, -1,  0, -1, -1, -1, -1), _n('L1')),  # 98
    (( 3,  0, -1, -1, -1, -1, -1), _n('L2')),  # 99
)

