import csv
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cubicsurf.constants import BranchDatum, alpha_rational_curve
from cubicsurf.heights import (
    PRECISION_BITS,
    ProductPoint,
    ProjectivePoint,
    SequenceSpec,
    distance,
    estimate_alpha,
    estimate_sequence,
    estimate_split_quadric,
    generate,
    height,
    log_distance,
    nodal_point,
    sequence_rows,
    write_csv,
)

P = ProjectivePoint.of
coords = st.lists(st.integers(-10**6, 10**6), min_size=3, max_size=3).filter(any)


def test_normalization():
    assert P(4, 6) == P(2, 3) == P(-2, -3)
    assert P(0, -5, 10).coords == (0, 1, -2)
    assert ProjectivePoint.from_rational(Fraction(-6, 4)).coords == (3, -2)
    with pytest.raises(ValueError):
        P(0, 0)
    with pytest.raises(ValueError):
        P(3)


def test_height_examples():
    assert height(P(1, 0)) == 1
    assert height(ProjectivePoint.from_rational(Fraction(22, 7))) == 22
    assert height(P(4, 6)) == 3


def test_distance_examples():
    x = P(1, 0)
    assert distance(x, x) == 0
    for n in (1, 2, 10, 10**20):
        # d^2 = 1 / (n^2 + 1)
        assert _close(distance(x, P(n, 1)), Fraction(1, n * n + 1))
    assert distance(P(1, 0, 0), P(0, 1, 0)) == 1


def _close(d, exact_square: Fraction) -> bool:
    """``d^2`` agrees with an exact fraction to the working precision."""
    num, den = exact_square.numerator, exact_square.denominator
    return abs(d * d * den - num) <= 2 ** (8 - PRECISION_BITS) * max(num, 1)


@given(coords, coords)
def test_distance_symmetric_and_bounded(a, b):
    p, q = ProjectivePoint(tuple(a)), ProjectivePoint(tuple(b))
    d = distance(p, q)
    assert d == distance(q, p)
    assert 0 <= d <= 1
    # exact squared distance as a fraction
    xx, yy = sum(x * x for x in a), sum(y * y for y in b)
    xy = sum(x * y for x, y in zip(a, b))
    exact = Fraction(xx * yy - xy * xy, xx * yy)
    if exact:
        assert _close(d, exact)
    else:
        assert d == 0


def test_distance_dimension_mismatch():
    with pytest.raises(ValueError):
        distance(P(1, 0), P(1, 0, 0))


def test_log_distance_of_coincident_points():
    with pytest.raises(ValueError):
        log_distance(P(1, 2), P(2, 4))


def test_huge_heights_keep_precision():
    n = 10**500
    ld = log_distance(P(0, 1), P(1, n))
    assert abs(float(ld) + 500 * math.log(10)) < 1e-12


def test_product_distance_is_max():
    a = ProductPoint((P(0, 1), P(0, 1)))
    b = ProductPoint((P(1, 10), P(1, 2)))
    assert distance(a, b) == distance(P(0, 1), P(1, 2))


# ---------------------------------------------------------------------------
# sequences

def test_line_sequence():
    seq = generate(SequenceSpec("line", 10))
    assert seq.target == P(0, 1)
    assert seq.points[4] == P(1, 5)
    seq = generate(SequenceSpec.parse("line:1/3", 10))
    assert seq.points[0] == ProjectivePoint.from_rational(Fraction(4, 3))


def test_cusp_sequence():
    seq = generate(SequenceSpec("cusp", 12))
    for i, p in enumerate(seq.points, 1):
        assert p == P(i, 1, i ** 3)
        x, y, z = p.coords
        assert y * y * z == x ** 3


@pytest.mark.parametrize("sign", [1, -1])
def test_nodal_points_on_curve(sign):
    for n in range(1, 40):
        t = sign * Fraction(n + 1, n)
        x, y = t * t - 1, t * (t * t - 1)
        assert nodal_point(n, sign) == P(*(v * n ** 3 for v in (x, y, Fraction(1))))
        a, b, c = nodal_point(n, sign).coords
        assert b * b * c == a ** 3 + a * a * c


def test_geometric_schedule():
    seq = generate(SequenceSpec("line", 10, schedule="geometric"))
    assert seq.parameters == tuple(2 ** i for i in range(1, 11))


def test_spec_parse_and_errors():
    assert SequenceSpec.parse("node:-1", 20).sign == -1
    assert SequenceSpec.parse("quadric:2,3,diagonal", 20).ruling == "diagonal"
    for bad in ("circle", "quadric:1", "cusp:2"):
        with pytest.raises(ValueError):
            SequenceSpec.parse(bad, 20)
    with pytest.raises(ValueError):
        SequenceSpec("line", 9)
    with pytest.raises(ValueError):
        SequenceSpec("nodal", 20, sign=2)
    with pytest.raises(ValueError):
        SequenceSpec("quadric", 20, a=0)


# ---------------------------------------------------------------------------
# estimates

def test_line_estimate():
    est = estimate_sequence(generate(SequenceSpec("line", 1000)))
    assert abs(est.estimate - 1) < 0.01
    assert est.distances_decreasing


def test_cusp_estimate_matches_curve_formula():
    est = estimate_sequence(generate(SequenceSpec("cusp", 1000)))
    assert abs(est.estimate - float(alpha_rational_curve(3, [BranchDatum(2, 1)]))) < 0.05


def test_nodal_estimate():
    est = estimate_sequence(generate(SequenceSpec("nodal", 400, schedule="geometric")))
    assert abs(est.estimate - 3) < 0.05


def test_nodal_branches_agree():
    plus = estimate_sequence(generate(SequenceSpec("nodal", 200, sign=1, schedule="geometric")))
    minus = estimate_sequence(generate(SequenceSpec("nodal", 200, sign=-1, schedule="geometric")))
    assert abs(plus.estimate - minus.estimate) < 0.05


@pytest.mark.parametrize("a, b", [(1, 1), (1, 2), (2, 3), (3, 1)])
def test_split_quadric(a, b):
    best, per = estimate_split_quadric(a, b, 500)
    assert abs(best - min(a, b)) < 0.05
    assert abs(per["first"].estimate - a) < 0.05
    assert abs(per["second"].estimate - b) < 0.05
    assert abs(per["diagonal"].estimate - (a + b)) < 0.05


@pytest.mark.parametrize("scale", [Fraction(1, 2), 2])
def test_distance_scale_effect_shrinks(scale):
    def shift(length):
        seq = generate(SequenceSpec("line", length))
        return abs(estimate_sequence(seq, distance_scale=scale).estimate - estimate_sequence(seq).estimate)
    assert shift(1000) < shift(100)
    # first order: gamma shifts by |log c| / (log n - log c) at the tail median n ~ 3L/4
    n, c = 750, float(scale)
    assert abs(shift(1000) - abs(math.log(c)) / (math.log(n) - math.log(c))) < 0.02


def test_degree_raises_height():
    seq = generate(SequenceSpec("line", 100))
    one = estimate_alpha(seq.points, seq.target)
    two = estimate_alpha(seq.points, seq.target, degree=2)
    assert abs(two.estimate - 2 * one.estimate) < 1e-9


def test_estimate_errors():
    with pytest.raises(ValueError):
        estimate_alpha([P(1, 1)], P(0, 1))
    with pytest.raises(ValueError):
        estimate_alpha([P(1, 1), P(0, 1)], P(0, 1))
    with pytest.raises(ValueError):
        estimate_alpha([ProductPoint((P(1, 1), P(0, 1)))] * 2, ProductPoint((P(0, 1), P(0, 1))))


def test_csv_output(tmp_path):
    seq = generate(SequenceSpec("cusp", 20))
    est = estimate_sequence(seq)
    path = tmp_path / "cusp.csv"
    write_csv(path, seq, est)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["i", "height", "distance", "gamma"]
    assert len(rows) == 21
    assert rows[1:] == [[str(x) for x in r] for r in sequence_rows(seq, est)]
    assert int(rows[5][1]) == 125
