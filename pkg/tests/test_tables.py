"""Row-by-row agreement of the tangent and secant interpretation tables."""

import pytest

from qzigzag.tables import (
    SECANT_ROWS,
    TANGENT_ROWS,
    remark_cross_class_checks,
    row_check,
)


@pytest.mark.parametrize("row", TANGENT_ROWS, ids=lambda r: r.row_id)
@pytest.mark.parametrize("n", [0, 1, 2])
def test_tangent_rows(row, n):
    report = row_check(row, n, 12, "tangent")
    assert report.verdict, report.summary()


@pytest.mark.parametrize("row", SECANT_ROWS, ids=lambda r: r.row_id)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_secant_rows(row, n):
    report = row_check(row, n, 12, "secant")
    assert report.verdict, report.summary()


def test_tangent_star_is_the_class():
    # the tangent table's starred entry varies the class, not the subword
    for row in TANGENT_ROWS:
        readings = row.i_readings()
        assert {klass for klass, _ in readings} == {"Alt", "Ralt"}
        assert len({expr for _, expr in readings}) == 1


def test_secant_star_is_the_subword():
    starred = [row for row in SECANT_ROWS if row.i_expr.endswith("_*")]
    assert len(starred) == 4
    for row in starred:
        readings = row.i_readings()
        assert {expr[-1] for _, expr in readings} == {"o", "e"}
        assert {klass for klass, _ in readings} == {row.i_class}


def test_shapes_have_the_right_sizes():
    for n in (1, 2, 3):
        for row in TANGENT_ROWS:
            assert row.shape(n).size == 2 * n + 1
        for row in SECANT_ROWS:
            assert row.shape(n).size == 2 * n


@pytest.mark.parametrize("n", [1, 2])
def test_remark_identities(n):
    for report in remark_cross_class_checks(n):
        assert report.verdict, report.summary()
