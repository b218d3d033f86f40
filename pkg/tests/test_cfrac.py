"""Convergents, quotients, the named ladders, and the flat-step identities."""

import pytest

from qzigzag.cfrac import (
    QuotientSpec,
    cf_convergent,
    cf_spec,
    cf_weights_catalan,
    cf_weights_delta,
    cf_weights_ge_le,
    cf_weights_ge_lt,
    delta_series,
    eqn_wi_corollary,
    flajolet_check,
    flajolet_path_sum,
    quotient_gf,
    schroder_cf_check,
    schroder_weighted_sum,
    secant_delta_check,
    table1_row_check,
)
from qzigzag.errors import DepthTooSmall, DivisionByNonUnit, UnknownRow
from qzigzag.perm import class_gf, euler_poly, euler_star_poly
from qzigzag.qseries import QSeries, inv_one_minus_qk, pochhammer


def test_catalan_sanity_sequence():
    conv = cf_convergent(cf_weights_catalan(), 6, 12, 2)
    coeffs = [int(conv.coeff(2 * m).constant_term) for m in range(6)]
    assert coeffs == [1, 1, 2, 5, 14, 42]
    assert all(conv.coeff(2 * m + 1).is_zero() for m in range(5))


def test_depth_zero_and_too_small():
    conv = cf_convergent(cf_weights_catalan(), 0, 0, 4)
    assert conv.coeff(0).eq_mod(QSeries.one(4))
    with pytest.raises(DepthTooSmall):
        cf_convergent(cf_weights_catalan(), 2, 6, 4)


def test_depth_stability():
    # deepening beyond xorder/2 never changes retained coefficients
    spec = cf_weights_ge_le()
    base = cf_convergent(spec, 4, 8, 14)
    for depth in (5, 6, 9):
        deeper = cf_convergent(spec, depth, 8, 14)
        assert all(base.coeff(m).eq_mod(deeper.coeff(m)) for m in range(9))


def test_flajolet_path_correspondence():
    for row in ("catalan", "ge-lt", "ge-le", "gt-lt", "q01", "q20"):
        for n in (0, 1, 2, 3):
            assert flajolet_check(cf_spec(row), n, 16).verdict


def test_flajolet_narayana_style():
    # constant ladder weight q marks down-steps from odd... rather: every
    # up-step carries q, so the path sum is C_n q^n
    from qzigzag.cfrac import CFSpec

    spec = CFSpec("allq", lambda i, qo: QSeries.monomial(1, qo))
    got = flajolet_path_sum(spec, 3, 8)
    assert [int(c) for c in got.coeffs[:5]] == [0, 0, 0, 5, 0]


def test_ud_factorization_invariance():
    # any split u_j d_{j+1} = w_j gives the same path sum: compare the
    # canonical split against weighting down-steps instead
    from qzigzag.paths import DOWN, UP, dyck_2n

    spec = cf_weights_ge_le()
    qorder = 15
    for n in (1, 2, 3):
        canonical = flajolet_path_sum(spec, n, qorder)
        alt = QSeries.zero(qorder)
        for d in dyck_2n(n):
            term = QSeries.one(qorder)
            y = 0
            for s in d.steps:
                if s == UP:
                    y += 1
                else:
                    term = term * spec.weight(y - 1, qorder)
                    y -= 1
            alt = alt + term
        assert canonical.eq_mod(alt)


def test_quotient_examples():
    got = quotient_gf(QuotientSpec(0, 0, 0, 0, "tangent"), 3, 12).coeff(3)
    want = QSeries.from_poly(euler_poly(3), 12) / pochhammer(1, 3, 12)
    assert got.eq_mod(want)
    got = quotient_gf(QuotientSpec(1, 1, 1, -1, "tangent"), 1, 10).coeff(1)
    assert got.eq_mod(inv_one_minus_qk(1, 10))
    got = quotient_gf(QuotientSpec(0, 0, 0, 0, "secant"), 2, 10).coeff(2)
    assert got.eq_mod(QSeries.one(10) / pochhammer(1, 2, 10))


def test_quotient_round_trip():
    spec = QuotientSpec(1, 1, 1, -1, "tangent")
    from qzigzag.cfrac import _alt_sum

    num = _alt_sum(1, 1, True, 7, 12)
    den = _alt_sum(1, -1, False, 7, 12)
    quot = num / den
    back = quot * den
    assert all(a.eq_mod(b) for a, b in zip(back.xcoeffs, num.xcoeffs))


@pytest.mark.parametrize("row", ["ge-lt", "ge-le", "lt-gt", "gt-lt", "q01", "q20", "le-ge"])
@pytest.mark.parametrize("n", [1, 2])
def test_table1_rows(row, n):
    assert table1_row_check(row, n, 15).verdict


def test_table1_complete_row_compares_three_ways():
    report = table1_row_check("ge-le", 2, 15)
    assert set(report.params["forms"]) == {"quotient0", "cf", "m-sum"}
    report = table1_row_check("q01", 1, 12)
    assert set(report.params["forms"]) == {"quotient0", "cf"}
    report = table1_row_check("le-ge", 1, 12)
    assert set(report.params["forms"]) == {"quotient0", "m-sum"}


def test_unknown_row():
    with pytest.raises(UnknownRow):
        cf_spec("nope")
    with pytest.raises(UnknownRow):
        table1_row_check("nope", 1, 10)


def test_delta_series_values():
    # ladder entries: 1, 1, s_(2), s_(4), s_(5,4)/(1), with the right
    # leading behavior (the odd entries vanish to order n(n-1)-ish)
    assert delta_series(-1, 8).eq_mod(QSeries.one(8))
    assert delta_series(0, 8).eq_mod(QSeries.one(8))
    two_parts = delta_series(1, 8)
    assert [int(c) for c in two_parts.coeffs[:5]] == [1, 1, 2, 2, 3]
    assert delta_series(3, 8).valuation() == 3  # forced column-strict minimum


def test_delta_ladder_stops_at_level_three():
    spec = cf_weights_delta(10)
    assert spec.weight(0, 10) is not None
    assert spec.weight(2, 10) is not None
    with pytest.raises(DivisionByNonUnit):
        spec.weight(3, 10)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_secant_delta_identity(n):
    assert secant_delta_check(n, 12).verdict


def test_secant_e4_value():
    assert sum(euler_poly(4)) == 5  # the classical fourth value


def test_schroder_weighted_sum_matches_ladder():
    for n in (0, 1, 2, 3, 4):
        reports = schroder_cf_check(n, 20)
        assert all(r.verdict for r in reports)


def test_weight_combination_display():
    # -1/(1-q^(2i+1)) + 1/((1-q^(2i+1))(1-q^(2i+3))) = q^(2i+3)/(same product)
    order = 20
    for i in range(4):
        lhs = -inv_one_minus_qk(2 * i + 1, order) + (
            inv_one_minus_qk(2 * i + 1, order) * inv_one_minus_qk(2 * i + 3, order)
        )
        rhs = (inv_one_minus_qk(2 * i + 1, order) * inv_one_minus_qk(2 * i + 3, order)).shift(
            2 * i + 3
        )
        assert lhs.eq_mod(rhs)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_eqn_wi_corollary(n):
    assert eqn_wi_corollary(n, 20).verdict


def test_tangent_ladder_agrees_with_perm_sums():
    # (1/(1-q)) [x^(2n)] CF(ge-le) = twisted tangent quotient
    for n in (1, 2, 3):
        conv = cf_convergent(cf_weights_ge_le(), n, 2 * n, 18)
        got = conv.coeff(2 * n) * inv_one_minus_qk(1, 18)
        want = QSeries.from_poly(euler_star_poly(2 * n + 1), 18) / pochhammer(1, 2 * n + 1, 18)
        assert got.eq_mod(want)
