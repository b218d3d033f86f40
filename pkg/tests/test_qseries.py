"""Ring arithmetic against schoolbook oracles, plus serialization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qzigzag.errors import DivisionByNonUnit, IndexOutOfRange
from qzigzag.qseries import (
    QSeries,
    XQSeries,
    inv_one_minus_qk,
    one_minus_qk,
    pochhammer,
    qbinom,
)


def long_division(num: list[int], den: list[int], order: int) -> list[Fraction]:
    """Schoolbook power-series long division, independent of QSeries."""
    assert den[0] != 0
    out = []
    rem = {i: Fraction(c) for i, c in enumerate(num)}
    for m in range(order + 1):
        c = rem.get(m, Fraction(0)) / den[0]
        out.append(c)
        if c:
            for j, d in enumerate(den):
                rem[m + j] = rem.get(m + j, Fraction(0)) - c * d
    return out


def poly_mult(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_geometric_series_identity():
    order = 10
    assert (pochhammer(1, 1, order) * inv_one_minus_qk(1, order)).eq_mod(QSeries.one(order))


def test_inverse_of_one_minus_q():
    got = QSeries.one(3) / pochhammer(1, 1, 3)
    assert [c for c in got.coeffs] == [1, 1, 1, 1]


def test_division_against_long_division_oracle():
    # (q + q^2) / (q;q)_3 at order 5; oracle-computed expected value
    den = poly_mult(poly_mult([1, -1], [1, 0, -1]), [1, 0, 0, -1])
    expected = long_division([0, 1, 1], den, 5)
    assert expected == [0, 1, 2, 3, 5, 7]
    got = (QSeries.monomial(1, 5) + QSeries.monomial(2, 5)) / pochhammer(1, 3, 5)
    assert list(got.coeffs) == expected


def test_pochhammer_values():
    assert pochhammer(1, 0, 5).eq_mod(QSeries.one(5))
    assert list(pochhammer(1, 2, 4).coeffs) == [1, -1, -1, 1, 0]
    # (q^2;q)_3 = (1-q^2)(1-q^3)(1-q^4) by direct multiplication
    direct = poly_mult(poly_mult([1, 0, -1], [1, 0, 0, -1]), [1, 0, 0, 0, -1])
    assert list(pochhammer(2, 3, 6).coeffs) == direct[:7]


def test_pochhammer_degree_and_constant():
    for n in range(1, 6):
        s = pochhammer(1, n, 25)
        assert s.constant_term == 1
        assert s.degree() <= n * (n + 1) // 2


def inv_count(word) -> int:
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])


def test_qbinom_against_binary_word_oracle():
    # coefficient of q^t counts 0/1 words by inversions (1 before 0 pairs)
    from itertools import permutations

    for n, m in [(2, 1), (4, 2), (5, 2), (6, 3)]:
        words = set(permutations([1] * m + [0] * (n - m)))
        gf = [0] * (m * (n - m) + 1)
        for w in words:
            gf[inv_count(w)] += 1
        got = qbinom(n, m, len(gf) - 1)
        assert [int(c) for c in got.coeffs] == gf


def test_qbinom_edges_and_errors():
    assert qbinom(5, 0, 6).eq_mod(QSeries.one(6))
    assert list(qbinom(2, 1, 5).coeffs) == [1, 1, 0, 0, 0, 0]
    assert list(qbinom(4, 2, 4).coeffs) == [1, 1, 2, 1, 1]
    with pytest.raises(IndexOutOfRange):
        qbinom(3, 4, 5)


def test_qbinom_symmetry():
    for n, m in [(4, 2), (6, 2), (7, 3)]:
        d = m * (n - m)
        cs = [int(c) for c in qbinom(n, m, d).coeffs]
        assert cs == cs[::-1]
        assert all(c >= 0 for c in cs)


def test_division_by_non_unit():
    with pytest.raises(DivisionByNonUnit):
        QSeries.one(5) / QSeries.monomial(1, 5)


def test_min_order_rule():
    a = QSeries.one(10)
    b = QSeries.one(4)
    assert (a + b).order == 4
    assert (a * b).order == 4
    assert (a - b).order == 4


def test_shift_and_eval():
    s = QSeries.from_poly([1, 2, 3], 5)
    assert list(s.shift(2).coeffs) == [0, 0, 1, 2, 3, 0]
    assert s.eval_at(Fraction(1, 2)) == 1 + 2 * Fraction(1, 2) + 3 * Fraction(1, 4)


small_polys = st.lists(st.integers(-4, 4), min_size=1, max_size=6)


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(pa, pb, pc):
    order = 8
    a, b, c = (QSeries.from_poly(p, order) for p in (pa, pb, pc))
    assert ((a + b) + c).eq_mod(a + (b + c))
    assert (a * (b + c)).eq_mod(a * b + a * c)
    assert (a * b).eq_mod(b * a)


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys)
def test_div_then_mul_roundtrip(pa, pb):
    order = 8
    b = QSeries.from_poly([1] + pb, order)  # force unit constant term
    a = QSeries.from_poly(pa, order)
    assert ((a / b) * b).eq_mod(a)


def test_json_roundtrip():
    s = QSeries.from_poly([Fraction(1, 2), 3, Fraction(-7, 3)], 4)
    obj = s.to_jsonable()
    assert obj["order"] == 4
    assert obj["coeffs"][0] == "1/2"
    assert QSeries.from_json(s.to_json()) == s


# -- bivariate layer ----------------------------------------------------------


def test_xqseries_inverse_of_one_minus_x2():
    one = XQSeries.one(4, 3)
    den_entries = [QSeries.one(3), QSeries.zero(3), -QSeries.one(3),
                   QSeries.zero(3), QSeries.zero(3)]
    den = XQSeries(tuple(den_entries))
    quot = one / den
    assert [e.constant_term for e in quot.xcoeffs] == [1, 0, 1, 0, 1]


def test_xqseries_divide_then_multiply():
    qorder = 6
    num = XQSeries(tuple(QSeries.from_poly([i, 1], qorder) for i in range(4)))
    den_entries = [QSeries.from_poly([1, 2], qorder)] + [
        QSeries.from_poly([t], qorder) for t in (3, 0, 1)
    ]
    den = XQSeries(tuple(den_entries))
    assert all(
        got.eq_mod(want)
        for got, want in zip(((num / den) * den).xcoeffs, num.xcoeffs)
    )


def test_xqseries_division_by_non_unit():
    qorder = 4
    den = XQSeries(tuple([QSeries.monomial(1, qorder), QSeries.one(qorder)]))
    with pytest.raises(DivisionByNonUnit):
        XQSeries.one(1, qorder) / den


def test_one_minus_qk_beyond_order():
    assert one_minus_qk(9, 4).eq_mod(QSeries.one(4))
