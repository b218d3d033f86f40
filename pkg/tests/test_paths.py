"""Path enumeration, features, weights, flat-step maps, and tuples."""

import pytest

from qzigzag.errors import BadEndpoints, CapExceeded, FlavorMismatch
from qzigzag.paths import (
    LatticePath,
    WeightScheme,
    dyck_2n,
    enumerate_paths,
    enumerate_tuples,
    euler_path_gf,
    euler_star_path_gf,
    features,
    marked_weight,
    path_le,
    path_lt,
    phi_hp,
    phi_v,
    preimages,
    schroder_2n,
    weigh,
)
from qzigzag.qseries import QSeries, inv_one_minus_qk


def count_paths_recursive(kind: str, span: int) -> int:
    """Independent counting oracle by endpoint recursion."""
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def walk(x, y):
        if x == span:
            return 1 if y == 0 else 0
        total = 0
        if y + 1 <= span - x - 1:
            total += walk(x + 1, y + 1)
        if y > 0:
            total += walk(x + 1, y - 1)
        if kind == "Schroder" and y > 0 and x + 2 <= span:
            total += walk(x + 2, y)
        return total

    return walk(0, 0)


def test_counts_against_recursion_oracle():
    for n in range(0, 7):
        assert len(dyck_2n(n)) == count_paths_recursive("Dyck", 2 * n)
    for n in range(0, 6):
        assert len(schroder_2n(n)) == count_paths_recursive("Schroder", 2 * n)


def test_catalan_and_little_schroder_values():
    assert [len(dyck_2n(n)) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [len(schroder_2n(n)) for n in range(5)] == [1, 1, 3, 11, 45]
    assert {p.word() for p in schroder_2n(2)} == {"UUDD", "UDUD", "UHD"}


def test_single_path_and_bad_endpoints():
    assert [p.word() for p in enumerate_paths("Dyck", -1, 1)] == ["UD"]
    with pytest.raises(BadEndpoints):
        list(enumerate_paths("Dyck", 0, 3))
    with pytest.raises(BadEndpoints):
        list(enumerate_paths("Schroder", 2, 0))


def test_features_examples():
    f = features(LatticePath.from_word("UD", -1))
    assert (len(f.valleys), len(f.peaks), len(f.high_peaks), f.H) == (0, 1, 0, 0)
    f = features(LatticePath.from_word("UDUD", -2))
    assert f.valleys == ((0, 0),)
    assert len(f.peaks) == 2 and not f.high_peaks
    f = features(LatticePath.from_word("UUDUDD", -3))
    assert (len(f.valleys), len(f.high_peaks), f.H) == (1, 2, 10)


def test_nonnegativity_enforced():
    with pytest.raises(ValueError):
        LatticePath.from_word("DU")


def test_valley_count_weight():
    scheme = WeightScheme.val_count(8)
    for n in range(4):
        for d in dyck_2n(n):
            expected = QSeries.monomial(len(features(d).valleys), 8)
            assert weigh(d, scheme, "valley").eq_mod(expected)


def test_odd_hook_weight_examples():
    scheme = WeightScheme.mpp_rpp(14)
    ud = LatticePath.from_word("UD", -1)
    want = inv_one_minus_qk(1, 14) * inv_one_minus_qk(1, 14) * inv_one_minus_qk(3, 14)
    assert scheme.wt_v(ud).eq_mod(want)
    uudd = LatticePath.from_word("UUDD", -2)
    want = (inv_one_minus_qk(1, 14) ** 2 * inv_one_minus_qk(3, 14) ** 2
            * inv_one_minus_qk(5, 14)).shift(5)
    assert scheme.wt_hp(uudd).eq_mod(want)


def test_flavor_mismatch():
    scheme = WeightScheme.val_count(6)
    with pytest.raises(FlavorMismatch):
        weigh(LatticePath.from_word("UHD", -2), scheme, "valley")
    with pytest.raises(FlavorMismatch):
        weigh(LatticePath.from_word("UU", 0), scheme, "schroder")


def test_horizontal_maps():
    uhd = LatticePath.from_word("UHD", -2)
    assert phi_v(uhd).word() == "UDUD"
    assert phi_hp(uhd).word() == "UUDD"


def test_preimage_counts():
    # phiV: every subset of valleys; phiHP: only high peaks survive validity
    for n in range(1, 6):
        for d in dyck_2n(n):
            f = features(d)
            assert len(preimages(d, "phiV")) == 2 ** len(f.valleys)
            assert len(preimages(d, "phiHP")) == 2 ** len(f.high_peaks)


def test_preimages_of_valley_free_path():
    d = LatticePath.from_word("UUUDDD", -3)
    assert preimages(d, "phiV") == [d]


def test_preimages_map_back():
    for n in range(1, 5):
        for d in dyck_2n(n):
            for s in preimages(d, "phiV"):
                assert phi_v(s).steps == d.steps
            for s in preimages(d, "phiHP"):
                assert phi_hp(s).steps == d.steps


def test_path_order_relations():
    low = LatticePath.from_word("UD", -1)
    high = LatticePath.from_word("UUUDDD", -3)
    mid = LatticePath.from_word("UUDUDD", -3)
    assert path_lt(low, high)
    # low's peak touches mid's valley at (0,1): weakly but not strictly below
    assert not path_lt(low, mid)
    assert path_le(low, mid)
    # same-span paths always share their boundary steps, so neither relation
    # ever holds between them; the orders only compare nested spans
    assert not path_lt(mid, high) and not path_le(mid, high)
    same = LatticePath.from_word("UDUDUD", -3)
    assert not path_le(same, same)


def test_tuple_enumeration_examples():
    assert len(list(enumerate_tuples(1, 1, []))) == 1
    tuples = list(enumerate_tuples(1, 2, ["strict"]))
    assert len(tuples) == 1
    assert tuple(d.word() for d in tuples[0].paths) == ("UD", "UUUDDD")
    with pytest.raises(CapExceeded):
        list(enumerate_tuples(5, 2, ["strict"]))


def test_marked_count_is_little_schroder_multiple():
    got = sum(marked_weight(t.paths) for t in enumerate_tuples(2, 1, []))
    assert got == 48
    got = sum(marked_weight(t.paths) for t in enumerate_tuples(3, 1, []))
    assert got == 352


def test_marked_tuples_materialize():
    seen = set()
    for t in enumerate_tuples(1, 1, [], marked=True):
        assert t.marks is not None
        seen.add(frozenset(t.marks))
    # UD has three points, no valley: all subsets of three points
    assert len(seen) == 8


def test_euler_path_gfs_match_permutation_sums():
    from qzigzag.perm import euler_poly, euler_star_poly
    from qzigzag.qseries import pochhammer

    for n in range(0, 4):
        want = QSeries.from_poly(euler_poly(2 * n + 1), 18) / pochhammer(1, 2 * n + 1, 18)
        assert euler_path_gf(n, 18).eq_mod(want)
        want = QSeries.from_poly(euler_star_poly(2 * n + 1), 18) / pochhammer(1, 2 * n + 1, 18)
        assert euler_star_path_gf(n, 18).eq_mod(want)


def test_scheme_constancy_check():
    with pytest.raises(ValueError):
        WeightScheme.custom(
            8,
            wt=lambda p: QSeries.one(8),
            wtext=lambda p: QSeries.monomial(p[1], 8),  # wt*(wtext-1) varies
        )
