"""The closed identity registry: every checkable statement the package
verifies, addressable by id, with default parameter sweeps for the quick
and full profiles.

Runner signatures are uniform: keyword parameters in, list of reports out.
Unknown ids are rejected; the registry is the single source the CLI and
the acceptance suite dispatch through.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import cfrac, detid, excited, foata, lambda_dyck, perm, tables, tableaux
from .errors import UnknownIdentity
from .paths import WeightScheme, euler_path_gf, euler_star_path_gf
from .qseries import QSeries, pochhammer
from .report import IdentityReport


@dataclass(frozen=True)
class RegistryEntry:
    identity_id: str
    anchor: str
    runner: Callable[..., list[IdentityReport]]
    defaults: dict
    quick: tuple[dict, ...]  # parameter sets for --profile quick
    full: tuple[dict, ...]  # parameter sets for --profile full


def _one(report: IdentityReport) -> list[IdentityReport]:
    return [report]


def _series_pair(identity_id, params, lhs, rhs, order) -> list[IdentityReport]:
    return [IdentityReport.from_sides(identity_id, params, lhs, rhs, order)]


# -- individual runners --------------------------------------------------------


def run_naruse(shape: str = "4,4,3,3/2,1") -> list[IdentityReport]:
    sh = tableaux.parse_shape(shape)
    count, value = tableaux.syt_count_and_naruse(sh)
    return [IdentityReport.from_sides("eq:naruse", {"shape": shape}, count, value, None)]


def run_mpp1(shape: str = "4,4,3,3/2,1", order: int = 15) -> list[IdentityReport]:
    sh = tableaux.parse_shape(shape)
    lhs = tableaux.tableau_gf(sh, "ssyt", order, mode="oracle")
    return _series_pair("eq:MPP1", {"shape": shape}, lhs, excited.mpp_ssyt_side(sh, order), order)


def run_mpp2(shape: str = "4,4,3,3/2,1", order: int = 15) -> list[IdentityReport]:
    sh = tableaux.parse_shape(shape)
    lhs = tableaux.tableau_gf(sh, "rpp", order, mode="oracle")
    return _series_pair("eq:MPP2", {"shape": shape}, lhs, excited.mpp_rpp_side(sh, order), order)


def run_en_maj(n: int = 5) -> list[IdentityReport]:
    """maj definition of the odd tangent polynomial against the zigzag extensions."""
    if n % 2 == 0:
        raise ValueError("the zigzag extension form needs odd n")
    zig = tableaux.skew_staircase((n - 1) // 2, 1)
    lhs = perm.euler_poly(n)
    rhs = tableaux.linear_extension_maj_poly(zig, "ssyt")
    order = max(len(lhs), len(rhs))
    return _series_pair("eq:En_maj", {"n": n}, QSeries.from_poly(lhs, order),
                        QSeries.from_poly(rhs, order), order)


def run_en_inv(n: int = 6) -> list[IdentityReport]:
    lhs = perm.euler_poly(n)
    rhs = perm.class_gf("Alt", n, "inv")
    order = max(len(lhs), len(rhs))
    return _series_pair("eq:En_inv", {"n": n}, QSeries.from_poly(lhs, order),
                        QSeries.from_poly(rhs, order), order)


def run_huber(n: int = 3) -> list[IdentityReport]:
    lhs = perm.euler_star_poly(2 * n + 1)
    rhs = perm.class_gf("Alt", 2 * n + 1, "inv-ndes_e")
    order = max(len(lhs), len(rhs))
    return _series_pair("eq:Huber", {"n": n}, QSeries.from_poly(lhs, order),
                        QSeries.from_poly(rhs, order), order)


def run_mpp_euler(n: int = 3, order: int = 20) -> list[IdentityReport]:
    lhs = QSeries.from_poly(perm.euler_poly(2 * n + 1), order) / pochhammer(1, 2 * n + 1, order)
    return _series_pair("eq:MPP_Euler", {"n": n}, lhs, euler_path_gf(n, order), order)


def run_mpp_euler_star(n: int = 3, order: int = 20) -> list[IdentityReport]:
    lhs = QSeries.from_poly(perm.euler_star_poly(2 * n + 1), order) / pochhammer(1, 2 * n + 1, order)
    return _series_pair("eq:MPP_Euler*", {"n": n}, lhs, euler_star_path_gf(n, order), order)


def run_excited_count(n: int = 2, k: int = 2) -> list[IdentityReport]:
    e_det, e_prod, e_enum = excited.count_formulas(n, k)
    return [
        IdentityReport.from_sides("eq:excited", {"n": n, "k": k, "form": "det"}, e_det, e_enum, None),
        IdentityReport.from_sides("eq:excited", {"n": n, "k": k, "form": "product"}, e_prod, e_enum, None),
    ]


def run_ssyt_det(n: int = 1, k: int = 2, order: int = 20) -> list[IdentityReport]:
    return _one(detid.ssyt_det_check(n, k, order))


def run_thm11(n: int = 1, k: int = 2) -> list[IdentityReport]:
    return detid.main_theorem_1(n, k)


def run_thm12(n: int = 1, k: int = 2, order: int = 20) -> list[IdentityReport]:
    return _one(detid.main_theorem_2(n, k, order))


def run_lin_ext(shape: str = "d4/d2", kind: str = "rpp", order: int = 15) -> list[IdentityReport]:
    sh = tableaux.parse_shape(shape)
    lhs = tableaux.tableau_gf(sh, kind, order, mode="extension")
    rhs = tableaux.tableau_gf(sh, kind, order, mode="oracle")
    return _series_pair("eq:lin_ext", {"shape": shape, "kind": kind}, lhs, rhs, order)


def run_ssyt_to_e(n: int = 2, order: int = 15) -> list[IdentityReport]:
    lhs = tableaux.tableau_gf(tableaux.skew_staircase(n, 1), "ssyt", order)
    rhs = QSeries.from_poly(perm.euler_poly(2 * n + 1), order) / pochhammer(1, 2 * n + 1, order)
    return _series_pair("eq:SSYT->E", {"n": n}, lhs, rhs, order)


def run_rpp_to_e(n: int = 2, order: int = 15) -> list[IdentityReport]:
    lhs = tableaux.tableau_gf(tableaux.skew_staircase(n, 1), "rpp", order)
    rhs = QSeries.from_poly(perm.euler_star_poly(2 * n + 1), order) / pochhammer(1, 2 * n + 1, order)
    return _series_pair("eq:RPP->E", {"n": n}, lhs, rhs, order)


def run_rpp_st(n: int = 3, order: int = 15) -> list[IdentityReport]:
    zig = tableaux.skew_staircase(n, 1)
    lhs = tableaux.tableau_gf(zig, "st", order)
    rhs = tableaux.tableau_gf(zig, "rpp", order).shift(n + 1)
    return _series_pair("eq:RPP=ST", {"n": n}, lhs, rhs, order)


def run_flajolet(row: str = "ge-lt", n: int = 3, order: int = 20) -> list[IdentityReport]:
    return _one(cfrac.flajolet_check(cfrac.cf_spec(row), n, order))


def run_prop31(n: int = 2, order: int = 20) -> list[IdentityReport]:
    conv = cfrac.cf_convergent(cfrac.cf_weights_ge_lt(), max(n, 1), 2 * n, order)
    lhs = conv.coeff(2 * n) * cfrac.inv_one_minus_qk(1, order)
    rhs = QSeries.from_poly(perm.euler_poly(2 * n + 1), order) / pochhammer(1, 2 * n + 1, order)
    return _series_pair("prop3.1", {"n": n}, lhs, rhs, order)


def run_prop32(n: int = 2, order: int = 12) -> list[IdentityReport]:
    return _one(cfrac.secant_delta_check(n, order))


def run_cf_estar(n: int = 2, order: int = 20) -> list[IdentityReport]:
    return cfrac.schroder_cf_check(n, order)


def run_eqn_wi(n: int = 2, order: int = 20) -> list[IdentityReport]:
    return _one(cfrac.eqn_wi_corollary(n, order))


def run_table1(row: str = "ge-lt", n: int = 2, order: int = 15) -> list[IdentityReport]:
    return _one(cfrac.table1_row_check(row, n, order))


_TAU_BRIDGES = {
    "eq:1": ("ssyt", "maj_inv"),
    "eq:2": ("rpp", "maj_kappa_inv"),
    "eq:3": ("ssyt", "inv"),
    "eq:4": ("rpp", "inv-ndes_e"),
}


def _run_tau_bridge(eq: str, n: int, order: int) -> list[IdentityReport]:
    kind, expr = _TAU_BRIDGES[eq]
    zig = tableaux.skew_staircase(n, 1)
    lhs = tableaux.tableau_gf(zig, kind, order)
    rhs = QSeries.from_poly(perm.class_gf("Alt", 2 * n + 1, expr), order) / pochhammer(
        1, 2 * n + 1, order
    )
    return _series_pair(eq, {"n": n}, lhs, rhs, order)


def run_eq1(n: int = 2, order: int = 15) -> list[IdentityReport]:
    return _run_tau_bridge("eq:1", n, order)


def run_eq2(n: int = 2, order: int = 15) -> list[IdentityReport]:
    return _run_tau_bridge("eq:2", n, order)


def run_eq3(n: int = 2, order: int = 15) -> list[IdentityReport]:
    return _run_tau_bridge("eq:3", n, order)


def run_eq4(n: int = 2, order: int = 15) -> list[IdentityReport]:
    return _run_tau_bridge("eq:4", n, order)


def run_eq5(n: int = 2) -> list[IdentityReport]:
    lhs = perm.class_gf("Alt", 2 * n + 1, "maj_kappa_inv")
    rhs = perm.class_gf("Alt", 2 * n + 1, "inv-ndes_e")
    order = max(len(lhs), len(rhs))
    return _series_pair("eq:5", {"n": n}, QSeries.from_poly(lhs, order),
                        QSeries.from_poly(rhs, order), order)


def run_lemma41(n: int = 7) -> list[IdentityReport]:
    ok = True
    for p in perm.enumerate_class("Alt", n):
        q = perm.reverse_complement(p)
        if n % 2 == 1:
            ok = ok and perm.is_reverse_alternating(q.word)
            lhs = (perm.inv(p.word), perm.des(perm.odd_subword(p.word)), perm.des(perm.even_subword(p.word)))
            rhs = (perm.inv(q.word), perm.des(perm.odd_subword(q.word)), perm.des(perm.even_subword(q.word)))
        else:
            ok = ok and perm.is_alternating(q.word)
            lhs = (perm.inv(p.word), perm.des(perm.even_subword(p.word)))
            rhs = (perm.inv(q.word), perm.des(perm.odd_subword(q.word)))
        ok = ok and lhs == rhs
        ok = ok and perm.reverse_complement(q).word == p.word
    return [IdentityReport("lemma4.1", {"n": n}, ok, True, None, ok, detail="transport+involution")]


def run_table2(row: str = "row1", n: int = 2, order: int = 15) -> list[IdentityReport]:
    idx = int(row.removeprefix("row")) - 1
    return _one(tables.row_check(tables.TANGENT_ROWS[idx], n, order, "tangent"))


def run_table3(row: str = "row1", n: int = 2, order: int = 15) -> list[IdentityReport]:
    idx = int(row.removeprefix("row")) - 1
    return _one(tables.row_check(tables.SECANT_ROWS[idx], n, order, "secant"))


def run_thm43(n: int = 3) -> list[IdentityReport]:
    ok = True
    seen = set()
    count = 0
    for p in perm.enumerate_class("AltInv", 2 * n + 1):
        sigma = foata.fa(p)
        seen.add(sigma.word)
        count += 1
        ok = ok and perm.in_class(sigma, "AltInv")
        ok = ok and foata.row_stat_a(p, foata.FA_ROW) == foata.row_stat_b(sigma, foata.FA_ROW)
        ok = ok and foata.fa_inverse(sigma).word == p.word
    ok = ok and len(seen) == count
    return [IdentityReport("thm4.3", {"n": n}, count, len(seen), None, ok,
                           detail="bijection, transport, inverse")]


def run_thm44(row: str = "alt-even-kappa", N: int = 6) -> list[IdentityReport]:
    frow = foata.get_row(row)
    if (N % 2 == 1) != (frow.parity == "odd"):
        raise ValueError(f"N={N} does not match row parity {frow.parity}")
    ok = True
    seen = set()
    count = 0
    for p in perm.enumerate_class(frow.klass, N):
        sigma = foata.f_mod(p, frow)
        seen.add(sigma.word)
        count += 1
        ok = ok and foata.row_stat_a(p, frow) == foata.row_stat_b(sigma, frow)
        ok = ok and foata.f_mod_inverse(sigma, frow).word == p.word
    ok = ok and len(seen) == count
    return [IdentityReport("thm4.4", {"row": row, "N": N}, count, len(seen), None, ok,
                           detail="bijection, transport, inverse")]


def run_remark4(n: int = 2) -> list[IdentityReport]:
    return tables.remark_cross_class_checks(n)


def run_prop51(n: int = 2, k: int = 1) -> list[IdentityReport]:
    lam_cap = max(24, sum(tableaux.staircase(n + 2 * k)))
    diagrams = set(excited.excited_diagrams(tableaux.skew_staircase(n, k), lam_cap=lam_cap))
    pairs = excited.rho_pairs(n, k)
    images = [d for _, d in pairs]
    ok = len(set(images)) == len(images) and set(images) == diagrams
    return [IdentityReport("prop5.1", {"n": n, "k": k}, len(pairs), len(diagrams), None, ok,
                           detail="complement map is a bijection")]


def run_prop52(n: int = 2, k: int = 1) -> list[IdentityReport]:
    shape = tableaux.skew_staircase(n, k)
    lhs = excited.pleasant_count(shape, "rho_star")
    rhs = excited.pleasant_count(shape, "definition")
    reports = [IdentityReport.from_sides("prop5.2", {"n": n, "k": k}, lhs, rhs, None)]
    if k == 1:
        from .paths import dyck_2n, features, valley_count

        hp = sum(1 << (len(d.points) - len(features(d).high_peaks)) for d in dyck_2n(n))
        reports.append(
            IdentityReport.from_sides(
                "prop5.2", {"n": n, "k": k, "variant": "high-peak marks"}, hp, rhs, None
            )
        )
    return reports


def _scheme(name: str, order: int) -> WeightScheme:
    if name == "VAL_COUNT":
        return WeightScheme.val_count(order)
    if name == "MPP_RPP":
        return WeightScheme.mpp_rpp(order)
    raise ValueError(f"unknown scheme {name!r}")


def run_lemma53(scheme: str = "MPP_RPP", n: int = 1, k: int = 2, order: int = 20) -> list[IdentityReport]:
    return _one(detid.lemma53_check(_scheme(scheme, order), n, k))


def run_prop54(scheme: str = "MPP_RPP", max_len: int = 10, order: int = 20) -> list[IdentityReport]:
    return _one(detid.prop54_check(_scheme(scheme, order), max_len))


def run_prop55(scheme: str = "MPP_RPP", n: int = 1, order: int = 20) -> list[IdentityReport]:
    return _one(detid.prop55_check(_scheme(scheme, order), n))


def run_prop56(scheme: str = "MPP_RPP", n: int = 1, k: int = 2, order: int = 20) -> list[IdentityReport]:
    return _one(detid.prop56_check(_scheme(scheme, order), n, k))


def run_lemma58(max_len: int = 12, order: int = 20) -> list[IdentityReport]:
    return _one(detid.lemma58_check(max_len, order))


def run_lemma510(n: int = 6, order: int = 20) -> list[IdentityReport]:
    return _one(detid.lemma510_check(n, order))


def run_thm57(n: int = 1, k: int = 2) -> list[IdentityReport]:
    return _one(detid.thm57_check(n, k))


def run_thm59(n: int = 1, k: int = 2, order: int = 20) -> list[IdentityReport]:
    return _one(detid.thm59_check(n, k, order))


def run_thm61(shape: str = "d5/d2", order: int = 15) -> list[IdentityReport]:
    return detid.lp_theorems(tableaux.parse_shape(shape), order)[:1]


def run_thm62(shape: str = "d5/d2", order: int = 15) -> list[IdentityReport]:
    return detid.lp_theorems(tableaux.parse_shape(shape), order)[1:2]


def run_cor63(shape: str = "d5/d2", order: int = 10) -> list[IdentityReport]:
    return detid.lp_theorems(tableaux.parse_shape(shape), order)[2:]


def run_cor64(n: int = 2, k: int = 1, order: int = 15) -> list[IdentityReport]:
    return _one(detid.cor64_check(n, k, order))


def run_cor65(n: int = 2, k: int = 1) -> list[IdentityReport]:
    return _one(detid.cor65_check(n, k))


def run_cor66(a: int = 2, b: int = 2, k: int = 2, order: int = 15) -> list[IdentityReport]:
    return _one(detid.cor66_check(a, b, k, order))


def run_cor67(a: int = 2, b: int = 2, k: int = 2) -> list[IdentityReport]:
    return _one(detid.cor67_check(a, b, k))


def run_kreiman(shape: str = "d5/d2") -> list[IdentityReport]:
    sh = tableaux.parse_shape(shape)
    decomposition = lambda_dyck.kreiman_decompose(sh)
    covered = sorted(c for L in decomposition for c in L.cells)
    ok = covered == sorted(sh.cells())
    return [IdentityReport("kreiman", {"shape": shape}, len(decomposition), len(decomposition),
                           None, ok, detail="unique exact cover")]


# -- the registry ---------------------------------------------------------------


def _entry(identity_id, anchor, runner, defaults, quick, full=None) -> RegistryEntry:
    return RegistryEntry(identity_id, anchor, runner, defaults, tuple(quick),
                         tuple(full if full is not None else quick))


REGISTRY: dict[str, RegistryEntry] = {
    e.identity_id: e
    for e in [
        _entry("eq:naruse", "skew hook length formula", run_naruse,
               {"shape": "4,4,3,3/2,1"},
               [{"shape": "2,1"}, {"shape": "4,4,3,3/2,1"}],
               [{"shape": "2,1"}, {"shape": "4,4,3,3/2,1"}, {"shape": "d5/d2"}, {"shape": "d6/d2"}]),
        _entry("eq:MPP1", "excited-diagram form of the column-strict gf", run_mpp1,
               {"shape": "4,4,3,3/2,1", "order": 15},
               [{"shape": "d3/d1", "order": 12}, {"shape": "d4/d2", "order": 12}],
               [{"shape": "d3/d1", "order": 15}, {"shape": "d4/d2", "order": 15},
                {"shape": "4,4,3,3/2,1", "order": 15}]),
        _entry("eq:MPP2", "pleasant-diagram form of the weak-filling gf", run_mpp2,
               {"shape": "4,4,3,3/2,1", "order": 15},
               [{"shape": "d3/d1", "order": 12}, {"shape": "d4/d2", "order": 12}],
               [{"shape": "d3/d1", "order": 15}, {"shape": "d4/d2", "order": 15},
                {"shape": "4,4,3,3/2,1", "order": 15}]),
        _entry("eq:En_maj", "maj form of the tangent polynomial", run_en_maj,
               {"n": 5}, [{"n": 3}, {"n": 5}], [{"n": 3}, {"n": 5}, {"n": 7}]),
        _entry("eq:En_inv", "inv form of the tangent/secant polynomial", run_en_inv,
               {"n": 6}, [{"n": n} for n in range(1, 7)], [{"n": n} for n in range(1, 10)]),
        _entry("eq:Huber", "inv minus even-subword non-descents form", run_huber,
               {"n": 3}, [{"n": 1}, {"n": 2}], [{"n": 1}, {"n": 2}, {"n": 3}, {"n": 4}]),
        _entry("eq:MPP_Euler", "odd-hook Dyck path form of the tangent gf", run_mpp_euler,
               {"n": 3, "order": 20}, [{"n": n, "order": 20} for n in range(0, 3)],
               [{"n": n, "order": 20} for n in range(0, 5)]),
        _entry("eq:MPP_Euler*", "high-peak Dyck path form of the twisted tangent gf",
               run_mpp_euler_star,
               {"n": 3, "order": 20}, [{"n": n, "order": 20} for n in range(0, 3)],
               [{"n": n, "order": 20} for n in range(0, 5)]),
        _entry("eq:excited", "Catalan determinant and product count of excited diagrams",
               run_excited_count,
               {"n": 2, "k": 2},
               [{"n": 1, "k": 2}, {"n": 2, "k": 1}, {"n": 2, "k": 2}],
               [{"n": n, "k": k} for n in (1, 2, 3, 4) for k in (1, 2, 3) if n + 2 * k <= 9]),
        _entry("eq:ssyt", "column-strict staircase determinant", run_ssyt_det,
               {"n": 1, "k": 2, "order": 20},
               [{"n": 1, "k": 2, "order": 15}],
               [{"n": 1, "k": 2, "order": 20}, {"n": 2, "k": 2, "order": 20},
                {"n": 1, "k": 3, "order": 15}]),
        _entry("thm1.1", "Conjecture 9.3", run_thm11,
               {"n": 1, "k": 2},
               [{"n": 1, "k": 2}, {"n": 2, "k": 2}],
               [{"n": 1, "k": 2}, {"n": 2, "k": 2}, {"n": 3, "k": 2}, {"n": 1, "k": 3}]),
        _entry("thm1.2", "Conjecture 9.6", run_thm12,
               {"n": 1, "k": 2, "order": 20},
               [{"n": 1, "k": 2, "order": 15}],
               [{"n": 1, "k": 2, "order": 20}, {"n": 2, "k": 2, "order": 20},
                {"n": 1, "k": 3, "order": 20}]),
        _entry("eq:lin_ext", "linear-extension form of the filling gf", run_lin_ext,
               {"shape": "d4/d2", "kind": "rpp", "order": 15},
               [{"shape": "d4/d2", "kind": k, "order": 12} for k in ("ssyt", "rpp", "st")],
               [{"shape": s, "kind": k, "order": 15}
                for s in ("d4/d2", "d5/d2", "4,4,3,3/2,1")
                for k in ("ssyt", "rpp", "st")]),
        _entry("eq:SSYT->E", "zigzag column-strict gf is the tangent quotient", run_ssyt_to_e,
               {"n": 2, "order": 15}, [{"n": n, "order": 15} for n in (1, 2)],
               [{"n": n, "order": 15} for n in (1, 2, 3, 4)]),
        _entry("eq:RPP->E", "zigzag weak-filling gf is the twisted tangent quotient", run_rpp_to_e,
               {"n": 2, "order": 15}, [{"n": n, "order": 15} for n in (1, 2)],
               [{"n": n, "order": 15} for n in (1, 2, 3, 4)]),
        _entry("eq:RPP=ST", "strict fillings shift the weak ones", run_rpp_st,
               {"n": 3, "order": 15}, [{"n": n, "order": 15} for n in (1, 2)],
               [{"n": n, "order": 15} for n in (1, 2, 3, 4)]),
        _entry("eq:flajolet", "weighted-path form of the convergent", run_flajolet,
               {"row": "ge-lt", "n": 3, "order": 20},
               [{"row": "catalan", "n": 3, "order": 4}, {"row": "ge-lt", "n": 2, "order": 20}],
               [{"row": r, "n": n, "order": 20}
                for r in ("catalan", "ge-lt", "ge-le", "gt-lt", "q01", "q20")
                for n in (2, 3)]),
        _entry("prop3.1", "tangent quotient via the odd-hook ladder", run_prop31,
               {"n": 2, "order": 20}, [{"n": 1, "order": 15}, {"n": 2, "order": 15}],
               [{"n": n, "order": 20} for n in (1, 2, 3)]),
        _entry("prop3.2", "secant gf via the specialization ladder", run_prop32,
               {"n": 2, "order": 12}, [{"n": 1, "order": 12}],
               [{"n": n, "order": 12} for n in (0, 1, 2, 3)]),
        _entry("eqn:cf_E*", "flat-step path form of the twisted tangent gf", run_cf_estar,
               {"n": 2, "order": 20}, [{"n": 1, "order": 20}],
               [{"n": n, "order": 20} for n in (0, 1, 2, 3, 4)]),
        _entry("eqn:w_i", "parity-split ladder corollary", run_eqn_wi,
               {"n": 2, "order": 20}, [{"n": 1, "order": 15}],
               [{"n": n, "order": 20} for n in (1, 2, 3)]),
        _entry("table1", "convergent/quotient/class-sum rows", run_table1,
               {"row": "ge-lt", "n": 2, "order": 15},
               [{"row": r, "n": 1, "order": 12}
                for r in ("ge-lt", "ge-le", "lt-gt", "gt-lt", "q01", "q20", "le-ge")],
               [{"row": r, "n": n, "order": 15}
                for r in ("ge-lt", "ge-le", "lt-gt", "gt-lt", "q01", "q20", "le-ge")
                for n in (1, 2, 3)]),
        _entry("eq:1", "normalized zigzag gf, maj form", run_eq1,
               {"n": 2, "order": 15}, [{"n": 1}, {"n": 2}], [{"n": n} for n in (1, 2, 3)]),
        _entry("eq:2", "normalized twisted gf, maj form", run_eq2,
               {"n": 2, "order": 15}, [{"n": 1}, {"n": 2}], [{"n": n} for n in (1, 2, 3)]),
        _entry("eq:3", "normalized zigzag gf, inv form", run_eq3,
               {"n": 2, "order": 15}, [{"n": 1}, {"n": 2}], [{"n": n} for n in (1, 2, 3)]),
        _entry("eq:4", "normalized twisted gf, inv form", run_eq4,
               {"n": 2, "order": 15}, [{"n": 1}, {"n": 2}], [{"n": n} for n in (1, 2, 3)]),
        _entry("eq:5", "twisted maj equals deficient inv", run_eq5,
               {"n": 2}, [{"n": 1}, {"n": 2}], [{"n": n} for n in (1, 2, 3, 4)]),
        _entry("lemma4.1", "reverse-complement statistic transport", run_lemma41,
               {"n": 7}, [{"n": n} for n in (4, 5, 6)], [{"n": n} for n in range(2, 10)]),
        _entry("table2", "tangent interpretation rows", run_table2,
               {"row": "row1", "n": 2, "order": 15},
               [{"row": f"row{i}", "n": 1, "order": 12} for i in range(1, 7)],
               [{"row": f"row{i}", "n": n, "order": 15} for i in range(1, 7) for n in range(0, 5)]),
        _entry("table3", "secant interpretation rows", run_table3,
               {"row": "row1", "n": 2, "order": 15},
               [{"row": f"row{i}", "n": 1, "order": 12} for i in range(1, 7)],
               [{"row": f"row{i}", "n": n, "order": 15} for i in range(1, 7) for n in range(1, 5)]),
        _entry("thm4.3", "the kappa-twisted bijection on odd classes", run_thm43,
               {"n": 3}, [{"n": 2}, {"n": 3}], [{"n": n} for n in (1, 2, 3, 4)]),
        _entry("thm4.4", "modified block-shuffle bijections", run_thm44,
               {"row": "alt-even-kappa", "N": 6},
               [{"row": r.row_id, "N": 5 if r.parity == "odd" else 6} for r in foata.TABLE4],
               [{"row": r.row_id, "N": N}
                for r in foata.TABLE4
                for N in ((1, 3, 5, 7, 9) if r.parity == "odd" else (2, 4, 6, 8))]),
        _entry("remark4", "cross-class even identities", run_remark4,
               {"n": 2}, [{"n": 1}, {"n": 2}], [{"n": n} for n in (1, 2, 3, 4)]),
        _entry("prop5.1", "excited diagrams as nested path complements", run_prop51,
               {"n": 2, "k": 1},
               [{"n": 2, "k": 1}, {"n": 1, "k": 2}],
               [{"n": n, "k": k} for n in (1, 2, 3, 4) for k in (1, 2, 3) if n + 2 * k <= 8]),
        _entry("prop5.2", "pleasant diagrams as marked nested paths", run_prop52,
               {"n": 2, "k": 1},
               [{"n": 2, "k": 1}, {"n": 1, "k": 2}],
               [{"n": n, "k": k} for n in (1, 2, 3, 4, 5) for k in (1, 2)
                if n + 2 * k <= 7 and (n + 2 * k) * (n + 2 * k - 1) // 2 - n * (n - 1) // 2 <= 16]),
        _entry("lemma5.3", "modified path determinant", run_lemma53,
               {"scheme": "MPP_RPP", "n": 1, "k": 2, "order": 20},
               [{"scheme": s, "n": 1, "k": 2, "order": 20} for s in ("VAL_COUNT", "MPP_RPP")],
               [{"scheme": s, "n": n, "k": k, "order": 20}
                for s in ("VAL_COUNT", "MPP_RPP") for n in (1, 2) for k in (1, 2, 3)]),
        _entry("prop5.4", "flat-step resolution of valley and peak weights", run_prop54,
               {"scheme": "MPP_RPP", "max_len": 10, "order": 20},
               [{"scheme": s, "max_len": 8, "order": 15} for s in ("VAL_COUNT", "MPP_RPP")],
               [{"scheme": s, "max_len": 10, "order": 20} for s in ("VAL_COUNT", "MPP_RPP")]),
        _entry("prop5.5", "single-path exchange between fixed neighbors", run_prop55,
               {"scheme": "MPP_RPP", "n": 1, "order": 20},
               [{"scheme": s, "n": 1, "order": 15} for s in ("VAL_COUNT", "MPP_RPP")],
               [{"scheme": s, "n": n, "order": 20}
                for s in ("VAL_COUNT", "MPP_RPP") for n in (1, 2)]),
        _entry("prop5.6", "weak chains resolve to strict chains", run_prop56,
               {"scheme": "MPP_RPP", "n": 1, "k": 2, "order": 20},
               [{"scheme": s, "n": 1, "k": 2, "order": 15} for s in ("VAL_COUNT", "MPP_RPP")],
               [{"scheme": s, "n": n, "k": k, "order": 20}
                for s in ("VAL_COUNT", "MPP_RPP") for n in (1, 2) for k in (2, 3)]),
        _entry("lemma5.8", "valley scheme peak/valley exchange constant", run_lemma58,
               {"max_len": 12, "order": 20}, [{"max_len": 10, "order": 15}],
               [{"max_len": 12, "order": 20}]),
        _entry("lemma5.10", "odd-hook scheme peak/valley exchange constant", run_lemma510,
               {"n": 6, "order": 20}, [{"n": 4, "order": 15}], [{"n": 6, "order": 20}]),
        _entry("thm5.7", "valley-count determinant identity", run_thm57,
               {"n": 1, "k": 2},
               [{"n": 1, "k": 2}, {"n": 2, "k": 2}],
               [{"n": n, "k": 2} for n in (1, 2, 3)] + [{"n": 1, "k": 3}]),
        _entry("thm5.9", "odd-hook weak/strict chain identity", run_thm59,
               {"n": 1, "k": 2, "order": 20},
               [{"n": 1, "k": 2, "order": 15}],
               [{"n": n, "k": k, "order": 20} for n in (1, 2) for k in (2, 3) if n + 2 * k <= 7]),
        _entry("thm6.1", "diagram-path determinant for the weak-filling gf", run_thm61,
               {"shape": "d5/d2", "order": 15},
               [{"shape": "d5/d2", "order": 12}],
               [{"shape": s, "order": 15}
                for s in ("d4/d1", "d5/d2", "d6/d1", "d6/d3", "4,4,4/2")]),
        _entry("thm6.2", "diagram-path determinant for valley counts", run_thm62,
               {"shape": "d5/d2", "order": 15},
               [{"shape": "d5/d2", "order": 12}],
               [{"shape": s, "order": 15}
                for s in ("d4/d1", "d5/d2", "d6/d1", "d6/d3", "4,4,4/2")]),
        _entry("cor6.3", "pleasant-count determinant for admissible shapes", run_cor63,
               {"shape": "d5/d2", "order": 10},
               [{"shape": "d5/d2"}],
               [{"shape": s} for s in ("d4/d1", "d5/d2", "d6/d3")]),
        _entry("cor6.4", "odd staircase twisted determinant", run_cor64,
               {"n": 2, "k": 1, "order": 15},
               [{"n": 1, "k": 1, "order": 12}],
               [{"n": n, "k": k, "order": 15}
                for n in (1, 2, 3) for k in (1, 2, 3) if n + 2 * k <= 7]),
        _entry("cor6.5", "odd staircase pleasant determinant", run_cor65,
               {"n": 2, "k": 1},
               [{"n": 2, "k": 1}],
               [{"n": n, "k": k} for n in (1, 2, 3, 4, 5) for k in (1, 2, 3) if n + 2 * k <= 7]),
        _entry("cor6.6", "thick reverse hook filling determinant", run_cor66,
               {"a": 2, "b": 2, "k": 2, "order": 15},
               [{"a": 1, "b": 1, "k": 1, "order": 12}, {"a": 2, "b": 2, "k": 1, "order": 12}],
               [{"a": a, "b": b, "k": k, "order": 15}
                for a in (1, 2, 3) for b in (1, 2, 3) for k in (1, 2, 3)]),
        _entry("cor6.7", "thick reverse hook pleasant determinant", run_cor67,
               {"a": 2, "b": 2, "k": 2},
               [{"a": 1, "b": 1, "k": 1}, {"a": 2, "b": 2, "k": 1}],
               [{"a": a, "b": b, "k": k}
                for a in (1, 2, 3) for b in (1, 2, 3) for k in (1, 2, 3)]),
        _entry("kreiman", "unique outer decomposition", run_kreiman,
               {"shape": "d5/d2"},
               [{"shape": "d5/d2"}, {"shape": "6,6,6,6/3,3"}],
               [{"shape": s} for s in
                ("d4/d1", "d5/d2", "d6/d1", "d6/d3", "d7/d2", "d8/d1", "d8/d3", "d8/d5",
                 "6,6,6,6/3,3")]),
    ]
}


def get_entry(identity_id: str) -> RegistryEntry:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {identity_id!r}") from None


def run_identity(identity_id: str, **overrides) -> list[IdentityReport]:
    """Run one registry entry; 'table2:row3'-style ids select the row."""
    if identity_id not in REGISTRY and ":" in identity_id:
        base, _, suffix = identity_id.rpartition(":")
        if base in REGISTRY and "row" in REGISTRY[base].defaults:
            overrides = {**overrides, "row": suffix}
            identity_id = base
    entry = get_entry(identity_id)
    params = dict(entry.defaults)
    params.update({k: v for k, v in overrides.items() if v is not None})
    return entry.runner(**params)


def sweep(identity_id: str, profile: str = "quick") -> list[IdentityReport]:
    entry = get_entry(identity_id)
    sets = entry.quick if profile == "quick" else entry.full
    out: list[IdentityReport] = []
    for params in sets:
        merged = dict(entry.defaults)
        merged.update(params)
        out.extend(entry.runner(**merged))
    return out


def all_ids() -> list[str]:
    return sorted(REGISTRY)
