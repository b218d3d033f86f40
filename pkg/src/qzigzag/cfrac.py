"""Continued-fraction convergents, the weighted-path correspondence, quotient
generating functions, and the named weight ladders.

A convergent is evaluated bottom-up with a zero tail: paths taller than the
depth cannot fit in the x-orders kept, so coefficients of x^{2n} stabilize
once depth >= xorder/2.  The weight ladders pair with quotient forms
(A,B)/(C,D): numerator sum (-1)^m q^{Am^2+Bm} x^{2m+1}/(q;q)_{2m+1) over
denominator sum (-1)^m q^{Cm^2+Dm} x^{2m}/(q;q)_{2m}; the secant forms are
plain reciprocals of the denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .errors import DepthTooSmall, DivisionByNonUnit, RowIncomplete, UnknownRow
from .paths import HORIZ, LatticePath, UP, dyck_2n, schroder_2n
from .qseries import QSeries, XQSeries, inv_one_minus_qk, pochhammer
from .report import IdentityReport


@dataclass(frozen=True)
class CFSpec:
    """Level weights w_i of a continued fraction 1/(1 - w_0 x^2/(1 - w_1 x^2/...))."""

    name: str
    w: Callable[[int, int], QSeries]  # (level, qorder) -> weight

    def weight(self, level: int, qorder: int) -> QSeries:
        return self.w(level, qorder)


def _odd_hook_pair(i: int, qorder: int) -> QSeries:
    return inv_one_minus_qk(2 * i + 1, qorder) * inv_one_minus_qk(2 * i + 3, qorder)


def cf_weights_ge_lt() -> CFSpec:
    """w_i = q^{2i+1}/((1-q^{2i+1})(1-q^{2i+3}))."""
    return CFSpec("ge-lt", lambda i, qo: _odd_hook_pair(i, qo).shift(2 * i + 1))


def cf_weights_ge_le() -> CFSpec:
    """w_i = q^i (even i) or q^{3i+2} (odd i), over (1-q^{2i+1})(1-q^{2i+3})."""
    return CFSpec(
        "ge-le",
        lambda i, qo: _odd_hook_pair(i, qo).shift(i if i % 2 == 0 else 3 * i + 2),
    )


def cf_weights_gt_lt() -> CFSpec:
    """w_i = q^{3i+2} (even i) or q^i (odd i), over (1-q^{2i+1})(1-q^{2i+3})."""
    return CFSpec(
        "gt-lt",
        lambda i, qo: _odd_hook_pair(i, qo).shift(3 * i + 2 if i % 2 == 0 else i),
    )


def cf_weights_q01() -> CFSpec:
    """w_i = q^{2i+2}/((1-q^{2i+1})(1-q^{2i+3}))."""
    return CFSpec("q01", lambda i, qo: _odd_hook_pair(i, qo).shift(2 * i + 2))


def cf_weights_q20() -> CFSpec:
    """w_i = q^{2i}/((1-q^{2i+1})(1-q^{2i+3}))."""
    return CFSpec("q20", lambda i, qo: _odd_hook_pair(i, qo).shift(2 * i))


def cf_weights_catalan() -> CFSpec:
    return CFSpec("catalan", lambda i, qo: QSeries.one(qo))


def delta_series(i: int, order: int) -> QSeries:
    """The principal-specialization ladder: 1 below zero, then the staircase-flag
    skew Schur specializations s_(2), s_(4), s_(5,4)/(1), ..."""
    from .tableaux import SkewShape, principal_spec_skew_schur

    if i < 0:
        return QSeries.one(order)
    if i == 0:
        return QSeries.one(order)  # s_() = 1
    if i % 2 == 1:
        n = (i + 1) // 2
        lam = tuple(3 * n - 1 - t for t in range(n))
        mu = tuple(n - 1 - t for t in range(n) if n - 1 - t > 0)
    else:
        n = i // 2
        lam = tuple(3 * n + 1 - t for t in range(n))
        mu = tuple(n - 1 - t for t in range(n) if n - 1 - t > 0)
    return principal_spec_skew_schur(SkewShape(lam, mu), order)


def cf_weights_delta(order: int) -> CFSpec:
    """w_i = (-1)^i Delta_{i-2} Delta_{i+1} / (Delta_{i-1} Delta_i).

    Only levels 0..2 exist as series quotients: Delta_3 onward have zero
    constant term, so the divisor stops being a unit.
    """

    def w(i: int, qorder: int) -> QSeries:
        num = delta_series(i - 2, qorder) * delta_series(i + 1, qorder)
        den = delta_series(i - 1, qorder) * delta_series(i, qorder)
        out = num / den  # DivisionByNonUnit for i >= 3, by design
        return out if i % 2 == 0 else -out

    return CFSpec("delta", w)


_CF_ROWS = {
    "ge-lt": cf_weights_ge_lt,
    "ge-le": cf_weights_ge_le,
    "gt-lt": cf_weights_gt_lt,
    "q01": cf_weights_q01,
    "q20": cf_weights_q20,
    "catalan": cf_weights_catalan,
}


def cf_spec(name: str) -> CFSpec:
    try:
        return _CF_ROWS[name]()
    except KeyError:
        raise UnknownRow(f"no weight ladder named {name!r}") from None


def cf_convergent(spec: CFSpec, depth: int, xorder: int, qorder: int) -> XQSeries:
    """Finite continued fraction, exact in x^m for m <= 2*depth."""
    if 2 * depth < xorder:
        raise DepthTooSmall(f"depth {depth} < xorder/2 = {xorder / 2}")
    g = XQSeries.one(xorder, qorder)
    one = XQSeries.one(xorder, qorder)
    for level in range(depth - 1, -1, -1):
        wx2 = XQSeries.zero(xorder, qorder)
        if xorder >= 2:
            coeffs = [QSeries.zero(qorder), QSeries.zero(qorder), spec.weight(level, qorder)]
            coeffs += [QSeries.zero(qorder)] * (xorder - 2)
            wx2 = XQSeries(tuple(coeffs))
        g = one / (one - wx2 * g)
    return g


def flajolet_path_sum(spec: CFSpec, n: int, qorder: int) -> QSeries:
    """Weighted Dyck path sum with u_j = w_j and d_j = 1."""
    total = QSeries.zero(qorder)
    for d in dyck_2n(n):
        term = QSeries.one(qorder)
        y = 0
        for s in d.steps:
            if s == UP:
                term = term * spec.weight(y, qorder)
                y += 1
            else:
                y -= 1
        total = total + term
    return total


def flajolet_check(spec: CFSpec, n: int, qorder: int) -> IdentityReport:
    """Convergent coefficient of x^{2n} equals the weighted path sum."""
    conv = cf_convergent(spec, max(n, 1), 2 * n, qorder)
    return IdentityReport.from_sides(
        "eq:flajolet",
        {"row": spec.name, "n": n},
        conv.coeff(2 * n),
        flajolet_path_sum(spec, n, qorder),
        qorder,
    )


# -- quotient generating functions ---------------------------------------------


@dataclass(frozen=True)
class QuotientSpec:
    """(A,B) over (C,D) exponents; parity picks the tangent or secant form."""

    A: int
    B: int
    C: int
    D: int
    parity: str  # "tangent" | "secant"


def _alt_sum(a: int, b: int, odd: bool, xorder: int, qorder: int) -> XQSeries:
    """sum (-1)^m q^{a m^2 + b m} x^{2m(+1)} / (q;q)_{2m(+1)}."""
    entries = [QSeries.zero(qorder) for _ in range(xorder + 1)]
    m = 0
    while True:
        power = 2 * m + 1 if odd else 2 * m
        if power > xorder:
            break
        expo = a * m * m + b * m
        term = QSeries.one(qorder) / pochhammer(1, power, qorder)
        if expo > 0:
            term = term.shift(expo)
        entries[power] = -term if m % 2 else term
        m += 1
    return XQSeries(tuple(entries))


def quotient_gf(spec: QuotientSpec, xorder: int, qorder: int) -> XQSeries:
    if spec.parity == "tangent":
        num = _alt_sum(spec.A, spec.B, True, xorder, qorder)
        den = _alt_sum(spec.C, spec.D, False, xorder, qorder)
        return num / den
    if spec.parity == "secant":
        den = _alt_sum(spec.C, spec.D, False, xorder, qorder)
        return XQSeries.one(xorder, qorder) / den
    raise ValueError(f"unknown parity {spec.parity!r}")


# -- the tangent table: quotient forms, weight ladders, and M definitions --------


@dataclass(frozen=True)
class TangentRow:
    """One tangent-number row: its quotient form(s), optional ladder, optional
    M definition (class and statistic whose class sum gives the numerator)."""

    row_id: str
    quotients: tuple[QuotientSpec, ...]
    ladder: str | None
    m_class: str | None
    m_expr: str | None


TANGENT_TABLE: tuple[TangentRow, ...] = (
    TangentRow("ge-lt", (QuotientSpec(0, 0, 0, 0, "tangent"), QuotientSpec(2, 1, 2, -1, "tangent")), "ge-lt", "Alt", "maj_inv"),
    TangentRow("ge-le", (QuotientSpec(1, 1, 1, -1, "tangent"),), "ge-le", "Alt", "maj_kappa_inv"),
    TangentRow("lt-gt", (QuotientSpec(1, 1, 1, 0, "tangent"),), None, "Ralt", "maj_kappa_inv"),
    TangentRow("gt-lt", (QuotientSpec(1, 0, 1, 0, "tangent"),), "gt-lt", "Alt", "maj_eta_inv"),
    TangentRow("q01", (QuotientSpec(0, 1, 0, 1, "tangent"),), "q01", None, None),
    TangentRow("q20", (QuotientSpec(2, 0, 2, -2, "tangent"),), "q20", None, None),
    TangentRow("le-ge", (QuotientSpec(1, 0, 1, -1, "tangent"),), None, "Ralt", "maj_eta_inv"),
)

TANGENT_BY_ID = {row.row_id: row for row in TANGENT_TABLE}


def table1_row_check(row_id: str, n: int, qorder: int) -> IdentityReport:
    """Pairwise agreement of whatever the row provides among the normalized
    class sum, the quotient form(s), and the convergent."""
    try:
        row = TANGENT_BY_ID[row_id]
    except KeyError:
        raise UnknownRow(f"no tangent row {row_id!r}") from None
    candidates: list[tuple[str, QSeries]] = []
    for t, quot in enumerate(row.quotients):
        candidates.append(
            (f"quotient{t}", quotient_gf(quot, 2 * n + 1, qorder).coeff(2 * n + 1))
        )
    if row.ladder is not None:
        conv = cf_convergent(cf_spec(row.ladder), max(n, 1), 2 * n, qorder)
        candidates.append(
            ("cf", conv.coeff(2 * n) * inv_one_minus_qk(1, qorder))
        )
    if row.m_expr is not None:
        from .perm import class_gf

        poly = class_gf(row.m_class, 2 * n + 1, row.m_expr)
        candidates.append(
            ("m-sum", QSeries.from_poly(poly, qorder) / pochhammer(1, 2 * n + 1, qorder))
        )
    if len(candidates) < 2:
        raise RowIncomplete(f"row {row_id} has a single computable form")
    base_name, base = candidates[0]
    verdict = all(series.eq_mod(base) for _, series in candidates[1:])
    return IdentityReport(
        "table1:" + row_id,
        {"n": n, "forms": [name for name, _ in candidates]},
        base,
        candidates[1][1],
        qorder,
        verdict,
        detail=f"{len(candidates)} forms compared",
    )


def secant_delta_check(n: int, qorder: int) -> IdentityReport:
    """E_{2n}/(q;q)_{2n} from permutations against the Delta-ladder path sum."""
    from .perm import euler_poly

    lhs = QSeries.from_poly(euler_poly(2 * n), qorder) / pochhammer(1, 2 * n, qorder)
    rhs = flajolet_path_sum(cf_weights_delta(qorder), n, qorder)
    return IdentityReport.from_sides("prop3.2", {"n": n}, lhs, rhs, qorder)


# -- the Schroder-path form of the twisted tangent numbers -----------------------


def schroder_weighted_sum(n: int, qorder: int) -> QSeries:
    """Little-Schroder path sum with up weight 1, down weight
    1/((1-q^{2i-1})(1-q^{2i+1})) from level i, flat weight -1/(1-q^{2i+1})."""
    total = QSeries.zero(qorder)
    for path in schroder_2n(n):
        term = QSeries.one(qorder)
        y = 0
        for s in path.steps:
            if s == UP:
                y += 1
            elif s == HORIZ:
                term = term * -inv_one_minus_qk(2 * y + 1, qorder)
            else:
                term = term * inv_one_minus_qk(2 * y - 1, qorder) * inv_one_minus_qk(2 * y + 1, qorder)
                y -= 1
        total = total + term
    return total


def schroder_cf_check(n: int, qorder: int) -> list[IdentityReport]:
    """(a) Schroder sum equals the parity-split Dyck ladder sum; (b) the
    flat-step/valley weight combination identity at each level."""
    reports = [
        IdentityReport.from_sides(
            "eqn:cf_E*",
            {"n": n},
            schroder_weighted_sum(n, qorder),
            flajolet_path_sum(cf_weights_ge_le(), n, qorder),
            qorder,
        )
    ]
    for i in range(0, 3):
        combined = -inv_one_minus_qk(2 * i + 1, qorder) + _odd_hook_pair(i, qorder)
        expected = _odd_hook_pair(i, qorder).shift(2 * i + 3)
        reports.append(
            IdentityReport.from_sides(
                "eqn:cf_E*:weights", {"i": i}, combined, expected, qorder
            )
        )
    return reports


def eqn_wi_corollary(n: int, qorder: int) -> IdentityReport:
    """(1/(1-q)) times the ladder path sum equals the high-peak hook sum."""
    from .paths import euler_star_path_gf

    lhs = flajolet_path_sum(cf_weights_ge_le(), n, qorder) * inv_one_minus_qk(1, qorder)
    return IdentityReport.from_sides(
        "eqn:w_i", {"n": n}, lhs, euler_star_path_gf(n, qorder), qorder
    )
