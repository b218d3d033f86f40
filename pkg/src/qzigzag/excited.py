"""Excited and pleasant diagrams, their counts, and the path bijections.

An excited move pushes a cell (i,j) of a diagram to (i+1,j+1) when the
three cells (i+1,j), (i,j+1), (i+1,j+1) are free and (i+1,j+1) is inside
lambda.  Pleasant diagrams are arbitrary subsets of the complement of
some excited diagram; counting them by brute-force union of power sets is
the one assumption-free oracle we have, so it is kept separate from the
path-tuple counting it validates.

For the skew staircase, cells of lambda identify with lattice points via
(i,j) -> (j-i, N-i-j), under which excited diagrams are exactly the
complements of non-intersecting nested Dyck path tuples.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

from .errors import CapExceeded, MalformedPartition
from .paths import LatticePath, dyck_2n, enumerate_tuples, marked_weight, valley_count
from .qseries import QSeries, inv_one_minus_qk
from .tableaux import Cell, SkewShape, as_skew_staircase, hook, skew_staircase

Diagram = frozenset[Cell]

EXCITED_MU_CAP = 8
EXCITED_LAM_CAP = 24
PLEASANT_DEF_CAP = 16


def excited_diagrams(
    shape: SkewShape, mu_cap: int = EXCITED_MU_CAP, lam_cap: int = EXCITED_LAM_CAP
) -> tuple[Diagram, ...]:
    """The closure of mu under excited moves inside lambda, deterministically ordered."""
    if sum(shape.mu) > mu_cap:
        raise CapExceeded(f"|mu| = {sum(shape.mu)} exceeds cap {mu_cap}")
    if sum(shape.lam) > lam_cap:
        raise CapExceeded(f"|lambda| = {sum(shape.lam)} exceeds cap {lam_cap}")
    lam_cells = set(SkewShape(shape.lam).cells()) if shape.lam else set()
    start: Diagram = frozenset(
        (i, j) for i in range(1, len(shape.mu) + 1) for j in range(1, shape.mu[i - 1] + 1)
    )
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for diag in frontier:
            for (i, j) in diag:
                target = (i + 1, j + 1)
                if (
                    target in lam_cells
                    and target not in diag
                    and (i + 1, j) not in diag
                    and (i, j + 1) not in diag
                ):
                    moved = frozenset(diag - {(i, j)} | {target})
                    if moved not in seen:
                        seen.add(moved)
                        nxt.append(moved)
        frontier = nxt
    return tuple(sorted(seen, key=sorted))


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def count_formulas(n: int, k: int, cap: int = 10) -> tuple[int, Fraction, int]:
    """Three computations of the excited-diagram count of delta_{n+2k}/delta_n.

    Returns (Catalan-determinant, product formula, direct enumeration); the
    product is implemented exactly as displayed, over 1 <= i < j <= n.
    """
    if n + 2 * k > cap:
        raise CapExceeded(f"n+2k = {n + 2 * k} exceeds cap {cap}")
    matrix = [[catalan(n + i + j - 2) for j in range(1, k + 1)] for i in range(1, k + 1)]
    e_det = _int_det(matrix)
    e_prod = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            e_prod *= Fraction(2 * k + i + j - 1, i + j - 1)
    big = n + 2 * k
    e_enum = len(
        excited_diagrams(
            skew_staircase(n, k),
            mu_cap=n * (n - 1) // 2,
            lam_cap=big * (big - 1) // 2,
        )
    )
    return e_det, e_prod, e_enum


def _int_det(m: list[list[int]]) -> int:
    k = len(m)
    if k == 0:
        return 1
    if k == 1:
        return m[0][0]
    total = 0
    for c in range(k):
        minor = [row[:c] + row[c + 1 :] for row in m[1:]]
        term = m[0][c] * _int_det(minor)
        total += term if c % 2 == 0 else -term
    return total


def pleasant_count(shape: SkewShape, method: str = "definition") -> int:
    """Number of subsets of lambda minus D over excited diagrams D.

    definition: hash-set union of power sets (assumption-free; capped).
    rho_star: weighted count over non-intersecting path tuples; valid for
    skew staircases, and for shapes admitting the lambda-Dyck analog.
    """
    if method == "definition":
        worst = shape.size
        if worst > PLEASANT_DEF_CAP:
            raise CapExceeded(
                f"|lambda\\D| = {worst} exceeds definition-method cap {PLEASANT_DEF_CAP}"
            )
        lam_cells = tuple(SkewShape(shape.lam).cells())
        diagrams = excited_diagrams(shape, mu_cap=sum(shape.mu), lam_cap=sum(shape.lam))
        seen: set[Diagram] = set()
        for diag in diagrams:
            free = [c for c in lam_cells if c not in diag]
            for mask in range(1 << len(free)):
                seen.add(frozenset(free[t] for t in range(len(free)) if mask >> t & 1))
        return len(seen)
    if method == "rho_star":
        nk = as_skew_staircase(shape)
        if nk is not None:
            n, k = nk
            return sum(
                marked_weight(t.paths)
                for t in enumerate_tuples(n, k, ["strict"] * (k - 1), cap=10)
            )
        from .lambda_dyck import pleasant_count_by_paths

        return pleasant_count_by_paths(shape)
    raise ValueError(f"unknown method {method!r}")


# -- the staircase cell/point dictionary --------------------------------------


def cell_to_point(cell: Cell, big_n: int) -> tuple[int, int]:
    i, j = cell
    return (j - i, big_n - i - j)


def point_to_cell(point: tuple[int, int], big_n: int) -> Cell:
    x, y = point
    i, j = (big_n - y - x) // 2, (big_n - y + x) // 2
    return (i, j)


def rho(paths: Iterable[LatticePath], n: int, k: int) -> Diagram:
    """Complement map: lambda cells minus the union of the path tuples' cells."""
    big_n = n + 2 * k
    lam_cells = set(SkewShape(skew_staircase(n, k).lam).cells())
    used = {
        point_to_cell(p, big_n) for path in paths for p in path.points
    }
    return frozenset(lam_cells - used)


def rho_star(paths: Iterable[LatticePath], marks: Iterable[tuple[int, int]], n: int, k: int) -> Diagram:
    """Marked version: union of path cells minus the marked cells."""
    big_n = n + 2 * k
    used = {point_to_cell(p, big_n) for path in paths for p in path.points}
    marked = {point_to_cell(p, big_n) for p in marks}
    return frozenset(used - marked)


def rho_pairs(n: int, k: int, cap: int = 8) -> list[tuple[tuple[LatticePath, ...], Diagram]]:
    """All (tuple, image) pairs of the complement bijection, for exhaustive checks."""
    if k < 1:
        raise ValueError("k >= 1 required")
    if n + 2 * k > cap:
        raise CapExceeded(f"n+2k = {n + 2 * k} exceeds cap {cap}")
    return [
        (t.paths, rho(t.paths, n, k))
        for t in enumerate_tuples(n, k, ["strict"] * (k - 1), cap=cap)
    ]


# -- the two hook-weighted sums over diagrams ---------------------------------


def mpp_ssyt_side(shape: SkewShape, order: int) -> QSeries:
    """Excited-diagram sum: product over lambda\\D of q^(col'-i)/(1-q^hook)."""
    lam_cells = tuple(SkewShape(shape.lam).cells())
    from .tableaux import conjugate

    conj = conjugate(shape.lam)
    total = QSeries.zero(order)
    for diag in excited_diagrams(shape):
        term = QSeries.one(order)
        for (i, j) in lam_cells:
            if (i, j) in diag:
                continue
            term = term * inv_one_minus_qk(hook(shape.lam, i, j), order)
            term = term.shift(conj[j - 1] - i)
        total = total + term
    return total


def mpp_rpp_side(shape: SkewShape, order: int) -> QSeries:
    """Pleasant-diagram sum: product over the subset of q^hook/(1-q^hook).

    Enumerated without materializing subsets: per excited diagram the inner
    sum factors, but subsets are shared between diagrams, so we do include
    the explicit union here; caps apply as in pleasant_count.
    """
    if shape.size > PLEASANT_DEF_CAP:
        raise CapExceeded(f"|lambda\\D| = {shape.size} exceeds cap {PLEASANT_DEF_CAP}")
    lam_cells = tuple(SkewShape(shape.lam).cells())
    diagrams = excited_diagrams(shape, mu_cap=sum(shape.mu), lam_cap=sum(shape.lam))
    seen: set[Diagram] = set()
    for diag in diagrams:
        free = [c for c in lam_cells if c not in diag]
        for mask in range(1 << len(free)):
            seen.add(frozenset(free[t] for t in range(len(free)) if mask >> t & 1))
    total = QSeries.zero(order)
    for subset in sorted(seen, key=sorted):
        term = QSeries.one(order)
        for (i, j) in subset:
            h = hook(shape.lam, i, j)
            term = term * inv_one_minus_qk(h, order)
            term = term.shift(h)
        total = total + term
    return total


@lru_cache(maxsize=None)
def schroder_little(m: int) -> int:
    """Little Schroder numbers 1, 1, 3, 11, 45, ... by path enumeration."""
    if m == 0:
        return 1
    from .paths import schroder_2n

    return len(schroder_2n(m))


def s_frak(m: int) -> int:
    """Pleasant count of the zigzag strip: 2 at m=0, else 2^(m+2) s_m; 0 below."""
    if m < 0:
        return 0
    return sum(1 << (len(d.points) - valley_count(d)) for d in dyck_2n(m))
