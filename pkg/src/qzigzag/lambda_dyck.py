"""Paths drawn inside a Young diagram, and the Kreiman outer decomposition.

A diagram path steps through cells of lambda moving up (-1,0) or right
(0,1); since both steps raise the content j-i by one, a path covers one
cell per antidiagonal and is determined by its up/down choices.  The
Kreiman outer decomposition tiles lambda/mu by disjoint such paths running
from column-bottoms of lambda to row-ends of lambda; it is unique up to
ordering, which the search asserts rather than assumes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import CapExceeded, NoDecomposition, NotUnique
from .qseries import QSeries, inv_one_minus_qk
from .tableaux import Cell, SkewShape, conjugate, hook

KREIMAN_CAP = 40


@dataclass(frozen=True)
class LambdaPath:
    cells: tuple[Cell, ...]

    def __post_init__(self):
        for a, b in zip(self.cells, self.cells[1:]):
            d = (b[0] - a[0], b[1] - a[1])
            if d not in ((-1, 0), (0, 1)):
                raise ValueError(f"bad step {a} -> {b}")

    @property
    def start(self) -> Cell:
        return self.cells[0]

    @property
    def end(self) -> Cell:
        return self.cells[-1]

    def __len__(self) -> int:
        return len(self.cells)

    def step_kinds(self) -> tuple[str, ...]:
        return tuple(
            "U" if b[0] < a[0] else "D" for a, b in zip(self.cells, self.cells[1:])
        )

    def peaks(self) -> tuple[Cell, ...]:
        ks = self.step_kinds()
        return tuple(
            self.cells[t]
            for t in range(1, len(self.cells) - 1)
            if ks[t - 1] == "U" and ks[t] == "D"
        )

    def valleys(self) -> tuple[Cell, ...]:
        ks = self.step_kinds()
        return tuple(
            self.cells[t]
            for t in range(1, len(self.cells) - 1)
            if ks[t - 1] == "D" and ks[t] == "U"
        )

    def first_step_up(self) -> bool:
        return len(self.cells) > 1 and self.step_kinds()[0] == "U"

    def last_step_down(self) -> bool:
        return len(self.cells) > 1 and self.step_kinds()[-1] == "D"


def lam_high_peaks(path: LambdaPath, lam: Sequence[int]) -> tuple[Cell, ...]:
    """Peaks u with u+(1,1) still inside lambda."""
    lam = tuple(lam)
    out = []
    for (i, j) in path.peaks():
        if i + 1 <= len(lam) and j + 1 <= lam[i]:
            out.append((i, j))
    return tuple(out)


def lam_dyck_paths(lam: Sequence[int], s: Cell, t: Cell) -> tuple[LambdaPath, ...]:
    """All paths from s to t inside lambda (cells anywhere in lambda)."""
    return _lam_dyck_paths_cached(tuple(lam), s, t)


@lru_cache(maxsize=None)
def _lam_dyck_paths_cached(lam: tuple[int, ...], s: Cell, t: Cell) -> tuple[LambdaPath, ...]:
    def inside(c: Cell) -> bool:
        return 1 <= c[0] <= len(lam) and 1 <= c[1] <= lam[c[0] - 1]

    out: list[LambdaPath] = []
    if not inside(s) or not inside(t) or s[0] < t[0] or s[1] > t[1]:
        return ()

    def rec(u: Cell, acc: list[Cell]):
        if u == t:
            out.append(LambdaPath(tuple(acc)))
            return
        i, j = u
        if i - 1 >= t[0] and inside((i - 1, j)):
            acc.append((i - 1, j))
            rec((i - 1, j), acc)
            acc.pop()
        if j + 1 <= t[1] and inside((i, j + 1)):
            acc.append((i, j + 1))
            rec((i, j + 1), acc)
            acc.pop()

    rec(s, [s])
    return tuple(out)


def lowest_path(lam: Sequence[int], s: Cell, t: Cell) -> LambdaPath:
    """The pointwise-southmost path from s to t: step right whenever possible."""
    lam = tuple(lam)
    cells = [s]
    u = s
    while u != t:
        i, j = u
        if j < t[1] and j + 1 <= lam[i - 1]:
            u = (i, j + 1)
        else:
            u = (i - 1, j)
        cells.append(u)
    return LambdaPath(tuple(cells))


# -- order relations -----------------------------------------------------------


def lam_le(lower: LambdaPath, upper: LambdaPath) -> bool:
    """lower weakly below upper: every cell has a northwest diagonal shadow in
    upper, and shared cells are peaks of lower and valleys of upper."""
    upper_cells = set(upper.cells)
    for u in lower.cells:
        i, j = u
        found = any((i - k, j - k) in upper_cells for k in range(0, max(i, j)))
        if not found:
            return False
    lp, uv = set(lower.peaks()), set(upper.valleys())
    for u in set(lower.cells) & upper_cells:
        if u not in lp or u not in uv:
            return False
    return True


def lam_lt(lower: LambdaPath, upper: LambdaPath) -> bool:
    return not (set(lower.cells) & set(upper.cells)) and lam_le(lower, upper)


# -- Kreiman outer decomposition ------------------------------------------------


def kreiman_decompose(shape: SkewShape, cap: int = KREIMAN_CAP) -> tuple[LambdaPath, ...]:
    """The unique cover of lambda/mu by disjoint column-bottom-to-row-end paths.

    Backtracking over forced starts: the southwest-most uncovered cell can
    only be entered from cells that are already covered or outside, so it
    must begin a path.  The full search space is traversed and a second
    solution raises NotUnique.
    """
    cells = set(shape.cells())
    if len(cells) > cap:
        raise CapExceeded(f"{len(cells)} cells exceeds cap {cap}")
    if not cells:
        return ()
    lam = shape.lam
    conj = conjugate(lam)
    starts = {(conj[j - 1], j) for j in range(1, lam[0] + 1)}
    ends = {(i, lam[i - 1]) for i in range(1, len(lam) + 1)}
    solutions: list[tuple[LambdaPath, ...]] = []

    def rec(remaining: frozenset[Cell], acc: list[LambdaPath]):
        if len(solutions) > 1:
            return
        if not remaining:
            solutions.append(tuple(acc))
            return
        c = min(remaining, key=lambda u: (-u[0], u[1]))
        if c not in starts:
            return

        def walk(u: Cell, trail: list[Cell]):
            if len(solutions) > 1:
                return
            if u in ends:
                path = LambdaPath(tuple(trail))
                acc.append(path)
                rec(remaining - frozenset(trail), acc)
                acc.pop()
            i, j = u
            for v in ((i - 1, j), (i, j + 1)):
                if v in remaining:
                    trail.append(v)
                    walk(v, trail)
                    trail.pop()

        walk(c, [c])

    rec(frozenset(cells), [])
    if not solutions:
        raise NoDecomposition(f"no Kreiman outer decomposition of {shape}")
    if len(solutions) > 1:
        raise NotUnique(f"Kreiman outer decomposition of {shape} is not unique")
    return solutions[0]


# -- the path poset and its rank function ----------------------------------------


def path_poset(paths: Sequence[LambdaPath]) -> dict[tuple[int, int], bool]:
    """less[(a,b)] = True iff paths[a] < paths[b] in the strictly-below order."""
    rel = {}
    for a in range(len(paths)):
        for b in range(len(paths)):
            rel[(a, b)] = a != b and lam_lt(paths[a], paths[b])
    return rel


def rank_function(paths: Sequence[LambdaPath]) -> list[int] | None:
    """Ranks if the poset of paths is ranked, else None.

    Ranks are longest-chain lengths from a minimal element; the poset is
    ranked iff every covering step raises that length by exactly one.
    """
    n = len(paths)
    less = path_poset(paths)
    ranks = [0] * n
    for _ in range(n):
        for b in range(n):
            for a in range(n):
                if less[(a, b)] and ranks[b] < ranks[a] + 1:
                    ranks[b] = ranks[a] + 1
    covers = [
        (a, b)
        for a in range(n)
        for b in range(n)
        if less[(a, b)] and not any(less[(a, m)] and less[(m, b)] for m in range(n))
    ]
    if all(ranks[b] == ranks[a] + 1 for a, b in covers):
        return ranks
    return None


# -- weighted path sums (determinant entries) ------------------------------------


def e_lambda(lam: Sequence[int], s: Cell, t: Cell, order: int) -> QSeries:
    """Sum over paths s->t of prod 1/(1-q^h(u)) over cells, q^h(u) over valleys."""
    total = QSeries.zero(order)
    for path in lam_dyck_paths(lam, s, t):
        term = QSeries.one(order)
        for u in path.cells:
            term = term * inv_one_minus_qk(hook(lam, *u), order)
        for u in path.valleys():
            term = term.shift(hook(lam, *u))
        total = total + term
    return total


def f_lambda_poly(lam: Sequence[int], s: Cell, t: Cell) -> list[int]:
    """Valley-count polynomial of Dyck_lambda(s,t)."""
    out = [0]
    for path in lam_dyck_paths(lam, s, t):
        v = len(path.valleys())
        if v >= len(out):
            out.extend([0] * (v + 1 - len(out)))
        out[v] += 1
    return out


def pleasant_entry(lam: Sequence[int], s: Cell, t: Cell) -> int:
    """Pleasant count of the ribbon between s and t: sum of 2^(cells - valleys)."""
    return sum(1 << (len(p) - len(p.valleys())) for p in lam_dyck_paths(lam, s, t))


# -- strict tuples for the lambda-Dyck analog of the marked-path count -----------


def strict_tuples(
    lam: Sequence[int], decomposition: Sequence[LambdaPath]
) -> Iterator[tuple[LambdaPath, ...]]:
    """Tuples D_i in Dyck_lambda(s_i, t_i), pairwise disjoint, ordered like the
    Kreiman poset on comparable pairs."""
    families = [lam_dyck_paths(lam, L.start, L.end) for L in decomposition]
    less = path_poset(decomposition)
    k = len(decomposition)

    def compatible(acc: list[LambdaPath], idx: int, cand: LambdaPath) -> bool:
        cand_cells = set(cand.cells)
        for prev_idx in range(idx):
            prev = acc[prev_idx]
            if cand_cells & set(prev.cells):
                if not (less[(prev_idx, idx)] or less[(idx, prev_idx)]):
                    return False
            if less[(prev_idx, idx)] and not lam_lt(prev, cand):
                return False
            if less[(idx, prev_idx)] and not lam_lt(cand, prev):
                return False
        return True

    def rec(idx: int, acc: list[LambdaPath]) -> Iterator[tuple[LambdaPath, ...]]:
        if idx == k:
            yield tuple(acc)
            return
        for cand in families[idx]:
            if compatible(acc, idx, cand):
                acc.append(cand)
                yield from rec(idx + 1, acc)
                acc.pop()

    yield from rec(0, [])


def pleasant_count_by_paths(shape: SkewShape, cap: int = KREIMAN_CAP) -> int:
    """Marked-tuple count: sum over strict tuples of prod 2^(cells - valleys)."""
    decomposition = kreiman_decompose(shape, cap)
    total = 0
    for tup in strict_tuples(shape.lam, decomposition):
        weight = 1
        for p in tup:
            weight <<= len(p) - len(p.valleys())
        total += weight
    return total


def strict_tuple_valley_poly(shape: SkewShape, cap: int = KREIMAN_CAP) -> list[int]:
    """Valley-count polynomial over strict tuples (the determinant's path side)."""
    decomposition = kreiman_decompose(shape, cap)
    out = [0]
    for tup in strict_tuples(shape.lam, decomposition):
        v = sum(len(p.valleys()) for p in tup)
        if v >= len(out):
            out.extend([0] * (v + 1 - len(out)))
        out[v] += 1
    return out
