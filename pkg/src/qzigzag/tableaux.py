"""Skew shapes, hooks, labelings, linear extensions, and tableau generating
functions computed two independent ways.

Cells are 1-based (row, column).  The cell poset orders x <= y when x lies
weakly southeast of y, so linear extensions list cells from the southeast
corner inward, matching fillings that weakly increase along rows and
columns.

``tableau_gf`` has two modes that share no code: ``extension`` divides the
maj polynomial over labeled linear extensions by (q;q)_n, while ``oracle``
runs a bounded-entry column-major DP directly over fillings.  Entries above
the truncation order cannot occur in a filling of size <= order, so the DP
is exact for every reported coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .errors import CapExceeded, CellOutside, MalformedPartition
from .qseries import QSeries, pochhammer

Cell = tuple[int, int]

EXTENSION_CAP = 14


def _validate_partition(p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(int(x) for x in p)
    if any(x <= 0 for x in p):
        raise MalformedPartition(f"nonpositive part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise MalformedPartition(f"not weakly decreasing: {p}")
    return p


def conjugate(p: Sequence[int]) -> tuple[int, ...]:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram lambda/mu with mu contained in lambda."""

    lam: tuple[int, ...]
    mu: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lam", _validate_partition(self.lam))
        object.__setattr__(self, "mu", _validate_partition(self.mu))
        if len(self.mu) > len(self.lam) or any(
            m > l for m, l in zip(self.mu, self.lam)
        ):
            raise MalformedPartition(f"mu {self.mu} not contained in lambda {self.lam}")

    def mu_part(self, i: int) -> int:
        return self.mu[i - 1] if i <= len(self.mu) else 0

    def lam_part(self, i: int) -> int:
        return self.lam[i - 1] if i <= len(self.lam) else 0

    def cells(self) -> tuple[Cell, ...]:
        return tuple(
            (i, j)
            for i in range(1, len(self.lam) + 1)
            for j in range(self.mu_part(i) + 1, self.lam[i - 1] + 1)
        )

    @property
    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)

    @property
    def n_rows(self) -> int:
        return len(self.lam)

    def __str__(self) -> str:
        lam = ",".join(map(str, self.lam))
        mu = ",".join(map(str, self.mu))
        return f"({lam})/({mu})" if self.mu else f"({lam})"


def staircase(n: int) -> tuple[int, ...]:
    """delta_n = (n-1, n-2, ..., 1)."""
    return tuple(range(n - 1, 0, -1))


def staircase_ab(n: int, a: int, b: int) -> tuple[int, ...]:
    """delta_n with the first part lowered by a and the last by b (a,b in {0,1})."""
    if a not in (0, 1) or b not in (0, 1):
        raise MalformedPartition("a and b must be 0 or 1")
    parts = [n - 1 - a] + list(range(n - 2, 1, -1)) + [1 - b]
    return _validate_partition([x for x in parts if x > 0])


def skew_staircase(n: int, k: int) -> SkewShape:
    """delta_{n+2k}/delta_n."""
    return SkewShape(staircase(n + 2 * k), staircase(n))


def thick_hook(a: int, b: int, k: int) -> SkewShape:
    """((b+k)^(a+k)) / (b^a)."""
    return SkewShape(((b + k),) * (a + k), (b,) * a if a else ())


def as_skew_staircase(shape: SkewShape) -> tuple[int, int] | None:
    """Return (n, k) if the shape is delta_{n+2k}/delta_n, else None."""
    for n in range(1, len(shape.lam) + 2):
        if shape.mu != staircase(n):
            continue
        total = len(shape.lam) + 1
        if total >= n and (total - n) % 2 == 0 and shape.lam == staircase(total):
            return n, (total - n) // 2
    return None


def parse_shape(text: str) -> SkewShape:
    """Shape syntax for the CLI: 'd6/d2' (staircases), 'd5', or '4,4,3,3/2,1'."""

    def part(s: str) -> tuple[int, ...]:
        s = s.strip()
        if not s:
            return ()
        if s.startswith("d"):
            return staircase(int(s[1:]))
        return tuple(int(x) for x in s.split(","))

    lam, _, mu = text.partition("/")
    return SkewShape(part(lam), part(mu))


def hook(lam: Sequence[int], i: int, j: int) -> int:
    """Hook length of cell (i,j) in the straight shape lambda."""
    lam = _validate_partition(lam)
    if not (1 <= i <= len(lam)) or not (1 <= j <= lam[i - 1]):
        raise CellOutside(f"({i},{j}) outside {lam}")
    return lam[i - 1] + conjugate(lam)[j - 1] - i - j + 1


# -- labelings and linear extensions ------------------------------------------

LABEL_KINDS = ("ssyt", "rpp", "st")


def labeling(shape: SkewShape, kind: str) -> dict[Cell, int]:
    """The bijection cells -> [n] characterizing each filling family.

    ssyt: labels increase with column from the right, top-down in a column.
    rpp: same column order but bottom-up within a column.
    st: row-major.
    """
    cells = shape.cells()
    if kind == "ssyt":
        key = lambda c: (-c[1], c[0])
    elif kind == "rpp":
        key = lambda c: (-c[1], -c[0])
    elif kind == "st":
        key = lambda c: (c[0], c[1])
    else:
        raise ValueError(f"unknown labeling kind {kind!r}")
    return {c: r for r, c in enumerate(sorted(cells, key=key), start=1)}


def linear_extensions(shape: SkewShape, cap: int = EXTENSION_CAP) -> Iterator[tuple[Cell, ...]]:
    """All linear extensions of the cell poset (southeast cells first)."""
    cells = shape.cells()
    if len(cells) > cap:
        raise CapExceeded(f"{len(cells)} cells exceeds extension cap {cap}")
    cellset = set(cells)

    def minimal(remaining: set[Cell]) -> list[Cell]:
        # covers in the poset are the east and south neighbors
        return sorted(
            c
            for c in remaining
            if (c[0] + 1, c[1]) not in remaining and (c[0], c[1] + 1) not in remaining
        )

    def rec(remaining: set[Cell], acc: list[Cell]) -> Iterator[tuple[Cell, ...]]:
        if not remaining:
            yield tuple(acc)
            return
        for c in minimal(remaining):
            remaining.remove(c)
            acc.append(c)
            yield from rec(remaining, acc)
            acc.pop()
            remaining.add(c)

    yield from rec(set(cellset), [])


def linear_extension_count(shape: SkewShape, cap: int = EXTENSION_CAP) -> int:
    return sum(1 for _ in linear_extensions(shape, cap))


def linear_extension_maj_poly(shape: SkewShape, kind: str, cap: int = EXTENSION_CAP) -> list[int]:
    """Sum of q^maj over the labeled linear extension words, as a polynomial."""
    from .perm import gf_from_exponents, maj

    lab = labeling(shape, kind)
    return gf_from_exponents(
        maj([lab[c] for c in ext]) for ext in linear_extensions(shape, cap)
    )


def linear_extension_majgf(shape: SkewShape, kind: str, order: int, cap: int = EXTENSION_CAP) -> QSeries:
    return QSeries.from_poly(linear_extension_maj_poly(shape, kind, cap), order)


# -- generating functions ------------------------------------------------------


def _bounded_entry_poly(shape: SkewShape, kind: str, order: int) -> list[int]:
    """Column-major profile DP over fillings with entries 0..order.

    State: per-row value of the most recently filled cell (None once the row
    is exhausted), mapped to the polynomial of accumulated size.  Pruning
    only drops states whose cheapest completion already exceeds the order.
    """
    if kind not in LABEL_KINDS:
        raise ValueError(f"unknown tableau kind {kind!r}")
    cells = shape.cells()
    if not cells:
        return [1]
    lam, nrows = shape.lam, shape.n_rows
    maxcol = lam[0]
    in_shape = set(cells)

    # remaining_after[(i, j)]: cells of row i strictly east of column j
    def row_remaining(i: int, j: int) -> int:
        return max(0, lam[i - 1] - j)

    dp: dict[tuple[int | None, ...], list[int]] = {
        tuple([None] * nrows): [1]
    }
    for j in range(1, maxcol + 1):
        col_rows = [i for i in range(1, nrows + 1) if (i, j) in in_shape]
        for i in col_rows:
            ndp: dict[tuple[int | None, ...], list[int]] = {}
            for state, poly in dp.items():
                left = state[i - 1] if (i, j - 1) in in_shape else None
                above = state[i - 2] if i >= 2 and (i - 1, j) in in_shape else None
                if kind == "ssyt":
                    lo = max(left or 0, above + 1 if above is not None else 0)
                elif kind == "rpp":
                    lo = max(left or 0, above or 0)
                else:  # st
                    lo = max(left + 1 if left is not None else 0,
                             above + 1 if above is not None else 0)
                base = min(e for e, c in enumerate(poly) if c)
                # cheapest completion of the other rows locks in their values;
                # rows above i are already at column j, rows below still at j-1
                floor_rest = sum(
                    (state[r - 1] or 0) * row_remaining(r, j if r < i else j - 1)
                    for r in range(1, nrows + 1)
                    if r != i and state[r - 1] is not None
                )
                for v in range(lo, order + 1):
                    cost = base + v * (1 + row_remaining(i, j)) + floor_rest
                    if cost > order:
                        break
                    new_state = state[: i - 1] + (v,) + state[i:]
                    tgt = ndp.setdefault(new_state, [0] * (order + 1))
                    for e, c in enumerate(poly):
                        if c and e + v <= order:
                            tgt[e + v] += c
            dp = {s: p for s, p in ndp.items() if any(p)}
        # retire rows whose last column is j
        if any(lam[i - 1] == j for i in range(1, nrows + 1)):
            rdp: dict[tuple[int | None, ...], list[int]] = {}
            for state, poly in dp.items():
                ns = tuple(
                    None if lam[r - 1] == j else state[r - 1] for r in range(1, nrows + 1)
                )
                tgt = rdp.setdefault(ns, [0] * (order + 1))
                for e, c in enumerate(poly):
                    tgt[e] += c
            dp = rdp
    out = [0] * (order + 1)
    for poly in dp.values():
        for e, c in enumerate(poly):
            out[e] += c
    return out


def tableau_gf(
    shape: SkewShape,
    kind: str,
    order: int,
    mode: str = "oracle",
    cap: int = EXTENSION_CAP,
) -> QSeries:
    """Size generating function over ssyt/rpp/st fillings of the shape."""
    if mode == "oracle":
        return QSeries.from_poly(_bounded_entry_poly(shape, kind, order), order)
    if mode == "extension":
        num = linear_extension_majgf(shape, kind, order, cap)
        return num / pochhammer(1, shape.size, order)
    raise ValueError(f"unknown mode {mode!r}")


def principal_spec_skew_schur(shape: SkewShape, order: int) -> QSeries:
    """s_{lambda/mu}(1, q, q^2, ...): the ssyt size generating function."""
    return tableau_gf(shape, "ssyt", order, mode="oracle")


def syt_count_and_naruse(shape: SkewShape, cap: int = EXTENSION_CAP) -> tuple[int, Fraction]:
    """Number of standard fillings, and the excited-diagram hook sum times n!.

    The two values are equal; returning both lets callers assert it.
    """
    from .excited import excited_diagrams

    if shape.size > cap:
        raise CapExceeded(f"{shape.size} cells exceeds cap {cap}")
    count = linear_extension_count(shape, cap)
    lam_cells = SkewShape(shape.lam).cells()
    total = Fraction(0)
    for diagram in excited_diagrams(shape):
        prod = Fraction(1)
        for (i, j) in lam_cells:
            if (i, j) not in diagram:
                prod /= hook(shape.lam, i, j)
        total += prod
    return count, factorial(shape.size) * total


@lru_cache(maxsize=None)
def zigzag_rpp_gf(n: int, k: int, order: int) -> QSeries:
    """RPP size gf of delta_{n+2k}/delta_n by the bounded-entry oracle."""
    return tableau_gf(skew_staircase(n, k), "rpp", order, mode="oracle")
