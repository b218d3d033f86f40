"""Dyck and Schroder paths, their features, weight schemes, and path tuples.

Paths store their step word; points and features are derived and cached.
A point weight wt and a valley/high-peak extra weight wtext make up a
scheme; the two presets are the valley-counting scheme (wt=1, wtext=q)
and the odd-hook scheme (wt = 1/(1-q^{2y+1}), wtext = q^{2y+1}) whose
valley flavor reproduces the RPP generating function of a zigzag strip.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .errors import BadEndpoints, CapExceeded, FlavorMismatch
from .qseries import QSeries, inv_one_minus_qk, one_minus_qk

UP, DOWN, HORIZ = "U", "D", "H"

Point = tuple[int, int]


@dataclass(frozen=True)
class LatticePath:
    """Nonnegative lattice path with unit diagonal steps and flat double steps."""

    start_x: int
    steps: tuple[str, ...]

    def __post_init__(self):
        y = 0
        for s in self.steps:
            if s == UP:
                y += 1
            elif s == DOWN:
                y -= 1
            elif s != HORIZ:
                raise ValueError(f"bad step {s!r}")
            if y < 0:
                raise ValueError("path dips below the axis")

    @staticmethod
    def from_word(word: str, start_x: int = 0) -> "LatticePath":
        return LatticePath(start_x, tuple(word))

    @property
    def points(self) -> tuple[Point, ...]:
        return _points(self)

    @property
    def end(self) -> Point:
        return self.points[-1]

    @property
    def has_horizontal(self) -> bool:
        return HORIZ in self.steps

    def is_dyck(self) -> bool:
        return not self.has_horizontal and self.points[0][1] == 0 and self.end[1] == 0

    def is_schroder(self) -> bool:
        """Little Schroder: endpoints on the axis, no flat step at height 0."""
        if self.points[0][1] != 0 or self.end[1] != 0:
            return False
        y = 0
        for s in self.steps:
            if s == HORIZ and y == 0:
                return False
            y += 1 if s == UP else -1 if s == DOWN else 0
        return True

    def height_function(self) -> dict[int, int]:
        """S(i): height at x=i, including the midpoints of flat steps."""
        out: dict[int, int] = {}
        x, y = self.start_x, 0
        out[x] = y
        for s in self.steps:
            if s == HORIZ:
                out[x + 1] = y
                out[x + 2] = y
                x += 2
            else:
                y += 1 if s == UP else -1
                x += 1
                out[x] = y
        return out

    def word(self) -> str:
        return "".join(self.steps)

    def __str__(self) -> str:
        return f"{self.word() or 'empty'}@{self.start_x}"

    __repr__ = __str__


@lru_cache(maxsize=None)
def _points(path: LatticePath) -> tuple[Point, ...]:
    pts = [(path.start_x, 0)]
    x, y = path.start_x, 0
    for s in path.steps:
        if s == HORIZ:
            x += 2
        else:
            y += 1 if s == UP else -1
            x += 1
        pts.append((x, y))
    return tuple(pts)


@dataclass(frozen=True)
class PathFeatures:
    valleys: tuple[Point, ...]
    peaks: tuple[Point, ...]
    high_peaks: tuple[Point, ...]
    H: int


@lru_cache(maxsize=None)
def features(path: LatticePath) -> PathFeatures:
    """Valleys, peaks, high peaks (height >= 2), and H = sum of 2b+1 over high peaks."""
    pts = path.points
    valleys, peaks = [], []
    for t in range(1, len(pts) - 1):
        prev_y, y, next_y = pts[t - 1][1], pts[t][1], pts[t + 1][1]
        # flat steps never form peaks or valleys; skip midpoint-free H geometry
        if pts[t][0] - pts[t - 1][0] != 1 or pts[t + 1][0] - pts[t][0] != 1:
            continue
        if prev_y > y < next_y:
            valleys.append(pts[t])
        elif prev_y < y > next_y:
            peaks.append(pts[t])
    high = [p for p in peaks if p[1] >= 2]
    return PathFeatures(tuple(valleys), tuple(peaks), tuple(high), sum(2 * p[1] + 1 for p in high))


def valley_count(path: LatticePath) -> int:
    return len(features(path).valleys)


# -- enumeration ---------------------------------------------------------------


def enumerate_paths(kind: str, from_x: int, to_x: int) -> Iterator[LatticePath]:
    """All Dyck or little-Schroder paths between axis points, in lex step order."""
    if kind not in ("Dyck", "Schroder"):
        raise ValueError(f"unknown path kind {kind!r}")
    if to_x < from_x or (to_x - from_x) % 2 != 0:
        raise BadEndpoints(f"no {kind} path from {from_x} to {to_x}")
    allow_h = kind == "Schroder"

    def rec(x: int, y: int, acc: list[str]) -> Iterator[LatticePath]:
        if x == to_x:
            if y == 0:
                yield LatticePath(from_x, tuple(acc))
            return
        remaining = to_x - x
        if y + 1 <= remaining - 1:
            acc.append(UP)
            yield from rec(x + 1, y + 1, acc)
            acc.pop()
        if y > 0:
            acc.append(DOWN)
            yield from rec(x + 1, y - 1, acc)
            acc.pop()
        if allow_h and y > 0 and x + 2 <= to_x and y <= remaining - 2:
            acc.append(HORIZ)
            yield from rec(x + 2, y, acc)
            acc.pop()

    yield from rec(from_x, 0, [])


@lru_cache(maxsize=None)
def dyck_paths(from_x: int, to_x: int) -> tuple[LatticePath, ...]:
    return tuple(enumerate_paths("Dyck", from_x, to_x))


@lru_cache(maxsize=None)
def schroder_paths(from_x: int, to_x: int) -> tuple[LatticePath, ...]:
    return tuple(enumerate_paths("Schroder", from_x, to_x))


def dyck_2n(n: int) -> tuple[LatticePath, ...]:
    """Dyck paths from (-n,0) to (n,0)."""
    return dyck_paths(-n, n)


def schroder_2n(n: int) -> tuple[LatticePath, ...]:
    return schroder_paths(-n, n)


# -- weight schemes -------------------------------------------------------------


@dataclass
class WeightScheme:
    """Point weight, valley/high-peak extra weight, and the exchange constants.

    wt(p)*(wtext(p)-1) must equal the constant series c at every lattice
    point (checked up to height_bound at construction); t(j) is the factor
    relating the high-peak and valley flavors on all-high-peak paths of
    length 2j.
    """

    name: str
    order: int
    wt: Callable[[Point], QSeries]
    wtext: Callable[[Point], QSeries]
    c: QSeries
    t: Callable[[int], QSeries]
    wtext_exp: Callable[[Point], int] | None = None  # set when wtext is the monomial q^e
    height_bound: int = 10
    _wt_v_cache: dict = field(default_factory=dict, repr=False)
    _wt_hp_cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for y in range(self.height_bound + 1):
            p = (y % 2, y)  # parity-consistent sample point at each height
            got = self.wt(p) * (self.wtext(p) - QSeries.one(self.order))
            if not got.eq_mod(self.c):
                raise ValueError(f"scheme {self.name}: wt*(wtext-1) not constant at height {y}")

    @staticmethod
    def val_count(order: int, height_bound: int = 10) -> "WeightScheme":
        one = QSeries.one(order)
        q = QSeries.monomial(1, order)
        return WeightScheme(
            name="VAL_COUNT",
            order=order,
            wt=lambda p: one,
            wtext=lambda p: q,
            c=q - one,
            t=lambda j: q,
            wtext_exp=lambda p: 1,
            height_bound=height_bound,
        )

    @staticmethod
    def mpp_rpp(order: int, height_bound: int = 10) -> "WeightScheme":
        return WeightScheme(
            name="MPP_RPP",
            order=order,
            wt=lambda p: inv_one_minus_qk(2 * p[1] + 1, order),
            wtext=lambda p: QSeries.monomial(2 * p[1] + 1, order),
            c=QSeries.constant(-1, order),
            t=lambda j: QSeries.monomial(2 * j + 1, order),
            wtext_exp=lambda p: 2 * p[1] + 1,
            height_bound=height_bound,
        )

    @staticmethod
    def custom(
        order: int,
        wt: Callable[[Point], QSeries],
        wtext: Callable[[Point], QSeries],
        t: Callable[[int], QSeries] | None = None,
        height_bound: int = 10,
    ) -> "WeightScheme":
        c = wt((0, 0)) * (wtext((0, 0)) - QSeries.one(order))
        return WeightScheme(
            name="CUSTOM",
            order=order,
            wt=wt,
            wtext=wtext,
            c=c,
            t=t or (lambda j: QSeries.one(order)),
            height_bound=height_bound,
        )

    # -- flavors --------------------------------------------------------------

    def wt_v(self, path: LatticePath) -> QSeries:
        """Product of wt over points times wtext over valleys (Dyck only)."""
        if path not in self._wt_v_cache:
            self._wt_v_cache[path] = self._flavored(path, features(path).valleys)
        return self._wt_v_cache[path]

    def wt_hp(self, path: LatticePath) -> QSeries:
        if path not in self._wt_hp_cache:
            self._wt_hp_cache[path] = self._flavored(path, features(path).high_peaks)
        return self._wt_hp_cache[path]

    def _flavored(self, path: LatticePath, extra: Sequence[Point]) -> QSeries:
        if not path.is_dyck():
            raise FlavorMismatch("valley/high-peak flavors need a Dyck path")
        out = QSeries.one(self.order)
        for p in path.points:
            out = out * self.wt(p)
        for p in extra:
            out = out * self.wtext(p)
        return out

    def wt_sch(self, path: LatticePath) -> QSeries:
        """c^(number of flat steps) times the product of wt over path points."""
        if not path.is_schroder():
            raise FlavorMismatch("schroder flavor needs a little-Schroder path")
        out = QSeries.one(self.order)
        for p in path.points:
            out = out * self.wt(p)
        hs = sum(1 for s in path.steps if s == HORIZ)
        for _ in range(hs):
            out = out * self.c
        return out

    def one_minus_inv_wtext(self, p: Point) -> tuple[QSeries, int]:
        """(1 - 1/wtext(p)) as (series, shift) with value = q^shift * series.

        For monomial wtext = q^e this is (-(1-q^e), -e); for unit wtext it is
        a plain series with shift 0.
        """
        if self.wtext_exp is not None:
            e = self.wtext_exp(p)
            return -one_minus_qk(e, self.order), -e
        w = self.wtext(p)
        if w.constant_term == 0:
            raise ValueError("wtext neither a monomial nor a unit; cannot invert")
        return QSeries.one(self.order) - QSeries.one(self.order) / w, 0


def weigh(path: LatticePath, scheme: WeightScheme, flavor: str) -> QSeries:
    if flavor == "valley":
        return scheme.wt_v(path)
    if flavor == "highpeak":
        return scheme.wt_hp(path)
    if flavor == "schroder":
        return scheme.wt_sch(path)
    raise FlavorMismatch(f"unknown flavor {flavor!r}")


# -- flat-step maps -------------------------------------------------------------


def _replace_steps(path: LatticePath, repl: dict[int, tuple[str, ...]]) -> LatticePath:
    steps: list[str] = []
    for t, s in enumerate(path.steps):
        steps.extend(repl.get(t, (s,)))
    return LatticePath(path.start_x, tuple(steps))


def phi_v(path: LatticePath) -> LatticePath:
    """Replace each flat step by down-then-up (flat at level j covers a valley at j-1)."""
    return _replace_steps(
        path, {t: (DOWN, UP) for t, s in enumerate(path.steps) if s == HORIZ}
    )


def phi_hp(path: LatticePath) -> LatticePath:
    """Replace each flat step by up-then-down (flat at level j covers a peak at j+1)."""
    return _replace_steps(
        path, {t: (UP, DOWN) for t, s in enumerate(path.steps) if s == HORIZ}
    )


def _remove_points(path: LatticePath, pts: frozenset[Point]) -> LatticePath | None:
    """Replace the down-up or up-down pair around each chosen point by a flat step."""
    pairs = []
    points = path.points
    for t in range(1, len(points) - 1):
        if points[t] in pts:
            pairs.append(t)
    steps = list(path.steps)
    out: list[str] = []
    skip = False
    for t, s in enumerate(steps):
        if skip:
            skip = False
            continue
        if (t + 1) in pairs:  # point t+1 sits between steps t and t+1
            out.append(HORIZ)
            skip = True
        else:
            out.append(s)
    cand = LatticePath(path.start_x, tuple(out))
    return cand if cand.is_schroder() else None


def preimages(dyck: LatticePath, direction: str) -> list[LatticePath]:
    """All little-Schroder paths mapping to the Dyck path under phi_v or phi_hp.

    For phi_v every subset of valleys can flatten (the flat step lands at
    level y+1 >= 1); for phi_hp flattening a height-1 peak would put a flat
    step on the axis, so only high peaks survive the validity filter.
    """
    from itertools import combinations

    if direction == "phiV":
        candidates = features(dyck).valleys
    elif direction == "phiHP":
        candidates = features(dyck).peaks
    else:
        raise ValueError(f"unknown direction {direction!r}")
    out = []
    for r in range(len(candidates) + 1):
        for subset in combinations(candidates, r):
            cand = _remove_points(dyck, frozenset(subset))
            if cand is not None:
                out.append(cand)
    return out


# -- path order and tuples -------------------------------------------------------


def path_le(lower: LatticePath, upper: LatticePath) -> bool:
    """lower(i) <= upper(i) on lower's x-range, sharing no step."""
    f1, f2 = lower.height_function(), upper.height_function()
    xs = sorted(f1)
    if any(x not in f2 or f1[x] > f2[x] for x in xs):
        return False
    return not any(
        f1[x] == f2[x] and f1[x + 1] == f2[x + 1] for x in xs[:-1] if x + 1 in f1
    )


def path_lt(lower: LatticePath, upper: LatticePath) -> bool:
    f1, f2 = lower.height_function(), upper.height_function()
    return all(x in f2 and f1[x] < f2[x] for x in f1)


@dataclass(frozen=True)
class PathTuple:
    paths: tuple[LatticePath, ...]
    relations: tuple[str, ...]  # between consecutive paths: "strict" | "weak"
    marks: frozenset[Point] | None = None


def enumerate_tuples(
    n: int, k: int, relations: Sequence[str], marked: bool = False, cap: int = 8
) -> Iterator[PathTuple]:
    """Stream nested path tuples with the given neighbor relations.

    With marked=True, every admissible mark set (subsets of non-valley
    points) is materialized; use marked_weight for counting instead.
    """
    from itertools import combinations

    if n + 2 * k > cap:
        raise CapExceeded(f"n+2k = {n + 2 * k} exceeds cap {cap}")
    if len(relations) != max(k - 1, 0):
        raise ValueError("need one relation per adjacent pair")
    rel_fn = {"strict": path_lt, "weak": path_le}

    def rec(i: int, acc: list[LatticePath]) -> Iterator[tuple[LatticePath, ...]]:
        if i == k:
            yield tuple(acc)
            return
        for cand in dyck_2n(n + 2 * i):
            if i == 0 or rel_fn[relations[i - 1]](acc[-1], cand):
                acc.append(cand)
                yield from rec(i + 1, acc)
                acc.pop()

    for paths in rec(0, []):
        if not marked:
            yield PathTuple(paths, tuple(relations))
            continue
        free = [p for d in paths for p in d.points if p not in set(features(d).valleys)]
        for r in range(len(free) + 1):
            for subset in combinations(free, r):
                yield PathTuple(paths, tuple(relations), frozenset(subset))


def marked_weight(paths: Sequence[LatticePath]) -> int:
    """Number of mark sets: product of 2^(points - valleys) over the tuple."""
    return 1 << sum(len(d.points) - valley_count(d) for d in paths)


# -- zigzag generating functions by weighted path sums ---------------------------


@lru_cache(maxsize=None)
def euler_path_gf(n: int, order: int) -> QSeries:
    """E_{2n+1}(q)/(q;q)_{2n+1} as the point-weighted Dyck path sum q^b/(1-q^{2b+1})."""
    total = QSeries.zero(order)
    for d in dyck_2n(n):
        term = QSeries.one(order)
        for (_, b) in d.points:
            term = term * inv_one_minus_qk(2 * b + 1, order)
            term = term.shift(b)
        total = total + term
    return total


@lru_cache(maxsize=None)
def euler_star_path_gf(n: int, order: int) -> QSeries:
    """E*_{2n+1}(q)/(q;q)_{2n+1} as the high-peak weighted Dyck path sum."""
    total = QSeries.zero(order)
    for d in dyck_2n(n):
        term = QSeries.one(order)
        for (_, b) in d.points:
            term = term * inv_one_minus_qk(2 * b + 1, order)
        total = total + term.shift(features(d).H)
    return total
