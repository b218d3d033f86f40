"""Block map, Foata map, and the modified Foata bijections with their inverses.

The block step f(w, <) cuts w_1..w_{k-1} into blocks each ending at a letter
on the same side of w_k as w_{k-1} is, cyclically shifts every block so its
last letter moves to the front, and reappends w_k.  Iterating it letter by
letter gives the Foata map; the modified maps swap in a transposed total
order at trigger letters, which is what transports the twisted maj
statistics onto inv-based ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import perm
from .errors import NotInClass, UnknownRow
from .perm import Permutation, Word


@dataclass(frozen=True)
class OrderSpec:
    """Total order on positive integers: natural, or with i and i+1 exchanged."""

    swapped: int | None = None  # None = natural order; i = exchange i, i+1

    def rank(self, x: int) -> int:
        if self.swapped is not None:
            if x == self.swapped:
                return self.swapped + 1
            if x == self.swapped + 1:
                return self.swapped
        return x

    def lt(self, a: int, b: int) -> bool:
        return self.rank(a) < self.rank(b)


NATURAL = OrderSpec()


def block_decomposition(w: Sequence[int], order: OrderSpec = NATURAL) -> list[Word]:
    """The blocks B_1..B_m of w_1..w_{k-1}, determined by the last letter w_k."""
    if len(w) <= 1:
        return []
    c = w[-1]
    last_below = order.lt(w[-2], c)
    blocks: list[Word] = []
    current: list[int] = []
    for x in w[:-1]:
        current.append(x)
        if order.lt(x, c) == last_below:
            blocks.append(tuple(current))
            current = []
    # w_{k-1} always closes the final block, so nothing dangles
    assert not current
    return blocks


def block_step(w: Sequence[int], order: OrderSpec = NATURAL) -> Word:
    """f(w, <): cyclically shift each block so its last letter leads."""
    w = tuple(w)
    if len(set(w)) != len(w):
        raise ValueError("block_step needs distinct letters")
    if len(w) <= 1:
        return w
    out: list[int] = []
    for block in block_decomposition(w, order):
        out.append(block[-1])
        out.extend(block[:-1])
    out.append(w[-1])
    return tuple(out)


def block_step_inverse(v: Sequence[int], order: OrderSpec = NATURAL) -> Word:
    """Recover w from f(w, <): blocks of v start at the letters beside v's last."""
    v = tuple(v)
    if len(v) <= 1:
        return v
    c = v[-1]
    leaders_below = order.lt(v[0], c)
    out: list[int] = []
    block: list[int] = []
    for x in v[:-1]:
        if order.lt(x, c) == leaders_below and block:
            out.extend(block[1:])
            out.append(block[0])
            block = []
        block.append(x)
    out.extend(block[1:])
    out.append(block[0])
    out.append(c)
    return tuple(out)


# -- the twelve modified Foata maps ------------------------------------------


@dataclass(frozen=True)
class Trigger:
    """When the next letter c triggers the transposed order.

    c must have the stated parity and be >= c_min; the order is used only
    when c + d_delta has not yet appeared among the previously consumed
    letters of pi.  The transposed pair is (c + swap_delta, c + swap_delta + 1).
    """

    c_parity: int
    c_min: int
    d_delta: int
    swap_delta: int

    def order_for(self, c: int, consumed: frozenset[int]) -> OrderSpec:
        if c % 2 == self.c_parity and c >= self.c_min and (c + self.d_delta) not in consumed:
            return OrderSpec(swapped=c + self.swap_delta)
        return NATURAL


@dataclass(frozen=True)
class FoataRow:
    """One row of the modified-Foata table: class, parity, statistics, trigger.

    For starred rows the summed identity holds with either subword, but the
    per-element transport through the map holds for exactly one canonical
    reading (star_default): the even subword on the alternating side, the
    odd subword on the reverse-alternating side.
    """

    row_id: str
    klass: str  # "AltInv" | "RaltInv"
    parity: str  # "odd" | "even"
    a_tag: str  # "maj" | "maj_kappa" | "maj_eta"
    b_sign: int  # 0 for plain rows
    b_stat: str | None  # des/asc/ndes/nasc of a subword of sigma^{-1}
    b_subword: str | None  # "o" | "e" | "star"
    trigger: Trigger | None

    @property
    def star_default(self) -> str | None:
        if self.b_subword != "star":
            return self.b_subword
        return "e" if self.klass == "AltInv" else "o"

    def describe(self) -> str:
        a = {"maj": "maj(pi)", "maj_kappa": "maj(kappa.pi)", "maj_eta": "maj(eta.pi)"}[self.a_tag]
        if self.b_sign == 0:
            b = "inv(sigma)"
        else:
            sign = "+" if self.b_sign > 0 else "-"
            b = f"inv(sigma){sign}{self.b_stat}((sigma^-1)_{self.b_subword})"
        return f"{self.klass} {self.parity}: {a} -> {b}"


TABLE4: tuple[FoataRow, ...] = (
    FoataRow("alt-odd-plain", "AltInv", "odd", "maj", 0, None, None, None),
    FoataRow("alt-odd-kappa", "AltInv", "odd", "maj_kappa", -1, "ndes", "e", Trigger(0, 2, +2, 0)),
    FoataRow("alt-odd-eta", "AltInv", "odd", "maj_eta", +1, "nasc", "e", Trigger(0, 2, -2, -1)),
    FoataRow("alt-even-plain", "AltInv", "even", "maj", 0, None, None, None),
    FoataRow("alt-even-kappa", "AltInv", "even", "maj_kappa", -1, "asc", "star", Trigger(0, 2, +2, 0)),
    FoataRow("alt-even-eta", "AltInv", "even", "maj_eta", +1, "nasc", "star", Trigger(0, 2, -2, -1)),
    FoataRow("ralt-odd-plain", "RaltInv", "odd", "maj", 0, None, None, None),
    FoataRow("ralt-odd-kappa", "RaltInv", "odd", "maj_kappa", +1, "des", "o", Trigger(1, 3, -2, -1)),
    FoataRow("ralt-odd-eta", "RaltInv", "odd", "maj_eta", -1, "asc", "o", Trigger(1, 1, +2, 0)),
    FoataRow("ralt-even-plain", "RaltInv", "even", "maj", 0, None, None, None),
    FoataRow("ralt-even-kappa", "RaltInv", "even", "maj_kappa", +1, "des", "star", Trigger(1, 3, -2, -1)),
    FoataRow("ralt-even-eta", "RaltInv", "even", "maj_eta", -1, "ndes", "star", Trigger(1, 1, +2, 0)),
)

TABLE4_BY_ID = {row.row_id: row for row in TABLE4}


def get_row(row_id: str) -> FoataRow:
    try:
        return TABLE4_BY_ID[row_id]
    except KeyError:
        raise UnknownRow(f"unknown modified-Foata row {row_id!r}") from None


def _check_membership(p: Permutation, row: FoataRow) -> None:
    if (p.n % 2 == 1) != (row.parity == "odd"):
        raise NotInClass(f"length {p.n} does not match row parity {row.parity}")
    perm.require_class(p, row.klass)


def _drive(word: Word, row: FoataRow) -> Word:
    w = word[:1]
    consumed = set(word[:1])
    for k in range(1, len(word)):
        c = word[k]
        order = NATURAL
        if row.trigger is not None:
            order = row.trigger.order_for(c, frozenset(consumed))
        w = block_step(w + (c,), order)
        consumed.add(c)
    return w


def _drive_inverse(word: Word, row: FoataRow) -> Word:
    w = word
    rebuilt: list[int] = []
    while len(w) > 1:
        c = w[-1]
        consumed = frozenset(w) - {c}
        order = NATURAL
        if row.trigger is not None:
            order = row.trigger.order_for(c, consumed)
        w = block_step_inverse(w, order)[:-1]
        rebuilt.append(c)
    rebuilt.extend(w)
    return tuple(reversed(rebuilt))


def f_mod(p: Permutation, row: FoataRow | str) -> Permutation:
    """Apply the modified Foata map of the given row; plain rows are Foata itself."""
    if isinstance(row, str):
        row = get_row(row)
    _check_membership(p, row)
    return Permutation(_drive(p.word, row))


def f_mod_inverse(sigma: Permutation, row: FoataRow | str) -> Permutation:
    if isinstance(row, str):
        row = get_row(row)
    _check_membership(sigma, row)
    out = Permutation(_drive_inverse(sigma.word, row))
    _check_membership(out, row)
    return out


def foata(p: Permutation) -> Permutation:
    """The classic Foata map (maj -> inv), no class restriction."""
    row = FoataRow("plain", "All", "any", "maj", 0, None, None, None)
    return Permutation(_drive(p.word, row))


def foata_inverse(sigma: Permutation) -> Permutation:
    row = FoataRow("plain", "All", "any", "maj", 0, None, None, None)
    return Permutation(_drive_inverse(sigma.word, row))


FA_ROW = get_row("alt-odd-kappa")


def fa(p: Permutation) -> Permutation:
    """The odd kappa-twisted map: maj(kappa.pi) = inv(FA(pi)) - ndes((FA(pi)^-1)_e)."""
    return f_mod(p, FA_ROW)


def fa_inverse(sigma: Permutation) -> Permutation:
    return f_mod_inverse(sigma, FA_ROW)


# -- row statistics ----------------------------------------------------------


def row_stat_a(p: Permutation, row: FoataRow) -> int:
    if row.a_tag == "maj":
        return perm.maj(p.word)
    if row.a_tag == "maj_kappa":
        return perm.maj((perm.kappa(p.n) * p).word)
    if row.a_tag == "maj_eta":
        return perm.maj((perm.eta(p.n) * p).word)
    raise UnknownRow(f"unknown A-statistic {row.a_tag!r}")


def row_stat_b(sigma: Permutation, row: FoataRow, star: str | None = None) -> int:
    """inv(sigma) plus/minus the row's statistic of a subword of sigma^{-1}.

    For starred rows, star="o"/"e" overrides the canonical per-element reading.
    """
    base = perm.inv(sigma.word)
    if row.b_sign == 0:
        return base
    sub = star if star is not None else row.star_default
    if sub not in ("o", "e"):
        raise UnknownRow(f"row {row.row_id} needs star='o' or 'e'")
    winv = sigma.inverse().word
    word = perm.odd_subword(winv) if sub == "o" else perm.even_subword(winv)
    stat = {"des": perm.des, "asc": perm.asc, "ndes": perm.ndes, "nasc": perm.nasc}[row.b_stat]
    return base + row.b_sign * stat(word)


def _t_stat(w: Sequence[int]) -> int:
    """Internal diagnostic: even letters 2i present with no 2i+2 earlier in w.

    For a permutation w this equals ndes((w^-1)_e); it is the loop invariant
    counter of the kappa-twisted map and is not part of the public surface.
    """
    pos = {x: i for i, x in enumerate(w)}
    count = 0
    for x in w:
        if x % 2 == 0 and (x + 2 not in pos or pos[x + 2] > pos[x]):
            count += 1
    return count
