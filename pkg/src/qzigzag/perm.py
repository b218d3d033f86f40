"""Permutations, word statistics, alternating classes, and statistic expressions.

Positions are 1-based throughout: a descent of w is i in [n-1] with
w_i > w_{i+1}; a non-descent is any i in [n] that is not a descent, so
position n is always a non-descent.  maj sums the descent positions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, NegativeExponent, NotInClass, UnknownExpr

Word = tuple[int, ...]

ENUMERATION_CAP = 11


# -- word statistics ---------------------------------------------------------


def descent_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def ascent_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] < w[i])


def non_descent_set(w: Sequence[int]) -> frozenset[int]:
    des = descent_set(w)
    return frozenset(i for i in range(1, len(w) + 1) if i not in des)


def non_ascent_set(w: Sequence[int]) -> frozenset[int]:
    asc = ascent_set(w)
    return frozenset(i for i in range(1, len(w) + 1) if i not in asc)


def maj(w: Sequence[int]) -> int:
    return sum(descent_set(w))


def inv(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def des(w: Sequence[int]) -> int:
    return len(descent_set(w))


def asc(w: Sequence[int]) -> int:
    return len(ascent_set(w))


def ndes(w: Sequence[int]) -> int:
    return len(w) - des(w)


def nasc(w: Sequence[int]) -> int:
    return len(w) - asc(w)


def odd_subword(w: Sequence[int]) -> Word:
    """w_1 w_3 w_5 ..."""
    return tuple(w[0::2])


def even_subword(w: Sequence[int]) -> Word:
    """w_2 w_4 w_6 ..."""
    return tuple(w[1::2])


def is_alternating(w: Sequence[int]) -> bool:
    """w_1 < w_2 > w_3 < w_4 > ..."""
    return all((w[i - 1] < w[i]) == (i % 2 == 1) for i in range(1, len(w)))


def is_reverse_alternating(w: Sequence[int]) -> bool:
    """w_1 > w_2 < w_3 > w_4 < ..."""
    return all((w[i - 1] > w[i]) == (i % 2 == 1) for i in range(1, len(w)))


# -- permutations ------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A bijection of [n] stored as its one-line word."""

    word: Word

    def __post_init__(self):
        n = len(self.word)
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of [{n}]: {self.word}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        word = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, cycle[1:] + type(cycle)([cycle[0]])):
                word[a - 1] = b
        return Permutation(tuple(word))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for i, v in enumerate(self.word, start=1):
            out[v - 1] = i
        return Permutation(tuple(out))

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self*other)(i) = self(other(i))."""
        if self.n != other.n:
            raise ValueError("size mismatch in composition")
        return Permutation(tuple(self.word[v - 1] for v in other.word))


def kappa(n: int) -> Permutation:
    """(1)(2,3)(4,5)...: fixes 1, swaps consecutive pairs starting at 2."""
    word = list(range(1, n + 1))
    for a in range(2, n, 2):
        word[a - 1], word[a] = word[a], word[a - 1]
    return Permutation(tuple(word))


def eta(n: int) -> Permutation:
    """(1,2)(3,4)...: swaps consecutive pairs starting at 1."""
    word = list(range(1, n + 1))
    for a in range(1, n, 2):
        word[a - 1], word[a] = word[a], word[a - 1]
    return Permutation(tuple(word))


def special_perm(kind: str, n: int) -> Permutation:
    if kind == "kappa":
        return kappa(n)
    if kind == "eta":
        return eta(n)
    raise UnknownExpr(f"unknown special permutation kind {kind!r}")


@dataclass(frozen=True)
class StatBundle:
    maj: int
    inv: int
    des_set: frozenset[int]
    asc_set: frozenset[int]
    ndes_set: frozenset[int]
    nasc_set: frozenset[int]
    pi_o: Word
    pi_e: Word


def statistics(p: Permutation) -> StatBundle:
    w = p.word
    return StatBundle(
        maj=maj(w),
        inv=inv(w),
        des_set=descent_set(w),
        asc_set=ascent_set(w),
        ndes_set=non_descent_set(w),
        nasc_set=non_ascent_set(w),
        pi_o=odd_subword(w),
        pi_e=even_subword(w),
    )


# -- class enumeration -------------------------------------------------------


def _alternating_words(n: int, reverse: bool) -> Iterator[Word]:
    """All (reverse-)alternating words on [n], in lexicographic order."""
    if n == 0:
        yield ()
        return

    def extend(prefix: list[int], remaining: list[int]) -> Iterator[Word]:
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        # position k+1 must ascend from prefix[-1] iff k is odd for reverse,
        # even for alternating (1-based: ascent at odd positions)
        for idx, v in enumerate(remaining):
            if k > 0:
                want_ascent = (k % 2 == 1) if not reverse else (k % 2 == 0)
                if (prefix[-1] < v) != want_ascent:
                    continue
            prefix.append(v)
            yield from extend(prefix, remaining[:idx] + remaining[idx + 1 :])
            prefix.pop()

    yield from extend([], list(range(1, n + 1)))


CLASS_KINDS = ("Alt", "Ralt", "AltInv", "RaltInv", "All")


def enumerate_class(kind: str, n: int, cap: int = ENUMERATION_CAP) -> Iterator[Permutation]:
    """Stream the named permutation class exactly once each, deterministically."""
    if kind not in CLASS_KINDS:
        raise UnknownExpr(f"unknown class kind {kind!r}")
    if n > cap:
        raise CapExceeded(f"enumeration of n={n} exceeds cap {cap}")
    if kind == "All":
        from itertools import permutations

        for w in permutations(range(1, n + 1)):
            yield Permutation(w)
        return
    reverse = kind in ("Ralt", "RaltInv")
    invert = kind in ("AltInv", "RaltInv")
    for w in _alternating_words(n, reverse):
        p = Permutation(w)
        yield p.inverse() if invert else p


def in_class(p: Permutation, kind: str) -> bool:
    if kind == "Alt":
        return is_alternating(p.word)
    if kind == "Ralt":
        return is_reverse_alternating(p.word)
    if kind == "AltInv":
        return is_alternating(p.inverse().word)
    if kind == "RaltInv":
        return is_reverse_alternating(p.inverse().word)
    if kind == "All":
        return True
    raise UnknownExpr(f"unknown class kind {kind!r}")


def reverse_complement(p: Permutation) -> Permutation:
    """phi(pi) = (n+1-pi_n) ... (n+1-pi_1)."""
    n = p.n
    return Permutation(tuple(n + 1 - v for v in reversed(p.word)))


# -- statistic expressions (table M and I columns) ---------------------------

_I_EXPR = re.compile(r"^inv([+-])(des|asc|ndes|nasc)_([oe])$")

_STAT_FN = {"des": des, "asc": asc, "ndes": ndes, "nasc": nasc}


def eval_stat_expr(p: Permutation, expr: str) -> int:
    """Evaluate a named statistic expression on a permutation.

    Tags: ``maj_inv`` (maj of the inverse), ``maj_kappa_inv``,
    ``maj_eta_inv`` (maj of kappa/eta composed with the inverse), ``inv``,
    and ``inv{+,-}{des,asc,ndes,nasc}_{o,e}`` for inv(pi) plus/minus a
    statistic of the odd or even subword of pi.
    """
    if expr == "maj_inv":
        return maj(p.inverse().word)
    if expr == "maj_kappa_inv":
        return maj((kappa(p.n) * p.inverse()).word)
    if expr == "maj_eta_inv":
        return maj((eta(p.n) * p.inverse()).word)
    if expr == "inv":
        return inv(p.word)
    m = _I_EXPR.match(expr)
    if m:
        sign = 1 if m.group(1) == "+" else -1
        stat = _STAT_FN[m.group(2)]
        sub = odd_subword(p.word) if m.group(3) == "o" else even_subword(p.word)
        return inv(p.word) + sign * stat(sub)
    raise UnknownExpr(f"unknown statistic expression {expr!r}")


def gf_from_exponents(exponents: Iterable[int]) -> list[int]:
    """Collect a multiset of exponents into the coefficient list of sum q^e.

    Raises NegativeExponent if any exponent is negative: the identities
    these polynomials feed all imply nonnegativity, so a negative value is
    a bug upstream and must not be wrapped silently.
    """
    exps = list(exponents)
    if not exps:
        return [0]
    lo = min(exps)
    if lo < 0:
        raise NegativeExponent(f"statistic produced negative exponent {lo}")
    out = [0] * (max(exps) + 1)
    for e in exps:
        out[e] += 1
    return out


def class_gf(kind: str, n: int, expr: str, cap: int = ENUMERATION_CAP) -> list[int]:
    """Sum q^{expr(pi)} over the class, as an exact integer polynomial."""
    return gf_from_exponents(eval_stat_expr(p, expr) for p in enumerate_class(kind, n, cap))


def euler_poly(n: int, cap: int = ENUMERATION_CAP) -> list[int]:
    """E_n(q): maj of the inverse, summed over alternating permutations."""
    return class_gf("Alt", n, "maj_inv", cap)


def euler_star_poly(n: int, cap: int = ENUMERATION_CAP) -> list[int]:
    """E*_n(q): maj of kappa_n times the inverse, over alternating permutations."""
    return class_gf("Alt", n, "maj_kappa_inv", cap)


def require_class(p: Permutation, kind: str) -> None:
    if not in_class(p, kind):
        raise NotInClass(f"{p.word} is not in class {kind}")
