"""Exact truncated power series in q, and a thin bivariate layer in x over them.

A QSeries knows its coefficients for q^0..q^order and nothing beyond:
coefficients past the order are *unknown*, not zero.  All arithmetic is
exact over Fraction and truncates pessimistically to the smaller operand
order, so an equality that holds between two QSeries is a proven
congruence mod q^(order+1), never a float approximation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .errors import DivisionByNonUnit, IndexOutOfRange

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class QSeries:
    """Truncated formal power series with exact rational coefficients.

    ``coeffs[m]`` is the coefficient of q^m; ``len(coeffs) == order + 1``.
    Instances are immutable and hashable; ``==`` is structural (same order
    and same coefficients).  Use :meth:`eq_mod` for mathematical equality
    up to the shared order.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("QSeries needs at least the constant coefficient")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_poly(poly: Sequence[Scalar], order: int) -> "QSeries":
        """Embed an exact polynomial (coefficient list) at the given order."""
        cs = [_frac(c) for c in poly[: order + 1]]
        cs += [_ZERO] * (order + 1 - len(cs))
        return QSeries(tuple(cs))

    @staticmethod
    def zero(order: int) -> "QSeries":
        return QSeries((_ZERO,) * (order + 1))

    @staticmethod
    def one(order: int) -> "QSeries":
        return QSeries.from_poly([1], order)

    @staticmethod
    def monomial(exp: int, order: int, coeff: Scalar = 1) -> "QSeries":
        if exp < 0:
            raise ValueError("monomial exponent must be nonnegative")
        poly = [0] * exp + [coeff]
        return QSeries.from_poly(poly, order)

    @staticmethod
    def constant(value: Scalar, order: int) -> "QSeries":
        return QSeries.from_poly([value], order)

    # -- basic views -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, m: int) -> Fraction:
        if m < 0:
            return _ZERO
        if m > self.order:
            raise IndexOutOfRange(f"coefficient of q^{m} unknown beyond order {self.order}")
        return self.coeffs[m]

    @property
    def constant_term(self) -> Fraction:
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def degree(self) -> int | None:
        """Largest exponent with nonzero coefficient within the truncation."""
        for m in range(self.order, -1, -1):
            if self.coeffs[m] != 0:
                return m
        return None

    def valuation(self) -> int | None:
        for m, c in enumerate(self.coeffs):
            if c != 0:
                return m
        return None

    # -- arithmetic --------------------------------------------------------

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise IndexOutOfRange(f"cannot extend order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1])

    def _common(self, other: "QSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other):
        if isinstance(other, QSeries):
            n = self._common(other)
            return QSeries(tuple(self.coeffs[m] + other.coeffs[m] for m in range(n + 1)))
        if isinstance(other, (int, Fraction)):
            cs = list(self.coeffs)
            cs[0] += _frac(other)
            return QSeries(tuple(cs))
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return QSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, QSeries):
            n = self._common(other)
            return QSeries(tuple(self.coeffs[m] - other.coeffs[m] for m in range(n + 1)))
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QSeries):
            n = self._common(other)
            a, b = self.coeffs, other.coeffs
            out = [_ZERO] * (n + 1)
            for i in range(n + 1):
                ai = a[i]
                if ai == 0:
                    continue
                for j in range(n + 1 - i):
                    bj = b[j]
                    if bj != 0:
                        out[i + j] += ai * bj
            return QSeries(tuple(out))
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            return QSeries(tuple(c * f for c in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            n = self._common(other)
            b0 = other.coeffs[0]
            if b0 == 0:
                raise DivisionByNonUnit("divisor has zero constant term")
            a, b = self.coeffs, other.coeffs
            out: list[Fraction] = []
            for m in range(n + 1):
                acc = a[m]
                for j in range(1, m + 1):
                    if b[j] != 0 and out[m - j] != 0:
                        acc -= b[j] * out[m - j]
                out.append(acc / b0)
            return QSeries(tuple(out))
        if isinstance(other, (int, Fraction)):
            f = _frac(other)
            if f == 0:
                raise DivisionByNonUnit("division by zero scalar")
            return QSeries(tuple(c / f for c in self.coeffs))
        return NotImplemented

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("only nonnegative integer powers")
        result = QSeries.one(self.order)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def shift(self, k: int) -> "QSeries":
        """Multiply by the exact monomial q^k, keeping the order."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        if k == 0:
            return self
        cs = (_ZERO,) * min(k, self.order + 1) + self.coeffs[: self.order + 1 - k]
        return QSeries(cs[: self.order + 1])

    def eq_mod(self, other: "QSeries") -> bool:
        """Coefficient-wise equality up to the shared order."""
        n = self._common(other)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def eval_at(self, x: Scalar) -> Fraction:
        """Evaluate the truncation as a polynomial at an exact point."""
        acc = _ZERO
        xf = _frac(x)
        for c in reversed(self.coeffs):
            acc = acc * xf + c
        return acc

    # -- serialization -----------------------------------------------------

    def to_jsonable(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True)

    @staticmethod
    def from_jsonable(obj: dict) -> "QSeries":
        coeffs = tuple(Fraction(s) for s in obj["coeffs"])
        if len(coeffs) != obj["order"] + 1:
            raise ValueError("coeffs length does not match order")
        return QSeries(coeffs)

    @staticmethod
    def from_json(s: str) -> "QSeries":
        return QSeries.from_jsonable(json.loads(s))

    def __str__(self) -> str:
        terms = []
        for m, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if m == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append("q" if m == 1 else f"q^{m}")
            else:
                terms.append(f"{c}*q" if m == 1 else f"{c}*q^{m}")
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.order + 1})"

    __repr__ = __str__


# -- fixed building blocks, cached since they appear in every weight ---------


@lru_cache(maxsize=None)
def one_minus_qk(k: int, order: int) -> QSeries:
    """1 - q^k."""
    return QSeries.one(order) - QSeries.monomial(k, order) if k <= order else QSeries.one(order)


@lru_cache(maxsize=None)
def inv_one_minus_qk(k: int, order: int) -> QSeries:
    """1/(1 - q^k) = 1 + q^k + q^{2k} + ..."""
    if k <= 0:
        raise ValueError("k must be positive")
    cs = [_ZERO] * (order + 1)
    for m in range(0, order + 1, k):
        cs[m] = _ONE
    return QSeries(tuple(cs))


@lru_cache(maxsize=None)
def pochhammer(a_exp: int, n: int, order: int) -> QSeries:
    """(q^a_exp; q)_n = (1 - q^a_exp)(1 - q^{a_exp+1}) ... (1 - q^{a_exp+n-1})."""
    if a_exp < 0 or n < 0:
        raise ValueError("pochhammer needs a_exp >= 0 and n >= 0")
    out = QSeries.one(order)
    for t in range(n):
        out = out * one_minus_qk(a_exp + t, order)
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, m: int, order: int) -> QSeries:
    """Gaussian binomial (q;q)_n / ((q;q)_m (q;q)_{n-m}), truncated.

    The quotient is a polynomial with nonnegative integer coefficients;
    the division is checked to produce exactly that, which catches any
    transcription slip in the factorials.
    """
    if m < 0 or m > n:
        raise IndexOutOfRange(f"qbinom({n}, {m}) needs 0 <= m <= n")
    num = pochhammer(1, n, order)
    den = pochhammer(1, m, order) * pochhammer(1, n - m, order)
    out = num / den
    for c in out.coeffs:
        if c.denominator != 1 or c < 0:
            raise ArithmeticError(f"qbinom({n},{m}) division not exact: got coefficient {c}")
    return out


# -- bivariate layer: series in x whose coefficients are QSeries -------------


@dataclass(frozen=True)
class XQSeries:
    """Truncated series in x over the QSeries ring; all entries share one q-order."""

    xcoeffs: tuple[QSeries, ...]

    def __post_init__(self):
        if not self.xcoeffs:
            raise ValueError("XQSeries needs at least the x^0 coefficient")
        qo = self.xcoeffs[0].order
        if any(c.order != qo for c in self.xcoeffs):
            raise ValueError("all x-coefficients must share one q-order")

    @staticmethod
    def zero(xorder: int, qorder: int) -> "XQSeries":
        return XQSeries((QSeries.zero(qorder),) * (xorder + 1))

    @staticmethod
    def one(xorder: int, qorder: int) -> "XQSeries":
        return XQSeries((QSeries.one(qorder),) + (QSeries.zero(qorder),) * xorder)

    @staticmethod
    def from_xcoeffs(entries: Iterable[QSeries]) -> "XQSeries":
        return XQSeries(tuple(entries))

    @property
    def xorder(self) -> int:
        return len(self.xcoeffs) - 1

    @property
    def qorder(self) -> int:
        return self.xcoeffs[0].order

    def coeff(self, k: int) -> QSeries:
        if k < 0 or k > self.xorder:
            raise IndexOutOfRange(f"x^{k} coefficient unknown beyond xorder {self.xorder}")
        return self.xcoeffs[k]

    def _common(self, other: "XQSeries") -> int:
        return min(self.xorder, other.xorder)

    def __add__(self, other):
        if not isinstance(other, XQSeries):
            return NotImplemented
        n = self._common(other)
        return XQSeries(tuple(self.xcoeffs[k] + other.xcoeffs[k] for k in range(n + 1)))

    def __sub__(self, other):
        if not isinstance(other, XQSeries):
            return NotImplemented
        n = self._common(other)
        return XQSeries(tuple(self.xcoeffs[k] - other.xcoeffs[k] for k in range(n + 1)))

    def __neg__(self):
        return XQSeries(tuple(-c for c in self.xcoeffs))

    def __mul__(self, other):
        if isinstance(other, QSeries):
            return XQSeries(tuple(c * other for c in self.xcoeffs))
        if not isinstance(other, XQSeries):
            return NotImplemented
        n = self._common(other)
        qo = min(self.qorder, other.qorder)
        out = [QSeries.zero(qo) for _ in range(n + 1)]
        for i in range(n + 1):
            if self.xcoeffs[i].is_zero():
                continue
            for j in range(n + 1 - i):
                if not other.xcoeffs[j].is_zero():
                    out[i + j] = out[i + j] + self.xcoeffs[i] * other.xcoeffs[j]
        return XQSeries(tuple(out))

    def __truediv__(self, other):
        if not isinstance(other, XQSeries):
            return NotImplemented
        n = self._common(other)
        b0 = other.xcoeffs[0]
        if b0.constant_term == 0:
            raise DivisionByNonUnit("x^0 coefficient of divisor is not a q-unit")
        out: list[QSeries] = []
        for k in range(n + 1):
            acc = self.xcoeffs[k]
            for j in range(1, k + 1):
                if not other.xcoeffs[j].is_zero():
                    acc = acc - other.xcoeffs[j] * out[k - j]
            out.append(acc / b0)
        return XQSeries(tuple(out))

    def x_shift(self, k: int) -> "XQSeries":
        """Multiply by x^k, keeping the x-order."""
        if k < 0:
            raise ValueError("x_shift exponent must be nonnegative")
        qo = self.qorder
        padded = (QSeries.zero(qo),) * min(k, self.xorder + 1) + self.xcoeffs
        return XQSeries(padded[: self.xorder + 1])

    def __str__(self) -> str:
        parts = [f"x^{k}*({c})" for k, c in enumerate(self.xcoeffs) if not c.is_zero()]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


# -- integer-polynomial helpers (statistic generating polynomials) ----------


def poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def poly_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def poly_trim(a: Sequence[int]) -> list[int]:
    out = list(a)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def poly_eval(a: Sequence[Scalar], x: Scalar) -> Fraction:
    acc = _ZERO
    xf = _frac(x)
    for c in reversed(a):
        acc = acc * xf + _frac(c)
    return acc
