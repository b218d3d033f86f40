"""Machine-readable verdicts for identity checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .qseries import QSeries


def _jsonable(value: Any) -> Any:
    if isinstance(value, QSeries):
        return value.to_jsonable()
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in sorted(value.items())}
    return value


@dataclass
class IdentityReport:
    """One verified (or refuted) identity instance.

    verdict is True iff lhs equals rhs exactly (integers) or coefficient-wise
    up to the stated order (series); both sides are stored after any shift
    alignment, so equality is literal.
    """

    identity_id: str
    params: dict[str, Any]
    lhs: Any
    rhs: Any
    order: int | None
    verdict: bool
    detail: str = ""
    runtime_ms: int | None = field(default=None, compare=False)

    @staticmethod
    def from_sides(identity_id: str, params: dict, lhs: Any, rhs: Any, order: int | None = None, detail: str = "") -> "IdentityReport":
        if isinstance(lhs, QSeries) and isinstance(rhs, QSeries):
            verdict = lhs.eq_mod(rhs)
            if order is None:
                order = min(lhs.order, rhs.order)
        else:
            verdict = lhs == rhs
        return IdentityReport(identity_id, dict(params), lhs, rhs, order, verdict, detail)

    def to_jsonable(self, include_runtime: bool = False) -> dict:
        out = {
            "id": self.identity_id,
            "params": _jsonable(self.params),
            "order": self.order,
            "verdict": self.verdict,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
        }
        if self.detail:
            out["detail"] = self.detail
        if include_runtime and self.runtime_ms is not None:
            out["runtime_ms"] = self.runtime_ms
        return out

    def to_json(self, include_runtime: bool = False) -> str:
        return json.dumps(self.to_jsonable(include_runtime), sort_keys=True)

    def summary(self) -> str:
        status = "ok" if self.verdict else "FAIL"
        params = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        tail = f" [{self.detail}]" if self.detail else ""
        return f"{self.identity_id}({params}): {status}{tail}"


def all_true(reports: list[IdentityReport]) -> bool:
    return all(r.verdict for r in reports)
