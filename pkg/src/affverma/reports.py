"""Verification reports with exact scalars rendered as rational strings."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .padic import INF, NEG_INF


def jsonable(x: Any) -> Any:
    if x is INF:
        return "inf"
    if x is NEG_INF:
        return "-inf"
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else str(x.numerator)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


@dataclass
class Check:
    statement_id: str
    parameters: dict
    passed: bool
    witnesses: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "statement_id": self.statement_id,
            "parameters": jsonable(self.parameters),
            "witnesses": jsonable(self.witnesses),
            "pass": bool(self.passed),
        }
