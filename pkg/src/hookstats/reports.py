"""Check reports and exact-rational serialization for the command line."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

PASS = "pass"
FAIL = "fail"
ERRATUM = "erratum-confirmed"
INCONCLUSIVE = "inconclusive"
STATUSES = (PASS, FAIL, ERRATUM, INCONCLUSIVE)


def format_rational(value) -> str:
    """'p/q', or a bare integer when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


@dataclass
class CheckReport:
    check_name: str
    params: dict[str, Any]
    status: str
    lhs: str | None = None
    rhs: str | None = None
    elapsed_ms: int = 0
    details: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @classmethod
    def compare(cls, check_name: str, params: dict[str, Any], lhs, rhs, **kwargs) -> CheckReport:
        status = PASS if Fraction(lhs) == Fraction(rhs) else FAIL
        return cls(check_name, params, status, format_rational(lhs), format_rational(rhs), **kwargs)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "check_name": self.check_name,
            "params": self.params,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.details:
            out["details"] = self.details
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)
