"""Check records and deterministic JSON run reports.

Every exact value is written as a string rational (``"3/4"``), so a report
never contains a float.  Reports are serialised with sorted keys and checks
sorted by id; identical inputs give byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable

import numpy as np

from .poly import Poly

__all__ = ["Check", "RunReport", "to_json_value", "digest", "check_equal", "TOOL_NAME"]

TOOL_NAME = "couplestress"


def _poly_json(p: Poly) -> list[dict]:
    return [
        {"coeff": str(c), "exps": list(e)}
        for e, c in sorted(p.terms.items(), key=lambda t: (sum(t[0]), t[0]))
    ]


def to_json_value(value: Any) -> Any:
    """Encode exact values (Fractions, Polys, object arrays, enums) as JSON data."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if isinstance(value, Poly):
        return _poly_json(value)
    if isinstance(value, np.ndarray):
        return [to_json_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_value(v) for v in value]
    if isinstance(value, (np.integer,)):
        return str(int(value))
    raise TypeError(f"cannot encode {type(value).__name__} in a report")


def digest(payload: Any) -> str:
    """sha256 of the canonical JSON form of ``payload``."""
    text = json.dumps(to_json_value(payload), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _same(a, b) -> bool:
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        a, b = np.asarray(a, dtype=object), np.asarray(b, dtype=object)
        return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))
    return a == b


@dataclass
class Check:
    id: str
    paper_anchor: str
    passed: bool
    lhs: Any = None
    rhs: Any = None
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "paper_anchor": self.paper_anchor,
            "status": self.status,
            "lhs": to_json_value(self.lhs),
            "rhs": to_json_value(self.rhs),
            "detail": self.detail,
        }


def check_equal(id: str, anchor: str, lhs, rhs, detail: str = "") -> Check:
    return Check(id, anchor, bool(_same(lhs, rhs)), lhs, rhs, detail)


@dataclass
class RunReport:
    command: str
    input_digest: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    truncation_error: Fraction | None = None

    def extend(self, checks: Iterable[Check]) -> None:
        self.checks.extend(checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        from . import __version__

        out = {
            "tool": TOOL_NAME,
            "version": __version__,
            "command": self.command,
            "input_digest": self.input_digest,
            "status": "pass" if self.passed else "fail",
            "summary": {
                "checks": len(self.checks),
                "passed": sum(c.passed for c in self.checks),
                "failed": len(self.failures),
            },
            "checks": [c.to_dict() for c in sorted(self.checks, key=lambda c: c.id)],
            "data": to_json_value(self.data),
        }
        if self.truncation_error is not None:
            out["truncation_error"] = to_json_value(self.truncation_error)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
