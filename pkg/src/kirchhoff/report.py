"""Structured outcome of a certification run and its JSON form."""

from __future__ import annotations

from dataclasses import dataclass, field, is_dataclass, fields
from fractions import Fraction
from typing import Any

SCHEMA_VERSION = 1


def jsonable(obj: Any) -> Any:
    """Exact rationals become ``"p/q"``-style strings; containers recurse."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, float)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(v) for v in obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if hasattr(obj, "to_text"):
        return obj.to_text()
    if is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in fields(obj)}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class VerificationReport:
    claim: str
    verdict: bool
    params: dict = field(default_factory=dict)
    mode: str | None = None
    seed: int | None = None
    trials: int | None = None
    witness: Any = None
    details: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return bool(self.verdict)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "params": jsonable(self.params),
            "mode": self.mode,
            "seed": self.seed,
            "trials": self.trials,
            "verdict": bool(self.verdict),
            "witness": jsonable(self.witness),
            "details": jsonable(self.details),
            "notes": list(self.notes),
        }
