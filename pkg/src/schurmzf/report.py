"""Verification reports and value formatting."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Sequence

DEFAULT_TOLERANCE = 1e-10


class BudgetExceeded(RuntimeError):
    """An enumeration or symmetrization would exceed the configured work ceiling."""


def decimal_string(v, digits: int = 20) -> str:
    if isinstance(v, Fraction) or isinstance(v, int):
        v = Fraction(v)
        with localcontext() as ctx:
            ctx.prec = digits
            return str(Decimal(v.numerator) / Decimal(v.denominator))
    v = complex(v)
    if v.imag == 0:
        return repr(v.real)
    return f"{v.real!r}{v.imag:+.17g}j"


def exact_string(v) -> str | None:
    if isinstance(v, (Fraction, int)):
        v = Fraction(v)
        return f"{v.numerator}/{v.denominator}"
    return None


def compare_values(lhs, rhs, mode: str, tol: float = DEFAULT_TOLERANCE) -> tuple[bool, Any, float]:
    """Return (passed, |lhs - rhs|, relative difference).

    Exact mode passes only on literal equality; float mode compares the
    relative difference against ``tol``.
    """
    diff = lhs - rhs
    if mode == "exact":
        diff = Fraction(diff)
        scale = max(abs(Fraction(lhs)), abs(Fraction(rhs)))
        rel = float(abs(diff) / scale) if scale else float(abs(diff))
        return diff == 0, abs(diff), rel
    scale = max(abs(complex(lhs)), abs(complex(rhs)))
    ad = abs(complex(diff))
    rel = ad / scale if scale else ad
    return rel <= tol, ad, rel


def to_jsonable(v: Any) -> Any:
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, float):
        return v
    if isinstance(v, Fraction):
        return {"decimal": decimal_string(v), "exact": exact_string(v)}
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, dict):
        return {str(k): to_jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [to_jsonable(x) for x in v]
    return str(v)


@dataclass
class VerificationReport:
    identity: str
    shape: list[int]
    N: int
    mode: str
    lhs: Any
    rhs: Any
    abs_diff: Any
    rel_diff: float
    passed: bool
    status: str
    tolerance: float | None = None
    term_counts: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict)

    @classmethod
    def build(cls, identity: str, shape: Sequence[int], N: int, mode: str, lhs, rhs,
              tol: float = DEFAULT_TOLERANCE, term_counts: dict | None = None,
              start: float | None = None, details: dict | None = None) -> "VerificationReport":
        passed, ad, rel = compare_values(lhs, rhs, mode, tol)
        elapsed = (time.perf_counter() - start) * 1000 if start is not None else 0.0
        return cls(identity=identity, shape=list(shape), N=N, mode=mode, lhs=lhs, rhs=rhs,
                   abs_diff=ad, rel_diff=rel, passed=passed, status="pass" if passed else "fail",
                   tolerance=None if mode == "exact" else tol,
                   term_counts=dict(term_counts or {}), elapsed_ms=elapsed,
                   details=dict(details or {}))

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "shape": self.shape,
            "N": self.N,
            "mode": self.mode,
            "lhs": decimal_string(self.lhs),
            "rhs": decimal_string(self.rhs),
            "lhs_exact": exact_string(self.lhs),
            "rhs_exact": exact_string(self.rhs),
            "abs_diff": decimal_string(self.abs_diff),
            "rel_diff": self.rel_diff,
            "pass": self.passed,
            "status": self.status,
            "tolerance": self.tolerance,
            "term_counts": self.term_counts,
            "elapsed_ms": round(self.elapsed_ms, 3),
            "details": to_jsonable(self.details),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)

    def summary(self) -> str:
        return (f"[{'PASS' if self.passed else 'FAIL'}] {self.identity} shape={self.shape} "
                f"N={self.N} mode={self.mode} lhs={decimal_string(self.lhs, 12)} "
                f"rhs={decimal_string(self.rhs, 12)} status={self.status}")
