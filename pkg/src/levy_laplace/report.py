"""Structured results of identity checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one numerical identity check.

    ``observed_error`` is relative unless ``error_kind == "absolute"``.
    ``passed`` is true iff the error is finite and within ``tolerance``.
    """

    identity: str
    params: dict[str, Any]
    computed: float
    reference: float
    observed_error: float
    tolerance: float
    error_kind: str = "relative"
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return math.isfinite(self.observed_error) and self.observed_error <= self.tolerance

    @classmethod
    def compare(
        cls,
        identity: str,
        params: dict[str, Any],
        computed: float,
        reference: float,
        tolerance: float,
        *,
        error_kind: str = "relative",
        **details: Any,
    ) -> "VerificationReport":
        diff = abs(computed - reference)
        if error_kind == "relative":
            err = diff / abs(reference) if reference != 0 else (0.0 if diff == 0 else math.inf)
        else:
            err = diff
        return cls(identity, dict(params), float(computed), float(reference), float(err),
                   float(tolerance), error_kind, dict(details))

    def to_dict(self) -> dict[str, Any]:
        """JSON row: identity, params, observed_error, tolerance, pass (plus values)."""
        return {
            "identity": self.identity,
            "params": self.params,
            "observed_error": self.observed_error,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "error_kind": self.error_kind,
            "computed": self.computed,
            "reference": self.reference,
        }
