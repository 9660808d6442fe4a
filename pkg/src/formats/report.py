# src\formats\report.py
# Run report emitted by the solve command, as versioned JSON or key: value text

PRINT_PREFIX = "FORMATS - REPORT"

# Standard library imports
import json
from dataclasses import dataclass, field
from typing import Any, Optional

REPORT_SCHEMA = 1
SOLVER_VERSION = "1.0.0"
TIMING_FIELDS = ("timings_ms",) # Excluded from golden comparisons


@dataclass
class RunReport:
    mode: str # "tree" or "points"
    vertex_count: int
    total_mass: int
    variant: str
    k: int
    value: float
    sides: list[dict[str, Any]]
    normalized_vertices: int
    dummy_count: int
    pendant_count: int
    tie_break: str
    opt_values: Optional[list[float]] = None
    threshold_value: Optional[float] = None
    transitions: dict[str, int] = field(default_factory=dict)
    timings_ms: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "schema": REPORT_SCHEMA,
            "instance": {
                "mode": self.mode,
                "n": self.vertex_count,
                "m": self.total_mass,
                "normalized_vertices": self.normalized_vertices,
                "dummies": self.dummy_count,
                "pendants": self.pendant_count,
            },
            "variant": self.variant,
            "k": self.k,
            "value": self.value,
            "sides": self.sides,
            "solver": {
                "version": SOLVER_VERSION,
                "tie_break": self.tie_break,
                "transitions": self.transitions,
            },
            "timings_ms": self.timings_ms,
        }
        if self.opt_values is not None:
            data["opt_values"] = self.opt_values
        if self.threshold_value is not None:
            data["threshold_value"] = self.threshold_value
        return data

    def to_json(self) -> str:
        return serialize_json(self.to_dict())

    def to_text(self) -> str:
        """Flat key: value lines mirroring the JSON fields."""
        lines = [
            f"schema: {REPORT_SCHEMA}",
            f"mode: {self.mode}",
            f"n: {self.vertex_count}",
            f"m: {self.total_mass}",
            f"variant: {self.variant}",
            f"k: {self.k}",
            f"value: {self.value}",
        ]
        for row in self.sides:
            label = f"vertex {row['vertex']}" + (f" (x={row['coordinate']})" if "coordinate" in row else "")
            lines.append(f"{label}: A={row['a']} B={row['b']}")
        if self.opt_values is not None:
            lines.append("opt_values: " + " ".join(str(v) for v in self.opt_values))
        if self.threshold_value is not None:
            lines.append(f"threshold_value: {self.threshold_value}")
        lines.append(f"solver: version={SOLVER_VERSION} tie_break={self.tie_break}")
        lines.append("timings_ms: " + " ".join(f"{phase}={ms:.3f}" for phase, ms in self.timings_ms.items()))
        return "\n".join(lines)


def serialize_json(data: Any) -> str:
    """Serialize a report dict with stable key order."""
    return json.dumps(data, indent=2)


def deserialize_json(data: Optional[str], default: Any = None) -> Any:
    """Parse a JSON report, returning default when it is missing or malformed."""
    if data is None:
        return default
    try:
        return json.loads(data)
    except (json.JSONDecodeError, TypeError):
        print(f"[WARNING] [{PRINT_PREFIX}] Could not parse JSON report")
        return default


def without_timings(report: dict[str, Any]) -> dict[str, Any]:
    """Copy of a report dict with the timing fields dropped, for determinism checks."""
    return {key: value for key, value in report.items() if key not in TIMING_FIELDS}
