# src/vcnls/utils/data_structures.py

import json
import math
import os
from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

PROVENANCE_TAGS = ("paper", "trivial", "derived-oracle")

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG_ERROR = 2
EXIT_HALT = 3


def to_jsonable(value: Any) -> Any:
    """Converts numpy scalars/arrays, complex numbers and non-finite floats for JSON."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": to_jsonable(value.real), "im": to_jsonable(value.imag)}
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else str(value)
    if value is None or isinstance(value, str):
        return value
    return str(value)


@dataclass
class CheckRecord:
    """
    One verified claim: what was computed, what it was compared against and
    where the reference value comes from.
    """

    name: str
    computed: Any
    reference: Any
    provenance: str
    passed: bool
    tolerance: Optional[float] = None
    inputs: dict = field(default_factory=dict)
    detail: str = ""

    def __post_init__(self):
        if self.provenance not in PROVENANCE_TAGS:
            raise ValueError(
                f"provenance must be one of {PROVENANCE_TAGS}, got {self.provenance!r}."
            )
        self.passed = bool(self.passed)

    def to_dict(self) -> dict:
        return to_jsonable(
            {
                "name": self.name,
                "inputs": self.inputs,
                "computed": self.computed,
                "reference": self.reference,
                "provenance": self.provenance,
                "tolerance": self.tolerance,
                "passed": self.passed,
                "detail": self.detail,
            }
        )


class ResultBundle:
    """
    Collects the check records of one subcommand run and derives its exit status.
    """

    def __init__(self, command: str):
        if not isinstance(command, str) or not command:
            raise ValueError("command must be a non-empty string.")
        self.command = command
        self.records: list[CheckRecord] = []
        self.halted = False
        self.halt_time: Optional[float] = None
        self.artifacts: list[str] = []

    def add(self, record: CheckRecord) -> CheckRecord:
        if not isinstance(record, CheckRecord):
            raise TypeError("ResultBundle.add expects a CheckRecord.")
        self.records.append(record)
        return record

    def check(self, name: str, computed, reference, provenance: str, passed: bool, **kwargs):
        """Shorthand for add(CheckRecord(...))."""
        return self.add(CheckRecord(name, computed, reference, provenance, passed, **kwargs))

    def mark_halted(self, time: float):
        self.halted = True
        self.halt_time = float(time)

    @property
    def passed(self) -> bool:
        return not self.halted and bool(self.records) and all(r.passed for r in self.records)

    @property
    def exit_code(self) -> int:
        if self.halted:
            return EXIT_HALT
        return EXIT_PASS if self.passed else EXIT_FAIL

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "passed": self.passed,
            "exit_code": self.exit_code,
            "halted": self.halted,
            "halt_time": to_jsonable(self.halt_time),
            "records": [r.to_dict() for r in self.records],
            "artifacts": list(self.artifacts),
        }

    def summary_text(self) -> str:
        lines = [f"{self.command}: {sum(r.passed for r in self.records)}/{len(self.records)} checks passed"]
        for record in self.records:
            status = "PASS" if record.passed else "FAIL"
            line = f"  [{status}] {record.name}: computed={_short(record.computed)}"
            line += f" reference={_short(record.reference)} ({record.provenance})"
            if record.tolerance is not None:
                line += f" tol={record.tolerance:g}"
            if record.detail:
                line += f" - {record.detail}"
            lines.append(line)
        if self.halted:
            lines.append(f"  numerical halt at t = {self.halt_time:.6g}")
        return "\n".join(lines)

    def write(self, output_dir: str) -> tuple[str, str]:
        """Writes results.json and results.txt into output_dir."""
        os.makedirs(output_dir, exist_ok=True)
        json_path = os.path.join(output_dir, "results.json")
        text_path = os.path.join(output_dir, "results.txt")
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=2)
        with open(text_path, "w", encoding="utf-8") as fh:
            fh.write(self.summary_text() + "\n")
        return json_path, text_path


def _short(value) -> str:
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.10g}"
    if isinstance(value, (complex, np.complexfloating)):
        return f"{complex(value):.6g}"
    text = str(value)
    return text if len(text) <= 60 else text[:57] + "..."
