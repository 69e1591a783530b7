"""Check records and their JSON Lines serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckRecord:
    check_id: str
    context: str
    parameters: dict = field(default_factory=dict)
    status: str = "pass"  # pass | fail | skipped
    witness: Any = None
    wall_time_ms: float = 0.0

    def to_dict(self, timing=True):
        out = {
            "check_id": self.check_id,
            "context": self.context,
            "parameters": self.parameters,
            "status": self.status,
            "witness": self.witness,
            "wall_time_ms": round(self.wall_time_ms, 3) if timing else 0.0,
        }
        return out

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing), sort_keys=True, default=str)


def write_jsonl(records, fh, timing=True):
    for rec in records:
        fh.write(rec.to_json(timing))
        fh.write("\n")


def summarize(records):
    by_status = {"pass": 0, "fail": 0, "skipped": 0}
    for r in records:
        by_status[r.status] = by_status.get(r.status, 0) + 1
    return by_status
