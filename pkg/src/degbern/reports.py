from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .codec import dumps


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity over its parameter sweep.

    ``counterexample`` holds the first failing sweep point with both sides in
    their JSON encoding, or ``None`` when every point passed.
    """

    id: str
    points: int
    status: str
    counterexample: dict[str, Any] | None = None
    wall_time: float = field(default=0.0, compare=False)
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out = {
            "id": self.id,
            "points": self.points,
            "status": self.status,
            "failures": self.failures,
            "counterexample": self.counterexample,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 6)
        return out

    def to_json(self, timing: bool = True) -> str:
        return dumps(self.to_dict(timing))
