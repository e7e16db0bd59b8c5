"""Verification reports and their canonical renderings."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

VERIFIED = "verified"
REFUTED = "refuted"
INAPPLICABLE = "inapplicable"
VERDICTS = (VERIFIED, REFUTED, INAPPLICABLE)
EXIT_CODES = {VERIFIED: 0, REFUTED: 1, INAPPLICABLE: 2}
SCHEMA = "codeg-report/1"


def _plain(obj: Any) -> Any:
    """Turn a witness/parameter payload into JSON-safe data, deterministically."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return [_plain(v) for v in sorted(obj)]
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    return str(obj)


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    parameters: dict
    verdict: str
    witness: Any = None
    narrative: str = ""
    witness_text: str | None = None
    details: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == REFUTED and self.witness is None:
            raise ValueError("a refuted report must carry a witness")

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.verdict]

    @property
    def ok(self) -> bool:
        return self.verdict == VERIFIED

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "claim": self.claim,
            "parameters": _plain(self.parameters),
            "verdict": self.verdict,
            "witness": _plain(self.witness),
            "witness_text": self.witness_text,
            "narrative": self.narrative,
            "details": list(self.details),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def render(self) -> str:
        lines = [f"claim: {self.claim}"]
        if self.parameters:
            lines.append("parameters:")
            for k in sorted(self.parameters):
                lines.append(f"  {k}: {_scalar_text(self.parameters[k])}")
        lines.append(f"verdict: {self.verdict}")
        if self.witness_text is not None:
            lines.append(f"witness: {self.witness_text}")
        elif self.witness is not None:
            lines.append(f"witness: {json.dumps(_plain(self.witness), sort_keys=True)}")
        if self.narrative:
            lines.append(f"narrative: {self.narrative}")
        for d in self.details:
            lines.append(f"  {d}")
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        return self.render()


def _scalar_text(v: Any) -> str:
    p = _plain(v)
    return p if isinstance(p, str) else json.dumps(p, sort_keys=True)
