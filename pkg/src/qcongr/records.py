"""Verification records: one serializable row per check outcome.

Congruence checks store the reduced representative of (lhs - rhs) in
``lhs_reduced`` with ``rhs_reduced = "0"``, so a passing record always
reads "0 == 0".  Exact-identity and numeric checks store both sides
verbatim.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List

RECORD_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "properties": {
        "id": {"type": "string"},
        "prime": {"type": "integer"},
        "power": {"type": "integer"},
        "params": {"type": "object"},
        "holds": {"type": "boolean"},
        "experimental": {"type": "boolean"},
        "lhs_reduced": {"type": "string"},
        "rhs_reduced": {"type": "string"},
        "elapsed_ms": {"type": "integer"},
    },
    "required": [
        "id",
        "prime",
        "power",
        "params",
        "holds",
        "experimental",
        "lhs_reduced",
        "rhs_reduced",
        "elapsed_ms",
    ],
    "additionalProperties": False,
}


@dataclass
class VerificationRecord:
    """Outcome of one congruence/identity check.

    prime and power are 0 for checks that are not tied to a modulus
    (exact identities, the numeric series check).
    """

    id: str
    prime: int
    power: int
    params: Dict[str, Any] = field(default_factory=dict)
    holds: bool = False
    experimental: bool = False
    lhs_reduced: str = ""
    rhs_reduced: str = ""
    elapsed_ms: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @staticmethod
    def from_dict(d: Dict[str, Any]) -> "VerificationRecord":
        return VerificationRecord(**d)

    def sort_key(self):
        return (self.id, self.prime, tuple(sorted(self.params.items())))

    def text_line(self) -> str:
        verdict = "PASS" if self.holds else "FAIL"
        if self.experimental:
            verdict += " (experimental)"
        where = "p=%d^%d" % (self.prime, self.power) if self.prime else "-"
        ps = ""
        if self.params:
            ps = " " + " ".join("%s=%s" % (k, v) for k, v in sorted(self.params.items()))
        return "%-10s %-9s%s: %s [%d ms]" % (self.id, where, ps, verdict, self.elapsed_ms)


def records_to_json(records: List[VerificationRecord]) -> str:
    return json.dumps([r.to_dict() for r in records], indent=2)
