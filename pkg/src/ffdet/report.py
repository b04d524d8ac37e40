"""Verification report records and their canonical serialisation."""
from __future__ import annotations

import enum
import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction


class PreconditionError(ValueError):
    """Parameters lie outside the hypothesis of the claim being checked."""


class ClaimId(str, enum.Enum):
    theorem_1_1 = "theorem_1_1"
    theorem_1_1_proof = "theorem_1_1_proof"
    corollary_1_1 = "corollary_1_1"
    lemma_2_1 = "lemma_2_1"
    lemma_2_2 = "lemma_2_2"
    lemma_2_3 = "lemma_2_3"
    lemma_2_4 = "lemma_2_4"
    sun_sp = "sun_sp"
    sun_ap = "sun_ap"
    carlitz_charpoly = "carlitz_charpoly"
    remark_rational = "remark_rational"

    def __str__(self):
        return self.value


def canon(value) -> str:
    """Canonical text form: residues as least nonnegative ints, rationals as
    ``num/den``, polynomials and vectors as comma separated lists."""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return ",".join(canon(v) for v in value)
    if hasattr(value, "canonical"):
        return value.canonical()
    return str(value)


@dataclass
class VerificationReport:
    claim: ClaimId
    params: dict[str, int]
    computed: str
    predicted: str
    matched: bool = field(init=False)
    elapsed_ms: int = 0
    # neither is serialised: reason is set when the parameters violate the
    # claim's hypothesis, details carries claim-specific extras
    reason: str | None = None
    details: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        self.claim = ClaimId(self.claim)
        self.matched = self.reason is None and self.computed == self.predicted

    @property
    def precondition_failed(self) -> bool:
        return self.reason is not None

    @classmethod
    def precondition_failure(cls, claim, params, reason: str) -> VerificationReport:
        return cls(claim, dict(params), "precondition-failed", reason, reason=reason)

    def sort_key(self):
        # q, then p, ascending; remaining parameters by name
        rest = tuple(sorted((k, v) for k, v in self.params.items() if k not in ("q", "p")))
        return (self.claim.value, self.params.get("q", 0), self.params.get("p", 0), rest)

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "claim": self.claim.value,
            "params": dict(self.params),
            "computed": self.computed,
            "predicted": self.predicted,
            "matched": self.matched,
            "elapsed_ms": self.elapsed_ms if timing else 0,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), separators=(", ", ": "))

    @classmethod
    def from_json(cls, line: str) -> VerificationReport:
        d = json.loads(line)
        reason = d["predicted"] if d["computed"] == "precondition-failed" else None
        return cls(d["claim"], d["params"], d["computed"], d["predicted"],
                   elapsed_ms=d["elapsed_ms"], reason=reason)


@contextmanager
def stopwatch():
    """Yields a one-element list that receives elapsed milliseconds on exit."""
    box = [0]
    t0 = time.perf_counter()
    try:
        yield box
    finally:
        box[0] = int(round((time.perf_counter() - t0) * 1000))
