#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Verification Report Entity for PyYBMaps

Structured outcome of one suite run. Counterexamples hold scalars in their
textual form so a failure can be replayed from the JSON alone.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List

SCHEMA_VERSION = "1.0"


@dataclass
class TrialFailure:
    """One accepted trial whose identity did not hold"""

    trial: int
    inputs: Any
    lhs: Any
    rhs: Any
    message: str = ""

    def to_dict(self) -> Dict[str, Any]:
        data = {"trial": self.trial, "inputs": self.inputs, "lhs": self.lhs, "rhs": self.rhs}
        if self.message:
            data["message"] = self.message
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'TrialFailure':
        return cls(trial=int(data["trial"]), inputs=data.get("inputs"), lhs=data.get("lhs"),
                   rhs=data.get("rhs"), message=data.get("message", ""))


@dataclass
class VerificationReport:
    """Entity representing the result of a verification suite"""

    suite: str
    backend: str
    seed: int
    attempted: int = 0
    accepted: int = 0
    rejected: int = 0
    failures: List[TrialFailure] = field(default_factory=list)
    wall_ms: float = 0.0
    schema_version: str = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def first_counterexample(self):
        return min(self.failures, key=lambda f: f.trial) if self.failures else None

    def validate(self) -> bool:
        """attempted = accepted + rejected and failures <= accepted"""
        if self.attempted != self.accepted + self.rejected:
            return False
        if len(self.failures) > self.accepted:
            return False
        return all(f.trial >= 0 for f in self.failures)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "suite": self.suite,
            "backend": self.backend,
            "seed": self.seed,
            "trials": {
                "attempted": self.attempted,
                "accepted": self.accepted,
                "rejected": self.rejected,
            },
            "failures": [f.to_dict() for f in sorted(self.failures, key=lambda f: f.trial)],
            "wall_ms": self.wall_ms,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationReport':
        trials = data.get("trials", {})
        return cls(
            suite=data["suite"],
            backend=data["backend"],
            seed=int(data["seed"]),
            attempted=int(trials.get("attempted", 0)),
            accepted=int(trials.get("accepted", 0)),
            rejected=int(trials.get("rejected", 0)),
            failures=[TrialFailure.from_dict(f) for f in data.get("failures", [])],
            wall_ms=float(data.get("wall_ms", 0.0)),
            schema_version=str(data.get("schema_version", SCHEMA_VERSION)),
        )
