"""Outcome record shared by geometric predicates and theorem checkers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

HOLDS = "holds"
FAILS = "fails"
DEGENERATE = "degenerate"


@dataclass
class Verdict:
    status: str
    witness: Any = None
    note: str = ""

    def __post_init__(self):
        if self.status == FAILS and self.witness is None:
            raise ValueError("a failing verdict must carry a witness")
        if self.status == DEGENERATE and not self.note:
            raise ValueError("a degenerate verdict must name the failing step")

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    @property
    def fails(self) -> bool:
        return self.status == FAILS

    @property
    def degenerate(self) -> bool:
        return self.status == DEGENERATE


def holds(note: str = "") -> Verdict:
    return Verdict(HOLDS, note=note)


def fails(witness, note: str = "") -> Verdict:
    return Verdict(FAILS, witness=witness, note=note)


def degenerate(step: str, detail: str = "") -> Verdict:
    return Verdict(DEGENERATE, note=f"{step}: {detail}" if detail else step)
