"""Structured pass/fail records."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["CheckItem", "CheckReport"]

_CLIP = 300


def _clip(text: str) -> str:
    if len(text) <= _CLIP:
        return text
    return text[:_CLIP] + f" ... ({len(text)} chars, full text in --json)"


@dataclass
class CheckItem:
    label: str
    anchor: str
    passed: bool
    witness: object = None  # nonzero difference state on failure
    context: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        d = {"label": self.label, "anchor": self.anchor, "status": self.status,
             "witness": None if self.witness is None else str(self.witness)}
        if self.context:
            d["context"] = {k: str(v) for k, v in self.context.items()}
        return d


@dataclass
class CheckReport:
    title: str = ""
    items: list[CheckItem] = field(default_factory=list)
    k: object = None
    c: object = None
    notes: dict = field(default_factory=dict)

    def add(self, label, anchor, passed, witness=None, context=None) -> bool:
        passed = bool(passed)
        self.items.append(CheckItem(label, anchor, passed, None if passed else witness,
                                    dict(context or {})))
        return passed

    def check_zero(self, label, anchor, diff) -> bool:
        """Record ``diff == 0``; the difference itself is the witness."""
        return self.add(label, anchor, diff.is_zero(), witness=diff)

    def extend(self, other: CheckReport, prefix: str = "") -> None:
        for it in other.items:
            self.items.append(CheckItem(prefix + it.label, it.anchor, it.passed,
                                        it.witness, dict(it.context)))

    @property
    def passed(self) -> bool:
        return all(it.passed for it in self.items)

    overall = passed

    @property
    def failures(self) -> list[CheckItem]:
        return [it for it in self.items if not it.passed]

    def first_failure(self) -> CheckItem | None:
        return next((it for it in self.items if not it.passed), None)

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "status": "PASS" if self.passed else "FAIL",
            "k": None if self.k is None else str(self.k),
            "c": None if self.c is None else str(self.c),
            "items": [it.to_dict() for it in self.items],
            "notes": {k: str(v) for k, v in self.notes.items()},
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def render(self, verbose: bool = False) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        if self.k is not None:
            lines.append(f"  k = {self.k}")
        if self.c is not None:
            lines.append(f"  c = {self.c}")
        for it in self.items:
            if verbose or not it.passed:
                lines.append(f"  [{it.status}] {it.label}    {it.anchor}")
            if not it.passed:
                if it.witness is not None:
                    lines.append(f"      witness: {_clip(str(it.witness))}")
                for k, v in it.context.items():
                    lines.append(f"      {k}: {_clip(str(v))}")
        if not verbose:
            n = len(self.items)
            lines.append(f"  {n - len(self.failures)}/{n} identities hold")
        for k, v in self.notes.items():
            lines.append(f"  note {k}: {v}")
        return "\n".join(lines)

    def __str__(self):
        return self.render()
