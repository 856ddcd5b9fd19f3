"""JSON set documents: ``{"space": "L2", "intervals": [["p/q", "p/q"], ...], "metadata": {...}}``."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import MalformedInputError
from .exact_sets import IntervalSet, as_rational


@dataclass
class SetDocument:
    intervals: IntervalSet
    space: str = "L2"
    metadata: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out = {"space": self.space, "intervals": self.intervals.as_strings()}
        if self.metadata:
            out["metadata"] = self.metadata
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data, where: str = "document") -> "SetDocument":
        if not isinstance(data, dict) or "intervals" not in data:
            raise MalformedInputError(f"{where}: expected an object with an 'intervals' list")
        space = str(data.get("space", "L2")).upper()
        if space not in ("L2", "H2"):
            raise MalformedInputError(f"{where}: space must be L2 or H2, got {space!r}")
        raw = data["intervals"]
        if not isinstance(raw, list):
            raise MalformedInputError(f"{where}: 'intervals' must be a list")
        pairs = []
        for i, item in enumerate(raw):
            if not isinstance(item, (list, tuple)) or len(item) != 2:
                raise MalformedInputError(f"{where}: intervals[{i}] must be a [lo, hi] pair")
            try:
                pairs.append((as_rational(item[0]), as_rational(item[1])))
            except (MalformedInputError, ValueError, TypeError) as exc:
                raise MalformedInputError(f"{where}: intervals[{i}]: {exc}") from None
        try:
            S = IntervalSet(pairs)
        except MalformedInputError as exc:
            raise MalformedInputError(f"{where}: {exc}") from None
        return cls(S, space, dict(data.get("metadata") or {}))

    @classmethod
    def loads(cls, text: str, where: str = "document") -> "SetDocument":
        return cls.from_dict(load_json_text(text, where), where)


def load_json_text(text: str, where: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"{where}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
                                  f"{exc.msg}") from None


def load_json(path) -> object:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise MalformedInputError(f"{path}: {exc.strerror}") from None
    return load_json_text(text, str(path))


def read_set(path) -> SetDocument:
    return SetDocument.from_dict(load_json(path), str(path))


def plotdata_lines(doc: SetDocument, tag: str = "K") -> list[str]:
    """One ``lo hi tag`` line per interval; endpoints stay exact rationals."""
    return [f"{lo} {hi} {tag}" for lo, hi in doc.intervals.as_strings()]


def csv_lines(doc: SetDocument) -> list[str]:
    return ["lo,hi"] + [f"{lo},{hi}" for lo, hi in doc.intervals.as_strings()]
