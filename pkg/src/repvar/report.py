"""Deterministic report documents.

JSON output uses sorted keys and formats every float with 17 significant
digits, so identical inputs give byte-identical files and every float parses
back to the same double. Row sequences may be iterators; they are written as
they are produced.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import IO, Any, Iterable, Iterator


def format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite float {x!r} cannot be serialized")
    s = format(x, ".17g")
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def format_scalar(x: Any) -> str:
    """CSV cell text; floats share the JSON formatting, None is blank."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return format_float(x)
    return str(x)


def _is_scalar(x: Any) -> bool:
    return x is None or isinstance(x, (bool, int, float, str))


def iter_json(obj: Any, level: int = 0) -> Iterator[str]:
    pad = "  " * (level + 1)
    end = "  " * level
    if obj is None:
        yield "null"
    elif isinstance(obj, bool):
        yield "true" if obj else "false"
    elif isinstance(obj, int):
        yield str(obj)
    elif isinstance(obj, float):
        yield format_float(obj)
    elif isinstance(obj, str):
        yield json.dumps(obj, ensure_ascii=False)
    elif isinstance(obj, dict):
        if not obj:
            yield "{}"
            return
        yield "{\n"
        keys = sorted(obj)
        for i, k in enumerate(keys):
            yield f"{pad}{json.dumps(str(k), ensure_ascii=False)}: "
            yield from iter_json(obj[k], level + 1)
            yield ",\n" if i < len(keys) - 1 else "\n"
        yield end + "}"
    elif isinstance(obj, (list, tuple)) and all(_is_scalar(x) for x in obj):
        yield "[" + ", ".join("".join(iter_json(x)) for x in obj) + "]"
    else:
        first = True
        for item in obj:
            yield "[\n" + pad if first else ",\n" + pad
            first = False
            yield from iter_json(item, level + 1)
        yield "[]" if first else "\n" + end + "]"


def dumps(obj: Any) -> str:
    return "".join(iter_json(obj)) + "\n"


@dataclass
class ReportDocument:
    tool_version: str
    command: str
    params: dict
    payload: dict
    seed: int | None = None
    tolerances: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "command": self.command,
            "params": self.params,
            "payload": self.payload,
            "seed": self.seed,
            "tolerances": self.tolerances,
        }

    def write_json(self, fp: IO[str]) -> None:
        for chunk in iter_json(self.as_dict()):
            fp.write(chunk)
        fp.write("\n")

    def to_text(self) -> str:
        buf = io.StringIO()
        self.write_json(buf)
        return buf.getvalue()

    @classmethod
    def from_text(cls, text: str) -> ReportDocument:
        d = json.loads(text)
        return cls(
            tool_version=d["tool_version"],
            command=d["command"],
            params=d["params"],
            payload=d["payload"],
            seed=d["seed"],
            tolerances=d["tolerances"],
        )


def write_csv(fp: IO[str], columns: list[str], rows: Iterable[dict]) -> None:
    w = csv.writer(fp, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([format_scalar(row.get(c)) for c in columns])


def write_table(fp: IO[str], columns: list[str], rows: Iterable[dict], width: int = 12) -> None:
    """Fixed-width text; column widths do not depend on the data so rows can stream."""
    widths = [max(width, len(c)) for c in columns]
    fp.write("  ".join(c.rjust(w) for c, w in zip(columns, widths)) + "\n")
    for row in rows:
        cells = []
        for c, w in zip(columns, widths):
            v = row.get(c)
            s = f"{v:.6g}" if isinstance(v, float) else format_scalar(v)
            cells.append(s.rjust(w))
        fp.write("  ".join(cells) + "\n")
