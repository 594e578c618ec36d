"""JSON and plain-table rendering of computed values.

Every JSON record carries a ``kind`` tag so that :func:`parse` can rebuild
the value.  Output is deterministic: keys are sorted and supports follow the
fixed total orders on partitions and multipartitions.
"""

from __future__ import annotations

import json
from typing import Any

from .canonical import DecompMatrix
from .fock import BlockId, FockVec
from .laurent import Laurent
from .partitions import Partition, parse_partition
from .symfunc import SymVec

__all__ = ["to_record", "from_record", "serialize", "parse", "render_table"]


def to_record(obj: Any) -> Any:
    if isinstance(obj, Laurent):
        return {"kind": "laurent", "terms": obj.to_json()}
    if isinstance(obj, Partition):
        return {"kind": "partition", "value": str(obj)}
    if isinstance(obj, FockVec):
        return {"kind": "fock", "terms": obj.to_json()}
    if isinstance(obj, SymVec):
        return {"kind": "sym", "terms": obj.to_json()}
    if isinstance(obj, DecompMatrix):
        return {"kind": "matrix", **obj.to_json()}
    if isinstance(obj, dict):
        return {str(k): to_record(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_record(x) for x in obj]
    return obj


def from_record(rec: Any) -> Any:
    if isinstance(rec, list):
        return [from_record(x) for x in rec]
    if not isinstance(rec, dict):
        return rec
    kind = rec.get("kind")
    if kind == "laurent":
        return Laurent.from_json(rec["terms"])
    if kind == "partition":
        return parse_partition(rec["value"])
    if kind == "fock":
        return FockVec.from_json(rec["terms"])
    if kind == "sym":
        return SymVec.from_json(rec["terms"])
    if kind == "matrix":
        blk = rec["block"]
        return DecompMatrix(
            BlockId(blk["n"], parse_partition(blk["core"]), blk["w"]),
            rec["minus"],
            tuple(parse_partition(p) for p in rec["order"]),
            tuple(tuple(Laurent.from_json(c) for c in row) for row in rec["rows"]),
        )
    return {k: from_record(v) for k, v in rec.items()}


def parse(text: str) -> Any:
    return from_record(json.loads(text))


def _grid(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows)


def render_table(obj: Any) -> str:
    if isinstance(obj, (Laurent, Partition, int, str)):
        return str(obj)
    if isinstance(obj, FockVec):
        return _grid([[str(lam), str(obj[lam])] for lam in obj.support()])
    if isinstance(obj, SymVec):
        return _grid([["(" + ", ".join(str(p) for p in key) + ")", str(obj[key])]
                      for key in obj.support()])
    if isinstance(obj, DecompMatrix):
        labels = [str(p) for p in obj.order]
        head = [""] + labels
        body = [[labels[r]] + [("." if not c else str(c)) for c in row]
                for r, row in enumerate(obj.entries)]
        return _grid([head] + body)
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, list) and v and isinstance(v[0], dict):
                keys = list(v[0])
                lines.append(f"{k}:")
                lines.append(_grid([keys] + [[_cell(r.get(x)) for x in keys] for r in v]))
            else:
                lines.append(f"{k}: {_cell(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(render_table(x) for x in obj)
    return str(obj)


def _cell(v: Any) -> str:
    if isinstance(v, list):
        return "(" + ", ".join(_cell(x) for x in v) + ")"
    if isinstance(v, dict):
        return json.dumps(to_record(v), sort_keys=True)
    return str(v)


def serialize(obj: Any, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(to_record(obj), sort_keys=True)
    if fmt == "table":
        return render_table(obj)
    raise ValueError(f"unknown format {fmt!r}")
