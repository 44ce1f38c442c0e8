"""Face-lattice export of (r-4)_21 as JSON or CSV.

Output depends only on r, never on timing or backend, so files are
byte-identical across runs.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .gosset import crosspolytopes, polytope, simplex_array
from .picard import format_class


def export_dict(r: int) -> dict:
    p = polytope(r)
    return {
        "r": r,
        "vertices": [list(v.coords) for v in p.vertices],
        "edges": [list(e) for e in p.edges()],
        "simplexes": {str(k): simplex_array(p, k).tolist() for k in range(p.r)},
        "crosspolytopes": [
            {"ruling": list(cp.ruling.coords), "pairs": [list(pr) for pr in cp.pairs]}
            for cp in crosspolytopes(p)
        ],
    }


def export_json(r: int) -> str:
    return json.dumps(export_dict(r), sort_keys=True, separators=(",", ":")) + "\n"


def export_csv(r: int) -> str:
    """One face per row: type, dimension, center class, vertex indices."""
    p = polytope(r)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["type", "dimension", "center", "vertices"])
    for k in range(p.r):
        for row in simplex_array(p, k):
            c = p.coords[row].sum(axis=0)
            w.writerow(["simplex", k, ",".join(str(int(x)) for x in c), " ".join(str(int(v)) for v in row)])
    for cp in crosspolytopes(p):
        w.writerow(["crosspolytope", len(cp.pairs), format_class(cp.ruling), " ".join(str(v) for v in cp.vertices)])
    return buf.getvalue()


def write_export(r: int, path, fmt: str = "json") -> Path:
    path = Path(path)
    if fmt == "json":
        text = export_json(r)
    elif fmt == "csv":
        text = export_csv(r)
    else:
        raise ValueError(f"unknown export format {fmt!r}")
    path.write_text(text, encoding="utf-8")
    return path
