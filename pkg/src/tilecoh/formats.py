"""File formats: plain-text matrices, JSON matrices, JSON complexes,
and JSON report emission/parsing.

Matrix text files carry a "rows cols" header line followed by row-major
whitespace-separated integers.  The JSON format is self-describing: an
object with a "matrix" key is a bare matrix, an object with "d1"/"d2"
keys is a complex (with optional "gamma1"/"gamma2" inflation matrices).
All emitted files are UTF-8 and newline-terminated.
"""

from __future__ import annotations

import json
from typing import Any

from .complexes import CohomologyReport, Complex2D, SubstitutionComplex
from .hull import HullReport
from .intmat import IntMatrix
from .limits import Classified, DirectLimitResult, Presented


class FormatError(ValueError):
    """Malformed input file; the message carries a line/field diagnostic."""


# -- plain-text matrices ----------------------------------------------------


def parse_matrix_text(text: str) -> IntMatrix:
    tokens = text.split()
    if len(tokens) < 2:
        raise FormatError("matrix text needs a 'rows cols' header line")
    try:
        rows, cols = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise FormatError(f"bad matrix header {tokens[0]!r} {tokens[1]!r}: {exc}") from None
    body = tokens[2:]
    if rows < 0 or cols < 0:
        raise FormatError(f"negative matrix shape {rows}x{cols}")
    if len(body) != rows * cols:
        raise FormatError(
            f"matrix body has {len(body)} entries, expected {rows}*{cols} = {rows * cols}"
        )
    try:
        values = [int(tok) for tok in body]
    except ValueError as exc:
        raise FormatError(f"bad matrix entry: {exc}") from None
    grid = [values[i * cols : (i + 1) * cols] for i in range(rows)]
    return IntMatrix(rows, cols, tuple(tuple(r) for r in grid))


def render_matrix_text(m: IntMatrix) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines.extend(" ".join(str(v) for v in row) for row in m.entries)
    return "\n".join(lines) + "\n"


# -- JSON ingestion ----------------------------------------------------------


def _grid_to_matrix(field: str, grid: Any, rows: int | None, cols: int | None) -> IntMatrix:
    if not isinstance(grid, list) or any(not isinstance(r, list) for r in grid):
        raise FormatError(f"field {field!r} must be a list of rows")
    height = len(grid)
    width = len(grid[0]) if grid else 0
    if any(len(r) != width for r in grid):
        raise FormatError(f"field {field!r} has ragged rows")
    if rows is not None and height != rows:
        raise FormatError(f"field {field!r} has {height} rows, expected {rows}")
    if cols is not None and width != cols and height > 0:
        raise FormatError(f"field {field!r} has {width} columns, expected {cols}")
    if cols is not None and height == 0:
        width = cols
    for r in grid:
        for v in r:
            if not isinstance(v, int) or isinstance(v, bool):
                raise FormatError(f"field {field!r} has non-integer entry {v!r}")
    return IntMatrix(height, width, tuple(tuple(r) for r in grid))


def parse_matrix_json(obj: dict) -> IntMatrix:
    if "matrix" not in obj:
        raise FormatError("JSON matrix object needs a 'matrix' field")
    rows = obj.get("rows")
    cols = obj.get("cols")
    return _grid_to_matrix("matrix", obj["matrix"], rows, cols)


def load_matrix(path: str) -> IntMatrix:
    text = _read(path)
    if text.lstrip().startswith("{"):
        obj = _json_object(path, text)
        if "matrix" in obj:
            return parse_matrix_json(obj)
        raise FormatError(f"{path}: JSON object has no 'matrix' field")
    return parse_matrix_text(text)


def parse_complex_json(obj: dict) -> Complex2D | SubstitutionComplex:
    for field in ("vertices", "edges", "faces"):
        if field not in obj:
            raise FormatError(f"complex is missing the {field!r} field")
        if not isinstance(obj[field], int) or isinstance(obj[field], bool) or obj[field] < 0:
            raise FormatError(f"field {field!r} must be a nonnegative integer")
    v, e, f = obj["vertices"], obj["edges"], obj["faces"]
    if "d1" not in obj or "d2" not in obj:
        raise FormatError("complex needs 'd1' (vertices x edges) and 'd2' (edges x faces)")
    d1 = _grid_to_matrix("d1", obj["d1"], v, e)
    d2 = _grid_to_matrix("d2", obj["d2"], e, f)
    labels = None
    if any(k in obj for k in ("vertex_labels", "edge_labels", "face_labels")):
        labels = tuple(
            tuple(str(s) for s in obj.get(key, []))
            for key in ("vertex_labels", "edge_labels", "face_labels")
        )
        for got, want, key in zip(labels, (v, e, f), ("vertex_labels", "edge_labels", "face_labels")):
            if got and len(got) != want:
                raise FormatError(f"field {key!r} has {len(got)} names, expected {want}")
    cx = Complex2D(v, e, f, d1, d2, labels)
    has_g1, has_g2 = "gamma1" in obj, "gamma2" in obj
    if has_g1 != has_g2:
        raise FormatError("substitution data needs both 'gamma1' and 'gamma2'")
    if not has_g1:
        return cx
    b1 = _grid_to_matrix("gamma1", obj["gamma1"], e, e)
    b2 = _grid_to_matrix("gamma2", obj["gamma2"], f, f)
    return SubstitutionComplex(cx, b1, b2)


def load_complex(path: str) -> Complex2D | SubstitutionComplex:
    obj = _json_object(path, _read(path))
    try:
        return parse_complex_json(obj)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def complex_to_json(obj: Complex2D | SubstitutionComplex) -> dict:
    sub = obj if isinstance(obj, SubstitutionComplex) else None
    cx = sub.complex2d if sub is not None else obj
    out: dict[str, Any] = {
        "vertices": cx.vertices,
        "edges": cx.edges,
        "faces": cx.faces,
        "d1": cx.d1.to_lists(),
        "d2": cx.d2.to_lists(),
    }
    if cx.labels is not None:
        out["vertex_labels"] = list(cx.labels[0])
        out["edge_labels"] = list(cx.labels[1])
        out["face_labels"] = list(cx.labels[2])
    if sub is not None:
        out["gamma1"] = sub.b1.to_lists()
        out["gamma2"] = sub.b2.to_lists()
    return out


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _json_object(path: str, text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: top-level JSON value must be an object")
    return obj


# -- report emission ---------------------------------------------------------


def cohomology_report_to_json(report: CohomologyReport) -> dict:
    out: dict[str, Any] = {
        "H0": str(report.h0.group),
        "H1": str(report.h1.group),
        "H2": str(report.h2.group),
    }
    if report.has_induced_maps:
        out["induced"] = {
            "H0": report.g0.matrix.to_lists(),
            "H1": report.g1.matrix.to_lists(),
            "H2": report.g2.matrix.to_lists(),
        }
    return out


def limit_to_json(result: DirectLimitResult) -> dict:
    if isinstance(result, Classified):
        return {
            "classified": True,
            "rendering": str(result),
            "localized_factors": list(result.localized_factors),
            "free_rank": result.free_rank,
            "torsion": list(result.torsion),
        }
    return {
        "classified": False,
        "rendering": str(result),
        "matrix": result.reduced_matrix.to_lists(),
    }


def limit_from_json(obj: dict) -> DirectLimitResult:
    if obj.get("classified"):
        return Classified(
            tuple(obj["localized_factors"]), obj["free_rank"], tuple(obj["torsion"])
        )
    return Presented(_grid_to_matrix("matrix", obj["matrix"], None, None))


def hull_report_to_json(
    report: HullReport, primitive: bool, witness_power: int | None
) -> dict:
    return {
        "H0": str(report.h0),
        "H1": str(report.h1),
        "H2": str(report.h2),
        "K0": str(report.k0) if report.k0 is not None else None,
        "K1": str(report.k1) if report.k1 is not None else None,
        "primitive": primitive,
        "witness_power": witness_power,
    }


def emit_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
