"""CSV / JSON serialization with fixed 12-significant-digit numbers."""

from __future__ import annotations

import csv
import io
import json

import numpy as np

SIG_DIGITS = 12


def fmt(x: float) -> float:
    """Round to 12 significant digits so CSV and JSON carry the same value."""
    return float(f"{float(x):.{SIG_DIGITS}g}")


def _cell(v):
    if isinstance(v, (bool, str)) or v is None:
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    return fmt(v)


def complex_str(z: complex) -> str:
    z = complex(z)
    return f"{fmt(z.real):.{SIG_DIGITS}g}{fmt(z.imag):+.{SIG_DIGITS}g}j"


def matrix_json(m: np.ndarray) -> list:
    return [[[fmt(z.real), fmt(z.imag)] for z in row] for row in np.asarray(m, dtype=complex)]


def table_csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([_num_str(v) for v in map(_cell, row)])
    return buf.getvalue()


def _num_str(v):
    if isinstance(v, float):
        return f"{v:.{SIG_DIGITS}g}"
    return v


def table_json(columns, rows, **meta) -> str:
    doc = dict(meta)
    doc["columns"] = list(columns)
    doc["rows"] = [[_cell(v) for v in row] for row in rows]
    return json.dumps(doc, indent=2) + "\n"


def density_csv(matrix: np.ndarray, spectrum, entropy: float, dims) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["dims"] + list(dims))
    for row in np.asarray(matrix, dtype=complex):
        w.writerow(["matrix"] + [complex_str(z) for z in row])
    w.writerow(["spectrum"] + [_num_str(fmt(x)) for x in spectrum])
    w.writerow(["entropy", _num_str(fmt(entropy))])
    return buf.getvalue()


def density_json(matrix: np.ndarray, spectrum, entropy: float, dims, **meta) -> str:
    doc = dict(meta)
    doc["dims"] = list(dims)
    doc["matrix"] = matrix_json(matrix)
    doc["spectrum"] = [fmt(x) for x in spectrum]
    doc["entropy"] = fmt(entropy)
    return json.dumps(doc, indent=2) + "\n"


def parse_density_csv(text: str) -> dict:
    """Inverse of ``density_csv``; used to check round-tripping."""
    out = {"matrix": []}
    for row in csv.reader(io.StringIO(text)):
        tag, rest = row[0], row[1:]
        if tag == "dims":
            out["dims"] = [int(x) for x in rest]
        elif tag == "matrix":
            out["matrix"].append([complex(x) for x in rest])
        elif tag == "spectrum":
            out["spectrum"] = [float(x) for x in rest]
        elif tag == "entropy":
            out["entropy"] = float(rest[0])
    return out
