"""Reading and writing system documents.

A document is a JSON object with exactly the fields ``tnorm``, ``A`` and
``b``; serialization always emits them in that order. The CSV variant reads
``A`` and ``b`` from two files and takes the t-norm separately.
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

from .algebra import System, TNormKind

TNORM_NAMES = tuple(k.value for k in TNormKind)


class DocumentError(ValueError):
    pass


@dataclass(frozen=True)
class SystemDocument:
    tnorm: str
    A: tuple[tuple[float, ...], ...]
    b: tuple[float, ...]

    def to_system(self) -> System:
        return System(TNormKind(self.tnorm), self.A, self.b)

    @classmethod
    def from_system(cls, system: System) -> "SystemDocument":
        return cls(
            system.tnorm.value,
            tuple(tuple(float(v) for v in row) for row in system.A),
            tuple(float(v) for v in system.b),
        )


def _number(value, label: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"{label} = {value!r} is not a number")
    x = float(value)
    if not math.isfinite(x) or not 0 <= x <= 1:
        raise DocumentError(f"{label} = {value!r} is outside [0, 1]")
    return x


def parse_document(obj) -> SystemDocument:
    if not isinstance(obj, dict):
        raise DocumentError("document must be an object with fields tnorm, A, b")
    missing = [k for k in ("tnorm", "A", "b") if k not in obj]
    if missing:
        raise DocumentError(f"missing field(s): {', '.join(missing)}")
    extra = sorted(set(obj) - {"tnorm", "A", "b"})
    if extra:
        raise DocumentError(f"unexpected field(s): {', '.join(extra)}")
    tnorm = obj["tnorm"]
    if tnorm not in TNORM_NAMES:
        raise DocumentError(f"tnorm = {tnorm!r}; expected one of {', '.join(TNORM_NAMES)}")
    rows, b = obj["A"], obj["b"]
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise DocumentError("A must be a non-empty array of arrays")
    m = len(rows[0])
    if m == 0:
        raise DocumentError("A must have at least one column")
    A = []
    for i, row in enumerate(rows, 1):
        if len(row) != m:
            raise DocumentError(f"row {i} of A has {len(row)} entries, expected {m}")
        A.append(tuple(_number(v, f"A[{i}][{j}] (row {i}, col {j})") for j, v in enumerate(row, 1)))
    if not isinstance(b, list):
        raise DocumentError("b must be an array")
    if len(b) != len(A):
        raise DocumentError(f"b has {len(b)} entries but A has {len(A)} rows")
    bvec = tuple(_number(v, f"b[{i}]") for i, v in enumerate(b, 1))
    return SystemDocument(tnorm, tuple(A), bvec)


def loads_document(text: str) -> SystemDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return parse_document(obj)


def dumps_document(doc: SystemDocument) -> str:
    payload = {"tnorm": doc.tnorm, "A": [list(r) for r in doc.A], "b": list(doc.b)}
    return json.dumps(payload, indent=None, separators=(", ", ": ")) + "\n"


def load_document(path) -> SystemDocument:
    return loads_document(Path(path).read_text())


def save_document(doc: SystemDocument, path) -> None:
    Path(path).write_text(dumps_document(doc))


def _read_csv(path) -> list[list[str]]:
    with open(path, newline="") as fh:
        return [row for row in csv.reader(fh) if any(cell.strip() for cell in row)]


def _csv_number(cell: str, label: str) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise DocumentError(f"{label} = {cell!r} is not a number") from None
    return _number(value, label)


def load_csv(a_path, b_path, tnorm: str) -> SystemDocument:
    """Read ``A`` (one matrix row per line) and ``b`` (one value per line, or one line)."""
    a_rows = _read_csv(a_path)
    A = [
        [_csv_number(c, f"A[{i}][{j}] (row {i}, col {j})") for j, c in enumerate(row, 1)]
        for i, row in enumerate(a_rows, 1)
    ]
    b_rows = _read_csv(b_path)
    cells = [c for row in b_rows for c in row] if len(b_rows) > 1 else (b_rows[0] if b_rows else [])
    b = [_csv_number(c, f"b[{i}]") for i, c in enumerate(cells, 1)]
    return parse_document({"tnorm": tnorm, "A": A, "b": b})
