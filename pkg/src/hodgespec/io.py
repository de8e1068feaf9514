"""File formats: complex/subset JSON, matrix CSV and spectrum CSV."""

from __future__ import annotations

import io as _io
import json
from pathlib import Path
from typing import TextIO

import numpy as np

from .complex_core import CLOSED, OPEN, Complex, closure, euler_characteristic, is_closed, is_open, subset, whitney_complex
from .operators import BlockMatrix
from .spectral import Spectrum


class InputError(ValueError):
    """Malformed input file; the message names the file and position."""


def _load_json(path) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}:1:1: expected a JSON object")
    return doc


def _simplex_list(doc: dict, key: str, path) -> list[list[int]]:
    if key not in doc:
        raise InputError(f"{path}: missing field {key!r}")
    items = doc[key]
    if not isinstance(items, list):
        raise InputError(f"{path}: {key} must be a list")
    for i, x in enumerate(items):
        if not isinstance(x, list) or not x:
            raise InputError(f"{path}: {key}[{i}] must be a non-empty list of integers")
        for j, v in enumerate(x):
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise InputError(f"{path}: {key}[{i}][{j}] = {v!r} is not a non-negative integer")
        if len(set(x)) != len(x):
            raise InputError(f"{path}: {key}[{i}] has a duplicate vertex")
    return items


def load_complex(path) -> Complex:
    """Read ``{"facets": [[...], ...]}`` and return its closure."""
    doc = _load_json(path)
    return closure(_simplex_list(doc, "facets", path))


def load_graph(path) -> Complex:
    """Read ``{"vertices": [...], "edges": [[u, v], ...]}`` as a Whitney complex."""
    doc = _load_json(path)
    edges = _simplex_list(doc, "edges", path) if "edges" in doc else []
    for i, e in enumerate(edges):
        if len(e) != 2:
            raise InputError(f"{path}: edges[{i}] must have two endpoints")
    vertices = doc.get("vertices", sorted({v for e in edges for v in e}))
    try:
        return whitney_complex((vertices, edges))
    except ValueError as e:
        raise InputError(f"{path}: {e}") from None


def complex_document(G: Complex) -> dict:
    return {
        "facets": [list(x) for x in G.facets()],
        "f_vector": list(G.f_vector),
        "euler_characteristic": euler_characteristic(G),
        "n": len(G),
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True) + "\n"


def complex_to_json(G: Complex) -> str:
    return dumps(complex_document(G))


def load_input(path) -> Complex:
    """Dispatch on content: a complex file, a graph file, or a subset file."""
    doc = _load_json(path)
    if "facets" in doc:
        return load_complex(path)
    if "edges" in doc or "vertices" in doc:
        return load_graph(path)
    if "elements" in doc:
        return load_subset(path)
    raise InputError(f"{path}: expected 'facets', 'edges' or 'elements'")


def load_subset(path, parent: Complex | None = None) -> Complex:
    """Read ``{"parent": ..., "elements": [...], "expect": "open"|"closed"}``.

    ``parent`` may be a path (relative to the subset file) to a complex
    file.  An explicit ``parent`` argument overrides the field.
    """
    doc = _load_json(path)
    elements = _simplex_list(doc, "elements", path)
    if parent is None:
        ref = doc.get("parent")
        if not isinstance(ref, str):
            raise InputError(f"{path}: subset needs a 'parent' path")
        ppath = Path(ref)
        if not ppath.is_absolute():
            ppath = Path(path).parent / ppath
        if not ppath.exists():
            raise InputError(f"{path}: parent file {ref!r} not found")
        parent = load_input(ppath)
    members = [tuple(sorted(x)) for x in elements]
    missing = [x for x in members if x not in parent]
    if missing:
        raise InputError(f"{path}: element {list(missing[0])} is not in the parent complex")
    expect = doc.get("expect")
    if expect not in (None, OPEN, CLOSED):
        raise InputError(f"{path}: expect must be 'open' or 'closed'")
    if expect == OPEN and not is_open(parent, members):
        raise InputError(f"{path}: subset is not open")
    if expect == CLOSED and not is_closed(parent, members):
        raise InputError(f"{path}: subset is not closed")
    try:
        return subset(parent, members, kind=expect)
    except ValueError as e:
        raise InputError(f"{path}: {e}") from None


def subset_to_json(S: Complex, parent_ref: str) -> str:
    return dumps({"parent": parent_ref, "elements": [list(x) for x in S], "expect": S.kind})


def write_matrix_csv(M: BlockMatrix, fh: TextIO) -> None:
    fh.write("# blocks: " + ",".join(str(b) for b in M.offsets) + "\n")
    for row in np.asarray(M.matrix):
        fh.write(",".join(str(int(v)) for v in row) + "\n")


def matrix_csv(M: BlockMatrix) -> str:
    buf = _io.StringIO()
    write_matrix_csv(M, buf)
    return buf.getvalue()


def read_matrix_csv(text: str) -> BlockMatrix:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# blocks:"):
        raise InputError("matrix CSV must start with '# blocks:'")
    body = lines[0].split(":", 1)[1].strip()
    offsets = tuple(int(v) for v in body.split(",")) if body else (0,)
    rows = [[int(v) for v in line.split(",")] for line in lines[1:] if line.strip()]
    n = offsets[-1]
    M = np.array(rows, dtype=np.int64).reshape(n, n) if n else np.zeros((0, 0), dtype=np.int64)
    return BlockMatrix(M, offsets)


def spectrum_csv(spec: Spectrum) -> str:
    head = f"# n={len(spec)} tau={spec.zero_tol!r} pad={spec.pad_len if spec.pad_len is not None else ''}\n"
    return head + "".join(format(float(v), ".17g") + "\n" for v in spec.values)


def read_spectrum_csv(text: str) -> Spectrum:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("#"):
        raise InputError("spectrum CSV must start with a '#' header")
    fields = dict(tok.split("=", 1) for tok in lines[0][1:].split())
    vals = np.array([float(v) for v in lines[1:] if v.strip()])
    pad = int(fields["pad"]) if fields.get("pad") else None
    return Spectrum(vals, float(fields["tau"]), pad)
