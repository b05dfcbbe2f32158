"""Edge-list text files and decomposition JSON.

Edge-list format: first non-comment line is "n m", then m lines "u v" with
0 <= u < v < n. Blank lines and lines starting with "#" are ignored.

Decomposition JSON schema:
    {"n": int,
     "pieces": [{"kind": "cycle"|"edge", "vertices": [int, ...]}, ...],
     "leftover": [[int, int], ...]}
Path pieces appear only in debug dumps (allow_paths=True).
"""

from __future__ import annotations

import json
from typing import TextIO

from .graph import (
    CYCLE,
    PATH,
    SINGLE,
    Decomposition,
    Graph,
    GraphError,
    PartialDecomposition,
    Piece,
)


class FormatError(ValueError):
    """Malformed edge-list or decomposition file."""


def read_edge_list(fh: TextIO) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(fh, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: expected two integers, got {line!r}") from None
        if header is None:
            header = (a, b)
            if a < 0 or b < 0:
                raise FormatError(f"line {lineno}: bad header n={a} m={b}")
            continue
        if not (0 <= a < b < header[0]):
            raise FormatError(f"line {lineno}: edge ({a}, {b}) violates 0 <= u < v < n")
        edges.append((a, b))
    if header is None:
        raise FormatError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"header declares m={m} but found {len(edges)} edges")
    try:
        g = Graph.from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    if g.m != m:
        raise FormatError("duplicate edges in input")
    return g


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return read_edge_list(fh)


def write_edge_list(fh: TextIO, g: Graph) -> None:
    fh.write(f"{g.n} {g.m}\n")
    for u, v in sorted(g.edges):
        fh.write(f"{u} {v}\n")


def save_graph(path: str, g: Graph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        write_edge_list(fh, g)


def decomposition_to_dict(d: Decomposition | PartialDecomposition, allow_paths: bool = False) -> dict:
    pieces = []
    for p in d.pieces:
        if p.kind == PATH and not allow_paths:
            raise GraphError("path pieces are only allowed in debug dumps")
        pieces.append({"kind": p.kind, "vertices": list(p.vertices)})
    leftover = sorted(getattr(d, "leftover", frozenset()))
    n = _host_n(d)
    return {"n": n, "pieces": pieces, "leftover": [[u, v] for u, v in leftover]}


def _host_n(d: Decomposition | PartialDecomposition) -> int:
    top = 0
    for p in d.pieces:
        top = max(top, max(p.vertices, default=-1) + 1)
    for u, v in getattr(d, "leftover", frozenset()):
        top = max(top, v + 1)
    return top


def dump_decomposition(
    d: Decomposition | PartialDecomposition,
    n: int | None = None,
    allow_paths: bool = False,
) -> str:
    doc = decomposition_to_dict(d, allow_paths=allow_paths)
    if n is not None:
        doc["n"] = n
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def save_decomposition(path: str, d: Decomposition | PartialDecomposition, n: int | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_decomposition(d, n=n))


def parse_decomposition(text: str) -> tuple[int, list[Piece], list[tuple[int, int]]]:
    """Parse decomposition JSON into (n, pieces, leftover edges).

    Raises FormatError on schema violations; structural validity against a
    host graph is the verifier's job.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("top-level JSON value must be an object")
    try:
        n = int(doc["n"])
        raw_pieces = doc["pieces"]
        raw_leftover = doc.get("leftover", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad decomposition document: {exc}") from None
    if not isinstance(raw_pieces, list) or not isinstance(raw_leftover, list):
        raise FormatError("'pieces' and 'leftover' must be arrays")
    pieces: list[Piece] = []
    for i, entry in enumerate(raw_pieces):
        if not isinstance(entry, dict) or "kind" not in entry or "vertices" not in entry:
            raise FormatError(f"piece {i}: expected object with 'kind' and 'vertices'")
        kind = entry["kind"]
        vs = entry["vertices"]
        if kind not in (CYCLE, SINGLE, PATH):
            raise FormatError(f"piece {i}: unknown kind {kind!r}")
        if not isinstance(vs, list) or not all(isinstance(v, int) for v in vs):
            raise FormatError(f"piece {i}: vertices must be a list of integers")
        try:
            if kind == CYCLE:
                pieces.append(Piece.cycle(vs))
            elif kind == SINGLE:
                if len(vs) != 2:
                    raise FormatError(f"piece {i}: single edge needs exactly 2 vertices")
                pieces.append(Piece.single(vs[0], vs[1]))
            else:
                pieces.append(Piece.path(vs))
        except GraphError as exc:
            raise FormatError(f"piece {i}: {exc}") from None
    leftover: list[tuple[int, int]] = []
    for i, pair in enumerate(raw_leftover):
        if not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(v, int) for v in pair):
            raise FormatError(f"leftover {i}: expected [u, v]")
        leftover.append((pair[0], pair[1]))
    return n, pieces, leftover


def load_decomposition(path: str) -> tuple[int, list[Piece], list[tuple[int, int]]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_decomposition(fh.read())
