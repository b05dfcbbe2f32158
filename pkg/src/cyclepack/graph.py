"""Immutable graph values, decomposition pieces, and the independent verifier.

Everything downstream builds on three value types: :class:`Graph` (a simple
undirected graph on dense integer vertex ids), :class:`Piece` (cycle, path or
single edge), and :class:`Decomposition` / :class:`PartialDecomposition`.
All of them are immutable; operations return new values.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

Edge = tuple[int, int]

CYCLE = "cycle"
PATH = "path"
SINGLE = "edge"


class GraphError(ValueError):
    """Malformed graph input (bad vertex ids, self-loops, duplicates)."""


def norm_edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex ids 0..n-1 with a frozen edge set."""

    n: int
    edges: frozenset[Edge]

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        es = set()
        for u, v in edges:
            e = norm_edge(u, v)
            if not (0 <= e[0] and e[1] < n):
                raise GraphError(f"edge {e} outside vertex range 0..{n - 1}")
            es.add(e)
        return Graph(n, frozenset(es))

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, frozenset())

    @staticmethod
    def complete(n: int) -> "Graph":
        return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    @staticmethod
    def cycle_graph(n: int) -> "Graph":
        if n < 3:
            raise GraphError("cycle graph needs >= 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def path_graph(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex sorted neighbor tuples."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def average_degree(self) -> Fraction:
        return Fraction(2 * self.m, self.n) if self.n else Fraction(0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @cached_property
    def support(self) -> frozenset[int]:
        """Vertices with at least one incident edge."""
        return frozenset(v for v in range(self.n) if self.adjacency[v])

    def adjacency_sets(self) -> list[set[int]]:
        """Mutable adjacency copy for in-place edge deletion loops."""
        return [set(a) for a in self.adjacency]

    def fingerprint(self) -> str:
        h = hashlib.blake2b(digest_size=8)
        h.update(str(self.n).encode())
        for u, v in sorted(self.edges):
            h.update(b"|%d,%d" % (u, v))
        return h.hexdigest()

    def __repr__(self) -> str:  # keep test failure output readable
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Piece:
    """One unit of a decomposition: a cycle, a path, or a single edge.

    Cycle vertices omit the closing repeat: Piece(CYCLE, (0,1,2)) is the
    triangle with edges (0,1),(1,2),(0,2). A path of one edge is always
    normalized to a SINGLE piece by the constructors.
    """

    kind: str
    vertices: tuple[int, ...]

    @staticmethod
    def cycle(vertices: Iterable[int]) -> "Piece":
        vs = tuple(vertices)
        if len(vs) < 3:
            raise GraphError(f"cycle needs >= 3 vertices, got {len(vs)}")
        return Piece(CYCLE, vs)

    @staticmethod
    def path(vertices: Iterable[int]) -> "Piece":
        vs = tuple(vertices)
        if len(vs) < 2:
            raise GraphError("path needs >= 2 vertices")
        if len(vs) == 2:
            return Piece.single(vs[0], vs[1])
        return Piece(PATH, vs)

    @staticmethod
    def single(u: int, v: int) -> "Piece":
        return Piece(SINGLE, norm_edge(u, v))

    @property
    def length(self) -> int:
        """Number of edges."""
        if self.kind == CYCLE:
            return len(self.vertices)
        return len(self.vertices) - 1

    def edge_list(self) -> list[Edge]:
        vs = self.vertices
        es = [norm_edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.kind == CYCLE:
            es.append(norm_edge(vs[-1], vs[0]))
        return es

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edge_list())

    def endpoints(self) -> tuple[int, int]:
        if self.kind == CYCLE:
            raise GraphError("cycles have no endpoints")
        return self.vertices[0], self.vertices[-1]

    def structural_error(self, g: Graph) -> str | None:
        """First structural violation of this piece in host graph g, or None."""
        vs = self.vertices
        if any(not (0 <= v < g.n) for v in vs):
            return f"{self.kind} uses vertex outside 0..{g.n - 1}"
        if len(set(vs)) != len(vs):
            return f"{self.kind} repeats a vertex: {vs}"
        if self.kind == CYCLE and len(vs) < 3:
            return f"cycle too short: {vs}"
        if self.kind == PATH and len(vs) < 3:
            return f"path shorter than 2 edges should be a single edge: {vs}"
        if self.kind == SINGLE and len(vs) != 2:
            return f"single edge must have 2 vertices: {vs}"
        if self.kind not in (CYCLE, PATH, SINGLE):
            return f"unknown piece kind {self.kind!r}"
        for e in self.edge_list():
            if e not in g.edges:
                return f"{self.kind} uses non-edge {e}"
        return None


@dataclass(frozen=True)
class DecompositionStats:
    cycle_count: int
    path_count: int
    single_edge_count: int
    total_pieces: int
    pieces_per_vertex: Fraction

    @staticmethod
    def of(pieces: tuple[Piece, ...], n: int) -> "DecompositionStats":
        c = sum(1 for p in pieces if p.kind == CYCLE)
        pa = sum(1 for p in pieces if p.kind == PATH)
        s = sum(1 for p in pieces if p.kind == SINGLE)
        return DecompositionStats(
            cycle_count=c,
            path_count=pa,
            single_edge_count=s,
            total_pieces=len(pieces),
            pieces_per_vertex=Fraction(len(pieces), n) if n else Fraction(0),
        )


@dataclass(frozen=True)
class Decomposition:
    """Pieces whose edge sets exactly partition the host graph's edges."""

    pieces: tuple[Piece, ...]
    source: str
    stats: DecompositionStats

    @staticmethod
    def build(g: Graph, pieces: Iterable[Piece]) -> "Decomposition":
        ps = tuple(pieces)
        return Decomposition(ps, g.fingerprint(), DecompositionStats.of(ps, g.n))


@dataclass(frozen=True)
class PartialDecomposition:
    """Pieces covering a subset of the edges, with the leftover set explicit.

    A distinct type so that callers (and verifiers) cannot mistake a partial
    cover for an exact partition.
    """

    pieces: tuple[Piece, ...]
    leftover: frozenset[Edge]
    source: str
    stats: DecompositionStats

    @staticmethod
    def build(g: Graph, pieces: Iterable[Piece], leftover: Iterable[Edge]) -> "PartialDecomposition":
        ps = tuple(pieces)
        return PartialDecomposition(
            ps, frozenset(leftover), g.fingerprint(), DecompositionStats.of(ps, g.n)
        )


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    first_violation: str | None = None
    covered_edges: int = 0
    piece_count: int = 0

    def __bool__(self) -> bool:
        return self.valid


def verify_decomposition(g: Graph, d: Decomposition | PartialDecomposition) -> VerifyReport:
    """Independently check a decomposition against its host graph.

    For :class:`Decomposition` the piece edge sets must exactly partition
    g.edges. For :class:`PartialDecomposition` pieces plus the declared
    leftover must exactly partition g.edges, with no overlap anywhere.
    Always returns a report; never raises.
    """
    seen: set[Edge] = set()
    count = 0
    for idx, piece in enumerate(d.pieces):
        err = piece.structural_error(g)
        if err is not None:
            return VerifyReport(False, f"piece {idx}: {err}", len(seen), count)
        for e in piece.edge_list():
            if e in seen:
                return VerifyReport(False, f"edge {e} covered twice", len(seen), count)
            seen.add(e)
        count += 1
    leftover: frozenset[Edge] = getattr(d, "leftover", frozenset())
    for e in leftover:
        if e not in g.edges:
            return VerifyReport(False, f"leftover edge {e} not in graph", len(seen), count)
        if e in seen:
            return VerifyReport(False, f"leftover edge {e} also covered by a piece", len(seen), count)
        seen.add(e)
    if len(seen) != g.m:
        missing = next(iter(g.edges - seen))
        return VerifyReport(False, f"edge {missing} not covered", len(seen), count)
    return VerifyReport(True, None, len(seen), count)


def core_with_min_degree(g: Graph, delta: Fraction | int | float) -> frozenset[int]:
    """Maximal vertex set whose induced subgraph has min degree >= delta.

    Iteratively peels any vertex of induced degree < delta; the result is
    independent of peel order. May be empty.
    """
    deg = [g.degree(v) for v in range(g.n)]
    alive = [True] * g.n
    queue = deque(v for v in range(g.n) if deg[v] < delta)
    queued = [False] * g.n
    for v in queue:
        queued[v] = True
    while queue:
        v = queue.popleft()
        if not alive[v]:
            continue
        alive[v] = False
        for w in g.neighbors(v):
            if alive[w]:
                deg[w] -= 1
                if deg[w] < delta and not queued[w]:
                    queued[w] = True
                    queue.append(w)
    return frozenset(v for v in range(g.n) if alive[v])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph on the given vertex set, keeping the host vertex universe.

    Vertex ids are preserved (the result has the same n); edges with an
    endpoint outside the set are dropped.
    """
    vs = set(vertices)
    for v in vs:
        if not (0 <= v < g.n):
            raise GraphError(f"unknown vertex id {v}")
    keep = frozenset(e for e in g.edges if e[0] in vs and e[1] in vs)
    return Graph(g.n, keep)


def remove_edges(g: Graph, drop: Iterable[tuple[int, int]]) -> Graph:
    dropped = {norm_edge(u, v) for u, v in drop}
    unknown = dropped - g.edges
    if unknown:
        raise GraphError(f"cannot remove non-edges: {sorted(unknown)[:3]}")
    return Graph(g.n, g.edges - dropped)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """All components, including isolated vertices as singletons."""
    seen = [False] * g.n
    out: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def external_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    """N(S): vertices outside S with at least one neighbor in S."""
    ss = set(s)
    out: set[int] = set()
    for v in ss:
        for w in g.neighbors(v):
            if w not in ss:
                out.add(w)
    return frozenset(out)


def boundary_size(g: Graph, x: Iterable[int]) -> int:
    """e(X, X^c): number of edges leaving X."""
    xs = set(x)
    total = 0
    for v in xs:
        for w in g.neighbors(v):
            if w not in xs:
                total += 1
    return total


def split_closed_walk(walk: list[int]) -> list[Piece]:
    """Split a closed walk (walk[0] == walk[-1], distinct edge pairs) into cycles.

    Excises the earliest repeated vertex first. With all edge pairs distinct,
    every excised segment and the final remainder are simple cycles of length
    >= 3; a length-2 segment would mean a duplicated pair and is rejected.
    """
    if len(walk) < 2 or walk[0] != walk[-1]:
        raise GraphError("walk is not closed")
    pieces: list[Piece] = []
    stack: list[int] = []
    pos: dict[int, int] = {}
    for v in walk[:-1]:
        if v in pos:
            i = pos[v]
            cyc = stack[i:]
            if len(cyc) < 3:
                raise GraphError("closed walk repeats an edge pair")
            pieces.append(Piece.cycle(cyc))
            for w in cyc[1:]:
                del pos[w]
            del stack[i + 1:]
        else:
            pos[v] = len(stack)
            stack.append(v)
    if len(stack) >= 3:
        pieces.append(Piece.cycle(stack))
    elif len(stack) == 2:
        raise GraphError("closed walk repeats an edge pair")
    return pieces


def edges_as_singles(edges: Iterable[Edge]) -> list[Piece]:
    return [Piece.single(u, v) for u, v in sorted(set(edges))]


def iter_subsets(items: list[int]) -> Iterator[tuple[int, ...]]:
    """All non-empty proper subsets of items (by index bitmask order)."""
    k = len(items)
    for mask in range(1, (1 << k) - 1):
        yield tuple(items[i] for i in range(k) if mask >> i & 1)
