"""Hypergraph data model: parsing, canonical form, clique checks, subset queries.

Vertices are the integers 0..v-1.  Edges are stored as ascending tuples and
the family is kept in lexicographic order with duplicates merged, so equal
hypergraphs compare equal and rendering then re-parsing is the identity.
A bitmask per edge backs the intersection-heavy operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import InputError

MAX_VERTICES = 1 << 20
MAX_EDGES = 1 << 22


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with bit i set for every vertex i."""
    m = 0
    for x in vertices:
        m |= 1 << x
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    """Ascending vertex tuple of a bitmask."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class Hypergraph:
    """An n-uniform hypergraph on vertices 0..v-1 without repeated edges.

    Invariants (validated on construction):
      - every edge is a strictly ascending tuple of n integers in 0..v-1
      - the edge family is strictly increasing lexicographically
      - v <= 2**20 and |edges| <= 2**22

    Instances are immutable and safe to share across concurrent workers.
    """

    n: int
    v: int
    edges: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InputError(f"uniformity must be positive, got {self.n}")
        if self.v < 1:
            raise InputError(f"vertex count must be positive, got {self.v}")
        if self.v > MAX_VERTICES:
            raise InputError(f"vertex count {self.v} exceeds cap {MAX_VERTICES}")
        if len(self.edges) > MAX_EDGES:
            raise InputError(f"edge count {len(self.edges)} exceeds cap {MAX_EDGES}")
        prev = None
        for e in self.edges:
            if len(e) != self.n:
                raise InputError(f"edge {e} has {len(e)} vertices, expected {self.n}")
            if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
                raise InputError(f"edge {e} is not strictly ascending")
            if e[0] < 0 or e[-1] >= self.v:
                raise InputError(f"edge {e} has a vertex outside 0..{self.v - 1}")
            if prev is not None and e <= prev:
                raise InputError("edge family is not strictly increasing")
            prev = e
        object.__setattr__(self, "masks", tuple(mask_of(e) for e in self.edges))

    @classmethod
    def from_edges(cls, n: int, v: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """Canonicalize an edge iterable (sort each edge, sort and dedup the family)."""
        canon = sorted({tuple(sorted(e)) for e in edges})
        return cls(n, v, tuple(canon))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, x: int) -> int:
        if not 0 <= x < self.v:
            raise InputError(f"vertex {x} outside 0..{self.v - 1}")
        bit = 1 << x
        return sum(1 for m in self.masks if m & bit)

    def degrees(self) -> tuple[int, ...]:
        """Degree of every vertex 0..v-1."""
        deg = [0] * self.v
        for e in self.edges:
            for x in e:
                deg[x] += 1
        return tuple(deg)


@dataclass(frozen=True)
class ParseResult:
    hypergraph: Hypergraph
    duplicate_count: int


@dataclass(frozen=True)
class CliqueVerdict:
    """Outcome of the pairwise-intersection check.

    ``witness`` is the lexicographically first pair of edge indices whose
    edges are disjoint; present exactly when ``is_clique`` is false.
    """

    is_clique: bool
    witness: tuple[int, int] | None


@dataclass(frozen=True)
class EdgeStats:
    """Edges containing all of W, edges meeting W, and degrees of W's vertices."""

    containing: tuple[int, ...]
    meeting: tuple[int, ...]
    degree_map: dict[int, int]


def parse_hypergraph(text: str) -> ParseResult:
    """Parse the hypergraph file format.

    Line 1: ``uniform <n> vertices <v>``.  Each following non-empty line is
    one edge: n ascending space-separated integers in 0..v-1.  ``#`` starts
    a comment to end of line; CRLF is tolerated.  Duplicate edges are merged
    and counted in ``duplicate_count``.
    """
    header: tuple[int, int] | None = None
    raw_edges: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4 or parts[0] != "uniform" or parts[2] != "vertices":
                raise InputError(f"line {lineno}: malformed header {line!r}")
            try:
                n, v = int(parts[1]), int(parts[3])
            except ValueError:
                raise InputError(f"line {lineno}: malformed header {line!r}") from None
            if n < 1 or v < 1:
                raise InputError(f"line {lineno}: header values must be positive")
            if v > MAX_VERTICES:
                raise InputError(f"line {lineno}: vertex count {v} exceeds cap {MAX_VERTICES}")
            header = (n, v)
            continue
        n, v = header
        try:
            values = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex in {line!r}") from None
        edge = tuple(sorted(set(values)))
        if len(values) != n or len(edge) != n:
            raise InputError(
                f"line {lineno}: edge has cardinality {len(set(values))}, expected {n}"
            )
        if edge[0] < 0 or edge[-1] >= v:
            raise InputError(f"line {lineno}: vertex outside 0..{v - 1} in {line!r}")
        if len(raw_edges) >= MAX_EDGES:
            raise InputError(f"line {lineno}: edge count exceeds cap {MAX_EDGES}")
        raw_edges.append(edge)
    if header is None:
        raise InputError("missing header line 'uniform <n> vertices <v>'")
    if not raw_edges:
        raise InputError("empty edge list")
    n, v = header
    canon = sorted(set(raw_edges))
    hg = Hypergraph(n, v, tuple(canon))
    return ParseResult(hg, len(raw_edges) - len(canon))


def render_hypergraph(h: Hypergraph) -> str:
    """Inverse of parse_hypergraph: parse(render(h)) reproduces h exactly."""
    lines = [f"uniform {h.n} vertices {h.v}"]
    lines.extend(" ".join(str(x) for x in e) for e in h.edges)
    return "\n".join(lines) + "\n"


def is_clique(h: Hypergraph) -> CliqueVerdict:
    """True iff every pair of edges intersects; else the first disjoint pair."""
    masks = h.masks
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            if not mi & masks[j]:
                return CliqueVerdict(False, (i, j))
    return CliqueVerdict(True, None)


def edge_stats(h: Hypergraph, w: Iterable[int]) -> EdgeStats:
    """Containment and intersection queries for a vertex set W.

    ``containing`` lists edges B with W ⊆ B, ``meeting`` lists edges with
    W ∩ B nonempty.  For W = ∅ every edge contains W vacuously and none
    meets it.  ``degree_map[x]`` is the number of edges through x, for x in W.
    """
    wset = sorted(set(w))
    if wset and (wset[0] < 0 or wset[-1] >= h.v):
        raise InputError(f"vertex set {wset} outside 0..{h.v - 1}")
    wmask = mask_of(wset)
    containing = tuple(i for i, m in enumerate(h.masks) if m & wmask == wmask)
    meeting = tuple(i for i, m in enumerate(h.masks) if m & wmask) if wset else ()
    degree_map = {x: 0 for x in wset}
    for m in h.masks:
        for x in wset:
            if m >> x & 1:
                degree_map[x] += 1
    return EdgeStats(containing, meeting, degree_map)
