"""Exact chromatic number (capped) and exact covering number.

A coloring is proper when no edge is monochromatic, i.e. every edge sees at
least two colors.  For pairwise-intersecting families the chromatic number
is 2 or 3 and any single edge is a transversal, so both searches close
quickly at desk scale; the implementations are nevertheless complete and
make no clique assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Hypergraph, is_clique, mask_of
from .errors import InputError, NotAClique


@dataclass(frozen=True)
class ColoringResult:
    """chi is None when no proper coloring exists within the cap searched."""

    chi: int | None
    coloring: dict[int, int] | None


@dataclass(frozen=True)
class CoverResult:
    """Minimum transversal; minimality is certified by branch-and-bound exhaustion.

    ``degenerate`` marks the empty-edge-family convention tau = 0.
    """

    tau: int
    transversal: frozenset[int]
    degenerate: bool = False


def is_proper_coloring(h: Hypergraph, coloring: dict[int, int]) -> bool:
    """True iff every edge contains two vertices of different colors."""
    return all(len({coloring[x] for x in e}) >= 2 for e in h.edges)


def find_proper_coloring(masks: Sequence[int], v: int, n: int,
                         colors: int) -> dict[int, int] | None:
    """Complete backtracking search for a proper coloring with at most
    ``colors`` colors; None when exhaustion proves there is none.

    Low-level entry (bitmask edges) shared with the extremal search.
    Deterministic: vertices are tried by descending degree then index, and
    color labels appear in first-use order.
    """
    if colors < 1:
        return None
    deg = [0] * v
    vert_edges: list[list[int]] = [[] for _ in range(v)]
    for ei, m in enumerate(masks):
        mm, x = m, 0
        while mm:
            if mm & 1:
                deg[x] += 1
                vert_edges[x].append(ei)
            mm >>= 1
            x += 1
    order = sorted((x for x in range(v) if deg[x]), key=lambda x: (-deg[x], x))
    if not order:
        return {x: 0 for x in range(v)}

    # per-edge state: (#colored vertices, color of the first one, seen two colors)
    state: list[list] = [[0, -1, False] for _ in masks]
    assign: dict[int, int] = {}
    max_used = [-1] * (len(order) + 1)  # highest color index used before depth t

    def place(x: int, c: int) -> tuple[bool, list[tuple[int, int, int, bool]]]:
        ok, undo = True, []
        for ei in vert_edges[x]:
            cnt, first, safe = state[ei]
            undo.append((ei, cnt, first, safe))
            nsafe = safe or (cnt > 0 and first != c)
            state[ei][0] = cnt + 1
            state[ei][1] = first if cnt else c
            state[ei][2] = nsafe
            if cnt + 1 == n and not nsafe:
                ok = False
        return ok, undo

    def unplace(undo: list[tuple[int, int, int, bool]]) -> None:
        for ei, cnt, first, safe in undo:
            state[ei][0] = cnt
            state[ei][1] = first
            state[ei][2] = safe

    t = 0
    tried = [-1] * len(order)
    undos: list[list] = [None] * len(order)
    while True:
        if t == len(order):
            full = dict.fromkeys(range(v), 0)
            full.update(assign)
            return full
        x = order[t]
        # symmetry breaking: at most one fresh color beyond those used so far
        limit = min(max_used[t] + 1, colors - 1)
        c = tried[t] + 1
        if c > limit:
            tried[t] = -1
            t -= 1
            if t < 0:
                return None
            unplace(undos[t])
            del assign[order[t]]
            continue
        tried[t] = c
        ok, undo = place(x, c)
        if ok:
            assign[x] = c
            undos[t] = undo
            max_used[t + 1] = max(max_used[t], c)
            t += 1
        else:
            unplace(undo)


def chromatic_number(h: Hypergraph, cap: int = 4) -> ColoringResult:
    """Smallest k <= cap admitting a proper coloring, with a witness.

    Complete backtracking per k, so chi = None really means every coloring
    with up to ``cap`` colors leaves some edge monochromatic.
    """
    if cap < 1:
        raise InputError(f"cap must be positive, got {cap}")
    if not h.edges:
        raise InputError("chromatic number needs at least one edge")
    if h.n == 1:
        raise InputError("single-vertex edges are always monochromatic: "
                         "no proper coloring exists for any number of colors")
    for k in range(2, cap + 1):
        coloring = find_proper_coloring(h.masks, h.v, h.n, k)
        if coloring is not None:
            used = len(set(coloring.values()))
            assert used == k, f"minimal k = {k} but witness uses {used} colors"
            return ColoringResult(k, coloring)
    return ColoringResult(None, None)


def clique_three_coloring(h: Hypergraph) -> ColoringResult:
    """Search-free proper coloring of a clique with at most 3 colors.

    Splits the lexicographically first edge e into its first ceil(n/2)
    vertices (color 0) and the rest (color 1); everything outside e gets
    color 2.  Every edge meets e, hence sees two colors.
    """
    if h.n < 2:
        raise InputError(f"need uniformity at least 2, got {h.n}")
    verdict = is_clique(h)
    if not verdict.is_clique:
        raise NotAClique(verdict.witness)
    e = h.edges[0]
    half = (h.n + 1) // 2
    coloring = dict.fromkeys(range(h.v), 2)
    for x in e[:half]:
        coloring[x] = 0
    for x in e[half:]:
        coloring[x] = 1
    assert is_proper_coloring(h, coloring)
    return ColoringResult(len(set(coloring.values())), coloring)


def minimum_transversal(masks: Sequence[int], v: int) -> tuple[int, frozenset[int]]:
    """Exact minimum hitting set of the edge masks via branch-and-bound.

    Branches on the vertices of the first uncovered edge; a greedy cover
    seeds the upper bound and a greedy packing of pairwise-disjoint
    uncovered edges gives the lower bound.  Deterministic: ties everywhere
    go to the lowest vertex index.
    """
    if not masks:
        return 0, frozenset()

    def greedy() -> list[int]:
        chosen: list[int] = []
        left = list(masks)
        while left:
            counts = [0] * v
            for m in left:
                mm, x = m, 0
                while mm:
                    if mm & 1:
                        counts[x] += 1
                    mm >>= 1
                    x += 1
            best = max(range(v), key=lambda x: (counts[x], -x))
            chosen.append(best)
            bit = 1 << best
            left = [m for m in left if not m & bit]
        return chosen

    best = greedy()

    def packing_lb(uncovered: list[int]) -> int:
        used, cnt = 0, 0
        for m in uncovered:
            if not m & used:
                used |= m
                cnt += 1
        return cnt

    def descend(chosen: list[int], uncovered: list[int]) -> None:
        nonlocal best
        if not uncovered:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        if len(chosen) + packing_lb(uncovered) >= len(best):
            return
        mm, x = uncovered[0], 0
        while mm:
            if mm & 1:
                bit = 1 << x
                chosen.append(x)
                descend(chosen, [m for m in uncovered if not m & bit])
                chosen.pop()
            mm >>= 1
            x += 1

    descend([], list(masks))
    cover = frozenset(best)
    assert all(m & mask_of(cover) for m in masks)
    return len(cover), cover


def covering_number(h: Hypergraph) -> CoverResult:
    """Exact covering number with a witness transversal.

    The empty edge family gets tau = 0 by convention, flagged degenerate.
    """
    if not h.edges:
        return CoverResult(0, frozenset(), degenerate=True)
    tau, cover = minimum_transversal(h.masks, h.v)
    return CoverResult(tau, cover)


def vertex_bound_holds(h: Hypergraph) -> bool:
    """v <= 4^n, the vertex-count cap every chromatic-number-3 clique obeys."""
    return h.v <= 4 ** h.n
