"""Desk-scale extremal search for cliques with chromatic number 3 (mode
"chi3") or covering number n (mode "tau-n"), plus brute-force verification
of the subset containment bound |E(W)| <= n^(n-k).

The search walks the canonical set-enumeration tree: families are built one
edge at a time in ascending candidate order, each new edge intersecting all
current ones, so every family is visited exactly once.  Children are
explored spread-first (smallest maximum overlap with the current family,
then most new vertices), which drives the first descent toward projective-
plane-like witnesses.  Both mode predicates are monotone under adding
edges, so a predicate verdict is inherited down the subtree once true.

Pruning:
  - chi3 mode drops any branch whose maximum degree exceeds n^(n-1), which
    the subset bound forbids for every chromatic-number-3 descendant;
  - for n >= 3 a signature memo (sorted degree sequence + sorted pairwise
    intersection multiset) collapses repeated isomorph classes.  Signature
    collisions between non-isomorphic families can hide parts of the tree,
    so exhaustiveness is only ever claimed for n = 2, where the memo is off
    and a hard-coded star/triangle dichotomy cross-checks the result.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from random import Random
from typing import Iterable

from .chi_tau import chromatic_number, covering_number, find_proper_coloring, minimum_transversal
from .core import Hypergraph, is_clique, mask_of, render_hypergraph
from .errors import InputError, NotAClique, PropertyViolation

MODES = ("chi3", "tau-n")
MAX_CANDIDATE_EDGES = 5000
RECORDS_ENV = "HYCLIQUE_RECORDS_DIR"


@dataclass(frozen=True)
class SearchBudget:
    seconds: float | None = None
    max_nodes: int | None = None


@dataclass(frozen=True)
class SearchRecord:
    n: int
    mode: str
    v_cap: int
    seed: int
    best_size: int
    best_instance: Hypergraph | None
    exhaustive: bool
    nodes_explored: int
    elapsed: float
    record_path: Path | None


@dataclass(frozen=True)
class SubsetRow:
    k: int
    max_containment: int
    cap: int  # n^(n-k)


@dataclass(frozen=True)
class SubsetBoundReport:
    n: int
    k_max: int
    rows: tuple[SubsetRow, ...]


def records_directory(records_dir: str | Path | None = None) -> Path:
    """Resolve the witness directory: argument, else $HYCLIQUE_RECORDS_DIR,
    else ./records."""
    if records_dir is not None:
        return Path(records_dir)
    env = os.environ.get(RECORDS_ENV)
    return Path(env) if env else Path("records")


class _StopSearch(Exception):
    pass


def _mode_predicate(mode: str, n: int, v: int, masks: list[int]) -> bool:
    if mode == "chi3":
        return find_proper_coloring(masks, v, n, 2) is None
    return minimum_transversal(masks, v)[0] == n


def extremal_search(n: int, v_cap: int, mode: str,
                    budget: SearchBudget | None = None, seed: int = 0,
                    records_dir: str | Path | None = None) -> SearchRecord:
    """Largest clique (by edge count) within v_cap vertices satisfying the mode.

    Deterministic for a fixed (seed, v_cap) and node budget; under a
    wall-clock budget the explored-node count is recorded so a run can be
    reproduced by node count.  The best witness is re-validated through the
    chromatic/covering checkers and persisted as ``<mode>-n<n>-e<count>.hg``
    in the records directory.
    """
    if n < 2:
        raise InputError(f"search needs uniformity at least 2, got {n}")
    if v_cap < n:
        raise InputError(f"v_cap must be at least n = {n}, got {v_cap}")
    if mode not in MODES:
        raise InputError(f"mode must be one of {MODES}, got {mode!r}")
    budget = budget or SearchBudget()

    candidates = list(combinations(range(v_cap), n))
    if len(candidates) > MAX_CANDIDATE_EDGES:
        raise InputError(
            f"{len(candidates)} candidate edges exceed the desk-scale cap "
            f"{MAX_CANDIDATE_EDGES}; lower v_cap")
    cmasks = [mask_of(c) for c in candidates]
    compat = [0] * len(candidates)
    for i in range(len(candidates)):
        for j in range(i + 1, len(candidates)):
            if cmasks[i] & cmasks[j]:
                compat[i] |= 1 << j
                compat[j] |= 1 << i

    rng = Random(seed) if seed else None
    deg_cap = n ** (n - 1)
    start = time.perf_counter()
    deadline = start + budget.seconds if budget.seconds is not None else None

    best_size = 0
    best_edges: tuple[tuple[int, ...], ...] | None = None
    nodes = 0
    truncated = False
    seen_signatures: set = set()
    use_memo = n >= 3

    family: list[int] = []
    degs = [0] * v_cap
    pair_sizes: list[int] = []

    def signature() -> tuple:
        return (tuple(sorted(d for d in degs if d)), tuple(sorted(pair_sizes)))

    def child_order(ext: list[int]) -> list[int]:
        if not family:
            return ext

        def key(c: int) -> tuple:
            cm = cmasks[c]
            worst = max((cm & cmasks[f]).bit_count() for f in family)
            new = sum(1 for x in candidates[c] if degs[x] == 0)
            jitter = rng.random() if rng else 0.0
            return (worst, -new, jitter, c)

        return sorted(ext, key=key)

    def visit(avail: int, last: int, pred_true: bool) -> None:
        nonlocal nodes, truncated, best_size, best_edges
        nodes += 1
        if (budget.max_nodes is not None and nodes > budget.max_nodes) or \
           (deadline is not None and time.perf_counter() > deadline):
            truncated = True
            raise _StopSearch
        size = len(family)
        if size > 0:
            if not pred_true and size > best_size:
                pred_true = _mode_predicate(mode, n, v_cap, [cmasks[f] for f in family])
            if pred_true:
                edges_now = tuple(candidates[f] for f in family)
                if size > best_size or (size == best_size and
                                        best_edges is not None and edges_now < best_edges):
                    best_size, best_edges = size, edges_now
            if use_memo:
                sig = signature()
                if sig in seen_signatures:
                    return
                seen_signatures.add(sig)
        ext = []
        m = avail >> (last + 1)
        c = last + 1
        while m:
            if m & 1:
                ext.append(c)
            m >>= 1
            c += 1
        for c in child_order(ext):
            if mode == "chi3" and any(degs[x] + 1 > deg_cap for x in candidates[c]):
                continue
            family.append(c)
            for x in candidates[c]:
                degs[x] += 1
            added_pairs = [(cmasks[c] & cmasks[f]).bit_count() for f in family[:-1]]
            pair_sizes.extend(added_pairs)
            visit(avail & compat[c], c, pred_true)
            del pair_sizes[len(pair_sizes) - len(added_pairs):]
            for x in candidates[c]:
                degs[x] -= 1
            family.pop()

    try:
        visit((1 << len(candidates)) - 1, -1, False)
    except _StopSearch:
        pass
    elapsed = time.perf_counter() - start
    exhaustive = (not truncated) and n == 2

    if n == 2 and not truncated:
        expected = 3 if v_cap >= 3 else 0
        if best_size != expected:
            raise PropertyViolation(
                f"n=2 structural cross-check failed: every 2-uniform "
                f"intersecting family is a star or a triangle, so the best "
                f"should be {expected}, got {best_size}")

    instance = None
    path = None
    if best_edges is not None:
        instance = Hypergraph.from_edges(n, v_cap, best_edges)
        _revalidate(instance, mode)
        if mode == "chi3":
            from .bounds import a_value as _a_value
            assert best_size <= n ** n
            for m_par in range(2, n // 2 + 1):
                if v_cap <= n ** m_par:
                    t3 = 4 * m_par * n ** (n - 1) + _a_value(n, m_par)
                    assert best_size <= t3
        directory = records_directory(records_dir)
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / f"{mode}-n{n}-e{best_size}.hg"
        path.write_text(f"# found by extremal_search seed={seed} v_cap={v_cap}\n"
                        + render_hypergraph(instance))
    return SearchRecord(n, mode, v_cap, seed, best_size, instance, exhaustive,
                        nodes, elapsed, path)


def _revalidate(h: Hypergraph, mode: str) -> None:
    """Independent re-check of a discovered witness through the public checkers."""
    verdict = is_clique(h)
    if not verdict.is_clique:
        raise PropertyViolation(f"witness is not a clique: {verdict.witness}")
    tau = covering_number(h).tau
    if mode == "chi3":
        if chromatic_number(h, 3).chi != 3:
            raise PropertyViolation("witness fails the chromatic-number-3 predicate")
        if tau != h.n:
            raise PropertyViolation(
                f"chromatic number 3 forces covering number {h.n}, got {tau}")
    else:
        if tau != h.n:
            raise PropertyViolation("witness fails the covering-number-n predicate")


def verify_subset_bound(h: Hypergraph, k_max: int | None = None) -> SubsetBoundReport:
    """Check max_{|W|=k} |E(W)| <= n^(n-k) for k = 1..k_max on a
    chromatic-number-3 clique.

    Only W inside at least one edge can have E(W) nonempty, so the maximum
    is taken over k-subsets of edges.  Any failure raises: the bound is a
    theorem for these hypotheses, so a violation means a broken
    implementation (or a miscertified input) and must halt the build.
    """
    n = h.n
    if k_max is None:
        k_max = n
    if not 1 <= k_max <= n:
        raise InputError(f"k_max must lie in 1..{n}, got {k_max}")
    verdict = is_clique(h)
    if not verdict.is_clique:
        raise NotAClique(verdict.witness)
    chi = chromatic_number(h, 3).chi
    if chi != 3:
        raise PropertyViolation(
            f"subset bound hypothesis needs chromatic number 3, got {chi}")
    rows = []
    for k in range(1, k_max + 1):
        wmasks = {mask_of(w) for e in h.edges for w in combinations(e, k)}
        biggest = 0
        for wm in wmasks:
            count = sum(1 for m in h.masks if m & wm == wm)
            biggest = max(biggest, count)
        cap = n ** (n - k)
        if biggest > cap:
            raise PropertyViolation(
                f"subset bound failed at k={k}: max |E(W)| = {biggest} > {cap}")
        rows.append(SubsetRow(k, biggest, cap))
    return SubsetBoundReport(n, k_max, tuple(rows))
