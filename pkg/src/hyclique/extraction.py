"""Greedy extraction chains over cliques: grow a vertex set W one or two
vertices at a time while |E(W)| shrinks by at most a controlled factor.

The engine has three layers:
  - a dichotomy probe: either W holds a vertex of degree >= T/|W|, or two
    edges disjoint from W intersect in a size outside the spectrum, or
    neither (exhausted);
  - an amplification step: given such an off-spectrum pair, extend W by one
    vertex keeping |E(W)| >= j*tau/n, or by two keeping >= j*tau^2/n^2
    (tau = 1 + 1/(4m)); one of the two is always achievable, by pigeonhole
    over how E(W) splits around the pair's intersection;
  - the full chain: start at a highest-degree vertex, amplify until W
    reaches the minimal size k at which a degree >= T/k vertex must exist,
    then assemble the edge-count bound k*n^(n-1)/tau^(k-1) + A.

Everything is exact rationals; every step re-asserts its own guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .bounds import a_value, spectrum
from .core import Hypergraph, edge_stats, is_clique, mask_of, vertices_of
from .errors import InputError, NotAClique, PropertyViolation
from .intervals import Interval, exact, sqrt_iv


@dataclass(frozen=True)
class HighDegree:
    """Some x in W has degree >= threshold = T/|W|."""

    vertex: int
    degree: int
    threshold: Fraction


@dataclass(frozen=True)
class OutsidePair:
    """Edges b1 < b2 disjoint from W whose intersection size avoids the spectrum."""

    b1: int
    b2: int
    intersection_size: int


@dataclass(frozen=True)
class Exhausted:
    """No high-degree vertex; every edge pair outside E_W intersects inside
    the spectrum (so the family outside W is certifiable by rank)."""

    outside_count: int


DichotomyOutcome = HighDegree | OutsidePair | Exhausted


@dataclass(frozen=True)
class ExtractionStep:
    kind: str                 # "add-one" | "add-two"
    added: tuple[int, ...]
    j_before: int
    j_after: int
    b1: int
    b2: int
    intersection_size: int    # l = |B1 ∩ B2|
    e1_size: int              # members of E(W) meeting B1 ∩ B2
    e2_size: int              # the rest; they meet both B1\B2 and B2\B1
    claimed_factor: Fraction  # tau/n or tau^2/n^2
    achieved_factor: Fraction  # j_after / j_before
    split_estimate: Interval  # worst-case |E1| the guarantee argument assumes


@dataclass(frozen=True)
class ExtractionTrace:
    n: int
    m: int
    edge_count: int
    a_value: int
    k_target: int                 # minimal window size under the threshold rule
    steps: tuple[ExtractionStep, ...]
    w_final: frozenset[int]
    k: int                        # |w_final|
    j_final: int                  # |E(w_final)|
    threshold_used: Fraction      # starting guarantee T/k_target
    assembled_bound: Fraction     # k * n^(n-1) / tau^(k-1) + A
    termination: str              # "reached-target" | "exhausted"


def _require_clique(h: Hypergraph) -> None:
    verdict = is_clique(h)
    if not verdict.is_clique:
        raise NotAClique(verdict.witness)


def high_degree_or_outside_pair(h: Hypergraph, w: Iterable[int],
                                threshold_numerator: Fraction | int,
                                allowed_sizes: frozenset[int] | set[int]
                                ) -> DichotomyOutcome:
    """Probe W for the dichotomy with numerator T: branch (a) is a vertex
    x in W with deg(x) >= T/|W|; branch (b) is a pair of edges disjoint
    from W intersecting in a size outside ``allowed_sizes``.

    Deterministic: (a) inspects the maximum-degree vertex of W (ties to the
    lowest index) first; (b) scans edge-index pairs lexicographically.
    """
    wset = sorted(set(w))
    if not wset:
        raise InputError("W must be nonempty")
    _require_clique(h)
    t = Fraction(threshold_numerator)

    deg = h.degrees()
    x = min(wset, key=lambda u: (-deg[u], u))
    per_vertex = t / len(wset)
    if deg[x] >= per_vertex:
        return HighDegree(x, deg[x], per_vertex)

    wmask = mask_of(wset)
    outside = [i for i, m in enumerate(h.masks) if not m & wmask]
    for a in range(len(outside)):
        ma = h.masks[outside[a]]
        for b in range(a + 1, len(outside)):
            size = (ma & h.masks[outside[b]]).bit_count()
            if size not in allowed_sizes:
                assert deg[x] < per_vertex
                return OutsidePair(outside[a], outside[b], size)
    return Exhausted(len(outside))


def _derive_m(tau_amp: Fraction) -> int:
    """Recover m from tau = 1 + 1/(4m), validating the shape."""
    step = Fraction(tau_amp) - 1
    if step <= 0:
        raise InputError(f"amplification factor must exceed 1, got {tau_amp}")
    inv = 1 / step
    if inv.denominator != 1 or inv.numerator % 4:
        raise InputError(f"amplification factor must be 1 + 1/(4m), got {tau_amp}")
    m = inv.numerator // 4
    if m < 2:
        raise InputError(f"amplification factor implies m = {m} < 2")
    return m


def _split_estimate(j: int, l: int, n: int) -> Interval:
    """Root of a^2/(j^2 l^2) = (j-a)/(j (n-l)^2): the worst-case |E1|."""
    jl2 = j * l * l
    disc = exact(jl2 * jl2 + 4 * j * j * l * l * (n - l) ** 2)
    return (sqrt_iv(disc) + jl2) / (2 * (n - l) ** 2)


def amplify(h: Hypergraph, w: Iterable[int], b1: int, b2: int,
            tau_amp: Fraction) -> ExtractionStep:
    """Grow W by one or two vertices chosen from an off-spectrum pair.

    Splits E(W) into E1 (edges meeting B1 ∩ B2) and E2 (edges meeting both
    one-sided differences), then takes the best single vertex of B1 ∩ B2 if
    it already achieves j*tau/n, else the best cross pair, which must then
    achieve j*tau^2/n^2.  Ties go to the lowest vertex / lexicographic pair.
    """
    m = _derive_m(tau_amp)
    n = h.n
    spec = spectrum(n, m)
    q = spec.q
    wset = sorted(set(w))
    if not wset:
        raise InputError("W must be nonempty")
    _require_clique(h)
    if not (0 <= b1 < len(h.masks) and 0 <= b2 < len(h.masks) and b1 != b2):
        raise InputError(f"invalid edge indices ({b1}, {b2})")
    wmask = mask_of(wset)
    if h.masks[b1] & wmask or h.masks[b2] & wmask:
        raise InputError("both edges must be disjoint from W")
    core = h.masks[b1] & h.masks[b2]
    l = core.bit_count()
    if not q < l <= n - q:
        raise InputError(
            f"|B1 ∩ B2| = {l} must satisfy {q} < l <= {n - q} (outside the spectrum)")

    stats = edge_stats(h, wset)
    j = len(stats.containing)
    if j == 0:
        raise InputError("E(W) is empty; nothing to amplify")

    e1 = [i for i in stats.containing if h.masks[i] & core]
    e2 = [i for i in stats.containing if not h.masks[i] & core]
    side1 = h.masks[b1] & ~core
    side2 = h.masks[b2] & ~core
    # clique: an E(W) edge missing the core must meet both one-sided parts
    for i in e2:
        assert h.masks[i] & side1 and h.masks[i] & side2

    def count_with(extra_mask: int) -> int:
        want = wmask | extra_mask
        return sum(1 for mm in h.masks if mm & want == want)

    best_x, best_single = None, -1
    for x in vertices_of(core):
        c = count_with(1 << x)
        if c > best_single:
            best_x, best_single = x, c
    best_pair, best_double = None, -1
    for x in vertices_of(side1):
        for y in vertices_of(side2):
            c = count_with((1 << x) | (1 << y))
            if c > best_double:
                best_pair, best_double = (x, y), c

    # pigeonhole floors realized by the maxima
    assert best_single * l >= len(e1)
    assert best_double * (n - l) ** 2 >= len(e2)

    tau = spec.tau_amp
    if best_single >= j * tau / n:
        kind, added, j_after = "add-one", (best_x,), best_single
        claimed = tau / n
    else:
        kind, added, j_after = "add-two", best_pair, best_double
        claimed = tau * tau / (n * n)
        assert j_after >= j * claimed, (
            "amplification guarantee failed: neither branch achieves its factor")
    achieved = Fraction(j_after, j)
    assert achieved >= claimed
    return ExtractionStep(kind, added, j, j_after, min(b1, b2), max(b1, b2),
                          l, len(e1), len(e2), claimed, achieved,
                          _split_estimate(j, l, n))


@dataclass(frozen=True)
class MinimalK:
    k: int
    w0: frozenset[int]
    x: int
    max_degree: int


def threshold_rule(numerator: Fraction | int) -> Callable[[int], Fraction]:
    """The rule i -> numerator/i used by the chain (numerator |E| - A by default)."""
    num = Fraction(numerator)
    return lambda i: num / i


def minimal_k(h: Hypergraph, rule: Callable[[int], Fraction | int]) -> MinimalK:
    """Smallest i such that some W of size i holds a vertex of degree >= rule(i).

    A size-i set works iff the maximum degree reaches rule(i) (put the
    max-degree vertex inside W), so k comes straight from the degree
    sequence; the witness is that vertex padded with the lowest indices.
    """
    if not h.edges:
        raise InputError("minimal window size needs at least one edge")
    _require_clique(h)
    deg = h.degrees()
    x = min(range(h.v), key=lambda u: (-deg[u], u))
    for i in range(1, h.v + 1):
        if deg[x] >= rule(i):
            pad = [u for u in range(h.v) if u != x][: i - 1]
            return MinimalK(i, frozenset([x] + pad), x, deg[x])
    raise InputError("threshold rule unsatisfiable within the vertex count")


def run_extraction(h: Hypergraph, m: int,
                   threshold_numerator: Fraction | int | None = None
                   ) -> ExtractionTrace:
    """Run the full chain on a clique with parameters (n, m).

    The default threshold numerator is |E| - A(n, m); at desk scale A is
    enormous, the minimal window size is 1 and the trace is empty, which is
    exactly the degenerate reading of the chain.  A custom numerator larger
    than the maximum degree produces nontrivial steps.  The assembled bound
    k*n^(n-1)/tau^(k-1) + A (k = |W_final|) is asserted against |E|.
    """
    n = h.n
    if n < 4:
        raise InputError(f"extraction needs uniformity at least 4, got {n}")
    _require_clique(h)
    spec = spectrum(n, m)
    a_val = a_value(n, m)
    t_num = Fraction(threshold_numerator) if threshold_numerator is not None \
        else Fraction(h.edge_count - a_val)
    start = minimal_k(h, threshold_rule(t_num))

    w = {start.x}
    steps: list[ExtractionStep] = []
    termination = "reached-target"
    while len(w) < start.k:
        outcome = high_degree_or_outside_pair(h, w, t_num, spec.members)
        if isinstance(outcome, HighDegree):
            raise AssertionError(
                "high-degree branch inside the chain contradicts minimality of k")
        if isinstance(outcome, Exhausted):
            termination = "exhausted"
            break
        step = amplify(h, w, outcome.b1, outcome.b2, spec.tau_amp)
        w.update(step.added)
        steps.append(step)

    k = len(w)
    j_final = len(edge_stats(h, w).containing)
    threshold_used = t_num / start.k
    guarantee = threshold_used
    for step in steps:
        guarantee *= step.claimed_factor
    assert j_final >= guarantee
    bound = k * Fraction(n ** (n - 1)) / spec.tau_amp ** (k - 1) + a_val
    if h.edge_count > bound:
        raise PropertyViolation(
            f"assembled bound {bound} is below the edge count {h.edge_count}; "
            "the input is outside the bound's hypotheses")
    return ExtractionTrace(n, m, h.edge_count, a_val, start.k, tuple(steps),
                           frozenset(w), k, j_final, threshold_used, bound,
                           termination)


def amplification_chain_holds(n: int, m: int) -> bool:
    """Exact-rational sweep of the per-step gain chain for all admissible l.

    For every l strictly between q and n-q+1 (the off-spectrum sizes):
        l*n/(2(n-l)^2)  >=  n^2/(4m(n-l)^2)  >=  1/(4m),
    hence 1 + l*n/(2(n-l)^2) >= 1 + 1/(4m) = tau.
    """
    spec = spectrum(n, m)
    q = spec.q
    for l in range(q + 1, n - q + 1):
        denom = 2 * (n - l) ** 2
        left = Fraction(l * n, denom)
        mid = Fraction(n * n, 2 * m * denom)
        right = Fraction(1, 4 * m)
        if not left >= mid >= right:
            return False
        if not 1 + left >= spec.tau_amp:
            return False
    return True
