"""Rank certificates for families of n-sets with restricted pairwise intersections.

To each member x of a family we attach the product polynomial
prod_{j in roots} (j - sum_{i in x} y_i), reduced multilinearly
(y_i^k -> y_i), which preserves values on 0/1 points.  If all pairwise
intersection sizes lie in the root set while |x| = n does not, the
evaluation matrix F_x(x') is diagonal with nonzero diagonal, the reduced
polynomials are linearly independent, and the family size is bounded by
the squarefree-monomial count sum_{r<=|roots|} C(v, r).

Ranks are computed exactly over the rationals by fraction-free elimination
with a fixed pivot order (monomials by degree, then lexicographic subset
order), so certificates are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Sequence

from .bounds import Spectrum
from .core import vertices_of
from .errors import InputError

MAX_BASIS_MONOMIALS = 5_000_000


@dataclass(frozen=True)
class MultilinearPoly:
    """Squarefree-monomial polynomial: bitmask of the monomial -> coefficient."""

    v: int
    degree_cap: int
    coeffs: dict[int, Fraction]

    def evaluate(self, point: Iterable[int] | int) -> Fraction:
        """Value at a 0/1 point given as a vertex set or bitmask."""
        pmask = point if isinstance(point, int) else _mask(point)
        return sum((c for m, c in self.coeffs.items() if m & pmask == m),
                   start=Fraction(0))

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """(vertex tuple, coefficient) pairs ordered by degree then subset order."""
        items = [(vertices_of(m), c) for m, c in self.coeffs.items()]
        return sorted(items, key=lambda t: (len(t[0]), t[0]))


@dataclass(frozen=True)
class OracleResult:
    """Pairwise evaluation matrix and the diagonality verdict.

    matrix[mu][nu] = prod_{j in roots} (j - |x_mu ∩ x_nu|).  ``conflict``
    is the first (mu, nu) where diagonality fails: a zero diagonal entry or
    a nonzero off-diagonal one (i.e. an intersection size inside the roots).
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    diag_ok: bool
    conflict: tuple[int, int] | None


@dataclass(frozen=True)
class RankCertificate:
    s: int
    v: int
    n: int
    roots: frozenset[int]
    dim_bound: int               # sum_{r<=|roots|} C(v, r)
    loose_dim_bound: int | None  # sum_{r<=2q} C(v, r) when roots come from a Spectrum
    rank: int
    independent: bool
    diag_ok: bool
    conflict: tuple[int, int] | None


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for x in vertices:
        m |= 1 << x
    return m


def multilinearize_product(x: Iterable[int], roots: Iterable[int],
                           v: int) -> MultilinearPoly:
    """Multilinear reduction of prod_{j in roots} (j - sum_{i in x} y_i).

    Built factor by factor with reduction after each product (ORing
    monomial masks performs y_i^k -> y_i), so the result agrees with the
    unreduced product at every 0/1 point.
    """
    xs = sorted(set(x))
    if xs and (xs[0] < 0 or xs[-1] >= v):
        raise InputError(f"vertex set {xs} outside 0..{v - 1}")
    root_list = sorted(set(roots))
    if not root_list:
        raise InputError("root set must be nonempty")
    poly: dict[int, int] = {0: 1}
    bits = [1 << i for i in xs]
    for j in root_list:
        nxt: dict[int, int] = {}
        for m, cf in poly.items():
            nxt[m] = nxt.get(m, 0) + j * cf
            for b in bits:
                mb = m | b
                nxt[mb] = nxt.get(mb, 0) - cf
        poly = {m: cf for m, cf in nxt.items() if cf}
    return MultilinearPoly(v, len(root_list),
                           {m: Fraction(cf) for m, cf in poly.items()})


def _validate_family(family: Sequence[Iterable[int]], roots: Iterable[int],
                     n: int) -> tuple[list[tuple[int, ...]], list[int]]:
    members = [tuple(sorted(set(x))) for x in family]
    for mem in members:
        if len(mem) != n:
            raise InputError(f"family member {mem} has size {len(mem)}, expected {n}")
    if len(set(members)) != len(members):
        raise InputError("family contains duplicate members")
    root_list = sorted(set(roots))
    if not root_list:
        raise InputError("root set must be nonempty")
    if n in root_list:
        raise InputError(f"root set must not contain the member size n = {n}")
    return members, root_list


def evaluation_oracle(family: Sequence[Iterable[int]], roots: Iterable[int],
                      n: int) -> OracleResult:
    """Evaluate every polynomial at every member and test diagonality.

    A diagonal matrix with nonzero diagonal forces linear independence of
    the reduced polynomials (triangular-system argument), independently of
    any rank computation.
    """
    members, root_list = _validate_family(family, roots, n)
    masks = [_mask(mem) for mem in members]
    s = len(members)
    rows = []
    conflict = None
    for mu in range(s):
        row = []
        for nu in range(s):
            inter = (masks[mu] & masks[nu]).bit_count()
            val = Fraction(1)
            for j in root_list:
                val *= j - inter
            row.append(val)
            bad = (val == 0) if mu == nu else (val != 0)
            if bad and conflict is None:
                conflict = (mu, nu)
        rows.append(tuple(row))
    return OracleResult(tuple(rows), conflict is None, conflict)


def _monomial_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), vertices_of(mask))


def _exact_rank(rows: list[dict[int, int]]) -> int:
    """Rank over the rationals via fraction-free elimination.

    Pivot columns follow the (degree, subset-lex) monomial order; pivot rows
    follow family order.  Rows stay integer with gcd normalization.
    """
    work = [dict(r) for r in rows]
    cols = sorted({m for r in work for m in r}, key=_monomial_key)
    used = [False] * len(work)
    rank = 0
    for col in cols:
        piv = next((i for i, r in enumerate(work)
                    if not used[i] and r.get(col)), None)
        if piv is None:
            continue
        used[piv] = True
        rank += 1
        pr, pv = work[piv], work[piv][col]
        for i, r in enumerate(work):
            if used[i] or not r.get(col):
                continue
            cv = r[col]
            merged = {m: pv * cf for m, cf in r.items()}
            for m, cf in pr.items():
                merged[m] = merged.get(m, 0) - cv * cf
            merged = {m: cf for m, cf in merged.items() if cf}
            if merged:
                g = gcd(*merged.values()) if len(merged) > 1 else abs(next(iter(merged.values())))
                if g > 1:
                    merged = {m: cf // g for m, cf in merged.items()}
            work[i] = merged
    return rank


def rank_certificate(family: Sequence[Iterable[int]], roots: Iterable[int],
                     v: int, n: int,
                     source: Spectrum | None = None) -> RankCertificate:
    """Build the reduced polynomials of a family and certify their exact rank.

    The family's pairwise intersections are NOT required to lie in the root
    set: the certificate reports what it finds, with diag_ok false when they
    do not.  When ``source`` is given (roots = spectrum minus its top), the
    looser dimension count sum_{r<=2q} C(v, r) is reported alongside.
    """
    members, root_list = _validate_family(family, roots, n)
    depth = len(root_list)
    dim_bound = 0
    for r in range(depth + 1):
        dim_bound += comb(v, r)
        if dim_bound > MAX_BASIS_MONOMIALS:
            raise InputError(
                f"monomial basis exceeds {MAX_BASIS_MONOMIALS}; desk-scale only")
    loose = None
    if source is not None:
        loose = sum(comb(v, r) for r in range(2 * source.q + 1))
    polys = [multilinearize_product(mem, root_list, v) for mem in members]
    int_rows = [{m: cf.numerator for m, cf in p.coeffs.items()} for p in polys]
    rank = _exact_rank(int_rows)
    s = len(members)
    independent = rank == s
    oracle = evaluation_oracle(members, root_list, n)
    if oracle.diag_ok:
        assert independent, "diagonal evaluation matrix must force full rank"
    if independent:
        assert s <= dim_bound, "rank cannot exceed the monomial count"
    return RankCertificate(s, v, n, frozenset(root_list), dim_bound, loose,
                           rank, independent, oracle.diag_ok, oracle.conflict)
