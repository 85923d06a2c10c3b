"""Exact evaluation of the toolkit's bound catalog for n-uniform cliques.

All integer and rational quantities are computed exactly; expressions
involving e, sqrt or log are returned as certified enclosing intervals
(see intervals.py).  Verdicts (every boolean below) are decided purely on
exact integers/rationals, never on floating point.

Bound catalog for the maximum edge count of an n-uniform clique with
chromatic number 3 on v vertices:

  T1: the classical two-sided bound n!*(1/1!+..+1/n!) <= max|E| <= n^n.
  T2: the c*n^(n-1/2)*log n form, evaluated for a caller-supplied c.
  T3: 4m*n^(n-1) + A(n,m), valid when v <= n^m; A(n,m) is the rank ceiling
      sum_{i<=2q} C(n^m, i) with q = floor(n/(2m)).
  T4: the subset-counting refinement n^(n-a)*C(v,a)/C(n,a), with the
      closed-form parameter choice a = floor((1-1/(ec))n)+1 for c = n^2/v.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InputError
from .intervals import (
    Interval,
    e_iv,
    exact,
    exp_iv,
    log_iv,
    pow_iv,
    refine_floor,
    sqrt_iv,
)

DEFAULT_PREC = 120


@dataclass(frozen=True)
class Spectrum:
    """The allowed-intersection structure for parameters (n, m).

    ``members`` is {1..q} | {n-q+1..n} with q = floor(n/(2m)); the two
    parts are disjoint and never cover {1..n}.  ``tau_amp`` = 1 + 1/(4m)
    is the per-step gain factor of the extraction chain.
    """

    n: int
    m: int
    q: int
    members: frozenset[int]
    tau_amp: Fraction

    def polynomial_roots(self) -> frozenset[int]:
        """members minus the top value n: the root set of the certificate polynomials."""
        return self.members - {self.n}


def spectrum(n: int, m: int) -> Spectrum:
    if m < 2:
        raise InputError(f"m must be at least 2, got {m}")
    q = n // (2 * m)
    if q < 1:
        raise InputError(f"q = floor({n}/{2 * m}) = 0; need m <= n/2")
    members = frozenset(range(1, q + 1)) | frozenset(range(n - q + 1, n + 1))
    return Spectrum(n, m, q, members, 1 + Fraction(1, 4 * m))


def factorial_sum_lower(n: int) -> int:
    """n! * (1/1! + 1/2! + ... + 1/n!), an exact integer.

    Computed by the recurrence D(k) = k*D(k-1) + 1 with D(1) = 1.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    d = 1
    for k in range(2, n + 1):
        d = k * d + 1
    return d


def a_value(n: int, m: int) -> int:
    """sum_{i=0}^{2q} C(n^m, i): the rank ceiling for families of n-sets on
    n^m points whose pairwise intersection sizes all lie in the spectrum."""
    spec = spectrum(n, m)
    ground = n ** m
    return sum(comb(ground, i) for i in range(2 * spec.q + 1))


def a_prime_interval(n: int, m: int, prec: int = DEFAULT_PREC) -> Interval:
    """(n/m + 1) * (e/(2q))^(n/m), the normalized asymptotic form of a_value."""
    spec = spectrum(n, m)
    base = e_iv(prec) / (2 * spec.q)
    return pow_iv(base, Fraction(n, m), prec) * (Fraction(n, m) + 1)


def subset_bound(n: int, k: int) -> int:
    """n^(n-k): the cap on |E(W)| over |W| = k in a chromatic-number-3 clique."""
    if not 0 <= k <= n:
        raise InputError(f"k must lie in 0..{n}, got {k}")
    return n ** (n - k)


def subset_counting_bound(n: int, v: int, a: int) -> Fraction:
    """n^(n-a) * C(v,a) / C(n,a): edge-count cap via counting a-subsets."""
    return Fraction(n ** (n - a) * comb(v, a), comb(n, a))


@dataclass(frozen=True)
class Theorem4Block:
    """T4 quantities for user-supplied c with v <= n^2/c implied."""

    c: Fraction
    d: Interval            # c * e^(2/(ec) - 1)
    closed_bound: Interval  # (e^(3/2)/sqrt(c)) * (n/d)^n
    a_raw: int             # floor((1 - 1/(ec)) * n) + 1, before clamping
    a_clamped: int         # a_raw clamped into 2..n-1
    finite_bound: Fraction  # subset_counting_bound at a_clamped


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int | None
    v: int | None
    c: Fraction | None
    t1_lower: int
    t1_upper: int
    spectrum: Spectrum | None
    a_value: int | None
    a_prime: Interval | None
    t3_bound: int | None
    t2_form: Interval | None
    theorem4: Theorem4Block | None

    def subset_bound(self, k: int) -> int:
        return subset_bound(self.n, k)


def _t4_d(c: Fraction, prec: int) -> Interval:
    expo = Fraction(2, 1) / (e_iv(prec) * c) - 1
    return exp_iv(expo, prec) * c


def _t4_a_raw(n: int, c: Fraction, prec: int) -> int:
    def make(p: int) -> Interval:
        return (1 - exact(1) / (e_iv(p) * c)) * n

    return refine_floor(make, prec) + 1


def theorem4_block(n: int, v: int, c: Fraction, prec: int = DEFAULT_PREC) -> Theorem4Block:
    if v < n:
        raise InputError(f"need v >= n, got v={v}, n={n}")
    if not 1 < c < n:
        raise InputError(f"c must lie strictly between 1 and n, got {c}")
    d = _t4_d(c, prec)
    closed = (exp_iv(Fraction(3, 2), prec) / sqrt_iv(c, prec)) * (exact(n) / d) ** n
    a_raw = _t4_a_raw(n, c, prec)
    a_clamped = min(max(a_raw, 2), n - 1)
    return Theorem4Block(c, d, closed, a_raw, a_clamped,
                         subset_counting_bound(n, v, a_clamped))


def bound_report(n: int, m: int | None = None, v: int | None = None,
                 c: Fraction | int | None = None,
                 prec: int = DEFAULT_PREC) -> BoundReport:
    """Evaluate the full bound catalog at (n, m, v, c).

    m unlocks the spectrum-dependent fields (a_value, a_prime, t3_bound);
    c unlocks t2_form; v and c together unlock the T4 block, which requires
    1 < c < n.  Everything else is always computed.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    t1_lower = factorial_sum_lower(n)
    t1_upper = n ** n

    spec = a_val = a_pr = t3 = None
    if m is not None:
        spec = spectrum(n, m)
        a_val = a_value(n, m)
        a_pr = a_prime_interval(n, m, prec)
        t3 = 4 * m * n ** (n - 1) + a_val

    c_frac = t2 = None
    if c is not None:
        c_frac = Fraction(c)
        if c_frac <= 0:
            raise InputError(f"c must be positive, got {c_frac}")
        if n == 1:
            t2 = exact(0)
        else:
            t2 = (log_iv(n, prec) / sqrt_iv(n, prec)) * (c_frac * n ** n)

    t4 = None
    if v is not None and c_frac is not None:
        t4 = theorem4_block(n, v, c_frac, prec)

    return BoundReport(n, m, v, c_frac, t1_lower, t1_upper,
                       spec, a_val, a_pr, t3, t2, t4)


@dataclass(frozen=True)
class Theorem4FiniteResult:
    """Exact minimization of the subset-counting bound over a.

    ``values`` holds every swept (a, bound) pair.  The rule_* fields report
    the closed-form choice a = floor((1 - 1/(ec))n) + 1 for c = n^2/v,
    raw and clamped into 2..n-1; they are absent when n^2/v <= 1.
    """

    n: int
    v: int
    a_star: int
    bound: Fraction
    values: tuple[tuple[int, Fraction], ...]
    c_ratio: Fraction | None
    rule_a_raw: int | None
    rule_a: int | None
    rule_bound: Fraction | None


def theorem4_finite(n: int, v: int, a: int | None = None,
                    prec: int = DEFAULT_PREC) -> Theorem4FiniteResult:
    """Evaluate n^(n-a)*C(v,a)/C(n,a) at a, or minimize it over a in 2..n-1."""
    if n < 2 or v < n:
        raise InputError(f"need v >= n >= 2, got n={n}, v={v}")
    if a is not None:
        if not 1 < a < n:
            raise InputError(f"a must lie strictly between 1 and {n}, got {a}")
        values = ((a, subset_counting_bound(n, v, a)),)
    else:
        if n < 3:
            raise InputError(f"no admissible a exists for n={n}")
        values = tuple((k, subset_counting_bound(n, v, k)) for k in range(2, n))
    a_star, bound = min(values, key=lambda t: (t[1], t[0]))

    c_ratio = Fraction(n * n, v)
    rule_a_raw = rule_a = rule_bound = None
    if c_ratio > 1:
        rule_a_raw = _t4_a_raw(n, c_ratio, prec)
        rule_a = min(max(rule_a_raw, 2), n - 1)
        rule_bound = subset_counting_bound(n, v, rule_a)
    else:
        c_ratio = None
    return Theorem4FiniteResult(n, v, a_star, bound, values,
                                c_ratio, rule_a_raw, rule_a, rule_bound)


@dataclass(frozen=True)
class AmplificationResult:
    """Exact-rational check that sup_k k/tau^(k-1) <= 4m for tau = 1 + 1/(4m).

    ``holds`` additionally requires the sweep-sufficiency certificate: the
    sequence is strictly decreasing at k_max (and k_max > 4m makes it
    decreasing forever after), so the swept maximum is the true supremum.
    """

    m: int
    k_max: int
    sup_value: Fraction
    argmax: int
    holds: bool
    decreasing_at_end: bool


def amplification_check(m: int, k_max: int) -> AmplificationResult:
    if m < 2:
        raise InputError(f"m must be at least 2, got {m}")
    if k_max < 8 * m:
        raise InputError(f"k_max must be at least 8m = {8 * m}, got {k_max}")
    tau = 1 + Fraction(1, 4 * m)
    power = Fraction(1)  # tau^(k-1)
    best, arg = Fraction(0), 0
    last = Fraction(0)
    for k in range(1, k_max + 2):
        val = k / power
        if k <= k_max and val > best:
            best, arg = val, k
        if k == k_max:
            last = val
        power *= tau
    decreasing = val < last  # val is now f(k_max + 1)
    holds = decreasing and k_max > 4 * m and best <= 4 * m
    return AmplificationResult(m, k_max, best, arg, holds, decreasing)
