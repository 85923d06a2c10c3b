"""Directed-rounding interval arithmetic with exact rational endpoints.

Field operations on Fraction endpoints are exact, so no rounding ever
happens there.  Enclosures of exp, log and the constant e come from
mpmath's interval context and are lifted back to exact dyadic rationals;
square roots use integer isqrt with explicit scaling and need no mpmath.
Every function returns an Interval guaranteed to contain the real value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath

_QLike = int | Fraction


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    def __add__(self, other: "Interval | _QLike") -> "Interval":
        other = exact(other) if not isinstance(other, Interval) else other
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: "Interval | _QLike") -> "Interval":
        other = exact(other) if not isinstance(other, Interval) else other
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other: _QLike) -> "Interval":
        return exact(other) - self

    def __mul__(self, other: "Interval | _QLike") -> "Interval":
        other = exact(other) if not isinstance(other, Interval) else other
        cands = (self.lo * other.lo, self.lo * other.hi,
                 self.hi * other.lo, self.hi * other.hi)
        return Interval(min(cands), max(cands))

    __rmul__ = __mul__

    def __truediv__(self, other: "Interval | _QLike") -> "Interval":
        other = exact(other) if not isinstance(other, Interval) else other
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval divisor contains zero")
        cands = (self.lo / other.lo, self.lo / other.hi,
                 self.hi / other.lo, self.hi / other.hi)
        return Interval(min(cands), max(cands))

    def __rtruediv__(self, other: _QLike) -> "Interval":
        return exact(other) / self

    def __pow__(self, k: int) -> "Interval":
        if not isinstance(k, int):
            raise TypeError("use pow_iv for non-integer exponents")
        if k < 0:
            return exact(1) / self ** (-k)
        if k == 0:
            return exact(1)
        a, b = self.lo ** k, self.hi ** k
        if k % 2 == 1 or self.lo >= 0:
            return Interval(a, b)
        if self.hi <= 0:
            return Interval(b, a)
        return Interval(Fraction(0), max(a, b))

    def contains(self, x: _QLike) -> bool:
        return self.lo <= x <= self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __float__(self) -> float:
        return float(self.midpoint)


def exact(x: _QLike) -> Interval:
    q = Fraction(x)
    return Interval(q, q)


def _mpf_tuple_to_fraction(t: tuple) -> Fraction:
    sign, man, exp, _bc = t
    man = int(man)
    if man == 0:
        if exp == 0:
            return Fraction(0)
        raise ValueError("non-finite interval endpoint")
    val = Fraction(-man if sign else man)
    return val * Fraction(2) ** exp


def _lift(ivmpf) -> Interval:
    lo_t, hi_t = ivmpf._mpi_
    return Interval(_mpf_tuple_to_fraction(lo_t), _mpf_tuple_to_fraction(hi_t))


def _point_enclosure(fn_name: str, x: Fraction, prec: int) -> Interval:
    """Rigorous enclosure of fn(x) for exact rational x via mpmath's iv context."""
    ctx = mpmath.iv
    old = ctx.prec
    try:
        ctx.prec = prec
        arg = ctx.mpf(x.numerator) / ctx.mpf(x.denominator)
        return _lift(getattr(ctx, fn_name)(arg))
    finally:
        ctx.prec = old


def exp_iv(x: "Interval | _QLike", prec: int = 120) -> Interval:
    x = exact(x) if not isinstance(x, Interval) else x
    return Interval(_point_enclosure("exp", x.lo, prec).lo,
                    _point_enclosure("exp", x.hi, prec).hi)


def log_iv(x: "Interval | _QLike", prec: int = 120) -> Interval:
    x = exact(x) if not isinstance(x, Interval) else x
    if x.lo <= 0:
        raise ValueError("log of a non-positive interval")
    return Interval(_point_enclosure("log", x.lo, prec).lo,
                    _point_enclosure("log", x.hi, prec).hi)


def e_iv(prec: int = 120) -> Interval:
    return exp_iv(Fraction(1), prec)


def _sqrt_down(x: Fraction, bits: int) -> Fraction:
    if x == 0:
        return Fraction(0)
    t = (x.numerator << 2 * bits) * x.denominator
    return Fraction(math.isqrt(t), x.denominator << bits)


def _sqrt_up(x: Fraction, bits: int) -> Fraction:
    if x == 0:
        return Fraction(0)
    t = (x.numerator << 2 * bits) * x.denominator
    r = math.isqrt(t)
    if r * r != t:
        r += 1
    return Fraction(r, x.denominator << bits)


def sqrt_iv(x: "Interval | _QLike", bits: int = 120) -> Interval:
    """Enclosure of the square root; sqrt(p/q) = sqrt(p*q)/q with isqrt scaling."""
    x = exact(x) if not isinstance(x, Interval) else x
    if x.lo < 0:
        raise ValueError("sqrt of a negative interval")
    return Interval(_sqrt_down(x.lo, bits), _sqrt_up(x.hi, bits))


def pow_iv(base: "Interval | _QLike", exponent: _QLike, prec: int = 120) -> Interval:
    """base ** exponent for rational exponents; exact when the exponent is integral."""
    base = exact(base) if not isinstance(base, Interval) else base
    exponent = Fraction(exponent)
    if exponent.denominator == 1:
        return base ** int(exponent)
    if base.lo <= 0:
        raise ValueError("fractional power needs a positive base interval")
    return exp_iv(log_iv(base, prec) * exponent, prec)


def refine_floor(make: Callable[[int], Interval], prec: int = 120,
                 max_prec: int = 1 << 14) -> int:
    """floor() of a real given by enclosures at increasing precision.

    Only terminates when the value is not an exact integer, which holds for
    the transcendental expressions this toolkit takes floors of.
    """
    while prec <= max_prec:
        box = make(prec)
        lo, hi = math.floor(box.lo), math.floor(box.hi)
        if lo == hi:
            return lo
        prec *= 2
    raise ValueError("floor did not stabilize; value may be an exact integer")


def decimal_str(x: "Interval | Fraction", digits: int = 6) -> str:
    """Rounded decimal rendering for display; the exact form stays authoritative."""
    q = x.midpoint if isinstance(x, Interval) else Fraction(x)
    if q == 0:
        return "0"
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = round(q * 10 ** digits)
    s = str(scaled).rjust(digits + 1, "0")
    whole, frac = s[:-digits], s[-digits:].rstrip("0")
    return sign + whole + ("." + frac if frac else "")
