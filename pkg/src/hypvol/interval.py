"""Outward-rounded interval arithmetic on double-precision endpoints.

No rounding-mode control is used.  Each base operation is evaluated in
round-to-nearest and the exact rounding error is recovered with an
error-free transformation (TwoSum / Dekker's TwoProduct); an endpoint is
moved one representable value outward only when the rounded result lies on
the wrong side of the exact value.  Exact operations therefore stay exact,
and inexact ones cost at most one ulp of slack.  When the operands are too
large or too small for the transformations to be exact, the endpoint is
stepped outward unconditionally.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace
from decimal import Decimal
from fractions import Fraction
from typing import Iterator, Union

__all__ = [
    "DomainError",
    "Interval",
    "NumericConfig",
    "get_config",
    "numeric_config",
    "make",
    "hull",
    "intersect",
    "width",
    "contains",
    "bisect",
    "next_up",
    "next_down",
]


class DomainError(ValueError):
    """An operand lies (certainly or possibly) outside a function's domain."""


@dataclass(frozen=True)
class NumericConfig:
    # relative tolerance for clamping tiny dips below a domain edge (sqrt at 0, arccosh at 1)
    clamp_tol: float = 1e-12
    # outward steps added to libm transcendental results
    slack_steps: int = 2


_CONFIG: ContextVar[NumericConfig] = ContextVar("hypvol_numeric_config", default=NumericConfig())


def get_config() -> NumericConfig:
    return _CONFIG.get()


@contextmanager
def numeric_config(**overrides) -> Iterator[NumericConfig]:
    """Temporarily override fields of the active :class:`NumericConfig`."""
    cfg = replace(_CONFIG.get(), **overrides)
    if cfg.clamp_tol < 0 or cfg.slack_steps < 1:
        raise ValueError(f"invalid numeric config {cfg}")
    token = _CONFIG.set(cfg)
    try:
        yield cfg
    finally:
        _CONFIG.reset(token)


_INF = math.inf


def next_up(x: float) -> float:
    return math.nextafter(x, _INF)


def next_down(x: float) -> float:
    return math.nextafter(x, -_INF)


# ---------------------------------------------------------------------------
# error-free transformations

_SPLITTER = 134217729.0  # 2**27 + 1
_BIG = 2.0**995
_TINY = 2.0**-900


def _split(a: float) -> tuple[float, float]:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def _two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def _safe(*xs: float) -> bool:
    """True when TwoProduct-based error recovery is exact for these magnitudes."""
    for x in xs:
        ax = abs(x)
        if ax > _BIG or (ax != 0.0 and ax < _TINY):
            return False
    return True


def _check_finite(x: float) -> float:
    if not math.isfinite(x):
        raise OverflowError("interval endpoint overflowed")
    return x


def _add_rd(a: float, b: float) -> float:
    s, e = _two_sum(a, b)
    _check_finite(s)
    return next_down(s) if e < 0 else s


def _add_ru(a: float, b: float) -> float:
    s, e = _two_sum(a, b)
    _check_finite(s)
    return next_up(s) if e > 0 else s


def _mul_rd(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    p = _check_finite(a * b)
    if not _safe(a, b, p) or (p == 0.0 and a != 0.0 and b != 0.0):
        return next_down(p)
    _, e = _two_prod(a, b)
    return next_down(p) if e < 0 else p


def _mul_ru(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    p = _check_finite(a * b)
    if not _safe(a, b, p) or (p == 0.0 and a != 0.0 and b != 0.0):
        return next_up(p)
    _, e = _two_prod(a, b)
    return next_up(p) if e > 0 else p


def _div_residual_sign(a: float, b: float, q: float) -> int:
    """Sign of (a/b - q) for the rounded quotient q, or 2 if unknown."""
    if a == 0.0:
        return 0
    if not _safe(a, b, q) or (q == 0.0 and a != 0.0):
        return 2
    p, e = _two_prod(q, b)
    r = (a - p) - e
    if r == 0.0:
        return 0
    return 1 if (r > 0) == (b > 0) else -1


def _div_rd(a: float, b: float) -> float:
    q = _check_finite(a / b)
    sign = _div_residual_sign(a, b, q)
    return q if sign in (0, 1) else next_down(q)


def _div_ru(a: float, b: float) -> float:
    q = _check_finite(a / b)
    sign = _div_residual_sign(a, b, q)
    return q if sign in (0, -1) else next_up(q)


def _sqrt_residual_sign(a: float, s: float) -> int:
    if not _safe(a, s) or s == 0.0:
        return 0 if a == 0.0 else 2
    p, e = _two_prod(s, s)
    r = (a - p) - e
    return (r > 0) - (r < 0)


def _sqrt_rd(a: float) -> float:
    s = math.sqrt(a)
    sign = _sqrt_residual_sign(a, s)
    return s if sign in (0, 1) else max(0.0, next_down(s))


def _sqrt_ru(a: float) -> float:
    s = math.sqrt(a)
    sign = _sqrt_residual_sign(a, s)
    return s if sign in (0, -1) else next_up(s)


# ---------------------------------------------------------------------------

Number = Union[int, float, Fraction, str, "Interval"]


def _float_below(q: Fraction) -> float:
    f = float(q)
    return f if Fraction(f) <= q else next_down(f)


def _float_above(q: Fraction) -> float:
    f = float(q)
    return f if Fraction(f) >= q else next_up(f)


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval ``[lo, hi]`` with finite double endpoints.

    Arithmetic operators accept other intervals, ints, floats (taken as
    exact machine numbers), Fractions and decimal strings (enclosed, never
    rounded to a single value).
    """

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError(f"interval endpoints must be finite, got [{self.lo}, {self.hi}]")
        if lo > hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")
        # normalise -0.0 and int endpoints
        object.__setattr__(self, "lo", lo + 0.0)
        object.__setattr__(self, "hi", hi + 0.0)

    # -- construction ------------------------------------------------------

    @classmethod
    def point(cls, x: float) -> Interval:
        return cls(x, x)

    @classmethod
    def from_fraction(cls, lo: Fraction, hi: Fraction | None = None) -> Interval:
        hi = lo if hi is None else hi
        return cls(_float_below(Fraction(lo)), _float_above(Fraction(hi)))

    @classmethod
    def from_decimal(cls, lo: str, hi: str | None = None) -> Interval:
        """Tightest double interval enclosing the decimal literal(s)."""
        flo = Fraction(Decimal(lo.strip()))
        fhi = flo if hi is None else Fraction(Decimal(hi.strip()))
        if flo > fhi:
            raise ValueError(f"empty interval: {lo} > {hi}")
        return cls.from_fraction(flo, fhi)

    @classmethod
    def coerce(cls, x: Number) -> Interval:
        if isinstance(x, Interval):
            return x
        if isinstance(x, float):
            return cls(x, x)
        if isinstance(x, bool):
            raise TypeError("bool is not a number here")
        if isinstance(x, (int, Fraction)):
            return cls.from_fraction(Fraction(x))
        if isinstance(x, str):
            return cls.from_decimal(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Interval")

    # -- set operations ----------------------------------------------------

    @property
    def width(self) -> float:
        return _add_ru(self.hi, -self.lo)

    @property
    def mid(self) -> float:
        m = 0.5 * self.lo + 0.5 * self.hi
        return min(max(m, self.lo), self.hi)

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Union[float, Fraction, Interval]) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        if isinstance(x, Fraction):
            return Fraction(self.lo) <= x <= Fraction(self.hi)
        return self.lo <= x <= self.hi

    __contains__ = contains

    def overlaps(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other: Interval) -> Interval:
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersect(self, other: Interval) -> Interval | None:
        """Intersection, or ``None`` when the intervals are disjoint."""
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def bisect(self) -> tuple[Interval, Interval]:
        m = self.mid
        return Interval(self.lo, m), Interval(m, self.hi)

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __pos__(self) -> Interval:
        return self

    def __add__(self, other: Number) -> Interval:
        o = Interval.coerce(other)
        return Interval(_add_rd(self.lo, o.lo), _add_ru(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other: Number) -> Interval:
        o = Interval.coerce(other)
        return Interval(_add_rd(self.lo, -o.hi), _add_ru(self.hi, -o.lo))

    def __rsub__(self, other: Number) -> Interval:
        return Interval.coerce(other) - self

    def __mul__(self, other: Number) -> Interval:
        o = Interval.coerce(other)
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        if a >= 0 and c >= 0:
            return Interval(_mul_rd(a, c), _mul_ru(b, d))
        pairs = ((a, c), (a, d), (b, c), (b, d))
        return Interval(min(_mul_rd(x, y) for x, y in pairs), max(_mul_ru(x, y) for x, y in pairs))

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> Interval:
        o = Interval.coerce(other)
        if o.lo <= 0 <= o.hi:
            raise DomainError(f"division by an interval containing zero: {o}")
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        pairs = ((a, c), (a, d), (b, c), (b, d))
        return Interval(min(_div_rd(x, y) for x, y in pairs), max(_div_ru(x, y) for x, y in pairs))

    def __rtruediv__(self, other: Number) -> Interval:
        return Interval.coerce(other) / self

    def sqr(self) -> Interval:
        """Square without the dependency loss of ``x * x``."""
        a, b = self.lo, self.hi
        if a >= 0:
            return Interval(_mul_rd(a, a), _mul_ru(b, b))
        if b <= 0:
            return Interval(_mul_rd(b, b), _mul_ru(a, a))
        m = max(-a, b)
        return Interval(0.0, _mul_ru(m, m))

    def sqrt(self) -> Interval:
        tol = get_config().clamp_tol
        if self.hi < 0:
            raise DomainError(f"sqrt of a negative interval {self}")
        lo = self.lo
        if lo < 0:
            if -lo > tol * max(1.0, abs(self.hi)):
                raise DomainError(f"sqrt: {self} dips below 0 beyond the clamp tolerance")
            lo = 0.0
        return Interval(_sqrt_rd(lo), _sqrt_ru(self.hi))

    def max(self, other: Interval) -> Interval:
        return Interval(max(self.lo, other.lo), max(self.hi, other.hi))

    def min(self, other: Interval) -> Interval:
        return Interval(min(self.lo, other.lo), min(self.hi, other.hi))

    # -- serialisation -----------------------------------------------------

    def to_json(self) -> dict[str, str]:
        return {"lo": repr(self.lo), "hi": repr(self.hi)}

    @classmethod
    def from_json(cls, d: dict) -> Interval:
        return cls(float(d["lo"]), float(d["hi"]))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


def make(lo: float, hi: float) -> Interval:
    """Build ``[lo, hi]`` exactly from machine numbers."""
    return Interval(lo, hi)


def hull(a: Interval, b: Interval) -> Interval:
    return a.hull(b)


def intersect(a: Interval, b: Interval) -> Interval | None:
    return a.intersect(b)


def width(a: Interval) -> float:
    return a.width


def contains(a: Interval, x: float) -> bool:
    return a.contains(x)


def bisect(a: Interval) -> tuple[Interval, Interval]:
    return a.bisect()
