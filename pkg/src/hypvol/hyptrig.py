"""Hyperbolic functions on intervals and the hexagon/triangle identities.

Transcendental point values come from libm (``exp``, ``expm1``, ``log``,
``log1p``, ``cos``) and are widened by ``NumericConfig.slack_steps``
representable steps in each direction; everything built on top of them uses
the outward-rounded arithmetic of :mod:`hypvol.interval`.  Every function is
monotone on the pieces where it is evaluated, so enclosures come from
endpoint kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .interval import DomainError, Interval, get_config, next_down, next_up

__all__ = [
    "PI",
    "HexSides",
    "exp_i",
    "log_i",
    "cosh_i",
    "sinh_i",
    "tanh_i",
    "arccosh_i",
    "cos_i",
    "sinh_from_cosh",
    "cosh_half",
    "cosh_double",
    "cosh_sum",
    "hexagon_rule",
    "equilateral_vertex_angle_cos",
]

# math.pi is the double just below pi
PI = Interval(math.pi, next_up(math.pi))


def _widen(y: float, exact: bool = False) -> tuple[float, float]:
    if exact:
        return y, y
    lo = hi = y
    for _ in range(get_config().slack_steps):
        lo, hi = next_down(lo), next_up(hi)
    return lo, hi


def _exp_pt(x: float) -> tuple[float, float]:
    lo, hi = _widen(math.exp(x), exact=x == 0.0)
    return max(lo, 0.0), hi


def _expm1_pt(x: float) -> tuple[float, float]:
    lo, hi = _widen(math.expm1(x), exact=x == 0.0)
    return max(lo, -1.0), hi


def _log1p_pt(x: float) -> tuple[float, float]:
    return _widen(math.log1p(x), exact=x == 0.0)


def _log_pt(x: float) -> tuple[float, float]:
    return _widen(math.log(x), exact=x == 1.0)


def exp_i(x: Interval) -> Interval:
    return Interval(_exp_pt(x.lo)[0], _exp_pt(x.hi)[1])


def log_i(x: Interval) -> Interval:
    if x.lo <= 0:
        raise DomainError(f"log of a non-positive interval {x}")
    return Interval(_log_pt(x.lo)[0], _log_pt(x.hi)[1])


def _log1p_i(x: Interval) -> Interval:
    return Interval(_log1p_pt(x.lo)[0], _log1p_pt(x.hi)[1])


# Kernels below take x >= 0 and return an enclosure of f(x).  For the
# monotone identities used, the lower end is evaluated from the lower
# enclosure of expm1(x) and the upper end from the upper one.


def _sinh_pt(x: float) -> Interval:
    # sinh x = (u + u/(u+1))/2 with u = expm1(x), increasing in u >= 0
    ulo, uhi = _expm1_pt(x)
    u_lo, u_hi = Interval.point(ulo), Interval.point(uhi)
    lo = ((u_lo + u_lo / (u_lo + 1)) / 2).lo
    hi = ((u_hi + u_hi / (u_hi + 1)) / 2).hi
    return Interval(max(lo, 0.0), hi)


def _cosh_pt(x: float) -> Interval:
    # cosh x = 1 + u^2 / (2(u+1)), increasing in u >= 0
    ulo, uhi = _expm1_pt(x)
    u_lo, u_hi = Interval.point(ulo), Interval.point(uhi)
    lo = (1 + u_lo.sqr() / (2 * (u_lo + 1))).lo
    hi = (1 + u_hi.sqr() / (2 * (u_hi + 1))).hi
    return Interval(max(lo, 1.0), hi)


def _tanh_pt(x: float) -> Interval:
    # tanh x = 1 - 2/(u+2) with u = expm1(2x)
    if x > 20.0:
        return Interval(next_down(1.0), 1.0)
    ulo, uhi = _expm1_pt(2.0 * x)
    lo = (1 - 2 / (Interval.point(ulo) + 2)).lo
    hi = (1 - 2 / (Interval.point(uhi) + 2)).hi
    return Interval(max(lo, 0.0), min(hi, 1.0))


def _arccosh_pt(x: float) -> Interval:
    if x == 1.0:
        return Interval(0.0, 0.0)
    X = Interval.point(x)
    if x < 2.0:
        t = X - 1
        arg = t + (t * (t + 2)).sqrt()
        r = _log1p_i(arg)
    else:
        # log(x) + log(1 + sqrt(1 - 1/x^2)); avoids overflow of x^2
        r = log_i(X) + _log1p_i((1 - 1 / X.sqr()).sqrt())
    return Interval(max(r.lo, 0.0), r.hi)


def _odd_increasing(kernel, x: Interval) -> Interval:
    def lower(v: float) -> float:
        return kernel(v).lo if v >= 0 else -kernel(-v).hi

    def upper(v: float) -> float:
        return kernel(v).hi if v >= 0 else -kernel(-v).lo

    return Interval(lower(x.lo), upper(x.hi))


def sinh_i(x: Interval) -> Interval:
    return _odd_increasing(_sinh_pt, x)


def tanh_i(x: Interval) -> Interval:
    return _odd_increasing(_tanh_pt, x)


def cosh_i(x: Interval) -> Interval:
    if x.lo <= 0 <= x.hi:
        return Interval(1.0, _cosh_pt(max(-x.lo, x.hi)).hi)
    a, b = sorted((abs(x.lo), abs(x.hi)))
    return Interval(_cosh_pt(a).lo, _cosh_pt(b).hi)


def _clamp_at_one(x: Interval, what: str) -> Interval:
    """Clip a dip below 1 that is within the clamp tolerance."""
    if x.hi < 1:
        raise DomainError(f"{what}: {x} lies below 1")
    if x.lo < 1:
        if 1 - x.lo > get_config().clamp_tol * max(1.0, x.hi):
            raise DomainError(f"{what}: {x} dips below 1 beyond the clamp tolerance")
        return Interval(1.0, x.hi)
    return x


def arccosh_i(x: Interval) -> Interval:
    x = _clamp_at_one(x, "arccosh")
    return Interval(_arccosh_pt(x.lo).lo, _arccosh_pt(x.hi).hi)


def cos_i(x: Interval) -> Interval:
    """Cosine on a sub-interval of [0, pi], where it is decreasing."""
    if x.lo < 0 or x.hi > math.pi:
        raise DomainError(f"cos_i only supports arguments in [0, pi], got {x}")
    lo = _widen(math.cos(x.hi), exact=x.hi == 0.0)[0]
    hi = _widen(math.cos(x.lo), exact=x.lo == 0.0)[1]
    return Interval(max(lo, -1.0), min(hi, 1.0))


# ---------------------------------------------------------------------------
# identities in cosh coordinates


def sinh_from_cosh(c: Interval) -> Interval:
    """sinh t recovered from cosh t (t >= 0) as sqrt((c-1)(c+1))."""
    c = _clamp_at_one(c, "sinh_from_cosh")
    return ((c - 1) * (c + 1)).sqrt()


def cosh_half(cosh_x: Interval) -> Interval:
    """cosh(x/2) from cosh x."""
    c = _clamp_at_one(cosh_x, "cosh_half")
    return ((c + 1) / 2).sqrt()


def cosh_double(cosh_x: Interval) -> Interval:
    """cosh(2x) = 2 cosh^2 x - 1."""
    c = _clamp_at_one(cosh_x, "cosh_double")
    return 2 * c.sqr() - 1


def cosh_sum(cosh_a: Interval, cosh_b: Interval) -> Interval:
    """cosh(a + b) for a, b >= 0 given their hyperbolic cosines."""
    return cosh_a * cosh_b + sinh_from_cosh(cosh_a) * sinh_from_cosh(cosh_b)


@dataclass(frozen=True)
class HexSides:
    """Hyperbolic cosines of three pairwise non-adjacent sides of a right-angled hexagon.

    ``cosh_l`` and ``cosh_lp`` are the two sides abutting the side being
    solved for; ``cosh_lpp`` is the opposite one.
    """

    cosh_l: Interval
    cosh_lp: Interval
    cosh_lpp: Interval

    def __post_init__(self):
        for name in ("cosh_l", "cosh_lp", "cosh_lpp"):
            if getattr(self, name).lo <= 1:
                raise DomainError(f"{name} = {getattr(self, name)} must lie in (1, inf)")


def hexagon_rule(s: HexSides) -> Interval:
    """cosh of the side abutting the sides with cosh ``s.cosh_l`` and ``s.cosh_lp``."""
    num = s.cosh_l * s.cosh_lp + s.cosh_lpp
    return num / (sinh_from_cosh(s.cosh_l) * sinh_from_cosh(s.cosh_lp))


def equilateral_vertex_angle_cos(cosh_2R: Interval) -> Interval:
    """cos of the vertex angle of an equilateral triangle with side 2R.

    Written as 1 - 1/(cosh 2R + 1) so the argument occurs once.
    """
    c = _clamp_at_one(cosh_2R, "equilateral_vertex_angle_cos")
    return 1 - 1 / (c + 1)
