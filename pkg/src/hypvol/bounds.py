"""Named quantities as interval functions of c = cosh(l1), and the volume bound.

Everything is computed in cosh coordinates; lengths are recovered with
``arccosh_i`` only where a formula needs an actual length (H, the collar, the
muffin volume).  Functions take either a :class:`CoshL1` or a bare
:class:`~hypvol.interval.Interval`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from typing import Iterable, Union

from .hyptrig import (
    PI,
    arccosh_i,
    cos_i,
    cosh_double,
    cosh_sum,
    sinh_from_cosh,
    sinh_i,
)
from .interval import DomainError, Interval

TIE_TOL = 1e-6


class RangeError(ValueError):
    """A bound was requested outside the range where it applies."""


class QuantityId(str, enum.Enum):
    R = "R"
    Rp = "Rp"
    Rpp = "Rpp"
    A = "A"
    E = "E"
    F = "F"
    L = "L"
    M = "M"
    ell1_half = "ell1_half"
    MufVol = "MufVol"
    Area = "Area"
    Q = "Q"

    def __str__(self) -> str:
        return self.value


@cache
def genus2_floor() -> Interval:
    """Enclosure of (3 + sqrt 3)/4, the smallest admissible cosh l1 in genus 2."""
    return (3 + Interval.point(3.0).sqrt()) / 4


@dataclass(frozen=True)
class CoshL1:
    c: Interval
    unchecked: bool = False

    def __post_init__(self):
        if not self.unchecked and self.c.lo < genus2_floor().lo:
            raise RangeError(
                f"cosh l1 = {self.c} starts below the genus-2 floor (3+sqrt3)/4; "
                "pass unchecked=True to evaluate there anyway"
            )

    @classmethod
    def parse(cls, lo: str, hi: str | None = None, unchecked: bool = False) -> CoshL1:
        return cls(Interval.from_decimal(lo, hi), unchecked=unchecked)


C1 = Union[CoshL1, Interval]


def _c(c1: C1) -> Interval:
    return c1.c if isinstance(c1, CoshL1) else c1


def _above_one(c: Interval, what: str) -> Interval:
    if c.lo <= 1:
        raise DomainError(f"{what} needs cosh l1 > 1, got {c}")
    return c


@dataclass(frozen=True)
class HProfile:
    """Lower bound for the collar height H and the quantities that realise it."""

    h: Interval
    active: frozenset[QuantityId]
    # H recomputed without the l1/2 floor, when that changes the value
    h_unfloored: Interval | None = None

    def __post_init__(self):
        if not self.active:
            raise ValueError("HProfile needs at least one active quantity")
        if self.h.lo <= 0:
            raise DomainError(f"collar height bound {self.h} is not positive")

    @property
    def label(self) -> str:
        order = [QuantityId.A, QuantityId.E, QuantityId.F, QuantityId.L, QuantityId.M, QuantityId.ell1_half]
        return ",".join("l1" if q is QuantityId.ell1_half else q.value for q in order if q in self.active)


# ---------------------------------------------------------------------------
# radii


def cosh_R(c1: C1) -> Interval:
    """cosh R = sqrt(1 + 1/(2c - 2)); R is the embedded disk radius around a foot of l1."""
    c = _above_one(_c(c1), "cosh_R")
    return (1 + 1 / (2 * c - 2)).sqrt()


def c1_from_cosh_R(cosh_r: Interval) -> Interval:
    """Invert :func:`cosh_R`: c = 1 + 1/(2(cosh^2 R - 1))."""
    if cosh_r.lo <= 1:
        raise DomainError(f"cosh R must exceed 1, got {cosh_r}")
    return 1 + 1 / (2 * (cosh_r.sqr() - 1))


def cosh_Rprime(cosh_R_val: Interval) -> Interval:
    """cosh R' = 3 - cosh R."""
    out = 3 - cosh_R_val
    if out.hi < 1:
        raise DomainError(f"cosh R' = {out} < 1: R' undefined for cosh R = {cosh_R_val}")
    return out


@cache
def cosh_Rpp() -> Interval:
    """Radius bound for four equal disks: 1/sqrt(2(1 - cos(2pi/9)))."""
    cos_a = cos_i(2 * PI / 9)
    return 1 / (2 * (1 - cos_a)).sqrt()


@cache
def cosh_2Rpp() -> Interval:
    return cosh_double(cosh_Rpp())


@cache
def ell1_threshold() -> Interval:
    """cos(2pi/9)/(2cos(2pi/9) - 1), the largest cosh l1 for which L and M apply."""
    cos_a = cos_i(2 * PI / 9)
    return 1 / (2 - 1 / cos_a)


# ---------------------------------------------------------------------------
# lower bounds for cosh l2


def d12_bound(cosh_d12: Interval, c: Interval) -> Interval:
    """cosh l2 >= 2/(cosh^2 d12 tanh^2 l1 - 1) + 1, with tanh^2 l1 = 1 - 1/c^2."""
    den = cosh_d12.sqr() * (1 - 1 / c.sqr()) - 1
    if den.lo <= 0:
        raise DomainError(f"d12 bound is vacuous: denominator {den} not positive")
    return 2 / den + 1


def d22_bound(cosh_d22: Interval, c: Interval) -> Interval:
    """cosh l2 >= sqrt((c + 1)/(cosh d22 - 1) + 1)."""
    if cosh_d22.lo <= 1:
        raise DomainError(f"d22 bound needs cosh d22 > 1, got {cosh_d22}")
    return ((c + 1) / (cosh_d22 - 1) + 1).sqrt()


def cosh_RRp(c1: C1) -> Interval:
    r = cosh_R(c1)
    return cosh_sum(r, cosh_Rprime(r))


def cosh_E(c1: C1) -> Interval:
    c = _c(c1)
    return d12_bound(cosh_RRp(c), c)


def cosh_F(c1: C1) -> Interval:
    c = _c(c1)
    return d22_bound(cosh_double(cosh_Rprime(cosh_R(c))), c)


def _lm_applicable(c: Interval) -> bool:
    return c.hi <= ell1_threshold().lo


def cosh_L(c1: C1) -> Interval:
    c = _c(c1)
    if not _lm_applicable(c):
        raise RangeError(f"L needs cosh l1 <= {ell1_threshold().lo!r}, got {c}")
    return d12_bound(cosh_2Rpp(), c)


def cosh_M(c1: C1) -> Interval:
    c = _c(c1)
    if not _lm_applicable(c):
        raise RangeError(f"M needs cosh l1 <= {ell1_threshold().lo!r}, got {c}")
    return d22_bound(cosh_2Rpp(), c)


def cosh_A(c1: C1) -> Interval:
    """cosh A = sqrt(2(c + 1)/3)."""
    c = _c(c1)
    return (2 * (c + 1) / 3).sqrt()


def e_monotone_on(c1: C1) -> bool:
    """Whether E is certified decreasing on the whole interval.

    cosh(R + R') increases with l1 while cosh R >= 3/2; cosh R is decreasing
    and equals 3/2 exactly at c = 7/5, so c.hi <= 7/5 (checked in exact
    rationals) covers it.  R' must exist, so cosh R < 2 is also required.
    """
    c = _c(c1)
    return Fraction(c.hi) <= Fraction(7, 5) and cosh_R(Interval.point(c.lo)).hi < 2


def _imin(xs: Iterable[Interval]) -> Interval:
    xs = list(xs)
    return Interval(min(x.lo for x in xs), min(x.hi for x in xs))


def _imax(xs: Iterable[Interval]) -> Interval:
    xs = list(xs)
    return Interval(max(x.lo for x in xs), max(x.hi for x in xs))


def _winners(vals: dict, pick_min: bool) -> tuple[Interval, set]:
    """Interval min/max of the candidates and the labels attaining it within TIE_TOL."""
    best = _imin(vals.values()) if pick_min else _imax(vals.values())
    won = {k for k, v in vals.items() if abs(v.lo - best.lo) <= TIE_TOL}
    return best, won


def families_for(c1: C1) -> tuple[str, ...]:
    """Bound families valid on ``c1``: E/F always, L/M below the threshold."""
    return ("EF", "LM") if _lm_applicable(_c(c1)) else ("EF",)


def ell2_candidates(c1: C1, families: Iterable[str] | None = None) -> dict[str, dict[QuantityId, Interval]]:
    """Natural-extension enclosures of cosh of each candidate, grouped by family."""
    c = _c(c1)
    fams = families_for(c) if families is None else tuple(families)
    out: dict[str, dict[QuantityId, Interval]] = {}
    for fam in fams:
        if fam == "EF":
            out[fam] = {QuantityId.E: cosh_E(c), QuantityId.F: cosh_F(c)}
        elif fam == "LM":
            out[fam] = {QuantityId.L: cosh_L(c), QuantityId.M: cosh_M(c)}
        else:
            raise ValueError(f"unknown bound family {fam!r}")
    return out


def _ell2_from(c: Interval, groups: dict[str, dict[QuantityId, Interval]]) -> tuple[Interval, set]:
    parts = {QuantityId.ell1_half: (c, {QuantityId.ell1_half})}
    for fam, vals in groups.items():
        best, won = _winners(vals, pick_min=True)
        parts[fam] = (best, won)
    best, won_keys = _winners({k: v for k, (v, _) in parts.items()}, pick_min=False)
    labels: set = set()
    for k in won_keys:
        labels |= parts[k][1]
    return best, labels


def ell2_lower(c1: C1, families: Iterable[str] | None = None) -> Interval:
    """Lower bound for cosh l2: max{c, min{E, F}, min{L, M} where applicable}."""
    c = _c(c1)
    return _ell2_from(c, ell2_candidates(c, families))[0]


def combine_h(
    c: Interval,
    cosh_a: Interval,
    groups: dict[str, dict[QuantityId, Interval]],
) -> HProfile:
    """H = min{A, l2/2} with l2 bounded below by ``groups`` and floored by l1.

    All inputs are in cosh form; the comparison happens on lengths.
    """
    len_groups = {fam: {q: arccosh_i(v) for q, v in vals.items()} for fam, vals in groups.items()}
    ell1 = arccosh_i(c)
    a_len = arccosh_i(cosh_a)

    def h_of(with_floor: bool) -> tuple[Interval, set]:
        parts: dict = {}
        if with_floor:
            parts[QuantityId.ell1_half] = (ell1 / 2, {QuantityId.ell1_half})
        for fam, vals in len_groups.items():
            best, won = _winners({q: v / 2 for q, v in vals.items()}, pick_min=True)
            parts[fam] = (best, won)
        half_l2, won_keys = _winners({k: v for k, (v, _) in parts.items()}, pick_min=False)
        labels: set = set().union(*(parts[k][1] for k in won_keys))
        h, top = _winners({"A": a_len, "l2": half_l2}, pick_min=True)
        active = ({QuantityId.A} if "A" in top else set()) | (labels if "l2" in top else set())
        return h, active

    h, active = h_of(True)
    unfloored = None
    if len_groups:
        h2, _ = h_of(False)
        if h2.lo != h.lo:
            unfloored = h2
    return HProfile(h=h, active=frozenset(active), h_unfloored=unfloored)


def h_profile(c1: C1, families: Iterable[str] | None = None) -> HProfile:
    c = _c(c1)
    return combine_h(c, cosh_A(c), ell2_candidates(c, families))


# ---------------------------------------------------------------------------
# volumes


def muffin_volume(c1: C1) -> Interval:
    """vol(Muf) = pi (cosh R * arccosh((4c + 1)/3) - l1)."""
    c = _above_one(_c(c1), "muffin_volume")
    return PI * (cosh_R(c) * arccosh_i((4 * c + 1) / 3) - arccosh_i(c))


def boundary_area_outside_disks(c1: C1) -> Interval:
    """Area of the genus-2 boundary outside the two radius-R disks: 4pi(2 - cosh R)."""
    return 4 * PI * (2 - cosh_R(c1))


def collar_volume(area: Interval, H: Interval) -> Interval:
    """Volume of a height-H collar over a planar region: area (2H + sinh 2H)/4."""
    if area.lo < 0 or H.lo < 0:
        raise DomainError(f"collar needs non-negative area and height, got {area}, {H}")
    return area * (2 * H + sinh_i(2 * H)) / 4


def km_volume_lower(c1: C1, families: Iterable[str] | None = None) -> tuple[Interval, HProfile]:
    """Enclosure of vol(Muf) + pi(2 - cosh R)(2H + sinh 2H) over ``c1``."""
    c = _c(c1)
    prof = h_profile(c, families)
    vol = muffin_volume(c) + collar_volume(boundary_area_outside_disks(c), prof.h)
    return vol, prof


# ---------------------------------------------------------------------------
# the muffin-plus-collar volume used for cosh l1 >= 1.439


def Q(c1: C1) -> Interval:
    """arccosh((4c + 1)/3) - l1 - sinh l1."""
    c = _above_one(_c(c1), "Q")
    return arccosh_i((4 * c + 1) / 3) - arccosh_i(c) - sinh_from_cosh(c)


def V_combined(c1: C1) -> Interval:
    """Muffin plus a collar of height l1/2: pi[l1 + 2 sinh l1 + cosh R * Q]."""
    c = _above_one(_c(c1), "V_combined")
    return PI * (arccosh_i(c) + 2 * sinh_from_cosh(c) + cosh_R(c) * Q(c))


def dQ(c1: C1) -> Interval:
    """dQ/dl1 = 1/cosh R - 1 - cosh l1."""
    c = _c(c1)
    return 1 / cosh_R(c) - 1 - c


def d_coshR_dc(c1: C1) -> Interval:
    """d(cosh R)/dc = -1/((2c - 2)^2 cosh R)."""
    c = _c(c1)
    return -1 / ((2 * c - 2).sqr() * cosh_R(c))


def d_coshR(c1: C1) -> Interval:
    """d(cosh R)/dl1 = -sinh l1 / ((2c - 2)^2 cosh R)."""
    c = _c(c1)
    return d_coshR_dc(c) * sinh_from_cosh(c)


def dV(c1: C1) -> Interval:
    """V'(l1) = pi[(1 + c)(2 - cosh R) + d(cosh R)/dl1 * Q]."""
    c = _c(c1)
    return PI * ((1 + c) * (2 - cosh_R(c)) + d_coshR(c) * Q(c))


def dV_expanded(c1: C1) -> Interval:
    """V'(l1) before simplification: pi[1 + 2c + cosh R (1/cosh R - 1 - c) + d(cosh R)/dl1 * Q]."""
    c = _c(c1)
    return PI * (1 + 2 * c + cosh_R(c) * dQ(c) + d_coshR(c) * Q(c))


def d_muffin(c1: C1) -> Interval:
    """d vol(Muf)/dl1 = pi * d(cosh R)/dl1 * arccosh((4c + 1)/3).

    The other two terms cancel because d/dl1 arccosh((4c+1)/3) = 1/cosh R.
    """
    c = _c(c1)
    return PI * d_coshR(c) * arccosh_i((4 * c + 1) / 3)
