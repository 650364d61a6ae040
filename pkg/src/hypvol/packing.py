"""Radius bounds for n equal disks packed on a closed hyperbolic surface.

Boroczky's local density bound for radius-R packings of H^2 is taken as
given.  Writing it through the equilateral triangle with side 2R and
vertex angle alpha, n disks on a surface of area 4pi(g - 1) satisfy

    n (cosh R - 1) / (2(g - 1)) <= 3 alpha (cosh R - 1) / (pi - 3 alpha),

i.e. alpha >= n pi / (3n + 6(g - 1)).  The law of cosines
cos alpha = cosh 2R / (cosh 2R + 1) then turns the angle floor into a
radius ceiling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import c1_from_cosh_R
from .hyptrig import PI, cos_i, cosh_double, cosh_half
from .interval import Interval


@dataclass(frozen=True)
class PackingBound:
    n: int
    alpha_min: Interval
    cosh_R_max: Interval
    genus: int = 2

    def density_gap(self) -> Interval:
        """Boroczky density at R_max minus the covered fraction; encloses 0."""
        a, r = self.alpha_min, self.cosh_R_max
        covered = self.n * (r - 1) / (2 * (self.genus - 1))
        return 3 * a * (r - 1) / (PI - 3 * a) - covered


def boroczky_min_angle(n: int, genus: int = 2) -> Interval:
    """Smallest vertex angle n pi / (3n + 6(g - 1)) allowed by the density bound."""
    if n < 1 or genus < 2:
        raise ValueError(f"need n >= 1 and genus >= 2, got n={n}, genus={genus}")
    return n * PI / (3 * n + 6 * (genus - 1))


def max_packing_radius(n: int, genus: int = 2) -> PackingBound:
    if n < 2:
        raise ValueError(f"max_packing_radius needs n >= 2 (no triangle for n={n})")
    alpha = boroczky_min_angle(n, genus)
    cos_a = cos_i(alpha)
    # cosh 2R = cos a / (1 - cos a), written with one occurrence of cos a
    cosh_2R = 1 / (1 - cos_a) - 1
    return PackingBound(n=n, alpha_min=alpha, cosh_R_max=cosh_half(cosh_2R), genus=genus)


def borbounds_constants() -> tuple[Interval, Interval]:
    """(upper bound for cosh d11, lower bound for cosh l1) on a genus-2 boundary."""
    r = max_packing_radius(2).cosh_R_max
    return cosh_double(r), c1_from_cosh_R(r)
