"""Independent multiprecision reference formulas (mpmath, 200 bits)."""

from __future__ import annotations

from fractions import Fraction

from mpmath import acosh, cos, mp, mpf, pi, sinh, sqrt

mp.prec = 200


def mpv(x) -> mpf:
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def inside(iv, x) -> bool:
    """Exact containment of an mpf value in an Interval (float endpoints are exact in mpf)."""
    return mpf(iv.lo) <= x <= mpf(iv.hi)


def cosh_R(c):
    return sqrt(1 + 1 / (2 * c - 2))


def cosh_Rprime(r):
    return 3 - r


def cosh_E(c):
    r = cosh_R(c)
    rp = cosh_Rprime(r)
    d = r * rp + sqrt(r * r - 1) * sqrt(rp * rp - 1)
    tanh2 = 1 - 1 / (c * c)
    return 2 / (d * d * tanh2 - 1) + 1


def d22(cd, c):
    return sqrt((c + 1) / (cd - 1) + 1)


def d12(cd, c):
    return 2 / (cd * cd * (1 - 1 / (c * c)) - 1) + 1


def cosh_F(c, c_for_R=None):
    r = cosh_R(c if c_for_R is None else c_for_R)
    rp = cosh_Rprime(r)
    return d22(2 * rp * rp - 1, c)


def cosh_Rpp():
    return 1 / sqrt(2 * (1 - cos(2 * pi / 9)))


def cosh_L(c):
    r = cosh_Rpp()
    return d12(2 * r * r - 1, c)


def cosh_M(c):
    r = cosh_Rpp()
    return d22(2 * r * r - 1, c)


def cosh_A(c):
    return sqrt(2 * (c + 1) / 3)


def muffin(c):
    return pi * (cosh_R(c) * acosh((4 * c + 1) / 3) - acosh(c))


def area(c):
    return 4 * pi * (2 - cosh_R(c))


def collar(a, h):
    return a * (2 * h + sinh(2 * h)) / 4


def H(c, families=("EF",)):
    cands = []
    if "EF" in families:
        cands.append(min(cosh_E(c), cosh_F(c)))
    if "LM" in families:
        cands.append(min(cosh_L(c), cosh_M(c)))
    l2 = acosh(max([c] + cands))
    return min(acosh(cosh_A(c)), l2 / 2)


def km_volume(c, families=("EF",)):
    return muffin(c) + collar(area(c), H(c, families))


def Q(c):
    l1 = acosh(c)
    return acosh((4 * c + 1) / 3) - l1 - sinh(l1)


def V(c):
    l1 = acosh(c)
    return pi * (l1 + 2 * sinh(l1) + cosh_R(c) * Q(c))
