"""Named form families used by the fixture corpus, sweeps, and tests."""

from __future__ import annotations

from fractions import Fraction
from typing import FrozenSet

from .forms import Badge, BinaryForm


def sextic_xy_family(lam) -> BinaryForm:
    """6 x^5 y + 20 t x^3 y^3 + 6 x y^5, the pivotal odd-symmetric sextics."""
    lam = Fraction(lam)
    return BinaryForm.from_raw(
        6, [0, 6, 0, 20 * lam, 0, 6, 0]
    )


def sextic_family_oracle(lam) -> FrozenSet[Badge]:
    """Closed-form signature sets of the sextic_xy_family, by parameter range."""
    lam = Fraction(lam)
    if lam == 1:
        return frozenset({Badge(1, 1)})
    if lam > 0:
        return frozenset({Badge(2, 2)})
    if lam > Fraction(-3, 5):
        return frozenset({Badge(2, 3), Badge(3, 2)})
    return frozenset({Badge(3, 3)})


def cube_difference_family(lam) -> BinaryForm:
    """(x^2 - y^2)^3 + 15 t x^2 y^2 (x^2 - y^2)."""
    lam = Fraction(lam)
    return BinaryForm.from_raw(
        6, [1, 0, 15 * lam - 3, 0, 3 - 15 * lam, 0, -1]
    )


def circle_conic_quartic(u) -> BinaryForm:
    """(x^2 + y^2)(x^2 + u y^2), the definite-factor quartic family."""
    u = Fraction(u)
    return BinaryForm.from_raw(4, [1, 0, 1 + u, 0, u])


def circle_power(s: int) -> BinaryForm:
    """(x^2 + y^2)^s."""
    from math import comb

    raw = [Fraction(0)] * (2 * s + 1)
    for i in range(s + 1):
        raw[2 * i] = Fraction(comb(s, i))
    return BinaryForm.from_raw(2 * s, raw)


def quartic_jump_family(t) -> BinaryForm:
    """t x^4 + 6 x^2 y^2 + t y^4; at t = 1/m these converge to x^2 y^2."""
    t = Fraction(t)
    return BinaryForm.from_raw(4, [t, 0, 6, 0, t])


def power_plus_circle_family(s: int, t) -> BinaryForm:
    """x^(2s) + t (x^2 + y^2)^s; the downward-jump family."""
    t = Fraction(t)
    base = circle_power(s).scale(t)
    bump = [Fraction(0)] * (2 * s + 1)
    bump[0] = Fraction(1)
    return base + BinaryForm.from_raw(2 * s, bump)
