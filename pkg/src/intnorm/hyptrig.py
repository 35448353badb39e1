"""Hyperbolic trigonometry for collars around short closed geodesics.

Every function evaluates a closed-form expression in 64-bit floats by
default.  Passing ``extended=True`` reruns the same expression through
mpmath at ``EXTENDED_DPS`` significant digits and returns an ``mpf``;
the test suite uses that mode to back every frozen reference value.
"""

from __future__ import annotations

import math

import mpmath

from .errors import DomainError

# Digits used by the extended-precision mode.
EXTENDED_DPS = 50

# Width threshold of the collar lemma: a primitive closed geodesic shorter
# than 2*arsinh(1) has an embedded collar of half-width collar_width(l).
TWO_ARSINH_ONE = 2.0 * math.asinh(1.0)


def _require_positive(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be positive and finite, got {value!r}")


def _require_finite(name: str, value: float) -> None:
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")


def collar_width(length: float, *, extended: bool = False):
    """Half-width arsinh(1/sinh(length/2)) of the embedded collar around a
    closed geodesic of the given length.

    Strictly decreasing in the length; behaves like log(4/length) as the
    geodesic shrinks.
    """
    _require_positive("length", float(length))
    if extended:
        with mpmath.workdps(EXTENDED_DPS):
            return mpmath.asinh(1 / mpmath.sinh(mpmath.mpf(length) / 2))
    return math.asinh(1.0 / math.sinh(length / 2.0))


def fermi_distance(p1, p2, *, extended: bool = False):
    """Distance between two points given in Fermi coordinates (t, s).

    t is arc length along the core geodesic, s the signed perpendicular
    distance from it.  cosh d = cosh s1 cosh s2 cosh(t2 - t1) - sinh s1 sinh s2.
    """
    t1, s1 = p1
    t2, s2 = p2
    for name, v in (("t1", t1), ("s1", s1), ("t2", t2), ("s2", s2)):
        _require_finite(name, float(v))
    if extended:
        with mpmath.workdps(EXTENDED_DPS):
            t1, s1, t2, s2 = (mpmath.mpf(x) for x in (t1, s1, t2, s2))
            arg = mpmath.cosh(s1) * mpmath.cosh(s2) * mpmath.cosh(t2 - t1) \
                - mpmath.sinh(s1) * mpmath.sinh(s2)
            return mpmath.acosh(max(arg, mpmath.mpf(1)))
    arg = math.cosh(s1) * math.cosh(s2) * math.cosh(t2 - t1) \
        - math.sinh(s1) * math.sinh(s2)
    # rounding can push the argument a hair below 1 for coincident points
    return math.acosh(max(arg, 1.0))


def crossing_arc_length(half_width: float, delta_t: float, *,
                        extended: bool = False):
    """Length 2*arcosh(cosh(half_width) * cosh(delta_t/2)) of the geodesic
    arc crossing a collar of the given half-width between boundary points
    whose core positions differ by delta_t.

    Equals fermi_distance((0, -half_width), (delta_t, half_width)); always
    at least max(2*half_width, |delta_t|).
    """
    _require_positive("half_width", float(half_width))
    _require_finite("delta_t", float(delta_t))
    if extended:
        with mpmath.workdps(EXTENDED_DPS):
            w = mpmath.mpf(half_width)
            dt = mpmath.mpf(delta_t)
            return 2 * mpmath.acosh(mpmath.cosh(w) * mpmath.cosh(dt / 2))
    return 2.0 * math.acosh(math.cosh(half_width) * math.cosh(delta_t / 2.0))


def boundary_length(core_length: float, half_width: float, *,
                    extended: bool = False):
    """Length core_length * cosh(half_width) of one boundary circle of the
    collar of the given half-width around a core geodesic."""
    _require_positive("core_length", float(core_length))
    _require_positive("half_width", float(half_width))
    if extended:
        with mpmath.workdps(EXTENDED_DPS):
            return mpmath.mpf(core_length) * mpmath.cosh(mpmath.mpf(half_width))
    return core_length * math.cosh(half_width)
