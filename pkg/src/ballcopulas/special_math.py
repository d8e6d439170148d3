"""Scalar building blocks for the copula closed forms.

Everything here is a pure function of plain floats.  The geometric setting
is the centered square ``C2 = [-1, 1]^2`` (and cube ``C3``), the closed unit
disk, and spherical caps on the unit sphere.

The central quantity is :func:`alpha`, the quadrant-mass correction that
turns the linear part ``(x + y + 1) / 4`` into the exact joint CDF of the
circularly symmetric distribution on the disk with uniform marginals.  Its
skew generalization :func:`alpha_gamma` plays the same role for the sheared
(elliptical-support) family, and :func:`delta3` aggregates pairwise alpha
terms for the three-dimensional model.
"""

from __future__ import annotations

import enum
import math

from .errors import DomainError, PreconditionError

__all__ = [
    "ARCSIN_TOL",
    "BOUNDARY_BAND",
    "RegionId",
    "alpha",
    "alpha_gamma",
    "cap_intersection_area",
    "clamped_arcsin",
    "classify_region",
    "delta3",
    "h_identity",
    "sigma",
]

#: Default tolerance for clamping inverse-trig arguments to [-1, 1].
ARCSIN_TOL = 1e-12

# Relative width of the near-boundary band in which the three-arcsin
# expressions are replaced by the linear extensions they agree with on the
# support boundary.  arcsin turns an eps-sized argument error into a
# sqrt(eps)-sized result error near +-1, so evaluating the arcsin forms
# within ~1e-12 of the boundary would cost ~1e-8 of accuracy; the linear
# forms are off by O(band^{3/2}) ~ 1e-18 there, far below every tolerance
# used in this package.
BOUNDARY_BAND = 1e-12

_TWO_PI = 2.0 * math.pi
_HALF_PI = 0.5 * math.pi


class RegionId(enum.Enum):
    """Partition cell of the centered square for the skewed family.

    R1-R4 are the quadrant pieces of the support ellipse; R5-R8 the four
    corner components of its complement (top-right, top-left, bottom-right,
    bottom-left in that order).
    """

    R1 = 1
    R2 = 2
    R3 = 3
    R4 = 4
    R5 = 5
    R6 = 6
    R7 = 7
    R8 = 8


def sigma(w: float) -> int:
    """Sign of ``w`` as an integer, with ``sigma(0) == 0``."""
    if not math.isfinite(w):
        raise DomainError(f"sigma: argument must be finite, got {w!r}")
    if w > 0.0:
        return 1
    if w < 0.0:
        return -1
    return 0


def _clamp_unit(t: float, tol: float, context: str) -> float:
    if abs(t) > 1.0 + tol:
        raise DomainError(
            f"{context}: argument {t!r} exceeds 1 in magnitude by more than tol={tol!r}"
        )
    return min(1.0, max(-1.0, t))


def clamped_arcsin(t: float, tol: float = ARCSIN_TOL) -> float:
    """arcsin with the argument clamped to ``[-1, 1]``.

    Shields every arcsin evaluation in this module from floating-point
    drift just past +-1.  An argument beyond ``1 + tol`` signals a genuine
    precondition violation upstream, not round-off, and raises
    :class:`DomainError`.
    """
    return math.asin(_clamp_unit(t, tol, "clamped_arcsin"))


def _clamped_arccos(t: float, tol: float = ARCSIN_TOL) -> float:
    return math.acos(_clamp_unit(t, tol, "arccos"))


def _check_square(x: float, y: float, context: str) -> None:
    if not (abs(x) <= 1.0 and abs(y) <= 1.0):
        raise DomainError(f"{context}: point ({x!r}, {y!r}) outside [-1, 1]^2")


def _check_gamma(gamma: float) -> None:
    if not (-_HALF_PI < gamma < _HALF_PI):
        raise DomainError(
            f"skew angle must lie in the open interval (-pi/2, pi/2), got {gamma!r}"
        )


def alpha(x: float, y: float) -> float:
    """Quadrant-mass correction of the disk copula on ``C2``.

    Inside the unit disk this is the three-arcsin expression

        ``(x*asin(y/sqrt(1-x^2)) + y*asin(x/sqrt(1-y^2))
          - asin(x*y/sqrt((1-x^2)(1-y^2)))) / (2*pi)``,

    valid for all sign combinations; on and outside the disk it continues
    linearly as ``sigma(x*y) * (|x| + |y| - 1) / 4``.  The two branches
    agree on the circle, and the function is sign-change equivariant:
    ``alpha(e*x, d*y) == e*d*alpha(x, y)`` for ``e, d = +-1``.
    """
    _check_square(x, y, "alpha")
    s = x * x + y * y
    if s < 1.0 - BOUNDARY_BAND:
        cx = math.sqrt(1.0 - x * x)
        cy = math.sqrt(1.0 - y * y)
        return (
            x * clamped_arcsin(y / cx)
            + y * clamped_arcsin(x / cy)
            - clamped_arcsin(x * y / (cx * cy))
        ) / _TWO_PI
    return sigma(x) * sigma(y) * (abs(x) + abs(y) - 1.0) / 4.0


def delta3(x: float, y: float, z: float) -> float:
    """Sum of :func:`alpha` over the three coordinate pairs.

    The arguments are sorted before pairing, so all six permutations of
    ``(x, y, z)`` return bit-identical values while the summation order
    stays fixed.
    """
    a, b, c = sorted((x, y, z))
    return alpha(a, b) + alpha(a, c) + alpha(b, c)


def alpha_gamma(gamma: float, u: float, v: float) -> float:
    """Skewed generalization of :func:`alpha` for the sheared family.

    On the support ellipse ``u^2 + v^2 - 2*u*v*sin(gamma) <= cos^2(gamma)``
    this evaluates

        ``(u*asin((v - u*sg)/(cg*sqrt(1-u^2)))
          + v*asin((u - v*sg)/(cg*sqrt(1-v^2)))
          - asin((u*v - sg)/sqrt((1-u^2)(1-v^2)))) / (2*pi)``

    with ``sg = sin(gamma)``, ``cg = cos(gamma)``; outside the ellipse it
    continues with the piecewise-linear values of the four corner regions
    (see :func:`classify_region`), which agree with the arcsin form on the
    ellipse boundary.  ``alpha_gamma(0.0, u, v)`` reproduces
    ``alpha(u, v)`` bit for bit.
    """
    _check_gamma(gamma)
    _check_square(u, v, "alpha_gamma")
    sg = math.sin(gamma)
    cg = math.cos(gamma)
    c2 = cg * cg
    q = u * u + v * v - 2.0 * u * v * sg
    if q < c2 * (1.0 - BOUNDARY_BAND):
        cu = math.sqrt(1.0 - u * u)
        cv = math.sqrt(1.0 - v * v)
        return (
            u * clamped_arcsin((v - u * sg) / (cg * cu))
            + v * clamped_arcsin((u - v * sg) / (cg * cv))
            - clamped_arcsin((u * v - sg) / (cu * cv))
        ) / _TWO_PI
    # On/near the boundary and on the complement the linear pieces apply.
    # Non-strict comparisons keep boundary points on the piece they bound.
    if u + v >= 1.0 + sg:
        return (u + v - 1.0) / 4.0
    if v - u >= 1.0 - sg:
        return (u - v + 1.0) / 4.0
    if v - u <= sg - 1.0:
        return (-u + v + 1.0) / 4.0
    if u + v <= -1.0 - sg:
        return (-u - v - 1.0) / 4.0
    # Remaining sliver: the four tangency points of the ellipse with the
    # square edges, where all adjacent linear pieces equal sin(gamma)/4.
    return sg / 4.0


def classify_region(gamma: float, u: float, v: float) -> RegionId:
    """Assign ``(u, v)`` to one of the eight partition cells.

    Points of the (closed) support ellipse go to R1-R4 split by quadrant,
    with axis ties resolved toward nonnegative coordinates; points of the
    complement go to the corner region R5-R8 whose defining half-plane
    contains them.  Ties on the ellipse boundary classify as inside.
    """
    _check_gamma(gamma)
    _check_square(u, v, "classify_region")
    sg = math.sin(gamma)
    cg = math.cos(gamma)
    q = u * u + v * v - 2.0 * u * v * sg
    if q > cg * cg:
        if u + v > 1.0 + sg:
            return RegionId.R5
        if v - u > 1.0 - sg:
            return RegionId.R6
        if v - u < sg - 1.0:
            return RegionId.R7
        if u + v < -1.0 - sg:
            return RegionId.R8
        # Round-off near a tangency point: treat as inside.
    if u >= 0.0:
        return RegionId.R1 if v >= 0.0 else RegionId.R3
    return RegionId.R2 if v >= 0.0 else RegionId.R4


def h_identity(x: float, y: float) -> float:
    """Three-arcsin sum that is identically ``pi/2`` on its domain.

    Kept in unsimplified form on purpose: tests confirm the collapse to
    the constant.  Domain: ``0 <= x, y <= 1``, ``0 < x^2 + y^2 < 1``.
    """
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise DomainError(f"h_identity: ({x!r}, {y!r}) outside [0, 1]^2")
    s = x * x + y * y
    if s <= 0.0 or s >= 1.0:
        raise DomainError(
            f"h_identity requires 0 < x^2 + y^2 < 1, got x^2 + y^2 = {s!r}"
        )
    cx = math.sqrt(1.0 - x * x)
    cy = math.sqrt(1.0 - y * y)
    rt = math.sqrt(1.0 - s)
    r = math.sqrt(s)
    return (
        clamped_arcsin(x * y / (cx * cy))
        + clamped_arcsin(x * rt / (cx * r))
        + clamped_arcsin(y * rt / (cy * r))
    )


def cap_intersection_area(r1: float, r2: float, d: float) -> float:
    """Area of the lens where two spherical caps on the unit sphere overlap.

    ``r1`` and ``r2`` are the angular radii of the caps and ``d`` the
    angular distance between their centers.  Only the single-lens
    configuration is supported:

        ``0 < r1, r2 <= pi/2``  and  ``|r1 - r2| < d <= r1 + r2``.

    Nested caps (``d <= |r1 - r2|``) and disjoint caps (``d > r1 + r2``)
    are rejected.  The result lies in ``[0, 2*pi]`` and is symmetric in
    ``(r1, r2)``.
    """
    for name, val in (("r1", r1), ("r2", r2), ("d", d)):
        if not math.isfinite(val):
            raise PreconditionError(f"cap_intersection_area: {name} must be finite")
    if not (0.0 < r1 <= _HALF_PI and 0.0 < r2 <= _HALF_PI):
        raise PreconditionError(
            f"cap radii must lie in (0, pi/2], got r1={r1!r}, r2={r2!r}"
        )
    if not (abs(r1 - r2) < d <= r1 + r2):
        raise PreconditionError(
            "caps must overlap in a single lens: require |r1 - r2| < d <= r1 + r2, "
            f"got r1={r1!r}, r2={r2!r}, d={d!r}"
        )
    c1, s1 = math.cos(r1), math.sin(r1)
    c2, s2 = math.cos(r2), math.sin(r2)
    cd, sd = math.cos(d), math.sin(d)
    a0 = _clamped_arccos((cd - c1 * c2) / (s1 * s2))
    a1 = _clamped_arccos((cd * c1 - c2) / (sd * s1))
    a2 = _clamped_arccos((cd * c2 - c1) / (sd * s2))
    area = _TWO_PI * (1.0 - (c1 + c2)) - 2.0 * a0 + 2.0 * (c1 * a1 + c2 * a2)
    return min(max(area, 0.0), _TWO_PI)
