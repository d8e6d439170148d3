"""The four copula models behind a uniform interface.

Every model is an immutable value with a ``dim``, a ``name``, and the
operations ``pdf`` (where a Lebesgue density exists), ``cdf``, ``survival``,
``in_support`` and ``sample``.  All CDFs are genuine copulas on the centered
cube ``[-1, 1]^dim``: uniform[-1, 1] marginals and nonnegative rectangle
mass.

Models
------
CircularCopula
    The circularly symmetric distribution on the unit disk with uniform
    marginals; density ``1 / (2*pi*sqrt(1 - x^2 - y^2))``.
SphericalCopula
    The uniform distribution on the unit sphere surface in 3-D, the only
    spherically symmetric law on the unit ball with uniform marginals.
    It has no Lebesgue density on the ball; no such model exists in
    dimension four or higher.
EllipticalCopula(gamma)
    The law of ``(X, X*sin(gamma) + Y*cos(gamma))`` for ``(X, Y)`` from the
    circular model; supported on an ellipse inscribed in the square, with
    correlation ``sin(gamma)``.
NonlinearDiskCopula
    The law of ``(X/sqrt(1-Y^2), Y/sqrt(1-X^2))`` for ``(X, Y)`` uniform on
    the disk; uncorrelated but dependent, supported on the whole square.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import ClassVar

import numpy as np

from .errors import (
    DimensionError,
    DomainError,
    NotAbsolutelyContinuousError,
)
from .special_math import (
    alpha,
    alpha_gamma,
    clamped_arcsin,
    delta3,
    sigma,
    _check_gamma,
    _check_square,
)

__all__ = [
    "RNG_ALGORITHM",
    "CopulaModel",
    "CircularCopula",
    "SphericalCopula",
    "EllipticalCopula",
    "NonlinearDiskCopula",
    "Rectangle",
    "SampleBatch",
    "cdf_volume",
    "circular_cdf",
    "circular_pdf",
    "circular_survival",
    "ellipse_intersection_area",
    "elliptical_cdf",
    "elliptical_correlation",
    "elliptical_pdf",
    "marginal_pdf_circle",
    "marginal_pdf_disk",
    "model_from_name",
    "nonlinear_cdf",
    "nonlinear_forward",
    "nonlinear_inverse",
    "nonlinear_pdf",
    "sample",
    "spherical_cdf",
    "spherical_survival",
]

#: Name of the pseudo-random generator used by every sampler.
RNG_ALGORITHM = "PCG64"

_TWO_PI = 2.0 * math.pi
_MAX_SEED = 2**64


def _check_cube3(x: float, y: float, z: float, context: str) -> None:
    if not (abs(x) <= 1.0 and abs(y) <= 1.0 and abs(z) <= 1.0):
        raise DomainError(f"{context}: point ({x!r}, {y!r}, {z!r}) outside [-1, 1]^3")


def _clamp01(t: float) -> float:
    return min(1.0, max(0.0, t))


# ---------------------------------------------------------------------------
# marginal and joint densities / distribution functions
# ---------------------------------------------------------------------------

def marginal_pdf_disk(x: float) -> float:
    """Semicircle density of one coordinate of a uniform point on the disk."""
    if not abs(x) <= 1.0:
        raise DomainError(f"marginal_pdf_disk: {x!r} outside [-1, 1]")
    return (2.0 / math.pi) * math.sqrt(1.0 - x * x)


def marginal_pdf_circle(x: float) -> float:
    """Arcsine-law density of one coordinate of a uniform point on the circle.

    Unbounded (but integrable) at the endpoints, so the open interval
    ``(-1, 1)`` is required.
    """
    if not abs(x) < 1.0:
        raise DomainError(f"marginal_pdf_circle: {x!r} outside (-1, 1)")
    return 1.0 / (math.pi * math.sqrt(1.0 - x * x))


def circular_pdf(x: float, y: float) -> float:
    """Density of the circular model: ``1/(2*pi*sqrt(1 - x^2 - y^2))`` on the
    open disk, and 0 on the circle and outside (boundary convention)."""
    _check_square(x, y, "circular_pdf")
    s = x * x + y * y
    if s >= 1.0:
        return 0.0
    return 1.0 / (_TWO_PI * math.sqrt(1.0 - s))


def circular_cdf(x: float, y: float) -> float:
    """Joint CDF of the circular model: ``(x + y + 1)/4 + alpha(x, y)``."""
    _check_square(x, y, "circular_cdf")
    return _clamp01((x + y + 1.0) / 4.0 + alpha(x, y))


def circular_survival(x: float, y: float) -> float:
    """Tail probability ``P[X > x, Y > y]`` of the circular model.

    Equals ``(1 - x - y)/4 + alpha(x, y)``; computed as
    ``circular_cdf(-x, -y)`` so the sign-symmetry identity holds bit for
    bit.  Zero whenever ``x, y >= 0`` and ``x^2 + y^2 >= 1``.
    """
    _check_square(x, y, "circular_survival")
    return circular_cdf(-x, -y)


def spherical_cdf(x: float, y: float, z: float) -> float:
    """Joint CDF of the spherical model on ``[-1, 1]^3``.

    ``(1 + x + y + z)/8 + delta3(x, y, z)/2`` inside the unit ball; on and
    outside the ball the sign-dependent correction
    ``sigma(x)*sigma(y)*sigma(z) * ((1 - |x| - |y| - |z|)/8
    + delta3(|x|, |y|, |z|)/2)`` is added.
    """
    _check_cube3(x, y, z, "spherical_cdf")
    val = (1.0 + x + y + z) / 8.0 + delta3(x, y, z) / 2.0
    if x * x + y * y + z * z >= 1.0:
        ax, ay, az = abs(x), abs(y), abs(z)
        corr = (1.0 - ax - ay - az) / 8.0 + delta3(ax, ay, az) / 2.0
        val += sigma(x) * sigma(y) * sigma(z) * corr
    return _clamp01(val)


def spherical_survival(x: float, y: float, z: float) -> float:
    """First-octant tail probability ``P[X > x, Y > y, Z > z]``.

    Closed form ``(1 - x - y - z)/8 + delta3(x, y, z)/2`` for
    ``x^2 + y^2 + z^2 < 1`` and 0 otherwise.  Only the first octant is
    covered here; queries with negative coordinates go through
    :meth:`SphericalCopula.survival`, which assembles them from the CDF by
    inclusion-exclusion.
    """
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0 and 0.0 <= z <= 1.0):
        raise DomainError(
            f"spherical_survival: ({x!r}, {y!r}, {z!r}) outside the first octant"
        )
    if x * x + y * y + z * z >= 1.0:
        return 0.0
    return _clamp01((1.0 - x - y - z) / 8.0 + delta3(x, y, z) / 2.0)


def elliptical_pdf(gamma: float, u: float, v: float) -> float:
    """Density of the sheared model, ``1/(2*pi*sqrt(cos^2(gamma) - u^2 - v^2
    + 2*u*v*sin(gamma)))`` on the open support ellipse, 0 elsewhere."""
    _check_gamma(gamma)
    _check_square(u, v, "elliptical_pdf")
    cg = math.cos(gamma)
    disc = cg * cg - (u * u + v * v - 2.0 * u * v * math.sin(gamma))
    if disc <= 0.0:
        return 0.0
    return 1.0 / (_TWO_PI * math.sqrt(disc))


def elliptical_cdf(gamma: float, u: float, v: float) -> float:
    """Joint CDF of the sheared model: ``(u + v + 1)/4 + alpha_gamma``."""
    _check_gamma(gamma)
    _check_square(u, v, "elliptical_cdf")
    return _clamp01((u + v + 1.0) / 4.0 + alpha_gamma(gamma, u, v))


def elliptical_correlation(gamma: float) -> float:
    """Pearson correlation of the sheared pair: ``sin(gamma)``."""
    _check_gamma(gamma)
    return math.sin(gamma)


def nonlinear_forward(x: float, y: float) -> tuple[float, float]:
    """Map a point of the open unit disk to ``(x/sqrt(1-y^2), y/sqrt(1-x^2))``."""
    if not x * x + y * y < 1.0:
        raise DomainError(
            f"nonlinear_forward: ({x!r}, {y!r}) not in the open unit disk"
        )
    return x / math.sqrt(1.0 - y * y), y / math.sqrt(1.0 - x * x)


def nonlinear_inverse(u: float, v: float) -> tuple[float, float]:
    """Inverse of :func:`nonlinear_forward`; rejected at the four corners
    ``(+-1, +-1)`` where the expression degenerates to 0/0."""
    _check_square(u, v, "nonlinear_inverse")
    a = u * u
    b = v * v
    if a == 1.0 and b == 1.0:
        raise DomainError("nonlinear_inverse is undefined at the corners (+-1, +-1)")
    den = math.sqrt(1.0 - a * b)
    return u * math.sqrt(1.0 - b) / den, v * math.sqrt(1.0 - a) / den


def nonlinear_pdf(u: float, v: float) -> float:
    """Density of the nonlinear-transform model on the square:
    ``sqrt((1-u^2)(1-v^2)) / (pi * (1 - u^2 v^2)^2)``."""
    _check_square(u, v, "nonlinear_pdf")
    a = u * u
    b = v * v
    den = 1.0 - a * b
    if den == 0.0:
        # Corner points; the density vanishes along both square edges.
        return 0.0
    return math.sqrt((1.0 - a) * (1.0 - b)) / (math.pi * den * den)


def ellipse_intersection_area(u: float, v: float) -> float:
    """Area of the overlap of the two axis-aligned ellipses
    ``x^2/u^2 + y^2 <= 1`` and ``x^2 + y^2/v^2 <= 1``:

        ``2u*asin(v*sqrt(1-u^2)/sqrt(1-u^2 v^2))
          + 2v*asin(u*sqrt(1-v^2)/sqrt(1-u^2 v^2))``.
    """
    if not (0.0 <= u <= 1.0 and 0.0 <= v <= 1.0):
        raise DomainError(f"ellipse_intersection_area: ({u!r}, {v!r}) outside [0, 1]^2")
    if u == 1.0 and v == 1.0:
        raise DomainError("ellipse_intersection_area is undefined at (1, 1)")
    a = u * u
    b = v * v
    den = math.sqrt(1.0 - a * b)
    return 2.0 * u * clamped_arcsin(v * math.sqrt(1.0 - a) / den) + 2.0 * v * clamped_arcsin(
        u * math.sqrt(1.0 - b) / den
    )


def nonlinear_cdf(u: float, v: float) -> float:
    """Joint CDF of the nonlinear-transform model:

        ``(u + v + 1)/4 + (u/(2*pi))*asin(v*sqrt(1-u^2)/sqrt(1-u^2 v^2))
          + (v/(2*pi))*asin(u*sqrt(1-v^2)/sqrt(1-u^2 v^2))``.

    The four corners are served by the continuous limit.
    """
    _check_square(u, v, "nonlinear_cdf")
    a = u * u
    b = v * v
    if a == 1.0 and b == 1.0:
        return 1.0 if (u > 0.0 and v > 0.0) else 0.0
    den = math.sqrt(1.0 - a * b)
    val = (u + v + 1.0) / 4.0 + (
        u * clamped_arcsin(v * math.sqrt(1.0 - a) / den)
        + v * clamped_arcsin(u * math.sqrt(1.0 - b) / den)
    ) / _TWO_PI
    return _clamp01(val)


# ---------------------------------------------------------------------------
# model classes
# ---------------------------------------------------------------------------

def _make_rng(seed: int) -> np.random.Generator:
    if not isinstance(seed, (int, np.integer)):
        raise DomainError(f"seed must be an integer, got {seed!r}")
    if not 0 <= int(seed) < _MAX_SEED:
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed!r}")
    return np.random.Generator(np.random.PCG64(int(seed)))


class CopulaModel:
    """Common interface of the four models.

    Attributes
    ----------
    dim : int
        Dimension of the cube the copula lives on (2 or 3).
    name : str
        Short identifier: ``circular``, ``spherical``, ``elliptical`` or
        ``nonlinear``.
    """

    dim: int
    name: str

    def pdf(self, *point: float) -> float:
        raise NotImplementedError

    def cdf(self, *point: float) -> float:
        raise NotImplementedError

    def survival(self, *point: float) -> float:
        raise NotImplementedError

    def in_support(self, *point: float, tol: float = 1e-12) -> bool:
        raise NotImplementedError

    def sample(self, n: int, seed: int) -> "SampleBatch":
        raise NotImplementedError

    def describe(self) -> str:
        return self.name


@dataclass(frozen=True)
class SampleBatch:
    """Exact samples from a model plus everything needed to reproduce them."""

    model: CopulaModel
    seed: int
    points: np.ndarray
    rng_algorithm: str = RNG_ALGORITHM

    def __len__(self) -> int:
        return self.points.shape[0]


def _circular_points(rng: np.random.Generator, n: int) -> np.ndarray:
    # Angle uniform on [0, 2*pi); radius by inverse CDF: P(R <= r) =
    # 1 - sqrt(1 - r^2), hence R = sqrt(1 - W^2) with W uniform on [0, 1).
    theta = rng.uniform(0.0, _TWO_PI, n)
    w = rng.uniform(0.0, 1.0, n)
    r = np.sqrt(1.0 - w * w)
    return np.column_stack((r * np.cos(theta), r * np.sin(theta)))


@dataclass(frozen=True)
class CircularCopula(CopulaModel):
    dim: ClassVar[int] = 2
    name: ClassVar[str] = "circular"

    def pdf(self, x: float, y: float) -> float:
        return circular_pdf(x, y)

    def cdf(self, x: float, y: float) -> float:
        return circular_cdf(x, y)

    def survival(self, x: float, y: float) -> float:
        return circular_survival(x, y)

    def in_support(self, x: float, y: float, tol: float = 1e-12) -> bool:
        return x * x + y * y <= 1.0 + tol

    def sample(self, n: int, seed: int) -> SampleBatch:
        _check_sample_size(n)
        rng = _make_rng(seed)
        return SampleBatch(self, int(seed), _circular_points(rng, n))


@dataclass(frozen=True)
class SphericalCopula(CopulaModel):
    """Uniform law on the unit sphere surface, ``dim == 3`` only.

    No spherically symmetric distribution on the unit ball in dimension
    ``d >= 4`` has uniform marginals: uniform[-1, 1] marginals force
    ``E(Z_i^2) = 1/3`` while spherical symmetry on the ball gives
    ``E(Z_i^2) = E(R^2) * E(U_i^2) <= 1/d < 1/3``.  Construction with
    ``dim >= 4`` therefore raises :class:`DimensionError`.
    """

    dim: int = 3
    name: ClassVar[str] = "spherical"

    def __post_init__(self) -> None:
        if self.dim >= 4:
            raise DimensionError(
                f"no spherically symmetric model with uniform marginals exists in "
                f"dimension {self.dim}: uniform[-1, 1] marginals force "
                f"E(Z_i^2) = 1/3, but spherical symmetry on the unit ball gives "
                f"E(Z_i^2) = E(R^2) * E(U_i^2) <= 1/{self.dim} < 1/3"
            )
        if self.dim != 3:
            raise DimensionError(
                f"SphericalCopula requires dim == 3 (got {self.dim}); "
                f"use CircularCopula for the planar case"
            )

    def pdf(self, x: float, y: float, z: float) -> float:
        raise NotAbsolutelyContinuousError(
            "the spherical model is not absolutely continuous: its mass lives on "
            "the unit sphere surface, so no Lebesgue density on the ball exists"
        )

    def cdf(self, x: float, y: float, z: float) -> float:
        return spherical_cdf(x, y, z)

    def survival(self, x: float, y: float, z: float) -> float:
        """Tail probability on all of ``[-1, 1]^3``.

        Uses the closed first-octant form where it applies and assembles
        every other orthant from the CDF by inclusion-exclusion.
        """
        _check_cube3(x, y, z, "survival")
        if x >= 0.0 and y >= 0.0 and z >= 0.0:
            return spherical_survival(x, y, z)
        val = (
            1.0
            - (x + 1.0) / 2.0
            - (y + 1.0) / 2.0
            - (z + 1.0) / 2.0
            + circular_cdf(x, y)
            + circular_cdf(x, z)
            + circular_cdf(y, z)
            - spherical_cdf(x, y, z)
        )
        return _clamp01(val)

    def in_support(self, x: float, y: float, z: float, tol: float = 1e-12) -> bool:
        return abs(x * x + y * y + z * z - 1.0) <= tol

    def sample(self, n: int, seed: int) -> SampleBatch:
        # The third coordinate of a uniform point on the sphere is itself
        # uniform (the area of a zone is proportional to its height), so
        # (sqrt(1-Z^2)*cos(T), sqrt(1-Z^2)*sin(T), Z) with Z ~ U[-1, 1] and
        # T ~ U[0, 2*pi) is exact.
        _check_sample_size(n)
        rng = _make_rng(seed)
        z = rng.uniform(-1.0, 1.0, n)
        theta = rng.uniform(0.0, _TWO_PI, n)
        rho = np.sqrt(1.0 - z * z)
        pts = np.column_stack((rho * np.cos(theta), rho * np.sin(theta), z))
        return SampleBatch(self, int(seed), pts)


@dataclass(frozen=True)
class EllipticalCopula(CopulaModel):
    gamma: float
    dim: ClassVar[int] = 2
    name: ClassVar[str] = "elliptical"

    def __post_init__(self) -> None:
        _check_gamma(self.gamma)

    def pdf(self, u: float, v: float) -> float:
        return elliptical_pdf(self.gamma, u, v)

    def cdf(self, u: float, v: float) -> float:
        return elliptical_cdf(self.gamma, u, v)

    def survival(self, u: float, v: float) -> float:
        # (U, V) is symmetric under joint sign change, so the tail is the
        # CDF at the reflected point.
        return elliptical_cdf(self.gamma, -u, -v)

    def correlation(self) -> float:
        return elliptical_correlation(self.gamma)

    def in_support(self, u: float, v: float, tol: float = 1e-12) -> bool:
        cg = math.cos(self.gamma)
        q = u * u + v * v - 2.0 * u * v * math.sin(self.gamma)
        return q <= cg * cg + tol

    def sample(self, n: int, seed: int) -> SampleBatch:
        _check_sample_size(n)
        rng = _make_rng(seed)
        xy = _circular_points(rng, n)
        u = xy[:, 0]
        v = xy[:, 0] * math.sin(self.gamma) + xy[:, 1] * math.cos(self.gamma)
        # The shear maps the disk into the square exactly; clip round-off
        # overshoot of at most a few ulp.
        pts = np.clip(np.column_stack((u, v)), -1.0, 1.0)
        return SampleBatch(self, int(seed), pts)

    def describe(self) -> str:
        return f"elliptical(gamma={self.gamma!r})"


@dataclass(frozen=True)
class NonlinearDiskCopula(CopulaModel):
    dim: ClassVar[int] = 2
    name: ClassVar[str] = "nonlinear"

    def pdf(self, u: float, v: float) -> float:
        return nonlinear_pdf(u, v)

    def cdf(self, u: float, v: float) -> float:
        return nonlinear_cdf(u, v)

    def survival(self, u: float, v: float) -> float:
        return nonlinear_cdf(-u, -v)

    def in_support(self, u: float, v: float, tol: float = 1e-12) -> bool:
        return abs(u) <= 1.0 + tol and abs(v) <= 1.0 + tol

    def sample(self, n: int, seed: int) -> SampleBatch:
        # Uniform disk point via R = sqrt(W), then the coordinate-wise
        # rescaling u = x/sqrt(1-y^2), v = y/sqrt(1-x^2).
        _check_sample_size(n)
        rng = _make_rng(seed)
        theta = rng.uniform(0.0, _TWO_PI, n)
        w = rng.uniform(0.0, 1.0, n)
        r = np.sqrt(w)
        x = r * np.cos(theta)
        y = r * np.sin(theta)
        u = x / np.sqrt(1.0 - y * y)
        v = y / np.sqrt(1.0 - x * x)
        # The transform maps the open disk into the square exactly; clip
        # round-off overshoot of at most a few ulp.
        pts = np.clip(np.column_stack((u, v)), -1.0, 1.0)
        return SampleBatch(self, int(seed), pts)


def _check_sample_size(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise DomainError(f"sample size must be a positive integer, got {n!r}")


def sample(model: CopulaModel, n: int, seed: int) -> SampleBatch:
    """Draw ``n`` exact samples from ``model``, reproducibly from ``seed``.

    One seed is one stream: a batch is a pure function of ``(seed, n)``.
    Callers who parallelize must partition work across disjoint seeds; the
    combined result then does not depend on the worker count.
    """
    return model.sample(n, seed)


def model_from_name(name: str, gamma: float | None = None) -> CopulaModel:
    """Build a model from its CLI name; ``gamma`` is required iff elliptical."""
    if name == "circular":
        return CircularCopula()
    if name == "spherical":
        return SphericalCopula()
    if name == "nonlinear":
        return NonlinearDiskCopula()
    if name == "elliptical":
        if gamma is None:
            raise DomainError("the elliptical model requires a gamma value")
        return EllipticalCopula(gamma)
    raise DomainError(f"unknown model {name!r}")


# ---------------------------------------------------------------------------
# rectangle mass
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Rectangle:
    """Axis-aligned rectangle inside the centered cube."""

    lower: tuple[float, ...]
    upper: tuple[float, ...]

    def __post_init__(self) -> None:
        lower = tuple(float(t) for t in self.lower)
        upper = tuple(float(t) for t in self.upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if len(lower) != len(upper):
            raise DomainError("rectangle corners must have equal dimension")
        if len(lower) not in (2, 3):
            raise DomainError("rectangles are supported in dimension 2 or 3")
        for lo, hi in zip(lower, upper):
            if not (-1.0 <= lo <= hi <= 1.0):
                raise DomainError(
                    f"rectangle must satisfy -1 <= lower <= upper <= 1, got "
                    f"lower={lower!r}, upper={upper!r}"
                )

    @property
    def dim(self) -> int:
        return len(self.lower)


def cdf_volume(model: CopulaModel, rect: Rectangle) -> float:
    """Probability mass of ``rect`` via the alternating corner sum of the CDF.

    This is the d-increasing functional: it must be nonnegative (up to
    round-off) for every rectangle.
    """
    if rect.dim != model.dim:
        raise DomainError(
            f"rectangle dimension {rect.dim} does not match model dimension {model.dim}"
        )
    total = 0.0
    for mask in product((0, 1), repeat=rect.dim):
        corner = tuple(
            rect.upper[i] if bit else rect.lower[i] for i, bit in enumerate(mask)
        )
        parity = rect.dim - sum(mask)
        term = model.cdf(*corner)
        total += term if parity % 2 == 0 else -term
    return total
