"""Independent numerical ground truth for the closed-form copulas.

Three kinds of oracle live here:

* adaptive quadrature of the one-dimensional integral representations of
  the circular and spherical tail probabilities (:func:`quad_survival_circular`,
  :func:`quad_survival_spherical`),
* density-mass quadrature over rectangles (:func:`quad_mass_2d`), with the
  inner integral done in closed form (the ``t -> t / sqrt(1 - s^2)``
  substitution turns the singular inner integrand into an arcsin difference,
  leaving a bounded outer integrand),
* Monte-Carlo estimators and distribution tests (:func:`mc_cdf`,
  :func:`ks_uniform`, :func:`moment_check`).

:func:`verify_suite` runs every invariant of the math and model layers plus
all oracle comparisons and returns a structured, JSON-serializable
:class:`VerificationReport`.  Given the same seed it is deterministic.
"""

from __future__ import annotations

import datetime as _dt
import enum
import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable

import numpy as np

from . import special_math
from .copulas import (
    RNG_ALGORITHM,
    CircularCopula,
    CopulaModel,
    EllipticalCopula,
    NonlinearDiskCopula,
    Rectangle,
    SampleBatch,
    SphericalCopula,
    cdf_volume,
    circular_cdf,
    circular_survival,
    nonlinear_forward,
    nonlinear_inverse,
    spherical_cdf,
    spherical_survival,
)
from .errors import (
    DimensionError,
    DomainError,
    NotAbsolutelyContinuousError,
    OracleInconsistencyError,
    QuadratureError,
)
from .special_math import alpha, alpha_gamma, cap_intersection_area, clamped_arcsin, delta3, h_identity

__all__ = [
    "DEFAULT_QUADRATURE",
    "KS_CRITICAL_COEFF",
    "CheckResult",
    "MCEstimate",
    "QuadratureSpec",
    "Rule",
    "VerificationReport",
    "VerifyConfig",
    "integrate_adaptive",
    "ks_uniform",
    "mc_cdf",
    "moment_check",
    "quad_mass_2d",
    "quad_survival_circular",
    "quad_survival_spherical",
    "verify_suite",
]

_TWO_PI = 2.0 * math.pi
_FOUR_PI = 4.0 * math.pi

#: Asymptotic two-sided KS critical coefficient at significance 0.01.
KS_CRITICAL_COEFF = 1.63


class Rule(enum.Enum):
    GAUSS_LEGENDRE = "gauss-legendre"
    ADAPTIVE_SIMPSON = "adaptive-simpson"


@dataclass(frozen=True)
class QuadratureSpec:
    """Settings for the adaptive integrators.

    ``max_subdivisions`` caps the number of panel evaluations; exceeding it
    raises :class:`QuadratureError`.
    """

    abs_tol: float = 1e-9
    max_subdivisions: int = 1 << 20
    rule: Rule = Rule.GAUSS_LEGENDRE
    order: int = 64

    def __post_init__(self) -> None:
        if not self.abs_tol > 0.0:
            raise DomainError("abs_tol must be positive")
        if self.max_subdivisions < 4:
            raise DomainError("max_subdivisions must be at least 4")
        if self.rule is Rule.GAUSS_LEGENDRE and self.order < 16:
            raise DomainError("Gauss-Legendre order must be at least 16")


DEFAULT_QUADRATURE = QuadratureSpec()


@lru_cache(maxsize=8)
def _gl_nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def _integrate_gl(f, a: float, b: float, spec: QuadratureSpec) -> float:
    nodes, weights = _gl_nodes(spec.order)
    full = b - a

    def panel(lo: float, hi: float) -> float:
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        return half * float(np.dot(weights, np.asarray(f(mid + half * nodes), float)))

    stack = [(a, b, panel(a, b))]
    evaluations = 1
    total = 0.0
    while stack:
        lo, hi, whole = stack.pop()
        mid = 0.5 * (lo + hi)
        left = panel(lo, mid)
        right = panel(mid, hi)
        evaluations += 2
        if evaluations > spec.max_subdivisions:
            raise QuadratureError(
                f"no convergence to abs_tol={spec.abs_tol!r} within "
                f"{spec.max_subdivisions} panel evaluations"
            )
        refined = left + right
        width = hi - lo
        # Per-panel budget proportional to width keeps the summed error
        # below abs_tol; the width floor stops infinite refinement at
        # integrable endpoint singularities.
        if (
            abs(refined - whole) <= spec.abs_tol * (width / full)
            or width <= 16.0 * math.ulp(max(abs(lo), abs(hi), 1.0))
        ):
            total += refined
        else:
            stack.append((lo, mid, left))
            stack.append((mid, hi, right))
    return total


def _integrate_simpson(f, a: float, b: float, spec: QuadratureSpec) -> float:
    def feval(t: float) -> float:
        return float(np.asarray(f(np.array([t])), float)[0])

    full = b - a

    def simpson(lo: float, hi: float, flo: float, fmid: float, fhi: float) -> float:
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    a_mid = 0.5 * (a + b)
    stack = [(a, b, feval(a), feval(a_mid), feval(b))]
    evaluations = 3
    total = 0.0
    while stack:
        lo, hi, flo, fmid, fhi = stack.pop()
        mid = 0.5 * (lo + hi)
        lmid = 0.5 * (lo + mid)
        rmid = 0.5 * (mid + hi)
        flmid = feval(lmid)
        frmid = feval(rmid)
        evaluations += 2
        if evaluations > spec.max_subdivisions:
            raise QuadratureError(
                f"no convergence to abs_tol={spec.abs_tol!r} within "
                f"{spec.max_subdivisions} panel evaluations"
            )
        whole = simpson(lo, hi, flo, fmid, fhi)
        left = simpson(lo, mid, flo, flmid, fmid)
        right = simpson(mid, hi, fmid, frmid, fhi)
        width = hi - lo
        if (
            abs(left + right - whole) <= 15.0 * spec.abs_tol * (width / full)
            or width <= 16.0 * math.ulp(max(abs(lo), abs(hi), 1.0))
        ):
            total += left + right + (left + right - whole) / 15.0
        else:
            stack.append((lo, mid, flo, flmid, fmid))
            stack.append((mid, hi, fmid, frmid, fhi))
    return total


def integrate_adaptive(f, a: float, b: float, spec: QuadratureSpec | None = None) -> float:
    """Adaptively integrate a vectorized integrand ``f`` over ``[a, b]``."""
    spec = spec or DEFAULT_QUADRATURE
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("integration limits must be finite")
    if b <= a:
        return 0.0
    if spec.rule is Rule.GAUSS_LEGENDRE:
        return _integrate_gl(f, a, b, spec)
    return _integrate_simpson(f, a, b, spec)


# ---------------------------------------------------------------------------
# integral representations of the tail probabilities
# ---------------------------------------------------------------------------

#: Inward pull applied to upper limits that sit exactly where an arcsin
#: argument reaches 1; the integrand is finite there, so the perturbation
#: changes the value by far less than abs_tol.
_ENDPOINT_PULL = 1e-14


def quad_survival_circular(
    x: float, y: float, spec: QuadratureSpec | None = None
) -> float:
    """Tail probability of the circular model by 1-D quadrature.

    Evaluates ``(1/(2*pi)) * integral_x^{sqrt(1-y^2)} [pi/2 -
    arcsin(y/sqrt(1-s^2))] ds`` for ``0 <= x, y`` with ``x^2 + y^2 < 1``.
    Independent of the closed form, so it serves as its oracle.
    """
    spec = spec or DEFAULT_QUADRATURE
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
        raise DomainError(f"quad_survival_circular: ({x!r}, {y!r}) outside [0, 1]^2")
    if not x * x + y * y < 1.0:
        raise DomainError("quad_survival_circular requires x^2 + y^2 < 1")
    hi = math.sqrt(1.0 - y * y) - _ENDPOINT_PULL
    if hi <= x:
        return 0.0

    def integrand(s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, float)
        arg = np.clip(y / np.sqrt(1.0 - s * s), -1.0, 1.0)
        return 0.5 * np.pi - np.arcsin(arg)

    return integrate_adaptive(integrand, x, hi, spec) / _TWO_PI


def _quad_survival_spherical_one(
    x: float, y: float, z: float, spec: QuadratureSpec
) -> float:
    hi = math.sqrt(1.0 - y * y - z * z) - _ENDPOINT_PULL
    if hi <= x:
        return 0.0

    def integrand(s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, float)
        root = np.sqrt(1.0 - s * s)
        return (
            0.5 * np.pi
            - np.arcsin(np.clip(y / root, -1.0, 1.0))
            - np.arcsin(np.clip(z / root, -1.0, 1.0))
        )

    return integrate_adaptive(integrand, x, hi, spec) / _FOUR_PI


def quad_survival_spherical(
    x: float, y: float, z: float, spec: QuadratureSpec | None = None
) -> float:
    """First-octant tail probability of the spherical model by quadrature.

    Evaluates ``(1/(4*pi)) * integral_x^{sqrt(1-y^2-z^2)} [pi/2
    - arcsin(y/sqrt(1-s^2)) - arcsin(z/sqrt(1-s^2))] ds``.  The integral is
    exchangeable in ``(x, y, z)``; all six argument orders are evaluated and
    must agree within ``10 * abs_tol``, otherwise
    :class:`OracleInconsistencyError` is raised.
    """
    spec = spec or DEFAULT_QUADRATURE
    if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0 and 0.0 <= z <= 1.0):
        raise DomainError(
            f"quad_survival_spherical: ({x!r}, {y!r}, {z!r}) outside [0, 1]^3"
        )
    if not x * x + y * y + z * z < 1.0:
        raise DomainError("quad_survival_spherical requires x^2 + y^2 + z^2 < 1")
    values = [
        _quad_survival_spherical_one(p, q, r, spec)
        for (p, q, r) in permutations((x, y, z))
    ]
    if max(values) - min(values) > 10.0 * spec.abs_tol:
        raise OracleInconsistencyError(
            f"permutations of the tail integral disagree: spread "
            f"{max(values) - min(values)!r} exceeds {10.0 * spec.abs_tol!r}"
        )
    return values[0]


# ---------------------------------------------------------------------------
# density mass over rectangles
# ---------------------------------------------------------------------------

def _inner_mass_circular(t_lo: float, t_hi: float):
    def inner(s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, float)
        w = np.sqrt(np.maximum(1.0 - s * s, 0.0))
        wsafe = np.maximum(w, 1e-300)
        hi = np.clip(t_hi / wsafe, -1.0, 1.0)
        lo = np.clip(t_lo / wsafe, -1.0, 1.0)
        return (np.arcsin(hi) - np.arcsin(lo)) / _TWO_PI

    return inner


def _inner_mass_elliptical(gamma: float, t_lo: float, t_hi: float):
    sg = math.sin(gamma)
    cg = math.cos(gamma)

    def inner(s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, float)
        w = cg * np.sqrt(np.maximum(1.0 - s * s, 0.0))
        wsafe = np.maximum(w, 1e-300)
        center = s * sg
        hi = np.clip((t_hi - center) / wsafe, -1.0, 1.0)
        lo = np.clip((t_lo - center) / wsafe, -1.0, 1.0)
        return (np.arcsin(hi) - np.arcsin(lo)) / _TWO_PI

    return inner


def _nonlinear_antiderivative(s: np.ndarray, v: float) -> np.ndarray:
    # Antiderivative in the second coordinate of the nonlinear density at
    # fixed first coordinate s:
    #   H(s, v) = [ sqrt(1-s^2) * v * sqrt(1-v^2) / (2 * (1 - s^2 v^2))
    #               + arctan(sqrt(1-s^2) * v / sqrt(1-v^2)) / 2 ] / pi,
    # verified by differentiation and, in the tests, against raw quadrature
    # of the density.
    if v >= 1.0:
        return np.full_like(s, 0.25)
    if v <= -1.0:
        return np.full_like(s, -0.25)
    root = np.sqrt(np.maximum(1.0 - s * s, 0.0))
    cv = math.sqrt(1.0 - v * v)
    term1 = root * (v * cv) / (2.0 * (1.0 - s * s * v * v))
    term2 = 0.5 * np.arctan2(root * v, cv)
    return (term1 + term2) / math.pi


def _inner_mass_nonlinear(t_lo: float, t_hi: float):
    v_lo = max(t_lo, -1.0)
    v_hi = min(t_hi, 1.0)

    def inner(s: np.ndarray) -> np.ndarray:
        s = np.asarray(s, float)
        return _nonlinear_antiderivative(s, v_hi) - _nonlinear_antiderivative(s, v_lo)

    return inner


def quad_mass_2d(
    model: CopulaModel, rect: Rectangle, spec: QuadratureSpec | None = None
) -> float:
    """Probability mass of ``rect`` by quadrature of the model density.

    The inner integral is evaluated in closed form (arcsin difference for
    the disk-type densities, an explicit antiderivative for the nonlinear
    one), so the adaptive outer integrand is bounded.  Rejected for the
    spherical model, which has no Lebesgue density.
    """
    spec = spec or DEFAULT_QUADRATURE
    if isinstance(model, SphericalCopula) or model.dim != 2:
        raise NotAbsolutelyContinuousError(
            "quad_mass_2d requires a two-dimensional model with a density"
        )
    if rect.dim != 2:
        raise DomainError("quad_mass_2d requires a two-dimensional rectangle")
    s_lo, s_hi = max(rect.lower[0], -1.0), min(rect.upper[0], 1.0)
    t_lo, t_hi = rect.lower[1], rect.upper[1]
    if s_hi <= s_lo or t_hi <= t_lo:
        return 0.0
    if isinstance(model, CircularCopula):
        inner = _inner_mass_circular(t_lo, t_hi)
    elif isinstance(model, EllipticalCopula):
        inner = _inner_mass_elliptical(model.gamma, t_lo, t_hi)
    elif isinstance(model, NonlinearDiskCopula):
        inner = _inner_mass_nonlinear(t_lo, t_hi)
    else:
        raise NotAbsolutelyContinuousError(f"unsupported model {model.name!r}")
    return integrate_adaptive(inner, s_lo, s_hi, spec)


# ---------------------------------------------------------------------------
# Monte-Carlo estimators and distribution tests
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MCEstimate:
    """A Monte-Carlo estimate with its standard error."""

    value: float
    std_error: float
    n: int
    seed: int

    def __post_init__(self) -> None:
        if self.std_error < 0.0 or self.n < 1:
            raise DomainError("MCEstimate requires std_error >= 0 and n >= 1")


def mc_cdf(model: CopulaModel, p: tuple[float, ...], n: int, seed: int) -> MCEstimate:
    """Empirical CDF value at ``p`` from ``n`` fresh samples of ``model``."""
    if n < 1000:
        raise DomainError(f"mc_cdf requires n >= 1000, got {n!r}")
    point = tuple(float(t) for t in p)
    if len(point) != model.dim:
        raise DomainError("point dimension does not match the model")
    if any(abs(t) > 1.0 for t in point):
        raise DomainError(f"mc_cdf: point {point!r} outside the centered cube")
    batch = model.sample(n, seed)
    q = float(np.mean(np.all(batch.points <= np.asarray(point), axis=1)))
    return MCEstimate(q, math.sqrt(q * (1.0 - q) / n), n, int(seed))


def _ks_statistic(sorted_values: np.ndarray, cdf_values: np.ndarray) -> float:
    n = sorted_values.shape[0]
    idx = np.arange(1, n + 1, dtype=float)
    d_plus = float(np.max(idx / n - cdf_values))
    d_minus = float(np.max(cdf_values - (idx - 1.0) / n))
    return max(d_plus, d_minus)


def ks_uniform(samples) -> float:
    """Two-sided KS statistic of ``samples`` against uniform[-1, 1]."""
    arr = np.sort(np.asarray(samples, float))
    if arr.ndim != 1 or arr.shape[0] < 100:
        raise DomainError("ks_uniform requires at least 100 scalar samples")
    if arr[0] < -1.0 or arr[-1] > 1.0:
        raise DomainError("ks_uniform samples must lie in [-1, 1]")
    return _ks_statistic(arr, (arr + 1.0) / 2.0)


def moment_check(batch: SampleBatch) -> list[MCEstimate]:
    """Empirical second moment of each coordinate, with standard errors.

    For any model with uniform[-1, 1] marginals the target is 1/3.
    """
    pts = batch.points
    n = pts.shape[0]
    if n < 1:
        raise DomainError("moment_check requires a nonempty batch")
    sq = pts * pts
    means = sq.mean(axis=0)
    if n > 1:
        errs = sq.std(axis=0, ddof=1) / math.sqrt(n)
    else:
        errs = np.zeros_like(means)
    return [
        MCEstimate(float(m), float(e), n, batch.seed) for m, e in zip(means, errs)
    ]


# ---------------------------------------------------------------------------
# verification suite
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    name: str
    model: str
    input: object
    closed_form: float
    oracle: float
    abs_diff: float
    tol: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "model": self.model,
            "input": self.input,
            "closed_form": self.closed_form,
            "oracle": self.oracle,
            "abs_diff": self.abs_diff,
            "tol": self.tol,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    rng_algorithm: str
    seed: int
    global_pass: bool
    checks: tuple[CheckResult, ...]
    timestamp: str | None = None

    def to_dict(self) -> dict:
        doc = {
            "rng_algorithm": self.rng_algorithm,
            "seed": self.seed,
            "global_pass": self.global_pass,
            "checks": [c.to_dict() for c in self.checks],
        }
        if self.timestamp is not None:
            doc["timestamp"] = self.timestamp
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


@dataclass
class VerifyConfig:
    """Settings for :func:`verify_suite`.

    ``alpha_fn`` exists as a fault-injection hook for tests: replacing it
    with a corrupted function must flip the alpha-vs-integral check (and
    the global flag) to failure.
    """

    seed: int = 20260810
    n_samples: int = 200_000
    mc_n: int = 100_000
    rect_count: int = 10_000
    mass_rect_count: int = 25
    gammas: tuple[float, ...] = (-math.pi / 4, math.pi / 8, math.pi / 4)
    quadrature: QuadratureSpec = field(default_factory=QuadratureSpec)
    tol_scale: float = 1.0
    include_timestamp: bool = True
    alpha_fn: Callable[[float, float], float] = special_math.alpha

    def __post_init__(self) -> None:
        if self.n_samples < 1000 or self.mc_n < 1000:
            raise DomainError("verification needs at least 1000 samples")
        if self.tol_scale < 0.0:
            raise DomainError("tol_scale must be nonnegative")


def _derived_seed(master: int, index: int) -> int:
    # Deterministic per-purpose stream so the report does not depend on
    # check execution order.
    return (int(master) * 0x9E3779B97F4A7C15 + 0x632BE59BD9B4E019 * (index + 1)) % (
        2**63
    )


class _Recorder:
    def __init__(self, cfg: VerifyConfig):
        self.cfg = cfg
        self.rows: list[CheckResult] = []

    def add(
        self,
        name: str,
        model: str,
        input_: object,
        closed: float,
        oracle_val: float,
        tol: float,
        passed: bool | None = None,
    ) -> None:
        tol = tol * self.cfg.tol_scale
        diff = abs(closed - oracle_val)
        if passed is None:
            passed = diff <= tol
        self.rows.append(
            CheckResult(
                name,
                model,
                input_,
                float(closed),
                float(oracle_val),
                float(diff),
                float(tol),
                bool(passed),
            )
        )


def _grid(n: int, lo: float = -1.0, hi: float = 1.0) -> np.ndarray:
    return np.linspace(lo, hi, n)


def _random_rectangles(rng: np.random.Generator, count: int, dim: int) -> list[Rectangle]:
    a = rng.uniform(-1.0, 1.0, (count, dim))
    b = rng.uniform(-1.0, 1.0, (count, dim))
    lows = np.minimum(a, b)
    highs = np.maximum(a, b)
    return [
        Rectangle(tuple(lows[i]), tuple(highs[i])) for i in range(count)
    ]


def _all_models(cfg: VerifyConfig) -> list[CopulaModel]:
    return [
        CircularCopula(),
        SphericalCopula(),
        *[EllipticalCopula(g) for g in cfg.gammas],
        NonlinearDiskCopula(),
    ]


def verify_suite(config: VerifyConfig | None = None) -> VerificationReport:
    """Run every invariant and oracle comparison; never raises on failures.

    The outcome of each check lands in the report; the global flag is the
    conjunction of the per-check flags.
    """
    cfg = config or VerifyConfig()
    rec = _Recorder(cfg)
    spec = cfg.quadrature
    models = _all_models(cfg)
    two_d_density_models = [m for m in models if m.dim == 2]

    # Fixed per-purpose sample batches, one per model.
    batches = {
        m.describe(): m.sample(cfg.n_samples, _derived_seed(cfg.seed, 1000 + i))
        for i, m in enumerate(models)
    }

    # --- scalar-layer invariants -------------------------------------
    pts_interior = [
        (x, y)
        for x in _grid(19, -0.95, 0.95)
        for y in _grid(19, -0.95, 0.95)
        if x * x + y * y < 1.0
    ]
    worst = 0.0
    for x, y in pts_interior:
        base = alpha(abs(x), abs(y))
        for ex in (-1, 1):
            for ey in (-1, 1):
                worst = max(worst, abs(alpha(ex * abs(x), ey * abs(y)) - ex * ey * base))
    rec.add("alpha_sign_equivariance", "-", "19x19 interior grid", worst, 0.0, 1e-12)

    thetas = (np.arange(200) + 0.5) * (0.5 * math.pi / 200)
    shrink = 1.0 - 1e-10
    worst = max(
        abs(
            alpha(shrink * math.cos(t), shrink * math.sin(t))
            - alpha(math.cos(t), math.sin(t))
        )
        for t in thetas
    )
    rec.add("alpha_boundary_continuity", "-", "200 circle points", worst, 0.0, 1e-9)

    worst = max(abs(alpha(float(x), 1.0) - x / 4.0) for x in _grid(41))
    rec.add("alpha_unit_edge", "-", "x in [-1, 1], y = 1", worst, 0.0, 1e-12)

    worst = max(
        abs(alpha_gamma(0.0, float(u), float(v)) - alpha(float(u), float(v)))
        for u in _grid(41)
        for v in _grid(41)
    )
    rec.add("alpha_gamma_zero_reduction", "-", "41x41 grid", worst, 0.0, 1e-12)

    for g in cfg.gammas:
        worst = max(
            abs(alpha_gamma(-g, -float(u), float(v)) + alpha_gamma(g, float(u), float(v)))
            for u in _grid(21)
            for v in _grid(21)
        )
        rec.add(
            "alpha_gamma_negation_symmetry",
            f"elliptical(gamma={g!r})",
            "21x21 grid",
            worst,
            0.0,
            1e-12,
        )

    rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 1)))
    triples = rng.uniform(-1.0, 1.0, (200, 3))
    worst = 0.0
    for x, y, z in triples:
        base = delta3(x, y, z)
        worst = max(
            worst,
            max(abs(delta3(*perm) - base) for perm in permutations((x, y, z))),
        )
    rec.add("delta3_permutation_bitwise", "-", "200 random triples", worst, 0.0, 0.0)

    worst = max(
        abs(h_identity(float(x), float(y)) - 0.5 * math.pi)
        for x in _grid(50, 0.01, 0.70)
        for y in _grid(50, 0.01, 0.70)
    )
    rec.add("h_identity_constant", "-", "50x50 grid", worst, 0.0, 1e-12)

    worst = 0.0
    for a in _grid(101, 0.0, 1.0):
        b = math.sqrt(1.0 - a * a)
        worst = max(worst, abs(clamped_arcsin(a) + clamped_arcsin(b) - 0.5 * math.pi))
    rec.add("arcsin_complement", "-", "101 unit pairs", worst, 0.0, 1e-12)

    rec.add(
        "cap_area_orthogonal_hemispheres",
        "-",
        [0.5 * math.pi, 0.5 * math.pi, 0.5 * math.pi],
        cap_intersection_area(0.5 * math.pi, 0.5 * math.pi, 0.5 * math.pi),
        math.pi,
        1e-12,
    )

    rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 2)))
    worst_sym = 0.0
    worst_tan = 0.0
    for _ in range(100):
        r1 = rng.uniform(0.1, 0.5 * math.pi)
        r2 = rng.uniform(0.1, 0.5 * math.pi)
        d = abs(r1 - r2) + rng.uniform(0.05, 0.95) * (r1 + r2 - abs(r1 - r2))
        worst_sym = max(
            worst_sym,
            abs(cap_intersection_area(r1, r2, d) - cap_intersection_area(r2, r1, d)),
        )
        worst_tan = max(worst_tan, cap_intersection_area(r1, r2, r1 + r2))
    rec.add("cap_area_symmetry", "-", "100 random configurations", worst_sym, 0.0, 1e-12)
    rec.add("cap_area_tangent_zero", "-", "100 tangent pairs", worst_tan, 0.0, 1e-6)

    rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 3)))
    worst = 0.0
    for _ in range(100):
        x, y = rng.uniform(0.02, 0.9, 2)
        if x * x + y * y >= 0.98:
            continue
        area = cap_intersection_area(math.acos(x), math.acos(y), 0.5 * math.pi)
        worst = max(worst, abs(area - _FOUR_PI * circular_survival(x, y)))
    rec.add("cap_area_vs_circular_survival", "circular", "100 random points", worst, 0.0, 1e-9)

    # --- alpha against the tail integral (fault-injection hook) -------
    for x, y in ((0.3, 0.4), (0.1, 0.7), (0.5, 0.2), (0.45, 0.55), (0.05, 0.05)):
        oracle_val = quad_survival_circular(x, y, spec) - (1.0 - x - y) / 4.0
        rec.add(
            "alpha_vs_integral",
            "circular",
            [x, y],
            cfg.alpha_fn(x, y),
            oracle_val,
            1e-8,
        )

    # --- model-layer invariants ---------------------------------------
    for m in models:
        worst = 0.0
        for t in _grid(41):
            t = float(t)
            target = (t + 1.0) / 2.0
            if m.dim == 2:
                worst = max(worst, abs(m.cdf(t, 1.0) - target), abs(m.cdf(1.0, t) - target))
            else:
                worst = max(
                    worst,
                    abs(m.cdf(t, 1.0, 1.0) - target),
                    abs(m.cdf(1.0, t, 1.0) - target),
                    abs(m.cdf(1.0, 1.0, t) - target),
                )
        rec.add("uniform_marginals", m.describe(), "41-point edge grids", worst, 0.0, 1e-12)

    for m in models:
        pts = _grid(41)
        if m.dim == 2:
            values = np.array([[m.cdf(float(x), float(y)) for y in pts] for x in pts])
        else:
            values = np.array(
                [
                    [[m.cdf(float(x), float(y), float(z)) for z in pts] for y in pts]
                    for x in pts
                ]
            )
        range_violation = max(float(np.max(values - 1.0)), float(np.max(-values)), 0.0)
        mono_violation = 0.0
        for axis in range(values.ndim):
            mono_violation = max(
                mono_violation, float(np.max(-np.diff(values, axis=axis), initial=0.0))
            )
        rec.add(
            "cdf_range_and_monotonicity",
            m.describe(),
            f"{len(pts)}-per-axis grid",
            max(range_violation, mono_violation),
            0.0,
            1e-12,
        )

    for i, m in enumerate(models):
        rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 10 + i)))
        rects = _random_rectangles(rng, cfg.rect_count, m.dim)
        min_vol = min(cdf_volume(m, r) for r in rects)
        rec.add(
            "rect_mass_nonnegative",
            m.describe(),
            f"{cfg.rect_count} random rectangles",
            min(min_vol, 0.0),
            0.0,
            1e-12,
        )

    for g in cfg.gammas:
        m = EllipticalCopula(g)
        worst = max(
            abs(m.cdf(float(u), float(v)) - (u + v) / 2.0 - m.cdf(-float(u), -float(v)))
            for u in _grid(21)
            for v in _grid(21)
        )
        rec.add("elliptical_point_symmetry", m.describe(), "21x21 grid", worst, 0.0, 1e-12)

    worst = max(
        abs(circular_survival(float(x), float(y)) - circular_cdf(-float(x), -float(y)))
        for x in _grid(21)
        for y in _grid(21)
    )
    rec.add("circular_survival_reflection", "circular", "21x21 grid", worst, 0.0, 0.0)

    worst = max(
        abs(spherical_cdf(float(x), float(y), 1.0) - circular_cdf(float(x), float(y)))
        for x in _grid(41)
        for y in _grid(41)
    )
    rec.add("spherical_margin_collapse", "spherical", "41x41 grid", worst, 0.0, 1e-12)

    rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 4)))
    worst = 0.0
    for _ in range(100):
        x, y, z = rng.uniform(-1.0, 1.0, 3)
        base = spherical_cdf(x, y, z)
        worst = max(
            worst,
            max(abs(spherical_cdf(*perm) - base) for perm in permutations((x, y, z))),
        )
    rec.add("spherical_exchangeability", "spherical", "100 random triples", worst, 0.0, 1e-12)

    sph = SphericalCopula()
    rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 5)))
    worst = 0.0
    for _ in range(100):
        x, y, z = rng.uniform(0.0, 0.57, 3)
        direct = spherical_survival(x, y, z)
        assembled = (
            1.0
            - (x + 1.0) / 2.0
            - (y + 1.0) / 2.0
            - (z + 1.0) / 2.0
            + circular_cdf(x, y)
            + circular_cdf(x, z)
            + circular_cdf(y, z)
            - spherical_cdf(x, y, z)
        )
        worst = max(worst, abs(direct - assembled))
    rec.add(
        "spherical_survival_inclusion_exclusion",
        "spherical",
        "100 first-octant points",
        worst,
        0.0,
        1e-12,
    )

    rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 6)))
    worst = 0.0
    for _ in range(10_000):
        r = math.sqrt(rng.uniform(0.0, 0.999))
        t = rng.uniform(0.0, _TWO_PI)
        x, y = r * math.cos(t), r * math.sin(t)
        u, v = nonlinear_forward(x, y)
        xb, yb = nonlinear_inverse(u, v)
        worst = max(worst, abs(xb - x), abs(yb - y))
    rec.add("nonlinear_round_trip", "nonlinear", "10000 random disk points", worst, 0.0, 1e-12)

    for m in two_d_density_models:
        bad = 0
        for x in _grid(31):
            for y in _grid(31):
                val = m.pdf(float(x), float(y))
                inside = m.in_support(float(x), float(y), tol=-1e-9)
                if inside and val <= 0.0:
                    bad += 1
                if not m.in_support(float(x), float(y), tol=1e-9) and val != 0.0:
                    bad += 1
        rec.add("density_support", m.describe(), "31x31 grid", float(bad), 0.0, 0.0)

    for m in models:
        batch = batches[m.describe()]
        pts = batch.points
        if isinstance(m, CircularCopula):
            violation = float(np.max(np.sum(pts * pts, axis=1) - 1.0, initial=0.0))
        elif isinstance(m, SphericalCopula):
            violation = float(np.max(np.abs(np.sum(pts * pts, axis=1) - 1.0)))
        elif isinstance(m, EllipticalCopula):
            q = (
                pts[:, 0] ** 2
                + pts[:, 1] ** 2
                - 2.0 * pts[:, 0] * pts[:, 1] * math.sin(m.gamma)
            )
            violation = float(np.max(q - math.cos(m.gamma) ** 2, initial=0.0))
        else:
            violation = float(np.max(np.abs(pts) - 1.0, initial=0.0))
        rec.add(
            "sampler_support",
            m.describe(),
            f"n={cfg.n_samples}",
            max(violation, 0.0),
            0.0,
            1e-12,
        )

    for i, m in enumerate(models):
        seed = _derived_seed(cfg.seed, 2000 + i)
        b1 = m.sample(2000, seed)
        b2 = m.sample(2000, seed)
        identical = np.array_equal(b1.points, b2.points)
        rec.add(
            "sampler_determinism",
            m.describe(),
            f"seed={seed}",
            0.0 if identical else 1.0,
            0.0,
            0.0,
        )

    # Radial law of the circular sampler: P(R <= r) = 1 - sqrt(1 - r^2).
    circ_batch = batches[CircularCopula().describe()]
    radii = np.sort(np.sqrt(np.sum(circ_batch.points**2, axis=1)))
    radial_cdf = 1.0 - np.sqrt(np.maximum(1.0 - radii * radii, 0.0))
    ks_radial = _ks_statistic(radii, radial_cdf)
    crit = KS_CRITICAL_COEFF / math.sqrt(cfg.n_samples)
    rec.add("circular_radial_law_ks", "circular", f"n={cfg.n_samples}", ks_radial, 0.0, crit)

    for m in models:
        batch = batches[m.describe()]
        worst = max(ks_uniform(batch.points[:, k]) for k in range(m.dim))
        rec.add("ks_uniform_marginals", m.describe(), f"n={cfg.n_samples}", worst, 0.0, crit)

    rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 7)))
    disk_r = np.sqrt(rng.uniform(0.0, 1.0, cfg.n_samples))
    disk_t = rng.uniform(0.0, _TWO_PI, cfg.n_samples)
    ks_disk = ks_uniform(disk_r * np.cos(disk_t))
    rec.add(
        "ks_negative_control_disk_marginal",
        "-",
        f"n={cfg.n_samples}",
        ks_disk,
        crit,
        crit,
        passed=ks_disk > crit,
    )

    for m in models:
        batch = batches[m.describe()]
        moments = moment_check(batch)
        worst = max(abs(e.value - 1.0 / 3.0) for e in moments)
        band = 4.0 * max(e.std_error for e in moments)
        rec.add("second_moment_one_third", m.describe(), f"n={cfg.n_samples}", worst, 0.0, band)

    for g in cfg.gammas:
        batch = batches[EllipticalCopula(g).describe()]
        u, v = batch.points[:, 0], batch.points[:, 1]
        corr = float(np.corrcoef(u, v)[0, 1])
        target = math.sin(g)
        band = 4.0 * (1.0 - target * target) / math.sqrt(cfg.n_samples)
        rec.add(
            "elliptical_correlation",
            f"elliptical(gamma={g!r})",
            f"n={cfg.n_samples}",
            corr,
            target,
            band,
        )

    nl_batch = batches[NonlinearDiskCopula().describe()]
    uv = nl_batch.points[:, 0] * nl_batch.points[:, 1]
    band = 4.0 * float(np.std(uv, ddof=1)) / math.sqrt(cfg.n_samples)
    rec.add(
        "nonlinear_uncorrelated",
        "nonlinear",
        f"n={cfg.n_samples}",
        float(np.mean(uv)),
        0.0,
        band,
    )

    raised = 0
    for dim in (4, 7):
        try:
            SphericalCopula(dim=dim)
        except DimensionError:
            raised += 1
    rec.add("dimension_guard", "spherical", "dims (4, 7)", float(raised), 2.0, 0.0)

    ones = mc_cdf(CircularCopula(), (1.0, 1.0), 1000, _derived_seed(cfg.seed, 8))
    rec.add(
        "mc_cdf_at_all_ones",
        "circular",
        [1.0, 1.0],
        ones.value,
        1.0,
        0.0,
        passed=(ones.value == 1.0 and ones.std_error == 0.0),
    )

    mc_points: list[tuple[CopulaModel, tuple[float, ...]]] = [
        (CircularCopula(), (0.0, 0.0)),
        (CircularCopula(), (0.3, -0.2)),
        (SphericalCopula(), (0.2, 0.3, 0.4)),
        (NonlinearDiskCopula(), (0.5, 0.5)),
    ]
    mc_points.extend((EllipticalCopula(g), (0.3, -0.2)) for g in cfg.gammas)
    for i, (m, p) in enumerate(mc_points):
        est = mc_cdf(m, p, cfg.mc_n, _derived_seed(cfg.seed, 3000 + i))
        rec.add(
            "mc_cdf_vs_closed_form",
            m.describe(),
            list(p),
            est.value,
            m.cdf(*p),
            4.0 * max(est.std_error, 1e-12),
        )

    # --- quadrature oracles -------------------------------------------
    rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 9)))
    worst = 0.0
    for _ in range(10):
        x, y = rng.uniform(0.0, 0.9, 2)
        if x * x + y * y >= 0.995:
            continue
        worst = max(
            worst, abs(circular_survival(x, y) - quad_survival_circular(x, y, spec))
        )
    rec.add("quad_survival_circular_vs_closed", "circular", "10 random points", worst, 0.0, 1e-8)

    worst = max(
        abs(quad_survival_circular(float(x), 0.0, spec) - (1.0 - x) / 4.0)
        for x in _grid(10, 0.0, 0.9)
    )
    rec.add("quad_survival_circular_on_axis", "circular", "x in [0, 0.9], y = 0", worst, 0.0, 1e-8)

    rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 11)))
    worst = 0.0
    for _ in range(5):
        x, y, z = rng.uniform(0.05, 0.55, 3)
        closed = spherical_survival(x, y, z)
        worst = max(
            worst,
            max(
                abs(closed - _quad_survival_spherical_one(p, q, r, spec))
                for (p, q, r) in permutations((x, y, z))
            ),
        )
    rec.add(
        "quad_survival_spherical_vs_closed",
        "spherical",
        "5 random points x 6 permutations",
        worst,
        0.0,
        1e-8,
    )

    full_square = Rectangle((-1.0, -1.0), (1.0, 1.0))
    for m in two_d_density_models:
        mass = quad_mass_2d(m, full_square, spec)
        rec.add("density_normalization", m.describe(), "full square", mass, 1.0, 1e-9)

    for i, m in enumerate(two_d_density_models):
        rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 4000 + i)))
        rects = _random_rectangles(rng, cfg.mass_rect_count, 2)
        worst = max(abs(cdf_volume(m, r) - quad_mass_2d(m, r, spec)) for r in rects)
        rec.add(
            "rect_mass_vs_cdf_volume",
            m.describe(),
            f"{cfg.mass_rect_count} random rectangles",
            worst,
            0.0,
            1e-6,
        )

    sph_batch = batches[sph.describe()]
    rng = np.random.Generator(np.random.PCG64(_derived_seed(cfg.seed, 12)))
    rects = _random_rectangles(rng, 5, 3)
    worst_excess = 0.0
    for r in rects:
        lo = np.asarray(r.lower)
        hi = np.asarray(r.upper)
        inside = np.all((sph_batch.points > lo) & (sph_batch.points <= hi), axis=1)
        emp = float(np.mean(inside))
        vol = cdf_volume(sph, r)
        # Band from the closed-form probability: the empirical variance of
        # a rare rectangle can be spuriously zero.
        se = math.sqrt(max(vol * (1.0 - vol), 0.0) / cfg.n_samples)
        excess = abs(vol - emp) - 4.0 * se - 1e-9
        worst_excess = max(worst_excess, excess)
    rec.add(
        "spherical_rect_mass_vs_mc",
        "spherical",
        "5 random boxes",
        max(worst_excess, 0.0),
        0.0,
        0.0,
        passed=worst_excess <= 0.0,
    )

    checks = tuple(rec.rows)
    report = VerificationReport(
        rng_algorithm=RNG_ALGORITHM,
        seed=cfg.seed,
        global_pass=all(c.passed for c in checks),
        checks=checks,
        timestamp=(
            _dt.datetime.now(_dt.timezone.utc).isoformat() if cfg.include_timestamp else None
        ),
    )
    return report
