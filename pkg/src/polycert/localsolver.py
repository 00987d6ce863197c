"""Certified local preimage solving.

Recentering ``f`` about ``z0`` gives ``f(z0 + xi) = w0 + xi**k (lead + h(xi))``,
so ``f(z) = w`` becomes ``xi**k = (w - w0) / (lead + h(xi))``.  Taking a
k-th root branch turns that into a fixed-point equation

    xi = g_b((w - w0) / (h(xi) + lead))

whose right-hand side, on a disk small enough that the tail majorant
stays below ``|lead| / 4``, is a self-map with derivative modulus at most
``alpha * r**(1/k) <= 1/2`` whenever ``|w - w0| < r``.  A derivative
bound ``a`` on a convex set gives a Lipschitz constant of at most
``sqrt(2) * a`` (split into real and imaginary parts, bound each along
the connecting segment), so the map is a contraction with ratio at most
``sqrt(2)/2`` and plain iteration converges to the unique preimage
offset in the disk.

``build_model`` computes the constants; ``solve_preimage`` iterates;
``audit_certificate`` spot-checks a certificate empirically.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .branchcuts import TAU, Branch, arg_principal, kth_root_branch
from .errors import (
    BranchViolationError,
    NoConvergenceError,
    OutsideDiskError,
)
from .poly import (
    DEFAULT_MULT_THRESHOLD,
    Polynomial,
    TailSeries,
    extract_tail,
    tail_majorant,
)

SQRT2 = math.sqrt(2.0)

# Angular half-width of the forbidden sector around a branch's
# discontinuity ray.  The smallness condition on the tail keeps the
# denominator's rotation within asin(1/3) ~ 0.3398 < pi/8 ~ 0.3927, so
# iterates provably stay out of the sector of the selected branch.
RAY_HALF_ANGLE = math.pi / 8.0

_RHO_BISECT_REL = 1e-3


def _powf(base: float, expo: float) -> float:
    """exp(expo * log(base)) for base > 0.

    One powering convention for every fractional or negative exponent in
    the model formulas; no intermediate overflow for extreme bases.
    """
    return math.exp(expo * math.log(base))


def lipschitz_bound(deriv_bound: float) -> float:
    """Lipschitz constant implied by a derivative-modulus bound on a
    convex set: ``sqrt(2) * deriv_bound``."""
    if deriv_bound < 0:
        raise ValueError("derivative bound must be nonnegative")
    return SQRT2 * deriv_bound


@dataclass(frozen=True)
class LocalModel:
    """Certified local picture of ``source`` about ``z0``.

    Invariants established by ``build_model``:

    - tail majorant H(rho) <= |lead| / 4 on the closed disk of radius rho
    - r <= min(|lead|/2 * rho**k, (1/(2*alpha))**k)
    - q_bound <= sqrt(2)/2 < 1
    """

    source: Polynomial
    z0: complex
    w0: complex
    tail: TailSeries
    rho: float
    deriv_majorant: float
    alpha: float
    r: float
    q_bound: float

    @property
    def k(self) -> int:
        return self.tail.k

    def certificate(self) -> "PreimageCertificate":
        return PreimageCertificate(z0=self.z0, w0=self.w0, rho=self.rho, r=self.r)


@dataclass(frozen=True)
class PreimageCertificate:
    """Claim: every w within r of w0 has a preimage within rho of z0."""

    z0: complex
    w0: complex
    rho: float
    r: float


@dataclass(frozen=True)
class SolveReport:
    xi: complex
    z: complex
    iterations: int
    residual: float
    branch: Branch


@dataclass(frozen=True)
class AuditResult:
    passed: bool
    samples: int
    failures: int
    worst_residual: float


def choose_rho(tail: TailSeries, rho_cap: float) -> float:
    """Largest radius <= rho_cap whose tail majorant stays below |lead|/4.

    H(rho) <= |lead|/4 forces |h(xi) + lead| >= 0.75 |lead| and keeps the
    rotation angle of lead/(h(xi)+lead) within asin(1/3) < pi/8 on the
    closed disk, with margin.  The majorant is monotone in rho, so the
    cap is accepted directly when it qualifies and a bisection to 1e-3
    relative precision finds the radius otherwise (always returning a
    qualifying value).
    """
    if rho_cap <= 0:
        raise ValueError("rho_cap must be positive")
    target = abs(tail.lead) / 4.0
    if _majorant_ok(tail, rho_cap, target):
        return rho_cap
    lo = rho_cap / 2.0
    while not _majorant_ok(tail, lo, target):
        lo /= 2.0
    hi = lo * 2.0
    while hi - lo > _RHO_BISECT_REL * lo:
        mid = 0.5 * (lo + hi)
        if _majorant_ok(tail, mid, target):
            lo = mid
        else:
            hi = mid
    return lo


def _majorant_ok(tail: TailSeries, rho: float, target: float) -> bool:
    h, _ = tail_majorant(tail, rho)
    return math.isfinite(h) and h <= target


def build_model(
    f: Polynomial,
    z0: complex,
    rho_cap: float | None = None,
    mult_threshold: float = DEFAULT_MULT_THRESHOLD,
) -> LocalModel:
    """Recenter ``f`` about ``z0`` and compute the certified constants.

    ``rho_cap`` defaults to ``1 + |z0|`` to keep models scale-aware.
    ``alpha`` uses the larger of the two denominator-exponent readings
    ``3 - 1/k`` and ``1 + 1/k`` so the derivative bound holds regardless
    of whether ``|2/lead|`` exceeds 1 (they agree at k = 1).

    Raises ``LocallyConstantError`` when ``f`` has no usable coefficient
    past the constant at ``z0``.
    """
    z0 = complex(z0)
    shifted = f.taylor_shift(z0)
    tail = extract_tail(shifted, mult_threshold)
    if rho_cap is None:
        rho_cap = 1.0 + abs(z0)
    rho = choose_rho(tail, rho_cap)
    _, hp = tail_majorant(tail, rho)
    k = tail.k
    lead_mag = abs(tail.lead)
    base = 2.0 / lead_mag
    growth = max(base ** (3.0 - 1.0 / k), base ** (1.0 + 1.0 / k))
    alpha = growth * (1.0 + hp) / k
    r = min(0.5 * lead_mag * rho**k, _powf(2.0 * alpha, -float(k)))
    if not (r > 0.0 and math.isfinite(r)):
        raise ValueError(f"certified radius degenerated to {r!r} at {z0!r}")
    q_bound = SQRT2 * min(0.5, alpha * _powf(r, 1.0 / k))
    return LocalModel(
        source=f,
        z0=z0,
        w0=shifted.coeffs[0],
        tail=tail,
        rho=rho,
        deriv_majorant=hp,
        alpha=alpha,
        r=r,
        q_bound=q_bound,
    )


def select_branch(model: LocalModel, w: complex) -> Branch:
    """G1 when Re((w - w0)/lead) < 0, G2 otherwise (ties included).

    This puts the argument fed to the root branch at angular distance
    more than pi/8 from that branch's discontinuity ray for every point
    of the model disk.
    """
    ratio = (w - model.w0) / model.tail.lead
    return Branch.G1 if ratio.real < 0.0 else Branch.G2


def contraction_step(model: LocalModel, w: complex, branch: Branch, xi: complex) -> complex:
    """One application of the fixed-point map at ``xi``.

    Asserts that the argument handed to the root branch avoids the
    branch's discontinuity ray; a violation means the model constants
    were not built correctly and raises ``BranchViolationError``.
    """
    if w == model.w0:
        return 0j
    denom = model.tail.value(xi) + model.tail.lead
    v = (w - model.w0) / denom
    theta = arg_principal(v)
    if branch is Branch.G1:
        violated = abs(theta) < RAY_HALF_ANGLE
    else:
        violated = math.pi - abs(theta) < RAY_HALF_ANGLE
    if violated:
        raise BranchViolationError(
            f"argument {theta!r} within {RAY_HALF_ANGLE!r} of the {branch.value} cut"
        )
    return kth_root_branch(v, model.tail.k, branch)


def solve_preimage(
    model: LocalModel,
    w: complex,
    tol: float | None = None,
    max_iter: int = 200,
) -> SolveReport:
    """Solve f(z0 + xi) = w inside the certified disk by iterating the
    contraction from xi = 0.

    Requires ``|w - w0| < r`` (``OutsideDiskError`` otherwise).  The
    returned residual is measured against the source polynomial and is
    at most ``tol`` (default ``1e-12 * (1 + |w|)``); iteration continues
    until the residual criterion is met, since that is what the report
    promises -- the contraction ratio guarantees the steps shrink
    geometrically on the way.  A stalled iterate (zero step, residual
    still above tol) or an exhausted budget raises
    ``NoConvergenceError``.
    """
    if tol is None:
        tol = 1e-12 * (1.0 + abs(w))
    if tol <= 0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if w == model.w0:
        residual = abs(model.source(model.z0) - w)
        return SolveReport(
            xi=0j,
            z=model.z0,
            iterations=0,
            residual=residual,
            branch=select_branch(model, w),
        )
    if abs(w - model.w0) >= model.r:
        raise OutsideDiskError(
            f"|w - w0| = {abs(w - model.w0)!r} >= certified radius {model.r!r}"
        )
    branch = select_branch(model, w)
    xi = 0j
    for n in range(1, max_iter + 1):
        nxt = contraction_step(model, w, branch, xi)
        step = abs(nxt - xi)
        xi = nxt
        z = model.z0 + xi
        residual = abs(model.source(z) - w)
        if residual <= tol:
            return SolveReport(xi=xi, z=z, iterations=n, residual=residual, branch=branch)
        if step == 0.0:
            raise NoConvergenceError(
                f"iteration stalled at residual {residual!r} > tol {tol!r}"
            )
    raise NoConvergenceError(f"no convergence within {max_iter} iterations")


def audit_certificate(
    f: Polynomial,
    cert: PreimageCertificate,
    samples: int,
    tol: float,
    seed: int = 0,
) -> AuditResult:
    """Empirically check a certificate: sample values uniformly in the
    claimed image disk (radius shrunk by 0.1%) and require every one to
    solve with residual <= tol and preimage offset within rho.

    Solver errors count as failures rather than propagating, so an
    inflated certificate fails its audit instead of crashing it.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    model = build_model(f, cert.z0, rho_cap=cert.rho)
    rng = random.Random(seed)
    failures = 0
    worst = 0.0
    for _ in range(samples):
        radius = cert.r * 0.999 * math.sqrt(rng.random())
        w = cert.w0 + radius * cmath.exp(1j * (TAU * rng.random()))
        try:
            report = solve_preimage(model, w, tol=tol)
        except (OutsideDiskError, NoConvergenceError, BranchViolationError):
            failures += 1
            continue
        worst = max(worst, report.residual)
        if report.residual > tol or abs(report.xi) > cert.rho:
            failures += 1
    return AuditResult(
        passed=failures == 0,
        samples=samples,
        failures=failures,
        worst_residual=worst,
    )
