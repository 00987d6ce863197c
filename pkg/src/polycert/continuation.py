"""Global value reaching by chained certified local solves.

To reach an arbitrary target value, the image of the current point walks
toward the target; every hop aims at a point strictly inside the
certified image radius of the local model, so each hop is a guaranteed
local solve, and every hop shrinks the distance to the target by exactly
the hop budget (the safety fraction of the certified radius).  Critical
points of the polynomial need no special treatment: the local model
simply comes out with k > 1 there and the same machinery applies.

Hops are not aimed straight at the target.  A straight image segment
walks head-on into any critical value lying on it -- for polynomials
with real coefficients and real start/target values that is the common
case, not the exception (e.g. deflating z^3 - 1 once leaves z^2 + z + 1,
whose critical value 3/4 sits exactly on the segment from 1 to 0) --
and near a critical value the certified radius shrinks proportionally
to the remaining distance, so the walk contracts geometrically toward
the obstruction and never passes it.  Instead, each hop lands on the
circle around the target whose radius is smaller by exactly the budget,
rotated as far sideways as the certified disk allows.  The distance
decrement per step is identical to the straight path, and the walk
traces a gentle spiral that leaves critical values at a growing angular
offset instead of running them over.

There is no uniform lower bound on the certified radius along the way,
so termination is a step budget plus the strict-progress invariant;
``StepLimitError`` is the honest failure mode.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field

from .errors import (
    BoundViolationError,
    DegenerateRootError,
    LocallyConstantError,
    NoConvergenceError,
    OutsideDiskError,
    StepLimitError,
)
from .localsolver import build_model, solve_preimage
from .poly import Polynomial

logger = logging.getLogger(__name__)

DEFAULT_MAX_STEPS = 10_000

# Each hop shrinks the distance to the target by this fraction of the
# certified radius; the strict precondition |w - w0| < r of the local
# solve then holds with margin even after spending the leftover on the
# sideways rotation (hop length stays below HOP_LENGTH_CAP * r).
STEP_SAFETY = 0.9
HOP_LENGTH_CAP = 0.999


@dataclass(frozen=True)
class TraceStep:
    z: complex
    w: complex
    r: float


@dataclass
class ContinuationTrace:
    """Visited points of a global solve, in order.

    ``steps[j].w`` strictly approaches the target along the trace, and
    every consecutive z-hop stays within the model disk built at the
    previous point.
    """

    target: complex
    steps: list[TraceStep] = field(default_factory=list)
    converged: bool = False


@dataclass
class RootSet:
    roots: list[complex]
    residuals: list[float]
    degree: int


def continue_to_value(
    f: Polynomial,
    z_start: complex,
    target: complex,
    tol: float = 1e-10,
    max_steps: int = DEFAULT_MAX_STEPS,
    rho_cap: float | None = None,
) -> tuple[complex, ContinuationTrace]:
    """Find z with |f(z) - target| <= tol by certified continuation.

    At the current point: build the local model; if the target sits
    inside the hop budget (STEP_SAFETY * r), solve for it directly and
    finish; otherwise hop to the maximally rotated point of the circle
    around the target whose radius is one budget smaller (see the module
    docstring) and advance.  Hops are solved to a tolerance far below
    the budget so the image distance decreases by essentially the full
    budget every step.

    Raises ``StepLimitError`` when ``max_steps`` is exhausted or when
    the certified radius collapses below floating-point resolution, and
    ``LocallyConstantError`` for constant ``f``.
    """
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    target = complex(target)
    z = complex(z_start)
    trace = ContinuationTrace(target=target)
    for _ in range(max_steps):
        model = build_model(f, z, rho_cap=rho_cap)
        trace.steps.append(TraceStep(z=z, w=model.w0, r=model.r))
        if abs(f(z) - target) <= tol:
            trace.converged = True
            logger.debug("converged in %d steps", len(trace.steps))
            return z, trace
        delta = target - model.w0
        dist = abs(delta)
        budget = model.r * STEP_SAFETY
        if dist <= budget:
            report = solve_preimage(model, target, tol=tol)
            trace.steps.append(TraceStep(z=report.z, w=f(report.z), r=model.r))
            trace.converged = True
            logger.debug("converged in %d steps", len(trace.steps))
            return report.z, trace
        w_next = _rotated_hop(target, -delta / dist, dist, budget, model.r)
        # Tolerance well under the budget keeps the per-step progress at
        # essentially the full budget; the floor keeps it reachable in
        # doubles when the certified radius collapses near critical
        # values.
        hop_tol = max(10.0 * tol * budget, 1e-15 * (1.0 + abs(w_next)))
        try:
            report = solve_preimage(model, w_next, tol=hop_tol)
        except (OutsideDiskError, NoConvergenceError) as exc:
            raise StepLimitError(
                f"certified step collapsed below working precision at "
                f"image distance {dist!r}: {exc}"
            ) from exc
        z = report.z
    raise StepLimitError(
        f"target not reached in {max_steps} steps "
        f"(image distance {abs(f(z) - target)!r})"
    )


def _rotated_hop(
    target: complex, outward: complex, dist: float, budget: float, r: float
) -> complex:
    """Point at distance ``dist - budget`` from the target, rotated as far
    from the straight ray as a hop of length HOP_LENGTH_CAP * r allows.

    ``outward`` is the unit vector from the target toward the current
    image point.  The law of cosines gives the largest rotation angle
    whose chord from the current point stays within the hop length cap;
    the clamp covers the short-distance corner where even the antipode
    is reachable.
    """
    shrunk = dist - budget
    if shrunk <= 0.0:
        return target
    chord_sq = (HOP_LENGTH_CAP * r) ** 2
    cos_phi = (dist * dist + shrunk * shrunk - chord_sq) / (2.0 * dist * shrunk)
    phi = math.acos(max(-1.0, min(1.0, cos_phi)))
    return target + shrunk * outward * cmath.exp(1j * phi)


def boundedness_monitor(trace: ContinuationTrace, f: Polynomial) -> float:
    """Radius that must contain every point of a trace toward its target.

    Any z with |f(z)| near the segment between f(start) and the target is
    a solution of f(z) = w with |constant coefficient - w| bounded by the
    coefficient magnitudes, so the classical coefficient quotient bound

        R = 1 + (max_{j<m} |a_j| + |target|) / |a_m|

    contains the whole trace.  Returns R; raises ``BoundViolationError``
    (an internal-consistency failure) if any recorded point escapes it.
    """
    if not trace.steps:
        raise ValueError("trace is empty")
    if f.degree < 1:
        raise ValueError("bound radius needs a non-constant polynomial")
    lead = abs(f.coeffs[-1])
    side = max(abs(c) for c in f.coeffs[:-1])
    radius = 1.0 + (side + abs(trace.target)) / lead
    slack = 1e-12 * (1.0 + radius)  # rounding allowance only
    for step in trace.steps:
        if abs(step.z) > radius + slack:
            raise BoundViolationError(
                f"trace point {step.z!r} outside radius {radius!r}"
            )
    return radius


def all_roots(
    f: Polynomial,
    tol: float = 1e-10,
    max_steps: int = DEFAULT_MAX_STEPS,
    z_start: complex = 0j,
) -> RootSet:
    """All roots of ``f`` (with multiplicity count), by repeated
    continuation to zero and deflation.

    Each deflated-round root is re-polished by one continuation run
    against the original polynomial, countering drift from inexact
    deflation; residuals are reported against the original.  Every
    continuation trace is checked against the boundedness radius as an
    internal consistency test.  Clustered roots come out with honestly
    degraded residuals rather than multiplicity labels.
    """
    if f.degree < 1:
        raise LocallyConstantError("constant polynomial has no roots to find")
    work = f
    estimates: list[complex] = []
    for _ in range(f.degree):
        root, trace = continue_to_value(work, z_start, 0j, tol=tol, max_steps=max_steps)
        boundedness_monitor(trace, work)
        estimates.append(root)
        work = work.deflate(root)
    roots: list[complex] = []
    residuals: list[float] = []
    for estimate in estimates:
        polished, trace = continue_to_value(f, estimate, 0j, tol=tol, max_steps=max_steps)
        boundedness_monitor(trace, f)
        roots.append(polished)
        residuals.append(abs(f(polished)))
    return RootSet(roots=roots, residuals=residuals, degree=f.degree)


def composite_root(
    p: Polynomial,
    q: Polynomial,
    exp_scale: complex,
    target: complex,
    tol: float = 1e-8,
) -> complex:
    """A z with p(e**(a z)) + q(e**(-a z)) = target, a = exp_scale.

    Clearing denominators in p(t) + q(1/t) = target against t**deg(q)
    gives an ordinary polynomial whose constant term is the leading
    coefficient of q, hence nonzero: its roots avoid t = 0 and any of
    them lifts back through the principal logarithm, z = log(t) / a.
    Among roots with |t| > 1e-8 the one with the smallest direct
    composite residual is returned; ``DegenerateRootError`` if none
    qualifies.
    """
    if p.degree < 1 or q.degree < 1:
        raise ValueError("p and q must be non-constant")
    exp_scale = complex(exp_scale)
    if exp_scale == 0:
        raise ValueError("exp_scale must be nonzero")
    dq = q.degree
    cleared = [0j] * (p.degree + dq + 1)
    for j, c in enumerate(p.coeffs):
        cleared[j + dq] += c
    for j, c in enumerate(q.coeffs):
        cleared[dq - j] += c
    cleared[dq] -= target
    t_candidates = [
        t
        for t in all_roots(Polynomial(tuple(cleared)), tol=min(tol, 1e-10)).roots
        if abs(t) > 1e-8
    ]
    if not t_candidates:
        raise DegenerateRootError("cleared polynomial has no usable nonzero root")

    def residual_at(t: complex) -> tuple[complex, float]:
        z = cmath.log(t) / exp_scale
        value = p(cmath.exp(exp_scale * z)) + q(cmath.exp(-exp_scale * z))
        return z, abs(value - target)

    best_z, best_res = min(
        (residual_at(t) for t in t_candidates), key=lambda zr: zr[1]
    )
    if best_res > tol:
        raise NoConvergenceError(
            f"best composite residual {best_res!r} exceeds tol {tol!r}"
        )
    return best_z


@dataclass(frozen=True)
class StagedCompositeReport:
    s: complex
    t: complex
    u: complex
    z: complex
    residual: float


def cos_composite_root(
    outer: Polynomial, inner: Polynomial, tol: float = 1e-8
) -> StagedCompositeReport:
    """A root of outer(cos(inner(z))), solved in stages.

    Stage 1 picks the smallest-modulus root s of ``outer`` (a
    deterministic choice; any root would do).  Stage 2 inverts the
    cosine through the unit-circle substitution: t solves
    t**2 - 2 s t + 1 = 0, so cos(u) = (t + 1/t)/2 = s for u = -i log t
    (principal logarithm; the quadratic's roots are reciprocal, the
    larger-modulus one is kept for stability).  Stage 3 solves
    inner(z) = u and returns the candidate with the smallest direct
    residual of the full composite.
    """
    if outer.degree < 1 or inner.degree < 1:
        raise ValueError("outer and inner must be non-constant")
    inner_tol = min(tol, 1e-10)
    s = min(all_roots(outer, tol=inner_tol).roots, key=abs)
    disc = cmath.sqrt(s * s - 1.0)
    t = s + disc if abs(s + disc) >= abs(s - disc) else s - disc
    u = -1j * cmath.log(t)
    shifted_inner = Polynomial((inner.coeffs[0] - u,) + inner.coeffs[1:])

    def residual_at(z: complex) -> float:
        return abs(outer(cmath.cos(inner(z))))

    z = min(all_roots(shifted_inner, tol=inner_tol).roots, key=residual_at)
    report = StagedCompositeReport(s=s, t=t, u=u, z=z, residual=residual_at(z))
    if report.residual > tol:
        raise NoConvergenceError(
            f"staged composite residual {report.residual!r} exceeds tol {tol!r}"
        )
    return report
