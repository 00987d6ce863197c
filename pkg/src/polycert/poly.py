"""Dense complex polynomials and the series plumbing for recentering.

Coefficients are stored ascending: ``coeffs[j]`` multiplies ``z**j``.
Recentering a polynomial about ``z0`` and splitting off the first
nonvanishing coefficient past the constant gives the local form

    f(z0 + xi) = f(z0) + xi**k * (lead + h(xi)),

where the tail ``h`` collects everything of higher order.  ``h`` and its
derivative are bounded on closed disks by coefficient-absolute-value
majorants: always upper bounds (triangle inequality), never sharp, which
is the safe direction for every radius formula built on them.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import LocallyConstantError

# Relative cutoff below which a recentred coefficient counts as zero when
# locating the first nonvanishing index.  Exact arithmetic has no such
# ambiguity; floating point needs the knob.
DEFAULT_MULT_THRESHOLD = 1e-12


@dataclass(frozen=True)
class Polynomial:
    """Polynomial a_0 + a_1 z + ... + a_m z**m with complex coefficients."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(complex(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        for c in coeffs:
            if not cmath.isfinite(c):
                raise ValueError(f"non-finite coefficient: {c!r}")
        n = len(coeffs)
        while n > 1 and coeffs[n - 1] == 0:
            n -= 1
        object.__setattr__(self, "coeffs", coeffs[:n])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, z: complex) -> complex:
        """Horner evaluation."""
        acc = complex(0.0, 0.0)
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def eval_with_derivative(self, z: complex) -> tuple[complex, complex]:
        """(f(z), f'(z)) in one Horner pass."""
        val = complex(0.0, 0.0)
        der = complex(0.0, 0.0)
        for c in reversed(self.coeffs):
            der = der * z + val
            val = val * z + c
        return val, der

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial((0j,))
        return Polynomial(tuple((j + 1) * c for j, c in enumerate(self.coeffs[1:])))

    def taylor_shift(self, z0: complex) -> "Polynomial":
        """Coefficients b with f(z0 + xi) = sum b_j xi**j, exactly as
        polynomials.

        Horner-based shift (repeated synthetic division), O(m^2); fine at
        the degrees this library targets.
        """
        z0 = complex(z0)
        if not cmath.isfinite(z0):
            raise ValueError(f"non-finite shift point: {z0!r}")
        c = list(self.coeffs)
        m = len(c) - 1
        # The leading coefficient is untouched, so normalization is a no-op.
        for j in range(m):
            for i in range(m - 1, j - 1, -1):
                c[i] = c[i] + z0 * c[i + 1]
        return Polynomial(tuple(c))

    def deflate(self, root: complex) -> "Polynomial":
        """Quotient of synthetic division by (z - root); remainder dropped.

        Caller is responsible for ``root`` actually being (near) a root,
        otherwise the discarded remainder is large.
        """
        if self.degree < 1:
            raise ValueError("cannot deflate a constant polynomial")
        root = complex(root)
        m = self.degree
        q: list[complex] = [0j] * m
        q[m - 1] = self.coeffs[m]
        for i in range(m - 1, 0, -1):
            q[i - 1] = self.coeffs[i] + root * q[i]
        return Polynomial(tuple(q))


@dataclass(frozen=True)
class TailSeries:
    """The split local form at an expansion point.

    ``k`` is the minimal index >= 1 whose recentred coefficient does not
    vanish, ``lead`` that coefficient, and ``coeffs[i]`` the coefficient
    of ``xi**(i + 1)`` in the tail ``h``.  ``h_slack``/``hp_slack`` are
    optional user-supplied additive bounds on whatever the truncation
    does not represent (relevant only when the series was truncated from
    something longer); they widen the majorants and nothing else.
    """

    k: int
    lead: complex
    coeffs: tuple[complex, ...]
    h_slack: float = 0.0
    hp_slack: float = 0.0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.lead == 0:
            raise ValueError("lead coefficient must be nonzero")
        if self.h_slack < 0 or self.hp_slack < 0:
            raise ValueError("slack bounds must be nonnegative")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    def value(self, xi: complex) -> complex:
        """h(xi) of the represented truncation (slacks are bounds, not terms)."""
        acc = complex(0.0, 0.0)
        for c in reversed(self.coeffs):
            acc = (acc + c) * xi
        return acc


def extract_tail(
    shifted: Polynomial, mult_threshold: float = DEFAULT_MULT_THRESHOLD
) -> TailSeries:
    """Split a recentred polynomial into (k, lead, tail).

    ``k`` is the minimal index >= 1 with |coeff| above
    ``mult_threshold * scale`` where ``scale = max_j |coeffs[j]|``;
    smaller coefficients are treated as zero.  Raises
    ``LocallyConstantError`` when no index qualifies.
    """
    coeffs = shifted.coeffs
    scale = max(abs(c) for c in coeffs)
    cutoff = mult_threshold * scale
    for j in range(1, len(coeffs)):
        if abs(coeffs[j]) > cutoff:
            return TailSeries(k=j, lead=coeffs[j], coeffs=coeffs[j + 1 :])
    raise LocallyConstantError(
        "no coefficient above threshold past the constant term"
    )


def tail_majorant(tail: TailSeries, rho: float) -> tuple[float, float]:
    """Upper bounds (H, Hp) for sup|h| and sup|h'| on the closed disk of
    radius ``rho``, via absolute coefficient sums."""
    if rho <= 0:
        raise ValueError("rho must be positive")
    h = 0.0
    hp = 0.0
    for i in range(len(tail.coeffs) - 1, -1, -1):
        a = abs(tail.coeffs[i])
        h = (h + a) * rho
        hp = hp * rho + (i + 1) * a
    return h + tail.h_slack, hp + tail.hp_slack
