"""Complex argument conventions and k-th root branches.

Two right inverses of ``xi -> xi**k`` are provided.  They differ only in
which argument convention feeds the angle division, which moves the line
of discontinuity: ``G1`` divides the angle taken in [0, 2*pi) and is
discontinuous across the positive real axis, ``G2`` divides the angle
taken in [-pi, pi) and is discontinuous across the negative real axis.
Both satisfy ``pow_int(kth_root_branch(xi, k, b), k) == xi`` up to
rounding; the reverse composition is genuinely false in general
(``kth_root_branch(pow_int(-1, 2), 2, G1) == 1``).
"""

from __future__ import annotations

import cmath
import math
from enum import Enum

TAU = math.tau


class Branch(str, Enum):
    """Tag for the two k-th root branches."""

    G1 = "G1"
    G2 = "G2"


def _check_finite(xi: complex) -> None:
    if not cmath.isfinite(xi):
        raise ValueError(f"non-finite complex input: {xi!r}")


def arg_nonneg(xi: complex) -> float:
    """Argument of ``xi`` normalized to [0, 2*pi).

    Computed from the two-argument arctangent by adding 2*pi to negative
    results, so branch membership is bit-reproducible.  Raises
    ``ValueError`` for ``xi == 0`` (argument undefined) and for
    non-finite inputs.
    """
    _check_finite(xi)
    if xi == 0:
        raise ValueError("argument of zero is undefined")
    theta = cmath.phase(xi)  # in (-pi, pi]
    if theta < 0.0:
        theta += TAU
    return theta


def arg_principal(xi: complex) -> float:
    """Argument of ``xi`` normalized to [-pi, pi).

    The interval is closed at -pi and open at pi: values that come out
    of the arctangent as exactly +pi are mapped to -pi, so the negative
    real axis sits at -pi.
    """
    _check_finite(xi)
    if xi == 0:
        raise ValueError("argument of zero is undefined")
    theta = cmath.phase(xi)  # in (-pi, pi]
    if theta == math.pi:
        theta = -math.pi
    return theta


def kth_root_branch(xi: complex, k: int, branch: Branch) -> complex:
    """One k-th root of ``xi`` on the selected branch.

    ``xi == 0`` returns 0 (continuous extension).  The modulus root is
    computed as ``exp(log|xi|/k)``, which avoids overflow for large
    ``|xi|``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    _check_finite(xi)
    if xi == 0:
        return 0j
    theta = arg_nonneg(xi) if branch is Branch.G1 else arg_principal(xi)
    modulus = math.exp(math.log(abs(xi)) / k)
    return modulus * cmath.exp(1j * (theta / k))


def pow_int(xi: complex, k: int) -> complex:
    """``xi**k`` for integer k >= 1 by repeated squaring; exact for k == 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    acc = complex(1.0, 0.0)
    base = complex(xi)
    n = k
    while True:
        if n & 1:
            acc *= base
        n >>= 1
        if not n:
            return acc
        base *= base
