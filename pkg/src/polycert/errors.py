"""Exception types raised by the solvers."""


class SolverError(Exception):
    """Base class for reportable solve failures."""


class LocallyConstantError(SolverError):
    """Every coefficient past the constant term vanishes at the expansion
    point, so no local model exists."""


class OutsideDiskError(SolverError):
    """Requested value lies outside the certified image disk."""


class NoConvergenceError(SolverError):
    """Iteration budget exhausted or stalled before reaching tolerance."""


class StepLimitError(SolverError):
    """Continuation ran out of steps before reaching the target value."""


class BranchViolationError(SolverError):
    """An iterate produced an argument on the discontinuity ray of the
    selected root branch.  Signals a model-construction bug, not bad input."""


class BoundViolationError(SolverError):
    """A continuation trace escaped the coefficient-derived radius that
    bounds every solution it can visit.  Internal-consistency failure."""


class DegenerateRootError(SolverError):
    """The cleared composite polynomial offered no usable nonzero root."""
