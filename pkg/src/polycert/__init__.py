"""Certified complex polynomial root finding.

Local models with explicit contraction constants certify an image disk
around any expansion point; a continuation engine chains those certified
hops along a straight image segment to reach arbitrary target values,
find all roots, and lift roots through exponential composites.
"""

__version__ = "0.1.0"

from .branchcuts import Branch, arg_nonneg, arg_principal, kth_root_branch, pow_int
from .continuation import (
    ContinuationTrace,
    RootSet,
    StagedCompositeReport,
    TraceStep,
    all_roots,
    boundedness_monitor,
    composite_root,
    continue_to_value,
    cos_composite_root,
)
from .errors import (
    BoundViolationError,
    BranchViolationError,
    DegenerateRootError,
    LocallyConstantError,
    NoConvergenceError,
    OutsideDiskError,
    SolverError,
    StepLimitError,
)
from .localsolver import (
    AuditResult,
    LocalModel,
    PreimageCertificate,
    SolveReport,
    audit_certificate,
    build_model,
    choose_rho,
    contraction_step,
    lipschitz_bound,
    select_branch,
    solve_preimage,
)
from .poly import DEFAULT_MULT_THRESHOLD, Polynomial, TailSeries, extract_tail, tail_majorant

__all__ = [
    "__version__",
    "Branch",
    "arg_nonneg",
    "arg_principal",
    "kth_root_branch",
    "pow_int",
    "Polynomial",
    "TailSeries",
    "extract_tail",
    "tail_majorant",
    "DEFAULT_MULT_THRESHOLD",
    "LocalModel",
    "PreimageCertificate",
    "SolveReport",
    "AuditResult",
    "lipschitz_bound",
    "choose_rho",
    "build_model",
    "select_branch",
    "contraction_step",
    "solve_preimage",
    "audit_certificate",
    "ContinuationTrace",
    "TraceStep",
    "RootSet",
    "StagedCompositeReport",
    "continue_to_value",
    "all_roots",
    "boundedness_monitor",
    "composite_root",
    "cos_composite_root",
    "SolverError",
    "LocallyConstantError",
    "OutsideDiskError",
    "NoConvergenceError",
    "StepLimitError",
    "BranchViolationError",
    "BoundViolationError",
    "DegenerateRootError",
]
