"""Job layer shared by the CLI and the HTTP service.

A job names one of the solver commands plus its polynomial and options;
``run_job`` produces the wire report as a plain dict.  ``render_json``
serializes reports deterministically: insertion-ordered keys and every
float formatted with 17 significant digits, so identical jobs give
byte-identical output.
"""

from __future__ import annotations

import math
from typing import Literal, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from .continuation import (
    ContinuationTrace,
    all_roots,
    continue_to_value,
    cos_composite_root,
)
from .localsolver import build_model, solve_preimage
from .poly import Polynomial

Pair = tuple[float, float]

Command = Literal["root", "all-roots", "preimage", "certify", "demo-composite"]

# The showcase composite: outer(cos(inner(z))) with outer = s^7 - 3s + 1
# and inner = z^2 + z + i.
DEMO_OUTER = Polynomial((1, -3, 0, 0, 0, 0, 0, 1))
DEMO_INNER = Polynomial((1j, 1, 1))


class JobOptions(BaseModel):
    target: Pair = (0.0, 0.0)
    start: Pair = (0.0, 0.0)
    tol: float = Field(default=1e-10, gt=0.0)
    max_steps: int = Field(default=10_000, ge=1)
    rho_cap: Optional[float] = Field(default=None, gt=0.0)
    seed: int = 0
    trace: bool = False
    output_format: Literal["pretty", "json"] = "pretty"

    @field_validator("target", "start", "tol", "rho_cap")
    @classmethod
    def _finite(cls, v):
        values = v if isinstance(v, tuple) else (v,)
        for x in values:
            if x is not None and not math.isfinite(x):
                raise ValueError("values must be finite")
        return v


class JobSpec(BaseModel):
    command: Command
    coeffs: list[Pair] = []
    options: JobOptions = JobOptions()

    @field_validator("coeffs")
    @classmethod
    def _finite_coeffs(cls, v):
        for re, im in v:
            if not (math.isfinite(re) and math.isfinite(im)):
                raise ValueError("coefficients must be finite")
        return v

    @model_validator(mode="after")
    def _coeffs_required(self):
        if self.command != "demo-composite" and not self.coeffs:
            raise ValueError(f"command {self.command!r} needs a nonempty coefficient list")
        return self


def _to_complex(pair: Pair) -> complex:
    return complex(pair[0], pair[1])


def _to_pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _polynomial(job: JobSpec) -> Polynomial:
    return Polynomial(tuple(complex(re, im) for re, im in job.coeffs))


def _trace_report(trace: ContinuationTrace) -> dict:
    return {
        "target": _to_pair(trace.target),
        "converged": trace.converged,
        "steps": [
            {"z": _to_pair(s.z), "w": _to_pair(s.w), "r": s.r} for s in trace.steps
        ],
    }


def run_job(job: JobSpec) -> dict:
    """Execute a job and return its report dict.

    Raises ``SolverError`` subclasses on solve failures and ``ValueError``
    on semantically bad inputs; the callers map those to exit codes or
    HTTP statuses.
    """
    opts = job.options
    if job.command == "demo-composite":
        tol = min(opts.tol, 1e-8)
        staged = cos_composite_root(DEMO_OUTER, DEMO_INNER, tol=tol)
        return {
            "s_star": _to_pair(staged.s),
            "t": _to_pair(staged.t),
            "u": _to_pair(staged.u),
            "z": _to_pair(staged.z),
            "residual": staged.residual,
        }

    f = _polynomial(job)
    target = _to_complex(opts.target)
    start = _to_complex(opts.start)

    if job.command == "root":
        z, trace = continue_to_value(
            f, start, target, tol=opts.tol, max_steps=opts.max_steps, rho_cap=opts.rho_cap
        )
        report = {"roots": [_to_pair(z)], "residuals": [abs(f(z) - target)]}
        if opts.trace:
            report["trace"] = _trace_report(trace)
        return report

    if job.command == "all-roots":
        found = all_roots(f, tol=opts.tol, max_steps=opts.max_steps, z_start=start)
        return {
            "roots": [_to_pair(z) for z in found.roots],
            "residuals": list(found.residuals),
        }

    if job.command == "preimage":
        model = build_model(f, start, rho_cap=opts.rho_cap)
        report = solve_preimage(model, target, tol=opts.tol)
        return {
            "z": _to_pair(report.z),
            "residual": report.residual,
            "iterations": report.iterations,
            "branch": report.branch.value,
        }

    if job.command == "certify":
        model = build_model(f, start, rho_cap=opts.rho_cap)
        return {
            "z0": _to_pair(model.z0),
            "w0": _to_pair(model.w0),
            "rho": model.rho,
            "r": model.r,
            "alpha": model.alpha,
            "k": model.k,
        }

    raise ValueError(f"unknown command {job.command!r}")


def render_json(value, indent: int | None = None) -> str:
    """Deterministic JSON with floats at 17 significant digits."""
    pieces: list[str] = []
    _render(value, pieces, indent, 0)
    return "".join(pieces)


def _render(value, out: list[str], indent: int | None, depth: int) -> None:
    if isinstance(value, bool):
        out.append("true" if value else "false")
    elif value is None:
        out.append("null")
    elif isinstance(value, int):
        out.append(str(value))
    elif isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"cannot serialize non-finite float {value!r}")
        out.append(format(value, ".17g"))
    elif isinstance(value, str):
        out.append('"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"')
    elif isinstance(value, (list, tuple)):
        _render_seq(value, out, indent, depth)
    elif isinstance(value, dict):
        _render_map(value, out, indent, depth)
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def _newline(out: list[str], indent: int | None, depth: int) -> None:
    if indent is not None:
        out.append("\n" + " " * (indent * depth))


def _render_seq(value, out: list[str], indent: int | None, depth: int) -> None:
    if not value:
        out.append("[]")
        return
    out.append("[")
    for i, item in enumerate(value):
        if i:
            out.append("," if indent is None else ",")
        _newline(out, indent, depth + 1)
        _render(item, out, indent, depth + 1)
    _newline(out, indent, depth)
    out.append("]")


def _render_map(value: dict, out: list[str], indent: int | None, depth: int) -> None:
    if not value:
        out.append("{}")
        return
    out.append("{")
    for i, (key, item) in enumerate(value.items()):
        if i:
            out.append(",")
        _newline(out, indent, depth + 1)
        _render(str(key), out, indent, depth + 1)
        out.append(": " if indent is not None else ":")
        _render(item, out, indent, depth + 1)
    _newline(out, indent, depth)
    out.append("}")
