"""Riemann zeta strip decomposition (Python bindings)."""

import json as _json

from ._core import (
    ZetaError,
    __version__,
    asymptotic_im,
    classify_zero_contour,
    count_zeros_rvm,
    eval_dirichlet,
    eval_zeta,
    eval_zeta_deriv,
    find_critical_zeros,
    functional_eq_residual,
    hardy_z,
    linfit,
    phase,
    rs_theta,
    strip_asymptote,
    trace_contours,
    validate,
)
from ._core import run_json as _run_json


def run(**config):
    """Runs the full pipeline and returns the parsed report.json."""
    return _json.loads(_run_json(**config))


__all__ = [
    "ZetaError",
    "asymptotic_im",
    "classify_zero_contour",
    "count_zeros_rvm",
    "eval_dirichlet",
    "eval_zeta",
    "eval_zeta_deriv",
    "find_critical_zeros",
    "functional_eq_residual",
    "hardy_z",
    "linfit",
    "phase",
    "rs_theta",
    "run",
    "strip_asymptote",
    "trace_contours",
    "validate",
]
