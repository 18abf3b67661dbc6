"""Exact invariants of cyclic quotient singularities, plumbings and rational blow-downs."""

from ._core import (
    RbdError,
    blowdown,
    ck_cl,
    classify,
    cpq_string,
    double_cover,
    dual_string,
    hj_cpq_report,
    hj_expand,
    hj_expand_report,
    hj_value,
    lens_equivalent,
    lens_of_chain,
    normalize_plumbing,
    paper_z4,
    plumbing_report,
    recognize_en,
    resolve,
    run_cli,
    smoothing,
    verify_paper,
    w4n,
)

__all__ = [
    "RbdError",
    "blowdown",
    "ck_cl",
    "classify",
    "cpq_string",
    "double_cover",
    "dual_string",
    "hj_cpq_report",
    "hj_expand",
    "hj_expand_report",
    "hj_value",
    "lens_equivalent",
    "lens_of_chain",
    "normalize_plumbing",
    "paper_z4",
    "plumbing_report",
    "recognize_en",
    "resolve",
    "run_cli",
    "smoothing",
    "verify_paper",
    "w4n",
]
