"""Rearrangement-invariant norms, maximal operators and interpolation
inequality verification on sampled functions."""

import json as _json

from ._core import (
    ExponentError,
    GridFunction,
    HypothesisError,
    ParseError,
    StepRearrangement,
    SupportError,
    TestFamilySpec,
    __version__,
    best_constant_scan,
    bump_norm_closed_form,
    convexify,
    derivative_tensor,
    falsify,
    fundamental_function,
    hlp_constant,
    holder_check,
    lorentz_factor,
    lorentz_norm,
    lorentz_saturator,
    luxemburg_norm,
    magnitude,
    maximal_operator,
    maximal_rearrangement,
    mazya_ratio,
    multiplier_norm_estimate,
    necessary_condition,
    orlicz_factor_check,
    orlicz_modular,
    rearrange,
    riesz_herz_ratio,
    space_norm,
    upper_index_estimate,
    young_check,
    young_inverse,
)
from ._core import verify_lorentz as _verify_lorentz
from ._core import verify_orlicz as _verify_orlicz
from ._core import verify_ribfs as _verify_ribfs


def verify_lorentz(*args, **kwargs):
    """Plain-norm Lorentz interpolation report as a dict."""
    return _json.loads(_verify_lorentz(*args, **kwargs))


def verify_ribfs(*args, **kwargs):
    """Maximal-function form report (Z is the multiplier-space stand-in)."""
    return _json.loads(_verify_ribfs(*args, **kwargs))


def verify_orlicz(*args, **kwargs):
    """Orlicz report: starred form plus the plain form when both upper
    indices are below one."""
    return _json.loads(_verify_orlicz(*args, **kwargs))


__all__ = [
    "ExponentError",
    "GridFunction",
    "HypothesisError",
    "ParseError",
    "StepRearrangement",
    "SupportError",
    "TestFamilySpec",
    "__version__",
    "best_constant_scan",
    "bump_norm_closed_form",
    "convexify",
    "derivative_tensor",
    "falsify",
    "fundamental_function",
    "hlp_constant",
    "holder_check",
    "lorentz_factor",
    "lorentz_norm",
    "lorentz_saturator",
    "luxemburg_norm",
    "magnitude",
    "maximal_operator",
    "maximal_rearrangement",
    "mazya_ratio",
    "multiplier_norm_estimate",
    "necessary_condition",
    "orlicz_factor_check",
    "orlicz_modular",
    "rearrange",
    "riesz_herz_ratio",
    "space_norm",
    "upper_index_estimate",
    "verify_lorentz",
    "verify_orlicz",
    "verify_ribfs",
    "young_check",
    "young_inverse",
]
