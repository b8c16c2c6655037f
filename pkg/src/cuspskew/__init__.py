"""Coarse cusp geometry of mapping tori and braid closures, made executable."""

from .braid import BraidWord, GarsideForm, normal_form, parse_braid
from .dehornoy import FdtcInterval, SigmaClass, dehornoy_floor, fdtc_interval, sigma_class
from .errors import BudgetExceeded, HypothesisViolation, ParseError, StrandMismatch

__all__ = [
    "BraidWord",
    "GarsideForm",
    "normal_form",
    "parse_braid",
    "FdtcInterval",
    "SigmaClass",
    "dehornoy_floor",
    "fdtc_interval",
    "sigma_class",
    "BudgetExceeded",
    "HypothesisViolation",
    "ParseError",
    "StrandMismatch",
]
