"""Numerical checks of higher-order interference in post-quantum toy theories."""

from . import collision, densitycube, numerics, qqt, sorkin
from .claims import ClaimReport, run_suite

__all__ = ["ClaimReport", "collision", "densitycube", "numerics", "qqt", "run_suite", "sorkin"]
