"""Inequality verifiers and the CheckReport they produce."""

from .checks import (
    check_basic_bounds,
    check_cor24,
    check_cor25,
    check_lemma210,
    check_thm22,
    check_thm23,
    check_thm26,
    check_thm28,
    check_thm29,
    check_thm211,
    joint_sup,
    product_sup,
)
from .report import CheckReport, ReportBuilder, report_tol

__all__ = [
    "CheckReport",
    "ReportBuilder",
    "check_basic_bounds",
    "check_cor24",
    "check_cor25",
    "check_lemma210",
    "check_thm211",
    "check_thm22",
    "check_thm23",
    "check_thm26",
    "check_thm28",
    "check_thm29",
    "joint_sup",
    "product_sup",
    "report_tol",
]
