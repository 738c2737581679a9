"""
Parallelism public API

便捷导出：
- 判定：norm_parallel, vradius_parallel, ParallelismCertificate
- 见证：pure_state_witness
- 校验：check_thm213_equivalence, check_cor212, check_cor214, check_central_invariance
"""

from .certificates import ParallelismCertificate, norm_parallel, parallel_tol, vradius_parallel
from .checks import (
    check_central_invariance,
    check_cor212,
    check_cor214,
    check_thm213_equivalence,
    ensure_central_unitary,
)
from .witness import pure_state_witness

__all__ = [
    "ParallelismCertificate",
    "check_central_invariance",
    "check_cor212",
    "check_cor214",
    "check_thm213_equivalence",
    "ensure_central_unitary",
    "norm_parallel",
    "parallel_tol",
    "pure_state_witness",
    "vradius_parallel",
]
