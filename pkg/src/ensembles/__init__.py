"""
Ensembles public API

便捷导出：
- 配置：EnsembleSpec, EnsembleFamily
- 生成：generate, EnsembleFactory, random_central_unitary
"""

from .generators import (
    EnsembleFactory,
    EnsembleFamily,
    EnsembleSpec,
    generate,
    random_central_unitary,
    sample_rngs,
)

__all__ = [
    "EnsembleFactory",
    "EnsembleFamily",
    "EnsembleSpec",
    "generate",
    "random_central_unitary",
    "sample_rngs",
]
