"""
Algebra core public API

便捷导出：
- 元素：AlgebraElement
- 谱计算：herm_eig, jacobi_eigh, EigenDecomposition
- 范数：op_norm, spectral_radius, cartesian_parts, adjoint
"""

# Elements
from .element import AlgebraElement, Shape

# Eigensolver
from .eigen import EigenDecomposition, herm_eig, jacobi_eigh

# Norms
from .linalg import (
    adjoint,
    cartesian_parts,
    op_norm,
    spectral_radius,
)

__all__ = [
    # Elements
    "AlgebraElement",
    "Shape",
    # Eigensolver
    "EigenDecomposition",
    "herm_eig",
    "jacobi_eigh",
    # Norms
    "adjoint",
    "cartesian_parts",
    "op_norm",
    "spectral_radius",
]
