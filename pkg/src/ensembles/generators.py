"""
随机矩阵系综生成器

每个样本使用独立的 Philox 子序列（SeedSequence.spawn），同一 seed 结果完全可复现。
"""

import logging
from abc import ABC, abstractmethod
from enum import Enum
from typing import Dict, List, Sequence

import numpy as np
from pydantic import BaseModel, Field

from ..algebra.element import AlgebraElement, Shape
from ..common.errors import UnsupportedFamilyDim

logger = logging.getLogger(__name__)


class EnsembleFamily(str, Enum):
    """支持的系综类型枚举"""

    GINIBRE = "ginibre"
    HERMITIAN = "hermitian"
    NORMAL = "normal"
    UNITARY = "unitary"
    NILPOTENT2 = "nilpotent2"
    SQUAREZERO = "squarezero"
    DIRECTSUM = "directsum"


class EnsembleSpec(BaseModel):
    """系综配置"""

    family: EnsembleFamily
    dim: int = Field(ge=1, description="矩阵块维数")
    count: int = Field(ge=1, description="样本数量")
    seed: int = Field(default=0, ge=0, lt=2**64, description="64 位随机种子")


def sample_rngs(seed: int, count: int) -> List[np.random.Generator]:
    """One counter-based generator per sample, split from a single seed."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [np.random.Generator(np.random.Philox(child)) for child in children]


def complex_gaussian(rng: np.random.Generator, shape: Sequence[int]) -> np.ndarray:
    """Standard complex normal entries: (a + ib)/√2 with a, b ~ N(0, 1)."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed unitary: QR of a Ginibre matrix with the phases of R's diagonal removed."""
    q, r = np.linalg.qr(complex_gaussian(rng, (n, n)))
    d = np.diagonal(r)
    phases = np.where(np.abs(d) > 0, d / np.abs(d), 1.0)
    return q * phases[None, :]


class BaseSampler(ABC):
    """抽象采样器基类"""

    min_dim: int = 1
    max_dim: int | None = None

    def check_dim(self, family: EnsembleFamily, dim: int) -> None:
        if dim < self.min_dim or (self.max_dim is not None and dim > self.max_dim):
            raise UnsupportedFamilyDim(f"family '{family.value}' does not support dim {dim}")

    @abstractmethod
    def sample(self, rng: np.random.Generator, dim: int) -> AlgebraElement:
        """生成一个样本"""


class GinibreSampler(BaseSampler):
    def sample(self, rng: np.random.Generator, dim: int) -> AlgebraElement:
        return AlgebraElement.from_matrix(complex_gaussian(rng, (dim, dim)) / np.sqrt(dim))


class HermitianSampler(BaseSampler):
    def sample(self, rng: np.random.Generator, dim: int) -> AlgebraElement:
        g = complex_gaussian(rng, (dim, dim)) / np.sqrt(dim)
        return AlgebraElement.from_matrix(0.5 * (g + g.conj().T))


class NormalSampler(BaseSampler):
    """U D U*，U 为 Haar 酉矩阵，D 为复高斯对角阵"""

    def sample(self, rng: np.random.Generator, dim: int) -> AlgebraElement:
        u = haar_unitary(rng, dim)
        d = complex_gaussian(rng, (dim,))
        return AlgebraElement.from_matrix((u * d[None, :]) @ u.conj().T)


class UnitarySampler(BaseSampler):
    def sample(self, rng: np.random.Generator, dim: int) -> AlgebraElement:
        return AlgebraElement.from_matrix(haar_unitary(rng, dim))


class Nilpotent2Sampler(BaseSampler):
    """[[0, t], [0, 0]]，t 为复高斯标量"""

    min_dim = 2
    max_dim = 2

    def sample(self, rng: np.random.Generator, dim: int) -> AlgebraElement:
        t = complex(complex_gaussian(rng, (1,))[0])
        return AlgebraElement.from_matrix([[0.0, t], [0.0, 0.0]])


class SquareZeroSampler(BaseSampler):
    """x = u v*，v 与 u 正交，因此 x² = u (v*u) v* = 0"""

    min_dim = 2

    def sample(self, rng: np.random.Generator, dim: int) -> AlgebraElement:
        u = complex_gaussian(rng, (dim,))
        v = complex_gaussian(rng, (dim,))
        for _ in range(2):
            v = v - (np.vdot(u, v) / np.vdot(u, u)) * u
        return AlgebraElement.from_matrix(np.outer(u, v.conj()) / np.sqrt(dim))


class DirectSumSampler(BaseSampler):
    """M_n ⊕ M_n，两块均为 Ginibre"""

    def sample(self, rng: np.random.Generator, dim: int) -> AlgebraElement:
        first = complex_gaussian(rng, (dim, dim)) / np.sqrt(dim)
        second = complex_gaussian(rng, (dim, dim)) / np.sqrt(dim)
        return AlgebraElement((first, second))


class EnsembleFactory:
    """系综工厂类"""

    _samplers: Dict[EnsembleFamily, BaseSampler] = {
        EnsembleFamily.GINIBRE: GinibreSampler(),
        EnsembleFamily.HERMITIAN: HermitianSampler(),
        EnsembleFamily.NORMAL: NormalSampler(),
        EnsembleFamily.UNITARY: UnitarySampler(),
        EnsembleFamily.NILPOTENT2: Nilpotent2Sampler(),
        EnsembleFamily.SQUAREZERO: SquareZeroSampler(),
        EnsembleFamily.DIRECTSUM: DirectSumSampler(),
    }

    @classmethod
    def get_sampler(cls, family: EnsembleFamily) -> BaseSampler:
        sampler = cls._samplers.get(family)
        if not sampler:
            raise ValueError(f"不支持的系综类型: {family}")
        return sampler

    @classmethod
    def generate(cls, spec: EnsembleSpec) -> List[AlgebraElement]:
        """按配置生成样本列表"""
        sampler = cls.get_sampler(spec.family)
        sampler.check_dim(spec.family, spec.dim)
        logger.info(
            f"正在生成系综: {spec.family.value} dim={spec.dim} count={spec.count} seed={spec.seed}"
        )
        return [sampler.sample(rng, spec.dim) for rng in sample_rngs(spec.seed, spec.count)]

    @classmethod
    def register_sampler(cls, family: EnsembleFamily, sampler: BaseSampler):
        """注册新的采样器"""
        cls._samplers[family] = sampler


def generate(spec: EnsembleSpec) -> List[AlgebraElement]:
    """生成系综的便捷函数"""
    return EnsembleFactory.generate(spec)


def random_central_unitary(shape: Shape, rng: np.random.Generator) -> AlgebraElement:
    """每块一个随机相位乘单位阵：直和代数的中心酉元"""
    phases = rng.uniform(0.0, 2.0 * np.pi, size=len(shape))
    return AlgebraElement.scalar_blocks(shape, [complex(np.exp(1j * p)) for p in phases])


__all__ = [
    "BaseSampler",
    "EnsembleFactory",
    "EnsembleFamily",
    "EnsembleSpec",
    "complex_gaussian",
    "generate",
    "haar_unitary",
    "random_central_unitary",
    "sample_rngs",
]
