"""
使用 Pydantic BaseSettings 进行配置管理
"""

from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """从环境变量（前缀 NUMRAD_）加载的工具包设置"""

    # ========== 基础配置 ==========

    # 环境
    environment: str = Field(
        default="development",
        description="运行环境（development/production），决定日志格式与文件输出",
    )

    debug: bool = Field(default=False, description="调试模式")

    # 日志级别
    log_level: str = Field(default="INFO", description="日志级别")

    log_dir: str = Field(default="logs", description="生产环境滚动日志文件所在目录")

    # ========== 扫描配置 ==========

    # θ 网格点数（env: NUMRAD_GRID）
    grid: int = Field(default=512, ge=64, description="θ 扫描的均匀网格点数")

    # λ = e^{iψ} 的 ψ 网格点数
    lambda_grid: int = Field(default=512, ge=64, description="平行性判定中 ψ 网格点数")

    refine_rounds: int = Field(default=3, ge=0, description="抛物线插值细化轮数")

    # ========== 容差配置 ==========

    rel_tol: float = Field(default=1e-7, gt=0, description="不等式报告的相对容差")
    abs_tol: float = Field(default=1e-9, gt=0, description="不等式报告的绝对容差下限")

    parallel_rel_tol: float = Field(
        default=1e-6, gt=0, description="平行性判定的相对容差"
    )
    parallel_abs_tol: float = Field(
        default=1e-8, gt=0, description="平行性判定的绝对容差下限"
    )

    marginal_factor: float = Field(
        default=10.0, gt=1, description="|gap| ≤ marginal_factor·tol 时标记为边缘判定"
    )

    # ========== 求解器配置 ==========

    jacobi_tol: float = Field(
        default=1e-13, gt=0, description="Jacobi 收敛阈值（非对角 Frobenius 质量 / ‖H‖_F）"
    )
    jacobi_max_sweeps: int = Field(default=60, ge=1, description="Jacobi 最大扫描次数")

    gelfand_rtol: float = Field(default=1e-9, gt=0, description="Gelfand 迭代相对停止阈值")
    gelfand_max_squarings: int = Field(default=40, ge=1, description="Gelfand 迭代最大平方次数")

    # ========== 套件配置 ==========

    seed: int = Field(default=0, ge=0, description="默认随机种子")

    # 并发上限（env: NUMRAD_THREADS）
    threads: Optional[int] = Field(default=None, ge=1, description="套件执行的最大线程数")

    model_config = SettingsConfigDict(
        env_prefix="NUMRAD_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )


# 创建全局设置实例
settings = Settings()
