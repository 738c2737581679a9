"""
工具包的日志配置

控制台日志一律写入 stderr：stdout 只输出 JSON / CSV 报告。
"""

import logging.config
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from .config import settings

# 扫描与求解器内部日志量大，非调试模式下只保留警告
NOISY_PACKAGES = ("src.algebra", "src.numrange")

PLAIN_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"
JSON_FORMAT = "%(asctime)s %(name)s %(levelname)s %(module)s %(funcName)s %(message)s"


def _file_handler(level: str) -> Dict[str, Any]:
    log_dir = Path(settings.log_dir)
    log_dir.mkdir(parents=True, exist_ok=True)
    return {
        "class": "logging.handlers.RotatingFileHandler",
        "level": level,
        "formatter": "json",
        "filename": str(log_dir / "numrad.log"),
        "maxBytes": 10 * 1024 * 1024,
        "backupCount": 5,
        "encoding": "utf-8",
    }


def get_logging_config(level: Optional[str] = None) -> Dict[str, Any]:
    """
    返回 dictConfig 配置字典。

    - development：纯文本控制台输出
    - production：JSON 控制台输出，外加滚动文件 logs/numrad.log
    ``level`` 覆盖 settings.log_level（命令行 --log-level）。
    """
    level = (level or settings.log_level).upper()
    production = settings.environment == "production"
    handlers = ["console", "file"] if production else ["console"]
    quiet_level = level if settings.debug else "WARNING"

    config: Dict[str, Any] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "plain": {"format": PLAIN_FORMAT, "datefmt": "%H:%M:%S"},
            "json": {"()": "pythonjsonlogger.json.JsonFormatter", "format": JSON_FORMAT},
        },
        "handlers": {
            "console": {
                "class": "logging.StreamHandler",
                "level": level,
                "formatter": "json" if production else "plain",
                "stream": sys.stderr,
            },
        },
        "root": {"level": level, "handlers": handlers},
        "loggers": {
            name: {"level": quiet_level, "handlers": handlers, "propagate": False}
            for name in NOISY_PACKAGES
        },
    }
    if production:
        config["handlers"]["file"] = _file_handler(level)
    return config


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """为命令行与套件配置日志"""
    logging.config.dictConfig(get_logging_config(level))
    logger = logging.getLogger(__name__)
    logger.debug("logging configured: environment=%s level=%s", settings.environment, level or settings.log_level)
    return logger
