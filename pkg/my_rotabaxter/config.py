"""运行配置 - 默认值与环境变量覆盖"""

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from my_rotabaxter.errors import BadArguments

BackendName = Literal["recursive", "stuffle"]

DEFAULT_LAMBDA = Fraction(1)
DEFAULT_TRUNC = 10
DEFAULT_BACKEND: BackendName = "recursive"
DEFAULT_SEARCH_LIMIT = 10**7  # 枚举神谕的状态数上限
DEFAULT_LOG_LEVEL = "WARNING"


@dataclass(frozen=True)
class Settings:
    """会话级默认设置

    CLI 参数优先于这里的值。
    """

    default_lambda: Fraction = DEFAULT_LAMBDA
    default_trunc: int = DEFAULT_TRUNC
    default_backend: BackendName = DEFAULT_BACKEND
    search_limit: int = DEFAULT_SEARCH_LIMIT
    log_level: str = DEFAULT_LOG_LEVEL


def parse_rational(text: str) -> Fraction:
    """解析 "p/q" 或整数形式的有理数

    Raises:
        BadArguments: 格式错误或分母为 0
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        msg = f"Not an exact rational: {text!r}"
        raise BadArguments(msg) from None


def _env_int(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        msg = f"{name} must be an integer, got {raw!r}"
        raise BadArguments(msg) from None
    if value < minimum:
        msg = f"{name} must be >= {minimum}, got {value}"
        raise BadArguments(msg)
    return value


def load_settings() -> Settings:
    """从环境变量读取设置

    RBA_DEFAULT_LAMBDA / RBA_DEFAULT_TRUNC / RBA_BACKEND / RBA_SEARCH_LIMIT / RBA_LOG_LEVEL
    """
    raw_lambda = os.getenv("RBA_DEFAULT_LAMBDA")
    lam = parse_rational(raw_lambda) if raw_lambda else DEFAULT_LAMBDA

    backend = os.getenv("RBA_BACKEND", DEFAULT_BACKEND)
    if backend not in ("recursive", "stuffle"):
        msg = f"RBA_BACKEND must be 'recursive' or 'stuffle', got {backend!r}"
        raise BadArguments(msg)

    return Settings(
        default_lambda=lam,
        default_trunc=_env_int("RBA_DEFAULT_TRUNC", DEFAULT_TRUNC, 0),
        default_backend=backend,  # type: ignore[arg-type]
        search_limit=_env_int("RBA_SEARCH_LIMIT", DEFAULT_SEARCH_LIMIT, 1),
        log_level=os.getenv("RBA_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper(),
    )
