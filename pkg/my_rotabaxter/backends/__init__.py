"""Backends package - 乘积后端系统，计算纯张量词的混合洗牌积"""

from my_rotabaxter.backends.protocol import (
    BackendFactory,
    ProductBackend,
    TensorWord,
    WordTerms,
)
from my_rotabaxter.backends.recursive import RecursiveBackend
from my_rotabaxter.backends.stuffle import StuffleBackend, stuffle_pairs
from my_rotabaxter.config import BackendName
from my_rotabaxter.errors import BadArguments

# 后端注册表：名称 -> 工厂
BACKENDS: dict[str, BackendFactory] = {
    "recursive": RecursiveBackend,
    "stuffle": StuffleBackend,
}


def get_backend(name: BackendName) -> ProductBackend:
    """按名称获取后端实例"""
    factory = BACKENDS.get(name)
    if factory is None:
        msg = f"Unknown product backend {name!r}; choose one of {sorted(BACKENDS)}"
        raise BadArguments(msg)
    return factory()


__all__ = [
    "BACKENDS",
    "BackendFactory",
    "ProductBackend",
    "RecursiveBackend",
    "StuffleBackend",
    "TensorWord",
    "WordTerms",
    "get_backend",
    "stuffle_pairs",
]
