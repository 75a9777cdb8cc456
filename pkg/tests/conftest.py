"""测试公共 fixture"""

from fractions import Fraction

import pytest

from my_rotabaxter.core import AlgebraContext

RBA_ENV_VARS = (
    "RBA_DEFAULT_LAMBDA",
    "RBA_DEFAULT_TRUNC",
    "RBA_BACKEND",
    "RBA_SEARCH_LIMIT",
    "RBA_LOG_LEVEL",
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """每个测试都从未设置 RBA_* 的环境开始"""
    for name in RBA_ENV_VARS:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def ctx() -> AlgebraContext:
    """λ = 1，trunc = 10"""
    return AlgebraContext(lam=Fraction(1), trunc=10)


@pytest.fixture
def ctx0() -> AlgebraContext:
    """λ = 0，trunc = 10"""
    return AlgebraContext(lam=Fraction(0), trunc=10)
