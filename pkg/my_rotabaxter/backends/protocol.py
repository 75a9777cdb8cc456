"""Protocol definition for pluggable word-product backends.

定义所有乘积后端必须实现的接口协议。
后端负责计算两个纯张量词的混合洗牌积（mixable shuffle product），
结果以 {词: 系数} 字典返回，由 core 负责规范化为 RBAElement。
"""

import abc
import asyncio
from collections.abc import Callable
from fractions import Fraction
from typing import TYPE_CHECKING, ClassVar, TypeAlias

from my_rotabaxter.config import BackendName

if TYPE_CHECKING:
    from my_rotabaxter.core import AlgebraContext

# 纯张量 x^{e0}⊗x^{e1}⊗…⊗x^{et}，用指数向量表示
TensorWord: TypeAlias = tuple[int, ...]

# 后端返回的原始线性组合（可能含零系数，由调用方剪枝）
WordTerms: TypeAlias = dict[TensorWord, Fraction]


class ProductBackend(abc.ABC):
    """乘积后端抽象基类

    所有实现都必须：
    - 首因子按单项式相乘（指数相加）
    - 只保留过滤次数（张量因子数 - 1）不超过 ctx.trunc 的词
    - 是输入的纯函数，可在多线程中并发调用
    """

    name: ClassVar[BackendName]

    @abc.abstractmethod
    def word_product(
        self,
        a: TensorWord,
        b: TensorWord,
        ctx: "AlgebraContext",
    ) -> WordTerms:
        """计算 a ⋄ b

        Args:
            a: 左侧词
            b: 右侧词
            ctx: 代数上下文（权重 λ 与截断阶）

        Returns:
            {词: 系数}，次数均 ≤ ctx.trunc
        """
        ...

    async def aword_product(
        self,
        a: TensorWord,
        b: TensorWord,
        ctx: "AlgebraContext",
    ) -> WordTerms:
        """异步版本 of word_product"""
        return await asyncio.to_thread(self.word_product, a, b, ctx)

    def clear_cache(self) -> None:
        """清空内部记忆表（无记忆表的后端什么也不做）"""
        return None


# 后端工厂类型：按名称创建后端实例
BackendFactory: TypeAlias = Callable[[], ProductBackend]
