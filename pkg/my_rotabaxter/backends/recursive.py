"""RecursiveBackend: 按递归公式计算混合洗牌积（默认后端）

(a0⊗A')⋄(b0⊗B') = a0b0 ⊗ ( A'⋄(1⊗B') + (1⊗A')⋄B' + λ·A'⋄B' )

单因子约定：a⋄(b0⊗B') = ab0⊗B'，(a0⊗A')⋄b = a0b⊗A'。
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING

from my_rotabaxter.backends.protocol import ProductBackend, TensorWord, WordTerms
from my_rotabaxter.backends.utils import ONE, accumulate, prepend, prune

if TYPE_CHECKING:
    from my_rotabaxter.core import AlgebraContext

logger = logging.getLogger(__name__)

# 记忆表大小上限；lru_cache 自带锁，多线程并发读写安全
MEMO_SIZE = 1 << 16

FrozenTerms = tuple[tuple[TensorWord, Fraction], ...]


@lru_cache(maxsize=MEMO_SIZE)
def _mixable_shuffle(a: TensorWord, b: TensorWord, lam: Fraction, cap: int) -> FrozenTerms:
    """带截断的递归混合洗牌积

    cap 是结果允许的最大过滤次数；结果的最小次数是 max(deg a, deg b)，
    超过 cap 时整棵子树直接剪掉。
    """
    if max(len(a), len(b)) - 1 > cap:
        return ()

    head = a[0] + b[0]
    if len(a) == 1:
        return (((head, *b[1:]), ONE),)
    if len(b) == 1:
        return (((head, *a[1:]), ONE),)

    tail_a, tail_b = a[1:], b[1:]
    inner: WordTerms = {}
    accumulate(inner, _mixable_shuffle(tail_a, (0, *tail_b), lam, cap - 1))
    accumulate(inner, _mixable_shuffle((0, *tail_a), tail_b, lam, cap - 1))
    if lam != 0:
        accumulate(inner, _mixable_shuffle(tail_a, tail_b, lam, cap - 1), lam)

    return tuple(prune(prepend(head, inner)).items())


class RecursiveBackend(ProductBackend):
    """递归后端

    特点：
    - 子问题（后缀对）在 lru_cache 中共享，x 幂词的长乘积也很快
    - 截断在递归中传递，超出 trunc 的分支不会被展开
    """

    name = "recursive"

    def word_product(
        self,
        a: TensorWord,
        b: TensorWord,
        ctx: "AlgebraContext",
    ) -> WordTerms:
        return dict(_mixable_shuffle(a, b, ctx.lam, ctx.trunc))

    def clear_cache(self) -> None:
        logger.debug("clearing recursive memo: %s", _mixable_shuffle.cache_info())
        _mixable_shuffle.cache_clear()
