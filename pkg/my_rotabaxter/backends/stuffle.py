"""StuffleBackend: 通过枚举 stuffle 计算混合洗牌积（独立神谕）

对尾部长度 m、n 与 0 ≤ r ≤ min(m, n)，枚举 J_{m,n,r} 中的保序单射对 (φ, ψ)：
im φ ∪ im ψ = [m+n-r]，重叠位置的因子相乘（指数相加），权重 λ^r。
"""

from collections.abc import Iterator
from itertools import combinations
from typing import TYPE_CHECKING

from my_rotabaxter.backends.protocol import ProductBackend, TensorWord, WordTerms
from my_rotabaxter.backends.utils import prune

if TYPE_CHECKING:
    from my_rotabaxter.core import AlgebraContext


def stuffle_pairs(m: int, n: int, r: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """枚举 J_{m,n,r}

    保序单射由像集唯一确定，所以直接产出 (im φ, im ψ)，位置 0-based。
    """
    length = m + n - r
    for phi_image in combinations(range(length), m):
        taken = set(phi_image)
        rest = tuple(i for i in range(length) if i not in taken)
        # ψ 必须覆盖 φ 没有占用的位置，再从 im φ 中选 r 个重叠位置
        for overlap in combinations(phi_image, r):
            yield phi_image, tuple(sorted(rest + overlap))


def stuffle_words(tail_a: TensorWord, tail_b: TensorWord, r: int) -> Iterator[TensorWord]:
    """产出所有 r 重叠的 stuffle 词（不含首因子）"""
    for phi_image, psi_image in stuffle_pairs(len(tail_a), len(tail_b), r):
        factors = [0] * (len(tail_a) + len(tail_b) - r)
        for j, i in enumerate(phi_image):
            factors[i] += tail_a[j]
        for j, i in enumerate(psi_image):
            factors[i] += tail_b[j]
        yield tuple(factors)


class StuffleBackend(ProductBackend):
    """stuffle 枚举后端，与递归后端互为校验"""

    name = "stuffle"

    def word_product(
        self,
        a: TensorWord,
        b: TensorWord,
        ctx: "AlgebraContext",
    ) -> WordTerms:
        head = a[0] + b[0]
        tail_a, tail_b = a[1:], b[1:]
        m, n = len(tail_a), len(tail_b)

        result: WordTerms = {}
        for r in range(min(m, n) + 1):
            if m + n - r > ctx.trunc:
                continue
            weight = ctx.lam**r
            if weight == 0:
                continue
            for tail in stuffle_words(tail_a, tail_b, r):
                word = (head, *tail)
                result[word] = result.get(word, 0) + weight
        return prune(result)
