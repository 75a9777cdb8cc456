"""后端共用的词与线性组合工具函数"""

from collections.abc import Iterable
from fractions import Fraction

from my_rotabaxter.backends.protocol import TensorWord, WordTerms

ONE = Fraction(1)


def word_degree(word: TensorWord) -> int:
    """过滤次数 = 张量因子数 - 1，one(k) 的次数为 k"""
    return len(word) - 1


def accumulate(
    target: WordTerms,
    terms: Iterable[tuple[TensorWord, Fraction]],
    scale: Fraction = ONE,
) -> WordTerms:
    """把 scale·terms 累加进 target（原地修改并返回 target）"""
    for word, coeff in terms:
        target[word] = target.get(word, 0) + scale * coeff
    return target


def prepend(head: int, terms: WordTerms) -> WordTerms:
    """在每个词前面加上首因子 x^head"""
    return {(head, *word): coeff for word, coeff in terms.items()}


def prune(terms: WordTerms) -> WordTerms:
    """去掉零系数"""
    return {word: coeff for word, coeff in terms.items() if coeff != 0}

