"""Rota-Baxter 代数核心 - 自由交换 Rota-Baxter 代数 Ш_λ(ℝ[x]) 的精确表示

元素是纯张量词的有限有理线性组合，词用指数向量表示：
(e0, e1, …, et) 表示 x^{e0}⊗x^{e1}⊗…⊗x^{et}。全零指数的词是标量基 1_t。
所有运算都在 AlgebraContext(λ, trunc) 中进行，只保留过滤次数 ≤ trunc 的词。
"""

import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb

from my_rotabaxter.backends import get_backend
from my_rotabaxter.backends.protocol import TensorWord, WordTerms
from my_rotabaxter.backends.recursive import RecursiveBackend
from my_rotabaxter.backends.stuffle import StuffleBackend
from my_rotabaxter.backends.utils import accumulate, word_degree
from my_rotabaxter.config import DEFAULT_BACKEND, DEFAULT_LAMBDA, DEFAULT_TRUNC, BackendName, Settings
from my_rotabaxter.errors import BadArguments, NonPositiveDegree, NonScalarWord, NonzeroWeight

logger = logging.getLogger(__name__)

Rational = Fraction | int


# ============================================================
# 代数上下文
# ============================================================

@dataclass(frozen=True)
class AlgebraContext:
    """权重与截断

    Attributes:
        lam: 权重 λ（精确有理数）
        trunc: 过滤截断阶 N ≥ 0
        backend: element_mul 使用的乘积后端
    """

    lam: Fraction = DEFAULT_LAMBDA
    trunc: int = DEFAULT_TRUNC
    backend: BackendName = DEFAULT_BACKEND

    def __post_init__(self) -> None:
        if not isinstance(self.trunc, int) or self.trunc < 0:
            msg = f"trunc must be a nonnegative integer, got {self.trunc!r}"
            raise BadArguments(msg)
        # frozen dataclass 里只能用 object.__setattr__ 规范化字段
        object.__setattr__(self, "lam", Fraction(self.lam))

    @classmethod
    def from_settings(cls, settings: Settings) -> "AlgebraContext":
        return cls(
            lam=settings.default_lambda,
            trunc=settings.default_trunc,
            backend=settings.default_backend,
        )

    def with_trunc(self, trunc: int) -> "AlgebraContext":
        return replace(self, trunc=trunc)

    def with_lambda(self, lam: Rational) -> "AlgebraContext":
        return replace(self, lam=Fraction(lam))


# ============================================================
# 词的构造
# ============================================================

def make_word(exponents: Iterable[int]) -> TensorWord:
    """校验并构造词

    Raises:
        BadArguments: 空词或含负指数
    """
    word = tuple(exponents)
    if not word:
        msg = "A tensor word needs at least one factor"
        raise BadArguments(msg)
    if any(not isinstance(e, int) or e < 0 for e in word):
        msg = f"Exponents must be nonnegative integers, got {list(word)}"
        raise BadArguments(msg)
    return word


def one(k: int) -> TensorWord:
    """标量基 1_k = 1⊗…⊗1（k+1 个因子）"""
    if k < 0:
        msg = f"one(k) needs k >= 0, got {k}"
        raise BadArguments(msg)
    return (0,) * (k + 1)


def x_word(parts: Iterable[int]) -> TensorWord:
    """1⊗x^{i1}⊗…⊗x^{it}；空 parts 得到单位词"""
    return make_word((0, *parts))


def x_power_word(k: int) -> TensorWord:
    """1⊗x^{⊗k}"""
    return x_word((1,) * k)


def is_one_word(word: TensorWord) -> bool:
    return not any(word)


# ============================================================
# 元素
# ============================================================

@dataclass(frozen=True)
class RBAElement:
    """稀疏精确线性组合（规范形式）

    terms 按词的字典序排列，且不含零系数，所以两元素相等当且仅当 terms 相等。
    请用 from_terms 构造。
    """

    terms: tuple[tuple[TensorWord, Fraction], ...] = ()

    @classmethod
    def from_terms(
        cls,
        terms: Mapping[TensorWord, Rational] | Iterable[tuple[TensorWord, Rational]],
    ) -> "RBAElement":
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[TensorWord, Fraction] = {}
        for word, coeff in items:
            key = make_word(word)
            merged[key] = merged.get(key, Fraction(0)) + Fraction(coeff)
        return cls(tuple(sorted((w, c) for w, c in merged.items() if c != 0)))

    @classmethod
    def zero(cls) -> "RBAElement":
        return cls()

    @classmethod
    def unit(cls) -> "RBAElement":
        return cls((((0,), Fraction(1)),))

    @classmethod
    def word(cls, word: Iterable[int], coeff: Rational = 1) -> "RBAElement":
        return cls.from_terms([(tuple(word), coeff)])

    def as_dict(self) -> dict[TensorWord, Fraction]:
        return dict(self.terms)

    def coeff(self, word: Iterable[int]) -> Fraction:
        return self.as_dict().get(tuple(word), Fraction(0))

    def words(self) -> list[TensorWord]:
        return [w for w, _ in self.terms]

    def min_degree(self) -> int | None:
        return min((word_degree(w) for w, _ in self.terms), default=None)

    def max_degree(self) -> int | None:
        return max((word_degree(w) for w, _ in self.terms), default=None)

    def __iter__(self) -> Iterator[tuple[TensorWord, Fraction]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)


def element_from_terms(
    terms: Mapping[TensorWord, Rational] | Iterable[tuple[TensorWord, Rational]],
) -> RBAElement:
    """规范化构造：合并同类项、剪零、校验词"""
    return RBAElement.from_terms(terms)


def _from_raw(terms: WordTerms, ctx: AlgebraContext) -> RBAElement:
    return RBAElement(
        tuple(sorted((w, c) for w, c in terms.items() if c != 0 and word_degree(w) <= ctx.trunc))
    )


def truncate(e: RBAElement, ctx: AlgebraContext) -> RBAElement:
    """丢弃次数 > ctx.trunc 的词"""
    return RBAElement(tuple((w, c) for w, c in e.terms if word_degree(w) <= ctx.trunc))


def is_scalar(e: RBAElement) -> bool:
    return all(is_one_word(w) for w, _ in e.terms)


def first_difference(e1: RBAElement, e2: RBAElement) -> int | None:
    """两元素系数不同的最低过滤次数；相等时为 None"""
    left, right = e1.as_dict(), e2.as_dict()
    differing = [w for w in left.keys() | right.keys() if left.get(w, 0) != right.get(w, 0)]
    return min((word_degree(w) for w in differing), default=None)


# ============================================================
# 线性运算
# ============================================================

def element_add(e1: RBAElement, e2: RBAElement) -> RBAElement:
    """逐系数相加并剪零"""
    acc: WordTerms = dict(e1.terms)
    accumulate(acc, e2.terms)
    return RBAElement(tuple(sorted((w, c) for w, c in acc.items() if c != 0)))


def element_scale(c: Rational, e: RBAElement) -> RBAElement:
    c = Fraction(c)
    if c == 0:
        return RBAElement.zero()
    return RBAElement(tuple((w, c * v) for w, v in e.terms))


def element_neg(e: RBAElement) -> RBAElement:
    return element_scale(-1, e)


def element_sub(e1: RBAElement, e2: RBAElement) -> RBAElement:
    return element_add(e1, element_neg(e2))


# ============================================================
# 乘积
# ============================================================

_RECURSIVE = RecursiveBackend()
_STUFFLE = StuffleBackend()


def word_product_recursive(a: TensorWord, b: TensorWord, ctx: AlgebraContext) -> RBAElement:
    """递归公式下的词乘积"""
    return _from_raw(_RECURSIVE.word_product(make_word(a), make_word(b), ctx), ctx)


def word_product_stuffle(a: TensorWord, b: TensorWord, ctx: AlgebraContext) -> RBAElement:
    """stuffle 枚举下的词乘积，结果与递归后端一致"""
    return _from_raw(_STUFFLE.word_product(make_word(a), make_word(b), ctx), ctx)


def element_mul(e1: RBAElement, e2: RBAElement, ctx: AlgebraContext) -> RBAElement:
    """双线性扩张的乘积

    乘积的次数不小于两因子次数的最大值，所以先截断输入。
    """
    backend = get_backend(ctx.backend)
    left = truncate(e1, ctx)
    right = truncate(e2, ctx)

    acc: WordTerms = {}
    for a, ca in left.terms:
        for b, cb in right.terms:
            accumulate(acc, backend.word_product(a, b, ctx).items(), ca * cb)
    return _from_raw(acc, ctx)


def one_mul_closed(m: int, n: int, ctx: AlgebraContext) -> RBAElement:
    """1_m ⋄ 1_n = Σ_{k=0}^{min(m,n)} λ^k C(m+n-k, m) C(m, k) 1_{m+n-k}"""
    if m < 0 or n < 0:
        msg = f"one_mul_closed needs m, n >= 0, got ({m}, {n})"
        raise BadArguments(msg)
    terms = {
        one(m + n - k): ctx.lam**k * comb(m + n - k, m) * comb(m, k)
        for k in range(min(m, n) + 1)
    }
    return _from_raw(terms, ctx)


def element_pow(e: RBAElement, n: int, ctx: AlgebraContext) -> RBAElement:
    """e^n（反复乘法），e^0 为单位元"""
    return power_list(e, n, ctx)[n]


def power_list(e: RBAElement, maxn: int, ctx: AlgebraContext) -> list[RBAElement]:
    """[e^0, e^1, …, e^maxn]"""
    if maxn < 0:
        msg = f"Power must be >= 0, got {maxn}"
        raise BadArguments(msg)
    powers = [truncate(RBAElement.unit(), ctx)]
    for _ in range(maxn):
        powers.append(element_mul(powers[-1], e, ctx))
    return powers


# ============================================================
# Rota-Baxter 算子与导子
# ============================================================

def rb_apply(e: RBAElement, ctx: AlgebraContext) -> RBAElement:
    """P(e0⊗…⊗et) = 1⊗e0⊗…⊗et"""
    return _from_raw({(0, *w): c for w, c in e.terms}, ctx)


def derive(e: RBAElement, ctx: AlgebraContext) -> RBAElement:
    """d(1_n) = 1_{n-1}，d(1) = 0

    Raises:
        NonScalarWord: 输入含非零指数的词（导子只定义在标量子代数上）
    """
    for word, _ in e.terms:
        if not is_one_word(word):
            msg = f"derive is only defined on pure-one words, got {list(word)}"
            raise NonScalarWord(msg)
    return _from_raw({w[1:]: c for w, c in e.terms if len(w) > 1}, ctx)


def geometric_inverse(e: RBAElement, ctx: AlgebraContext) -> RBAElement:
    """1/(1-e) = Σ_{k≥0} e^k（λ = 0 时在过滤拓扑下收敛）

    e^k 位于 Fil^k，所以求和到 k = trunc 是精确的。

    Raises:
        NonzeroWeight: λ ≠ 0
        NonPositiveDegree: e 含 0 次项
    """
    if ctx.lam != 0:
        msg = f"geometric_inverse needs weight 0, got lambda={ctx.lam}"
        raise NonzeroWeight(msg)
    if e and e.min_degree() == 0:
        msg = "geometric_inverse needs every word of degree >= 1"
        raise NonPositiveDegree(msg)

    total = truncate(RBAElement.unit(), ctx)
    power = total
    for _ in range(ctx.trunc):
        power = element_mul(power, e, ctx)
        if not power:
            break
        total = element_add(total, power)
    return total
