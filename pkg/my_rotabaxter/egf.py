"""λ-指数生成函数 E_{λ,f} = Σ_k f(k)·1_k

在标量子代数上做乘积卷积、k 重乘积、divided power 与复合。
所有 LambdaEGF 都是稠密系数向量，长度 = trunc + 1。
"""

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from my_rotabaxter.combinatorics.numbers import multinomial
from my_rotabaxter.config import parse_rational
from my_rotabaxter.core import (
    AlgebraContext,
    Rational,
    RBAElement,
    derive,
    element_add,
    element_mul,
    element_scale,
    is_scalar,
    one,
    rb_apply,
)
from my_rotabaxter.errors import (
    BadArguments,
    ContextMismatch,
    EmptyList,
    NonScalarWord,
    NonzeroConstantTerm,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LambdaEGF:
    """coeffs[k] = f(k) 为 1_k 的系数，0 ≤ k ≤ ctx.trunc"""

    coeffs: tuple[Fraction, ...]
    ctx: AlgebraContext

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.ctx.trunc + 1:
            msg = f"LambdaEGF needs {self.ctx.trunc + 1} coefficients, got {len(self.coeffs)}"
            raise BadArguments(msg)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @classmethod
    def from_sequence(cls, values: Sequence[Rational], ctx: AlgebraContext) -> "LambdaEGF":
        """取前 trunc+1 项，不足补 0"""
        padded = [Fraction(v) for v in values[: ctx.trunc + 1]]
        padded += [Fraction(0)] * (ctx.trunc + 1 - len(padded))
        return cls(tuple(padded), ctx)

    @classmethod
    def from_function(cls, f: Callable[[int], Rational], ctx: AlgebraContext) -> "LambdaEGF":
        return cls(tuple(Fraction(f(k)) for k in range(ctx.trunc + 1)), ctx)

    @property
    def trunc(self) -> int:
        return self.ctx.trunc

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]


def _same_context(f: LambdaEGF, g: LambdaEGF) -> None:
    if (f.ctx.lam, f.ctx.trunc) != (g.ctx.lam, g.ctx.trunc):
        msg = (
            f"EGF contexts differ: (lambda={f.ctx.lam}, trunc={f.ctx.trunc}) "
            f"vs (lambda={g.ctx.lam}, trunc={g.ctx.trunc})"
        )
        raise ContextMismatch(msg)


def _require_zero_constant(f: LambdaEGF) -> None:
    if f.coeffs[0] != 0:
        msg = f"f must vanish at 0 (f is defined on positive integers), got f(0)={f.coeffs[0]}"
        raise NonzeroConstantTerm(msg)


# ============================================================
# 与 RBAElement 的互相转换
# ============================================================

def egf_to_element(f: LambdaEGF) -> RBAElement:
    return RBAElement.from_terms({one(k): c for k, c in enumerate(f.coeffs)})


def egf_from_element(e: RBAElement, ctx: AlgebraContext) -> LambdaEGF:
    """只接受标量元素

    Raises:
        NonScalarWord: e 含非零指数的词
    """
    if not is_scalar(e):
        msg = "Only pure-one elements have a lambda-EGF"
        raise NonScalarWord(msg)
    coeffs = [Fraction(0)] * (ctx.trunc + 1)
    for word, c in e.terms:
        if len(word) - 1 <= ctx.trunc:
            coeffs[len(word) - 1] = c
    return LambdaEGF(tuple(coeffs), ctx)


def egf_from_spec(spec: str, ctx: AlgebraContext) -> LambdaEGF:
    """按名称构造序列

    支持：
    - ones          f(k) = 1
    - ones-from-1   f(0) = 0，其余为 1
    - delta:K       只有 f(K) = 1
    - list:a0,a1,…  显式有理数列表，不足补 0

    Raises:
        BadArguments: 无法识别的 spec
    """
    spec = spec.strip()
    if spec == "ones":
        return LambdaEGF.from_function(lambda _k: 1, ctx)
    if spec == "ones-from-1":
        return LambdaEGF.from_function(lambda k: 1 if k >= 1 else 0, ctx)
    if spec.startswith("delta:"):
        try:
            target = int(spec.removeprefix("delta:"))
        except ValueError:
            msg = f"delta spec needs an integer index, got {spec!r}"
            raise BadArguments(msg) from None
        if target < 0:
            msg = f"delta index must be >= 0, got {target}"
            raise BadArguments(msg)
        return LambdaEGF.from_function(lambda k: 1 if k == target else 0, ctx)
    if spec.startswith("list:"):
        body = spec.removeprefix("list:")
        values = [parse_rational(item) for item in body.split(",") if item.strip()]
        return LambdaEGF.from_sequence(values, ctx)

    msg = f"Unknown sequence spec {spec!r}; use ones, ones-from-1, delta:K or list:a0,a1,..."
    raise BadArguments(msg)


# ============================================================
# 乘积
# ============================================================

def egf_product(f: LambdaEGF, g: LambdaEGF) -> LambdaEGF:
    """E_{λ,f}·E_{λ,g} = E_{λ,h}

    h(u) = Σ_{u1+u2+u3=u} λ^{u1} (u; u1,u2,u3) f(u1+u2) g(u1+u3)

    Raises:
        ContextMismatch: 两者上下文不同
    """
    _same_context(f, g)
    lam = f.ctx.lam
    h: list[Fraction] = []
    for u in range(f.trunc + 1):
        total = Fraction(0)
        for u1 in range(u + 1):
            weight = lam**u1
            if weight == 0:
                continue
            for u2 in range(u - u1 + 1):
                u3 = u - u1 - u2
                fv, gv = f.coeffs[u1 + u2], g.coeffs[u1 + u3]
                if fv and gv:
                    total += weight * multinomial(u, (u1, u2, u3)) * fv * gv
        h.append(total)
    return LambdaEGF(tuple(h), f.ctx)


def egf_kfold(fs: Sequence[LambdaEGF]) -> LambdaEGF:
    """∏_i E_{λ,f_i}（从左到右折叠）

    Raises:
        EmptyList: fs 为空
        ContextMismatch: 上下文不一致
    """
    if not fs:
        msg = "egf_kfold needs at least one factor"
        raise EmptyList(msg)
    return reduce(egf_product, fs)


# ============================================================
# 线性与算子运算（h1–h4）
# ============================================================

def egf_sum(f: LambdaEGF, g: LambdaEGF) -> LambdaEGF:
    _same_context(f, g)
    return LambdaEGF(tuple(a + b for a, b in zip(f.coeffs, g.coeffs, strict=True)), f.ctx)


def egf_times_one(f: LambdaEGF) -> LambdaEGF:
    """1_1·E_{λ,f}：h(m) = m·f(m-1) + λ·m·f(m)"""
    lam = f.ctx.lam
    h = [
        (m * f.coeffs[m - 1] if m >= 1 else Fraction(0)) + lam * m * f.coeffs[m]
        for m in range(f.trunc + 1)
    ]
    return LambdaEGF(tuple(h), f.ctx)


def egf_derive(f: LambdaEGF) -> LambdaEGF:
    """d(E_{λ,f})：h(m) = f(m+1)，最高项补 0"""
    return LambdaEGF((*f.coeffs[1:], Fraction(0)), f.ctx)


def egf_integrate(f: LambdaEGF) -> LambdaEGF:
    """P(E_{λ,f})：h(m) = f(m-1)，h(0) = 0"""
    return LambdaEGF((Fraction(0), *f.coeffs[:-1]), f.ctx)


# ============================================================
# divided power 与复合
# ============================================================

def divided_power(f: LambdaEGF, k: int) -> LambdaEGF:
    """E^{[k]}，E^{[0]} = 1，E^{[k]} = P(E^{[k-1]} ⋄ d(E_f))

    Raises:
        NonzeroConstantTerm: f(0) ≠ 0
        BadArguments: k < 0
    """
    _require_zero_constant(f)
    if k < 0:
        msg = f"divided_power needs k >= 0, got {k}"
        raise BadArguments(msg)
    return divided_powers(f, k)[k]


def divided_powers(f: LambdaEGF, maxk: int) -> list[LambdaEGF]:
    """[E^{[0]}, …, E^{[maxk]}]，一次递推得到全部"""
    _require_zero_constant(f)
    ctx = f.ctx
    df = derive(egf_to_element(f), ctx)
    current = RBAElement.unit()
    result = [egf_from_element(current, ctx)]
    for _ in range(maxk):
        current = rb_apply(element_mul(current, df, ctx), ctx)
        result.append(egf_from_element(current, ctx))
    return result


def compose(g: LambdaEGF, f: LambdaEGF) -> LambdaEGF:
    """E_g(E_f) = Σ_{k ≤ trunc} g(k)·E^{[k]}

    E^{[k]} 位于 Fil^k，所以在 k = trunc 处截止是精确的。g(0) 不必为 1。

    Raises:
        NonzeroConstantTerm: f(0) ≠ 0
        ContextMismatch: 上下文不同
    """
    _same_context(g, f)
    _require_zero_constant(f)
    ctx = f.ctx
    total = RBAElement.zero()
    for k, power in enumerate(divided_powers(f, ctx.trunc)):
        if g.coeffs[k]:
            total = element_add(total, element_scale(g.coeffs[k], egf_to_element(power)))
    logger.debug("composed EGFs at trunc=%d lambda=%s", ctx.trunc, ctx.lam)
    return egf_from_element(total, ctx)
