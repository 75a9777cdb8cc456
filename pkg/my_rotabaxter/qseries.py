"""截断 q 级数与 θ/Euler 恒等式

QSeries 是 q 的稠密截断幂级数（精确有理系数，下标 0…N）。
figurate_identity_check 把三个 θ/Euler 恒等式经 q ↦ 1⊗x 搬到 λ = 0 的
Rota-Baxter 代数里，两边都在代数内部构造后逐项比较。
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Literal

from my_rotabaxter.core import (
    AlgebraContext,
    Rational,
    RBAElement,
    element_add,
    element_mul,
    first_difference,
    geometric_inverse,
    truncate,
    x_power_word,
)
from my_rotabaxter.errors import BadArguments, NonzeroWeight, TruncMismatch

logger = logging.getLogger(__name__)

FigurateKind = Literal["square", "triangular", "pentagonal"]
FIGURATE_KINDS: tuple[FigurateKind, ...] = ("square", "triangular", "pentagonal")


@dataclass(frozen=True)
class QSeries:
    """coeffs[n] 为 q^n 的系数，长度 N+1"""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            msg = "A QSeries needs at least the constant coefficient"
            raise BadArguments(msg)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]


def _require_trunc(n: int) -> None:
    if n < 0:
        msg = f"Series truncation must be >= 0, got {n}"
        raise BadArguments(msg)


def _same_trunc(a: QSeries, b: QSeries) -> None:
    if a.trunc != b.trunc:
        msg = f"Series truncations differ: {a.trunc} vs {b.trunc}"
        raise TruncMismatch(msg)


# ============================================================
# 构造与算术
# ============================================================

def qs_zero(n: int) -> QSeries:
    _require_trunc(n)
    return QSeries((Fraction(0),) * (n + 1))


def qs_one(n: int) -> QSeries:
    _require_trunc(n)
    return QSeries((Fraction(1),) + (Fraction(0),) * n)


def qs_from_coeffs(values: Sequence[Rational], n: int) -> QSeries:
    """取前 N+1 项，不足补 0"""
    _require_trunc(n)
    head = [Fraction(v) for v in values[: n + 1]]
    return QSeries(tuple(head + [Fraction(0)] * (n + 1 - len(head))))


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    _same_trunc(a, b)
    return QSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs, strict=True)))


def qs_scale(c: Rational, a: QSeries) -> QSeries:
    return QSeries(tuple(Fraction(c) * x for x in a.coeffs))


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """截断 Cauchy 积，不读取 N 以外的系数

    Raises:
        TruncMismatch: 两者截断阶不同
    """
    _same_trunc(a, b)
    n = a.trunc
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(n + 1 - i):
            out[i + j] += x * b.coeffs[j]
    return QSeries(tuple(out))


def qs_one_minus_term(c: Rational, e: int, n: int) -> QSeries:
    """多项式 1 - c·q^e（e ≥ 1）"""
    if e < 1:
        msg = f"Exponent of the factor 1 - c*q^e must be >= 1, got {e}"
        raise BadArguments(msg)
    out = list(qs_one(n).coeffs)
    if e <= n:
        out[e] -= Fraction(c)
    return QSeries(tuple(out))


def qs_inverse(a: QSeries) -> QSeries:
    """常数项为 1 的级数的截断逆（三角递推）"""
    if a.coeffs[0] != 1:
        msg = f"Only series with constant term 1 are inverted, got {a.coeffs[0]}"
        raise BadArguments(msg)
    inv = [Fraction(1)]
    for m in range(1, a.trunc + 1):
        inv.append(-sum((a.coeffs[i] * inv[m - i] for i in range(1, m + 1)), Fraction(0)))
    return QSeries(tuple(inv))


def qs_pochhammer(a_coeff: Rational, a_exp: int, step: int, n: int) -> QSeries:
    """(a·q^{a_exp}; q^{step})_∞ = ∏_{j≥0} (1 - a·q^{a_exp + j·step})，截断到 N

    指数超过 N 的因子不影响结果，直接停止。
    """
    if a_exp < 1 or step < 1:
        msg = f"Pochhammer symbol needs a_exp >= 1 and step >= 1, got ({a_exp}, {step})"
        raise BadArguments(msg)
    result = qs_one(n)
    e = a_exp
    while e <= n:
        result = qs_mul(result, qs_one_minus_term(a_coeff, e, n))
        e += step
    return result


# ============================================================
# θ 函数与 Euler 函数
# ============================================================

@dataclass(frozen=True)
class IdentitySides:
    """恒等式的求和侧与乘积侧"""

    name: str
    sum_side: QSeries
    product_side: QSeries

    @property
    def trunc(self) -> int:
        return self.sum_side.trunc

    @property
    def first_mismatch(self) -> int | None:
        for e, (x, y) in enumerate(zip(self.sum_side.coeffs, self.product_side.coeffs, strict=True)):
            if x != y:
                return e
        return None

    @property
    def equal(self) -> bool:
        return self.first_mismatch is None


def _square_exponents(n: int) -> list[tuple[int, int]]:
    """(指数, 系数)：n ≥ 1 时 n 与 -n 合并为系数 2"""
    out = []
    m = 0
    while m * m <= n:
        out.append((m * m, 1 if m == 0 else 2))
        m += 1
    return out


def _triangular_exponents(n: int) -> list[tuple[int, int]]:
    out = []
    m = 0
    while comb(m + 1, 2) <= n:
        out.append((comb(m + 1, 2), 1))
        m += 1
    return out


def _pentagonal_exponents(n: int) -> list[tuple[int, int]]:
    """广义五边形数 m(3m-1)/2（m ∈ ℤ），系数 (-1)^m"""
    out = [(0, 1)]
    m = 1
    while m * (3 * m - 1) // 2 <= n:
        sign = -1 if m % 2 else 1
        out.append((m * (3 * m - 1) // 2, sign))
        if m * (3 * m + 1) // 2 <= n:
            out.append((m * (3 * m + 1) // 2, sign))
        m += 1
    return sorted(out)


def _from_exponents(terms: list[tuple[int, int]], n: int) -> QSeries:
    out = [Fraction(0)] * (n + 1)
    for e, c in terms:
        out[e] += c
    return QSeries(tuple(out))


def theta_phi(n: int) -> IdentitySides:
    """φ(q) = Σ_{n∈ℤ} q^{n²} = (-q; q²)²_∞ (q²; q²)_∞"""
    _require_trunc(n)
    neg = qs_pochhammer(-1, 1, 2, n)
    product = qs_mul(qs_mul(neg, neg), qs_pochhammer(1, 2, 2, n))
    return IdentitySides("qseries-phi", _from_exponents(_square_exponents(n), n), product)


def theta_psi(n: int) -> IdentitySides:
    """ψ(q) = Σ_{n≥0} q^{C(n+1,2)} = (q²; q²)_∞ / (q; q²)_∞"""
    _require_trunc(n)
    product = qs_mul(qs_pochhammer(1, 2, 2, n), qs_inverse(qs_pochhammer(1, 1, 2, n)))
    return IdentitySides("qseries-psi", _from_exponents(_triangular_exponents(n), n), product)


def euler_f(n: int) -> IdentitySides:
    """f(-q) = Σ_{n∈ℤ} (-1)^n q^{n(3n-1)/2} = (q; q)_∞"""
    _require_trunc(n)
    return IdentitySides("qseries-f", _from_exponents(_pentagonal_exponents(n), n), qs_pochhammer(1, 1, 1, n))


# ============================================================
# 到 Rota-Baxter 代数的同态
# ============================================================

def _x_power(m: int, coeff: Rational) -> RBAElement:
    """coeff·m!·(1⊗x^{⊗m})，即 coeff·(1⊗x)^m 在 λ = 0 下的值"""
    return RBAElement.word(x_power_word(m), Fraction(coeff) * factorial(m))


def qseries_to_rba(s: QSeries, ctx: AlgebraContext) -> RBAElement:
    """Σ a_n q^n ↦ Σ a_n·n!·(1⊗x^{⊗n})（q ↦ 1⊗x）

    Raises:
        NonzeroWeight: ctx.lam ≠ 0
        TruncMismatch: ctx.trunc < s.trunc
    """
    if ctx.lam != 0:
        msg = f"qseries_to_rba needs weight 0, got lambda={ctx.lam}"
        raise NonzeroWeight(msg)
    if ctx.trunc < s.trunc:
        msg = f"Context trunc {ctx.trunc} is smaller than series trunc {s.trunc}"
        raise TruncMismatch(msg)
    return RBAElement.from_terms(
        (x_power_word(m), a * factorial(m)) for m, a in enumerate(s.coeffs) if a
    )


@dataclass(frozen=True)
class FigurateCheck:
    """代数内的阶乘-形数恒等式比较结果"""

    identity: str
    trunc: int
    lhs: RBAElement
    rhs: RBAElement
    first_mismatch: int | None

    @property
    def equal(self) -> bool:
        return self.first_mismatch is None


def _unit_plus(coeff: int, m: int, ctx: AlgebraContext) -> RBAElement:
    """1 + coeff·m!·(1⊗x^{⊗m})"""
    return truncate(element_add(RBAElement.unit(), _x_power(m, coeff)), ctx)


def figurate_identity_check(kind: FigurateKind, n: int) -> FigurateCheck:
    """在 λ = 0、trunc = N 的代数中比较三个恒等式的两侧

    - square:      Σ_{n∈ℤ} (n²)! X_{n²} = ∏ (1 + (2n-1)! X_{2n-1})² (1 - (2n)! X_{2n})
    - triangular:  Σ_{n≥0} (C(n+1,2))! X_{C(n+1,2)} = ∏ (1 - (2n)! X_{2n}) / (1 - (2n-1)! X_{2n-1})
    - pentagonal:  Σ_{n∈ℤ} (-1)^n (n(3n-1)/2)! X_{n(3n-1)/2} = ∏ (1 - n! X_n)

    其中 X_m = 1⊗x^{⊗m}。左侧直接求和，右侧在代数里逐因子相乘，
    除法用 geometric_inverse。
    """
    _require_trunc(n)
    ctx = AlgebraContext(lam=Fraction(0), trunc=n)

    if kind == "square":
        exponents = _square_exponents(n)
    elif kind == "triangular":
        exponents = _triangular_exponents(n)
    elif kind == "pentagonal":
        exponents = _pentagonal_exponents(n)
    else:
        msg = f"Unknown figurate kind {kind!r}; choose one of {list(FIGURATE_KINDS)}"
        raise BadArguments(msg)

    lhs = RBAElement.zero()
    for m, sign in exponents:
        lhs = element_add(lhs, _x_power(m, sign))

    rhs = truncate(RBAElement.unit(), ctx)
    for m in range(1, n + 1):
        if kind == "pentagonal":
            rhs = element_mul(rhs, _unit_plus(-1, m, ctx), ctx)
        elif m % 2 == 1:
            odd = _unit_plus(1, m, ctx)
            if kind == "square":
                rhs = element_mul(element_mul(rhs, odd, ctx), odd, ctx)
            else:
                rhs = element_mul(rhs, geometric_inverse(_x_power(m, 1), ctx), ctx)
        else:
            rhs = element_mul(rhs, _unit_plus(-1, m, ctx), ctx)

    check = FigurateCheck(f"figurate-{kind}", n, lhs, rhs, first_difference(lhs, rhs))
    logger.debug("%s at trunc %d: equal=%s", check.identity, n, check.equal)
    return check
