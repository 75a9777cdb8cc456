"""恒等式校验套件 - verify 子命令的注册表

每个套件接收截断阶 N，返回 {"identity", "trunc", "equal", "first_mismatch"}。
first_mismatch 是第一个不一致的次数（或 q 指数、序列下标），一致时为 None。
"""

import asyncio
import logging
import random
from collections import Counter
from collections.abc import Callable, Iterator
from fractions import Fraction
from itertools import product
from math import factorial, prod

from typing_extensions import TypedDict

from my_rotabaxter.combinatorics import (
    bell,
    compositions_bounded,
    cover_count,
    gen_bell,
    iter_generalized_partitions,
    kfold_cover_sum,
    multiset_partition_total,
    pair_cover_sum,
    restricted_type_count,
)
from my_rotabaxter.core import (
    AlgebraContext,
    RBAElement,
    element_add,
    element_mul,
    element_pow,
    element_scale,
    first_difference,
    rb_apply,
    word_product_recursive,
    word_product_stuffle,
    x_power_word,
    x_word,
)
from my_rotabaxter.egf import (
    LambdaEGF,
    compose,
    divided_powers,
    egf_from_spec,
    egf_kfold,
    egf_product,
    egf_to_element,
)
from my_rotabaxter.errors import BadArguments
from my_rotabaxter.qseries import (
    FigurateKind,
    IdentitySides,
    euler_f,
    figurate_identity_check,
    theta_phi,
    theta_psi,
)

logger = logging.getLogger(__name__)

# 多项式恒等式在这些 λ 处求值
SAMPLE_LAMBDAS: tuple[Fraction, ...] = (Fraction(0), Fraction(1), Fraction(2), Fraction(5, 3))
RB_AXIOM_PAIRS = 125
# trunc = 0 时多数套件没有可比较的项
MIN_VERIFY_TRUNC = 1
SEED = 20240611


class VerifyReport(TypedDict):
    identity: str
    trunc: int
    equal: bool
    first_mismatch: int | None


Suite = Callable[[int], int | None]


def _earliest(current: int | None, found: int | None) -> int | None:
    if found is None:
        return current
    return found if current is None else min(current, found)


def random_element(rng: random.Random, max_length: int = 3, max_exp: int = 2, max_terms: int = 3) -> RBAElement:
    """随机小元素：最多 max_terms 项，词长 ≤ max_length，指数 ≤ max_exp"""
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        length = rng.randint(1, max_length)
        word = tuple(rng.randint(0, max_exp) for _ in range(length))
        terms.append((word, Fraction(rng.randint(-3, 3), rng.randint(1, 2))))
    return RBAElement.from_terms(terms)


# ============================================================
# 代数套件
# ============================================================

def _rb_axiom(trunc: int) -> int | None:
    """P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)"""
    rng = random.Random(SEED)
    mismatch = None
    for lam in SAMPLE_LAMBDAS:
        ctx = AlgebraContext(lam=lam, trunc=trunc)
        for _ in range(RB_AXIOM_PAIRS):
            x, y = random_element(rng), random_element(rng)
            px, py = rb_apply(x, ctx), rb_apply(y, ctx)
            lhs = element_mul(px, py, ctx)
            rhs = element_add(
                element_add(rb_apply(element_mul(x, py, ctx), ctx), rb_apply(element_mul(px, y, ctx), ctx)),
                element_scale(lam, rb_apply(element_mul(x, y, ctx), ctx)),
            )
            mismatch = _earliest(mismatch, first_difference(lhs, rhs))
    return mismatch


def _word_pairs(max_total: int = 4, max_exp: int = 3) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    for la in range(1, max_total):
        for lb in range(1, max_total - la + 1):
            for a in product(range(max_exp + 1), repeat=la):
                for b in product(range(max_exp + 1), repeat=lb):
                    yield a, b


def _backend_equiv(trunc: int) -> int | None:
    mismatch = None
    for lam in SAMPLE_LAMBDAS:
        ctx = AlgebraContext(lam=lam, trunc=trunc)
        for a, b in _word_pairs():
            found = first_difference(word_product_recursive(a, b, ctx), word_product_stuffle(a, b, ctx))
            mismatch = _earliest(mismatch, found)
    return mismatch


def _thm_nk(trunc: int) -> int | None:
    """(1⊗x^{⊗k})^n = Σ_{I∈π(kn)} C_I λ^{kn-ℓ(I)} (1⊗x^{⊗I})，以及 Σ_t B(t,n,k) = C(n,k)"""
    mismatch = None
    top = min(trunc, 8)
    for n in range(1, top + 1):
        for k in range(1, top // n + 1):
            kn = k * n
            for lam in SAMPLE_LAMBDAS[:3]:
                ctx = AlgebraContext(lam=lam, trunc=kn)
                lhs = element_pow(RBAElement.word(x_power_word(k)), n, ctx)
                rhs = RBAElement.from_terms(
                    (x_word(parts), restricted_type_count(n, k, parts) * lam ** (kn - len(parts)))
                    for parts in compositions_bounded(kn, n)
                )
                if lhs != rhs:
                    mismatch = _earliest(mismatch, kn)
            covers = sum(cover_count(t, n, k) for t in range(k, kn + 1))
            if covers != multiset_partition_total(n, k):
                mismatch = _earliest(mismatch, kn)
    return mismatch


# ============================================================
# EGF 套件
# ============================================================

def _compare_coeffs(got: LambdaEGF, expected: list[Fraction], upto: int) -> int | None:
    for i in range(upto + 1):
        if got.coeffs[i] != expected[i]:
            return i
    return None


def _product_formula(trunc: int) -> int | None:
    """乘积卷积与元素乘法、(2^k-1)^n、覆盖求和神谕三方比较"""
    mismatch = None
    upto = min(trunc, 6)
    for lam in SAMPLE_LAMBDAS[:3]:
        ctx = AlgebraContext(lam=lam, trunc=upto)
        hit_or_miss = LambdaEGF.from_function(lambda m: 2**m, ctx)
        ranking = LambdaEGF.from_function(factorial, ctx)
        h = egf_product(hit_or_miss, ranking)
        algebra = element_mul(egf_to_element(hit_or_miss), egf_to_element(ranking), ctx)
        mismatch = _earliest(mismatch, first_difference(egf_to_element(h), algebra))
        oracle = [pair_cover_sum(m, hit_or_miss.coeffs, ranking.coeffs, lam) for m in range(upto + 1)]
        mismatch = _earliest(mismatch, _compare_coeffs(h, oracle, upto))

        sequences = [egf_from_spec(spec, ctx) for spec in ("ones", "ones-from-1", "delta:2")]
        for k in range(1, 4):
            fs = sequences[:k]
            got = egf_kfold(fs)
            oracle = [kfold_cover_sum(m, [f.coeffs for f in fs], lam) for m in range(upto + 1)]
            mismatch = _earliest(mismatch, _compare_coeffs(got, oracle, upto))

    ctx = AlgebraContext(lam=Fraction(1), trunc=upto)
    ones = egf_from_spec("ones", ctx)
    for k in range(1, 6):
        got = egf_kfold([ones] * k)
        mismatch = _earliest(mismatch, _compare_coeffs(got, [Fraction((2**k - 1) ** m) for m in range(upto + 1)], upto))
    return mismatch


def _partition_shapes(n: int) -> Counter[tuple[int, ...]]:
    """[n] 的广义划分按块大小多重集计数"""
    return Counter(tuple(sorted(len(b) for b in blocks)) for blocks in iter_generalized_partitions(n))


def _shape_sum(shapes: Counter[tuple[int, ...]], n: int, lam: Fraction, g: Callable[[int], Fraction], f: Callable[[int], Fraction]) -> Fraction:
    return sum(
        (count * g(len(shape)) * lam ** (sum(shape) - n) * prod(f(s) for s in shape) for shape, count in shapes.items()),
        Fraction(0),
    )


def _composition_formula(trunc: int) -> int | None:
    """λ = 0 得 Bell 数，λ = 1 得广义 Bell 数，并与广义划分求和、divided power 展开比较"""
    mismatch = None
    upto = min(trunc, 7)

    for lam, expected in ((Fraction(0), bell), (Fraction(1), lambda m: gen_bell(m) if m else 1)):
        ctx = AlgebraContext(lam=lam, trunc=upto)
        got = compose(egf_from_spec("ones", ctx), egf_from_spec("ones-from-1", ctx))
        mismatch = _earliest(mismatch, _compare_coeffs(got, [Fraction(expected(m)) for m in range(upto + 1)], upto))

    small = min(trunc, 6)
    shapes = {n: _partition_shapes(n) for n in range(1, small + 1)}
    def f(m: int) -> Fraction:
        return Fraction(m * m + 1) if m else Fraction(0)

    def g(k: int) -> Fraction:
        return Fraction(k + 2)

    for lam in SAMPLE_LAMBDAS[:3]:
        ctx = AlgebraContext(lam=lam, trunc=small)
        f_egf, g_egf = LambdaEGF.from_function(f, ctx), LambdaEGF.from_function(g, ctx)
        composed = compose(g_egf, f_egf)
        oracle = [g(0)] + [_shape_sum(shapes[n], n, lam, g, f) for n in range(1, small + 1)]
        mismatch = _earliest(mismatch, _compare_coeffs(composed, oracle, small))

        powers = divided_powers(f_egf, min(4, small))
        for k, power in enumerate(powers):
            oracle = [Fraction(1 if k == 0 else 0)] + [
                _shape_sum(Counter({s: c for s, c in shapes[n].items() if len(s) == k}), n, lam, lambda _k: Fraction(1), f)
                for n in range(1, small + 1)
            ]
            mismatch = _earliest(mismatch, _compare_coeffs(power, oracle, small))
    return mismatch


# ============================================================
# q 级数套件
# ============================================================

def _qseries(builder: Callable[[int], IdentitySides]) -> Suite:
    def run(trunc: int) -> int | None:
        return builder(trunc).first_mismatch

    return run


def _figurate(kind: FigurateKind) -> Suite:
    def run(trunc: int) -> int | None:
        return figurate_identity_check(kind, trunc).first_mismatch

    return run


SUITES: dict[str, Suite] = {
    "rb-axiom": _rb_axiom,
    "backend-equiv": _backend_equiv,
    "qseries-phi": _qseries(theta_phi),
    "qseries-psi": _qseries(theta_psi),
    "qseries-f": _qseries(euler_f),
    "figurate-square": _figurate("square"),
    "figurate-triangular": _figurate("triangular"),
    "figurate-pentagonal": _figurate("pentagonal"),
    "thm-nk": _thm_nk,
    "product-formula": _product_formula,
    "composition-formula": _composition_formula,
}

IDENTITIES: tuple[str, ...] = tuple(SUITES)


def verify(identity: str, trunc: int) -> VerifyReport:
    """运行一个套件

    Raises:
        BadArguments: 未知恒等式或 trunc < MIN_VERIFY_TRUNC
    """
    suite = SUITES.get(identity)
    if suite is None:
        msg = f"Unknown identity {identity!r}; choose one of {list(IDENTITIES)}"
        raise BadArguments(msg)
    if trunc < MIN_VERIFY_TRUNC:
        msg = f"--trunc must be >= {MIN_VERIFY_TRUNC} for verify, got {trunc}"
        raise BadArguments(msg)
    logger.debug("running %s at trunc %d", identity, trunc)
    mismatch = suite(trunc)
    return VerifyReport(identity=identity, trunc=trunc, equal=mismatch is None, first_mismatch=mismatch)


async def averify(identity: str, trunc: int) -> VerifyReport:
    """异步版本 of verify"""
    return await asyncio.to_thread(verify, identity, trunc)


async def averify_all(trunc: int) -> list[VerifyReport]:
    """并发运行全部套件，结果按注册顺序排列"""
    return list(await asyncio.gather(*(averify(identity, trunc) for identity in IDENTITIES)))
