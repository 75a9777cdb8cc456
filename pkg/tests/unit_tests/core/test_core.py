"""代数核心测试：元素运算、P、d、几何逆与 λ = 0 下的组合恒等式"""

from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest

from my_rotabaxter.combinatorics import compositions_bounded, multinomial, stirling2
from my_rotabaxter.core import (
    AlgebraContext,
    RBAElement,
    derive,
    element_add,
    element_from_terms,
    element_mul,
    element_neg,
    element_pow,
    element_scale,
    element_sub,
    first_difference,
    geometric_inverse,
    is_scalar,
    make_word,
    one,
    one_mul_closed,
    power_list,
    rb_apply,
    truncate,
    word_product_recursive,
    word_product_stuffle,
    x_power_word,
    x_word,
)
from my_rotabaxter.errors import BadArguments, NonPositiveDegree, NonScalarWord, NonzeroWeight


def el(*terms: tuple[tuple[int, ...], int | Fraction]) -> RBAElement:
    return element_from_terms(terms)


# ============================================================
# 上下文与构造
# ============================================================

def test_context_validation():
    ctx = AlgebraContext(lam=2, trunc=3)  # type: ignore[arg-type]
    assert ctx.lam == Fraction(2)
    assert isinstance(ctx.lam, Fraction)
    assert ctx.with_trunc(5).trunc == 5
    assert ctx.with_lambda(Fraction(1, 2)).lam == Fraction(1, 2)
    with pytest.raises(BadArguments):
        AlgebraContext(trunc=-1)


def test_word_helpers():
    assert one(0) == (0,)
    assert one(3) == (0, 0, 0, 0)
    assert x_word([2, 1]) == (0, 2, 1)
    assert x_power_word(3) == (0, 1, 1, 1)
    with pytest.raises(BadArguments):
        make_word([])
    with pytest.raises(BadArguments):
        make_word([1, -1])
    with pytest.raises(BadArguments):
        one(-1)


def test_canonical_form():
    e = el(((0, 0), 1), ((0,), 2), ((0, 0), -1), ((0, 1), Fraction(1, 2)))
    assert e.terms == (((0,), Fraction(2)), ((0, 1), Fraction(1, 2)))
    assert e.coeff((0, 0)) == 0
    assert e.words() == [(0,), (0, 1)]
    assert (e.min_degree(), e.max_degree()) == (0, 1)
    assert RBAElement.zero().min_degree() is None
    assert len(e) == 2


def test_linear_operations():
    e = el((one(1), 1), (one(3), 1))
    assert element_add(e, RBAElement.zero()) == e
    assert element_add(RBAElement.word(one(2)), element_scale(-1, RBAElement.word(one(2)))) == RBAElement.zero()
    assert element_scale(3, e) == el((one(1), 3), (one(3), 3))
    assert element_scale(0, e) == RBAElement.zero()
    assert element_sub(e, e) == RBAElement.zero()
    assert element_neg(element_neg(e)) == e


def test_first_difference():
    a = el((one(1), 1), (one(3), 2))
    b = el((one(1), 1), (one(3), 5), (one(4), 1))
    assert first_difference(a, a) is None
    assert first_difference(a, b) == 3
    assert first_difference(RBAElement.zero(), RBAElement.unit()) == 0


# ============================================================
# 乘积
# ============================================================

def test_word_product_wrappers_agree():
    lam = Fraction(7)
    ctx = AlgebraContext(lam=lam, trunc=10)
    expected = el(
        ((0, 1, 2, 3), 1), ((0, 1, 3, 2), 1), ((0, 3, 1, 2), 1), ((0, 1, 5), lam), ((0, 4, 2), lam)
    )
    assert word_product_recursive((0, 1, 2), (0, 3), ctx) == expected
    assert word_product_stuffle((0, 1, 2), (0, 3), ctx) == expected


def test_unit_law(ctx: AlgebraContext):
    e = el((one(1), 1), (one(2), 1))
    assert element_mul(e, RBAElement.unit(), ctx) == e
    assert element_mul(RBAElement.word((5,)), RBAElement.unit(), ctx) == RBAElement.word((5,))


def test_scalar_products(ctx: AlgebraContext, ctx0: AlgebraContext):
    assert element_mul(RBAElement.word(one(1)), RBAElement.word(one(2)), ctx) == el((one(3), 3), (one(2), 2))
    assert element_mul(RBAElement.word(one(1)), RBAElement.word(one(1)), ctx0) == el((one(2), 2))
    x = RBAElement.word((0, 1))
    assert element_mul(x, x, ctx0) == el(((0, 1, 1), 2))


def test_one_mul_closed_examples():
    lam = Fraction(5, 3)
    ctx = AlgebraContext(lam=lam, trunc=10)
    assert one_mul_closed(1, 1, ctx) == el((one(2), 2), (one(1), lam))
    assert one_mul_closed(4, 0, ctx) == el((one(4), 1))
    assert one_mul_closed(2, 2, ctx) == el((one(4), 6), (one(3), 6 * lam), (one(2), lam**2))
    with pytest.raises(BadArguments):
        one_mul_closed(-1, 2, ctx)


@pytest.mark.parametrize("lam", [Fraction(0), Fraction(1), Fraction(5, 3)], ids=str)
def test_one_mul_closed_matches_product(lam: Fraction):
    ctx = AlgebraContext(lam=lam, trunc=16)
    for m in range(9):
        for n in range(9):
            got = element_mul(RBAElement.word(one(m)), RBAElement.word(one(n)), ctx)
            assert got == one_mul_closed(m, n, ctx), (m, n)


def test_divided_powers_at_weight_zero(ctx0: AlgebraContext):
    ctx = ctx0.with_trunc(16)
    for m in range(9):
        for n in range(9):
            got = element_mul(RBAElement.word(one(m)), RBAElement.word(one(n)), ctx)
            assert got == el((one(m + n), comb(m + n, m)))


def test_backend_selection():
    lam = Fraction(2)
    a = el(((0, 1, 2), 1), (one(2), Fraction(-1, 2)))
    b = el(((1, 0, 3), 3), ((0, 2), 1))
    recursive = element_mul(a, b, AlgebraContext(lam=lam, trunc=6, backend="recursive"))
    stuffle = element_mul(a, b, AlgebraContext(lam=lam, trunc=6, backend="stuffle"))
    assert recursive == stuffle


def test_product_truncates():
    ctx = AlgebraContext(lam=Fraction(1), trunc=2)
    assert element_mul(RBAElement.word(one(1)), RBAElement.word(one(1)), ctx) == el((one(2), 2), (one(1), 1))
    assert element_mul(RBAElement.word(one(2)), RBAElement.word(one(1)), ctx) == el((one(2), 2))
    assert truncate(el((one(3), 1), (one(1), 1)), ctx) == el((one(1), 1))


# ============================================================
# 幂
# ============================================================

def test_powers():
    lam = Fraction(2)
    ctx = AlgebraContext(lam=lam, trunc=5)
    e = RBAElement.word(one(1))
    assert element_pow(e, 3, ctx) == el((one(1), lam**2), (one(2), 6 * lam), (one(3), 6))
    assert element_pow(e, 0, ctx) == RBAElement.unit()
    assert power_list(e, 2, ctx) == [RBAElement.unit(), e, element_mul(e, e, ctx)]
    with pytest.raises(BadArguments):
        power_list(e, -1, ctx)


@pytest.mark.parametrize("lam", [Fraction(0), Fraction(1), Fraction(2), Fraction(3)], ids=str)
def test_stirling_expansion(lam: Fraction):
    """(1⊗1)^n = Σ_k k!·S(n,k)·λ^{n-k}·1_k"""
    ctx = AlgebraContext(lam=lam, trunc=8)
    powers = power_list(RBAElement.word(one(1)), 8, ctx)
    for n in range(1, 9):
        expected = el(*((one(k), factorial(k) * stirling2(n, k) * lam ** (n - k)) for k in range(1, n + 1)))
        assert powers[n] == expected, n


def test_x_powers_at_weight_zero(ctx0: AlgebraContext):
    assert element_pow(RBAElement.word((0, 1)), 3, ctx0) == el((x_power_word(3), 6))


# ============================================================
# Rota-Baxter 算子与导子
# ============================================================

def test_rb_apply(ctx: AlgebraContext):
    for k in range(5):
        assert rb_apply(RBAElement.word(one(k)), ctx) == RBAElement.word(one(k + 1))
    assert rb_apply(RBAElement.word((5,)), ctx) == RBAElement.word((0, 5))
    assert rb_apply(RBAElement.zero(), ctx) == RBAElement.zero()
    assert rb_apply(RBAElement.word(one(ctx.trunc)), ctx) == RBAElement.zero()


def test_derive(ctx: AlgebraContext):
    assert derive(RBAElement.word(one(3)), ctx) == RBAElement.word(one(2))
    assert derive(RBAElement.unit(), ctx) == RBAElement.zero()
    scalar = el((one(0), 4), (one(2), Fraction(1, 3)), (one(5), -2))
    assert is_scalar(scalar)
    assert derive(rb_apply(scalar, ctx), ctx) == scalar


def test_derive_rejects_non_scalar(ctx: AlgebraContext):
    with pytest.raises(NonScalarWord):
        derive(el((one(2), 1), ((0, 1), 1)), ctx)


# ============================================================
# 几何逆
# ============================================================

def test_geometric_inverse_examples():
    ctx = AlgebraContext(lam=Fraction(0), trunc=6)
    assert geometric_inverse(RBAElement.word(one(2)), ctx) == el(
        (one(0), 1), (one(2), 1), (one(4), 6), (one(6), 90)
    )
    assert geometric_inverse(RBAElement.zero(), ctx) == RBAElement.unit()
    assert geometric_inverse(RBAElement.word((0, 1)), ctx.with_trunc(3)) == el(
        (one(0), 1), ((0, 1), 1), ((0, 1, 1), 2), ((0, 1, 1, 1), 6)
    )


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_geometric_inverse_of_scalar_word(ell: int):
    """1/(1 - 1_ℓ) = Σ_k (kℓ)!/(ℓ!)^k·1_{kℓ}"""
    ctx = AlgebraContext(lam=Fraction(0), trunc=9)
    expected = el(*((one(k * ell), factorial(k * ell) // factorial(ell) ** k) for k in range(9 // ell + 1)))
    assert geometric_inverse(RBAElement.word(one(ell)), ctx) == expected


def test_geometric_inverse_errors(ctx: AlgebraContext, ctx0: AlgebraContext):
    with pytest.raises(NonzeroWeight):
        geometric_inverse(RBAElement.word(one(2)), ctx)
    with pytest.raises(NonPositiveDegree):
        geometric_inverse(el((one(0), 1), (one(1), 1)), ctx0)


# ============================================================
# λ = 0 下的 x 幂恒等式
# ============================================================

def test_multinomial_identity():
    """∏_i (1⊗x^{⊗n_i}) = (Σn_i; n_1, …, n_k)·(1⊗x^{⊗Σn_i})"""
    ctx = AlgebraContext(lam=Fraction(0), trunc=8)
    for total in range(1, 9):
        for parts in compositions_bounded(total, total):
            product = RBAElement.unit()
            for p in parts:
                product = element_mul(product, RBAElement.word(x_power_word(p)), ctx)
            assert product == el((x_power_word(total), multinomial(total, parts))), parts


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_permutation_identity(k: int):
    """∏_{i=1}^k (1⊗x^i) = Σ_σ 1⊗x^{σ(1)}⊗…⊗x^{σ(k)}"""
    ctx = AlgebraContext(lam=Fraction(0), trunc=k)
    product = RBAElement.unit()
    for i in range(1, k + 1):
        product = element_mul(product, RBAElement.word((0, i)), ctx)
    assert product == el(*((x_word(perm), 1) for perm in permutations(range(1, k + 1))))


@pytest.mark.parametrize("top", [1, 2, 3, 4, 5, 6])
def test_distinct_parts_identity(top: int):
    """∏_{n=1}^M (1 + 1⊗x^n) 是部分互不相同的合成之和"""
    ctx = AlgebraContext(lam=Fraction(0), trunc=top)
    product = RBAElement.unit()
    for n in range(1, top + 1):
        product = element_mul(product, element_add(RBAElement.unit(), RBAElement.word((0, n))), ctx)

    expected = []
    for mask in range(1 << top):
        chosen = [n for n in range(1, top + 1) if mask >> (n - 1) & 1]
        expected.extend((x_word(perm), 1) for perm in permutations(chosen))
    assert product == el(*expected)
    assert len(product) == sum(factorial(s) * comb(top, s) for s in range(top + 1))
