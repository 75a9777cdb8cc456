"""q 级数测试：截断算术、θ/Euler 恒等式与代数内的形数恒等式"""

from fractions import Fraction
from math import factorial

import pytest

from my_rotabaxter.core import AlgebraContext, RBAElement, element_mul, x_power_word
from my_rotabaxter.errors import BadArguments, NonzeroWeight, TruncMismatch
from my_rotabaxter.qseries import (
    FIGURATE_KINDS,
    QSeries,
    euler_f,
    figurate_identity_check,
    qs_add,
    qs_from_coeffs,
    qs_inverse,
    qs_mul,
    qs_one,
    qs_one_minus_term,
    qs_pochhammer,
    qs_scale,
    qs_zero,
    qseries_to_rba,
    theta_phi,
    theta_psi,
)

GENERALIZED_PENTAGONAL = {m * (3 * m - 1) // 2 for m in range(-10, 11)}


def coeffs(s: QSeries) -> list[int]:
    return [int(c) for c in s.coeffs]


# ============================================================
# 截断算术
# ============================================================

def test_arithmetic():
    n = 3
    assert coeffs(qs_mul(qs_from_coeffs([1, 1], n), qs_one_minus_term(1, 1, n))) == [1, 0, -1, 0]
    assert qs_one_minus_term(0, 2, n) == qs_one(n)
    assert qs_one_minus_term(1, 5, n) == qs_one(n)
    assert qs_add(qs_one(n), qs_scale(-1, qs_one(n))) == qs_zero(n)
    assert qs_one(n).trunc == 3


def test_euler_product_at_three():
    n = 3
    product = qs_one(n)
    for e in (1, 2, 3):
        product = qs_mul(product, qs_one_minus_term(1, e, n))
    assert coeffs(product) == [1, -1, -1, 0]
    assert product == qs_pochhammer(1, 1, 1, n)


def test_inverse():
    a = qs_from_coeffs([1, -3, Fraction(1, 2), 0, 7], 6)
    assert qs_mul(a, qs_inverse(a)) == qs_one(6)
    with pytest.raises(BadArguments):
        qs_inverse(qs_from_coeffs([2, 1], 3))


def test_arithmetic_errors():
    with pytest.raises(TruncMismatch):
        qs_mul(qs_one(3), qs_one(4))
    with pytest.raises(TruncMismatch):
        qs_add(qs_one(3), qs_one(4))
    with pytest.raises(BadArguments):
        qs_one_minus_term(1, 0, 3)
    with pytest.raises(BadArguments):
        qs_pochhammer(1, 0, 1, 3)
    with pytest.raises(BadArguments):
        qs_zero(-1)
    with pytest.raises(BadArguments):
        QSeries(())


# ============================================================
# θ 函数与 Euler 函数
# ============================================================

def test_series_coefficients():
    assert coeffs(theta_phi(9).sum_side) == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]
    assert coeffs(theta_psi(10).sum_side) == [1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1]
    assert coeffs(euler_f(7).sum_side) == [1, -1, -1, 0, 0, 1, 0, 1]


@pytest.mark.parametrize("builder", [theta_phi, theta_psi, euler_f], ids=lambda b: b.__name__)
def test_sum_equals_product(builder):
    sides = builder(50)
    assert sides.trunc == 50
    assert sides.sum_side == sides.product_side
    assert sides.equal
    assert sides.first_mismatch is None


def test_identity_names():
    assert [b(3).name for b in (theta_phi, theta_psi, euler_f)] == ["qseries-phi", "qseries-psi", "qseries-f"]


def test_pentagonal_number_theorem():
    product = qs_pochhammer(1, 1, 1, 50)
    for e, c in enumerate(product.coeffs):
        assert c in (-1, 0, 1)
        assert (c != 0) == (e in GENERALIZED_PENTAGONAL), e


# ============================================================
# 到代数的同态与形数恒等式
# ============================================================

def test_qseries_to_rba():
    ctx = AlgebraContext(lam=Fraction(0), trunc=4)
    assert qseries_to_rba(qs_from_coeffs([0, 1], 4), ctx) == RBAElement.word((0, 1))
    assert qseries_to_rba(qs_one(4), ctx) == RBAElement.unit()
    assert qseries_to_rba(qs_from_coeffs([0, 0, 1], 4), ctx) == RBAElement.word((0, 1, 1), 2)


def test_qseries_to_rba_errors():
    with pytest.raises(NonzeroWeight):
        qseries_to_rba(qs_one(2), AlgebraContext(lam=Fraction(1), trunc=2))
    with pytest.raises(TruncMismatch):
        qseries_to_rba(qs_one(5), AlgebraContext(lam=Fraction(0), trunc=2))


def test_homomorphism():
    n = 7
    ctx = AlgebraContext(lam=Fraction(0), trunc=n)
    a = qs_from_coeffs([1, -2, 0, Fraction(1, 3), 5], n)
    b = qs_from_coeffs([2, 1, 1, 0, 0, -1, 0, 4], n)
    assert qseries_to_rba(qs_mul(a, b), ctx) == element_mul(qseries_to_rba(a, ctx), qseries_to_rba(b, ctx), ctx)


@pytest.mark.parametrize("kind", FIGURATE_KINDS)
def test_figurate_identities(kind):
    check = figurate_identity_check(kind, 25)
    assert check.equal
    assert check.identity == f"figurate-{kind}"
    assert check.lhs == check.rhs


@pytest.mark.parametrize("kind", FIGURATE_KINDS)
def test_figurate_identities_at_zero(kind):
    check = figurate_identity_check(kind, 0)
    assert check.equal
    assert check.lhs == RBAElement.unit()


def test_figurate_coefficients():
    square = figurate_identity_check("square", 25)
    assert square.lhs.coeff(x_power_word(1)) == 2
    assert square.lhs.coeff(x_power_word(25)) == 2 * factorial(25)

    pentagonal = figurate_identity_check("pentagonal", 15)
    assert pentagonal.equal
    assert pentagonal.rhs.coeff(x_power_word(5)) == factorial(5)
    assert pentagonal.rhs.coeff(x_power_word(1)) == -1
    assert pentagonal.rhs.coeff(x_power_word(2)) == -2
    assert pentagonal.rhs.coeff(x_power_word(3)) == 0


def test_figurate_unknown_kind():
    with pytest.raises(BadArguments):
        figurate_identity_check("hexagonal", 5)  # type: ignore[arg-type]
