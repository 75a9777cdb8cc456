"""枚举神谕测试：与闭式/递推逐值比对，并检查搜索上限"""

from fractions import Fraction
from itertools import combinations, product

import pytest

from my_rotabaxter.combinatorics import (
    bell,
    compositions_bounded,
    cover_count,
    cover_count_distinct_max,
    cover_count_formula,
    divided_power_sum,
    enum_covers,
    enum_generalized_partitions,
    enum_nfold_stuffles,
    enum_ordered_set_partitions,
    enum_restricted_partitions,
    enum_set_partitions,
    eta,
    gen_bell,
    gen_stirling_explicit,
    gen_stirling_rec,
    generalized_partition_sum,
    iter_generalized_partitions,
    kfold_cover_sum,
    pair_cover_sum,
    restricted_type_count,
    stirling2,
    surjection_count,
)
from my_rotabaxter.combinatorics.enumeration import _gen_partition_space
from my_rotabaxter.config import DEFAULT_SEARCH_LIMIT
from my_rotabaxter.errors import BadArguments, SizeLimit

from tests.unit_tests.combinatorics.test_numbers import KN_PAIRS


def fs(*items: int) -> frozenset[int]:
    return frozenset(items)


def _collection(blocks) -> frozenset[frozenset[int]]:
    return frozenset(blocks)


# ============================================================
# 广义划分
# ============================================================

def test_generalized_partitions_of_three():
    found = {_collection(p) for p in enum_generalized_partitions(3, 2)}
    assert found == {
        _collection([fs(1), fs(2, 3)]),
        _collection([fs(1), fs(1, 2, 3)]),
        _collection([fs(2), fs(1, 3)]),
        _collection([fs(2), fs(1, 2, 3)]),
        _collection([fs(1, 2), fs(3)]),
        _collection([fs(1, 2), fs(1, 3)]),
        _collection([fs(1, 2), fs(2, 3)]),
        _collection([fs(1, 2), fs(1, 2, 3)]),
    }
    assert enum_generalized_partitions(1) == [(fs(1),)]


def test_generalized_partition_blocks_are_valid():
    for blocks in iter_generalized_partitions(5):
        maxima = [max(b) for b in blocks]
        assert len(set(maxima)) == len(maxima)
        assert frozenset().union(*blocks) == fs(1, 2, 3, 4, 5)


ENUMERABLE_NK = [
    (n, k)
    for n in range(1, 9)
    for k in range(1, n + 1)
    if _gen_partition_space(n, k) <= DEFAULT_SEARCH_LIMIT
]


def test_enumerable_grid():
    assert {(7, 3), (7, 4), (7, 7), (8, 3)} <= set(ENUMERABLE_NK)
    assert (8, 4) not in ENUMERABLE_NK


@pytest.mark.parametrize(("n", "k"), ENUMERABLE_NK)
def test_triple_agreement(n: int, k: int):
    """递推 = 闭式 = 枚举"""
    count = sum(1 for _ in iter_generalized_partitions(n, k))
    assert gen_stirling_rec(n, k) == gen_stirling_explicit(n, k) == count


def test_generalized_partition_counts():
    assert len(enum_generalized_partitions(4, 3)) == gen_stirling_rec(4, 3) == 88
    assert [len(enum_generalized_partitions(n)) for n in range(1, 6)] == [gen_bell(n) for n in range(1, 6)]


def test_generalized_partition_limits():
    with pytest.raises(SizeLimit):
        enum_generalized_partitions(6, limit=100)
    with pytest.raises(SizeLimit):
        enum_generalized_partitions(8, 8)
    with pytest.raises(BadArguments):
        enum_generalized_partitions(0)


# ============================================================
# 覆盖
# ============================================================

def test_cover_examples():
    assert cover_count(4, 2, 2) == 6
    assert cover_count(2, 2, 2) == 1
    assert cover_count(3, 2, 2) == 6
    assert cover_count(5, 2, 2) == 0
    assert enum_covers(2, 2, 2) == [(fs(1, 2), fs(1, 2))]


def test_cover_count_matches_formula():
    for k in range(1, 4):
        for ell in range(1, 4):
            for n in range(ell, min(k * ell, 7) + 1):
                assert cover_count(n, k, ell) == cover_count_formula(n, k, ell), (n, k, ell)
                assert len(enum_covers(n, k, ell)) == cover_count(n, k, ell)


def test_distinct_max_covers():
    assert cover_count_distinct_max(3, 2, 2) == 2
    assert cover_count_distinct_max(4, 2, 2) == 3
    assert cover_count_distinct_max(2, 2, 2) == 0
    assert cover_count_distinct_max(3, 3, 1) == 1


def test_cover_budget():
    with pytest.raises(SizeLimit, match="visited more than"):
        cover_count(6, 3, 2, limit=5)
    with pytest.raises(BadArguments):
        cover_count(-1, 2, 2)


# ============================================================
# 集合划分
# ============================================================

def test_set_partitions():
    assert [len(enum_set_partitions(n)) for n in range(8)] == [bell(n) for n in range(8)]
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert len(enum_set_partitions(n, k)) == stirling2(n, k)
            assert len(enum_ordered_set_partitions(n, k)) == surjection_count(n, k)
    assert enum_set_partitions(2, 1) == [(fs(1, 2),)]


def test_ordered_set_partition_limit():
    with pytest.raises(SizeLimit):
        enum_ordered_set_partitions(6, 4, limit=100)


# ============================================================
# 合成、受限划分与 n 重 stuffle
# ============================================================

def test_compositions_bounded():
    assert set(compositions_bounded(2, 2)) == {(1, 1), (2,)}
    assert set(compositions_bounded(4, 2)) == {(2, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2), (1, 1, 1, 1)}
    assert compositions_bounded(0, 3) == [()]
    assert len(compositions_bounded(8, 8)) == 2**7
    with pytest.raises(BadArguments):
        compositions_bounded(3, 0)
    with pytest.raises(SizeLimit):
        compositions_bounded(12, 12, limit=10)


def test_restricted_partition_example():
    found = enum_restricted_partitions(2, 2, [2, 1, 1])
    assert set(found) == {(fs(1, 2), fs(1), fs(2)), (fs(1, 2), fs(2), fs(1))}


@pytest.mark.parametrize(("n", "k"), KN_PAIRS)
def test_enumeration_matches_type_counts(n: int, k: int):
    """C_I = 受限划分个数 = n 重 stuffle 个数"""
    for parts in compositions_bounded(k * n, n):
        expected = restricted_type_count(n, k, parts)
        assert len(enum_restricted_partitions(n, k, parts)) == expected, parts
        assert len(enum_nfold_stuffles(n, k, parts)) == expected, parts


def test_nfold_stuffle_images():
    images = enum_nfold_stuffles(2, 2, [2, 1, 1])
    assert set(images) == {((1, 2), (1, 3)), ((1, 3), (1, 2))}


def test_all_singletons_at_default_limit():
    assert len(enum_restricted_partitions(8, 1, [1] * 8)) == 40320
    assert len(enum_nfold_stuffles(8, 1, [1] * 8)) == 40320


def test_restricted_enumeration_budget():
    with pytest.raises(SizeLimit, match="visited more than 100 states"):
        enum_restricted_partitions(8, 1, [1] * 8, limit=100)
    with pytest.raises(SizeLimit, match="visited more than 100 states"):
        enum_nfold_stuffles(8, 1, [1] * 8, limit=100)


# ============================================================
# 求和神谕
# ============================================================

def test_eta():
    assert eta([fs(1, 2), fs(2, 3)]) == 1
    assert eta([fs(1), fs(1), fs(1)]) == 2
    assert eta([fs(1, 2)]) == 0


@pytest.mark.parametrize(("n", "k"), [(n, k) for n in range(6) for k in range(1, 4)] + [(n, 4) for n in range(4)])
def test_eta_is_euler_characteristic(n: int, k: int):
    """Σ#T_i - #∪T_i = η(T_1, …, T_k)，遍历 [n] 的全部 k 元子集组"""
    subsets = [frozenset(c) for size in range(n + 1) for c in combinations(range(1, n + 1), size)]
    for sets in product(subsets, repeat=k):
        assert sum(len(s) for s in sets) - len(frozenset().union(*sets)) == eta(sets), sets


def test_pair_cover_sum():
    for n in range(6):
        assert pair_cover_sum(n, [1] * 6, [1] * 6, Fraction(1)) == 3**n
        assert pair_cover_sum(n, [1] * 6, [1] * 6, Fraction(0)) == 2**n


def test_kfold_cover_sum():
    for k in range(1, 4):
        ones = [[1] * 5] * k
        for n in range(5):
            assert kfold_cover_sum(n, ones, Fraction(1)) == (2**k - 1) ** n
    with pytest.raises(BadArguments):
        kfold_cover_sum(2, [], Fraction(1))
    with pytest.raises(SizeLimit):
        kfold_cover_sum(8, [[1] * 9] * 3, Fraction(1), limit=1000)


def test_partition_sums():
    def ones(_k: int) -> Fraction:
        return Fraction(1)

    assert divided_power_sum(3, 2, ones, Fraction(1)) == 8
    assert divided_power_sum(3, 2, ones, Fraction(0)) == 3
    assert divided_power_sum(0, 0, ones, Fraction(1)) == 1
    assert divided_power_sum(2, 0, ones, Fraction(1)) == 0
    for n in range(1, 6):
        assert generalized_partition_sum(n, ones, ones, Fraction(1)) == gen_bell(n)
        assert generalized_partition_sum(n, ones, ones, Fraction(0)) == bell(n)
    assert generalized_partition_sum(0, ones, [7], Fraction(1)) == 7
