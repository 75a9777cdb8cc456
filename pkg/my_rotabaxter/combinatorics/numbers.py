"""组合数族的精确值（公式与递推路径）

所有函数返回任意精度整数。带 lru_cache 的函数共享记忆表，
lru_cache 自带锁，多线程并发调用是安全的。
"""

import math
from collections.abc import Iterator, Sequence
from functools import lru_cache
from itertools import combinations

from my_rotabaxter.errors import BadArguments

MEMO_SIZE = 1 << 14


def _require_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            msg = f"{name} must be >= 0, got {value}"
            raise BadArguments(msg)


# ============================================================
# 基础
# ============================================================

def factorial(n: int) -> int:
    _require_nonnegative(n=n)
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k)，k > n 时为 0"""
    _require_nonnegative(n=n, k=k)
    return math.comb(n, k)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / ∏ parts_i!

    Raises:
        BadArguments: 含负数或 Σ parts ≠ n
    """
    _require_nonnegative(n=n)
    if any(p < 0 for p in parts):
        msg = f"multinomial parts must be >= 0, got {list(parts)}"
        raise BadArguments(msg)
    if sum(parts) != n:
        msg = f"multinomial parts must sum to {n}, got {list(parts)}"
        raise BadArguments(msg)
    result = 1
    remaining = n
    for p in parts:
        result *= math.comb(remaining, p)
        remaining -= p
    return result


# ============================================================
# Stirling 与 Bell
# ============================================================

@lru_cache(maxsize=MEMO_SIZE)
def stirling2(n: int, k: int) -> int:
    """第二类 Stirling 数 S(n, k)"""
    _require_nonnegative(n=n, k=k)
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell(n: int) -> int:
    _require_nonnegative(n=n)
    return sum(stirling2(n, k) for k in range(n + 1))


def surjection_count(n: int, k: int) -> int:
    """k!·S(n, k)：[n] 到 [k] 的满射数（有序集合划分）"""
    return math.factorial(k) * stirling2(n, k)


# ============================================================
# 广义 Stirling / Bell（块可以相交，最大元互不相同）
# ============================================================

@lru_cache(maxsize=MEMO_SIZE)
def gen_stirling_rec(n: int, k: int) -> int:
    """S̄(n, k) = Σ_i C(n-1, i)·2^i·S̄(i, k-1)

    S̄(0, 0) = 1，S̄(n, 0) = 0 (n ≥ 1)，S̄(n, k) = 0 (k > n)。
    """
    _require_nonnegative(n=n, k=k)
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    return sum(math.comb(n - 1, i) * 2**i * gen_stirling_rec(i, k - 1) for i in range(k - 1, n))


def gen_stirling_explicit(n: int, k: int) -> int:
    """S̄(n, k) = 2^{C(k,2)} Σ_{1≤m_1<…<m_{n-k}≤n-1} ∏_i (2^{k-m_i+i} - 1)

    Raises:
        BadArguments: 不满足 n ≥ k ≥ 1
    """
    if not n >= k >= 1:
        msg = f"gen_stirling_explicit needs n >= k >= 1, got (n={n}, k={k})"
        raise BadArguments(msg)
    total = 0
    for ms in combinations(range(1, n), n - k):
        term = 1
        for i, m in enumerate(ms, start=1):
            term *= 2 ** (k - m + i) - 1
        total += term
    return 2 ** math.comb(k, 2) * total


def gen_bell(n: int) -> int:
    """B̄(n) = Σ_{k=1}^n S̄(n, k)"""
    if n < 1:
        msg = f"gen_bell needs n >= 1, got {n}"
        raise BadArguments(msg)
    return sum(gen_stirling_rec(n, k) for k in range(1, n + 1))


# ============================================================
# 覆盖数
# ============================================================

def cover_count_formula(n: int, k: int, ell: int) -> int:
    """B(n, k, ℓ) 的容斥闭式 Σ_j (-1)^j C(n, j) C(n-j, ℓ)^k

    与枚举神谕互相校验。
    """
    _require_nonnegative(n=n, k=k, ell=ell)
    return sum((-1) ** j * math.comb(n, j) * math.comb(n - j, ell) ** k for j in range(n + 1))


# ============================================================
# 多重集 S_{n,k} = {1^k, …, n^k} 的有序受限划分
# ============================================================
# 状态 counts[d] = 还需要被覆盖 d 次的元素个数（元素之间对称，只记个数）

def _splits(counts: tuple[int, ...], size: int) -> Iterator[tuple[int, tuple[int, ...]]]:
    """从剩余需求 > 0 的元素中选 size 个组成一个块

    产出 (选法数, 新状态)。
    """

    def walk(d: int, left: int, ways: int, state: list[int]) -> Iterator[tuple[int, tuple[int, ...]]]:
        if d == len(counts):
            if left == 0:
                yield ways, tuple(state)
            return
        for take in range(min(left, counts[d]) + 1):
            nxt = state.copy()
            nxt[d] -= take
            nxt[d - 1] += take
            yield from walk(d + 1, left - take, ways * math.comb(counts[d], take), nxt)

    yield from walk(1, size, 1, list(counts))


def _start_state(n: int, k: int) -> tuple[int, ...]:
    state = [0] * (k + 1)
    state[k] = n
    return tuple(state)


def _exhausted(counts: tuple[int, ...]) -> bool:
    return not any(counts[1:])


@lru_cache(maxsize=MEMO_SIZE)
def _typed_fillings(counts: tuple[int, ...], sizes: tuple[int, ...]) -> int:
    if not sizes:
        return 1 if _exhausted(counts) else 0
    return sum(ways * _typed_fillings(nxt, sizes[1:]) for ways, nxt in _splits(counts, sizes[0]))


@lru_cache(maxsize=MEMO_SIZE)
def _free_fillings(counts: tuple[int, ...], rows: int) -> int:
    """块数为 rows（rows < 0 表示不限）的有序块序列数"""
    if _exhausted(counts):
        return 1 if rows <= 0 else 0
    if rows == 0:
        return 0
    live = sum(counts[1:])
    return sum(
        ways * _free_fillings(nxt, rows - 1 if rows > 0 else -1)
        for size in range(1, live + 1)
        for ways, nxt in _splits(counts, size)
    )


def validate_type(n: int, k: int, parts: Sequence[int]) -> tuple[int, ...]:
    """检查 I 是 π(kn) 中部分 ≤ n 的合成

    Raises:
        BadArguments: |I| ≠ kn 或部分不在 1..n
    """
    _require_nonnegative(n=n, k=k)
    parts = tuple(parts)
    if sum(parts) != k * n:
        msg = f"Type {list(parts)} must have norm k*n = {k * n}"
        raise BadArguments(msg)
    if any(not 1 <= p <= n for p in parts):
        msg = f"Every part of {list(parts)} must lie in 1..{n}"
        raise BadArguments(msg)
    return parts


def restricted_type_count(n: int, k: int, parts: Sequence[int]) -> int:
    """C_I：有序块组 (B_1, …, B_t)，B_j ⊆ [n]，#B_j = i_j，且每个元素恰好出现 k 次"""
    parts = validate_type(n, k, parts)
    return _typed_fillings(_start_state(n, k), parts)


def multiset_partition_total(n: int, k: int) -> int:
    """C(n, k) = Σ_{I ∈ π(kn)} C_I"""
    if n < 1 or k < 1:
        msg = f"multiset_partition_total needs n, k >= 1, got (n={n}, k={k})"
        raise BadArguments(msg)
    return _free_fillings(_start_state(n, k), -1)


def cover_count_by_length(t: int, n: int, k: int) -> int:
    """Σ_{I ∈ π(kn), ℓ(I) = t} C_I，等于 B(t, n, k)"""
    _require_nonnegative(t=t, n=n, k=k)
    return _free_fillings(_start_state(n, k), t)


def clear_tables() -> None:
    for memo in (stirling2, gen_stirling_rec, _typed_fillings, _free_fillings):
        memo.cache_clear()
