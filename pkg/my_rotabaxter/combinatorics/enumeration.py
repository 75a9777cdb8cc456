"""穷举神谕 - 每个数族的独立暴力枚举

集合用 1-based 的 frozenset 表示，内部用位掩码。
每个枚举都先估计（或在搜索中统计）状态数，超过 limit 就抛出 SizeLimit，
不做静默截断。limit 默认取 Settings.search_limit。
"""

import logging
from collections.abc import Callable, Iterator, Sequence
from fractions import Fraction
from functools import reduce
from itertools import combinations, product

from my_rotabaxter.combinatorics.numbers import validate_type
from my_rotabaxter.config import load_settings
from my_rotabaxter.errors import BadArguments, SizeLimit

logger = logging.getLogger(__name__)

Block = frozenset[int]
Weight = Callable[[int], Fraction] | Sequence[Fraction] | Sequence[int]


def _resolve_limit(limit: int | None) -> int:
    return load_settings().search_limit if limit is None else limit


def _check_size(size: int, limit: int, what: str) -> None:
    if size > limit:
        msg = f"{what}: search space {size} exceeds limit {limit}"
        raise SizeLimit(msg)
    logger.debug("%s: search space %d", what, size)


def _to_block(mask: int) -> Block:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def _masks_of_size(n: int, size: int) -> list[int]:
    return [sum(1 << i for i in combo) for combo in combinations(range(n), size)]


def _value(f: Weight, k: int) -> Fraction:
    return Fraction(f(k) if callable(f) else f[k])


class _Budget:
    """在回溯中统计访问的节点数"""

    def __init__(self, limit: int, what: str) -> None:
        self.limit = limit
        self.what = what
        self.used = 0

    def spend(self) -> None:
        self.used += 1
        if self.used > self.limit:
            msg = f"{self.what}: visited more than {self.limit} states"
            raise SizeLimit(msg)


# ============================================================
# 覆盖
# ============================================================

def _cover_tuples(
    n: int,
    k: int,
    ell: int,
    limit: int,
    what: str,
    distinct_max: bool = False,
) -> Iterator[tuple[int, ...]]:
    """k 元 ℓ-子集组（位掩码），并集为 [n]

    剪枝：未覆盖元素数不能超过剩余槽位数 × ℓ。
    distinct_max 时要求最大元严格递增（即按最大元排序的无序组）。
    """
    full = (1 << n) - 1
    masks = _masks_of_size(n, ell)
    budget = _Budget(limit, what)

    def walk(slot: int, covered: int, last_top: int, chosen: list[int]) -> Iterator[tuple[int, ...]]:
        budget.spend()
        if slot == k:
            if covered == full:
                yield tuple(chosen)
            return
        uncovered = n - covered.bit_count()
        if uncovered > (k - slot) * ell:
            return
        for mask in masks:
            top = mask.bit_length()
            if distinct_max and top <= last_top:
                continue
            chosen.append(mask)
            yield from walk(slot + 1, covered | mask, top, chosen)
            chosen.pop()

    yield from walk(0, 0, 0, [])


def cover_count(n: int, k: int, ell: int, limit: int | None = None) -> int:
    """B(n, k, ℓ)：k 元 ℓ-子集组覆盖 [n] 的个数（枚举）

    ℓ ≤ n ≤ kℓ 之外为 0。
    """
    if n < 0 or k < 0 or ell < 0:
        msg = f"cover_count needs nonnegative arguments, got ({n}, {k}, {ell})"
        raise BadArguments(msg)
    if k > 0 and not ell <= n <= k * ell:
        return 0
    return sum(1 for _ in _cover_tuples(n, k, ell, _resolve_limit(limit), "cover_count"))


def enum_covers(n: int, k: int, ell: int, limit: int | None = None) -> list[tuple[Block, ...]]:
    if n < 0 or k < 0 or ell < 0:
        msg = f"enum_covers needs nonnegative arguments, got ({n}, {k}, {ell})"
        raise BadArguments(msg)
    if k > 0 and not ell <= n <= k * ell:
        return []
    return [
        tuple(_to_block(m) for m in masks)
        for masks in _cover_tuples(n, k, ell, _resolve_limit(limit), "enum_covers")
    ]


def cover_count_distinct_max(n: int, k: int, ell: int, limit: int | None = None) -> int:
    """B′(n, k, ℓ)：最大元互不相同的覆盖，按最大元排序计数

    k+ℓ-1 ≤ n ≤ kℓ 之外为 0。
    """
    if n < 0 or k < 0 or ell < 0:
        msg = f"cover_count_distinct_max needs nonnegative arguments, got ({n}, {k}, {ell})"
        raise BadArguments(msg)
    if k > 0 and not k + ell - 1 <= n <= k * ell:
        return 0
    tuples = _cover_tuples(
        n, k, ell, _resolve_limit(limit), "cover_count_distinct_max", distinct_max=True
    )
    return sum(1 for _ in tuples)


# ============================================================
# 广义划分（块非空、可相交、最大元互不相同）
# ============================================================

def _gen_partition_space(n: int, k: int | None) -> int:
    """所有候选（最大元集合 × 每块其余元素的子集）的个数"""
    total = 0
    sizes = range(1, n + 1) if k is None else [k]
    for size in sizes:
        if size < 1 or size > n:
            continue
        for rest in combinations(range(1, n), size - 1):
            total += 2 ** sum(m - 1 for m in (*rest, n))
    return total


def iter_generalized_partitions(
    n: int,
    k: int | None = None,
    limit: int | None = None,
) -> Iterator[tuple[Block, ...]]:
    """按最大元递增产出广义划分

    最大元集合必含 n；最大元为 m 的块是 {m} ∪ ([m-1] 的任意子集)，最后过滤并集。

    Raises:
        BadArguments: n < 1
        SizeLimit: 候选数超过 limit
    """
    if n < 1:
        msg = f"Generalized partitions need n >= 1, got {n}"
        raise BadArguments(msg)
    _check_size(_gen_partition_space(n, k), _resolve_limit(limit), "generalized partitions")

    full = (1 << n) - 1
    sizes = range(1, n + 1) if k is None else [k]
    for size in sizes:
        if size < 1 or size > n:
            continue
        for rest in combinations(range(1, n), size - 1):
            tops = (*rest, n)
            choices = [
                [(1 << (m - 1)) | low for low in range(1 << (m - 1))]
                for m in tops
            ]
            for blocks in product(*choices):
                if reduce(int.__or__, blocks) == full:
                    yield tuple(_to_block(b) for b in blocks)


def enum_generalized_partitions(
    n: int,
    k: int | None = None,
    limit: int | None = None,
) -> list[tuple[Block, ...]]:
    return list(iter_generalized_partitions(n, k, limit))


# ============================================================
# 集合划分
# ============================================================

def enum_set_partitions(n: int, k: int | None = None) -> list[tuple[Block, ...]]:
    """[n] 的集合划分（限制增长串），块按最小元排序"""
    if n < 0:
        msg = f"n must be >= 0, got {n}"
        raise BadArguments(msg)
    found: list[tuple[Block, ...]] = []

    def walk(i: int, labels: list[int], blocks: int) -> None:
        if i == n:
            if k is None or blocks == k:
                found.append(
                    tuple(frozenset(j + 1 for j in range(n) if labels[j] == b) for b in range(blocks))
                )
            return
        for b in range(blocks + 1):
            if k is not None and b == blocks and blocks == k:
                continue
            labels.append(b)
            walk(i + 1, labels, max(blocks, b + 1))
            labels.pop()

    walk(0, [], 0)
    return found


def enum_ordered_set_partitions(n: int, k: int, limit: int | None = None) -> list[tuple[Block, ...]]:
    """[n] 到 [k] 的满射，写成有序块组 (f^{-1}(1), …, f^{-1}(k))"""
    if n < 0 or k < 0:
        msg = f"Arguments must be >= 0, got (n={n}, k={k})"
        raise BadArguments(msg)
    _check_size(k**n, _resolve_limit(limit), "ordered set partitions")
    found: list[tuple[Block, ...]] = []
    for labels in product(range(k), repeat=n):
        if len(set(labels)) == k:
            found.append(tuple(frozenset(j + 1 for j in range(n) if labels[j] == b) for b in range(k)))
    return found


# ============================================================
# 合成与多重集受限划分
# ============================================================

def _composition_total(total: int, maxpart: int) -> int:
    counts = [1] + [0] * total
    for s in range(1, total + 1):
        counts[s] = sum(counts[s - p] for p in range(1, min(maxpart, s) + 1))
    return counts[total]


def compositions_bounded(total: int, maxpart: int, limit: int | None = None) -> list[tuple[int, ...]]:
    """π(total) 中每个部分 ≤ maxpart 的合成；total = 0 时只有空合成"""
    if total < 0 or maxpart < 1:
        msg = f"compositions_bounded needs total >= 0 and maxpart >= 1, got ({total}, {maxpart})"
        raise BadArguments(msg)
    _check_size(_composition_total(total, maxpart), _resolve_limit(limit), "compositions")

    def walk(left: int) -> Iterator[tuple[int, ...]]:
        if left == 0:
            yield ()
            return
        for part in range(1, min(maxpart, left) + 1):
            for tail in walk(left - part):
                yield (part, *tail)

    return list(walk(total))


def enum_restricted_partitions(
    n: int,
    k: int,
    parts: Sequence[int],
    limit: int | None = None,
) -> list[tuple[Block, ...]]:
    """类型 I 的有序受限划分：#B_j = i_j，B_j ⊆ [n]，每个元素恰好用 k 次"""
    parts = validate_type(n, k, parts)
    budget = _Budget(_resolve_limit(limit), "restricted partitions")
    found: list[tuple[Block, ...]] = []

    def walk(j: int, remaining: list[int], chosen: list[Block]) -> None:
        budget.spend()
        if j == len(parts):
            if not any(remaining):
                found.append(tuple(chosen))
            return
        live = [i for i in range(n) if remaining[i] > 0]
        for combo in combinations(live, parts[j]):
            for i in combo:
                remaining[i] -= 1
            chosen.append(frozenset(i + 1 for i in combo))
            walk(j + 1, remaining, chosen)
            chosen.pop()
            for i in combo:
                remaining[i] += 1

    walk(0, [k] * n, [])
    return found


def enum_nfold_stuffles(
    n: int,
    k: int,
    parts: Sequence[int],
    limit: int | None = None,
) -> list[tuple[tuple[int, ...], ...]]:
    """类型 I 的 n 重 stuffle

    n 个长度为 k 的词各给一个保序单射 φ_i: [k] → [t]（t = ℓ(I)），
    用像集表示；位置 j 恰好被 i_j 个像集命中。
    """
    parts = validate_type(n, k, parts)
    t = len(parts)
    budget = _Budget(_resolve_limit(limit), "n-fold stuffles")
    found: list[tuple[tuple[int, ...], ...]] = []

    def walk(word: int, hits: list[int], images: list[tuple[int, ...]]) -> None:
        budget.spend()
        if word == n:
            if hits == list(parts):
                found.append(tuple(images))
            return
        for image in combinations(range(1, t + 1), k):
            if any(hits[p - 1] >= parts[p - 1] for p in image):
                continue
            for p in image:
                hits[p - 1] += 1
            images.append(image)
            walk(word + 1, hits, images)
            images.pop()
            for p in image:
                hits[p - 1] -= 1

    walk(0, [0] * t, [])
    return found


# ============================================================
# 乘积与复合公式的求和神谕
# ============================================================

def eta(sets: Sequence[Block]) -> int:
    """η(T_1, …, T_k) = Σ_{I ⊆ [k], #I ≥ 2} (-1)^{#I} #(∩_{i∈I} T_i)"""
    total = 0
    for size in range(2, len(sets) + 1):
        for group in combinations(sets, size):
            total += (-1) ** size * len(frozenset.intersection(*group))
    return total


def pair_cover_sum(n: int, f: Weight, g: Weight, lam: Fraction) -> Fraction:
    """Σ_{(S,T), S∪T=[n]} λ^{#(S∩T)} f(#S) g(#T)

    每个元素只属于 S、只属于 T 或同时属于两者，共 3^n 项。
    """
    lam = Fraction(lam)
    total = Fraction(0)
    for labels in product((0, 1, 2), repeat=n):
        only_s, only_t = labels.count(0), labels.count(1)
        both = n - only_s - only_t
        total += lam**both * _value(f, only_s + both) * _value(g, only_t + both)
    return total


def kfold_cover_sum(
    n: int,
    fs: Sequence[Weight],
    lam: Fraction,
    limit: int | None = None,
) -> Fraction:
    """Σ_{(T_1..T_k), ∪T_i=[n]} λ^{Σ#T_i - n} ∏ f_i(#T_i)

    T_i 可以为空；每个元素选一个非空的下标集合。
    """
    k = len(fs)
    if k == 0:
        msg = "kfold_cover_sum needs at least one weight sequence"
        raise BadArguments(msg)
    _check_size((2**k - 1) ** n, _resolve_limit(limit), "k-fold covers")
    lam = Fraction(lam)
    total = Fraction(0)
    for owners in product(range(1, 1 << k), repeat=n):
        sizes = [sum(1 for o in owners if o >> i & 1) for i in range(k)]
        term = lam ** (sum(sizes) - n)
        for f, size in zip(fs, sizes, strict=True):
            term *= _value(f, size)
        total += term
    return total


def divided_power_sum(
    n: int,
    k: int,
    f: Weight,
    lam: Fraction,
    limit: int | None = None,
) -> Fraction:
    """Σ_{k 块广义划分} λ^{Σ#B_i - n} ∏ f(#B_i)，即 E^{[k]} 在 1_n 处的系数"""
    lam = Fraction(lam)
    if n == 0:
        return Fraction(1 if k == 0 else 0)
    if k == 0:
        return Fraction(0)
    total = Fraction(0)
    for blocks in iter_generalized_partitions(n, k, limit):
        term = lam ** (sum(len(b) for b in blocks) - n)
        for b in blocks:
            term *= _value(f, len(b))
        total += term
    return total


def generalized_partition_sum(
    n: int,
    f: Weight,
    g: Weight,
    lam: Fraction,
    limit: int | None = None,
) -> Fraction:
    """复合公式：Σ_{广义划分 {B_1..B_k}} g(k) λ^{Σ#B_i - n} ∏ f(#B_i)；n = 0 时为 g(0)"""
    if n == 0:
        return _value(g, 0)
    return sum(
        (_value(g, k) * divided_power_sum(n, k, f, lam, limit) for k in range(1, n + 1)),
        Fraction(0),
    )
