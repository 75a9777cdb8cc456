"""CombTables - 按 (数族, 参数) 记忆的整数表，供 CLI 的 table 子命令使用"""

import logging
import threading
from collections.abc import Callable, Iterator
from dataclasses import dataclass, field
from typing import Literal, get_args

from my_rotabaxter.combinatorics import enumeration, numbers
from my_rotabaxter.errors import BadArguments

logger = logging.getLogger(__name__)

Family = Literal[
    "stirling",
    "bell",
    "gen-stirling",
    "gen-bell",
    "cover",
    "cover-distinct-max",
    "c-of-type",
    "c-total",
]

FAMILIES: tuple[str, ...] = get_args(Family)

TableKey = tuple[object, ...]


@dataclass
class Table:
    """一张表：列名（最后一列是数族名）与按参数字典序排列的行"""

    family: str
    columns: tuple[str, ...]
    rows: list[tuple[object, ...]] = field(default_factory=list)


class CombTables:
    """带锁的记忆表

    记忆值总是等于重新计算的值；同一实例可以在多个线程间共享。
    """

    def __init__(self, search_limit: int | None = None) -> None:
        self._memo: dict[tuple[str, TableKey], int] = {}
        self._lock = threading.Lock()
        self.search_limit = search_limit
        self._compute: dict[str, Callable[..., int]] = {
            "stirling": numbers.stirling2,
            "bell": numbers.bell,
            "gen-stirling": numbers.gen_stirling_rec,
            "gen-bell": numbers.gen_bell,
            "cover": lambda n, k, ell: enumeration.cover_count(n, k, ell, self.search_limit),
            "cover-distinct-max": lambda n, k, ell: enumeration.cover_count_distinct_max(
                n, k, ell, self.search_limit
            ),
            "c-of-type": numbers.restricted_type_count,
            "c-total": numbers.multiset_partition_total,
        }

    def value(self, family: str, *args: object) -> int:
        """取单个值（命中记忆表则直接返回）

        Raises:
            BadArguments: 未知数族或参数非法
            SizeLimit: 枚举型数族超过搜索上限
        """
        if family not in self._compute:
            msg = f"Unknown table family {family!r}; choose one of {list(FAMILIES)}"
            raise BadArguments(msg)
        key = (family, args)
        with self._lock:
            if key in self._memo:
                return self._memo[key]
        result = self._compute[family](*args)
        with self._lock:
            self._memo[key] = result
        return result

    def __len__(self) -> int:
        with self._lock:
            return len(self._memo)

    def clear(self) -> None:
        with self._lock:
            logger.debug("clearing %d memoized table entries", len(self._memo))
            self._memo.clear()

    # ========================================================
    # 行生成
    # ========================================================

    def table(
        self,
        family: str,
        nmax: int,
        kmax: int | None = None,
        lmax: int | None = None,
        type_args: tuple[int, int, tuple[int, ...]] | None = None,
    ) -> Table:
        """生成一整张表

        Args:
            family: 数族名
            nmax: n 的上限
            kmax: k 的上限（默认与 n 同步）
            lmax: ℓ 的上限（覆盖数族）
            type_args: c-of-type 的 (n, k, I)

        Returns:
            Table，行按参数字典序排列
        """
        if family == "c-of-type":
            if type_args is None:
                msg = "c-of-type needs --n, --k and --type"
                raise BadArguments(msg)
            n, k, parts = type_args
            label = ",".join(str(p) for p in parts)
            return Table(family, ("n", "k", "type", family), [(n, k, label, self.value(family, n, k, parts))])

        if nmax < 1:
            msg = f"--nmax must be >= 1, got {nmax}"
            raise BadArguments(msg)
        if family in ("bell", "gen-bell"):
            return Table(family, ("n", family), [(n, self.value(family, n)) for n in range(1, nmax + 1)])
        if family in ("stirling", "gen-stirling"):
            rows = [(n, k, self.value(family, n, k)) for n, k in self._nk(nmax, kmax)]
            return Table(family, ("n", "k", family), rows)
        if family == "c-total":
            rows = [(n, k, self.value(family, n, k)) for n in range(1, nmax + 1) for k in range(1, (kmax or nmax) + 1)]
            return Table(family, ("n", "k", family), rows)
        if family in ("cover", "cover-distinct-max"):
            rows = [(n, k, ell, self.value(family, n, k, ell)) for n, k, ell in self._nkl(family, nmax, kmax, lmax)]
            return Table(family, ("n", "k", "l", family), rows)

        msg = f"Unknown table family {family!r}; choose one of {list(FAMILIES)}"
        raise BadArguments(msg)

    @staticmethod
    def _nk(nmax: int, kmax: int | None) -> Iterator[tuple[int, int]]:
        for n in range(1, nmax + 1):
            for k in range(1, min(n, kmax or n) + 1):
                yield n, k

    @staticmethod
    def _nkl(family: str, nmax: int, kmax: int | None, lmax: int | None) -> Iterator[tuple[int, int, int]]:
        """只产出非零范围 ℓ ≤ n ≤ kℓ（B′ 为 k+ℓ-1 ≤ n ≤ kℓ）"""
        for n in range(1, nmax + 1):
            for k in range(1, (kmax or 3) + 1):
                for ell in range(1, (lmax or 3) + 1):
                    low = k + ell - 1 if family == "cover-distinct-max" else ell
                    if low <= n <= k * ell:
                        yield n, k, ell
