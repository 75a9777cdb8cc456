"""Combinatorics package - 组合数族（公式/递推）与独立的枚举神谕"""

from my_rotabaxter.combinatorics.enumeration import (
    compositions_bounded,
    cover_count,
    cover_count_distinct_max,
    divided_power_sum,
    enum_covers,
    enum_generalized_partitions,
    enum_nfold_stuffles,
    enum_ordered_set_partitions,
    enum_restricted_partitions,
    enum_set_partitions,
    eta,
    generalized_partition_sum,
    iter_generalized_partitions,
    kfold_cover_sum,
    pair_cover_sum,
)
from my_rotabaxter.combinatorics.numbers import (
    bell,
    binomial,
    cover_count_by_length,
    cover_count_formula,
    factorial,
    gen_bell,
    gen_stirling_explicit,
    gen_stirling_rec,
    multinomial,
    multiset_partition_total,
    restricted_type_count,
    stirling2,
    surjection_count,
)
from my_rotabaxter.combinatorics.tables import FAMILIES, CombTables, Family, Table

__all__ = [
    # 公式与递推
    "bell",
    "binomial",
    "cover_count_by_length",
    "cover_count_formula",
    "factorial",
    "gen_bell",
    "gen_stirling_explicit",
    "gen_stirling_rec",
    "multinomial",
    "multiset_partition_total",
    "restricted_type_count",
    "stirling2",
    "surjection_count",
    # 枚举神谕
    "compositions_bounded",
    "cover_count",
    "cover_count_distinct_max",
    "divided_power_sum",
    "enum_covers",
    "enum_generalized_partitions",
    "enum_nfold_stuffles",
    "enum_ordered_set_partitions",
    "enum_restricted_partitions",
    "enum_set_partitions",
    "eta",
    "generalized_partition_sum",
    "iter_generalized_partitions",
    "kfold_cover_sum",
    "pair_cover_sum",
    # 表
    "FAMILIES",
    "CombTables",
    "Family",
    "Table",
]
