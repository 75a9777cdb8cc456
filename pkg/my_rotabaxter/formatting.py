"""输出格式 - 有理数字符串、元素/EGF/表的 JSON、CSV 与文本渲染

所有输出的排序都是确定的（按词或按表参数的字典序），便于做字节级比对。
"""

import csv
import io
import json
from collections.abc import Sequence
from fractions import Fraction
from typing import Literal

from typing_extensions import TypedDict

from my_rotabaxter.combinatorics.tables import Table
from my_rotabaxter.core import RBAElement
from my_rotabaxter.errors import BadArguments

OutputFormat = Literal["json", "csv", "text"]


class TermRecord(TypedDict):
    """元素 JSON 中的一项"""

    word: list[int]
    coeff: str


def fraction_str(value: Fraction | int) -> str:
    """有理数的 p/q 形式，分母为 1 时省略"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _dumps(payload: object) -> str:
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


# ============================================================
# 元素
# ============================================================

def element_records(e: RBAElement) -> list[TermRecord]:
    return [TermRecord(word=list(w), coeff=fraction_str(c)) for w, c in e.terms]


def element_to_json(e: RBAElement) -> str:
    return _dumps(element_records(e))


def element_to_csv(e: RBAElement) -> str:
    """两列 word,coeff；word 用空格分隔的指数"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["word", "coeff"])
    for w, c in e.terms:
        writer.writerow([" ".join(str(x) for x in w), fraction_str(c)])
    return buffer.getvalue().rstrip("\n")


def element_to_text(e: RBAElement) -> str:
    """形如 1*[0,0] + 2*[0,0,0]；零元素输出 0"""
    if not e:
        return "0"
    parts = []
    for w, c in e.terms:
        word = "[" + ",".join(str(x) for x in w) + "]"
        parts.append(f"{fraction_str(c)}*{word}")
    return " + ".join(parts).replace("+ -", "- ")


def render_element(e: RBAElement, fmt: OutputFormat) -> str:
    if fmt == "json":
        return element_to_json(e)
    if fmt == "csv":
        return element_to_csv(e)
    if fmt == "text":
        return element_to_text(e)
    msg = f"Unknown output format {fmt!r}"
    raise BadArguments(msg)


# ============================================================
# 系数序列（EGF / q 级数）
# ============================================================

def render_coeffs(coeffs: Sequence[Fraction], fmt: OutputFormat) -> str:
    if fmt == "json":
        return _dumps([fraction_str(c) for c in coeffs])
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["k", "coeff"])
        writer.writerows([k, fraction_str(c)] for k, c in enumerate(coeffs))
        return buffer.getvalue().rstrip("\n")
    if fmt == "text":
        return " ".join(fraction_str(c) for c in coeffs)
    msg = f"Unknown output format {fmt!r}"
    raise BadArguments(msg)


# ============================================================
# 表
# ============================================================

def table_to_csv(table: Table) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    writer.writerows(table.rows)
    return buffer.getvalue().rstrip("\n")


def table_to_json(table: Table) -> str:
    return _dumps([dict(zip(table.columns, row, strict=True)) for row in table.rows])


def render_table(table: Table, fmt: OutputFormat) -> str:
    if fmt == "csv":
        return table_to_csv(table)
    if fmt == "json":
        return table_to_json(table)
    if fmt == "text":
        widths = [
            max(len(str(x)) for x in (col, *(row[i] for row in table.rows)))
            for i, col in enumerate(table.columns)
        ]
        lines = ["  ".join(str(c).rjust(w) for c, w in zip(table.columns, widths, strict=True))]
        lines += ["  ".join(str(x).rjust(w) for x, w in zip(row, widths, strict=True)) for row in table.rows]
        return "\n".join(lines)
    msg = f"Unknown output format {fmt!r}"
    raise BadArguments(msg)


def dumps_report(payload: object) -> str:
    """verify 报告（单个对象或数组）"""
    return _dumps(payload)
