"""错误定义 - 所有模块共用的异常层级

每个异常都带一个机器可读的错误码（Literal），CLI 根据错误码决定退出码和输出。
"""

from dataclasses import dataclass
from typing import Literal

# 标准错误码
ErrorCode = Literal[
    "non_scalar_word",  # derive 输入含非零指数的词
    "nonzero_weight",  # 需要 λ=0 的操作收到了 λ≠0
    "non_positive_degree",  # 几何逆的输入含 0 次项
    "context_mismatch",  # 两个 EGF 的上下文不同
    "empty_list",  # k 重乘积收到空列表
    "nonzero_constant_term",  # f(0) ≠ 0
    "bad_arguments",  # 参数不合法
    "size_limit",  # 枚举搜索空间超过上限
    "trunc_mismatch",  # 两个 q 级数截断阶不同
    "parse_error",  # 表达式语法错误
    "eval_error",  # 表达式求值错误
]


class RotaBaxterError(ValueError):
    """所有库错误的基类"""

    code: ErrorCode = "bad_arguments"

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class NonScalarWord(RotaBaxterError):
    """derive 只定义在全零指数（标量）子代数上"""

    code: ErrorCode = "non_scalar_word"


class NonzeroWeight(RotaBaxterError):
    """操作要求权重 λ = 0"""

    code: ErrorCode = "nonzero_weight"


class NonPositiveDegree(RotaBaxterError):
    """Neumann 级数要求所有项的过滤次数 ≥ 1"""

    code: ErrorCode = "non_positive_degree"


class ContextMismatch(RotaBaxterError):
    code: ErrorCode = "context_mismatch"


class EmptyList(RotaBaxterError):
    code: ErrorCode = "empty_list"


class NonzeroConstantTerm(RotaBaxterError):
    """f 只定义在正整数上，常数项必须为 0"""

    code: ErrorCode = "nonzero_constant_term"


class BadArguments(RotaBaxterError):
    code: ErrorCode = "bad_arguments"


class SizeLimit(RotaBaxterError):
    """枚举神谕超过搜索上限时直接失败，不做静默截断"""

    code: ErrorCode = "size_limit"


class TruncMismatch(RotaBaxterError):
    code: ErrorCode = "trunc_mismatch"


@dataclass(frozen=True)
class SourceSpan:
    """表达式中的源码位置（1-based 行列，offset 为 0-based 字符偏移）"""

    line: int
    column: int
    offset: int
    length: int = 1


class ParseError(RotaBaxterError):
    """语法错误，带位置与期望的 token 集合"""

    code: ErrorCode = "parse_error"

    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()) -> None:
        self.line = line
        self.column = column
        self.expected = expected
        detail = f"{message} at line {line}, column {column}"
        if expected:
            detail += f" (expected one of: {', '.join(sorted(expected))})"
        super().__init__(detail)


class EvalError(RotaBaxterError):
    """求值错误：包装底层模块错误并附上 AST 节点的位置"""

    code: ErrorCode = "eval_error"

    def __init__(self, cause: RotaBaxterError, span: SourceSpan | None) -> None:
        self.cause = cause
        self.span = span
        where = f" at line {span.line}, column {span.column}" if span else ""
        super().__init__(f"{type(cause).__name__}{where}: {cause.message}")
