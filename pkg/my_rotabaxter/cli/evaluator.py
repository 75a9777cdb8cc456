"""表达式求值 - 每个 AST 节点委托给 core 的运算"""

import logging

from my_rotabaxter.cli.parser import (
    D,
    P,
    Add,
    ExprAST,
    GeomInv,
    Mul,
    One,
    Pow,
    RationalLit,
    Sub,
    Word,
    parse_expr,
)
from my_rotabaxter.core import (
    AlgebraContext,
    RBAElement,
    derive,
    element_add,
    element_mul,
    element_pow,
    element_scale,
    element_sub,
    geometric_inverse,
    one,
    rb_apply,
    truncate,
)
from my_rotabaxter.errors import EvalError, RotaBaxterError

logger = logging.getLogger(__name__)


def _apply(node: ExprAST, ctx: AlgebraContext) -> RBAElement:
    match node:
        case RationalLit(value=value):
            return truncate(element_scale(value, RBAElement.unit()), ctx)
        case One(k=k):
            return truncate(RBAElement.word(one(k)), ctx)
        case Word(exponents=exponents):
            return truncate(RBAElement.word(exponents), ctx)
        case Add(left=left, right=right):
            return element_add(eval_expr(left, ctx), eval_expr(right, ctx))
        case Sub(left=left, right=right):
            return element_sub(eval_expr(left, ctx), eval_expr(right, ctx))
        case Mul(left=left, right=right):
            return element_mul(eval_expr(left, ctx), eval_expr(right, ctx), ctx)
        case Pow(base=base, exponent=exponent):
            return element_pow(eval_expr(base, ctx), exponent, ctx)
        case P(arg=arg):
            return rb_apply(eval_expr(arg, ctx), ctx)
        case D(arg=arg):
            return derive(eval_expr(arg, ctx), ctx)
        case GeomInv(arg=arg):
            return geometric_inverse(eval_expr(arg, ctx), ctx)
    msg = f"Not an expression node: {node!r}"
    raise TypeError(msg)


def eval_expr(node: ExprAST, ctx: AlgebraContext) -> RBAElement:
    """在 ctx 下求值

    Raises:
        EvalError: 包装底层模块错误（NonScalarWord、NonzeroWeight 等），附上出错节点的位置
    """
    try:
        return _apply(node, ctx)
    except EvalError:
        raise
    except RotaBaxterError as exc:
        logger.debug("evaluation failed at %s: %s", node.span, exc.message)
        raise EvalError(exc, node.span) from exc


def evaluate(text: str, ctx: AlgebraContext) -> RBAElement:
    """解析并求值"""
    return eval_expr(parse_expr(text), ctx)
