"""CLI package - 表达式语言、表生成与恒等式校验的命令行前端"""

from my_rotabaxter.cli.evaluator import eval_expr, evaluate
from my_rotabaxter.cli.main import build_parser, run_command
from my_rotabaxter.cli.parser import ExprAST, parse_expr, print_expr, tokenize
from my_rotabaxter.cli.verify import IDENTITIES, VerifyReport, averify, averify_all

# cli.main 与 cli.verify 指子模块，不在包级别重新导出同名函数

__all__ = [
    # 表达式
    "ExprAST",
    "eval_expr",
    "evaluate",
    "parse_expr",
    "print_expr",
    "tokenize",
    # 校验
    "IDENTITIES",
    "VerifyReport",
    "averify",
    "averify_all",
    # 入口
    "build_parser",
    "run_command",
]
