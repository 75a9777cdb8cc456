"""命令行入口 - eval / table / egf / verify 子命令

退出码：0 成功（或恒等式成立），1 校验失败，2 用法、解析或求值错误。
"""

import argparse
import asyncio
import logging
import sys
from collections.abc import Sequence
from contextlib import redirect_stderr, redirect_stdout
from typing import TextIO

from my_rotabaxter.cli.evaluator import evaluate
from my_rotabaxter.cli.verify import IDENTITIES, averify_all, verify
from my_rotabaxter.combinatorics import FAMILIES, CombTables
from my_rotabaxter.config import Settings, load_settings, parse_rational
from my_rotabaxter.core import AlgebraContext
from my_rotabaxter.egf import compose, divided_power, egf_from_spec, egf_kfold, egf_product
from my_rotabaxter.errors import BadArguments, RotaBaxterError
from my_rotabaxter.formatting import dumps_report, render_coeffs, render_element, render_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

EGF_OPERATIONS = ("product", "kfold", "divided-power", "compose")
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def _parse_type(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        msg = f"--type must be comma-separated integers, got {text!r}"
        raise BadArguments(msg) from None


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rba",
        description="Exact computations in free commutative Rota-Baxter algebras",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug output to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def session_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--lambda", dest="lam", default=str(settings.default_lambda), help="weight as p/q")
        p.add_argument("--trunc", type=int, default=settings.default_trunc, help="filtration cap N")

    p_eval = sub.add_parser("eval", help="evaluate an expression")
    p_eval.add_argument("expr")
    session_flags(p_eval)
    p_eval.add_argument("--backend", choices=("recursive", "stuffle"), default=settings.default_backend)
    p_eval.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p_table = sub.add_parser("table", help="print a table of a number family")
    p_table.add_argument("family", choices=FAMILIES)
    p_table.add_argument("--nmax", type=int, default=6)
    p_table.add_argument("--kmax", type=int, default=None)
    p_table.add_argument("--lmax", type=int, default=None)
    p_table.add_argument("--n", type=int, default=None, help="c-of-type: n")
    p_table.add_argument("--k", type=int, default=None, help="c-of-type: k")
    p_table.add_argument("--type", dest="type_", default=None, help="c-of-type: i1,i2,...")
    p_table.add_argument("--format", choices=("csv", "json", "text"), default="csv")

    p_egf = sub.add_parser("egf", help="lambda-EGF calculus")
    p_egf.add_argument("operation", choices=EGF_OPERATIONS)
    p_egf.add_argument("--f", action="append", default=None, help="sequence spec (repeat for kfold)")
    p_egf.add_argument("--g", default=None, help="outer sequence spec for product/compose")
    p_egf.add_argument("--k", type=int, default=None, help="divided power index, or kfold copy count")
    session_flags(p_egf)
    p_egf.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p_verify = sub.add_parser("verify", help="check an identity")
    p_verify.add_argument("identity", choices=(*IDENTITIES, "all"))
    p_verify.add_argument("--trunc", type=int, default=settings.default_trunc)

    return parser


def _context(args: argparse.Namespace, backend: str | None = None) -> AlgebraContext:
    return AlgebraContext(
        lam=parse_rational(args.lam),
        trunc=args.trunc,
        backend=backend or "recursive",  # type: ignore[arg-type]
    )


# ============================================================
# 子命令
# ============================================================

def _run_eval(args: argparse.Namespace, out: TextIO) -> int:
    ctx = _context(args, args.backend)
    out.write(render_element(evaluate(args.expr, ctx), args.format) + "\n")
    return EXIT_OK


def _run_table(args: argparse.Namespace, out: TextIO, settings: Settings) -> int:
    tables = CombTables(settings.search_limit)
    type_args = None
    if args.family == "c-of-type":
        if args.n is None or args.k is None or args.type_ is None:
            msg = "c-of-type needs --n, --k and --type"
            raise BadArguments(msg)
        type_args = (args.n, args.k, _parse_type(args.type_))
    table = tables.table(args.family, args.nmax, args.kmax, args.lmax, type_args)
    out.write(render_table(table, args.format) + "\n")
    return EXIT_OK


def _run_egf(args: argparse.Namespace, out: TextIO) -> int:
    ctx = _context(args)
    specs = args.f or []
    if not specs:
        msg = f"egf {args.operation} needs --f"
        raise BadArguments(msg)
    fs = [egf_from_spec(spec, ctx) for spec in specs]

    if args.operation == "product":
        if args.g is None:
            msg = "egf product needs --g"
            raise BadArguments(msg)
        result = egf_product(fs[0], egf_from_spec(args.g, ctx))
    elif args.operation == "kfold":
        if args.k is not None:
            if len(fs) != 1:
                msg = "egf kfold --k repeats a single --f"
                raise BadArguments(msg)
            fs = fs * args.k
        result = egf_kfold(fs)
    elif args.operation == "divided-power":
        if args.k is None:
            msg = "egf divided-power needs --k"
            raise BadArguments(msg)
        result = divided_power(fs[0], args.k)
    else:
        if args.g is None:
            msg = "egf compose needs --g"
            raise BadArguments(msg)
        result = compose(egf_from_spec(args.g, ctx), fs[0])

    out.write(render_coeffs(result.coeffs, args.format) + "\n")
    return EXIT_OK


def _run_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.identity == "all":
        reports = asyncio.run(averify_all(args.trunc))
        out.write(dumps_report(reports) + "\n")
        return EXIT_OK if all(r["equal"] for r in reports) else EXIT_MISMATCH
    report = verify(args.identity, args.trunc)
    out.write(dumps_report(report) + "\n")
    return EXIT_OK if report["equal"] else EXIT_MISMATCH


def _configure_logging(verbose: bool, settings: Settings, err: TextIO) -> None:
    """包日志器只挂一个指向本次 stderr 的 handler，每次调用替换上一次的"""
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level, logging.WARNING)
    package_logger = logging.getLogger("my_rotabaxter")
    for old in list(package_logger.handlers):
        package_logger.removeHandler(old)
    handler = logging.StreamHandler(err)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    package_logger.addHandler(handler)
    package_logger.setLevel(level)
    package_logger.propagate = False


def run_command(
    argv: Sequence[str] | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """运行一条命令，返回退出码

    Args:
        argv: 参数列表（不含程序名），默认取 sys.argv[1:]
        stdout: 命令输出
        stderr: 用法与错误信息

    Returns:
        0 成功，1 校验失败，2 用法/解析/求值错误
    """
    out = stdout or sys.stdout
    err = stderr or sys.stderr

    try:
        settings = load_settings()
    except RotaBaxterError as exc:
        err.write(f"error[{exc.code}]: {exc.message}\n")
        return EXIT_USAGE

    parser = build_parser(settings)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    _configure_logging(args.verbose, settings, err)

    try:
        if args.command == "eval":
            return _run_eval(args, out)
        if args.command == "table":
            return _run_table(args, out, settings)
        if args.command == "egf":
            return _run_egf(args, out)
        return _run_verify(args, out)
    except RotaBaxterError as exc:
        logger.debug("command failed", exc_info=True)
        err.write(f"error[{exc.code}]: {exc.message}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())
