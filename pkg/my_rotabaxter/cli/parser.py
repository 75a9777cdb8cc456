"""表达式语言的词法分析、AST 与递归下降解析器

语法（忽略空白）：
    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' UINT)?
    atom   := RATIONAL | 'one' '(' UINT ')' | 'w' '(' UINT (',' UINT)* ')'
            | 'P' '(' expr ')' | 'd' '(' expr ')' | 'geominv' '(' expr ')'
            | '(' expr ')'
    RATIONAL := '-'? INT ('/' UINT)?
"""

from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, TypeAlias

from my_rotabaxter.errors import ParseError, SourceSpan

TokenKind = Literal["int", "ident", "op", "eof"]

KEYWORDS = frozenset({"one", "w", "P", "d", "geominv"})
OPERATORS = frozenset("+-*^/(),")
ATOM_START = frozenset({"number", "-", "(", *KEYWORDS})


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    span: SourceSpan


def tokenize(text: str) -> Iterator[Token]:
    """产出 token，最后一个是 eof

    Raises:
        ParseError: 非法字符
    """
    line, column, i = 1, 1, 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line, column, i = line + 1, 1, i + 1
            continue
        if ch.isspace():
            column, i = column + 1, i + 1
            continue
        start = i
        if ch.isdigit():
            while i < len(text) and text[i].isdigit():
                i += 1
            kind: TokenKind = "int"
        elif ch.isalpha() or ch == "_":
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            kind = "ident"
        elif ch in OPERATORS:
            i += 1
            kind = "op"
        else:
            msg = f"Unexpected character {ch!r}"
            raise ParseError(msg, line, column)
        yield Token(kind, text[start:i], SourceSpan(line, column, start, i - start))
        column += i - start
    yield Token("eof", "", SourceSpan(line, column, len(text), 0))


# ============================================================
# AST
# ============================================================

def _span() -> SourceSpan | None:
    return field(default=None, compare=False, repr=False)  # type: ignore[return-value]


@dataclass(frozen=True)
class RationalLit:
    value: Fraction
    span: SourceSpan | None = _span()


@dataclass(frozen=True)
class One:
    k: int
    span: SourceSpan | None = _span()


@dataclass(frozen=True)
class Word:
    exponents: tuple[int, ...]
    span: SourceSpan | None = _span()


@dataclass(frozen=True)
class Add:
    left: "ExprAST"
    right: "ExprAST"
    span: SourceSpan | None = _span()


@dataclass(frozen=True)
class Sub:
    left: "ExprAST"
    right: "ExprAST"
    span: SourceSpan | None = _span()


@dataclass(frozen=True)
class Mul:
    left: "ExprAST"
    right: "ExprAST"
    span: SourceSpan | None = _span()


@dataclass(frozen=True)
class Pow:
    base: "ExprAST"
    exponent: int
    span: SourceSpan | None = _span()


@dataclass(frozen=True)
class P:
    """Rota-Baxter 算子"""

    arg: "ExprAST"
    span: SourceSpan | None = _span()


@dataclass(frozen=True)
class D:
    """导子"""

    arg: "ExprAST"
    span: SourceSpan | None = _span()


@dataclass(frozen=True)
class GeomInv:
    arg: "ExprAST"
    span: SourceSpan | None = _span()


ExprAST: TypeAlias = RationalLit | One | Word | Add | Sub | Mul | Pow | P | D | GeomInv


# ============================================================
# 解析器
# ============================================================

class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = list(tokenize(text))
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _fail(self, message: str, expected: frozenset[str]) -> ParseError:
        tok = self.current
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        return ParseError(f"{message}, found {found}", tok.span.line, tok.span.column, expected)

    def _advance(self) -> Token:
        tok = self.current
        self.pos += 1
        return tok

    def _at(self, text: str) -> bool:
        tok = self.current
        return tok.kind in ("op", "ident") and tok.text == text

    def _expect(self, text: str) -> Token:
        if not self._at(text):
            raise self._fail(f"Expected {text!r}", frozenset({text}))
        return self._advance()

    def _uint(self) -> int:
        if self.current.kind != "int":
            raise self._fail("Expected an unsigned integer", frozenset({"number"}))
        return int(self._advance().text)

    def parse(self) -> ExprAST:
        node = self.expr()
        if self.current.kind != "eof":
            raise self._fail("Unexpected trailing input", frozenset({"+", "-", "*", "^", "end of input"}))
        return node

    def expr(self) -> ExprAST:
        node = self.term()
        while self._at("+") or self._at("-"):
            op = self._advance()
            right = self.term()
            cls = Add if op.text == "+" else Sub
            node = cls(node, right, span=op.span)
        return node

    def term(self) -> ExprAST:
        node = self.factor()
        while self._at("*"):
            op = self._advance()
            node = Mul(node, self.factor(), span=op.span)
        return node

    def factor(self) -> ExprAST:
        node = self.atom()
        if self._at("^"):
            op = self._advance()
            node = Pow(node, self._uint(), span=op.span)
        return node

    def atom(self) -> ExprAST:
        tok = self.current
        if tok.kind == "int" or self._at("-"):
            return self._rational()
        if self._at("("):
            self._advance()
            node = self.expr()
            self._expect(")")
            return node
        if tok.kind == "ident":
            if tok.text not in KEYWORDS:
                raise self._fail("Unknown identifier", ATOM_START)
            self._advance()
            self._expect("(")
            node = self._call(tok)
            self._expect(")")
            return node
        raise self._fail("Expected an expression", ATOM_START)

    def _call(self, name: Token) -> ExprAST:
        if name.text == "one":
            return One(self._uint(), span=name.span)
        if name.text == "w":
            exponents = [self._uint()]
            while self._at(","):
                self._advance()
                exponents.append(self._uint())
            return Word(tuple(exponents), span=name.span)
        arg = self.expr()
        if name.text == "P":
            return P(arg, span=name.span)
        if name.text == "d":
            return D(arg, span=name.span)
        return GeomInv(arg, span=name.span)

    def _rational(self) -> RationalLit:
        start = self.current.span
        sign = 1
        if self._at("-"):
            self._advance()
            sign = -1
        numerator = self._uint()
        denominator = 1
        if self._at("/"):
            self._advance()
            tok = self.current
            denominator = self._uint()
            if denominator == 0:
                msg = "Zero denominator"
                raise ParseError(msg, tok.span.line, tok.span.column)
        return RationalLit(Fraction(sign * numerator, denominator), span=start)


def parse_expr(text: str) -> ExprAST:
    """解析表达式

    Raises:
        ParseError: 带 1-based 行列与期望 token 集合
    """
    return _Parser(text).parse()


# ============================================================
# 规范打印（与 parse_expr 互逆）
# ============================================================

def _rational_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def print_expr(node: ExprAST) -> str:
    """完全加括号的规范形式：复合节点都包一层括号"""
    match node:
        case RationalLit(value=value):
            return _rational_str(value)
        case One(k=k):
            return f"one({k})"
        case Word(exponents=exponents):
            return "w(" + ",".join(str(e) for e in exponents) + ")"
        case Add(left=left, right=right):
            return f"({print_expr(left)} + {print_expr(right)})"
        case Sub(left=left, right=right):
            return f"({print_expr(left)} - {print_expr(right)})"
        case Mul(left=left, right=right):
            return f"({print_expr(left)} * {print_expr(right)})"
        case Pow(base=base, exponent=exponent):
            return f"({print_expr(base)}^{exponent})"
        case P(arg=arg):
            return f"P({print_expr(arg)})"
        case D(arg=arg):
            return f"d({print_expr(arg)})"
        case GeomInv(arg=arg):
            return f"geominv({print_expr(arg)})"
    msg = f"Not an expression node: {node!r}"
    raise TypeError(msg)
