"""hypothesis 策略：随机词、元素与表达式 AST"""

from fractions import Fraction

from hypothesis import strategies as st

from my_rotabaxter.cli.parser import D, P, Add, GeomInv, Mul, One, Pow, RationalLit, Sub, Word
from my_rotabaxter.core import AlgebraContext, RBAElement
from my_rotabaxter.egf import LambdaEGF

SAMPLE_LAMBDAS = (Fraction(0), Fraction(1), Fraction(2), Fraction(5, 3))


def rationals(max_abs: int = 3, max_den: int = 3) -> st.SearchStrategy[Fraction]:
    return st.builds(Fraction, st.integers(-max_abs, max_abs), st.integers(1, max_den))


def words(max_length: int = 3, max_exp: int = 2) -> st.SearchStrategy[tuple[int, ...]]:
    return st.lists(st.integers(0, max_exp), min_size=1, max_size=max_length).map(tuple)


def elements(max_terms: int = 3, max_length: int = 3) -> st.SearchStrategy[RBAElement]:
    return st.lists(st.tuples(words(max_length), rationals()), max_size=max_terms).map(
        RBAElement.from_terms
    )


def lambdas() -> st.SearchStrategy[Fraction]:
    return st.sampled_from(SAMPLE_LAMBDAS)


def _leaves() -> st.SearchStrategy:
    return st.one_of(
        st.builds(RationalLit, rationals(max_abs=9, max_den=4)),
        st.builds(One, st.integers(0, 4)),
        st.builds(Word, words(max_length=4, max_exp=3)),
    )


def _extend(children: st.SearchStrategy) -> st.SearchStrategy:
    return st.one_of(
        st.builds(Add, children, children),
        st.builds(Sub, children, children),
        st.builds(Mul, children, children),
        st.builds(Pow, children, st.integers(0, 5)),
        st.builds(P, children),
        st.builds(D, children),
        st.builds(GeomInv, children),
    )


def exprs() -> st.SearchStrategy:
    return st.recursive(_leaves(), _extend, max_leaves=12)


@st.composite
def egf_pairs(draw: st.DrawFn, max_trunc: int = 12) -> tuple[LambdaEGF, LambdaEGF]:
    """同一上下文下的两个随机 λ-EGF，λ ∈ {0, 1, 2}"""
    trunc = draw(st.integers(0, max_trunc))
    ctx = AlgebraContext(lam=draw(st.sampled_from(SAMPLE_LAMBDAS[:3])), trunc=trunc)
    coeffs = st.lists(rationals(), min_size=trunc + 1, max_size=trunc + 1)
    return LambdaEGF.from_sequence(draw(coeffs), ctx), LambdaEGF.from_sequence(draw(coeffs), ctx)
