"""my_rotabaxter - 自由交换 Rota-Baxter 代数的精确计算内核

包含乘积后端、λ-指数生成函数、组合数族及其枚举神谕、截断 q 级数。
"""

from my_rotabaxter.config import Settings, load_settings, parse_rational
from my_rotabaxter.core import (
    AlgebraContext,
    RBAElement,
    derive,
    element_add,
    element_from_terms,
    element_mul,
    element_neg,
    element_pow,
    element_scale,
    element_sub,
    first_difference,
    geometric_inverse,
    is_scalar,
    make_word,
    one,
    one_mul_closed,
    power_list,
    rb_apply,
    truncate,
    word_product_recursive,
    word_product_stuffle,
    x_power_word,
    x_word,
)
from my_rotabaxter.egf import (
    LambdaEGF,
    compose,
    divided_power,
    divided_powers,
    egf_derive,
    egf_from_element,
    egf_from_spec,
    egf_integrate,
    egf_kfold,
    egf_product,
    egf_sum,
    egf_times_one,
    egf_to_element,
)
from my_rotabaxter.errors import (
    BadArguments,
    ContextMismatch,
    EmptyList,
    EvalError,
    NonPositiveDegree,
    NonScalarWord,
    NonzeroConstantTerm,
    NonzeroWeight,
    ParseError,
    RotaBaxterError,
    SizeLimit,
    TruncMismatch,
)
from my_rotabaxter.qseries import (
    QSeries,
    euler_f,
    figurate_identity_check,
    qs_add,
    qs_inverse,
    qs_mul,
    qs_one_minus_term,
    qs_pochhammer,
    qseries_to_rba,
    theta_phi,
    theta_psi,
)

__all__ = [
    # 配置
    "Settings",
    "load_settings",
    "parse_rational",
    # 代数核心
    "AlgebraContext",
    "RBAElement",
    "derive",
    "element_add",
    "element_from_terms",
    "element_mul",
    "element_neg",
    "element_pow",
    "element_scale",
    "element_sub",
    "first_difference",
    "geometric_inverse",
    "is_scalar",
    "make_word",
    "one",
    "one_mul_closed",
    "power_list",
    "rb_apply",
    "truncate",
    "word_product_recursive",
    "word_product_stuffle",
    "x_power_word",
    "x_word",
    # λ-EGF
    "LambdaEGF",
    "compose",
    "divided_power",
    "divided_powers",
    "egf_derive",
    "egf_from_element",
    "egf_from_spec",
    "egf_integrate",
    "egf_kfold",
    "egf_product",
    "egf_sum",
    "egf_times_one",
    "egf_to_element",
    # q 级数
    "QSeries",
    "euler_f",
    "figurate_identity_check",
    "qs_add",
    "qs_inverse",
    "qs_mul",
    "qs_one_minus_term",
    "qs_pochhammer",
    "qseries_to_rba",
    "theta_phi",
    "theta_psi",
    # 错误
    "BadArguments",
    "ContextMismatch",
    "EmptyList",
    "EvalError",
    "NonPositiveDegree",
    "NonScalarWord",
    "NonzeroConstantTerm",
    "NonzeroWeight",
    "ParseError",
    "RotaBaxterError",
    "SizeLimit",
    "TruncMismatch",
]
