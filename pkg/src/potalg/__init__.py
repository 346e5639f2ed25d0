"""Exact computer algebra for potential algebras on two generators."""

from .errors import (
    AlphabetError,
    ConfigError,
    DomainError,
    EmptyPolynomialError,
    ParseError,
    PotalgError,
    StalenessError,
)
from .field import GF, QQ, ModInt
from .groebner import (
    Certificate,
    DimReport,
    TruncatedGB,
    complete,
    completion_dim_probe,
    graded_dim_oracle,
    normal_form,
    normal_word_census,
    truncated_quotient_dim,
)
from .ncpoly import NcPoly, leading_term, nc_mul
from .parse import parse_expression
from .potential import (
    Hessian,
    Potential,
    abelianize,
    cyclic_symmetrize,
    euler_defects,
    hessian,
    is_cyclic_invariant,
    linear_substitute,
    partial_derivative,
    syzygy_defect,
)
from .series import (
    PowerSeries,
    RationalSeries,
    abs_truncate,
    coefficientwise_geq,
    eval_exact,
    expand,
    gs_series,
    hilbert_from_forbidden,
)
from .words import DEGLEX, MonomialOrder, rotate_word

__version__ = "0.1.0"

__all__ = [
    "AlphabetError", "ConfigError", "DomainError", "EmptyPolynomialError", "ParseError",
    "PotalgError", "StalenessError", "GF", "QQ", "ModInt", "Certificate", "DimReport",
    "TruncatedGB", "complete", "completion_dim_probe", "graded_dim_oracle", "normal_form",
    "normal_word_census", "truncated_quotient_dim", "NcPoly", "leading_term", "nc_mul",
    "parse_expression", "Hessian", "Potential", "abelianize", "cyclic_symmetrize",
    "euler_defects", "hessian", "is_cyclic_invariant", "linear_substitute",
    "partial_derivative", "syzygy_defect", "PowerSeries", "RationalSeries", "abs_truncate",
    "coefficientwise_geq", "eval_exact", "expand", "gs_series", "hilbert_from_forbidden",
    "DEGLEX", "MonomialOrder", "rotate_word",
]
