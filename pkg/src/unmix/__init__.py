"""Exact unmixed decomposition of polynomial varieties over the rationals."""

from .charset import CharBranch, CharsetOutcome, basic_set, charser_a, wu_charset
from .decomp import (
    Component,
    is_perfect,
    prune_redundant,
    sat_classic,
    sat_improved,
    saturate_by,
    unm_var_dec,
    verify_decomposition,
)
from .elimination import (
    PremResult,
    prem_chain,
    prem_step,
    resultant,
    resultant_chain,
    sylvester_matrix,
)
from .groebner import (
    GroebnerBasis,
    Limits,
    ResourceLimitError,
    TermOrder,
    buchberger,
    eliminate,
    ideal_equal,
    ideal_member,
    normal_form,
    radical_member,
)
from .parser_io import (
    ParseError,
    SystemFile,
    emit_result,
    parse_polynomial,
    parse_system,
    render_polynomial,
    render_system,
)
from .polyring import (
    LeadingData,
    PolyError,
    Polynomial,
    VarOrder,
    coeffs_in,
    evaluate,
    exact_div,
    initial,
    leading_data,
    normalize,
    poly_class,
    rebase,
)
from .triset import (
    TriangularSet,
    TrisetReport,
    classify_triset,
    coefficient_sets,
    products,
    resultant_sets,
    u_set,
)

__version__ = "0.1.0"

__all__ = [
    "CharBranch",
    "CharsetOutcome",
    "Component",
    "GroebnerBasis",
    "LeadingData",
    "Limits",
    "ParseError",
    "PolyError",
    "Polynomial",
    "PremResult",
    "ResourceLimitError",
    "SystemFile",
    "TermOrder",
    "TriangularSet",
    "TrisetReport",
    "VarOrder",
    "basic_set",
    "buchberger",
    "charser_a",
    "classify_triset",
    "coefficient_sets",
    "coeffs_in",
    "eliminate",
    "emit_result",
    "evaluate",
    "exact_div",
    "ideal_equal",
    "ideal_member",
    "initial",
    "is_perfect",
    "leading_data",
    "normal_form",
    "normalize",
    "parse_polynomial",
    "parse_system",
    "poly_class",
    "prem_chain",
    "prem_step",
    "products",
    "prune_redundant",
    "radical_member",
    "render_polynomial",
    "render_system",
    "resultant",
    "resultant_chain",
    "resultant_sets",
    "sat_classic",
    "sat_improved",
    "saturate_by",
    "sylvester_matrix",
    "u_set",
    "unm_var_dec",
    "verify_decomposition",
    "wu_charset",
]
