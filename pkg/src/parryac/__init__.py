"""Abelian complexity of binary fixed points of quadratic Parry morphisms.

Closed-form AC(n) in O(log n) exact integer operations for both morphism
families, an independent sliding-window oracle, greedy U-representations,
and generators for the fixed point and its extremal companion words.
"""

from .complexity import (
    ACResult,
    METHOD_CLOSED_FORM,
    METHOD_PREFIX_DIFFERENCE,
    METHOD_STURMIAN,
    ac,
    ac_nonsimple,
    ac_simple,
    ac_via_prefix_counts,
    balance_bound,
    max_ac,
)
from .extremal import (
    choose_k_nonsimple,
    choose_mn_simple,
    v_b_count_simple,
    w_b_count_nonsimple,
    w_b_count_simple,
    w_prefix_nonsimple,
    w_stage_length_nonsimple,
    wv_prefix_simple,
    wv_stage_length_simple,
)
from .numeration import (
    USequence,
    normal_u_rep,
    prefix_b_count,
    prefix_decomposition,
    u_rep_value,
    u_value,
    usequence,
)
from .oracle import (
    ORACLE_N_CAP,
    OracleInstabilityError,
    ParikhInterval,
    oracle_ac,
    parikh_extrema,
    parikh_set,
)
from .words import (
    A,
    B,
    GENERATION_CAP,
    UBETA,
    V,
    W,
    CapExceededError,
    Family,
    Morphism,
    ParikhVector,
    UnsupportedConstructionError,
    WordStream,
    apply,
    fixed_point_prefix,
    incidence_matrix,
    make_morphism,
    mat_mul,
    mat_pow,
    parikh,
    parikh_image,
)

__version__ = "0.1.0"

__all__ = [
    "A", "B", "GENERATION_CAP", "UBETA", "V", "W",
    "ACResult", "CapExceededError", "Family", "Morphism",
    "METHOD_CLOSED_FORM", "METHOD_PREFIX_DIFFERENCE", "METHOD_STURMIAN",
    "ORACLE_N_CAP", "OracleInstabilityError", "ParikhInterval",
    "ParikhVector", "USequence", "UnsupportedConstructionError", "WordStream",
    "ac", "ac_nonsimple", "ac_simple", "ac_via_prefix_counts", "apply",
    "balance_bound", "choose_k_nonsimple", "choose_mn_simple",
    "fixed_point_prefix", "incidence_matrix", "make_morphism",
    "mat_mul", "mat_pow", "max_ac", "normal_u_rep", "oracle_ac",
    "parikh", "parikh_extrema", "parikh_image", "parikh_set",
    "prefix_b_count", "prefix_decomposition", "u_rep_value", "u_value",
    "usequence", "v_b_count_simple", "w_b_count_nonsimple",
    "w_b_count_simple", "w_prefix_nonsimple", "w_stage_length_nonsimple",
    "wv_prefix_simple", "wv_stage_length_simple",
]
