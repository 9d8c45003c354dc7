"""Extremal companion words of the fixed point.

Among all factors of the fixed point of a given length n, the length-n
prefix of w realizes the maximum number of B's and the length-n prefix of
v the minimum.  In the non-simple family v is the fixed point itself and
w = lim w^(N) with w^(0) = B and w^(N) = B phi(w^(N-1)).  In the simple
family with q > 1, w and v are products of blocks (phi^k(A))^(q-1) over
odd and even powers k.  Stage lengths and prefix B-counts have closed
forms in the U sequence; those closed forms are what make the
logarithmic-time complexity formulas possible.
"""

from __future__ import annotations

from .numeration import normal_u_rep, usequence
from .words import (
    B,
    Family,
    Morphism,
    UnsupportedConstructionError,
    V,
    W,
    word_prefix,
)

__all__ = [
    "V",
    "W",
    "w_prefix_nonsimple",
    "w_stage_length_nonsimple",
    "choose_k_nonsimple",
    "w_b_count_nonsimple",
    "wv_prefix_simple",
    "wv_stage_length_simple",
    "choose_mn_simple",
    "v_b_count_simple",
    "w_b_count_simple",
]


def _require_family(m: Morphism, family: Family, operation: str) -> None:
    if m.family is not family:
        raise ValueError(
            f"{operation} requires a {family.value} morphism, got {m.family.value}")


def _check_which(which: str) -> None:
    if which not in (V, W):
        raise ValueError(f"which must be {V!r} or {W!r}, got {which!r}")


# --- non-simple family --------------------------------------------------------

def w_prefix_nonsimple(m: Morphism, length: int) -> str:
    """Length-`length` prefix of the B-richest word w = B phi(B) phi^2(B) ..."""
    _require_family(m, Family.NONSIMPLE, "w_prefix_nonsimple")
    return word_prefix(m, W, length)


def w_stage_length_nonsimple(m: Morphism, stage: int) -> int:
    """|w^(stage)| = 1 + sum_{j=1..stage} |phi^j(B)|."""
    _require_family(m, Family.NONSIMPLE, "w_stage_length_nonsimple")
    if stage < 0:
        raise ValueError(f"stage must be nonnegative, got {stage}")
    useq = usequence(m)
    total = 1           # w^(0) = B
    phi_b_len = 1       # |phi^0(B)|
    for j in range(1, stage + 1):
        # phi^j(B) = (phi^{j-1}(A))^q phi^{j-1}(B)
        phi_b_len += m.q * useq.value(j - 1)
        total += phi_b_len
    return total


def choose_k_nonsimple(m: Morphism, n: int) -> int:
    """Smallest universally safe stage index k with n <= |w^(k)|.

    With N the smallest index satisfying n < U_{N+1}, the minimal valid k
    is N+1 or N+2; k = N+2 always works, so that is what is returned.  A
    test asserts the complexity value is invariant across admissible k.
    """
    _require_family(m, Family.NONSIMPLE, "choose_k_nonsimple")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return usequence(m).index_for(n) + 2


def w_b_count_nonsimple(m: Morphism, n: int, k: int) -> int:
    """Number of B's in the length-n prefix of w, via stage k.

    Requires n <= |w^(k)|.  With (e_k, ..., e_0) the greedy digits of
    U_{k+1} - n, the count is U_k - sum_{j=1..k} e_j U_{j-1}.
    """
    _require_family(m, Family.NONSIMPLE, "w_b_count_nonsimple")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if n > w_stage_length_nonsimple(m, k):
        raise IndexError(
            f"n={n} exceeds |w^({k})|={w_stage_length_nonsimple(m, k)}; pick a larger k")
    useq = usequence(m)
    digits = normal_u_rep(m, useq.value(k + 1) - n, min_places=k + 1)
    # digits = (e_k, ..., e_0); e_j sits at index k - j
    return useq.value(k) - sum(
        digits[k - j] * useq.value(j - 1) for j in range(1, k + 1))


# --- simple family (q > 1) ----------------------------------------------------

def _require_simple_extremal(m: Morphism, operation: str) -> None:
    _require_family(m, Family.SIMPLE, operation)
    if m.q == 1:
        raise UnsupportedConstructionError(
            f"{operation}: the simple family with q = 1 is Sturmian and has "
            "no v/w construction")


def wv_prefix_simple(m: Morphism, which: str, length: int) -> str:
    """Length-`length` prefix of w (which="w") or v (which="v")."""
    _check_which(which)
    _require_simple_extremal(m, "wv_prefix_simple")
    return word_prefix(m, which, length)


def wv_stage_length_simple(m: Morphism, which: str, stage: int) -> int:
    """|v^(stage)| = 1 + (q-1) sum_{j=0..stage} U_{2j}, or
    |w^(stage)| = 1 + (q-1) sum_{j=0..stage-1} U_{2j+1}.

    For v only, stage = -1 is allowed and yields 1 (empty-sum convention
    covering prefixes shorter than |v^(0)| = q).
    """
    _check_which(which)
    _require_simple_extremal(m, "wv_stage_length_simple")
    useq = usequence(m)
    if which == V:
        if stage < -1:
            raise ValueError(f"v stages start at -1, got {stage}")
        return 1 + (m.q - 1) * sum(useq.value(2 * j) for j in range(stage + 1))
    if stage < 0:
        raise ValueError(f"w stages start at 0, got {stage}")
    return 1 + (m.q - 1) * sum(useq.value(2 * j + 1) for j in range(stage))


def choose_mn_simple(m: Morphism, n: int) -> tuple[int, int, int]:
    """Stage indices (M, N, J) for a prefix length n >= 1.

    J satisfies U_J <= n < U_{J+1}.  For even J, N = J/2 and M is J/2 or
    J/2 - 1 depending on whether |v^(J/2)| <= n; for odd J, M = (J-1)/2
    and N is (J+1)/2 or (J-1)/2 depending on whether |w^((J+1)/2)| <= n.
    The result brackets n by stages: |w^(N)| <= n < |w^(N+1)| and
    |v^(M)| <= n < |v^(M+1)|, where |v^(-1)| is taken to be 1.
    """
    _require_simple_extremal(m, "choose_mn_simple")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    j_idx = usequence(m).index_for(n)
    if j_idx % 2 == 0:
        n_stage = j_idx // 2
        m_stage = n_stage if wv_stage_length_simple(m, V, n_stage) <= n else n_stage - 1
    else:
        m_stage = (j_idx - 1) // 2
        n_stage = (m_stage + 1
                   if wv_stage_length_simple(m, W, m_stage + 1) <= n
                   else m_stage)
    assert wv_stage_length_simple(m, W, n_stage) <= n < wv_stage_length_simple(m, W, n_stage + 1)
    assert wv_stage_length_simple(m, V, m_stage) <= n < wv_stage_length_simple(m, V, m_stage + 1)
    return m_stage, n_stage, j_idx


def v_b_count_simple(m: Morphism, n: int, stage: int) -> int:
    """Number of B's in the length-n prefix of v, via its bracketing stage.

    Requires |v^(stage)| <= n < |v^(stage+1)| (stage = -1 allowed).  With
    (d_k, ..., d_0) the greedy digits of n - |v^(stage)|, the count is
    (q-1) sum_{i=0..stage} |phi^{2i}(A)|_B + sum_i d_i |phi^i(A)|_B.
    """
    _require_simple_extremal(m, "v_b_count_simple")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    low = wv_stage_length_simple(m, V, stage)
    high = wv_stage_length_simple(m, V, stage + 1)
    if not low <= n < high:
        raise ValueError(
            f"stage mismatch: need |v^({stage})|={low} <= n < |v^({stage + 1})|={high}, got n={n}")
    useq = usequence(m)
    digits = normal_u_rep(m, n - low)
    top = len(digits) - 1
    fixed = (m.q - 1) * sum(useq.b_of_power(2 * i) for i in range(stage + 1))
    return fixed + sum(d * useq.b_of_power(top - i) for i, d in enumerate(digits))


def w_b_count_simple(m: Morphism, n: int, stage: int) -> int:
    """Number of B's in the length-n prefix of w, via its bracketing stage.

    Requires |w^(stage)| <= n < |w^(stage+1)|.  With (c_l, ..., c_0) the
    greedy digits of n - |w^(stage)|, the count is
    1 + (q-1) sum_{i=0..stage-1} |phi^{2i+1}(A)|_B + sum_i c_i |phi^i(A)|_B.
    """
    _require_simple_extremal(m, "w_b_count_simple")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    low = wv_stage_length_simple(m, W, stage)
    high = wv_stage_length_simple(m, W, stage + 1)
    if not low <= n < high:
        raise ValueError(
            f"stage mismatch: need |w^({stage})|={low} <= n < |w^({stage + 1})|={high}, got n={n}")
    useq = usequence(m)
    digits = normal_u_rep(m, n - low)
    top = len(digits) - 1
    fixed = (m.q - 1) * sum(useq.b_of_power(2 * i + 1) for i in range(stage))
    return 1 + fixed + sum(d * useq.b_of_power(top - i) for i, d in enumerate(digits))
