"""Walk through the two flagship parameter pairs, one per family.

Shows every intermediate quantity behind a single AC(n) evaluation: the
length sequence U, the greedy digit strings, stage indices, and the
extremal-word prefixes whose B-counts the closed form reproduces.
"""

from parryac import (
    ac,
    ac_via_prefix_counts,
    choose_k_nonsimple,
    choose_mn_simple,
    fixed_point_prefix,
    make_morphism,
    normal_u_rep,
    oracle_ac,
    prefix_b_count,
    u_value,
    w_b_count_nonsimple,
    w_prefix_nonsimple,
    wv_prefix_simple,
)

N = 7

print("=" * 72)
print("Non-simple family, p=3 q=1:  A -> AAAB, B -> AB")
print("=" * 72)
m = make_morphism(3, 1, "nonsimple")
print("U sequence:       ", [u_value(m, k) for k in range(6)])
k = choose_k_nonsimple(m, N)
print(f"stage choice k:    {k}")
print(f"digits of {N}:      ", normal_u_rep(m, N, min_places=k + 1))
print(f"digits of U_{k+1}-{N}:", normal_u_rep(m, u_value(m, k + 1) - N, min_places=k + 1))
print(f"fixed point[:48]:  {fixed_point_prefix(m, 48)}")
print(f"B-poorest prefix:  {fixed_point_prefix(m, N)}  "
      f"({prefix_b_count(m, N)} B's; for this family it is the fixed point itself)")
print(f"B-richest prefix:  {w_prefix_nonsimple(m, N)}  "
      f"({w_b_count_nonsimple(m, N, k)} B's)")
print(f"AC({N}) closed form       = {ac(m, N).value}")
print(f"AC({N}) prefix difference = {ac_via_prefix_counts(m, N)}")
print(f"AC({N}) oracle            = {oracle_ac(m, N).ac}")

print()
print("=" * 72)
print("Simple family, p=3 q=2:  A -> AAAB, B -> AA")
print("=" * 72)
m = make_morphism(3, 2, "simple")
print("U sequence:       ", [u_value(m, k) for k in range(6)])
m_stage, n_stage, j_idx = choose_mn_simple(m, N)
print(f"stage choice:      M={m_stage} N={n_stage} J={j_idx}")
print(f"B-poorest prefix:  {wv_prefix_simple(m, 'v', N)}")
print(f"B-richest prefix:  {wv_prefix_simple(m, 'w', N)}")
print(f"AC({N}) closed form       = {ac(m, N).value}")
print(f"AC({N}) prefix difference = {ac_via_prefix_counts(m, N)}")
print(f"AC({N}) oracle            = {oracle_ac(m, N).ac}")
