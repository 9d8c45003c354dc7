"""The extremal words in action.

For each length n the oracle reports the min and max B-count over all
factors of length n.  The prefixes of v and w realize exactly those
extremes, which is the structural fact the closed forms are built on.
Also demonstrates the balance consequence: AC is uniformly bounded and
max AC - 1 is the optimal balance bound.
"""

from parryac import (
    balance_bound,
    choose_k_nonsimple,
    choose_mn_simple,
    make_morphism,
    max_ac,
    oracle_ac,
    prefix_b_count,
    v_b_count_simple,
    w_b_count_nonsimple,
    w_b_count_simple,
    w_prefix_nonsimple,
    wv_prefix_simple,
)

print("non-simple p=4 q=1: extremal prefixes vs oracle interval")
m = make_morphism(4, 1, "nonsimple")
for n in (1, 5, 13, 39, 200, 1500):
    interval = oracle_ac(m, n)
    v_count = prefix_b_count(m, n)
    w_count = w_b_count_nonsimple(m, n, choose_k_nonsimple(m, n))
    marker = "ok" if (interval.min_b, interval.max_b) == (v_count, w_count) else "MISMATCH"
    print(f"  n={n:5d}  oracle [{interval.min_b}, {interval.max_b}]  "
          f"v prefix {v_count}  w prefix {w_count}  {marker}")
print(f"  w starts: {w_prefix_nonsimple(m, 40)}")

print()
print("simple p=4 q=4: extremal prefixes vs oracle interval")
m = make_morphism(4, 4, "simple")
for n in (1, 5, 13, 152, 200, 1500):
    interval = oracle_ac(m, n)
    m_stage, n_stage, _ = choose_mn_simple(m, n)
    v_count = v_b_count_simple(m, n, m_stage)
    w_count = w_b_count_simple(m, n, n_stage)
    marker = "ok" if (interval.min_b, interval.max_b) == (v_count, w_count) else "MISMATCH"
    print(f"  n={n:5d}  oracle [{interval.min_b}, {interval.max_b}]  "
          f"v prefix {v_count}  w prefix {w_count}  {marker}")
print(f"  v starts: {wv_prefix_simple(m, 'v', 40)}")
print(f"  w starts: {wv_prefix_simple(m, 'w', 40)}")

print()
print("maximum complexity and optimal balance bound across a parameter grid")
print("family     p q   max AC   balance bound")
for family, p_range in (("simple", range(1, 6)), ("nonsimple", range(2, 6))):
    for p in p_range:
        q_values = range(1, p + 1) if family == "simple" else range(1, p)
        for q in q_values:
            m = make_morphism(p, q, family)
            print(f"{family:9s}  {p} {q}   {max_ac(m):6d}   {balance_bound(m):6d}")
