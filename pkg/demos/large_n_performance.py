"""Logarithmic-time evaluation at astronomically large n.

The closed form only manipulates greedy digit strings of n, so its cost
grows with the number of digits, not with n.  This script times AC(n) at
n with 50 and 500 decimal digits, where any enumeration is hopeless, and
cross-checks the one independent route that still works at that scale:
the prefix-difference formula through the extremal-word B-counts.
"""

import time

from parryac import ac, ac_via_prefix_counts, make_morphism

MORPHISMS = [make_morphism(3, 1, "nonsimple"), make_morphism(3, 2, "simple")]

for digits in (10, 50, 200, 500):
    n = 10 ** (digits - 1) + 123456789
    print(f"n with {digits} decimal digits")
    for m in MORPHISMS:
        start = time.perf_counter()
        value = ac(m, n).value
        elapsed = time.perf_counter() - start
        cross = ac_via_prefix_counts(m, n)
        print(f"  {m.family.value:9s} p={m.p} q={m.q}:  AC(n) = {value}  "
              f"({elapsed * 1e3:.2f} ms; prefix-difference route gives {cross})")
        assert value == cross
