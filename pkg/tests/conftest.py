"""Shared reference implementations and morphism grids.

The ref_* helpers are deliberately naive (dict-based substitution, full
re-expansion, letter-by-letter counting) and share no code path with the
package, so they can serve as independent oracles in the tests.
"""

from __future__ import annotations

import pytest

from parryac import Family, Morphism, make_morphism


def ref_images(m: Morphism) -> dict[str, str]:
    return {
        "A": "A" * m.p + "B",
        "B": "A" * m.q + ("B" if m.family is Family.NONSIMPLE else ""),
    }


def ref_apply(m: Morphism, word: str) -> str:
    img = ref_images(m)
    return "".join(img[c] for c in word)


def ref_fixed_point(m: Morphism, length: int) -> str:
    s = "A"
    while len(s) < length:
        s = ref_apply(m, s)
    return s[:length]


def ref_power_of_a(m: Morphism, k: int) -> str:
    s = "A"
    for _ in range(k):
        s = ref_apply(m, s)
    return s


def ref_w_nonsimple(m: Morphism, length: int) -> str:
    w = "B"
    while len(w) < length:
        w = "B" + ref_apply(m, w)
    return w[:length]


def ref_w_stage_nonsimple(m: Morphism, stage: int) -> str:
    w = "B"
    for _ in range(stage):
        w = "B" + ref_apply(m, w)
    return w


def ref_wv_simple(m: Morphism, which: str, length: int) -> str:
    assert m.family is Family.SIMPLE and m.q > 1
    if which == "w":
        out, k = "B", 1
    else:
        out, k = "A" * m.q, 2
    while len(out) < length:
        out += ref_power_of_a(m, k) * (m.q - 1)
        k += 2
    return out[:length]


def ref_wv_stage_simple(m: Morphism, which: str, stage: int) -> str:
    assert m.family is Family.SIMPLE and m.q > 1
    if which == "w":
        return "B" + "".join(ref_power_of_a(m, 2 * j + 1) * (m.q - 1)
                             for j in range(stage))
    return "A" * m.q + "".join(ref_power_of_a(m, 2 * j) * (m.q - 1)
                               for j in range(1, stage + 1))


def ref_window_interval(text: str, n: int) -> tuple[int, int]:
    """(min, max) B-count over all length-n windows, incremental scan."""
    count = text[:n].count("B")
    low = high = count
    for i in range(n, len(text)):
        count += (text[i] == "B") - (text[i - n] == "B")
        low = min(low, count)
        high = max(high, count)
    return low, high


def ref_window_counts(text: str, n: int) -> set[int]:
    counts = set()
    count = text[:n].count("B")
    counts.add(count)
    for i in range(n, len(text)):
        count += (text[i] == "B") - (text[i - n] == "B")
        counts.add(count)
    return counts


SIMPLE_GRID = [make_morphism(p, q, "simple")
               for p in range(2, 6) for q in range(2, p + 1)]
NONSIMPLE_GRID = [make_morphism(p, q, "nonsimple")
                  for p in range(2, 6) for q in range(1, p)]
STURMIAN_SIMPLE = [make_morphism(p, 1, "simple") for p in range(1, 6)]
STURMIAN_NONSIMPLE = [make_morphism(q + 1, q, "nonsimple") for q in range(1, 5)]
FULL_GRID = SIMPLE_GRID + NONSIMPLE_GRID


@pytest.fixture(scope="session")
def nonsimple31() -> Morphism:
    return make_morphism(3, 1, "nonsimple")


@pytest.fixture(scope="session")
def simple32() -> Morphism:
    return make_morphism(3, 2, "simple")
