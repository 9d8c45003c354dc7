"""The length sequence U_k = |phi^k(A)| and its greedy numeration system.

U_0 = 1 and each next value comes from one more right-multiplication of the
row vector (1, 0) by the incidence matrix, so U is strictly increasing and
serves as the base of a positional numeration: every n >= 0 has a greedy
digit string (d_N, ..., d_1, d_0), most significant digit first, with
n = sum d_j U_j and every digit at most p.  Digit strings drive the prefix
structure of the fixed point: the length-n prefix is the product
(phi^N(A))^{d_N} ... (phi(A))^{d_1} A^{d_0}.

n = 0 is accepted throughout this module (it shows up as a difference of
lengths in the complexity formulas) even though the complexity itself is
defined only for n >= 1.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from typing import Sequence

from .words import Family, Morphism


class USequence:
    """Cached row vectors (1, 0) * M^k for one morphism.

    value(k) is U_k = |phi^k(A)| and b_of_power(k) is |phi^k(A)|_B.  The
    cache only grows; any already-cached index may be read concurrently,
    while extension is serialized by a lock (single-writer contract).
    """

    def __init__(self, morphism: Morphism):
        self.morphism = morphism
        self._rows: list[tuple[int, int]] = [(1, 0)]
        self._lock = threading.Lock()

    def _extend_to(self, k: int) -> None:
        with self._lock:
            rows = self._rows
            p, q = self.morphism.p, self.morphism.q
            nonsimple = self.morphism.family is Family.NONSIMPLE
            while len(rows) <= k:
                a, b = rows[-1]
                rows.append((a * p + b * q, (a + b) if nonsimple else a))

    def row(self, k: int) -> tuple[int, int]:
        if k < 0:
            raise ValueError(f"index must be nonnegative, got {k}")
        if k >= len(self._rows):
            self._extend_to(k)
        return self._rows[k]

    def value(self, k: int) -> int:
        a, b = self.row(k)
        return a + b

    def b_of_power(self, k: int) -> int:
        """|phi^k(A)|_B, the second entry of the cached row vector."""
        return self.row(k)[1]

    def index_for(self, n: int) -> int:
        """Smallest N >= 0 with n < U_{N+1}."""
        if n < 0:
            raise ValueError(f"n must be nonnegative, got {n}")
        k = 0
        while self.value(k + 1) <= n:
            k += 1
        return k


@lru_cache(maxsize=None)
def usequence(morphism: Morphism) -> USequence:
    return USequence(morphism)


def u_value(m: Morphism, k: int) -> int:
    """U_k = |phi^k(A)|, memoized per morphism."""
    return usequence(m).value(k)


def normal_u_rep(m: Morphism, n: int, min_places: int | None = None) -> tuple[int, ...]:
    """Greedy digit string of n in the U system, most significant first.

    The number of places is the smallest that covers n (so the leading
    digit of a positive n is nonzero), left-padded with zeros to
    min_places when that is larger.  Padding never changes the value:
    sum(d_j * U_j) == n either way.  n = 0 yields (0,).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if min_places is not None and min_places < 1:
        raise ValueError(f"min_places must be positive, got {min_places}")
    useq = usequence(m)
    top = useq.index_for(n)
    if min_places is not None:
        top = max(top, min_places - 1)
    digits = []
    rest = n
    for j in range(top, -1, -1):
        d, rest = divmod(rest, useq.value(j))
        digits.append(d)
    return tuple(digits)


def u_rep_value(m: Morphism, digits: Sequence[int]) -> int:
    """sum d_j U_j for a most-significant-first digit string.

    Inverse of normal_u_rep on greedy strings, but accepts any digit
    string, normal or not.
    """
    useq = usequence(m)
    top = len(digits) - 1
    return sum(d * useq.value(top - i) for i, d in enumerate(digits))


def prefix_decomposition(m: Morphism, n: int) -> tuple[tuple[int, int], ...]:
    """Decompose the length-n prefix of the fixed point into morphism powers.

    Returns pairs (power, exponent), highest power first, such that
    (phi^N(A))^{d_N} (phi^{N-1}(A))^{d_{N-1}} ... A^{d_0} equals the
    prefix.  Zero exponents are retained; n = 0 gives the empty tuple.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        return ()
    digits = normal_u_rep(m, n)
    top = len(digits) - 1
    return tuple((top - i, d) for i, d in enumerate(digits))


def prefix_b_count(m: Morphism, n: int) -> int:
    """Number of B's in the length-n prefix of the fixed point.

    Evaluated as sum d_i * |phi^i(A)|_B over the greedy digits of n.  In
    the non-simple family |phi^i(A)|_B = U_{i-1} for i >= 1, so the sum
    collapses to sum_{j>=1} d_j U_{j-1}; the tests check both forms agree.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    useq = usequence(m)
    digits = normal_u_rep(m, n)
    top = len(digits) - 1
    return sum(d * useq.b_of_power(top - i) for i, d in enumerate(digits))
