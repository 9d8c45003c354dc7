"""Closed-form complexity: both families, dispatch, bounds, cross-routes."""

from __future__ import annotations

import pytest

from parryac import (
    METHOD_CLOSED_FORM,
    METHOD_STURMIAN,
    UnsupportedConstructionError,
    ac,
    ac_nonsimple,
    ac_simple,
    ac_via_prefix_counts,
    balance_bound,
    choose_k_nonsimple,
    incidence_matrix,
    make_morphism,
    mat_mul,
    mat_pow,
    max_ac,
    oracle_ac,
)
from parryac.words import MATRIX_IDENTITY

from conftest import (
    NONSIMPLE_GRID,
    SIMPLE_GRID,
    STURMIAN_NONSIMPLE,
    STURMIAN_SIMPLE,
)

SIMPLE_EXTREMAL = [m for m in SIMPLE_GRID if m.q > 1]


# --- ac_nonsimple ---------------------------------------------------------------

def test_ac_nonsimple_worked_example(nonsimple31):
    assert ac_nonsimple(nonsimple31, 7) == 3


def test_ac_nonsimple_sturmian_parameters():
    assert ac_nonsimple(make_morphism(2, 1, "nonsimple"), 10) == 2


def test_ac_nonsimple_length_one(nonsimple31):
    assert ac_nonsimple(nonsimple31, 1) == 2


def test_ac_nonsimple_rejects_simple(simple32):
    with pytest.raises(ValueError, match="non-simple"):
        ac_nonsimple(simple32, 5)


def test_ac_nonsimple_rejects_zero(nonsimple31):
    with pytest.raises(ValueError, match="positive"):
        ac_nonsimple(nonsimple31, 0)


@pytest.mark.parametrize("m", NONSIMPLE_GRID)
def test_ac_nonsimple_k_invariance(m):
    # any admissible stage index gives the same value
    for n in range(1, 2001):
        k = choose_k_nonsimple(m, n)
        value = ac_nonsimple(m, n)
        assert ac_nonsimple(m, n, k=k) == value
        assert ac_nonsimple(m, n, k=k + 1) == value


def test_ac_nonsimple_rejects_inadmissible_k(nonsimple31):
    with pytest.raises(ValueError, match="inadmissible"):
        ac_nonsimple(nonsimple31, 10, k=2)   # |w^(2)| = 9 < 10


# --- ac_simple -------------------------------------------------------------------

def test_ac_simple_worked_example(simple32):
    assert ac_simple(simple32, 7) == 2


def test_ac_simple_derived_example(simple32):
    # both AAAAA and BAAAB occur as factors of length 5
    assert ac_simple(simple32, 5) == 3


def test_ac_simple_length_one(simple32):
    assert ac_simple(simple32, 1) == 2


def test_ac_simple_rejects_nonsimple(nonsimple31):
    with pytest.raises(ValueError, match="simple"):
        ac_simple(nonsimple31, 5)


def test_ac_simple_rejects_q_one():
    with pytest.raises(UnsupportedConstructionError):
        ac_simple(make_morphism(4, 1, "simple"), 5)


# --- dispatcher ---------------------------------------------------------------------

def test_ac_dispatch_sturmian_shortcut():
    result = ac(make_morphism(4, 1, "simple"), 10 ** 6)
    assert result.value == 2 and result.method == METHOD_STURMIAN


def test_ac_dispatch_closed_form(nonsimple31, simple32):
    assert ac(nonsimple31, 7) == (7, 3, METHOD_CLOSED_FORM)
    assert ac(simple32, 7) == (7, 2, METHOD_CLOSED_FORM)


def test_ac_rejects_zero(nonsimple31):
    with pytest.raises(ValueError, match="positive"):
        ac(nonsimple31, 0)


# --- prefix-difference route ----------------------------------------------------------

def test_ac_via_prefix_counts_examples(nonsimple31, simple32):
    assert ac_via_prefix_counts(nonsimple31, 7) == 3
    assert ac_via_prefix_counts(simple32, 7) == 2
    assert ac_via_prefix_counts(simple32, 2) == 2


def test_ac_via_prefix_counts_rejects_sturmian_simple():
    with pytest.raises(UnsupportedConstructionError):
        ac_via_prefix_counts(make_morphism(4, 1, "simple"), 5)


@pytest.mark.parametrize("m", SIMPLE_EXTREMAL + NONSIMPLE_GRID)
def test_closed_form_equals_prefix_difference(m):
    for n in range(1, 2001):
        assert ac(m, n).value == ac_via_prefix_counts(m, n)


# --- bounds -----------------------------------------------------------------------------

def test_max_ac_examples(nonsimple31, simple32):
    assert max_ac(nonsimple31) == 3
    assert max_ac(simple32) == 3
    assert max_ac(make_morphism(4, 1, "simple")) == 2


def test_balance_bound_examples(nonsimple31, simple32):
    assert balance_bound(nonsimple31) == 2
    assert balance_bound(make_morphism(2, 1, "nonsimple")) == 1
    assert balance_bound(simple32) == 2


@pytest.mark.parametrize("m", SIMPLE_GRID + NONSIMPLE_GRID + STURMIAN_SIMPLE)
def test_envelope(m):
    top = max_ac(m)
    for n in list(range(1, 1001)) + [10 ** 9, 10 ** 15]:
        value = ac(m, n).value
        assert 2 <= value <= top


# --- Sturmian constancy -------------------------------------------------------------------

@pytest.mark.parametrize("m", STURMIAN_SIMPLE)
def test_sturmian_simple_constant_two(m):
    assert all(ac(m, n).value == 2 for n in range(1, 2001))
    assert ac(m, 10 ** 18).value == 2


@pytest.mark.parametrize("m", STURMIAN_NONSIMPLE)
def test_sturmian_nonsimple_constant_two(m):
    # p = q + 1 goes through the full closed form and must still yield 2
    assert all(ac(m, n).value == 2 for n in range(1, 2001))
    assert ac(m, 10 ** 18).value == 2
    assert max_ac(m) == 2


# --- telescoping matrix identity -------------------------------------------------------------

def _mat_add(x, y):
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def _mat_neg(x):
    return tuple(tuple(-a for a in row) for row in x)


@pytest.mark.parametrize("m", SIMPLE_GRID + NONSIMPLE_GRID)
def test_telescoping_identity(m):
    # sum_{i<N} (M^(2i+1) - M^(2i)) multiplied by (M + I) equals M^(2N) - I
    mtx = incidence_matrix(m)
    for top in range(11):
        total = ((0, 0), (0, 0))
        for i in range(top):
            total = _mat_add(total, mat_pow(mtx, 2 * i + 1))
            total = _mat_add(total, _mat_neg(mat_pow(mtx, 2 * i)))
        left = mat_mul(total, _mat_add(mtx, MATRIX_IDENTITY))
        right = _mat_add(mat_pow(mtx, 2 * top), _mat_neg(MATRIX_IDENTITY))
        assert left == right


# --- oracle agreement (module-level spot grid; the full grid runs in acceptance) -------------

@pytest.mark.parametrize("m", [SIMPLE_EXTREMAL[1], NONSIMPLE_GRID[0], NONSIMPLE_GRID[3]])
def test_closed_form_equals_oracle_spot(m):
    for n in range(1, 501):
        assert ac(m, n).value == oracle_ac(m, n).ac
