import pytest
from hypothesis import given, settings, strategies as st

from monomialx.betti import betti_numbers, depth_and_projdim, taylor_betti, upper_koszul_betti
from monomialx.errors import BudgetError
from monomialx.ideal import MonomialIdeal

from conftest import ideals


def test_complete_intersection():
    I = MonomialIdeal.parse(["x1", "x2", "x3"], 3)
    t = betti_numbers(I).table
    assert t.entries == {(0, 1): 3, (1, 2): 3, (2, 3): 1}
    assert depth_and_projdim(I) == (0, 3)


def test_grid_print():
    t = betti_numbers(MonomialIdeal.parse(["x1^2", "x1*x2"], 2)).table
    g = t.grid()
    assert "total:" in g and "2:" in g


def test_budget():
    I = MonomialIdeal.parse([f"x{i}*x{j}" for i in range(1, 7) for j in range(i + 1, 7)], 6)
    with pytest.raises(BudgetError):
        taylor_betti(I, budget=10)


@settings(max_examples=60)
@given(ideals(max_gens=7))
def test_taylor_vs_koszul(I):
    assert taylor_betti(I).table == upper_koszul_betti(I).table


@settings(max_examples=40)
@given(ideals(max_gens=7))
def test_q_vs_large_prime(I):
    assert betti_numbers(I, 0).table == betti_numbers(I, 32003).table


@settings(max_examples=40)
@given(ideals(max_gens=7), st.integers(0, 10**6))
def test_pivot_order_invariance(I, seed):
    assert taylor_betti(I, pivot_seed=seed).table == taylor_betti(I).table


@settings(max_examples=60)
@given(ideals(max_gens=7))
def test_beta0_counts_generators(I):
    t = betti_numbers(I).table
    for d in set(I.degrees()):
        assert t.get(0, d) == I.degrees().count(d)


def test_depth_five_variable_example():
    I = MonomialIdeal.parse(["x1*x2", "x2*x3", "x3*x4", "x1*x4", "x3*x5", "x4*x5"], 5)
    from monomialx.ideal import krull_dim
    assert krull_dim(I) == 2
    assert depth_and_projdim(I)[0] == 2


def test_depth_two_disjoint_edges():
    I = MonomialIdeal.parse(["x1*x3", "x1*x4", "x2*x3", "x2*x4"], 4)
    assert depth_and_projdim(I)[0] == 1


def test_depth_maximal_ideal():
    assert depth_and_projdim(MonomialIdeal.parse(["x1", "x2", "x3", "x4"], 4))[0] == 0


def test_ek_example_table():
    t = betti_numbers(MonomialIdeal.parse(["x1^2", "x1*x2^2", "x1*x2*x3", "x2^3"], 3)).table
    assert t.entries == {(0, 2): 1, (0, 3): 3, (1, 4): 4, (2, 5): 1} and t.projdim == 2
