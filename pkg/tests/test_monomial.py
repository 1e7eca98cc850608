import pytest
from hypothesis import given, strategies as st

from monomialx.errors import DimensionError, InputError
from monomialx.monomial import (Monomial, TermOrder, compare, count_monomials, format_monomial,
                                iter_monomials_desc, monomials_desc, parse_monomial, sort_desc)

from conftest import monomials


def test_parse_and_format():
    u = parse_monomial("x1^2*x3", 4)
    assert u.exps == (2, 0, 1, 0)
    assert format_monomial(u) == "x1^2*x3"
    assert format_monomial(parse_monomial("1", 3)) == "1"
    assert parse_monomial("x2*x2", 3).exps == (0, 2, 0)


@pytest.mark.parametrize("bad", ["", "y1", "x1^", "x1**2", "2*x1"])
def test_parse_rejects(bad):
    with pytest.raises(InputError):
        parse_monomial(bad, 3)


def test_parse_out_of_range():
    with pytest.raises(DimensionError):
        parse_monomial("x5", 4)


def test_arith():
    a, b = parse_monomial("x1^2*x2", 3), parse_monomial("x1*x3", 3)
    assert format_monomial(a * b) == "x1^3*x2*x3"
    assert format_monomial(a.lcm(b)) == "x1^2*x2*x3"
    assert format_monomial(a.gcd(b)) == "x1"
    assert format_monomial(b.colon(a)) == "x3"
    assert a.max == 2 and a.min == 1
    assert not a.is_squarefree() and b.is_squarefree()


def test_lex_order_of_m3():
    mons = [format_monomial(m) for m in monomials_desc(4, 3)]
    assert mons[:4] == ["x1^3", "x1^2*x2", "x1^2*x3", "x1^2*x4"]
    assert mons[-1] == "x4^3"
    assert len(mons) == count_monomials(4, 3) == 20


@given(st.integers(1, 5), st.integers(0, 4))
def test_enumeration_count(n, d):
    assert sum(1 for _ in iter_monomials_desc(n, d)) == count_monomials(n, d)


@given(monomials(n=3), monomials(n=3))
def test_lcm_gcd_product(a, b):
    assert a.lcm(b) * a.gcd(b) == a * b
    assert a.divides(a.lcm(b)) and a.gcd(b).divides(a)


@given(monomials(n=3), monomials(n=3))
def test_compare_antisymmetric(a, b):
    for order in TermOrder:
        if order is TermOrder.PREC and a.degree != b.degree:
            continue
        assert compare(a, b, order) == -compare(b, a, order)


@given(st.lists(monomials(n=3), min_size=1, max_size=6))
def test_sort_desc_sorted(ms):
    out = sort_desc(ms)
    assert all(compare(x, y) >= 0 for x, y in zip(out, out[1:]))


def test_from_support():
    assert Monomial.from_support(4, [1, 3]).exps == (1, 0, 1, 0)
