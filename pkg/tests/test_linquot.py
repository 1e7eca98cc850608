from hypothesis import given, settings

from monomialx.betti import betti_numbers
from monomialx.ideal import MonomialIdeal
from monomialx.linquot import (QuotientCertificate, QuotientFailure, betti_from_certificate, check_order,
                               decomposition_apply, find_order, has_linear_quotients, is_regular, is_stable)
from monomialx.monomial import parse_monomial

from conftest import ideals


def P(strs, n):
    return [parse_monomial(s, n) for s in strs]


def test_lex_order_fails_with_colon():
    n = 3
    I = MonomialIdeal.parse(["x1*x2*x3", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2"], n)
    res = check_order(I, I.gens)
    assert isinstance(res, QuotientFailure)
    assert res.i == 3 and [str(c) for c in res.colon] == ["x1*x3"]


def test_prec_order_sets():
    n = 3
    I = MonomialIdeal.parse(["x1*x2*x3", "x1*x3^2", "x2^3", "x2^2*x3", "x2*x3^2"], n)
    res = check_order(I, P(["x2^3", "x2^2*x3", "x2*x3^2", "x1*x2*x3", "x1*x3^2"], n))
    assert isinstance(res, QuotientCertificate)
    assert [sorted(s) for s in res.sets] == [[], [2], [2], [2, 3], [2]]


def test_regular_decomposition():
    n = 4
    I = MonomialIdeal.parse(["x1*x2", "x2*x3*x4", "x2*x3^2"], n)
    cert = check_order(I, P(["x1*x2", "x2*x3*x4", "x2*x3^2"], n))
    assert is_regular(cert)
    assert str(decomposition_apply(cert, parse_monomial("x1*x2*x3", n))) == "x1*x2"


def test_irregular_decomposition():
    # non-completely segment whose quotient order has a non-regular g
    n = 4
    order = P(["x2^3", "x2^2*x3", "x2^2*x4", "x2*x3^2", "x2*x3*x4", "x2*x4^2", "x1*x4^2", "x1*x3*x4"], n)
    I = MonomialIdeal(n, tuple(sorted(order, key=lambda u: u.exps, reverse=True)))
    cert = check_order(I, order)
    assert isinstance(cert, QuotientCertificate)
    assert cert.set_of(parse_monomial("x1*x4^2", n)) == {2}
    r = is_regular(cert)
    assert not r and str(r.u) == "x1*x4^2" and r.s == 2


def test_stable():
    assert is_stable(MonomialIdeal.parse(["x1^2", "x1*x2^2", "x1*x2*x3", "x2^3"], 3))
    assert not is_stable(MonomialIdeal.parse(["x1*x2", "x2*x3"], 3))


@settings(max_examples=60)
@given(ideals(max_gens=6, equigenerated=True))
def test_find_order_agrees_with_dp(I):
    fr = find_order(I)
    assert fr.status in ("found", "none")
    assert fr.found == has_linear_quotients(I)
    if fr.found:
        assert isinstance(check_order(I, fr.certificate.order), QuotientCertificate)


@settings(max_examples=60)
@given(ideals(max_gens=6, equigenerated=True))
def test_certificate_betti_matches_oracle(I):
    fr = find_order(I)
    if fr.found:
        assert betti_from_certificate(fr.certificate) == betti_numbers(I).table


@settings(max_examples=40)
@given(ideals(max_gens=6))
def test_stable_ideals_have_lex_quotients(I):
    if is_stable(I):
        assert isinstance(check_order(I, I.gens), QuotientCertificate)
