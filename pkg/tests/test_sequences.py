"""Derived sequences: f, j, g (two routes), a (three routes), B, E, Faulhaber."""

from fractions import Fraction

import pytest

from bekernels.exactnum import beta_even
from bekernels.kernels import KernelCache, KernelKind
from bekernels.oracles import bernoulli_even, euler_even
from bekernels.sequences import (
    CoefficientTable,
    Provenance,
    a_from_bernoulli,
    a_from_kb,
    a_recursive,
    bernoulli,
    coefficient_table,
    euler,
    f_of,
    faulhaber_check,
    g_bruteforce,
    g_closed,
    j_of,
    t_product_terms,
)


def test_f_of_values():
    assert f_of(1) == Fraction(1, 24)
    assert f_of(2) == Fraction(1, 320)
    assert f_of(3) == Fraction(1, 2688)
    with pytest.raises(ValueError):
        f_of(0)


def test_j_of_values():
    # All three confirmed by the factorial arithmetic inside g_bruteforce.
    assert j_of(1, 1) == Fraction(-1, 4)
    assert j_of(1, 2) == Fraction(-1, 16)
    assert j_of(2, 1) == Fraction(-5, 6)
    with pytest.raises(ValueError):
        j_of(0, 1)
    with pytest.raises(ValueError):
        j_of(1, 0)


def test_j_always_negative():
    assert all(j_of(a, b) < 0 for a in range(1, 9) for b in range(1, 9))


def test_g_closed_values():
    assert g_closed(1, 1) == Fraction(-1, 4)
    assert g_closed(1, 2) == Fraction(-5, 6)
    assert g_closed(2, 1) == Fraction(7, 48)
    with pytest.raises(ValueError):
        g_closed(0, 1)
    with pytest.raises(ValueError):
        g_closed(1, 0)


def test_g_bruteforce_values():
    assert g_bruteforce(1, 1) == Fraction(-1, 4)
    # j(1,1)*j(2,1) + j(1,2) = 5/24 - 1/16
    assert g_bruteforce(2, 1) == Fraction(7, 48)
    assert g_bruteforce(3, 2) == g_closed(3, 2)


def test_g_routes_agree():
    for n in range(1, 11):
        for m0 in range(1, 6):
            assert g_closed(n, m0) == g_bruteforce(n, m0), (n, m0)


def test_t_product_terms_follow_triple_rules():
    terms = list(t_product_terms(4, 3))
    assert len(terms) == 8
    for term in terms:
        assert sum(term.parts) == 4
        assert term.m0 == 3
        a, product = 3, Fraction(1)
        for b in term.parts:
            product *= j_of(a, b)
            a += b
        assert term.value == product
    # composition order carries over
    assert [t.parts for t in terms][:3] == [(1, 1, 1, 1), (1, 1, 2), (1, 2, 1)]


def test_a_from_kb_values():
    assert a_from_kb(1) == Fraction(1, 24)
    assert a_from_kb(2) == Fraction(-7, 960)
    assert a_from_kb(3) == Fraction(31, 8064)


def test_a_recursive_values():
    assert a_recursive(1) == Fraction(1, 24)
    # f(2) - C(3,2)/(4*3) * a_1
    assert a_recursive(2) == Fraction(1, 320) - Fraction(3, 12) * Fraction(1, 24)
    assert a_recursive(5) == a_from_kb(5)


def test_a_triple_consistency():
    for n in range(1, 26):
        from_kb = a_from_kb(n)
        assert from_kb == a_recursive(n), n
        assert from_kb == a_from_bernoulli(n), n
        assert from_kb == bernoulli_even(n) * (1 - Fraction(1, 2 ** (2 * n - 1))) / (2 * n), n


def test_beta_relation_m0_independent():
    for n in range(1, 11):
        scaled = {-beta_even(n, m0) * g_closed(n, m0) for m0 in range(1, 6)}
        assert scaled == {a_from_kb(n)}, n


def test_coefficient_tables_agree():
    tables = [coefficient_table(12, p) for p in Provenance]
    assert all(t.values == tables[0].values for t in tables)
    assert tables[0].a(1) == Fraction(1, 24)
    with pytest.raises(IndexError):
        tables[0].a(0)
    with pytest.raises(IndexError):
        tables[0].a(13)
    with pytest.raises(ValueError):
        coefficient_table(0, Provenance.FROM_KB)


def test_coefficient_table_is_frozen():
    table = coefficient_table(3, Provenance.FROM_RECURSION)
    assert isinstance(table, CoefficientTable)
    with pytest.raises(AttributeError):
        table.values = ()


def test_bernoulli_values():
    assert bernoulli(1) == Fraction(1, 6)
    assert bernoulli(2) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(-691, 2730)
    with pytest.raises(ValueError):
        bernoulli(0)


def test_bernoulli_matches_oracle():
    cache = KernelCache(KernelKind.BERNOULLI)
    for n in range(1, 31):
        assert bernoulli(n, cache) == bernoulli_even(n), n


def test_euler_values():
    assert euler(1) == -1
    assert euler(2) == 5
    assert euler(4) == 1385
    with pytest.raises(ValueError):
        euler(0)


def test_euler_matches_oracle_and_is_integer():
    cache = KernelCache(KernelKind.EULER)
    for n in range(1, 31):
        value = euler(n, cache)
        assert value.denominator == 1, n
        assert value == euler_even(n), n


def test_faulhaber_examples():
    assert faulhaber_check(5, 1)
    assert faulhaber_check(10, 4)
    assert faulhaber_check(20, 10)
    with pytest.raises(ValueError):
        faulhaber_check(1, 3)
    with pytest.raises(ValueError):
        faulhaber_check(5, 0)


def test_faulhaber_full_grid():
    cache = KernelCache(KernelKind.BERNOULLI)
    assert all(
        faulhaber_check(n, r, cache) for n in range(2, 21) for r in range(1, 13)
    )
