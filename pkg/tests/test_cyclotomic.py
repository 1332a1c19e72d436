import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subsum import cyclotomic, intpoly

import oracles


def test_phi_small_values():
    assert cyclotomic.phi(1) == (-1, 1)
    assert cyclotomic.phi(2) == (1, 1)
    assert cyclotomic.phi(3) == (1, 1, 1)
    assert cyclotomic.phi(4) == (1, 0, 1)
    assert cyclotomic.phi(6) == (1, -1, 1)
    assert cyclotomic.phi(12) == (1, 0, -1, 0, 1)


def test_phi_product_over_divisors_is_xm_minus_1():
    for m in range(1, 61):
        product = (1,)
        for d in range(1, m + 1):
            if m % d == 0:
                product = intpoly.mul(product, cyclotomic.phi(d))
        assert product == (-1,) + (0,) * (m - 1) + (1,), m


def test_phi_monic_with_totient_degree():
    totients = oracles.totient_sieve(200)
    for m in range(1, 201):
        p = cyclotomic.phi(m)
        assert p[-1] == 1
        assert intpoly.degree(p) == totients[m]


@pytest.mark.parametrize(
    "d,i,expected",
    [(2, 6, True), (2, 2, True), (2, 4, False), (1, 3, True), (3, 3, True), (3, 6, False)],
)
def test_binomial_cyclo_divides_examples(d, i, expected):
    assert cyclotomic.binomial_cyclo_divides(d, i) is expected


def test_binomial_cyclo_divides_matches_remainders():
    for d in range(1, 21):
        for i in range(1, 21):
            says = cyclotomic.binomial_cyclo_divides(d, i)
            rem = intpoly.remainder_mod_monic(intpoly.binomial(i), cyclotomic.phi(2 * d))
            assert says == (rem == ()), (d, i)
            if says:
                # multiplicity exactly one: the quotient is no longer divisible
                q = intpoly.exact_div(intpoly.binomial(i), cyclotomic.phi(2 * d))
                assert intpoly.remainder_mod_monic(q, cyclotomic.phi(2 * d)) != ()


def test_phi_at_one_closed_form():
    assert cyclotomic.phi_at_one(9) == 3
    assert cyclotomic.phi_at_one(6) == 1
    assert cyclotomic.phi_at_one(2) == 2
    assert cyclotomic.phi_at_one(125) == 5
    for m in range(2, 201):
        assert cyclotomic.phi_at_one(m) == intpoly.eval_at_int(cyclotomic.phi(m), 1), m


def test_phi_at_minus_one():
    assert cyclotomic.phi_at_minus_one(6) == 3
    for a in range(1, 4):
        assert cyclotomic.phi_at_minus_one(2 * 3**a) == 3
    for m in range(3, 201):
        assert cyclotomic.phi_at_minus_one(m) == intpoly.eval_at_int(cyclotomic.phi(m), -1)


def test_expand_binomials_examples():
    den4 = cyclotomic.expand_binomials({1: 4, 2: 2, 3: 1, 4: 1})
    assert intpoly.degree(den4) == 15
    assert den4 == oracles.expand_factor_map({1: 4, 2: 2, 3: 1, 4: 1})
    assert cyclotomic.expand_binomials({}) == (1,)
    assert cyclotomic.expand_binomials({2: 1, 1: 2}) == (1, 2, 2, 2, 1)


def test_to_cyclo_exponents_examples():
    assert cyclotomic.to_cyclo_exponents({1: 4, 2: 2, 3: 1, 4: 1}) == {1: 5, 2: 2, 3: 1, 4: 1}
    assert cyclotomic.to_cyclo_exponents({}) == {}
    assert cyclotomic.to_cyclo_exponents({6: 1}) == {2: 1, 6: 1}


factor_maps = st.dictionaries(
    st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=3), max_size=5
)


@given(factor_maps)
@settings(max_examples=80, deadline=None)
def test_cyclo_exponents_reconstruct_expansion(f):
    via_cyclo = cyclotomic.expand_cyclotomics(cyclotomic.to_cyclo_exponents(f))
    assert via_cyclo == cyclotomic.expand_binomials(f)


@given(st.lists(factor_maps, min_size=1, max_size=4))
@settings(max_examples=60, deadline=None)
def test_min_exponents_matches_gcd_oracle(fs):
    structured = cyclotomic.expand_cyclotomics(cyclotomic.min_exponents(fs))
    brute = cyclotomic.gcd_binomial_products_expanded(fs)
    assert structured == brute


def test_min_exponents_examples():
    h_maps_n4 = [
        {1: 4, 2: 2, 3: 1},
        {1: 3, 2: 2, 4: 1},
        {1: 4, 3: 1, 4: 1},
        {1: 2, 2: 1, 3: 1, 4: 1},
        {2: 2, 3: 1, 4: 1},
    ]
    assert cyclotomic.min_exponents(h_maps_n4) == {1: 1}
    assert cyclotomic.min_exponents([{1: 2, 2: 1}]) == cyclotomic.to_cyclo_exponents({1: 2, 2: 1})
    assert cyclotomic.min_exponents([{1: 2}, {2: 1}]) == {}
    with pytest.raises(ValueError):
        cyclotomic.min_exponents([])


def test_sub_exponents():
    assert cyclotomic.sub_exponents({1: 5, 2: 2}, {1: 1}) == {1: 4, 2: 2}
    assert cyclotomic.sub_exponents({1: 1}, {1: 1}) == {}
    with pytest.raises(ArithmeticError):
        cyclotomic.sub_exponents({1: 1}, {1: 2})


def test_cyclo_degree_matches_expansion():
    for c in ({}, {1: 1}, {1: 4, 2: 2, 3: 1, 4: 1}, {2: 3, 6: 1}):
        assert cyclotomic.cyclo_degree(c) == intpoly.degree(cyclotomic.expand_cyclotomics(c))


def test_binomial_power_cache_consistency():
    assert cyclotomic.binomial_power(3, 2) == oracles.naive_pow(oracles.binom_poly(3), 2)
    assert cyclotomic.binomial_power(1, 0) == (1,)
