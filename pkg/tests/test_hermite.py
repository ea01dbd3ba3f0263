import threading
from fractions import Fraction

import pytest

from gencarinena.exactalg import Polynomial
from gencarinena.hermite import (ExpansionTerm, HermiteKind, hermite, instantiate,
                                 polynomial, product_expansion, pseudo_hermite,
                                 pseudo_hermite_at_zero, rodrigues_hermite,
                                 rodrigues_pseudo_hermite, susy_sum_expansion)

P = Polynomial


def test_hermite_examples():
    assert hermite(0) == P([1])
    assert hermite(1) == P([0, 2])
    # Rodrigues by hand: d^3/dx^3 e^{-x^2} = (-8x^3 + 12x) e^{-x^2}
    assert hermite(3) == P([0, -12, 0, 8])


def test_pseudo_hermite_examples():
    assert pseudo_hermite(2) == P([2, 0, 4])
    assert pseudo_hermite(3) == P([0, 12, 0, 8])
    # recurrence: 2x(8x^3+12x) + 6(4x^2+2)
    assert pseudo_hermite(4) == P([12, 0, 48, 0, 16])


def test_kind_dispatch():
    assert polynomial(HermiteKind.STANDARD, 2) == P([-2, 0, 4])
    assert polynomial(HermiteKind.PSEUDO, 2) == P([2, 0, 4])


def test_negative_index():
    with pytest.raises(ValueError):
        hermite(-1)


@pytest.mark.parametrize("k", range(31))
def test_recurrence_matches_rodrigues(k):
    assert hermite(k) == rodrigues_hermite(k)
    assert pseudo_hermite(k) == rodrigues_pseudo_hermite(k)


@pytest.mark.parametrize("p", range(31))
def test_pseudo_is_absolute_value(p):
    hp = pseudo_hermite(p)
    assert hp.coeffs == tuple(abs(c) for c in hermite(p).coeffs)
    assert all(c >= 0 for c in hp.coeffs)
    # parity of p
    assert all(c == 0 for k, c in enumerate(hp.coeffs) if k % 2 != p % 2)


@pytest.mark.parametrize("p", range(16))
def test_pseudo_derivative_identities(p):
    d = pseudo_hermite(p).derivative()
    x2 = P([0, 2])
    assert d == pseudo_hermite(p + 1) - x2 * pseudo_hermite(p)
    if p >= 1:
        assert d == pseudo_hermite(p - 1) * (2 * p)
    else:
        assert d.is_zero()


@pytest.mark.parametrize("m", range(11))
def test_value_at_zero(m):
    assert pseudo_hermite_at_zero(m) == pseudo_hermite(2 * m)(0)


def test_value_at_zero_examples():
    assert pseudo_hermite_at_zero(0) == 1
    assert pseudo_hermite_at_zero(1) == 2
    assert pseudo_hermite_at_zero(2) == 12
    assert pseudo_hermite_at_zero(4) == 1680


@pytest.mark.parametrize("m", range(11))
def test_even_pseudo_hermite_positive(m):
    h = pseudo_hermite(2 * m)
    pts = [Fraction(j, 4) for j in range(-40, 41)]
    vals = [h(x) for x in pts]
    assert all(v > 0 for v in vals)
    assert all(a * b > 0 for a, b in zip(vals, vals[1:]))


def test_product_expansion_examples():
    for k in range(2, 8):
        assert product_expansion(1, k) == [ExpansionTerm(0, Fraction(1), k + 1),
                                           ExpansionTerm(1, Fraction(2 * k), k - 1)]
        assert [(t.coeff, t.hermite_index) for t in product_expansion(2, k)] == [
            (1, k + 2), (4 * (k + 1), k), (4 * k * (k - 1), k - 2)]
    assert product_expansion(0, 5) == [ExpansionTerm(0, Fraction(1), 5)]


def test_susy_sum_examples():
    for k in range(6):
        assert susy_sum_expansion(0, k) == [ExpansionTerm(0, Fraction(1), k + 1)]
    # direct: (4x^2+2)(2x) + 8x = 8x^3 + 12x = H3 + 12 H1
    assert [(t.coeff, t.hermite_index) for t in susy_sum_expansion(2, 0)] == [(1, 3), (12, 1)]
    assert instantiate(susy_sum_expansion(2, 0)) == P([0, 12, 0, 8])
    assert [(t.coeff, t.hermite_index) for t in susy_sum_expansion(2, 2)] == [
        (1, 5), (20, 3), (40, 1)]


@pytest.mark.parametrize("p", range(16))
def test_expansions_exhaustive(p):
    hp = pseudo_hermite(p)
    dhp = hp.derivative()
    for k in range(16):
        hk = rodrigues_hermite(k)
        assert instantiate(product_expansion(p, k)) == hp * hk
        assert instantiate(susy_sum_expansion(p, k)) == hp * rodrigues_hermite(k + 1) + dhp * hk
        assert all(t.coeff != 0 and t.hermite_index >= 0 for t in product_expansion(p, k))


def test_cache_is_thread_consistent():
    from gencarinena.hermite import _RecurrenceCache

    cache = _RecurrenceCache(+1)
    results = {}

    def work(i):
        results[i] = [cache.get(k) for k in range(40, -1, -1)]

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    reference = [rodrigues_pseudo_hermite(k) for k in range(40, -1, -1)]
    assert all(r == reference for r in results.values())
