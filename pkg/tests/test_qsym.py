from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from immaculata import nsym, sym
from immaculata.compositions import compositions_of, partitions_of, rearrangements, refinement_leq
from immaculata.qsym import (
    F,
    M,
    QSymElement,
    Sstar,
    change_basis,
    dual_immaculate_to_fundamental,
    dual_immaculate_to_monomial,
    embed_symmetric,
    fundamental_to_monomial,
    monomial_symmetric_embed,
    monomial_to_dual_immaculate,
    monomial_to_fundamental,
    pairing,
    quasi_shuffle,
    schur_permutations,
    schur_to_dual_immaculate,
)
from immaculata.tableaux import kostka_immaculate

small = st.lists(st.integers(1, 3), max_size=3)


# polynomial oracle: evaluate M_alpha in k commuting variables

def poly_m(alpha, k):
    out = Counter()
    for places in combinations(range(k), len(alpha)):
        exps = [0] * k
        for i, a in zip(places, alpha):
            exps[i] = a
        out[tuple(exps)] += 1
    return out


def poly_mul(p, q):
    out = Counter()
    for a, x in p.items():
        for b, y in q.items():
            out[tuple(i + j for i, j in zip(a, b))] += x * y
    return out


def poly_of(g, k):
    g = change_basis(g, "M")
    out = Counter()
    for alpha, c in g.items():
        for mono, x in poly_m(alpha, k).items():
            out[mono] += c * x
    return {m: v for m, v in out.items() if v}


def test_quasi_shuffle_examples():
    assert quasi_shuffle([1], [1]) == 2 * M(1, 1) + M(2)
    assert quasi_shuffle([1], [2]) == M(1, 2) + M(2, 1) + M(3)
    assert quasi_shuffle([], [2, 1]) == M(2, 1)
    assert M(1) * M(1) == quasi_shuffle([1], [1])


@settings(deadline=None, max_examples=60)
@given(small, small)
def test_quasi_shuffle_matches_polynomials(a, b):
    k = len(a) + len(b)
    assert poly_of(quasi_shuffle(a, b), k) == poly_of_product(a, b, k)


def poly_of_product(a, b, k):
    prod = poly_mul(poly_m(a, k), poly_m(b, k))
    return {m: v for m, v in prod.items() if v}


@settings(deadline=None, max_examples=40)
@given(small, small, small)
def test_quasi_shuffle_associative(a, b, c):
    assert (M(*a) * M(*b)) * M(*c) == M(*a) * (M(*b) * M(*c))
    assert M(*a) * M(*b) == M(*b) * M(*a)
    assert M() * M(*a) == M(*a)


def test_fundamental_examples():
    assert fundamental_to_monomial([2, 1]) == M(2, 1) + M(1, 1, 1)
    assert fundamental_to_monomial([3]) == M(3) + M(1, 2) + M(2, 1) + M(1, 1, 1)
    assert monomial_to_fundamental([1, 2]) == F(1, 2) - F(1, 1, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_fundamental_monomial_inverse(n):
    for alpha in compositions_of(n):
        assert change_basis(fundamental_to_monomial(alpha), "F") == F(*alpha)
        assert change_basis(monomial_to_fundamental(alpha), "M") == M(*alpha)
        expected = QSymElement("M", {b: 1 for b in compositions_of(n) if refinement_leq(b, alpha)})
        assert fundamental_to_monomial(alpha) == expected


def test_dual_immaculate_examples():
    assert dual_immaculate_to_monomial([1, 2]) == M(1, 1, 1) + M(1, 2)
    assert dual_immaculate_to_fundamental([2, 2]) == F(1, 2, 1) + F(1, 3) + F(2, 2)
    assert dual_immaculate_to_monomial([4, 2, 3])[(3, 1, 2, 3)] == 5
    assert dual_immaculate_to_monomial([]) == M()


@pytest.mark.parametrize("n", range(1, 7))
def test_dual_immaculate_coefficients_are_kostka(n):
    comps = compositions_of(n)
    for alpha in comps:
        g = dual_immaculate_to_monomial(alpha)
        for beta in comps:
            assert g[beta] == kostka_immaculate(alpha, beta)
        assert change_basis(dual_immaculate_to_fundamental(alpha), "M") == g
        assert monomial_to_dual_immaculate(g) == Sstar(*alpha)


@pytest.mark.parametrize("n", range(1, 7))
def test_pairing_is_dual(n):
    comps = compositions_of(n)
    for alpha in comps:
        for beta in comps:
            expected = 1 if alpha == beta else 0
            assert pairing(nsym.S(*alpha), Sstar(*beta)) == expected
    for alpha in comps:
        assert pairing(nsym.H(*alpha), M(*alpha)) == 1
        assert pairing(nsym.R(*alpha), F(*alpha), route="RF") == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_pairing_routes_agree(n):
    comps = compositions_of(n)
    for a in comps:
        f = nsym.S(*a) - 2 * nsym.change_basis(nsym.R(*a), "S")
        for b in comps:
            g = change_basis(F(*b), "Sstar") + Sstar(*a)
            assert pairing(f, g, route="HM") == pairing(f, g, route="RF")
            assert pairing(nsym.R(*a), M(*b), route="HM") == pairing(nsym.R(*a), M(*b), route="RF")


def test_pairing_rejects_bad_route():
    with pytest.raises(ValueError):
        pairing(nsym.H(1), M(1), route="XY")


def test_schur_decomposition_example():
    assert sorted(schur_permutations([2, 2, 2, 1])) == [(1, 2, 3, 4), (1, 3, 2, 4), (2, 1, 3, 4), (2, 3, 1, 4)]
    expected = Sstar(2, 2, 2, 1) - Sstar(1, 3, 2, 1) - Sstar(2, 1, 3, 1) + Sstar(1, 1, 4, 1)
    assert schur_to_dual_immaculate([2, 2, 2, 1]) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_decomposition_is_symmetric_schur(n):
    for lam in partitions_of(n):
        signed = change_basis(schur_to_dual_immaculate(lam), "M")
        assert signed == embed_symmetric(sym.schur_to_h(lam))
        assert signed == change_basis(embed_symmetric(sym.SymElement("s", {lam: 1})), "M")


def is_symmetric(g):
    g = change_basis(g, "M")
    return all(g[alpha] == c for beta, c in g.items() for alpha in rearrangements(beta))


@pytest.mark.parametrize("n", range(1, 6))
def test_embedded_symmetric_functions_are_symmetric(n):
    for lam in partitions_of(n):
        assert is_symmetric(monomial_symmetric_embed(lam))
        assert is_symmetric(embed_symmetric(sym.h(*lam)))
    if n > 2:
        assert not is_symmetric(M(1, n - 1))


def test_monomial_symmetric_embed_example():
    assert monomial_symmetric_embed([2, 1]) == M(1, 2) + M(2, 1)
    assert monomial_symmetric_embed([2, 1, 1]) == M(1, 1, 2) + M(1, 2, 1) + M(2, 1, 1)
    assert embed_symmetric(sym.h(2)) == M(2) + M(1, 1)


def test_monomial_to_dual_immaculate_example():
    g = M(1, 1, 1) + M(1, 2)
    assert monomial_to_dual_immaculate(g) == Sstar(1, 2)
    assert change_basis(M(1, 1), "Sstar") == Sstar(1, 1)
    assert change_basis(M(2), "Sstar") == Sstar(2) - Sstar(1, 1)


def test_change_basis_errors():
    with pytest.raises(ValueError):
        change_basis(M(1), "H")
    with pytest.raises(ValueError):
        F(1) * F(1)
