from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from immaculata.compositions import (
    Composition,
    Partition,
    coarsenings,
    composition_of_subset,
    compositions_of,
    descent_set,
    format_subset,
    lex_leq,
    parse_index,
    partitions_of,
    pieri_successors,
    rearrangements,
    refinement_leq,
    refinements,
)

compositions = st.lists(st.integers(1, 3), max_size=4).map(Composition)


def brute_compositions(n):
    """Compositions of n from subsets of {1..n-1}, cut points to parts."""
    out = []
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            points = [0, *cuts, n]
            out.append(tuple(b - a for a, b in zip(points, points[1:])))
    return sorted(out)


def brute_pieri(alpha, s):
    n = sum(alpha) + s
    return [
        beta for beta in brute_compositions(n)
        if len(beta) >= len(alpha)
        and all(a <= b for a, b in zip(alpha, beta))
        and len(beta) <= len(alpha) + 1
    ]


def test_composition_is_a_value():
    c = Composition([2, 3])
    assert c == (2, 3)
    assert hash(c) == hash((2, 3))
    assert c.size == 5 and c.length == 2
    assert str(c) == "2,3"
    assert Composition() == () and Composition().size == 0


@pytest.mark.parametrize("bad", [[0], [2, -1], [1, 0, 1]])
def test_composition_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        Composition(bad)


def test_partition_must_decrease():
    assert Partition([3, 1, 1]) == (3, 1, 1)
    with pytest.raises(ValueError):
        Partition([1, 2])


def test_parse_and_format():
    assert parse_index("2,3") == (2, 3)
    assert parse_index("") == ()
    assert parse_index("[1,0,-2]") == (1, 0, -2)
    assert format_subset({10, 4, 8}) == "{4,8,10}"
    with pytest.raises(ValueError):
        parse_index("1,a")


def test_compositions_of_small():
    assert compositions_of(0) == [()]
    assert compositions_of(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert compositions_of(3) == brute_compositions(3)
    assert len(compositions_of(7)) == 64


@pytest.mark.parametrize("n", range(1, 13))
def test_composition_counts_and_bijection(n):
    comps = compositions_of(n)
    assert len(comps) == 2 ** (n - 1)
    assert comps == sorted(comps)
    assert len(set(comps)) == len(comps)
    for c in comps:
        assert composition_of_subset(descent_set(c), n) == c


def test_descent_set_examples():
    assert descent_set([1, 1, 2, 1, 3, 2, 1, 4, 2]) == {1, 2, 4, 5, 8, 10, 11, 15}
    assert descent_set([7]) == set()
    assert composition_of_subset({4, 8, 10}, 17) == (4, 4, 2, 7)


def test_composition_of_subset_rejects_out_of_range():
    with pytest.raises(ValueError):
        composition_of_subset({0}, 3)
    with pytest.raises(ValueError):
        composition_of_subset({3}, 3)


def test_refinement_examples():
    assert refinement_leq([1, 1, 2, 1, 3, 2, 1, 4, 2], [4, 4, 2, 7])
    assert refinement_leq([2, 1], [2, 1])
    assert not refinement_leq([2, 1], [1, 2])
    with pytest.raises(ValueError):
        refinement_leq([1], [2])


@pytest.mark.parametrize("n", range(1, 8))
def test_refinement_is_partial_order(n):
    comps = compositions_of(n)
    leq = {(a, b): refinement_leq(a, b) for a in comps for b in comps}
    for a in comps:
        assert leq[a, a]
        for b in comps:
            if leq[a, b] and leq[b, a]:
                assert a == b
            if leq[a, b]:
                for c in comps:
                    if leq[b, c]:
                        assert leq[a, c]


@settings(deadline=None)
@given(compositions)
def test_coarsenings_and_refinements_match_order(alpha):
    n = sum(alpha)
    everything = compositions_of(n)
    assert coarsenings(alpha) == [b for b in everything if refinement_leq(alpha, b)]
    assert refinements(alpha) == [b for b in everything if refinement_leq(b, alpha)]


def test_pieri_successors_examples():
    expected = [(2, 3, 3), (2, 4, 2), (2, 5, 1), (2, 6), (3, 3, 2), (3, 4, 1), (3, 5), (4, 3, 1), (4, 4), (5, 3)]
    assert pieri_successors([2, 3], 3) == expected
    assert pieri_successors([], 4) == [(4,)]
    assert pieri_successors([2], 2) == [(2, 2), (3, 1), (4,)]
    assert pieri_successors([2], 2) == brute_pieri((2,), 2)


@pytest.mark.parametrize("size", range(0, 7))
@pytest.mark.parametrize("s", range(1, 5))
def test_pieri_successors_brute_force(size, s):
    for alpha in compositions_of(size):
        got = pieri_successors(alpha, s)
        assert got == brute_pieri(alpha, s)
        for beta in got:
            assert len(beta) in (len(alpha), len(alpha) + 1)


def test_lex_order():
    assert lex_leq([1, 3], [2, 2])
    assert lex_leq([2, 2], [2, 2])
    assert lex_leq([3, 1, 2, 3], [4, 2, 3]) and not lex_leq([4, 2, 3], [3, 1, 2, 3])


def test_partitions_and_rearrangements():
    assert partitions_of(4) == [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    assert [len(partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert rearrangements([2, 1]) == [(1, 2), (2, 1)]
    assert rearrangements([1, 1]) == [(1, 1)]
