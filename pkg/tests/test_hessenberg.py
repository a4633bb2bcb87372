import itertools

import pytest

from hessring.hessenberg import (HessFn, catalan, complex_dim, enumerate_hn,
                                 fixed_points, incomparability_graph,
                                 negative_roots, prec_order, split_at,
                                 split_fixed_points, subset_order)
from hessring.perm import Permutation, enumerate_sn, minimal_hess


def H(text):
    return HessFn.parse(text)


def brute_hn(n):
    """All sequences in [n]^n that are nondecreasing and dominate the identity."""
    return sorted(
        values for values in itertools.product(range(1, n + 1), repeat=n)
        if all(v >= i for i, v in enumerate(values, start=1))
        and all(a <= b for a, b in zip(values, values[1:])))


def brute_fixed_points(h):
    out = []
    for word in itertools.permutations(range(1, h.n + 1)):
        pos = {v: i for i, v in enumerate(word, start=1)}
        pos[0] = 0
        if all(pos[word[j - 1] - 1] <= h(j) for j in range(1, h.n + 1)):
            out.append(Permutation(word))
    return sorted(out)


@pytest.mark.parametrize("bad", ["1,1", "2,1,3", "0,2", "4,4,4", ""])
def test_validation(bad):
    with pytest.raises(ValueError):
        H(bad)


@pytest.mark.parametrize("bad", ["1, 2", "1;2", "a,b", "1,,2"])
def test_wire_format_is_strict(bad):
    with pytest.raises(ValueError):
        H(bad)


def test_wire_round_trip():
    h = H("3,3,4,5,6,6")
    assert str(h) == "3,3,4,5,6,6"
    assert H(str(h)) == h


def test_enumerate_hn_small():
    assert [h.values for h in enumerate_hn(2)] == [(1, 2), (2, 2)]
    assert len(list(enumerate_hn(3))) == 5
    assert len(list(enumerate_hn(4))) == 14


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_hn_matches_brute_force_and_catalan(n):
    got = [h.values for h in enumerate_hn(n)]
    assert got == brute_hn(n)
    assert len(got) == catalan(n) == [1, 2, 5, 14, 42, 132][n - 1]


def test_subset_order():
    assert subset_order(H("1,2,3"), H("3,3,3"))
    assert subset_order(H("2,3,3"), H("3,3,3"))
    assert not subset_order(H("1,3,3"), H("2,2,3"))
    with pytest.raises(ValueError):
        subset_order(H("1,2"), H("3,3,3"))


def test_prec_order():
    assert prec_order(H("2,3,3"), H("3,3,3"))
    assert prec_order(H("2,2,3"), H("1,3,3"))
    assert not prec_order(H("2,3,3"), H("2,3,3"))


@pytest.mark.parametrize("n", range(1, 6))
def test_prec_refines_subset(n):
    hs = list(enumerate_hn(n))
    for a, b in itertools.product(hs, hs):
        if subset_order(a, b) and a != b:
            assert prec_order(a, b)


def test_complex_dim_and_roots():
    h = H("3,3,4,5,6,6")
    assert complex_dim(h) == 6
    assert len(negative_roots(h)) == 6
    assert complex_dim(HessFn.identity(5)) == 0
    assert complex_dim(HessFn.full(5)) == 10
    assert negative_roots(H("1,2,3")) == set()
    assert negative_roots(H("2,2,3")) == {(2, 1)}


@pytest.mark.parametrize("n", range(1, 6))
def test_dim_equals_root_count(n):
    for h in enumerate_hn(n):
        assert complex_dim(h) == len(negative_roots(h))


def test_fixed_points_examples():
    assert fixed_points(HessFn.full(3)) == list(enumerate_sn(3))
    for n in range(1, 5):
        assert fixed_points(HessFn.identity(n)) == [Permutation(tuple(range(1, n + 1)))]
    pet = fixed_points(H("2,3,3"))
    assert [w.one_line for w in pet] == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1)]


@pytest.mark.parametrize("n", range(1, 6))
def test_fixed_points_match_brute_force(n):
    for h in enumerate_hn(n):
        assert fixed_points(h) == brute_fixed_points(h)


@pytest.mark.parametrize("n", range(1, 6))
def test_minimal_hess_is_unique_minimum(n):
    hs = list(enumerate_hn(n))
    for w in enumerate_sn(n):
        containing = [h for h in hs if w in set(fixed_points(h))]
        hw = minimal_hess(w)
        assert hw in containing
        assert all(subset_order(hw, h) for h in containing)


@pytest.mark.parametrize("n", range(2, 6))
def test_corner_lemma(n):
    for w in enumerate_sn(n):
        hw = minimal_hess(w)
        for j in range(1, n):
            if hw(j) >= j + 1:
                assert (hw(j) == w.position_of(w(j) - 1)) == (hw(j - 1) < hw(j))


def test_split_examples():
    assert split_at(H("1,2,3"), 1) == (H("1"), H("1,2"))
    assert split_at(H("2,2,3"), 2) == (H("2,2"), H("1"))
    assert split_at(H("1,3,3"), 1) == (H("1"), H("2,2"))
    with pytest.raises(ValueError):
        split_at(H("2,3,3"), 1)


@pytest.mark.parametrize("n", range(2, 6))
def test_split_fixed_points(n):
    for h in enumerate_hn(n):
        for r in range(1, n):
            if h(r) == r:
                assert split_fixed_points(h, r) == fixed_points(h)


def test_incomparability_graph():
    assert incomparability_graph(HessFn.identity(4)).edges == frozenset()
    full = incomparability_graph(HessFn.full(4))
    assert full.edges == frozenset(itertools.combinations(range(1, 5), 2))
    assert incomparability_graph(H("2,3,3")).edges == {(1, 2), (2, 3)}
    for h in enumerate_hn(5):
        assert len(incomparability_graph(h).edges) == complex_dim(h)
