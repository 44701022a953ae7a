import random
from math import comb

import pytest

from dompoly.errors import SizeGuardError
from dompoly.graphs import Graph, complete, cycle, disjoint_union, path, wheel
from dompoly.oracle import domination_number, domination_polynomial, domination_profile
from dompoly.polynomials import IntPolynomial


def test_profile_examples():
    assert domination_profile(cycle(3)) == (3, 3, 1)
    assert domination_profile(complete(2)) == (2, 1)
    assert domination_profile(cycle(4)) == (0, 6, 4, 1)
    assert domination_profile(cycle(5)) == (0, 5, 10, 5, 1)
    assert domination_profile(cycle(6)) == (0, 3, 14, 15, 6, 1)


def test_polynomial_examples():
    assert domination_polynomial(complete(1)) == IntPolynomial((0, 1))
    assert domination_polynomial(disjoint_union(cycle(3), cycle(3))) == IntPolynomial(
        (0, 0, 9, 18, 15, 6, 1)
    )
    # W_4 = K_4: every nonempty subset dominates
    assert domination_polynomial(wheel(4)) == IntPolynomial((0, 4, 6, 4, 1))
    assert domination_polynomial(disjoint_union(cycle(4), cycle(3))) == IntPolynomial(
        (0, 0, 0, 18, 30, 21, 7, 1)
    )


def test_null_graph_conventions():
    null = Graph(0, ())
    assert domination_profile(null) == ()
    assert domination_polynomial(null) == IntPolynomial.one()
    assert domination_number(null) is None


def test_domination_number():
    assert domination_number(cycle(7)) == 3
    assert domination_number(complete(5)) == 1
    assert domination_number(disjoint_union(cycle(3), cycle(3))) == 2
    for n in range(1, 13):
        assert domination_number(cycle(n)) == (n + 2) // 3


def _random_graph(rng, max_n=9):
    n = rng.randint(1, max_n)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4
    ]
    return Graph.from_edges(n, edges)


def test_profile_invariants_on_random_graphs():
    rng = random.Random(11)
    for _ in range(40):
        g = _random_graph(rng)
        counts = domination_profile(g)
        assert counts[-1] == 1
        for i in range(g.n - 1):
            if counts[i] > 0:
                assert counts[i + 1] > 0
        for i, c in enumerate(counts, start=1):
            assert 0 <= c <= comb(g.n, i)


def test_union_product_law_random_pairs():
    rng = random.Random(5)
    for _ in range(25):
        g, h = _random_graph(rng, 6), _random_graph(rng, 6)
        assert domination_polynomial(disjoint_union(g, h)) == (
            domination_polynomial(g) * domination_polynomial(h)
        )


def test_chunking_and_threads_do_not_change_results():
    g = cycle(11)
    base = domination_profile(g)
    for chunks in (2, 3, 7, 64):
        assert domination_profile(g, chunks=chunks) == base
    assert domination_profile(g, threads=2) == base
    big = disjoint_union(cycle(8), cycle(7))
    assert domination_profile(big, threads=2, chunks=8) == domination_profile(big)


def test_relabeling_preserves_profile():
    # same structure, scrambled labels
    perm = [3, 0, 5, 1, 4, 2]
    scrambled = Graph.from_edges(
        6, [(perm[u], perm[v]) for u, v in cycle(6).edges()]
    )
    assert domination_profile(scrambled) == domination_profile(cycle(6))


def test_size_guard():
    g = cycle(6)
    with pytest.raises(SizeGuardError, match="guard"):
        domination_profile(g, guard=5)
    with pytest.raises(SizeGuardError, match="--guard-override"):
        domination_polynomial(g, guard=5)
    with pytest.raises(SizeGuardError):
        domination_number(g, guard=5)
    assert domination_profile(g, guard=6) == (0, 3, 14, 15, 6, 1)


def test_use_components_matches_raw():
    rng = random.Random(3)
    for _ in range(15):
        g = disjoint_union(_random_graph(rng, 5), _random_graph(rng, 5))
        assert domination_polynomial(g, use_components=True) == domination_polynomial(g)
    lone = path(4)
    assert domination_polynomial(lone, use_components=True) == domination_polynomial(lone)


def test_path_profile():
    assert domination_profile(path(6)) == (0, 1, 10, 13, 6, 1)
