import random
from collections import Counter

import pytest

from qfgraph.decomp import (
    FactorizationResult,
    NotApplicable,
    all_mtos_quochains,
    enumerate_mtos,
    mtos_quochain,
    prime_factorize_small,
    prime_factorize_snake_support,
    quochains_isomorphic,
    three_vertex_prime_check,
    unique_mtos_decomposition,
)
from qfgraph.dynkin import DynkinA
from qfgraph.graph import build_graph, fundamental_graph
from qfgraph.oracle import brute_mtos, random_drinfeld
from qfgraph.snakes import poly_is_prime_snake
from qfgraph.weights import DrinfeldPolynomial, KRFactor

A3 = DynkinA(3)


def poly(weights, diagram=A3):
    return DrinfeldPolynomial(diagram, weights)


THREE_LINE = poly([(1, 3), (2, 0), (3, 3)])
TWO_COPIES = poly([(1, 3), (1, 3), (2, 0)])


def test_enumerate_mtos_examples():
    g = fundamental_graph(THREE_LINE)
    assert enumerate_mtos(g) == [frozenset({0, 1}), frozenset({1, 2})]

    single = build_graph(A3, [KRFactor(2, 0, 1)])
    assert enumerate_mtos(single) == [frozenset({0})]

    g = fundamental_graph(TWO_COPIES)
    assert enumerate_mtos(g) == [frozenset({0, 2}), frozenset({1, 2})]


def test_enumerate_mtos_matches_brute_force():
    rng = random.Random(53)
    for _ in range(200):
        D = DynkinA(rng.randint(1, 4))
        labels = [
            KRFactor(rng.randint(1, D.n), rng.randint(-5, 5), rng.randint(1, 3))
            for _ in range(rng.randint(0, 7))
        ]
        g = build_graph(D, labels)
        assert sorted(enumerate_mtos(g), key=sorted) == brute_mtos(g)


def test_mtos_sets_are_totally_ordered_and_maximal():
    rng = random.Random(59)
    for _ in range(100):
        D = DynkinA(3)
        labels = [
            KRFactor(rng.randint(1, 3), rng.randint(-5, 5), rng.randint(1, 2))
            for _ in range(rng.randint(1, 7))
        ]
        g = build_graph(D, labels)
        mtos = enumerate_mtos(g)
        for s in mtos:
            assert g.induced_subgraph(s).is_totally_ordered()
            for v in set(g.vertex_ids()) - s:
                assert not g.induced_subgraph(s | {v}).is_totally_ordered()


def test_mtos_quochain_examples():
    g = fundamental_graph(TWO_COPIES)
    assert mtos_quochain(g) == (frozenset({0, 2}), frozenset({1}))

    single = build_graph(A3, [KRFactor(2, 0, 1)])
    assert mtos_quochain(single) == (frozenset({0}),)

    chain = fundamental_graph(poly([(2, 0), (2, 4)]))
    assert mtos_quochain(chain) == (frozenset({0, 1}),)


def test_mtos_quochain_parts_are_stage_mtos():
    rng = random.Random(61)
    for _ in range(100):
        p = random_drinfeld(f"stage:{rng.random()}", n=3, max_factors=7)
        g = fundamental_graph(p)
        remaining = set(g.vertex_ids())
        for part in mtos_quochain(g):
            stage = g.induced_subgraph(remaining)
            assert part in enumerate_mtos(stage)
            remaining -= part
        assert not remaining


def test_all_mtos_quochains_examples():
    g = fundamental_graph(TWO_COPIES)
    qs = all_mtos_quochains(g)
    assert len(qs) == 2
    assert all(quochains_isomorphic(q, qs[0], g) for q in qs)

    g = fundamental_graph(THREE_LINE)
    qs = all_mtos_quochains(g)
    assert len(qs) == 2
    assert not quochains_isomorphic(qs[0], qs[1], g)

    single = build_graph(A3, [KRFactor(2, 0, 1)])
    assert all_mtos_quochains(single) == [(frozenset({0}),)]


def test_all_mtos_quochains_bound():
    labels = [KRFactor(1, 2 * t, 1) for t in range(6)]
    g = build_graph(A3, labels)
    with pytest.raises(ValueError):
        all_mtos_quochains(g, bound=5)


def test_quochains_isomorphic_validates_multicuts():
    g = fundamental_graph(TWO_COPIES)
    q = mtos_quochain(g)
    assert quochains_isomorphic(q, q, g)
    with pytest.raises(ValueError):
        quochains_isomorphic(q, (frozenset({0}),), g)
    with pytest.raises(ValueError):
        quochains_isomorphic(q, (frozenset({0, 1, 2}), frozenset({0})), g)


def test_unique_mtos_decomposition_examples():
    assert unique_mtos_decomposition(fundamental_graph(TWO_COPIES))
    assert not unique_mtos_decomposition(fundamental_graph(THREE_LINE))
    assert unique_mtos_decomposition(build_graph(A3, [KRFactor(2, 0, 1)]))


def test_snake_support_route_examples():
    r = prime_factorize_snake_support(TWO_COPIES)
    assert r.status == "snake-support-route"
    assert list(r.factors) == [poly([(1, 3), (2, 0)]), poly([(1, 3)])]

    r = prime_factorize_snake_support(poly([(1, 0), (1, 0), (2, 3)]))
    assert list(r.factors) == [poly([(1, 0), (2, 3)]), poly([(1, 0)])]

    r = prime_factorize_snake_support(poly([(1, 5)]))
    assert r.status == "prime"
    assert list(r.factors) == [poly([(1, 5)])]


def test_snake_support_route_requires_snake_support():
    with pytest.raises(ValueError):
        prime_factorize_snake_support(THREE_LINE)


def test_snake_route_factors_are_prime_snakes_with_product():
    for idx in range(150):
        p = random_drinfeld(f"route:{idx}", n=4, max_factors=9, snake_support_only=True)
        r = prime_factorize_snake_support(p)
        assert r.product() == p
        assert all(poly_is_prime_snake(f) for f in r.factors)


def test_quochain_factors_match_snake_route():
    for idx in range(60):
        p = random_drinfeld(f"match:{idx}", n=3, max_factors=8, snake_support_only=True)
        g = fundamental_graph(p)
        route = Counter(prime_factorize_snake_support(p).factors)
        for q in all_mtos_quochains(g):
            from_parts = Counter(
                g.induced_subgraph(part).poly() for part in q
            )
            assert from_parts == route


def test_three_vertex_examples():
    r = three_vertex_prime_check(THREE_LINE)
    assert r.status == "prime" and list(r.factors) == [THREE_LINE]

    r = three_vertex_prime_check(TWO_COPIES)
    assert r.status == "three-vertex-route"
    assert Counter(r.factors) == Counter([poly([(1, 3)]), poly([(1, 3), (2, 0)])])


def test_three_vertex_disconnected_goes_component_route():
    p = poly([(1, 0), (1, 0), (1, 0)])  # three mutually non-special copies
    r = three_vertex_prime_check(p)
    assert r.status == "component-route"
    assert Counter(r.factors) == Counter([poly([(1, 0)])] * 3)


def test_three_vertex_wrong_count_is_not_applicable():
    with pytest.raises(NotApplicable):
        three_vertex_prime_check(poly([(2, 0), (2, 2), (2, 8)]))  # only 2 q-factors
    with pytest.raises(NotApplicable):
        three_vertex_prime_check(poly([(1, 0)]))


def test_three_vertex_totally_ordered_path_is_prime():
    p = poly([(1, 0), (2, 3), (3, 6)])
    r = three_vertex_prime_check(p)
    assert r.status == "prime"


def test_prime_factorize_small_examples():
    r = prime_factorize_small(poly([(2, 0), (2, 2), (2, 8)]))
    assert r.status == "component-route"
    assert Counter(r.factors) == Counter([poly([(2, 0), (2, 2)]), poly([(2, 8)])])

    r = prime_factorize_small(poly([(2, 0), (2, 4)]))
    assert r.status == "prime"
    assert list(r.factors) == [poly([(2, 0), (2, 4)])]

    # 4+ vertex, connected, no snake support, not totally ordered: honest unknown
    p = poly([(1, 0), (3, 0), (2, 3), (2, 3)])
    r = prime_factorize_small(p)
    assert r.status == "unknown"
    assert list(r.factors) == [p]


def test_prime_factorize_small_product_invariant():
    for idx in range(200):
        p = random_drinfeld(f"small:{idx}", n=3, max_factors=6)
        r = prime_factorize_small(p)
        assert r.status in ("snake-support-route", "three-vertex-route", "component-route", "prime", "unknown")
        assert r.product() == p


def test_identity_factorization():
    one = DrinfeldPolynomial.identity(A3)
    r = prime_factorize_small(one)
    assert r.factors == () and r.status == "snake-support-route"
