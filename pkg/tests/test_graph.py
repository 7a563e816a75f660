import random

import pytest

from qfgraph.dynkin import DynkinA
from qfgraph.graph import (
    GraphInvariantError,
    PQGraph,
    build_graph,
    fundamental_graph,
    q_fact_graph,
    tensor,
)
from qfgraph.redsets import red_set_contains
from qfgraph.weights import DrinfeldPolynomial, KRFactor

A3 = DynkinA(3)


def poly(weights, diagram=A3):
    return DrinfeldPolynomial(diagram, weights)


def random_graph(rng, n=3, max_vertices=6):
    D = DynkinA(n)
    labels = [
        KRFactor(rng.randint(1, n), rng.randint(-6, 6), rng.randint(1, 3))
        for _ in range(rng.randint(0, max_vertices))
    ]
    return build_graph(D, labels)


def closure_comparable(g):
    # definitional reachability: repeated relational composition of arrows
    reach = {v: set(g.out_neighbors(v)) for v in g.vertex_ids()}
    changed = True
    while changed:
        changed = False
        for v in g.vertex_ids():
            extra = set()
            for w in reach[v]:
                extra |= reach[w]
            if not extra <= reach[v]:
                reach[v] |= extra
                changed = True
    return reach


def test_build_graph_examples():
    g = build_graph(A3, [KRFactor(1, 3, 1), KRFactor(2, 0, 1), KRFactor(3, 3, 1)])
    assert g.arrows == {(0, 1), (2, 1)}

    g = build_graph(A3, [KRFactor(1, 3, 1)])
    assert len(g) == 1 and not g.arrows

    g = build_graph(A3, [KRFactor(1, 3, 1), KRFactor(1, 3, 1), KRFactor(2, 0, 1)])
    assert g.arrows == {(0, 2), (1, 2)}


def test_arrows_match_signed_red_set_membership():
    rng = random.Random(23)
    for _ in range(100):
        g = random_graph(rng)
        full = g.diagram.full()
        for v in g.vertex_ids():
            for w in g.vertex_ids():
                if v == w:
                    continue
                kv, kw = g.label(v), g.label(w)
                expected = red_set_contains(full, kv.i, kw.i, kv.r, kw.r, kv.a - kw.a)
                assert ((v, w) in g.arrows) == expected
        g.verify()


def test_graphs_are_acyclic_with_center_decreasing_arrows():
    rng = random.Random(29)
    for _ in range(100):
        g = random_graph(rng)
        for v, w in g.arrows:
            assert g.label(v).a > g.label(w).a
        for v, below in g.descendants().items():
            assert v not in below


def test_fundamental_graph_examples():
    g = fundamental_graph(poly([(1, 0), (1, 0), (2, 3)]))
    assert g.label_multiset() == (KRFactor(1, 0, 1), KRFactor(1, 0, 1), KRFactor(2, 3, 1))
    assert g.arrows == {(2, 0), (2, 1)}

    g = fundamental_graph(poly([(2, 0), (2, 6)]))
    assert len(g) == 2 and not g.arrows

    assert len(fundamental_graph(DrinfeldPolynomial.identity(A3))) == 0


def test_q_fact_graph_examples():
    g = q_fact_graph(poly([(1, 0), (1, 2), (1, 6)]))
    assert g.label_multiset() == (KRFactor(1, 1, 2), KRFactor(1, 6, 1))
    assert not g.arrows  # gap 5 misses the restricted set {3}

    p = poly([(1, 3), (2, 0), (3, 3)])
    assert q_fact_graph(p).is_isomorphic(fundamental_graph(p))

    g = q_fact_graph(poly([(1, 0), (1, 2)]))
    assert g.label_multiset() == (KRFactor(1, 1, 2),)


def test_tensor_examples():
    g = tensor(fundamental_graph(poly([(1, 3)])), fundamental_graph(poly([(2, 0)])))
    assert len(g) == 2 and len(g.arrows) == 1

    base = fundamental_graph(poly([(1, 3), (2, 0)]))
    assert tensor(base, fundamental_graph(DrinfeldPolynomial.identity(A3))).is_isomorphic(base)

    g = tensor(fundamental_graph(poly([(2, 0)])), fundamental_graph(poly([(2, 6)])))
    assert not g.arrows


def test_tensor_rejects_diagram_mismatch():
    with pytest.raises(ValueError):
        tensor(fundamental_graph(poly([(1, 0)])), fundamental_graph(poly([(1, 0)], DynkinA(4))))


def test_tensor_polynomial_is_product():
    rng = random.Random(31)
    for _ in range(50):
        g = random_graph(rng)
        h = random_graph(rng)
        assert tensor(g, h).poly() == g.poly() * h.poly()


def test_reachability_examples():
    g = build_graph(A3, [KRFactor(1, 3, 1), KRFactor(2, 0, 1)])
    assert g.descendants() == {0: frozenset({1}), 1: frozenset()}

    chain = build_graph(A3, [KRFactor(3, 6, 1), KRFactor(2, 3, 1), KRFactor(1, 0, 1)])
    assert chain.descendants()[0] == {1, 2}
    assert chain.comparable(0, 2)

    g = fundamental_graph(poly([(1, 3), (2, 0), (3, 3)]))
    v13 = [v for v in g.vertex_ids() if g.label(v).i == 1][0]
    v33 = [v for v in g.vertex_ids() if g.label(v).i == 3][0]
    assert not g.comparable(v13, v33)


def test_descendants_match_definitional_closure():
    rng = random.Random(37)
    for _ in range(100):
        g = random_graph(rng)
        reach = closure_comparable(g)
        assert {v: frozenset(reach[v]) for v in g.vertex_ids()} == g.descendants()


def test_is_totally_ordered_examples():
    assert build_graph(A3, [KRFactor(2, 0, 1)]).is_totally_ordered()
    assert not fundamental_graph(poly([(1, 3), (2, 0), (3, 3)])).is_totally_ordered()
    assert fundamental_graph(poly([(1, 0), (2, 3), (3, 6)])).is_totally_ordered()


def test_is_totally_ordered_matches_pairwise_comparability():
    rng = random.Random(41)
    for _ in range(300):
        g = random_graph(rng, max_vertices=5)
        ids = g.vertex_ids()
        expected = all(
            g.comparable(u, v) for x, u in enumerate(ids) for v in ids[x + 1 :]
        )
        assert g.is_totally_ordered() == expected


def test_connected_components_examples():
    assert len(fundamental_graph(poly([(2, 0), (2, 6)])).connected_components()) == 2
    assert len(fundamental_graph(poly([(1, 3), (2, 0), (3, 3)])).connected_components()) == 1
    assert fundamental_graph(DrinfeldPolynomial.identity(A3)).connected_components() == []


def test_induced_subgraph_examples():
    g = fundamental_graph(poly([(1, 3), (2, 0), (3, 3)]))
    v13 = [v for v in g.vertex_ids() if g.label(v).i == 1][0]
    v20 = [v for v in g.vertex_ids() if g.label(v).i == 2][0]
    sub = g.induced_subgraph({v13, v20})
    assert len(sub.arrows) == 1 and sub.is_totally_ordered()

    assert len(g.induced_subgraph(set())) == 0
    full = g.induced_subgraph(g.vertex_ids())
    assert full.labels() == g.labels() and full.arrows == g.arrows

    with pytest.raises(ValueError):
        g.induced_subgraph({99})


def test_induced_subgraph_keeps_ids_and_restricts_arrows():
    rng = random.Random(43)
    for _ in range(100):
        g = random_graph(rng)
        ids = list(g.vertex_ids())
        keep = {v for v in ids if rng.random() < 0.6}
        sub = g.induced_subgraph(keep)
        assert set(sub.vertex_ids()) == keep
        assert sub.arrows == {(v, w) for v, w in g.arrows if v in keep and w in keep}


def test_is_isomorphic_examples():
    a = build_graph(A3, [KRFactor(1, 3, 1), KRFactor(2, 0, 1)])
    b = build_graph(A3, [KRFactor(2, 0, 1), KRFactor(1, 3, 1)])
    assert a.is_isomorphic(b)
    assert len(a.arrows) == len(b.arrows)

    c = build_graph(A3, [KRFactor(3, 3, 1), KRFactor(2, 0, 1)])
    assert not a.is_isomorphic(c)
    assert a.is_isomorphic(a)
    assert not a.is_isomorphic(build_graph(DynkinA(4), [KRFactor(1, 3, 1), KRFactor(2, 0, 1)]))


def test_fuse_vertices_examples():
    g = build_graph(A3, [KRFactor(1, 0, 1), KRFactor(1, 2, 1)])
    fused = g.fuse_vertices(0, 1)
    assert fused.label_multiset() == (KRFactor(1, 1, 2),)

    g = build_graph(A3, [KRFactor(1, 0, 2), KRFactor(1, 2, 2)])
    fused = g.fuse_vertices(0, 1)
    assert fused.label_multiset() == (KRFactor(1, 1, 1), KRFactor(1, 1, 3))

    snake = fundamental_graph(poly([(1, 0), (2, 3), (3, 6)]))
    assert snake.is_totally_ordered()


def test_fuse_vertices_preserves_polynomial():
    rng = random.Random(47)
    done = 0
    while done < 60:
        g = random_graph(rng, max_vertices=5)
        pairs = [
            (v, w)
            for v in g.vertex_ids()
            for w in g.vertex_ids()
            if v < w
            and g.label(v).i == g.label(w).i
            and abs(g.label(v).a - g.label(w).a) > 0
        ]
        from qfgraph.qfact import in_special_position

        pairs = [(v, w) for v, w in pairs if in_special_position(g.label(v), g.label(w))]
        if not pairs:
            continue
        v, w = pairs[0]
        fused = g.fuse_vertices(v, w)
        assert fused.poly() == g.poly()
        fused.verify()
        done += 1


def test_fuse_vertices_rejects_non_special():
    g = build_graph(A3, [KRFactor(1, 0, 1), KRFactor(2, 3, 1)])
    with pytest.raises(ValueError):
        g.fuse_vertices(0, 1)


def test_verify_detects_tampering():
    g = build_graph(A3, [KRFactor(1, 3, 1), KRFactor(2, 0, 1)])
    g.verify()
    tampered = build_graph(A3, [KRFactor(1, 3, 1), KRFactor(2, 0, 1)])
    tampered._labels[0] = KRFactor(1, 5, 1)  # arrows now stale
    with pytest.raises(GraphInvariantError):
        tampered.verify()
