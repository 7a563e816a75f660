"""Pseudo q-factorization graphs: KR-labeled DAGs whose arrows are label-forced.

An arrow (v, w) exists exactly when the signed center difference a_v - a_w
lies in the reducibility set of the two labels, so arrows are a function of
the labels and every constructed or derived graph recomputes them from
scratch.  All reducibility sets are positive, so arrows strictly decrease the
center and every graph is a DAG.  Vertex ids are creation-ordered integers,
kept stable across induced subgraphs and fusion chains.
"""

from __future__ import annotations

from typing import Iterable

from .dynkin import DynkinA
from .qfact import fuse, in_special_position, q_factorization
from .weights import DrinfeldPolynomial, KRFactor, kr_expand_all


class GraphInvariantError(RuntimeError):
    """A structural invariant (arrow determinism, partition soundness) failed."""


def _forces_arrow(n: int, kv: KRFactor, kw: KRFactor, m: int) -> bool:
    # m = a_v - a_w > 0; membership of m in the full-diagram reducibility set,
    # inlined from redsets.red_set_contains for the O(V^2) construction loop.
    iv, iw = kv.i, kw.i
    lo, hi = (iv, iw) if iv <= iw else (iw, iv)
    t = kv.r + kw.r + (hi - lo) - m
    if t % 2:
        return False
    p = t // 2
    rv, rw = kv.r, kw.r
    return -(lo - 1 if lo - 1 < n - hi else n - hi) <= p < (rv if rv < rw else rw)


class PQGraph:
    """A pseudo q-factorization graph over a fixed type-A diagram."""

    __slots__ = ("diagram", "_labels", "arrows", "_out", "_in", "_desc")

    def __init__(self, diagram: DynkinA, labels_by_id: dict[int, KRFactor]):
        self.diagram = diagram
        self._labels = {v: labels_by_id[v] for v in sorted(labels_by_id)}
        n = diagram.n
        out: dict[int, list[int]] = {v: [] for v in self._labels}
        inn: dict[int, list[int]] = {v: [] for v in self._labels}
        arrows = set()
        items = list(self._labels.items())
        for v, kv in items:
            av = kv.a
            for w, kw in items:
                m = av - kw.a
                if m > 0 and _forces_arrow(n, kv, kw, m):
                    arrows.add((v, w))
                    out[v].append(w)
                    inn[w].append(v)
        self.arrows = frozenset(arrows)
        self._out = {v: tuple(sorted(ws)) for v, ws in out.items()}
        self._in = {v: tuple(sorted(ws)) for v, ws in inn.items()}
        self._desc = None

    # -- basic views -----------------------------------------------------

    def __len__(self) -> int:
        return len(self._labels)

    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(self._labels)

    def label(self, v: int) -> KRFactor:
        return self._labels[v]

    def labels(self) -> dict[int, KRFactor]:
        return dict(self._labels)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def label_multiset(self) -> tuple[KRFactor, ...]:
        return tuple(sorted(self._labels.values()))

    def poly(self) -> DrinfeldPolynomial:
        """The Drinfeld polynomial the graph factorizes."""
        return kr_expand_all(self.diagram, self._labels.values())

    # -- order structure ---------------------------------------------------

    def descendants(self) -> dict[int, frozenset[int]]:
        """For each vertex, the set of vertices strictly below it.

        The partial order is the transitive closure of the arrows, target
        below source.  Computed once per graph (centers strictly decrease
        along arrows, so ascending-center order is topological).
        """
        if self._desc is None:
            desc: dict[int, frozenset[int]] = {}
            for v in sorted(self._labels, key=lambda u: self._labels[u].a):
                s: set[int] = set()
                for w in self._out[v]:
                    s.add(w)
                    s |= desc[w]
                desc[v] = frozenset(s)
            self._desc = desc
        return self._desc

    def comparable(self, u: int, v: int) -> bool:
        d = self.descendants()
        return u in d[v] or v in d[u]

    def is_totally_ordered(self) -> bool:
        """Whether the arrow-induced partial order is linear.

        Linear iff all centers are distinct and the center-descending chain
        has a direct arrow between each consecutive pair: consecutive
        elements of a linear order cannot be joined through an intermediate
        vertex, and any vertex strictly between them in center would be
        strictly between them in the order.
        """
        vs = sorted(self._labels, key=lambda u: -self._labels[u].a)
        for u, v in zip(vs, vs[1:]):
            if self._labels[u].a == self._labels[v].a:
                return False
            if (u, v) not in self.arrows:
                return False
        return True

    def connected_components(self) -> list[frozenset[int]]:
        """Weakly connected components (arrow direction ignored), by min vertex id."""
        seen: set[int] = set()
        comps = []
        for v in self._labels:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                u = stack.pop()
                for w in self._out[u] + self._in[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    # -- derived graphs -----------------------------------------------------

    def induced_subgraph(self, vertex_set: Iterable[int]) -> "PQGraph":
        """Restriction to a vertex subset; arrows recompute to the restriction."""
        keep = set(vertex_set)
        unknown = keep - self._labels.keys()
        if unknown:
            raise ValueError(f"unknown vertex ids {sorted(unknown)}")
        return PQGraph(self.diagram, {v: self._labels[v] for v in keep})

    def tensor(self, other: "PQGraph") -> "PQGraph":
        """Disjoint union of labels; cross arrows appear as the labels dictate.

        The other graph's vertex ids are shifted past this graph's maximum so
        references into self stay valid.
        """
        if self.diagram != other.diagram:
            raise ValueError("cannot tensor graphs over different diagrams")
        offset = max(self._labels, default=-1) + 1
        labels = dict(self._labels)
        labels.update({v + offset: k for v, k in other._labels.items()})
        return PQGraph(self.diagram, labels)

    def is_isomorphic(self, other: "PQGraph") -> bool:
        """Label-multiset equality.

        Arrows are a function of labels, so any label-preserving vertex
        bijection automatically matches the arrow sets; graph isomorphism
        collapses to multiset comparison.
        """
        if not isinstance(other, PQGraph) or self.diagram != other.diagram:
            return False
        return self.label_multiset() == other.label_multiset()

    def fuse_vertices(self, v: int, w: int) -> "PQGraph":
        """Fuse the special-position labels of v and w.

        Non-pure fusion keeps both vertices, relabeling v with the union
        string and w with the intersection; pure fusion drops w and relabels
        v with the product string.  The graph polynomial is preserved.
        """
        kv, kw = self._labels[v], self._labels[w]
        if not in_special_position(kv, kw):
            raise ValueError(f"labels {kv} and {kw} are not in special position")
        f = fuse(kv, kw)
        labels = dict(self._labels)
        labels[v] = f.big
        if f.pure:
            del labels[w]
        else:
            labels[w] = f.small
        return PQGraph(self.diagram, labels)

    # -- integrity ---------------------------------------------------------

    def verify(self) -> None:
        """Re-derive the arrow set from the labels; raise if it disagrees."""
        fresh = PQGraph(self.diagram, self._labels)
        if fresh.arrows != self.arrows:
            raise GraphInvariantError("arrow set disagrees with its labels")
        for v, w in self.arrows:
            if self._labels[v].a <= self._labels[w].a:
                raise GraphInvariantError(f"arrow ({v},{w}) does not decrease the center")

    def __repr__(self) -> str:
        labs = ", ".join(f"{v}:kr{tuple(k)}" for v, k in self._labels.items())
        return f"PQGraph(A{self.diagram.n}, [{labs}], {len(self.arrows)} arrows)"


def build_graph(diagram: DynkinA, labels: Iterable[KRFactor]) -> PQGraph:
    """Graph with one vertex per label instance, ids following the given order."""
    labels = list(labels)
    for k in labels:
        k.validate(diagram)
    return PQGraph(diagram, dict(enumerate(labels)))


def fundamental_graph(p: DrinfeldPolynomial) -> PQGraph:
    """The maximal pseudo q-factorization graph: one vertex per fundamental factor."""
    return build_graph(p.diagram, (KRFactor(w.i, w.a, 1) for w in p.weights()))


def q_fact_graph(p: DrinfeldPolynomial) -> PQGraph:
    """The minimal pseudo q-factorization graph: one vertex per q-factor."""
    return build_graph(p.diagram, q_factorization(p))


def tensor(g: PQGraph, h: PQGraph) -> PQGraph:
    return g.tensor(h)
