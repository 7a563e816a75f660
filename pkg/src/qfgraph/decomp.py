"""Multicuts, mtos-quochains, and the prime factorization routes.

An mtos is an inclusion-maximal vertex set whose induced subgraph is totally
ordered.  A quochain peels mtos parts off stage remainders until nothing is
left; for snake-support polynomials all such quochains are isomorphic and
their parts spell out the prime tensor factorization.  Disconnected and
three-vertex q-factorization graphs get their own routes; everything else is
an honest "unknown".
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import GraphInvariantError, PQGraph, fundamental_graph, q_fact_graph
from .qfact import q_factorization
from .redsets import red_set_contains
from .snakes import has_snake_support
from .dynkin import Subdiagram
from .weights import DrinfeldPolynomial, KRFactor, kr_expand, kr_expand_all

STATUSES = ("snake-support-route", "three-vertex-route", "component-route", "prime", "unknown")

Multicut = tuple[frozenset[int], ...]


class NotApplicable(ValueError):
    """The requested route does not apply to this input."""


@dataclass(frozen=True)
class FactorizationResult:
    factors: tuple[DrinfeldPolynomial, ...]
    status: str

    def product(self) -> DrinfeldPolynomial:
        if not self.factors:
            raise ValueError("empty factor list has no diagram to build the identity over")
        out = self.factors[0]
        for f in self.factors[1:]:
            out = out * f
        return out


# -- maximal totally ordered subgraphs --------------------------------------


def _all_path_sets(g: PQGraph) -> list[frozenset[int]]:
    # Totally ordered induced subgraphs are exactly vertex sets of directed
    # paths: consecutive elements of the linear order cannot be joined
    # through an intermediate vertex, so they carry direct arrows.  A path is
    # enumerated once, from its unique start, and distinct paths have
    # distinct vertex sets (the order is forced by the centers).
    sets: list[frozenset[int]] = []
    stack: list[tuple[int, frozenset[int]]] = [
        (v, frozenset((v,))) for v in g.vertex_ids()
    ]
    while stack:
        last, s = stack.pop()
        sets.append(s)
        for w in g.out_neighbors(last):
            stack.append((w, s | {w}))
    return sets


def _maximal_sets(sets: list[frozenset[int]]) -> list[frozenset[int]]:
    by_size = sorted(sets, key=len, reverse=True)
    keep: list[frozenset[int]] = []
    for s in by_size:
        if not any(s < t for t in keep):
            keep.append(s)
    return sorted(keep, key=sorted)


def enumerate_mtos(g: PQGraph) -> list[frozenset[int]]:
    """All inclusion-maximal vertex sets inducing totally ordered subgraphs."""
    if len(g) == 0:
        return []
    return _maximal_sets(_all_path_sets(g))


def _mtos_key(g: PQGraph, s: frozenset[int]):
    return (tuple(sorted(g.label(v) for v in s)), tuple(sorted(s)))


def mtos_quochain(g: PQGraph) -> Multicut:
    """Greedy mtos-quochain with a deterministic tie-break.

    Each part is the mtos of the stage remainder whose sorted label list is
    lexicographically least, least vertex-id set on ties; uniqueness up to
    isomorphism is a separate verified claim, not an assumption.
    """
    parts: list[frozenset[int]] = []
    h = g
    while len(h):
        part = min(enumerate_mtos(h), key=lambda s: _mtos_key(h, s))
        parts.append(part)
        h = h.induced_subgraph(set(h.vertex_ids()) - part)
    return tuple(parts)


def all_mtos_quochains(g: PQGraph, bound: int = 14) -> list[Multicut]:
    """Every quochain whose parts are mtos of their stage remainders."""
    if len(g) > bound:
        raise ValueError(f"graph has {len(g)} vertices, exceeding the bound {bound}")
    results: list[Multicut] = []

    def rec(h: PQGraph, acc: list[frozenset[int]]) -> None:
        if len(h) == 0:
            results.append(tuple(acc))
            return
        remaining = set(h.vertex_ids())
        for part in sorted(enumerate_mtos(h), key=lambda s: _mtos_key(h, s)):
            rec(h.induced_subgraph(remaining - part), acc + [part])

    rec(g, [])
    return results


def _check_multicut(q: Multicut, g: PQGraph) -> None:
    seen: set[int] = set()
    for part in q:
        if not part:
            raise ValueError("multicut parts must be nonempty")
        if part & seen:
            raise ValueError("multicut parts overlap")
        seen |= part
    if seen != set(g.vertex_ids()):
        raise ValueError("multicut does not cover the vertex set")


def _quochain_canon(q: Multicut, g: PQGraph) -> list[tuple[KRFactor, ...]]:
    return sorted(tuple(sorted(g.label(v) for v in part)) for part in q)


def quochains_isomorphic(q1: Multicut, q2: Multicut, g: PQGraph) -> bool:
    """Same length and parts matchable bijectively with equal label multisets."""
    _check_multicut(q1, g)
    _check_multicut(q2, g)
    return _quochain_canon(q1, g) == _quochain_canon(q2, g)


def unique_mtos_decomposition(g: PQGraph, bound: int = 14) -> bool:
    """Whether all mtos-quochains of the graph are pairwise isomorphic."""
    qs = all_mtos_quochains(g, bound=bound)
    first = _quochain_canon(qs[0], g)
    return all(_quochain_canon(q, g) == first for q in qs[1:])


# -- factorization routes ----------------------------------------------------


def _component_poly(g: PQGraph, comp: frozenset[int]) -> DrinfeldPolynomial:
    return kr_expand_all(g.diagram, (g.label(v) for v in comp))


def prime_factorize_snake_support(p: DrinfeldPolynomial) -> FactorizationResult:
    """Prime factorization of a snake-support polynomial.

    Per weakly connected component of the fundamental graph: emit the
    component's radical, divide it out, recurse on what is left.  Every
    emitted factor is a prime snake polynomial and any mtos-quochain spells
    the same factor multiset.
    """
    if not has_snake_support(p):
        raise ValueError("polynomial does not have snake support")
    factors: list[DrinfeldPolynomial] = []

    def rec(poly: DrinfeldPolynomial) -> None:
        if poly.is_identity:
            return
        g = fundamental_graph(poly)
        for comp in g.connected_components():
            pc = _component_poly(g, comp)
            b = pc.bar()
            factors.append(b)
            rec(pc / b)

    rec(p)
    status = "prime" if len(factors) == 1 else "snake-support-route"
    return FactorizationResult(tuple(factors), status)


def _minimal_membership_interval(g: PQGraph, i: int, ij: int, r: int, rj: int, mj: int) -> Subdiagram:
    # Smallest interval around [i, ij] whose boundary distance admits the gap
    # mj; it exists because the adjacency already certifies membership
    # relative to the full diagram.
    n = g.diagram.n
    lo, hi = (i, ij) if i <= ij else (ij, i)
    t = r + rj + (hi - lo) - mj
    if t % 2:
        raise GraphInvariantError(f"gap {mj} has wrong parity for an arrow")
    q = max(0, -(t // 2))
    if lo - q < 1 or hi + q > n:
        raise GraphInvariantError(f"no interval inside A{n} admits the gap {mj}")
    return Subdiagram(lo - q, hi + q)


def three_vertex_prime_check(p: DrinfeldPolynomial) -> FactorizationResult:
    """Primality route for polynomials with exactly three q-factors.

    Disconnected graphs factor per component; totally ordered ones (directed
    paths and triangles) are prime; alternating lines are split off an outer
    q-factor exactly when the subdiagram-restricted gap conditions hold for
    one of the two ends.
    """
    krs = q_factorization(p)
    if len(krs) != 3:
        raise NotApplicable(f"polynomial has {len(krs)} q-factors, the route needs 3")
    g = q_fact_graph(p)
    comps = g.connected_components()
    if len(comps) > 1:
        return FactorizationResult(
            tuple(_component_poly(g, c) for c in comps), "component-route"
        )
    if g.is_totally_ordered():
        return FactorizationResult((p,), "prime")

    # Alternating line: the middle vertex is adjacent to both others, with
    # both arrows pointing in (middle sink) or both out (middle source).
    degree = {v: len(g.out_neighbors(v)) + len(g.in_neighbors(v)) for v in g.vertex_ids()}
    middles = [v for v, d in degree.items() if d == 2]
    if len(g.arrows) != 2 or len(middles) != 1:
        raise GraphInvariantError("connected non-linear 3-vertex graph is not an alternating line")
    mid = g.label(middles[0])
    outers = sorted(g.label(v) for v in g.vertex_ids() if v != middles[0])

    i, r = mid.i, mid.r
    gaps = [abs(o.a - mid.a) for o in outers]
    for j in (0, 1):
        jp = 1 - j
        oj, ojp = outers[j], outers[jp]
        interval = _minimal_membership_interval(g, i, oj.i, r, oj.r, gaps[j])
        if not interval.contains(ojp.i):
            continue
        if not red_set_contains(interval, i, ojp.i, r, ojp.r, gaps[jp]):
            continue
        shifted = gaps[jp] - gaps[j] + interval.dual_coxeter()
        if not red_set_contains(interval, interval.dual_node(oj.i), ojp.i, oj.r, ojp.r, shifted):
            continue
        if gaps[j] + oj.r > gaps[jp] + ojp.r + g.diagram.distance(outers[0].i, outers[1].i):
            continue
        w = kr_expand(g.diagram, oj)
        return FactorizationResult((w, p / w), "three-vertex-route")
    return FactorizationResult((p,), "prime")


def prime_factorize_small(p: DrinfeldPolynomial) -> FactorizationResult:
    """Dispatch the factorization routes in their order of coverage.

    Snake support first, then components, then total order, then the
    three-vertex alternating line; anything else is reported unknown with
    the input itself as the single "factor".
    """
    if has_snake_support(p):
        return prime_factorize_snake_support(p)
    g = q_fact_graph(p)
    comps = g.connected_components()
    if len(comps) > 1:
        subs = [prime_factorize_small(_component_poly(g, c)) for c in comps]
        factors = tuple(f for sub in subs for f in sub.factors)
        status = "unknown" if any(s.status == "unknown" for s in subs) else "component-route"
        return FactorizationResult(factors, status)
    if g.is_totally_ordered():
        return FactorizationResult((p,), "prime")
    if len(g) == 3:
        return three_vertex_prime_check(p)
    return FactorizationResult((p,), "unknown")
