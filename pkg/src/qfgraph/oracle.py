"""Independent brute-force oracles and seeded random generation.

Nothing in the core library imports this module; the comparisons it supports
are meaningful because everything here takes the definitional route (random
fusion schedules, exhaustive subset scans, closure-based order checks)
instead of the optimized ones.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .dynkin import DynkinA
from .graph import PQGraph
from .qfact import fuse, in_special_position
from .snakes import Snake
from .weights import DrinfeldPolynomial, KRFactor


class ConfluenceError(RuntimeError):
    """Two fusion schedules reached different terminal multisets."""

    def __init__(self, first, first_schedule, other, other_schedule):
        super().__init__(
            f"fusion is not confluent: {first} via {first_schedule} "
            f"vs {other} via {other_schedule}"
        )
        self.first = first
        self.first_schedule = first_schedule
        self.other = other
        self.other_schedule = other_schedule


def _rng(seed, tag: str) -> random.Random:
    # Keyed per (seed, tag) so each draw stream is reproducible on its own.
    return random.Random(f"{seed}/{tag}")


def brute_qfact(p: DrinfeldPolynomial, trials: int = 20, seed=0) -> tuple[KRFactor, ...]:
    """Fuse under `trials` random schedules; all terminal states must agree."""
    base = None
    base_sched = None
    for t in range(trials):
        rng = _rng(seed, f"qfact:{t}")
        work = [KRFactor(w.i, w.a, 1) for w in p.weights()]
        schedule = []
        while True:
            pairs = [
                (x, y)
                for x in range(len(work))
                for y in range(x + 1, len(work))
                if in_special_position(work[x], work[y])
            ]
            if not pairs:
                break
            x, y = rng.choice(pairs)
            schedule.append((work[x], work[y]))
            f = fuse(work[x], work[y])
            del work[y], work[x]
            work.append(f.big)
            if f.small is not None:
                work.append(f.small)
        result = tuple(sorted(work))
        if base is None:
            base, base_sched = result, schedule
        elif result != base:
            raise ConfluenceError(base, base_sched, result, schedule)
    return base if base is not None else ()


def _induced_reach(members: Sequence[int], out_mask: dict[int, int], mask: int) -> dict[int, int]:
    # Transitive closure of the arrows restricted to `mask`; members are
    # visited in ascending center order, which is topological.
    reach: dict[int, int] = {}
    for v in members:
        r = out_mask[v] & mask
        bits = r
        while bits:
            low = bits & -bits
            r |= reach[low.bit_length() - 1]
            bits ^= low
        reach[v] = r
    return reach


def brute_mtos(g: PQGraph) -> list[frozenset[int]]:
    """Scan all vertex subsets for induced total order; keep the maximal ones."""
    k = len(g)
    if k > 16:
        raise ValueError(f"graph has {k} vertices, exceeding the brute-force bound 16")
    ids = list(g.vertex_ids())
    pos = {v: t for t, v in enumerate(ids)}
    # ascending center so closure accumulates in one pass
    order = sorted(range(k), key=lambda t: g.label(ids[t]).a)
    out_mask = {
        t: sum(1 << pos[w] for w in g.out_neighbors(ids[t])) for t in range(k)
    }
    ordered: list[frozenset[int]] = []
    for mask in range(1, 1 << k):
        members = [t for t in order if (mask >> t) & 1]
        reach = _induced_reach(members, out_mask, mask)
        ok = True
        for x in range(len(members)):
            for y in range(x + 1, len(members)):
                u, v = members[x], members[y]
                if not ((reach[u] >> v) & 1 or (reach[v] >> u) & 1):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            ordered.append(frozenset(ids[t] for t in range(k) if (mask >> t) & 1))
    ordered.sort(key=len, reverse=True)
    keep: list[frozenset[int]] = []
    for s in ordered:
        if not any(s < t for t in keep):
            keep.append(s)
    return sorted(keep, key=sorted)


def iterated_bar_factorization(p: DrinfeldPolynomial) -> list[DrinfeldPolynomial]:
    """Single-node factor list: per component emit the radical, divide, recurse.

    Components are found with a union-find over factor instances and the
    fundamental gap rule, with no use of the graph machinery; every emitted
    radical must be a segment or the precondition fails.
    """
    support = p.support()
    if len(support) != 1:
        raise ValueError(f"support {sorted(support)} is not a single node")
    (i,) = support
    n = p.diagram.n
    bd = min(i - 1, n - i)

    def adjacent(c1: int, c2: int) -> bool:
        gap = abs(c1 - c2)
        return gap % 2 == 0 and 0 < gap <= 2 + 2 * bd

    factors: list[DrinfeldPolynomial] = []

    def rec(centers: list[int]) -> None:
        if not centers:
            return
        parent = list(range(len(centers)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for x in range(len(centers)):
            for y in range(x + 1, len(centers)):
                if adjacent(centers[x], centers[y]):
                    parent[find(x)] = find(y)
        comps: dict[int, list[int]] = {}
        for x in range(len(centers)):
            comps.setdefault(find(x), []).append(centers[x])
        for root in sorted(comps, key=lambda r: min(comps[r])):
            comp = sorted(comps[root])
            distinct = sorted(set(comp))
            for c1, c2 in zip(distinct, distinct[1:]):
                if not adjacent(c1, c2):
                    raise ValueError(
                        f"component radical {distinct} is not a segment at node {i}"
                    )
            factors.append(DrinfeldPolynomial(p.diagram, ((i, c) for c in distinct)))
            rest = list(comp)
            for c in distinct:
                rest.remove(c)
            rec(rest)

    rec([w.a for w in p.weights()])
    return factors


# -- structural-lemma verifiers ---------------------------------------------


def divisibility_pairs_incomparable(g: PQGraph) -> bool:
    """Whenever one vertex label's expansion divides another's, the two are incomparable."""
    ids = g.vertex_ids()
    for u in ids:
        ku = g.label(u)
        for v in ids:
            if u == v:
                continue
            kv = g.label(v)
            if ku.i == kv.i and kv.lo <= ku.lo and ku.hi <= kv.hi:
                if g.comparable(u, v):
                    return False
    return True


def path_p_bounds_hold(g: PQGraph, path_ids: Sequence[int]) -> bool:
    """Gap-parameter bounds along a center-increasing directed path.

    `path_ids` must be ordered by strictly increasing center with an arrow
    from each vertex to its predecessor.  For every vertex pair the gap
    parameter is integral; the end-to-end parameter is strictly below each
    interior one, which is strictly below the smaller string length.
    """
    labels = [g.label(v) for v in path_ids]
    N = len(labels)
    if N < 2:
        return True

    def pval(l: int, k: int) -> int:
        kl, kk = labels[l], labels[k]
        num = kl.r + kk.r + g.diagram.distance(kl.i, kk.i) - (kl.a - kk.a)
        if num % 2:
            raise AssertionError(f"gap parity violated between {kk} and {kl}")
        return num // 2

    p_end = pval(N - 1, 0)
    if p_end >= min(labels[0].r, labels[-1].r):
        return False
    for k in range(N):
        for l in range(k + 1, N):
            if (k, l) == (0, N - 1):
                continue
            pv = pval(l, k)
            if not p_end < pv < min(labels[k].r, labels[l].r):
                return False
    return True


def maximal_directed_paths(g: PQGraph) -> list[tuple[int, ...]]:
    """Maximal totally ordered sets as center-increasing vertex sequences."""
    paths = []
    for s in brute_mtos(g) if len(g) <= 16 else []:
        paths.append(tuple(sorted(s, key=lambda v: g.label(v).a)))
    return paths


# -- seeded random generation -------------------------------------------------


def random_prime_snake(
    rng: random.Random,
    diagram: DynkinA,
    max_len: int,
    center_lo: int = 0,
    center_hi: int = 10,
) -> Snake:
    """Random node walk with center steps drawn from the pairwise red sets."""
    nodes = list(diagram.nodes())
    i = rng.choice(nodes)
    a = rng.randint(center_lo, center_hi)
    pairs = [(i, a)]
    for _ in range(rng.randint(1, max_len) - 1):
        j = rng.choice(nodes)
        lo, hi = (i, j) if i <= j else (j, i)
        b = min(lo - 1, diagram.n - hi)
        d = hi - lo
        # red set = {d+2, d+4, ..., d+2+2b}
        step = d + 2 * rng.randint(1, b + 1)
        a += step
        pairs.append((j, a))
        i = j
    return Snake(diagram, tuple(pairs))


def random_drinfeld(
    seed,
    n: int = 3,
    max_factors: int = 8,
    center_lo: int = -10,
    center_hi: int = 10,
    snake_support_only: bool = False,
) -> DrinfeldPolynomial:
    """Reproducible pseudo-random polynomial within the given bounds.

    In snake-support mode a random prime snake is sampled first and random
    multiplicities are layered on top, so the result always has snake
    support by construction.
    """
    rng = _rng(seed, "drinfeld")
    diagram = DynkinA(n)
    if not snake_support_only:
        count = rng.randint(1, max_factors)
        return DrinfeldPolynomial(
            diagram,
            (
                (rng.choice(list(diagram.nodes())), rng.randint(center_lo, center_hi))
                for _ in range(count)
            ),
        )
    max_len = min(5, max_factors)
    snake = random_prime_snake(rng, diagram, max_len, center_lo, center_hi)
    weights = list(snake.pairs)
    budget = max_factors - len(weights)
    for pair in snake.pairs:
        if budget <= 0:
            break
        extra = rng.randint(0, min(2, budget))
        weights.extend([pair] * extra)
        budget -= extra
    return DrinfeldPolynomial(diagram, weights)
