"""Reducibility sets for KR tensor pairs and arrow orientation.

The center gaps at which a pair of KR modules interacts form a finite set of
positive integers of fixed parity, computed from the string lengths, the node
distance, and the distance of the node interval to the boundary of the
(sub)diagram.  Sets are materialized when asked for; graph construction uses
the O(1) membership test instead.
"""

from __future__ import annotations

from .dynkin import DynkinA, Subdiagram
from .weights import KRFactor


def special_set(r: int, s: int) -> frozenset[int]:
    """Center gaps at which two same-node strings of lengths r, s merge.

    The set does not depend on the node or the ambient rank.
    """
    if r < 1 or s < 1:
        raise ValueError(f"string lengths must be >= 1, got {r}, {s}")
    return frozenset(r + s - 2 * p for p in range(min(r, s)))


def red_set(J: Subdiagram, i: int, j: int, r: int, s: int) -> frozenset[int]:
    """Center gaps at which the (i,r)/(j,s) tensor pair is reducible, relative to J."""
    if not (J.contains(i) and J.contains(j)):
        raise ValueError(f"nodes {i},{j} not inside subdiagram [{J.lo},{J.hi}]")
    if r < 1 or s < 1:
        raise ValueError(f"string lengths must be >= 1, got {r}, {s}")
    lo, hi = (i, j) if i <= j else (j, i)
    b = min(lo - J.lo, J.hi - hi)
    d = hi - lo
    return frozenset(r + s + d - 2 * p for p in range(-b, min(r, s)))


def red_set_contains(J: Subdiagram, i: int, j: int, r: int, s: int, m: int) -> bool:
    """O(1) membership test `m in red_set(J, i, j, r, s)`.

    Hot path for arrow construction; assumes i, j lie inside J.
    """
    lo, hi = (i, j) if i <= j else (j, i)
    t = r + s + (hi - lo) - m
    if t % 2:
        return False
    p = t // 2
    return -min(lo - J.lo, J.hi - hi) <= p < (r if r < s else s)


def is_reducible_pair(k1: KRFactor, k2: KRFactor, diagram: DynkinA) -> bool:
    """Whether the (unordered) tensor product of the two KR modules is reducible."""
    k1.validate(diagram)
    k2.validate(diagram)
    return red_set_contains(diagram.full(), k1.i, k2.i, k1.r, k2.r, abs(k1.a - k2.a))


def hlw_first(k1: KRFactor, k2: KRFactor, diagram: DynkinA) -> bool:
    """Whether the ordered tensor k1 (x) k2 of a reducible pair is highest-l-weight.

    True exactly when k1 has the larger center; this is what orients the
    arrow k1 -> k2.  Raises on an irreducible pair, where the question does
    not arise.
    """
    if not is_reducible_pair(k1, k2, diagram):
        raise ValueError(f"pair {k1}, {k2} is irreducible; orientation undefined")
    return k1.a > k2.a
