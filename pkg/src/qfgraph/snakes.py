"""Snakes, prime snakes, snake support, and single-node segments.

A snake is a center-increasing sequence of (node, center) pairs whose
consecutive gaps are admissible; in the prime variant the gap must land in
the finite reducibility set of the two nodes.  A polynomial has snake support
when its radical (one copy of each fundamental factor) sorts into a prime
snake.  Segments are the single-node avatar of prime snakes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .dynkin import DynkinA
from .graph import fundamental_graph, q_fact_graph
from .redsets import red_set_contains
from .weights import DrinfeldPolynomial

Pair = tuple[int, int]


def in_snake_position(p1: Pair, p2: Pair, diagram: DynkinA) -> bool:
    """Whether the center gap exceeds the node distance with matching parity."""
    d = diagram.distance(p1[0], p2[0])
    gap = p2[1] - p1[1]
    return gap > d and (gap - d) % 2 == 0


def in_prime_snake_position(p1: Pair, p2: Pair, diagram: DynkinA) -> bool:
    """Whether the center gap lies in the (fundamental) reducibility set of the nodes."""
    diagram.check_node(p1[0])
    diagram.check_node(p2[0])
    return red_set_contains(diagram.full(), p1[0], p2[0], 1, 1, p2[1] - p1[1])


def is_snake(seq: Sequence[Pair], diagram: DynkinA) -> bool:
    """Consecutive pairs all in snake position; length <= 1 is vacuously a snake."""
    return all(in_snake_position(p, q, diagram) for p, q in zip(seq, seq[1:]))


def is_prime_snake(seq: Sequence[Pair], diagram: DynkinA) -> bool:
    return all(in_prime_snake_position(p, q, diagram) for p, q in zip(seq, seq[1:]))


@dataclass(frozen=True)
class Snake:
    """A validated snake: (node, center) pairs with strictly increasing centers."""

    diagram: DynkinA
    pairs: tuple[Pair, ...]

    def __post_init__(self):
        if not is_snake(self.pairs, self.diagram):
            raise ValueError(f"{self.pairs} is not a snake")

    def is_prime(self) -> bool:
        return is_prime_snake(self.pairs, self.diagram)

    def poly(self) -> DrinfeldPolynomial:
        return DrinfeldPolynomial(self.diagram, self.pairs)


def sorted_weight_sequence(p: DrinfeldPolynomial) -> tuple[Pair, ...] | None:
    """Factor instances sorted by center, or None when two instances tie.

    Tied centers can never be ordered into a snake (steps are strictly
    positive), so None short-circuits every snake predicate on polynomials.
    """
    seq = sorted(((w.a, w.i) for w in p.weights()))
    for (a1, _), (a2, _) in zip(seq, seq[1:]):
        if a1 == a2:
            return None
    return tuple((i, a) for a, i in seq)


def poly_is_snake(p: DrinfeldPolynomial) -> bool:
    seq = sorted_weight_sequence(p)
    return seq is not None and is_snake(seq, p.diagram)


def poly_is_prime_snake(p: DrinfeldPolynomial) -> bool:
    """Whether p is the polynomial of a prime snake (so indexes a prime snake module)."""
    seq = sorted_weight_sequence(p)
    return seq is not None and is_prime_snake(seq, p.diagram)


def has_snake_support(p: DrinfeldPolynomial) -> bool:
    """Whether the radical of p is a prime snake polynomial."""
    return poly_is_prime_snake(p.bar())


# -- single-node segments -------------------------------------------------


def segment_check(i: int, k: Sequence[int], diagram: DynkinA) -> bool:
    """Whether consecutive differences of k all lie in the node's fundamental red set."""
    diagram.check_node(i)
    full = diagram.full()
    return all(red_set_contains(full, i, i, 1, 1, k2 - k1) for k1, k2 in zip(k, k[1:]))


def segment_poly(diagram: DynkinA, i: int, k: Sequence[int], a: int) -> DrinfeldPolynomial:
    """Product of fundamentals at node i with centers a + k_s."""
    return DrinfeldPolynomial(diagram, ((i, a + ks) for ks in k))


@dataclass(frozen=True)
class Segment:
    """A validated single-node segment: strictly increasing offsets with admissible gaps."""

    diagram: DynkinA
    i: int
    k: tuple[int, ...]
    a: int = 0

    def __post_init__(self):
        if not segment_check(self.i, self.k, self.diagram):
            raise ValueError(f"{self.k} is not a segment at node {self.i}")

    def poly(self) -> DrinfeldPolynomial:
        return segment_poly(self.diagram, self.i, self.k, self.a)


# -- the monochromatic equivalence battery ---------------------------------


class MonochromeReport(NamedTuple):
    segment_form: bool
    prime_snake: bool
    fundamental_totally_ordered: bool
    qfact_totally_ordered: bool

    def all_agree(self) -> bool:
        return len(set(self)) == 1


def monochromatic_equivalence_report(p: DrinfeldPolynomial) -> MonochromeReport:
    """Evaluate the four equivalent shape conditions of a single-node polynomial.

    Each boolean is computed independently; agreement across all inputs is
    the theorem, checked by the test battery rather than assumed here.
    """
    support = p.support()
    if len(support) != 1:
        raise ValueError(f"support {sorted(support)} is not a single node")
    (i,) = support
    instances = [w.a for w in p.weights()]
    distinct = sorted(set(instances))
    segment_form = len(distinct) == len(instances) and segment_check(
        i, [c - distinct[0] for c in distinct], p.diagram
    )
    return MonochromeReport(
        segment_form=segment_form,
        prime_snake=poly_is_prime_snake(p),
        fundamental_totally_ordered=fundamental_graph(p).is_totally_ordered(),
        qfact_totally_ordered=q_fact_graph(p).is_totally_ordered(),
    )
