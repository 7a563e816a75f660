"""Fundamental l-weights, KR q-strings, and Drinfeld polynomials as multisets.

A Drinfeld polynomial is represented by the multiset of its fundamental
factors (node, spectral center); centers are plain integers, exponents of q.
The empty multiset is the identity and is a legal value everywhere.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, NamedTuple

from .dynkin import DynkinA


class FundamentalWeight(NamedTuple):
    i: int
    a: int


class KRFactor(NamedTuple):
    """A Kirillov-Reshetikhin datum: node i, spectral center a, string length r.

    Its q-string is the arithmetic progression of centers a-r+1, a-r+3, ..,
    a+r-1 (step 2), so a KR factor and its q-string span determine each other.
    """

    i: int
    a: int
    r: int

    @property
    def lo(self) -> int:
        return self.a - self.r + 1

    @property
    def hi(self) -> int:
        return self.a + self.r - 1

    def centers(self) -> range:
        return range(self.lo, self.hi + 1, 2)

    def is_fundamental(self) -> bool:
        return self.r == 1

    @classmethod
    def from_span(cls, i: int, lo: int, hi: int) -> "KRFactor":
        """Recover the unique KR factor whose q-string spans [lo, hi]."""
        if hi < lo or (hi - lo) % 2:
            raise ValueError(f"invalid q-string span [{lo},{hi}]")
        return cls(i, (lo + hi) // 2, (hi - lo) // 2 + 1)

    def validate(self, diagram: DynkinA) -> None:
        diagram.check_node(self.i)
        if self.r < 1:
            raise ValueError(f"string length must be >= 1, got {self.r}")


class DrinfeldPolynomial:
    """Finite multiset of fundamental l-weights over a fixed diagram.

    Instances are immutable; all operations return new values.  Factors are
    kept canonically sorted by (node, center) so equal multisets compare and
    hash equal and print deterministically.
    """

    __slots__ = ("diagram", "_items")

    def __init__(self, diagram: DynkinA, weights: Iterable[tuple[int, int]] = ()):
        counts = Counter(FundamentalWeight(i, a) for i, a in weights)
        for w in counts:
            diagram.check_node(w.i)
        self.diagram = diagram
        self._items = tuple(sorted(counts.items()))

    @classmethod
    def identity(cls, diagram: DynkinA) -> "DrinfeldPolynomial":
        return cls(diagram)

    @classmethod
    def from_counts(cls, diagram: DynkinA, counts: dict[tuple[int, int], int]) -> "DrinfeldPolynomial":
        for (i, a), m in counts.items():
            if m < 1:
                raise ValueError(f"multiplicity must be >= 1, got {m} for w[{i},{a}]")
        return cls(diagram, ((i, a) for (i, a), m in counts.items() for _ in range(m)))

    # -- multiset views ------------------------------------------------

    def items(self) -> tuple[tuple[FundamentalWeight, int], ...]:
        """Factors with multiplicities, sorted by (node, center)."""
        return self._items

    def weights(self) -> Iterator[FundamentalWeight]:
        """All factor instances, multiplicities expanded, in canonical order."""
        for w, m in self._items:
            for _ in range(m):
                yield w

    def counter(self) -> Counter:
        return Counter(dict(self._items))

    def multiplicity(self, i: int, a: int) -> int:
        return dict(self._items).get(FundamentalWeight(i, a), 0)

    @property
    def n_factors(self) -> int:
        return sum(m for _, m in self._items)

    @property
    def is_identity(self) -> bool:
        return not self._items

    def support(self) -> frozenset[int]:
        return frozenset(w.i for w, _ in self._items)

    # -- monoid structure ----------------------------------------------

    def __mul__(self, other: "DrinfeldPolynomial") -> "DrinfeldPolynomial":
        if self.diagram != other.diagram:
            raise ValueError("cannot multiply polynomials over different diagrams")
        c = self.counter()
        c.update(other.counter())
        return DrinfeldPolynomial.from_counts(self.diagram, c)

    def divides(self, other: "DrinfeldPolynomial") -> bool:
        """Multiset containment: every factor of self occurs in other at least as often."""
        if self.diagram != other.diagram:
            return False
        theirs = dict(other._items)
        return all(theirs.get(w, 0) >= m for w, m in self._items)

    def quotient(self, other: "DrinfeldPolynomial") -> "DrinfeldPolynomial":
        """Multiset difference self / other; other must divide self."""
        if not other.divides(self):
            raise ValueError(f"{other!r} does not divide {self!r}")
        c = self.counter()
        c.subtract(other.counter())
        return DrinfeldPolynomial(self.diagram, (w for w, m in c.items() for _ in range(m)))

    def __truediv__(self, other: "DrinfeldPolynomial") -> "DrinfeldPolynomial":
        return self.quotient(other)

    # -- radical and duals ----------------------------------------------

    def bar(self) -> "DrinfeldPolynomial":
        """One copy of each fundamental factor (all multiplicities collapsed to 1)."""
        return DrinfeldPolynomial(self.diagram, (w for w, _ in self._items))

    def dual(self) -> "DrinfeldPolynomial":
        h = self.diagram.dual_coxeter()
        return DrinfeldPolynomial(
            self.diagram,
            ((self.diagram.dual_node(w.i), w.a - h) for w in self.weights()),
        )

    def codual(self) -> "DrinfeldPolynomial":
        h = self.diagram.dual_coxeter()
        return DrinfeldPolynomial(
            self.diagram,
            ((self.diagram.dual_node(w.i), w.a + h) for w in self.weights()),
        )

    # -- value semantics --------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DrinfeldPolynomial)
            and self.diagram == other.diagram
            and self._items == other._items
        )

    def __hash__(self) -> int:
        return hash((self.diagram, self._items))

    def __repr__(self) -> str:
        if self.is_identity:
            return f"DrinfeldPolynomial(A{self.diagram.n}, 1)"
        body = " ".join(
            f"w[{w.i},{w.a}]" + (f"^{m}" if m > 1 else "") for w, m in self._items
        )
        return f"DrinfeldPolynomial(A{self.diagram.n}, {body})"


def kr_expand(diagram: DynkinA, k: KRFactor) -> DrinfeldPolynomial:
    """The Drinfeld polynomial of a KR factor: one fundamental per string center."""
    k.validate(diagram)
    return DrinfeldPolynomial(diagram, ((k.i, c) for c in k.centers()))


def kr_expand_all(diagram: DynkinA, krs: Iterable[KRFactor]) -> DrinfeldPolynomial:
    """Product of the expansions of a multiset of KR factors."""
    weights = []
    for k in krs:
        k.validate(diagram)
        weights.extend((k.i, c) for c in k.centers())
    return DrinfeldPolynomial(diagram, weights)
