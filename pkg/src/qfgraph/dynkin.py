"""Integer arithmetic on the type A_n Dynkin diagram and its interval subdiagrams.

Nodes are labeled 1..n.  Subdiagrams are always connected intervals [lo, hi],
which is the only kind a type-A argument ever needs.  Everything here is an
immutable value and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Subdiagram:
    """The interval of nodes [lo, hi] inside some ambient type-A diagram."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 1 <= self.lo <= self.hi:
            raise ValueError(f"invalid subdiagram [{self.lo},{self.hi}]")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def contains(self, i: int) -> bool:
        return self.lo <= i <= self.hi

    def contains_interval(self, other: Subdiagram) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def boundary_distance(self, inner: Subdiagram) -> int:
        """Distance from `inner` to the boundary of this interval."""
        if not self.contains_interval(inner):
            raise ValueError(f"{inner} not contained in {self}")
        return min(inner.lo - self.lo, self.hi - inner.hi)

    def dual_node(self, i: int) -> int:
        """Image of node i under the nontrivial diagram automorphism of the interval."""
        if not self.contains(i):
            raise ValueError(f"node {i} outside subdiagram [{self.lo},{self.hi}]")
        return self.lo + self.hi - i

    def dual_coxeter(self) -> int:
        """Dual Coxeter number of the interval viewed as a type-A diagram: size + 1."""
        return self.size + 1


@dataclass(frozen=True)
class DynkinA:
    """Ambient type-A diagram of rank n."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"rank must be >= 1, got {self.n}")

    def nodes(self) -> range:
        return range(1, self.n + 1)

    def check_node(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"node {i} out of range for A{self.n}")

    def full(self) -> Subdiagram:
        return Subdiagram(1, self.n)

    def distance(self, i: int, j: int) -> int:
        """Graph distance between nodes i and j: the interval size minus one."""
        self.check_node(i)
        self.check_node(j)
        return abs(i - j)

    def boundary_distance(self, J: Subdiagram) -> int:
        """Distance from the subdiagram J to the boundary of the full diagram."""
        if J.hi > self.n:
            raise ValueError(f"{J} not contained in A{self.n}")
        return min(J.lo - 1, self.n - J.hi)

    def dual_node(self, i: int) -> int:
        """Image of node i under the longest-Weyl-element diagram automorphism."""
        self.check_node(i)
        return self.n + 1 - i

    def dual_coxeter(self) -> int:
        return self.n + 1
