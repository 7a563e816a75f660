"""Special position, fusion of q-strings, and the unique q-factorization.

Two same-node KR factors are in special position when their q-strings merge
into a single strictly longer string; fusing such a pair replaces it by the
union string and (when the strings overlap) the intersection string.  The
q-factorization of a Drinfeld polynomial is the terminal state of fusing away
all special pairs; the terminal multiset is independent of the fusion order
(tested against randomized schedules, not assumed).
"""

from __future__ import annotations

from typing import NamedTuple

from .weights import DrinfeldPolynomial, KRFactor


class Fusion(NamedTuple):
    big: KRFactor
    small: KRFactor | None
    pure: bool


def in_special_position(k1: KRFactor, k2: KRFactor) -> bool:
    """Same node, same string parity, strings overlap or touch, neither contains the other."""
    if k1.i != k2.i:
        return False
    gap = abs(k1.a - k2.a)
    if (gap + k1.r + k2.r) % 2:
        return False
    return abs(k1.r - k2.r) < gap <= k1.r + k2.r


def fuse(k1: KRFactor, k2: KRFactor) -> Fusion:
    """Fuse a special-position pair into (union string, intersection string).

    The fusion is pure when the intersection is empty, i.e. the union has
    length r1 + r2.
    """
    if not in_special_position(k1, k2):
        raise ValueError(f"{k1} and {k2} are not in special position")
    big = KRFactor.from_span(k1.i, min(k1.lo, k2.lo), max(k1.hi, k2.hi))
    ilo, ihi = max(k1.lo, k2.lo), min(k1.hi, k2.hi)
    if ilo > ihi:
        return Fusion(big, None, True)
    return Fusion(big, KRFactor.from_span(k1.i, ilo, ihi), False)


def q_factorization(p: DrinfeldPolynomial) -> tuple[KRFactor, ...]:
    """The unique multiset of KR factors expanding to p with no special pair.

    Starts from the fundamental factors as length-1 strings and repeatedly
    fuses the lexicographically first special pair (per node); the order is
    fixed for determinism, and order-independence is verified separately.
    """
    out: list[KRFactor] = []
    by_node: dict[int, list[KRFactor]] = {}
    for w in p.weights():
        by_node.setdefault(w.i, []).append(KRFactor(w.i, w.a, 1))
    for node in sorted(by_node):
        work = sorted(by_node[node])
        while True:
            pair = None
            for x in range(len(work)):
                for y in range(x + 1, len(work)):
                    if in_special_position(work[x], work[y]):
                        pair = (x, y)
                        break
                if pair:
                    break
            if pair is None:
                break
            x, y = pair
            f = fuse(work[x], work[y])
            del work[y], work[x]
            work.append(f.big)
            if f.small is not None:
                work.append(f.small)
            work.sort()
        out.extend(work)
    return tuple(sorted(out))
