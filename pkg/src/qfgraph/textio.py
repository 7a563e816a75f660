"""Shared text grammar for diagrams and polynomials.

    poly := rank ';' term*
    rank := 'A' int
    term := ('w[' int ',' int ']' | 'kr[' int ',' int ',' int ']') ('^' int)?

Whitespace between tokens is ignored.  `w[i,a]` is a fundamental factor,
`kr[i,a,r]` expands to its q-string, `^m` repeats a term m times.  The
printer emits the canonical form: w-terms sorted by (node, center) with
multiplicities folded into `^m`; an empty term list prints the identity.
"""

from __future__ import annotations

from .dynkin import DynkinA
from .weights import DrinfeldPolynomial, KRFactor


class ParseError(ValueError):
    """Syntax or range error in polynomial text, with a character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at offset {pos})")
        self.pos = pos


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise ParseError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def accept(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def parse_int(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start or self.text[start:self.pos] == "-":
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])


def parse_poly(text: str) -> tuple[DynkinA, DrinfeldPolynomial]:
    """Parse polynomial text into its diagram and Drinfeld polynomial."""
    sc = _Scanner(text)
    sc.expect("A")
    rank_pos = sc.pos
    rank = sc.parse_int()
    if rank < 1:
        raise ParseError(f"rank must be >= 1, got {rank}", rank_pos)
    diagram = DynkinA(rank)
    sc.expect(";")

    weights: list[tuple[int, int]] = []
    while not sc.at_end():
        term_pos = sc.pos
        if sc.accept("w["):
            i = sc.parse_int()
            sc.expect(",")
            a = sc.parse_int()
            sc.expect("]")
            term = [(i, a)]
        elif sc.accept("kr["):
            i = sc.parse_int()
            sc.expect(",")
            a = sc.parse_int()
            sc.expect(",")
            r = sc.parse_int()
            sc.expect("]")
            if r < 1:
                raise ParseError(f"string length must be >= 1, got {r}", term_pos)
            term = [(i, c) for c in KRFactor(i, a, r).centers()]
        else:
            raise ParseError("expected a 'w[' or 'kr[' term", sc.pos)
        if not 1 <= i <= rank:
            raise ParseError(f"node {i} out of range for A{rank}", term_pos)
        mult = 1
        if sc.accept("^"):
            mult_pos = sc.pos
            mult = sc.parse_int()
            if mult < 1:
                raise ParseError(f"multiplicity must be >= 1, got {mult}", mult_pos)
        weights.extend(term * mult)
    return diagram, DrinfeldPolynomial(diagram, weights)


def format_poly(p: DrinfeldPolynomial) -> str:
    """Canonical text for a polynomial; parse(format_poly(p)) recovers p."""
    head = f"A{p.diagram.n};"
    if p.is_identity:
        return head
    terms = " ".join(
        f"w[{w.i},{w.a}]" + (f"^{m}" if m > 1 else "") for w, m in p.items()
    )
    return f"{head} {terms}"


def format_kr(k: KRFactor) -> str:
    return f"kr({k.i},{k.a},{k.r})"
