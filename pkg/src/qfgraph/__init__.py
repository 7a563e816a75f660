"""Exact combinatorics of q-factorization graphs in type A.

Drinfeld polynomials, KR q-strings, reducibility sets, pseudo q-factorization
graphs, snake classification, mtos-quochain decompositions, and the prime
tensor factorization routes, with a text grammar and CLI on top.
"""

from .dynkin import DynkinA, Subdiagram
from .weights import (
    DrinfeldPolynomial,
    FundamentalWeight,
    KRFactor,
    kr_expand,
    kr_expand_all,
)
from .redsets import hlw_first, is_reducible_pair, red_set, red_set_contains, special_set
from .qfact import Fusion, fuse, in_special_position, q_factorization
from .graph import (
    GraphInvariantError,
    PQGraph,
    build_graph,
    fundamental_graph,
    q_fact_graph,
    tensor,
)
from .snakes import (
    MonochromeReport,
    Segment,
    Snake,
    has_snake_support,
    in_prime_snake_position,
    in_snake_position,
    is_prime_snake,
    is_snake,
    monochromatic_equivalence_report,
    poly_is_prime_snake,
    poly_is_snake,
    segment_check,
    segment_poly,
)
from .decomp import (
    FactorizationResult,
    NotApplicable,
    all_mtos_quochains,
    enumerate_mtos,
    mtos_quochain,
    prime_factorize_small,
    prime_factorize_snake_support,
    quochains_isomorphic,
    three_vertex_prime_check,
    unique_mtos_decomposition,
)
from .textio import ParseError, format_kr, format_poly, parse_poly

__all__ = [
    "DynkinA",
    "Subdiagram",
    "DrinfeldPolynomial",
    "FundamentalWeight",
    "KRFactor",
    "kr_expand",
    "kr_expand_all",
    "special_set",
    "red_set",
    "red_set_contains",
    "is_reducible_pair",
    "hlw_first",
    "Fusion",
    "fuse",
    "in_special_position",
    "q_factorization",
    "PQGraph",
    "GraphInvariantError",
    "build_graph",
    "fundamental_graph",
    "q_fact_graph",
    "tensor",
    "Snake",
    "Segment",
    "MonochromeReport",
    "in_snake_position",
    "in_prime_snake_position",
    "is_snake",
    "is_prime_snake",
    "poly_is_snake",
    "poly_is_prime_snake",
    "has_snake_support",
    "segment_check",
    "segment_poly",
    "monochromatic_equivalence_report",
    "FactorizationResult",
    "NotApplicable",
    "enumerate_mtos",
    "mtos_quochain",
    "all_mtos_quochains",
    "quochains_isomorphic",
    "unique_mtos_decomposition",
    "prime_factorize_snake_support",
    "three_vertex_prime_check",
    "prime_factorize_small",
    "ParseError",
    "parse_poly",
    "format_poly",
    "format_kr",
]
