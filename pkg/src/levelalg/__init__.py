"""Exact decision tools for level O-sequences in codimension 3.

Given a candidate Hilbert function H = (1, 3, h_2, ..., h_s), the package
constructs the lex-segment ideal with that Hilbert function, computes its
graded Betti numbers combinatorially, and applies obstruction and
construction criteria to decide whether an Artinian level algebra with
Hilbert function H can exist.  All arithmetic is exact, and the brute-force
:mod:`levelalg.oracle` module re-derives the key quantities independently.
"""

from .binomials import (
    BinomialExpansion,
    binomial,
    green_bound,
    green_macaulay_defect,
    macaulay_bound,
    macaulay_expansion,
    shift,
)
from .hvectors import HVector, enumerate_o_sequences, growth_violation
from .monomials import (
    Monomial,
    MonomialIdeal,
    count_gens_div_x3,
    lex_compare,
    lex_rank,
    lex_segment_ideal,
    monomial_at,
    monomial_count,
    monomials_of_degree,
    quotient_hf,
    reduction_number_r1_lex,
    restricted_hf,
    socle_dims,
)
from .betti import (
    BettiDiagram,
    ek_betti,
    lex_betti_window,
    numerator_check,
    render_diagram,
)
from .classify import (
    Certificate,
    Verdict,
    classify,
    construct_plateau_level,
    iarrobino_lift,
    replay_certificate,
)
from .errors import ConsistencyError

__all__ = [
    "BettiDiagram",
    "BinomialExpansion",
    "Certificate",
    "ConsistencyError",
    "HVector",
    "Monomial",
    "MonomialIdeal",
    "Verdict",
    "binomial",
    "classify",
    "construct_plateau_level",
    "count_gens_div_x3",
    "ek_betti",
    "enumerate_o_sequences",
    "green_bound",
    "green_macaulay_defect",
    "growth_violation",
    "iarrobino_lift",
    "lex_betti_window",
    "lex_compare",
    "lex_rank",
    "lex_segment_ideal",
    "macaulay_bound",
    "macaulay_expansion",
    "monomial_at",
    "monomial_count",
    "monomials_of_degree",
    "numerator_check",
    "quotient_hf",
    "reduction_number_r1_lex",
    "render_diagram",
    "replay_certificate",
    "restricted_hf",
    "shift",
    "socle_dims",
]
