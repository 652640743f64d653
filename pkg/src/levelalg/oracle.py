"""Brute-force verifiers, independent of the main computational paths.

Everything here recomputes from first principles: ideal membership scans the
generator list for a divisor instead of using rank tables, monomials come
from raw nested loops, and expansions are found by exhaustive search over
index sequences rather than greedily.  Slow on purpose.
"""

from __future__ import annotations

from itertools import product
from math import comb

from .binomials import BinomialExpansion
from .hvectors import HVector
from .monomials import Monomial, MonomialIdeal


def _degree_monomials(t: int) -> list[Monomial]:
    out = []
    for e1 in range(t, -1, -1):
        for e2 in range(t - e1, -1, -1):
            out.append(Monomial(e1, e2, t - e1 - e2))
    return out


def _in_ideal(ideal: MonomialIdeal, m: Monomial) -> bool:
    return any(g.divides(m) for g in ideal.generators())


def colon_dim_direct(ideal: MonomialIdeal, var: int, t: int) -> int:
    """dim of (J : x_var)/J in degree t, by full enumeration.

    Counts degree-t monomials u outside the ideal with x_var * u inside.
    """
    return sum(
        1
        for u in _degree_monomials(t)
        if not _in_ideal(ideal, u) and _in_ideal(ideal, u.mul_var(var))
    )


def socle_dim_direct(ideal: MonomialIdeal, t: int) -> int:
    """Socle dimension of the quotient in degree t, by full enumeration."""
    return sum(
        1
        for u in _degree_monomials(t)
        if not _in_ideal(ideal, u)
        and all(_in_ideal(ideal, u.mul_var(v)) for v in (1, 2, 3))
    )


def expansion_exhaustive(n: int, i: int) -> BinomialExpansion:
    """Find the i-binomial expansion of n by searching all index sequences.

    Walks every strictly decreasing assignment n_i > n_{i-1} > ... >= index,
    keeping a branch only while the remaining indices can still reach the
    remaining sum (an exact feasibility bound, not a heuristic).  Exactly one
    assignment must survive; anything else is a bug, since existence and
    uniqueness are a theorem.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if i < 1:
        raise ValueError("i must be positive")
    if n == 0:
        return BinomialExpansion(())

    def max_reachable(idx: int, cap: int) -> int:
        # largest sum from tops strictly below cap at indices idx, idx-1, ..., 1
        total = 0
        for u in range(idx, 0, -1):
            top = cap - 1 - (idx - u)
            if top >= u:
                total += comb(top, u)
        return total

    solutions: list[tuple[tuple[int, int], ...]] = []

    def search(remaining: int, idx: int, cap: int, chosen: list[tuple[int, int]]):
        if remaining == 0:
            solutions.append(tuple(chosen))
            return
        if idx == 0 or max_reachable(idx, cap) < remaining:
            return
        top = idx
        while top < cap - 1 and comb(top + 1, idx) <= remaining:
            top += 1
        for value in range(top, idx - 1, -1):
            if comb(value, idx) + max_reachable(idx - 1, value) < remaining:
                break  # smaller tops reach even less
            chosen.append((value, idx))
            search(remaining - comb(value, idx), idx - 1, value, chosen)
            chosen.pop()

    search(n, i, n + i + 1, [])
    if len(solutions) != 1:
        raise RuntimeError(
            f"expansion search for ({n}, {i}) found {len(solutions)} representations"
        )
    return BinomialExpansion(solutions[0])


def osequence_filter(s: int, cap: int) -> set[HVector]:
    """All O-sequences (1, 3, ..., h_s) with entries <= cap and h_s > 0.

    Generate-and-filter over the full integer box; no incremental pruning.
    """
    if s == 1:
        return {HVector((1, 3))} if cap >= 3 else set()
    found = set()
    for middle in product(range(cap + 1), repeat=s - 2):
        for last in range(1, cap + 1):
            candidate = HVector((1, 3) + middle + (last,))
            if candidate.is_o_sequence():
                found.add(candidate)
    return found
