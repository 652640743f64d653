"""Graded Betti numbers of stable monomial ideals and their closed forms.

The minimal free resolution of a stable ideal is combinatorial: each minimal
generator T of degree g contributes C(m(T)-1, q) to the Betti number in
homological degree q and shift g + q.  In three variables the projective
dimension of an ideal is at most 2, so diagrams carry q in {0, 1, 2}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomials import binomial, green_bound, macaulay_bound
from .hvectors import HVector
from .monomials import MonomialIdeal, lex_segment_ideal, quotient_hf


@dataclass(frozen=True, eq=True)
class BettiDiagram:
    """Map (homological index q, shift j) -> multiplicity, for an ideal.

    Zero entries are absent.  Shifts are minimal: every entry in homological
    degree q >= 1 sits strictly above some entry in degree q - 1.
    """

    entries: tuple[tuple[tuple[int, int], int], ...]

    def __post_init__(self):
        seen = {}
        for (q, j), mult in self.entries:
            if mult <= 0:
                raise ValueError("multiplicities must be positive")
            if not 0 <= q <= 2:
                raise ValueError("homological index must be 0, 1, or 2")
            if (q, j) in seen:
                raise ValueError("duplicate (q, shift) entry")
            seen[(q, j)] = mult
        for (q, j) in seen:
            if q >= 1 and not any(
                qq == q - 1 and jj < j for (qq, jj) in seen
            ):
                raise ValueError(f"shift {j} at q={q} has no earlier syzygy below it")

    @classmethod
    def from_dict(cls, data: dict[tuple[int, int], int]) -> "BettiDiagram":
        items = tuple(sorted((key, mult) for key, mult in data.items() if mult))
        return cls(items)

    def beta(self, q: int, j: int) -> int:
        return dict(self.entries).get((q, j), 0)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def total(self, q: int) -> int:
        return sum(mult for (qq, _), mult in self.entries if qq == q)

    def max_shift(self) -> int:
        return max((j for (_, j), _ in self.entries), default=0)

    def triples(self) -> list[dict[str, int]]:
        """Sorted ``{"q": ..., "shift": ..., "mult": ...}`` records."""
        return [
            {"q": q, "shift": j, "mult": mult}
            for (q, j), mult in sorted(self.entries)
        ]


def ek_betti(ideal: MonomialIdeal) -> BettiDiagram:
    """Graded Betti numbers of a stable monomial ideal."""
    if not ideal.is_stable():
        raise ValueError("ek_betti requires a stable ideal")
    entries: dict[tuple[int, int], int] = {}
    for gen in ideal.generators():
        top = gen.max_var()
        for q in range(3):
            mult = binomial(top - 1, q)
            if mult:
                key = (q, gen.degree + q)
                entries[key] = entries.get(key, 0) + mult
    return BettiDiagram.from_dict(entries)


def lex_betti_window(h: HVector, d: int) -> tuple[int, int, int]:
    """(beta_1 at d+2, beta_2 at d+2, beta_2 at d+3) for the lex ideal of h.

    When h_d < C(d+2, 2) these come from the closed forms in terms of
    Macaulay and Green bounds; otherwise the window falls back to the direct
    resolution of the constructed lex ideal, which is always valid.
    """
    if not 1 <= d <= h.socle_degree:
        raise ValueError("d must satisfy 1 <= d <= socle degree")
    h_d, h_next = h.at(d), h.at(d + 1)
    if h_d < binomial(d + 2, 2):
        beta2 = h.at(d - 1) - h_d + green_bound(h_d, d)
        beta1 = macaulay_bound(h_d, d) + h_d - 2 * h_next + green_bound(h_next, d + 1)
        beta2_next = h_d - h_next + green_bound(h_next, d + 1)
        return beta1, beta2, beta2_next
    diagram = ek_betti(lex_segment_ideal(h))
    return (
        diagram.beta(1, d + 2),
        diagram.beta(2, d + 2),
        diagram.beta(2, d + 3),
    )


def _quotient_vanishing_degree(ideal: MonomialIdeal) -> int:
    if not ideal.has_finite_colength():
        raise ValueError("quotient Hilbert series is not a polynomial")
    bound = sum(ideal.pure_power_exponent(v) for v in (1, 2, 3))
    hf = quotient_hf(ideal, bound)
    t = 0
    while hf[t] != 0:
        t += 1
    return t


def numerator_check(ideal: MonomialIdeal) -> bool:
    """Hilbert-series numerator identity as an independent consistency check.

    Compares 1 - beta_0(t) + beta_1(t) - beta_2(t) against (1-t)^3 times the
    quotient Hilbert series, coefficient by coefficient.
    """
    diagram = ek_betti(ideal)
    vanish = _quotient_vanishing_degree(ideal)
    hf = quotient_hf(ideal, max(vanish - 1, 0))

    size = max(diagram.max_shift(), vanish + 3) + 1
    lhs = [0] * size
    lhs[0] = 1
    for (q, j), mult in diagram.entries:
        lhs[j] += mult * (-1) ** (q + 1)

    cube = [1, -3, 3, -1]  # coefficients of (1-t)^3
    rhs = [0] * size
    for t, value in enumerate(hf):
        for k, c in enumerate(cube):
            rhs[t + k] += value * c
    return lhs == rhs


def render_diagram(diagram: BettiDiagram) -> str:
    """Text form of the diagram in the quotient convention.

    The quotient's resolution is the ideal's shifted one step with a rank-1
    module at the origin, so column q' holds the ideal's entries for q'-1.
    Rows are strata r = shift - q'; zeros print as dots.
    """
    quotient = {(0, 0): 1}
    for (q, j), mult in diagram.entries:
        quotient[(q + 1, j)] = mult
    max_stratum = max(j - q for (q, j) in quotient)
    cols = range(4)
    totals = [sum(mult for (q, _), mult in quotient.items() if q == c) for c in cols]

    def cell(value: int) -> str:
        return str(value) if value else "."

    grid = [("total:", [cell(v) for v in totals])]
    for r in range(max_stratum + 1):
        grid.append((f"{r}:", [cell(quotient.get((c, r + c), 0)) for c in cols]))
    label_width = max(len(label) for label, _ in grid)
    widths = [max(len(row[c]) for _, row in grid) for c in cols]
    lines = [
        " ".join(
            [label.rjust(label_width)] + [row[c].rjust(widths[c]) for c in cols]
        )
        for label, row in grid
    ]
    return "\n".join(lines)
