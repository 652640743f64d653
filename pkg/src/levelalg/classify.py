"""Level / NotLevel / Unknown classification of codimension-3 h-vectors.

Each obstruction rule inspects the graded Betti numbers of the lex-segment
ideal (or the h-vector window around a degree d) and, when it fires, records
a certificate holding every integer it compared, so the verdict can be
replayed from the certificate alone.  If no obstruction fires and the vector
is differentiable, it is a level O-sequence: any differentiable O-sequence is
the truncation of a Gorenstein one.  Otherwise the honest answer is Unknown;
the implemented criteria are not a complete classification.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binomials import binomial, green_bound
from .errors import ConsistencyError
from .hvectors import HVector, growth_violation
from .monomials import lex_segment_ideal
from .betti import ek_betti, lex_betti_window

R_CANCEL = "R-CANCEL"
R_31 = "R-31"
R_33 = "R-33"
R_37 = "R-37"
R_42 = "R-42"
R_44A = "R-44A"
R_AS = "R-AS"
R_LEVEL_DIFF = "R-LEVEL-DIFF"

NOT_LEVEL_RULES = (R_CANCEL, R_31, R_33, R_37, R_42, R_44A, R_AS)

LEVEL = "Level"
NOT_LEVEL = "NotLevel"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Certificate:
    """A fired rule, its position d, and the integers it compared."""

    rule: str
    d: int
    quantities: dict[str, int]

    def as_dict(self) -> dict:
        return {"rule": self.rule, "d": self.d, "quantities": dict(self.quantities)}


@dataclass(frozen=True)
class Verdict:
    kind: str
    certificates: tuple[Certificate, ...]

    def as_dict(self) -> dict:
        return {
            "verdict": self.kind,
            "certificates": [c.as_dict() for c in self.certificates],
        }


def replay_certificate(cert: Certificate) -> bool:
    """Re-evaluate a certificate's inequality from its stored quantities."""
    q = cert.quantities
    if cert.rule == R_CANCEL:
        return q["beta2_d2"] > q["beta1_d2"]
    if cert.rule == R_31:
        return q["beta1_d2"] == q["beta2_d2"] > 0 and q["beta2_d3"] > 0
    if cert.rule == R_33:
        equal_case = q["h_dm1"] == q["h_d"] == q["h_dp1"] == cert.d + 1
        increasing = q["h_dm1"] < q["h_d"] < q["h_dp1"]
        return (
            q["beta1_d2"] == q["beta2_d2"] > 0 and not equal_case and not increasing
        )
    if cert.rule == R_37:
        return (
            q["beta1_d2"] == q["beta2_d2"] > 0
            and 0 < q["delta_hd"]
            and 0 < q["delta_hd1"]
            and q["delta_hd"] != q["delta_hd1"]
        )
    if cert.rule == R_42:
        return (
            q["delta_hd"] == 0
            and q["delta_hd1"] > 0
            and q["green_hd1"] <= 2 * q["delta_hd1"]
        )
    if cert.rule == R_44A:
        return q["delta_hd"] == 0 and q["delta_hd1"] > 0 and q["h_d"] <= q["bound"]
    if cert.rule == R_AS:
        return q["delta_hd"] < 0 and q["delta_hd1"] == 0 and q["h_d"] <= q["bound"]
    if cert.rule == R_LEVEL_DIFF:
        diff = [q[f"delta_{i}"] for i in range(len(q))]
        return growth_violation(diff) is None
    raise ValueError(f"unknown rule {cert.rule!r}")


def classify(h: HVector) -> Verdict:
    """Classify a codimension-3 O-sequence as Level, NotLevel, or Unknown.

    Obstruction rules run at every interior position 2 <= d <= s-1 (the two
    end-restricted rules only at d = s-1) and all firing certificates are
    collected.  Betti input comes from the resolution of the actual lex
    ideal; where the closed-form window applies it is asserted to agree.
    """
    violation = h.o_sequence_violation()
    if violation is not None:
        raise ValueError(f"not an O-sequence (violation at index {violation})")
    if not h.codim3():
        raise ValueError("classification requires h_1 = 3")
    s = h.socle_degree
    if s < 2:
        raise ValueError("classification requires socle degree at least 2")

    diagram = ek_betti(lex_segment_ideal(h))
    fired: list[Certificate] = []
    for d in range(2, s):
        beta1 = diagram.beta(1, d + 2)
        beta2 = diagram.beta(2, d + 2)
        beta2_next = diagram.beta(2, d + 3)
        if h.at(d) < binomial(d + 2, 2):
            window = lex_betti_window(h, d)
            if window != (beta1, beta2, beta2_next):
                raise ConsistencyError(
                    f"closed-form window {window} != resolution values "
                    f"{(beta1, beta2, beta2_next)} at d={d} for {h}"
                )
        h_dm1, h_d, h_dp1 = h.at(d - 1), h.at(d), h.at(d + 1)
        delta_hd, delta_hd1 = h_d - h_dm1, h_dp1 - h_d

        if beta2 > beta1:
            fired.append(
                Certificate(R_CANCEL, d, {"beta1_d2": beta1, "beta2_d2": beta2})
            )
        if beta1 == beta2 > 0 and beta2_next > 0:
            fired.append(
                Certificate(
                    R_31,
                    d,
                    {"beta1_d2": beta1, "beta2_d2": beta2, "beta2_d3": beta2_next},
                )
            )
        if (
            beta1 == beta2 > 0
            and not (h_dm1 == h_d == h_dp1 == d + 1)
            and not (h_dm1 < h_d < h_dp1)
        ):
            fired.append(
                Certificate(
                    R_33,
                    d,
                    {
                        "beta1_d2": beta1,
                        "beta2_d2": beta2,
                        "h_dm1": h_dm1,
                        "h_d": h_d,
                        "h_dp1": h_dp1,
                    },
                )
            )
        if beta1 == beta2 > 0 and h_dm1 < h_d < h_dp1 and delta_hd != delta_hd1:
            fired.append(
                Certificate(
                    R_37,
                    d,
                    {
                        "beta1_d2": beta1,
                        "beta2_d2": beta2,
                        "delta_hd": delta_hd,
                        "delta_hd1": delta_hd1,
                    },
                )
            )
        if h_dm1 == h_d < h_dp1:
            green_next = green_bound(h_dp1, d + 1)
            if green_next <= 2 * delta_hd1:
                fired.append(
                    Certificate(
                        R_42,
                        d,
                        {
                            "delta_hd": delta_hd,
                            "delta_hd1": delta_hd1,
                            "green_hd1": green_next,
                        },
                    )
                )
        if d + 1 == s:
            if h_dm1 == h_d < h_dp1 and h_d <= 3 * d + 2:
                fired.append(
                    Certificate(
                        R_44A,
                        d,
                        {
                            "delta_hd": delta_hd,
                            "delta_hd1": delta_hd1,
                            "h_d": h_d,
                            "bound": 3 * d + 2,
                        },
                    )
                )
            if h_dm1 > h_d == h_dp1 and h_d <= 2 * d + 3:
                fired.append(
                    Certificate(
                        R_AS,
                        d,
                        {
                            "delta_hd": delta_hd,
                            "delta_hd1": delta_hd1,
                            "h_d": h_d,
                            "bound": 2 * d + 3,
                        },
                    )
                )

    if fired:
        return Verdict(NOT_LEVEL, tuple(fired))
    if h.is_differentiable():
        diff = h.first_difference()
        quantities = {f"delta_{i}": value for i, value in enumerate(diff)}
        return Verdict(LEVEL, (Certificate(R_LEVEL_DIFF, s, quantities),))
    return Verdict(UNKNOWN, ())


def iarrobino_lift(base: HVector) -> HVector:
    """Adjoin a general form of top degree: entrywise min-with-cap lift.

    For a base with socle degree s the result has H_0 = 1 and
    H_i = min(h_i + C(2+s-i, s-i), C(2+i, i)) for 1 <= i <= s.  When the base
    is the Hilbert function of a level algebra, so is the lift; that claim is
    inherited, not checked, since levelness is not determined by the base
    h-vector alone.
    """
    s = base.socle_degree
    lifted = [1]
    for i in range(1, s + 1):
        lifted.append(min(base.at(i) + binomial(2 + s - i, s - i), binomial(2 + i, i)))
    return HVector(tuple(lifted))


def construct_plateau_level(d: int, ell: int) -> tuple[HVector, HVector]:
    """Build a level O-sequence with H_{d-1} = H_d = 3d+ell < H_{d+1}.

    Starts from the differentiable base h_i = min(C(i+2,2), 3i + ell - 3)
    of socle degree d+1 and lifts it.  Returns (base, lift).  Raises
    ValueError when the base fails to be differentiable or when the lift
    misses the plateau postconditions H_{d-1} = H_d = 3d+ell and
    H_{d+1} = 3d+ell+1 (the caps bind for small d relative to ell, where no
    such plateau exists).
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if ell < 3:
        raise ValueError("ell must be at least 3")
    base = HVector(
        (1,) + tuple(min(binomial(i + 2, 2), 3 * i + ell - 3) for i in range(1, d + 2))
    )
    if not base.is_differentiable():
        raise ValueError(f"base {base} is not differentiable for d={d}, ell={ell}")
    lifted = iarrobino_lift(base)
    target = 3 * d + ell
    if not (
        lifted.at(d - 1) == lifted.at(d) == target
        and lifted.at(d + 1) == target + 1
    ):
        raise ValueError(
            f"lift {lifted} misses the plateau {target},{target},{target + 1} "
            f"at degrees {d - 1}..{d + 1} for d={d}, ell={ell}"
        )
    return base, lifted
