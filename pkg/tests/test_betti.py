import random

import pytest

from levelalg import (
    BettiDiagram,
    HVector,
    Monomial,
    MonomialIdeal,
    binomial,
    count_gens_div_x3,
    ek_betti,
    lex_betti_window,
    lex_segment_ideal,
    numerator_check,
    render_diagram,
    socle_dims,
)

from _support import PAPER_BETTI, random_o_sequence, random_stable_ideal


def test_diagram_invariants_enforced():
    with pytest.raises(ValueError):
        BettiDiagram((((0, 2), 0),))  # zero multiplicity
    with pytest.raises(ValueError):
        BettiDiagram((((3, 5), 1),))  # q out of range
    with pytest.raises(ValueError):
        BettiDiagram((((1, 3), 1),))  # no earlier syzygy below shift 3


def test_ek_betti_maximal_ideal_square():
    diagram = ek_betti(lex_segment_ideal(HVector((1, 3))))
    assert diagram.as_dict() == {(0, 2): 6, (1, 3): 8, (2, 4): 3}


@pytest.mark.parametrize("entries", sorted(PAPER_BETTI))
def test_ek_betti_reproduces_reference_tables(entries):
    diagram = ek_betti(lex_segment_ideal(HVector(entries)))
    assert diagram.as_dict() == PAPER_BETTI[entries]


def test_ek_betti_rejects_non_stable():
    with pytest.raises(ValueError):
        ek_betti(MonomialIdeal([Monomial(0, 2, 0)]))


@pytest.mark.parametrize(
    "entries,d,window",
    [
        ((1, 3, 6, 10, 15, 16, 18), 5, (2, 2, 1)),
        ((1, 3, 6, 10, 15, 16, 18, 20), 5, (2, 2, 1)),
        ((1, 3, 6, 10, 12, 14, 16, 18, 19, 20), 4, (1, 1, 0)),
        ((1, 3, 5, 6, 6, 6, 6), 5, (1, 1, 0)),
        ((1, 3, 6, 10, 13, 15, 17, 19, 20), 5, (1, 1, 0)),
    ],
)
def test_lex_betti_window_examples(entries, d, window):
    assert lex_betti_window(HVector(entries), d) == window


def test_lex_betti_window_falls_back_when_ring_is_full():
    h = HVector((1, 3, 6, 10))
    diagram = ek_betti(lex_segment_ideal(h))
    for d in range(1, 4):
        assert h.at(d) == binomial(d + 2, 2)  # closed form never applies
        assert lex_betti_window(h, d) == (
            diagram.beta(1, d + 2),
            diagram.beta(2, d + 2),
            diagram.beta(2, d + 3),
        )


def test_lex_betti_window_bounds_checked():
    with pytest.raises(ValueError):
        lex_betti_window(HVector((1, 3, 4)), 0)
    with pytest.raises(ValueError):
        lex_betti_window(HVector((1, 3, 4)), 3)


def test_window_agrees_with_resolution_everywhere():
    rng = random.Random(31)
    for _ in range(40):
        h = random_o_sequence(rng, max_s=7, cap=25)
        diagram = ek_betti(lex_segment_ideal(h))
        for d in range(1, h.socle_degree + 1):
            assert lex_betti_window(h, d) == (
                diagram.beta(1, d + 2),
                diagram.beta(2, d + 2),
                diagram.beta(2, d + 3),
            ), (h, d)


def test_numerator_identity():
    assert numerator_check(lex_segment_ideal(HVector((1, 3))))
    assert numerator_check(lex_segment_ideal(HVector((1, 3, 5, 6, 6, 6, 6))))
    with pytest.raises(ValueError):
        numerator_check(MonomialIdeal([Monomial(1, 0, 0)]))


def test_socle_duality_and_colon_link():
    rng = random.Random(37)
    for _ in range(30):
        ideal = random_stable_ideal(rng)
        diagram = ek_betti(ideal)
        dims = socle_dims(ideal)
        shifts = {j for (q, j) in diagram.as_dict() if q == 2}
        for j in shifts | {t + 3 for t in dims}:
            assert diagram.beta(2, j) == dims.get(j - 3, 0), (ideal, j)
        for g in ideal.generator_degrees():
            assert diagram.beta(2, g + 2) == count_gens_div_x3(ideal, g)


def test_render_maximal_ideal_square():
    diagram = ek_betti(lex_segment_ideal(HVector((1, 3))))
    assert render_diagram(diagram) == "\n".join(
        [
            "total: 1 6 8 3",
            "    0: 1 . . .",
            "    1: . 6 8 3",
        ]
    )


def test_render_empty_diagram():
    assert render_diagram(BettiDiagram(())) == "\n".join(
        [
            "total: 1 . . .",
            "    0: 1 . . .",
        ]
    )


def test_render_plateau_window_rows():
    # h_d = 3d+2 and h_{d+1} = 3d+3 at d = 6: the stratum rows around d
    diagram = ek_betti(lex_segment_ideal(HVector((1, 3, 6, 10, 15, 20, 20, 21))))
    rows = {
        line.split(":")[0].strip(): line.split(":")[1].split()
        for line in render_diagram(diagram).splitlines()
    }
    assert rows["6"] == [".", "2", "4", "2"]
    assert rows["5"][-1] == "3"
