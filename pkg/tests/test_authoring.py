import math
import re
import xml.etree.ElementTree as ET
from collections import Counter

import pytest

from puzzlekit.authoring import (assemble_mcq, format_question, gen_distractors, numeric_range,
                                 render_svg)
from puzzlekit.core import ClockTime, Integer, InvalidInstanceError, Label, PuzzleKind, Rng, Weekday, YesNo
from puzzlekit.gridlogic import TilingInstance, gen_colour_hue
from puzzlekit.mechanics import gen_wheel
from puzzlekit.pipeline.registry import entry
from puzzlekit.sliding import HanoiInstance, HanoiState, JugsInstance, JugState

SVG_NS = "{http://www.w3.org/2000/svg}"


@pytest.mark.parametrize("kind", list(PuzzleKind))
def test_svg_parses_and_is_deterministic(kind):
    for seed in range(5):
        payload = entry(kind).generate(Rng(seed))
        svg = render_svg(kind, payload)
        root = ET.fromstring(svg)
        assert root.tag in ("svg", SVG_NS + "svg")
        assert svg == render_svg(kind, entry(kind).generate(Rng(seed)))
        assert format_question(kind, payload)


def test_hue_fills_are_the_instance_colours():
    board = gen_colour_hue(Rng(3))
    svg = render_svg(PuzzleKind.COLOUR_HUE, board)
    fills = set(re.findall(r'fill="(#[0-9a-f]{6})"', svg))
    for rgb in board.ideal:
        assert "#{:02x}{:02x}{:02x}".format(*rgb) in fills


def test_unknown_kind_has_no_renderer():
    with pytest.raises(RuntimeError):
        render_svg("origami", None)


def test_question_slots():
    tiling = TilingInstance(6, 9, ((0, 0), (2, 5)))
    assert "originally of 6 * 9 in dimension" in format_question(PuzzleKind.BOARD_TILING, tiling)
    hanoi = HanoiInstance(HanoiState(5, (0,) * 5), HanoiState(5, (2,) * 5))
    assert "3 rods and 5 disks" in format_question(PuzzleKind.TOWER_OF_HANOI, hanoi)
    jugs = JugsInstance(JugState((6, 5, 1), (3, 2, 1)), (4, 1, 1))
    assert "capacities 6, 5, 1 litres" in format_question(PuzzleKind.WATER_JUGS, jugs)


@pytest.mark.parametrize("gold,band", [(0, (1, 6)), (3, (1, 6)), (6, (1, 6)), (7, (1, 10)),
                                       (42, (1, 50)), (51, (1, 100)), (100, (1, 100)),
                                       (150, (100, 200))])
def test_numeric_ladder(gold, band):
    assert numeric_range(gold) == band
    rng = Rng(gold)
    for _ in range(50):
        vals = [d.value for d in gen_distractors(Integer(gold), PuzzleKind.N_QUEENS, rng)]
        assert len(set(vals)) == 3 and gold not in vals
        assert all(band[0] <= v <= band[1] for v in vals)


def test_other_answer_families():
    rng = Rng(1)
    assert gen_distractors(YesNo(True), PuzzleKind.BOARD_TILING, rng) == [YesNo(False)]
    with pytest.raises(InvalidInstanceError):
        gen_distractors(Integer(3), PuzzleKind.BOARD_TILING, rng)
    with pytest.raises(InvalidInstanceError):
        gen_distractors(YesNo(True), PuzzleKind.CLOCK, rng)
    gold = ClockTime(12, 5)
    for d in gen_distractors(gold, PuzzleKind.CLOCK, rng):
        gap = (d.minutes_past_twelve - gold.minutes_past_twelve) % 720
        assert d != gold and min(gap, 720 - gap) <= 59
    days = gen_distractors(Weekday(2), PuzzleKind.CALENDAR, rng)
    assert len(set(days)) == 3 and Weekday(2) not in days


def test_wheel_distractors_come_from_the_wheel():
    for seed in range(100):
        spec, _, gold = gen_wheel(Rng(seed))
        prizes = [s.label for s in spec.segments]
        if len(set(prizes)) < 4:
            with pytest.raises(InvalidInstanceError):
                gen_distractors(gold, PuzzleKind.WHEEL_OF_FORTUNE, Rng(seed), prizes)
            continue
        ds = gen_distractors(gold, PuzzleKind.WHEEL_OF_FORTUNE, Rng(seed), prizes)
        assert len(set(ds)) == 3 and gold not in ds
        assert all(d.text in prizes for d in ds)
    with pytest.raises(InvalidInstanceError):
        gen_distractors(Label("a"), PuzzleKind.WHEEL_OF_FORTUNE, Rng(0), ["a", "b", "c"])


def test_assembly_shapes():
    item = assemble_mcq("q", YesNo(False), [YesNo(True)], Rng(0))
    assert len(item.options) == 2 and {t for _, t in item.options} == {"Yes", "No"}
    assert item.option_map()[item.answer_letter] == "No"
    with pytest.raises(InvalidInstanceError):
        assemble_mcq("q", Integer(2), [Integer(2), Integer(3), Integer(4)], Rng(0))


def test_gold_letter_is_uniform():
    rng = Rng(99)
    letters = Counter()
    n = 4000
    for _ in range(n):
        item = assemble_mcq("q", Integer(5), [Integer(1), Integer(2), Integer(3)], rng)
        assert [t for _, t in item.options].count("5") == 1
        assert item.option_map()[item.answer_letter] == "5"
        letters[item.answer_letter] += 1
    sigma = math.sqrt(n * 0.25 * 0.75)
    assert set(letters) == set("ABCD")
    assert all(abs(letters[k] - n / 4) <= 3 * sigma for k in "ABCD"), letters
