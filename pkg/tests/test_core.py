import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from puzzlekit.core import (ALL_KINDS, ClockTime, GridBoard, Integer, Label, PuzzleKind, Rng,
                            Weekday, YesNo, derive_seed, from_jsonable, instance_id, mix64,
                            ontology_for, parse_instance_id, rng_next, to_jsonable)

u64 = st.integers(0, 2**64 - 1)


def test_eighteen_kinds_with_stable_names():
    assert len(ALL_KINDS) == 18
    assert PuzzleKind("board_tiling") is PuzzleKind.BOARD_TILING
    assert sorted(k.value for k in ALL_KINDS) == [k.value for k in ALL_KINDS]


@given(u64)
def test_derive_seed_is_deterministic(master):
    for kind in (PuzzleKind.CLOCK, PuzzleKind.WOOD_SLIDE):
        assert derive_seed(master, kind, 0) == derive_seed(master, kind, 0)


@given(u64)
def test_derive_seed_separates_index_and_kind(master):
    assert derive_seed(master, PuzzleKind.CLOCK, 0) != derive_seed(master, PuzzleKind.CLOCK, 1)
    assert (derive_seed(master, PuzzleKind.BOARD_TILING, 5)
            != derive_seed(master, PuzzleKind.CALENDAR, 5))


def test_derive_seed_no_collisions_over_a_full_dataset():
    seeds = {derive_seed(42, k, i) for k in ALL_KINDS for i in range(500)}
    assert len(seeds) == 18 * 500


def test_derive_seed_rejects_huge_index():
    with pytest.raises(ValueError):
        derive_seed(1, PuzzleKind.CLOCK, 2**32)


def test_mix64_is_injective_on_a_sample():
    xs = range(0, 200_000, 7)
    assert len({mix64(x) for x in xs}) == len(xs)


@given(u64)
def test_rng_next_singleton_range(state):
    value, new_state = rng_next(state, 3, 3)
    assert value == 3 and new_state != state


@given(u64, st.integers(-1000, 1000), st.integers(0, 1000))
def test_rng_next_stays_in_range_and_is_deterministic(state, lo, width):
    a = rng_next(state, lo, lo + width)
    assert a == rng_next(state, lo, lo + width)
    assert lo <= a[0] <= lo + width


def test_rng_next_rejects_inverted_range():
    with pytest.raises(ValueError):
        rng_next(0, 5, 4)


def test_rng_next_bucket_frequencies():
    # 10^6 draws over [0, 9]: each bucket within 5 sigma of 10^5, plus a chi-square check.
    counts = [0] * 10
    state = 12345
    for _ in range(1_000_000):
        v, state = rng_next(state, 0, 9)
        counts[v] += 1
    sigma = math.sqrt(1_000_000 * 0.1 * 0.9)
    assert all(abs(c - 100_000) <= 5 * sigma for c in counts)
    chi2 = sum((c - 100_000) ** 2 / 100_000 for c in counts)
    assert chi2 < 33.7  # 0.9999 quantile with 9 degrees of freedom


def test_rng_helpers():
    rng = Rng(9)
    items = list(range(20))
    rng.shuffle(items)
    assert sorted(items) == list(range(20))
    s = rng.sample(range(10), 4)
    assert len(set(s)) == 4
    assert Rng(3).fork(1).randint(0, 10**9) == Rng(3).fork(1).randint(0, 10**9)
    assert Rng(3).fork(1).randint(0, 10**9) != Rng(3).fork(2).randint(0, 10**9)
    assert 0.0 <= Rng(5).random() < 1.0


def test_ontology_rows():
    tiling = ontology_for(PuzzleKind.BOARD_TILING)
    assert tiling.visual == {"colour", "position"}
    assert tiling.algorithmic == {"arithmetic", "boolean_logic"}
    wheel = ontology_for(PuzzleKind.WHEEL_OF_FORTUNE)
    assert wheel.visual == {"position", "shape_size", "text"}
    assert wheel.algorithmic == {"arithmetic"}


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_ontology_universal_tags(kind):
    tags = ontology_for(kind)
    assert "position" in tags.visual
    assert "arithmetic" in tags.algorithmic


def test_answer_renderings():
    assert ClockTime(9, 19).render() == "9:19"
    assert ClockTime(12, 5).render() == "12:05"
    assert ClockTime.parse("9:19") == ClockTime(9, 19)
    assert Weekday(4).render() == "Friday"
    assert YesNo(True).render() == "Yes"
    with pytest.raises(ValueError):
        ClockTime(13, 0)
    with pytest.raises(ValueError):
        ClockTime.parse("9:5")


@given(st.integers(1, 12), st.integers(0, 59))
def test_clock_time_round_trips(h, m):
    t = ClockTime(h, m)
    assert ClockTime.parse(t.render()) == t
    assert ClockTime.from_minutes(t.minutes_past_twelve) == t


@given(st.sampled_from([Integer(7), YesNo(False), Weekday(6), Label("Lamp"), ClockTime(3, 4)]))
def test_every_answer_family_round_trips(value):
    assert type(value).parse(value.render()) == value


def test_instance_ids():
    assert instance_id(PuzzleKind.BOARD_TILING, 3) == "board_tiling_0003"
    assert parse_instance_id("tower_of_hanoi_0042") == (PuzzleKind.TOWER_OF_HANOI, 42)
    with pytest.raises(ValueError):
        parse_instance_id("clock_7")


def test_grid_board_indexing():
    g = GridBoard(2, 3, (0, 1, 2, 3, 4, 5))
    assert g.at(1, 0) == 3
    assert sorted(g.neighbours4(0, 0)) == [(0, 1), (1, 0)]
    with pytest.raises(ValueError):
        GridBoard(2, 2, (1, 2, 3))


def test_json_round_trip_of_nested_payload():
    from puzzlekit.mapcolour import ColouringInstance, PlanarMap
    inst = ColouringInstance(PlanarMap(((0.1, 0.2),), (((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)),),
                                       ((),)), (None,), (0,))
    assert from_jsonable(ColouringInstance, to_jsonable(inst)) == inst
