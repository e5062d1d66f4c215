"""Multiple-choice options: distractor sampling and option assembly."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..core import (WEEKDAYS, AnswerValue, ClockTime, Integer, InvalidInstanceError, Label, PuzzleKind,
                    Rng,
                    Weekday, YesNo)

LETTERS = "ABCD"
NUM_DISTRACTORS = 3


def numeric_range(gold: int) -> tuple[int, int]:
    """Sampling band for wrong numeric answers of the same magnitude as ``gold``."""
    for bound in (6, 10, 50, 100):
        if gold <= bound:
            return 1, bound
    return gold - 50, gold + 50


def _distinct(rng: Rng, draw, gold, k: int) -> list:
    # Sample-reject until k distinct values different from gold.
    out: list = []
    for _ in range(10_000):
        v = draw()
        if v != gold and v not in out:
            out.append(v)
            if len(out) == k:
                return out
    raise InvalidInstanceError("not enough distinct distractor candidates")


def gen_distractors(gold: AnswerValue, kind: PuzzleKind | str, rng: Rng,
                    prizes: Sequence[str] | None = None) -> list[AnswerValue]:
    """Wrong options for ``gold``; ``prizes`` lists the wheel's labels for wheel golds."""
    kind = PuzzleKind(kind)
    if (kind is PuzzleKind.BOARD_TILING) != isinstance(gold, YesNo):
        raise InvalidInstanceError(f"{type(gold).__name__} gold does not fit {kind}")
    if isinstance(gold, YesNo):
        return [YesNo(not gold.flag)]
    if isinstance(gold, Integer):
        lo, hi = numeric_range(gold.value)
        return [Integer(v) for v in _distinct(rng, lambda: rng.randint(lo, hi), gold.value,
                                              NUM_DISTRACTORS)]
    if isinstance(gold, Label):
        pool = [p for p in (prizes or ()) if p != gold.text]
        if len(set(pool)) < NUM_DISTRACTORS:
            raise InvalidInstanceError("wheel needs at least four prizes")
        return [Label(t) for t in _distinct(rng, lambda: rng.choice(pool), gold.text,
                                            NUM_DISTRACTORS)]
    if isinstance(gold, ClockTime):
        base = gold.minutes_past_twelve

        def shifted() -> ClockTime:
            offset = rng.randint(1, 59) * (1 if rng.coin() else -1)
            return ClockTime.from_minutes(base + offset)

        return _distinct(rng, shifted, gold, NUM_DISTRACTORS)
    if isinstance(gold, Weekday):
        return _distinct(rng, lambda: Weekday(rng.randint(0, len(WEEKDAYS) - 1)), gold,
                         NUM_DISTRACTORS)
    raise TypeError(f"unsupported answer type {type(gold).__name__}")


@dataclass(frozen=True)
class McqItem:
    question: str
    options: tuple[tuple[str, str], ...]  # (letter, rendered value)
    answer_letter: str
    gold: AnswerValue

    def option_map(self) -> dict[str, str]:
        return dict(self.options)


def assemble_mcq(question: str, gold: AnswerValue, distractors: list[AnswerValue],
                 rng: Rng) -> McqItem:
    values = [gold, *distractors]
    rendered = [v.render() for v in values]
    if len(set(rendered)) != len(rendered):
        raise InvalidInstanceError("options must be pairwise distinct")
    order = list(range(len(values)))
    rng.shuffle(order)
    options = tuple((LETTERS[k], rendered[i]) for k, i in enumerate(order))
    answer = LETTERS[order.index(0)]
    return McqItem(question, options, answer, gold)
