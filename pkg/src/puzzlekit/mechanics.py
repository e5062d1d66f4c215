"""Wheel of Fortune rotation and Chain Link cut/weld planning."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import NamedTuple

from .core import GeneratorError, InvalidInstanceError, Label, Rng

ARROW_ANGLE = 90.0  # 12 o'clock; angles run counterclockwise from 3 o'clock
BOUNDARY_TOLERANCE = 1e-6
MIN_BOUNDARY_CLEARANCE = 1.0
MIN_SPAN = 20.0

WHEEL_COLOURS = ("#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231",
                 "#911eb4", "#42d4f4", "#f032e6", "#bfef45", "#fabed4")

OWNER_NAMES = ("Alice", "Bob", "Carol", "David", "Emma", "Frank", "Grace", "Henry",
               "Irene", "Jack", "Kate", "Liam", "Mia", "Noah")


@lru_cache(maxsize=1)
def prize_labels() -> tuple[str, ...]:
    text = resources.files("puzzlekit").joinpath("data/prizes.txt").read_text(encoding="utf-8")
    return tuple(line.strip() for line in text.splitlines() if line.strip())


@dataclass(frozen=True)
class WheelSegment:
    label: str
    colour: str
    span_degrees: float


@dataclass(frozen=True)
class WheelSpec:
    segments: tuple[WheelSegment, ...]
    start_offset: float  # leading edge of segment 0
    arrow_angle: float = ARROW_ANGLE

    def validate(self) -> None:
        if len(self.segments) not in (6, 8, 10):
            raise InvalidInstanceError("a wheel has 6, 8 or 10 segments")
        if abs(sum(s.span_degrees for s in self.segments) - 360.0) > 1e-9:
            raise InvalidInstanceError("segment spans must sum to 360 degrees")
        if any(s.span_degrees <= 0 for s in self.segments):
            raise InvalidInstanceError("segment spans must be positive")
        if len({s.label for s in self.segments}) != len(self.segments):
            raise InvalidInstanceError("prize labels must be distinct")

    def leading_edges(self, rotation: float = 0.0) -> list[float]:
        edges, angle = [], self.start_offset + rotation
        for seg in self.segments:
            edges.append(angle % 360.0)
            angle += seg.span_degrees
        return edges


@dataclass(frozen=True)
class RotationQuery:
    direction: str  # "clockwise" | "counterclockwise"
    degrees: float
    full_rotations: bool = False

    def __post_init__(self) -> None:
        if self.direction not in ("clockwise", "counterclockwise"):
            raise ValueError(f"unknown direction {self.direction!r}")
        if self.degrees <= 0:
            raise ValueError("rotation must be positive")

    @property
    def signed(self) -> float:
        # Counterclockwise is the positive angular direction.
        return self.degrees if self.direction == "counterclockwise" else -self.degrees


@dataclass(frozen=True)
class WheelInstance:
    spec: WheelSpec
    query: RotationQuery


def _angular_gap(a: float, b: float) -> float:
    d = (a - b) % 360.0
    return min(d, 360.0 - d)


def arrow_clearance(spec: WheelSpec, rotation: float) -> float:
    """Smallest angle between the arrow and any segment boundary after rotating."""
    return min(_angular_gap(spec.arrow_angle, e) for e in spec.leading_edges(rotation))


def segment_under_arrow(spec: WheelSpec, rotation: float) -> int:
    if arrow_clearance(spec, rotation) < BOUNDARY_TOLERANCE:
        raise InvalidInstanceError("arrow lies on a segment boundary")
    for i, (edge, seg) in enumerate(zip(spec.leading_edges(rotation), spec.segments)):
        if (spec.arrow_angle - edge) % 360.0 < seg.span_degrees:
            return i
    raise AssertionError("segments do not cover the circle")


def solve_wheel(spec: WheelSpec, query: RotationQuery) -> Label:
    spec.validate()
    return Label(spec.segments[segment_under_arrow(spec, query.signed)].label)


def gen_wheel(rng: Rng) -> tuple[WheelSpec, RotationQuery, Label]:
    n = rng.choice((6, 8, 10))
    labels = rng.sample(prize_labels(), n)
    colours = rng.sample(WHEEL_COLOURS, n)
    for _ in range(100):
        if rng.coin():
            spans = [360 // n] * n
        else:
            # Integer composition of the slack above the minimum span.
            slack = 360 - int(MIN_SPAN) * n
            cuts = sorted(rng.randint(0, slack) for _ in range(n - 1))
            parts = [b - a for a, b in zip([0] + cuts, cuts + [slack])]
            spans = [int(MIN_SPAN) + p for p in parts]
        spec = WheelSpec(
            tuple(WheelSegment(l, c, float(s)) for l, c, s in zip(labels, colours, spans)),
            start_offset=float(rng.randint(0, 359)),
        )
        direction = rng.choice(("clockwise", "counterclockwise"))
        if rng.randint(0, 4) == 0:
            query = RotationQuery(direction, 360.0 * rng.randint(1, 5), full_rotations=True)
        else:
            query = RotationQuery(direction, float(rng.randint(60, 2000)))
        if arrow_clearance(spec, query.signed) >= MIN_BOUNDARY_CLEARANCE:
            return spec, query, solve_wheel(spec, query)
    raise GeneratorError("could not place the arrow away from segment boundaries")


class ChainSolution(NamedTuple):
    minutes: int
    cuts: int
    welds: int


@dataclass(frozen=True)
class ChainSpec:
    closed_segments: tuple[int, ...]
    open_singletons: int
    cut_minutes: int
    weld_minutes: int
    owner: str = "Alice"

    @property
    def total_pieces(self) -> int:
        return sum(self.closed_segments) + self.open_singletons

    @property
    def segment_count(self) -> int:
        return len(self.closed_segments) + self.open_singletons

    def validate(self) -> None:
        if any(length < 1 for length in self.closed_segments) or self.open_singletons < 0:
            raise InvalidInstanceError("segment lengths must be positive")
        if self.cut_minutes <= 0 or self.weld_minutes <= 0:
            raise InvalidInstanceError("cut and weld times must be positive")
        if self.total_pieces < 3:
            raise InvalidInstanceError("a necklace needs at least 3 pieces")


def solve_chain(spec: ChainSpec) -> ChainSolution:
    """Greedy plan: open end pieces of the shortest closed segment until open links suffice."""
    spec.validate()
    segments = list(spec.closed_segments)
    open_links, cuts = spec.open_singletons, 0
    while open_links < len(segments):
        i = min(range(len(segments)), key=lambda k: (segments[k], k))
        if segments[i] == 1:
            del segments[i]
        else:
            segments[i] -= 1
        open_links += 1
        cuts += 1
    welds = open_links
    return ChainSolution(cuts * spec.cut_minutes + welds * spec.weld_minutes, cuts, welds)


def gen_chain(rng: Rng) -> ChainSpec:
    segment_count = rng.randint(8, 14)
    open_singletons = rng.randint(0, 3)
    closed = tuple(rng.randint(1, 6) for _ in range(segment_count - open_singletons))
    spec = ChainSpec(closed, open_singletons, rng.randint(3, 6), rng.randint(1, 3),
                     owner=rng.choice(OWNER_NAMES))
    spec.validate()
    return spec


def wheel_rotation_label(query: RotationQuery) -> str:
    if query.full_rotations:
        turns = int(round(query.degrees / 360.0))
        return f"{turns} full rotation" + ("s" if turns != 1 else "")
    value = query.degrees
    return f"{int(value)} degrees" if math.isclose(value, round(value)) else f"{value:g} degrees"
