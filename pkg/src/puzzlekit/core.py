"""Shared domain types, seeded randomness and ontology metadata."""

from __future__ import annotations

import dataclasses
import enum
import types
import typing
from dataclasses import dataclass
from typing import Any, Iterable, Sequence, TypeVar

T = TypeVar("T")

MASK64 = (1 << 64) - 1

# splitmix64 constants; recorded verbatim in every dataset manifest.
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MUL_1 = 0xBF58476D1CE4E5B9
MIX_MUL_2 = 0x94D049BB133111EB
MCQ_STREAM = 0xD1B54A32D192ED03


class PuzzleKind(str, enum.Enum):
    BOARD_TILING = "board_tiling"
    CALENDAR = "calendar"
    CHAIN_LINK = "chain_link"
    CHECKER_MOVE = "checker_move"
    CLOCK = "clock"
    COLOUR_HUE = "colour_hue"
    MAP_COLOUR = "map_colour"
    MAZE_SOLVE = "maze_solve"
    MOVE_BOX = "move_box"
    N_QUEENS = "n_queens"
    NUMBER_SLIDE = "number_slide"
    ROTTING_FRUIT = "rotting_fruit"
    RUBIKS_CUBE = "rubiks_cube"
    THINK_A_DOT = "think_a_dot"
    TOWER_OF_HANOI = "tower_of_hanoi"
    WATER_JUGS = "water_jugs"
    WHEEL_OF_FORTUNE = "wheel_of_fortune"
    WOOD_SLIDE = "wood_slide"

    def __str__(self) -> str:
        return self.value

    @property
    def ordinal(self) -> int:
        return list(PuzzleKind).index(self)


ALL_KINDS: tuple[PuzzleKind, ...] = tuple(PuzzleKind)

VISUAL_FEATURES = ("colour", "position", "shape_size", "text")
ALGORITHMIC_FEATURES = (
    "arithmetic",
    "boolean_logic",
    "combinatorics",
    "graphs",
    "optimization",
    "search",
    "sets",
)


@dataclass(frozen=True)
class OntologyTags:
    visual: frozenset[str]
    algorithmic: frozenset[str]

    def to_dict(self) -> dict[str, list[str]]:
        # Feature order follows the table columns, not alphabetical order.
        return {
            "visual": [f for f in VISUAL_FEATURES if f in self.visual],
            "algorithmic": [f for f in ALGORITHMIC_FEATURES if f in self.algorithmic],
        }


def _row(visual: str, algorithmic: str) -> OntologyTags:
    return OntologyTags(
        frozenset(f for f, bit in zip(VISUAL_FEATURES, visual) if bit == "1"),
        frozenset(f for f, bit in zip(ALGORITHMIC_FEATURES, algorithmic) if bit == "1"),
    )


# Columns: colour position shape_size text | arithmetic boolean_logic
# combinatorics graphs optimization search sets
_ONTOLOGY: dict[PuzzleKind, OntologyTags] = {
    PuzzleKind.BOARD_TILING: _row("1100", "1100000"),
    PuzzleKind.CALENDAR: _row("0101", "1000000"),
    PuzzleKind.CHAIN_LINK: _row("0110", "1000101"),
    PuzzleKind.CHECKER_MOVE: _row("1100", "1100010"),
    PuzzleKind.CLOCK: _row("0111", "1000000"),
    PuzzleKind.COLOUR_HUE: _row("1100", "1000100"),
    PuzzleKind.MAP_COLOUR: _row("1111", "1111010"),
    PuzzleKind.MAZE_SOLVE: _row("1100", "1001110"),
    PuzzleKind.MOVE_BOX: _row("1100", "1001110"),
    PuzzleKind.N_QUEENS: _row("0100", "1100010"),
    PuzzleKind.NUMBER_SLIDE: _row("0101", "1010111"),
    PuzzleKind.ROTTING_FRUIT: _row("0100", "1101110"),
    PuzzleKind.RUBIKS_CUBE: _row("1100", "1001000"),
    PuzzleKind.THINK_A_DOT: _row("1110", "1100001"),
    PuzzleKind.TOWER_OF_HANOI: _row("0110", "1100110"),
    PuzzleKind.WATER_JUGS: _row("0111", "1100110"),
    PuzzleKind.WHEEL_OF_FORTUNE: _row("0111", "1000000"),
    PuzzleKind.WOOD_SLIDE: _row("0110", "1000110"),
}


def ontology_for(kind: PuzzleKind | str) -> OntologyTags:
    return _ONTOLOGY[PuzzleKind(kind)]


# --------------------------------------------------------------------------
# Randomness


def mix64(x: int) -> int:
    """splitmix64 finalizer; a bijection on 64-bit integers."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * MIX_MUL_1) & MASK64
    x = ((x ^ (x >> 27)) * MIX_MUL_2) & MASK64
    return x ^ (x >> 31)


def derive_seed(master: int, kind: PuzzleKind | str, index: int) -> int:
    """Per-instance seed.

    Distinct (kind, index) pairs give distinct seeds under one master seed:
    every step is a bijection of the packed (ordinal, index) word.
    """
    if not 0 <= index < 1 << 32:
        raise ValueError(f"instance index out of range: {index}")
    ordinal = PuzzleKind(kind).ordinal
    return mix64((master & MASK64) ^ mix64((ordinal << 32) | index))


def _next_word(state: int) -> tuple[int, int]:
    state = (state + GOLDEN_GAMMA) & MASK64
    return mix64(state), state


def rng_next(state: int, lo: int, hi: int) -> tuple[int, int]:
    """Draw an integer in [lo, hi] and return it with the advanced state."""
    if lo > hi:
        raise ValueError(f"invalid range [{lo}, {hi}]")
    span = hi - lo + 1
    if span > 1 << 64:
        raise ValueError("range wider than 2**64")
    # Largest multiple of span representable in 64 bits; draws above it are rejected.
    limit = (1 << 64) - ((1 << 64) % span)
    while True:
        word, state = _next_word(state)
        if word < limit:
            return lo + word % span, state


class Rng:
    """Convenience wrapper threading an ``rng_next`` state through a generator.

    Each instance generator owns its own ``Rng``; nothing is shared.
    """

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def randint(self, lo: int, hi: int) -> int:
        value, self.state = rng_next(self.state, lo, hi)
        return value

    def random(self) -> float:
        word, self.state = _next_word(self.state)
        return (word >> 11) * (1.0 / (1 << 53))

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def choice(self, seq: Sequence[T]) -> T:
        if not seq:
            raise IndexError("choice from empty sequence")
        return seq[self.randint(0, len(seq) - 1)]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(0, i)
            items[i], items[j] = items[j], items[i]

    def sample(self, seq: Sequence[T], k: int) -> list[T]:
        pool = list(seq)
        if k > len(pool):
            raise ValueError("sample larger than population")
        for i in range(k):
            j = self.randint(i, len(pool) - 1)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def coin(self) -> bool:
        return self.randint(0, 1) == 1

    def fork(self, salt: int) -> "Rng":
        return Rng(mix64(self.state ^ mix64(salt)))


class GeneratorError(RuntimeError):
    """A generator exhausted its resampling budget."""


class InvalidInstanceError(ValueError):
    """An instance violates its puzzle's preconditions."""


# --------------------------------------------------------------------------
# Answers

WEEKDAYS = ("Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday")


@dataclass(frozen=True)
class Integer:
    value: int

    def render(self) -> str:
        return str(self.value)

    @classmethod
    def parse(cls, text: str) -> "Integer":
        return cls(int(text))


@dataclass(frozen=True)
class YesNo:
    flag: bool

    def render(self) -> str:
        return "Yes" if self.flag else "No"

    @classmethod
    def parse(cls, text: str) -> "YesNo":
        if text not in ("Yes", "No"):
            raise ValueError(f"not a yes/no answer: {text!r}")
        return cls(text == "Yes")


@dataclass(frozen=True)
class ClockTime:
    hour: int
    minute: int

    def __post_init__(self) -> None:
        if not (1 <= self.hour <= 12 and 0 <= self.minute <= 59):
            raise ValueError(f"invalid clock time {self.hour}:{self.minute}")

    def render(self) -> str:
        return f"{self.hour}:{self.minute:02d}"

    @classmethod
    def parse(cls, text: str) -> "ClockTime":
        hour, minute = text.split(":")
        if len(minute) != 2:
            raise ValueError(f"minutes must be zero-padded: {text!r}")
        return cls(int(hour), int(minute))

    @property
    def minutes_past_twelve(self) -> int:
        return (self.hour % 12) * 60 + self.minute

    @classmethod
    def from_minutes(cls, minutes: int) -> "ClockTime":
        minutes %= 720
        hour = minutes // 60
        return cls(hour if hour else 12, minutes % 60)


@dataclass(frozen=True)
class Weekday:
    index: int  # 0 = Monday

    def __post_init__(self) -> None:
        if not 0 <= self.index <= 6:
            raise ValueError(f"invalid weekday index {self.index}")

    def render(self) -> str:
        return WEEKDAYS[self.index]

    @classmethod
    def parse(cls, text: str) -> "Weekday":
        return cls(WEEKDAYS.index(text))


@dataclass(frozen=True)
class Label:
    text: str

    def render(self) -> str:
        return self.text

    @classmethod
    def parse(cls, text: str) -> "Label":
        return cls(text)


AnswerValue = typing.Union[Integer, YesNo, ClockTime, Weekday, Label]


# --------------------------------------------------------------------------
# Grids and instances


@dataclass(frozen=True)
class GridBoard:
    rows: int
    cols: int
    cells: tuple

    def __post_init__(self) -> None:
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("grid dimensions must be positive")
        if len(self.cells) != self.rows * self.cols:
            raise ValueError("cell count does not match dimensions")

    def at(self, r: int, c: int):
        return self.cells[r * self.cols + c]

    def inside(self, r: int, c: int) -> bool:
        return 0 <= r < self.rows and 0 <= c < self.cols

    def neighbours4(self, r: int, c: int) -> Iterable[tuple[int, int]]:
        for dr, dc in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            if self.inside(r + dr, c + dc):
                yield r + dr, c + dc

    def positions(self, value) -> list[tuple[int, int]]:
        return [divmod(i, self.cols) for i, v in enumerate(self.cells) if v == value]

    def replace(self, r: int, c: int, value) -> "GridBoard":
        cells = list(self.cells)
        cells[r * self.cols + c] = value
        return GridBoard(self.rows, self.cols, tuple(cells))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "GridBoard":
        return cls(len(rows), len(rows[0]), tuple(v for row in rows for v in row))

    def as_rows(self) -> list[tuple]:
        return [self.cells[r * self.cols:(r + 1) * self.cols] for r in range(self.rows)]


def instance_id(kind: PuzzleKind | str, index: int) -> str:
    return f"{PuzzleKind(kind).value}_{index:04d}"


def parse_instance_id(text: str) -> tuple[PuzzleKind, int]:
    stem, _, number = text.rpartition("_")
    if not number.isdigit() or len(number) < 4:
        raise ValueError(f"malformed instance id {text!r}")
    return PuzzleKind(stem), int(number)


@dataclass(frozen=True)
class PuzzleInstance:
    id: str
    kind: PuzzleKind
    seed: int
    payload: Any
    gold: AnswerValue
    tags: OntologyTags


# --------------------------------------------------------------------------
# JSON conversion for payload dataclasses


def to_jsonable(value: Any) -> Any:
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    return value


def from_jsonable(tp: Any, data: Any) -> Any:
    """Rebuild a value of annotated type ``tp`` from its JSON form."""
    origin = typing.get_origin(tp)
    args = typing.get_args(tp)
    if tp is Any:
        return data
    if origin in (typing.Union, types.UnionType):
        if data is None and type(None) in args:
            return None
        errors = []
        for option in args:
            if option is type(None):
                continue
            try:
                return from_jsonable(option, data)
            except (TypeError, ValueError, KeyError) as exc:
                errors.append(exc)
        raise ValueError(f"no union member of {tp} accepts {data!r}: {errors}")
    if dataclasses.is_dataclass(tp):
        if not isinstance(data, dict):
            raise TypeError(f"expected object for {tp.__name__}, got {type(data).__name__}")
        hints = typing.get_type_hints(tp)
        kwargs = {f.name: from_jsonable(hints[f.name], data[f.name])
                  for f in dataclasses.fields(tp) if f.init}
        return tp(**kwargs)
    if isinstance(tp, type) and issubclass(tp, enum.Enum):
        return tp(data)
    if tp is tuple:
        if not isinstance(data, list):
            raise TypeError(f"expected array for {tp}")
        return tuple(data)
    if origin is tuple:
        if not isinstance(data, list):
            raise TypeError(f"expected array for {tp}")
        if len(args) == 2 and args[1] is Ellipsis:
            return tuple(from_jsonable(args[0], v) for v in data)
        if len(args) != len(data):
            raise ValueError(f"expected {len(args)} items for {tp}")
        return tuple(from_jsonable(a, v) for a, v in zip(args, data))
    if origin is list:
        return [from_jsonable(args[0], v) for v in data]
    if origin is frozenset:
        return frozenset(from_jsonable(args[0], v) for v in data)
    if origin is dict:
        return {from_jsonable(args[0], k): from_jsonable(args[1], v) for k, v in data.items()}
    if tp is float:
        if isinstance(data, bool) or not isinstance(data, (int, float)):
            raise TypeError(f"expected number, got {data!r}")
        return float(data)
    if tp is int:
        if isinstance(data, bool) or not isinstance(data, int):
            raise TypeError(f"expected integer, got {data!r}")
        return data
    if tp is bool:
        if not isinstance(data, bool):
            raise TypeError(f"expected boolean, got {data!r}")
        return data
    if tp is str:
        if not isinstance(data, str):
            raise TypeError(f"expected string, got {data!r}")
        return data
    raise TypeError(f"unsupported annotation {tp!r}")
