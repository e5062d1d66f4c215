"""3*3 cube sticker engine with permutation tables built from cube geometry.

Coordinates: x to the right, y up, z towards the viewer (out of the front
face). Each sticker is a (cubie position, outward normal) pair; a face turn
rotates every sticker in that face's layer by -90 degrees about the face
normal, which is clockwise when looking at the face from outside.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from ..core import InvalidInstanceError, Rng

FACES = ("U", "L", "F", "R", "B", "D")
FACE_NAMES = {"U": "up", "D": "down", "L": "left", "R": "right", "F": "front", "B": "back"}
SOLVED_COLOURS = {"U": "grey", "L": "green", "F": "red", "R": "blue", "B": "orange", "D": "yellow"}
COLOURS = ("red", "green", "blue", "yellow", "orange", "grey")

Vec = tuple[int, int, int]

NORMALS: dict[str, Vec] = {
    "U": (0, 1, 0), "D": (0, -1, 0), "L": (-1, 0, 0),
    "R": (1, 0, 0), "F": (0, 0, 1), "B": (0, 0, -1),
}

# Net layout of each face as (row axis values, col axis values); rows and columns
# read as seen from outside, with U drawn above F and D drawn below it.
_RANGE = (-1, 0, 1)
_DOWN = (1, 0, -1)


def _position(face: str, row: int, col: int) -> Vec:
    if face == "U":
        return (_RANGE[col], 1, _RANGE[row])
    if face == "D":
        return (_RANGE[col], -1, _DOWN[row])
    if face == "F":
        return (_RANGE[col], _DOWN[row], 1)
    if face == "B":
        return (_DOWN[col], _DOWN[row], -1)
    if face == "R":
        return (1, _DOWN[row], _DOWN[col])
    return (-1, _DOWN[row], _RANGE[col])  # L


def _cross(a: Vec, b: Vec) -> Vec:
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a: Vec, b: Vec) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _turn(n: Vec, v: Vec) -> Vec:
    """Quarter turn of ``v`` about axis ``n``, clockwise seen from the tip of ``n``."""
    c = _cross(n, v)
    d = _dot(n, v)
    return (-c[0] + n[0] * d, -c[1] + n[1] * d, -c[2] + n[2] * d)


STICKERS: tuple[tuple[Vec, Vec], ...] = tuple(
    (_position(f, r, c), NORMALS[f]) for f in FACES for r in range(3) for c in range(3))
_INDEX = {s: i for i, s in enumerate(STICKERS)}


def sticker_index(face: str, row: int, col: int) -> int:
    return FACES.index(face) * 9 + row * 3 + col


def _build_table(face: str) -> tuple[int, ...]:
    """source[i] = index of the sticker that lands on position i after one turn."""
    n = NORMALS[face]
    source = list(range(len(STICKERS)))
    for i, (pos, normal) in enumerate(STICKERS):
        if _dot(pos, n) == 1:
            source[_INDEX[(_turn(n, pos), _turn(n, normal))]] = i
    return tuple(source)


TURN_TABLES: dict[str, tuple[int, ...]] = {f: _build_table(f) for f in FACES}


@dataclass(frozen=True)
class CubeState:
    stickers: tuple[str, ...]  # 54 colours, faces in FACES order, 9 row-major each

    def validate(self) -> None:
        if len(self.stickers) != 54:
            raise InvalidInstanceError("a cube has 54 stickers")
        if Counter(self.stickers) != Counter({c: 9 for c in COLOURS}):
            raise InvalidInstanceError("each colour must appear on exactly 9 stickers")

    def face(self, face: str) -> tuple[str, ...]:
        k = FACES.index(face) * 9
        return self.stickers[k:k + 9]


def solved_cube() -> CubeState:
    return CubeState(tuple(SOLVED_COLOURS[f] for f in FACES for _ in range(9)))


Move = tuple[str, int]

_TOKEN = re.compile(r"([UDLRFB])([1-3]?)")


def parse_moves(text: str) -> tuple[Move, ...]:
    moves = []
    for token in text.split():
        m = _TOKEN.fullmatch(token)
        if not m:
            raise InvalidInstanceError(f"bad move token {token!r}")
        moves.append((m.group(1), int(m.group(2) or 1)))
    return tuple(moves)


def format_moves(moves: tuple[Move, ...]) -> str:
    return " ".join(f + (str(k) if k != 1 else "") for f, k in moves)


def cube_apply(state: CubeState, moves: tuple[Move, ...]) -> CubeState:
    stickers = state.stickers
    for face, turns in moves:
        table = TURN_TABLES[face]
        for _ in range(turns):
            stickers = tuple(stickers[table[i]] for i in range(54))
    return CubeState(stickers)


def cube_count(state: CubeState, face: str, colour: str) -> int:
    return sum(s == colour for s in state.face(face))


@dataclass(frozen=True)
class CubeInstance:
    initial: CubeState
    moves: tuple[Move, ...]
    face: str
    colour: str

    def validate(self) -> None:
        self.initial.validate()
        if not 1 <= len(self.moves) <= 3:
            raise InvalidInstanceError("between 1 and 3 moves")
        if any(f not in FACES or not 1 <= k <= 3 for f, k in self.moves):
            raise InvalidInstanceError("invalid move")
        if self.face not in FACES or self.colour not in COLOURS:
            raise InvalidInstanceError("unknown face or colour")


def solve_cube(inst: CubeInstance) -> int:
    inst.validate()
    return cube_count(cube_apply(inst.initial, inst.moves), inst.face, inst.colour)


def gen_cube(rng: Rng) -> CubeInstance:
    scramble = tuple((rng.choice(FACES), 1) for _ in range(20))
    initial = cube_apply(solved_cube(), scramble)
    moves = tuple((rng.choice(FACES), rng.randint(1, 3)) for _ in range(rng.randint(1, 3)))
    return CubeInstance(initial, moves, rng.choice(FACES), rng.choice(COLOURS))
