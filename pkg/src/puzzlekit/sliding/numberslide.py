"""Number Slide: an n*n tile board where each move shifts the open position one cell."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import GeneratorError, InvalidInstanceError, Rng
from ..search import SearchProblem, bfs_layers

OPEN = 0
DIRECTIONS = ("up", "down", "left", "right")
_DELTA = {"up": (-1, 0), "down": (1, 0), "left": (0, -1), "right": (0, 1)}

STYLES = ("count", "extremal", "directed")


@dataclass(frozen=True)
class SlideBoard:
    n: int
    tiles: tuple[int, ...]  # row-major, 0 marks the open position

    def validate(self) -> None:
        if self.n not in (3, 4, 5):
            raise InvalidInstanceError("boards are 3*3, 4*4 or 5*5")
        if sorted(self.tiles) != list(range(self.n * self.n)):
            raise InvalidInstanceError("tiles must be 1..n*n-1 plus one open cell")

    @property
    def open_cell(self) -> tuple[int, int]:
        return divmod(self.tiles.index(OPEN), self.n)

    def row(self, r: int) -> tuple[int, ...]:
        return self.tiles[r * self.n:(r + 1) * self.n]

    def col(self, c: int) -> tuple[int, ...]:
        return self.tiles[c::self.n]

    def line(self, axis: str, index: int) -> tuple[int, ...]:
        return self.row(index) if axis == "row" else self.col(index)

    def move(self, direction: str) -> "SlideBoard":
        """Move the open position one cell; raises if it would leave the board."""
        r, c = self.open_cell
        dr, dc = _DELTA[direction]
        nr, nc = r + dr, c + dc
        if not (0 <= nr < self.n and 0 <= nc < self.n):
            raise InvalidInstanceError(f"open position cannot move {direction} from {(r, c)}")
        tiles = list(self.tiles)
        a, b = r * self.n + c, nr * self.n + nc
        tiles[a], tiles[b] = tiles[b], tiles[a]
        return SlideBoard(self.n, tuple(tiles))

    def legal_moves(self) -> list[str]:
        r, c = self.open_cell
        return [d for d in DIRECTIONS
                if 0 <= r + _DELTA[d][0] < self.n and 0 <= c + _DELTA[d][1] < self.n]


@dataclass(frozen=True)
class SlideQuestion:
    style: str
    n_moves: int
    axis: str = "row"
    index: int = 0
    stat: str = "sum"
    moves: tuple[str, ...] = field(default=())

    def validate(self, board: SlideBoard) -> None:
        if self.style not in STYLES:
            raise InvalidInstanceError(f"unknown question style {self.style!r}")
        if not 0 <= self.n_moves <= 4:
            raise InvalidInstanceError("at most 4 moves")
        if self.axis not in ("row", "col") or not 0 <= self.index < board.n:
            raise InvalidInstanceError("bad row/column reference")
        allowed = ("max", "min", "sum") if self.style == "directed" else ("max", "min")
        if self.style != "count" and self.stat not in allowed:
            raise InvalidInstanceError(f"statistic {self.stat!r} not allowed for {self.style}")
        if self.style == "directed" and len(self.moves) != self.n_moves:
            raise InvalidInstanceError("move list length must equal n_moves")


@dataclass(frozen=True)
class NumberSlideInstance:
    board: SlideBoard
    question: SlideQuestion


def slide_problem(board: SlideBoard) -> SearchProblem:
    def expand(b: SlideBoard):
        return [(d, b.move(d)) for d in b.legal_moves()]

    return SearchProblem(board, expand, lambda b: bytes(b.tiles))


def layer(board: SlideBoard, n: int) -> list[SlideBoard]:
    """Distinct boards reachable after exactly ``n`` moves."""
    return list(bfs_layers(slide_problem(board), n)[n].values())


def _stat(values: tuple[int, ...], stat: str) -> int:
    numbers = [v for v in values if v != OPEN]
    return {"max": max, "min": min, "sum": sum}[stat](numbers)


def solve_number_slide(board: SlideBoard, q: SlideQuestion) -> int:
    board.validate()
    q.validate(board)
    if q.style == "count":
        return len(layer(board, q.n_moves))
    if q.style == "extremal":
        sums = [sum(b.line(q.axis, q.index)) for b in layer(board, q.n_moves)]
        return max(sums) if q.stat == "max" else min(sums)
    final = board
    for d in q.moves:
        final = final.move(d)
    r, c = final.open_cell
    return _stat(final.line(q.axis, r if q.axis == "row" else c), q.stat)


def inversions(tiles: tuple[int, ...]) -> int:
    seq = [t for t in tiles if t != OPEN]
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def is_solvable(board: SlideBoard) -> bool:
    """Whether the ordered goal (1..n*n-1, open last) is reachable."""
    inv = inversions(board.tiles)
    if board.n % 2 == 1:
        return inv % 2 == 0
    return (inv + board.open_cell[0]) % 2 == 1


def gen_number_slide(rng: Rng) -> NumberSlideInstance:
    n = rng.choice((3, 4, 5))
    for _ in range(1000):
        tiles = list(range(n * n))
        rng.shuffle(tiles)
        board = SlideBoard(n, tuple(tiles))
        if is_solvable(board):
            break
    else:
        raise GeneratorError("no solvable arrangement found")
    style = rng.choice(STYLES)
    n_moves = rng.randint(1, 4)
    if style == "count":
        q = SlideQuestion("count", n_moves)
    elif style == "extremal":
        q = SlideQuestion("extremal", n_moves, rng.choice(("row", "col")), rng.randint(0, n - 1),
                          rng.choice(("max", "min")))
    else:
        walk, b = [], board
        for _ in range(n_moves):
            d = rng.choice(b.legal_moves())
            walk.append(d)
            b = b.move(d)
        q = SlideQuestion("directed", n_moves, rng.choice(("row", "col")), 0,
                          rng.choice(("max", "min", "sum")), tuple(walk))
    q.validate(board)
    return NumberSlideInstance(board, q)
