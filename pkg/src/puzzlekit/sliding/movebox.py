"""Move Box: single-box Sokoban, counting pushes only."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..core import GeneratorError, GridBoard, InvalidInstanceError, Rng
from ..search import SearchProblem, UnreachableError, bfs_shortest

WALL, FLOOR = 0, 1
Cell = tuple[int, int]

_DELTA = {"up": (-1, 0), "down": (1, 0), "left": (0, -1), "right": (0, 1)}


@dataclass(frozen=True)
class Warehouse:
    board: GridBoard
    box: Cell
    player: Cell
    flag: Cell

    def validate(self) -> None:
        for name in ("box", "player", "flag"):
            r, c = getattr(self, name)
            if not self.board.inside(r, c) or self.board.at(r, c) != FLOOR:
                raise InvalidInstanceError(f"{name} must stand on a floor cell")
        if self.box == self.player:
            raise InvalidInstanceError("player and box cannot share a cell")


def player_region(board: GridBoard, start: Cell, box: Cell) -> set[Cell]:
    """Floor cells the player can walk to without passing through the box."""
    seen = {start}
    queue = deque([start])
    while queue:
        r, c = queue.popleft()
        for nr, nc in board.neighbours4(r, c):
            if (nr, nc) not in seen and (nr, nc) != box and board.at(nr, nc) == FLOOR:
                seen.add((nr, nc))
                queue.append((nr, nc))
    return seen


def push_problem(w: Warehouse) -> SearchProblem:
    """States are (box, smallest reachable player cell)."""
    board = w.board

    def state(box: Cell, player: Cell) -> tuple[Cell, Cell, frozenset]:
        region = player_region(board, player, box)
        return box, min(region), frozenset(region)

    def expand(s):
        box, _, region = s
        out = []
        for name, (dr, dc) in _DELTA.items():
            behind = (box[0] - dr, box[1] - dc)
            ahead = (box[0] + dr, box[1] + dc)
            if behind in region and board.inside(*ahead) and board.at(*ahead) == FLOOR:
                out.append((f"push {name}", state(ahead, box)))
        return out

    def key(s) -> bytes:
        (br, bc), (pr, pc), _ = s
        return bytes((br, bc, pr, pc))

    return SearchProblem(state(w.box, w.player), expand, key)


def solve_move_box(w: Warehouse) -> int:
    w.validate()
    try:
        dist, _ = bfs_shortest(push_problem(w), lambda s: s[0] == w.flag)
    except UnreachableError:
        raise InvalidInstanceError("the box cannot reach the flag") from None
    return dist


def gen_move_box(rng: Rng) -> Warehouse:
    for _ in range(1000):
        rows, cols = rng.randint(6, 8), rng.randint(6, 8)
        interior = [(r, c) for r in range(1, rows - 1) for c in range(1, cols - 1)]
        walls = set(rng.sample(interior, rng.randint(0, len(interior) // 5)))
        floor = [p for p in interior if p not in walls]
        if len(floor) < 3:
            continue
        box, player, flag = rng.sample(floor, 3)
        cells = tuple(FLOOR if (r, c) in floor_set else WALL
                      for floor_set in [set(floor)]
                      for r in range(rows) for c in range(cols))
        w = Warehouse(GridBoard(rows, cols, cells), box, player, flag)
        try:
            solve_move_box(w)
        except InvalidInstanceError:
            continue
        return w
    raise GeneratorError("no solvable warehouse found")
