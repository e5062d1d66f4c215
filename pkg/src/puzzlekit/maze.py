"""Perfect mazes carved by randomized depth-first search, and turn-aware path solving."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import NamedTuple

from .core import GridBoard, InvalidInstanceError, Rng

WALL, PATH = 0, 1
MAZE_SIZES = (9, 11, 13)
QUESTION_KINDS = ("left_turns", "right_turns", "total_turns", "cells_visited")

# Headings in clockwise screen order, so a right turn is the next entry.
HEADINGS = ("up", "right", "down", "left")
STEP = {"up": (-1, 0), "right": (0, 1), "down": (1, 0), "left": (0, -1)}
ENTRY_HEADING = "right"
ENTRANCE = (1, 0)

_CARVE_ORDER = ("up", "down", "left", "right")


@dataclass(frozen=True)
class MazeGrid:
    board: GridBoard
    exit: tuple[int, int]

    @property
    def entrance(self) -> tuple[int, int]:
        return ENTRANCE

    @property
    def size(self) -> int:
        return self.board.rows

    def validate(self) -> None:
        n = self.board.rows
        if n != self.board.cols or n not in MAZE_SIZES:
            raise InvalidInstanceError("mazes are square with side 9, 11 or 13")
        if self.exit not in ((n - 1, n - 2), (n - 2, n - 1)):
            raise InvalidInstanceError("exit must sit on the bottom or right boundary")
        for r, c in (ENTRANCE, self.exit):
            if self.board.at(r, c) != PATH:
                raise InvalidInstanceError(f"cell {(r, c)} must be open")
        for r in range(n - 1):
            for c in range(n - 1):
                if all(self.board.at(r + dr, c + dc) == PATH for dr in (0, 1) for dc in (0, 1)):
                    raise InvalidInstanceError("corridors must be one cell wide")


def gen_maze(rng: Rng, size: int | None = None) -> MazeGrid:
    n = rng.choice(MAZE_SIZES) if size is None else size
    if n not in MAZE_SIZES:
        raise ValueError("maze side must be 9, 11 or 13")
    cells = [WALL] * (n * n)

    def carve(r: int, c: int) -> None:
        cells[r * n + c] = PATH

    carve(*ENTRANCE)
    carve(1, 1)
    # Iterative recursive-backtracker: each frame holds its own shuffled direction list.
    stack = [((1, 1), _shuffled(rng))]
    while stack:
        (r, c), dirs = stack[-1]
        if not dirs:
            stack.pop()
            continue
        dr, dc = STEP[dirs.pop(0)]
        nr, nc = r + 2 * dr, c + 2 * dc
        if 1 <= nr < n - 1 and 1 <= nc < n - 1 and cells[nr * n + nc] == WALL:
            carve(r + dr, c + dc)
            carve(nr, nc)
            stack.append(((nr, nc), _shuffled(rng)))
    exit_cell = (n - 1, n - 2) if rng.coin() else (n - 2, n - 1)
    carve(*exit_cell)
    maze = MazeGrid(GridBoard(n, n, tuple(cells)), exit_cell)
    maze.validate()
    return maze


def _shuffled(rng: Rng) -> list[str]:
    dirs = list(_CARVE_ORDER)
    rng.shuffle(dirs)
    return dirs


class MazePath(NamedTuple):
    cells: tuple[tuple[int, int], ...]
    left_turns: int
    right_turns: int

    @property
    def total_turns(self) -> int:
        return self.left_turns + self.right_turns

    @property
    def cells_visited(self) -> int:
        return len(self.cells)


def turn_kind(heading: str, new: str) -> str | None:
    """'left', 'right' or None (straight); reversals are rejected."""
    i, j = HEADINGS.index(heading), HEADINGS.index(new)
    delta = (j - i) % 4
    if delta == 2:
        raise ValueError("reversal is not a turn")
    return {0: None, 1: "right", 3: "left"}[delta]


def best_path(maze: MazeGrid) -> MazePath:
    """Path from entrance to exit minimizing (moves, turns) lexicographically.

    States are (cell, heading); the walker starts on the entrance heading
    right, and moving back the way it came is not allowed.
    """
    board = maze.board
    for r, c in (ENTRANCE, maze.exit):
        if not board.inside(r, c) or board.at(r, c) != PATH:
            raise InvalidInstanceError(f"cell {(r, c)} must be open")
    start = (ENTRANCE, ENTRY_HEADING)
    best = {start: (0, 0)}
    parent: dict[tuple, tuple | None] = {start: None}
    heap = [(0, 0, ENTRANCE, HEADINGS.index(ENTRY_HEADING))]
    goal = None
    while heap:
        moves, turns, cell, h = heapq.heappop(heap)
        state = (cell, HEADINGS[h])
        if best[state] != (moves, turns):
            continue
        if cell == maze.exit:
            goal = state
            break
        for new in HEADINGS:
            if (HEADINGS.index(new) - h) % 4 == 2:
                continue
            dr, dc = STEP[new]
            nr, nc = cell[0] + dr, cell[1] + dc
            if not board.inside(nr, nc) or board.at(nr, nc) != PATH:
                continue
            nxt = ((nr, nc), new)
            cost = (moves + 1, turns + (new != HEADINGS[h]))
            if nxt not in best or cost < best[nxt]:
                best[nxt] = cost
                parent[nxt] = state
                heapq.heappush(heap, (*cost, (nr, nc), HEADINGS.index(new)))
    if goal is None:
        raise InvalidInstanceError("exit not reachable")
    states = []
    node: tuple | None = goal
    while node is not None:
        states.append(node)
        node = parent[node]
    states.reverse()
    left = right = 0
    for (_, h0), (_, h1) in zip(states, states[1:]):
        kind = turn_kind(h0, h1)
        left += kind == "left"
        right += kind == "right"
    return MazePath(tuple(cell for cell, _ in states), left, right)


def solve_maze(maze: MazeGrid, question: str) -> int:
    if question not in QUESTION_KINDS:
        raise ValueError(f"unknown maze question {question!r}")
    return getattr(best_path(maze), question)


@dataclass(frozen=True)
class MazeInstance:
    maze: MazeGrid
    question: str


def gen_maze_instance(rng: Rng) -> MazeInstance:
    return MazeInstance(gen_maze(rng), rng.choice(QUESTION_KINDS))
