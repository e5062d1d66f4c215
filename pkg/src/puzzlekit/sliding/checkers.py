"""Checker Move (Toads and Frogs): greens move right, reds move left, by slide or single jump."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import GeneratorError, InvalidInstanceError, Rng
from ..search import SearchProblem, UnreachableError, bfs_shortest

GREEN, RED, EMPTY = "G", "R", "."


@dataclass(frozen=True)
class CheckerLine:
    cells: str

    def validate(self) -> None:
        if set(self.cells) - {GREEN, RED, EMPTY}:
            raise InvalidInstanceError("cells must be G, R or .")
        if self.cells.count(EMPTY) != 1 or len(self.cells) < 2:
            raise InvalidInstanceError("exactly one empty square expected")

    @property
    def greens(self) -> int:
        return self.cells.count(GREEN)

    @property
    def reds(self) -> int:
        return self.cells.count(RED)


def checker_moves(line: CheckerLine) -> list[tuple[str, CheckerLine]]:
    cells = line.cells
    hole = cells.index(EMPTY)
    out = []
    # Only checkers within two squares of the hole can move into it.
    for src in (hole - 2, hole - 1, hole + 1, hole + 2):
        if not 0 <= src < len(cells):
            continue
        piece = cells[src]
        step = hole - src
        if piece == GREEN and step > 0 or piece == RED and step < 0:
            if abs(step) == 2 and cells[(src + hole) // 2] == piece:
                continue  # may only jump over the other colour
            new = list(cells)
            new[hole], new[src] = piece, EMPTY
            out.append((f"{src}->{hole}", CheckerLine("".join(new))))
    return out


def checker_problem(start: CheckerLine) -> SearchProblem:
    return SearchProblem(start, checker_moves, lambda s: s.cells.encode())


@dataclass(frozen=True)
class CheckerInstance:
    start: CheckerLine
    end: CheckerLine


def solve_checker_move(start: CheckerLine, end: CheckerLine) -> int:
    start.validate()
    end.validate()
    try:
        dist, _ = bfs_shortest(checker_problem(start), lambda s: s.cells == end.cells)
    except UnreachableError:
        raise InvalidInstanceError("end arrangement is unreachable") from None
    return dist


def gen_checker_move(rng: Rng) -> CheckerInstance:
    for _ in range(1000):
        n = rng.randint(5, 9)
        greens = rng.randint(1, n - 2)
        pieces = [GREEN] * greens + [RED] * (n - 1 - greens) + [EMPTY]
        rng.shuffle(pieces)
        start = CheckerLine("".join(pieces))
        state, steps = start, rng.randint(4, 12)
        for _ in range(steps):
            options = checker_moves(state)
            if not options:
                break
            state = rng.choice(options)[1]
        if state != start:
            return CheckerInstance(start, state)
    raise GeneratorError("no movable checker arrangement found")
