"""Board Tiling, Colour Hue, N-Queens and Rotting Fruit."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .core import GeneratorError, GridBoard, InvalidInstanceError, Rng, YesNo
from .search import SearchLimitError, backtrack_enumerate

# ---------------------------------------------------------------------------
# Board tiling

HOLE, CELL = 0, 1


def chequer_colour(r: int, c: int) -> int:
    """0 = dark (the (0, 0) colour), 1 = light."""
    return (r + c) % 2


@dataclass(frozen=True)
class TilingInstance:
    rows: int
    cols: int
    removed: tuple[tuple[int, int], ...]

    def validate(self) -> None:
        if self.rows < 2 or self.cols < 2:
            raise InvalidInstanceError("a chequered board needs at least 2 rows and 2 columns")
        expected = 2 if (self.rows * self.cols) % 2 == 0 else 1
        if len(self.removed) != expected or len(set(self.removed)) != expected:
            raise InvalidInstanceError(f"expected {expected} distinct removed cells")
        for r, c in self.removed:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise InvalidInstanceError(f"removed cell {(r, c)} outside the board")

    @property
    def dominoes(self) -> int:
        return (self.rows * self.cols - len(self.removed)) // 2

    def board(self) -> GridBoard:
        cells = [CELL] * (self.rows * self.cols)
        for r, c in self.removed:
            cells[r * self.cols + c] = HOLE
        return GridBoard(self.rows, self.cols, tuple(cells))


def solve_tiling(inst: TilingInstance) -> YesNo:
    """Domino tileability of the mutilated board from chequer colour counts alone."""
    inst.validate()
    counts = [0, 0]
    for r in range(inst.rows):
        for c in range(inst.cols):
            counts[chequer_colour(r, c)] += 1
    for r, c in inst.removed:
        counts[chequer_colour(r, c)] -= 1
    return YesNo(counts[0] == counts[1])


def brute_force_tileable(board: GridBoard) -> YesNo:
    """Exhaustive domino placement on the non-hole cells (boards up to 24 cells)."""
    if board.rows * board.cols > 24:
        raise SearchLimitError("brute-force tiling is limited to 24 cells")
    free = [v != HOLE for v in board.cells]
    cols = board.cols

    def place() -> bool:
        try:
            i = free.index(True)
        except ValueError:
            return True
        r, c = divmod(i, cols)
        free[i] = False
        # First free cell in row-major order: its partner is to the right or below.
        for j in ((i + 1) if c + 1 < cols else None, (i + cols) if r + 1 < board.rows else None):
            if j is not None and free[j]:
                free[j] = False
                if place():
                    free[i] = free[j] = True
                    return True
                free[j] = True
        free[i] = True
        return False

    return YesNo(place())


def gen_tiling(rng: Rng) -> TilingInstance:
    rows, cols = rng.randint(4, 9), rng.randint(4, 9)
    cells = [(r, c) for r in range(rows) for c in range(cols)]
    removed = tuple(sorted(rng.sample(cells, 2 if rows * cols % 2 == 0 else 1)))
    return TilingInstance(rows, cols, removed)


# ---------------------------------------------------------------------------
# Colour hue

RGB = tuple[int, int, int]


@dataclass(frozen=True)
class HueBoard:
    rows: int
    cols: int
    ideal: tuple[RGB, ...]
    shuffled: tuple[int, ...]  # ideal index -> displayed index

    def validate(self) -> None:
        n = self.rows * self.cols
        if len(self.ideal) != n or sorted(self.shuffled) != list(range(n)):
            raise InvalidInstanceError("shuffle must be a permutation of the tiles")
        if len(set(self.ideal)) != n:
            raise InvalidInstanceError("tile colours must be distinct")

    def displayed(self) -> tuple[RGB, ...]:
        out: list[RGB] = [(0, 0, 0)] * len(self.ideal)
        for ideal_index, shown_at in enumerate(self.shuffled):
            out[shown_at] = self.ideal[ideal_index]
        return tuple(out)


def interpolate_corners(rows: int, cols: int, corners: tuple[RGB, RGB, RGB, RGB]) -> tuple[RGB, ...]:
    """Bilinear blend of (top-left, top-right, bottom-left, bottom-right) colours."""
    tl, tr, bl, br = corners
    tiles = []
    for r in range(rows):
        v = r / (rows - 1)
        for c in range(cols):
            u = c / (cols - 1)
            tiles.append(tuple(
                int(round((1 - v) * ((1 - u) * a + u * b) + v * ((1 - u) * p + u * q)))
                for a, b, p, q in zip(tl, tr, bl, br)))
    return tuple(tiles)


def solve_colour_hue(board: HueBoard) -> int:
    """Swap count of selection sort from the displayed order back to the ideal one."""
    board.validate()
    # arrangement[pos] = ideal index of the tile currently shown at pos
    arrangement = [0] * len(board.shuffled)
    for ideal_index, shown_at in enumerate(board.shuffled):
        arrangement[shown_at] = ideal_index
    where = {tile: pos for pos, tile in enumerate(arrangement)}
    swaps = 0
    for pos in range(len(arrangement)):
        if arrangement[pos] != pos:
            other = where[pos]
            moved = arrangement[pos]
            arrangement[pos], arrangement[other] = pos, moved
            where[pos], where[moved] = pos, other
            swaps += 1
    return swaps


def gen_colour_hue(rng: Rng) -> HueBoard:
    rows, cols = rng.randint(3, 6), rng.randint(3, 6)
    n = rows * cols
    for _ in range(1000):
        corners = tuple(tuple(rng.randint(0, 255) for _ in range(3)) for _ in range(4))
        ideal = interpolate_corners(rows, cols, corners)
        if len(set(ideal)) == n:
            break
    else:
        raise GeneratorError("could not find corner colours with distinct tiles")
    k = rng.randint(2, min(10, n))
    positions = sorted(rng.sample(range(n), k))
    targets = list(positions)
    while any(a == b for a, b in zip(positions, targets)):
        rng.shuffle(targets)
    perm = list(range(n))
    for src, dst in zip(positions, targets):
        perm[src] = dst
    return HueBoard(rows, cols, ideal, tuple(perm))


# ---------------------------------------------------------------------------
# N-Queens


class AmbiguousCompletionError(InvalidInstanceError):
    """Two valid completions place the hidden queens at different distances."""


def queens_compatible(placed: tuple[int, ...]) -> bool:
    """Whether the last queen of a row-ordered placement attacks none of the others."""
    r = len(placed) - 1
    c = placed[r]
    return all(pc != c and abs(pc - c) != r - pr for pr, pc in enumerate(placed[:-1]))


@lru_cache(maxsize=None)
def enumerate_nqueens(n: int) -> tuple[tuple[int, ...], ...]:
    """All non-attacking placements as column-per-row tuples, lexicographically."""
    return tuple(backtrack_enumerate(n, lambda slot, partial: range(n), queens_compatible))


def is_valid_queens(solution: tuple[int, ...]) -> bool:
    return all(queens_compatible(solution[:k + 1]) for k in range(len(solution)))


@dataclass(frozen=True)
class QueensInstance:
    n: int
    full_solution: tuple[int, ...]
    hidden_rows: tuple[int, int]

    def validate(self) -> None:
        if len(self.full_solution) != self.n or not is_valid_queens(self.full_solution):
            raise InvalidInstanceError("full_solution is not a valid placement")
        a, b = self.hidden_rows
        if a == b or not (0 <= a < self.n and 0 <= b < self.n):
            raise InvalidInstanceError("need two distinct hidden rows")

    def shown(self) -> list[tuple[int, int]]:
        return [(r, c) for r, c in enumerate(self.full_solution) if r not in self.hidden_rows]


def queens_completions(inst: QueensInstance) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    r1, r2 = sorted(inst.hidden_rows)
    base = list(inst.full_solution)
    found = []
    for c1 in range(inst.n):
        for c2 in range(inst.n):
            base[r1], base[r2] = c1, c2
            if is_valid_queens(tuple(base)):
                found.append(((r1, c1), (r2, c2)))
    return found


def solve_nqueens(inst: QueensInstance) -> int:
    inst.validate()
    completions = queens_completions(inst)
    if not completions:
        raise InvalidInstanceError("the shown queens admit no completion")
    distances = {abs(a[0] - b[0]) + abs(a[1] - b[1]) for a, b in completions}
    if len(distances) != 1:
        raise AmbiguousCompletionError(f"completions disagree on distance: {sorted(distances)}")
    return distances.pop()


def gen_nqueens(rng: Rng) -> QueensInstance:
    for _ in range(1000):
        n = rng.choice((8, 9, 10))
        solution = rng.choice(enumerate_nqueens(n))
        hidden = tuple(sorted(rng.sample(range(n), 2)))
        inst = QueensInstance(n, solution, hidden)
        try:
            solve_nqueens(inst)
        except AmbiguousCompletionError:
            continue
        return inst
    raise GeneratorError("no unambiguous N-Queens instance found")


# ---------------------------------------------------------------------------
# Rotting fruit

EMPTY, FRESH, ROTTEN = 0, 1, 2

FRUIT_NAMES = ("kiwi", "orange", "apple", "peach", "plum", "lemon", "mango", "pear")


@dataclass(frozen=True)
class RottingGrid:
    board: GridBoard
    fruit: str = "kiwi"

    def validate(self) -> None:
        if sum(v == ROTTEN for v in self.board.cells) != 1:
            raise InvalidInstanceError("exactly one rotten fruit expected")
        if any(v not in (EMPTY, FRESH, ROTTEN) for v in self.board.cells):
            raise InvalidInstanceError("unknown cell value")


def rot_times(board: GridBoard) -> dict[tuple[int, int], int]:
    sources = board.positions(ROTTEN)
    dist = {p: 0 for p in sources}
    queue = deque(sources)
    while queue:
        r, c = queue.popleft()
        for nr, nc in board.neighbours4(r, c):
            if board.at(nr, nc) == FRESH and (nr, nc) not in dist:
                dist[nr, nc] = dist[r, c] + 1
                queue.append((nr, nc))
    return dist


def solve_rotting(grid: RottingGrid) -> int:
    grid.validate()
    dist = rot_times(grid.board)
    fresh = grid.board.positions(FRESH)
    if any(p not in dist for p in fresh):
        raise InvalidInstanceError("some fresh fruit never rots")
    return max((dist[p] for p in fresh), default=0)


def gen_rotting(rng: Rng) -> RottingGrid:
    fruit = rng.choice(FRUIT_NAMES)
    for _ in range(1000):
        rows, cols = rng.randint(3, 6), rng.randint(3, 6)
        n = rows * cols
        empties = set(rng.sample(range(n), rng.randint(0, (n * 2) // 5)))
        fruit_cells = [i for i in range(n) if i not in empties]
        if not fruit_cells:
            continue
        source = rng.choice(fruit_cells)
        cells = tuple(EMPTY if i in empties else ROTTEN if i == source else FRESH
                      for i in range(n))
        grid = RottingGrid(GridBoard(rows, cols, cells), fruit)
        try:
            solve_rotting(grid)
        except InvalidInstanceError:
            continue
        return grid
    raise GeneratorError("could not build a connected fruit grid")
