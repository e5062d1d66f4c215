"""Wood Slide: Klotski blocks on a 5-row by 4-column tray, one-unit slides."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from ..core import InvalidInstanceError, Rng
from ..search import SearchProblem, UnreachableError, bfs_shortest

ROWS, COLS = 5, 4

Block = tuple[int, int, int, int]  # (height, width, top row, left col)

# Shapes are (height, width).
CENSUS = Counter({(2, 2): 1, (1, 2): 4, (2, 1): 2, (1, 1): 2})

_DELTA = {"up": (-1, 0), "down": (1, 0), "left": (0, -1), "right": (0, 1)}


@dataclass(frozen=True)
class KlotskiBoard:
    blocks: tuple[Block, ...]  # kept sorted, so equal-shape blocks are interchangeable

    @classmethod
    def of(cls, blocks) -> "KlotskiBoard":
        return cls(tuple(sorted(tuple(b) for b in blocks)))

    @classmethod
    def from_rows(cls, rows: list[str]) -> "KlotskiBoard":
        """Parse a letter picture: equal letters form one block, '.' is empty."""
        cells: dict[str, list[tuple[int, int]]] = {}
        for r, row in enumerate(rows):
            for c, ch in enumerate(row):
                if ch != ".":
                    cells.setdefault(ch, []).append((r, c))
        blocks = []
        for cs in cells.values():
            r0, c0 = min(r for r, _ in cs), min(c for _, c in cs)
            h, w = max(r for r, _ in cs) - r0 + 1, max(c for _, c in cs) - c0 + 1
            if h * w != len(cs):
                raise InvalidInstanceError("blocks must be rectangles")
            blocks.append((h, w, r0, c0))
        return cls.of(blocks)

    def occupied(self) -> dict[tuple[int, int], int]:
        owner = {}
        for k, (h, w, r, c) in enumerate(self.blocks):
            for i in range(h):
                for j in range(w):
                    if (r + i, c + j) in owner:
                        raise InvalidInstanceError("blocks overlap")
                    owner[r + i, c + j] = k
        return owner

    def validate(self) -> None:
        if Counter((h, w) for h, w, _, _ in self.blocks) != CENSUS:
            raise InvalidInstanceError("block census must be one 2*2, four 1*2, two 2*1, two 1*1")
        for h, w, r, c in self.blocks:
            if r < 0 or c < 0 or r + h > ROWS or c + w > COLS:
                raise InvalidInstanceError("block outside the tray")
        self.occupied()

    def empty_cells(self) -> list[tuple[int, int]]:
        occ = self.occupied()
        return [(r, c) for r in range(ROWS) for c in range(COLS) if (r, c) not in occ]

    def key(self) -> bytes:
        return bytes(v for block in self.blocks for v in block)

    def moves(self) -> list[tuple[str, "KlotskiBoard"]]:
        occ = self.occupied()
        out = []
        for k, (h, w, r, c) in enumerate(self.blocks):
            for name, (dr, dc) in _DELTA.items():
                nr, nc = r + dr, c + dc
                if nr < 0 or nc < 0 or nr + h > ROWS or nc + w > COLS:
                    continue
                if any(occ.get((nr + i, nc + j), k) != k for i in range(h) for j in range(w)):
                    continue
                rest = self.blocks[:k] + self.blocks[k + 1:]
                out.append((f"{h}x{w}@{r},{c} {name}", KlotskiBoard.of(rest + ((h, w, nr, nc),))))
        return out

    def apply(self, label: str) -> "KlotskiBoard":
        for lbl, nxt in self.moves():
            if lbl == label:
                return nxt
        raise InvalidInstanceError(f"illegal move {label!r}")

    def as_rows(self) -> list[str]:
        grid = [["."] * COLS for _ in range(ROWS)]
        for k, (h, w, r, c) in enumerate(self.blocks):
            for i in range(h):
                for j in range(w):
                    grid[r + i][c + j] = "ABCDEFGHI"[k]
        return ["".join(row) for row in grid]


PENNANT_START = KlotskiBoard.from_rows(["AABB", "AACC", "DE..", "FGHH", "FGII"])
PENNANT_GOAL_BLOCK: Block = (2, 2, 3, 0)


def klotski_problem(start: KlotskiBoard) -> SearchProblem:
    return SearchProblem(start, KlotskiBoard.moves, KlotskiBoard.key)


@dataclass(frozen=True)
class WoodSlideInstance:
    start: KlotskiBoard
    end: KlotskiBoard


def solve_wood_slide(start: KlotskiBoard, end: KlotskiBoard) -> int:
    start.validate()
    end.validate()
    target = end.key()
    try:
        dist, _ = bfs_shortest(klotski_problem(start), lambda b: b.key() == target)
    except UnreachableError:
        raise InvalidInstanceError("end configuration is unreachable") from None
    return dist


@lru_cache(maxsize=1)
def pennant_optimal() -> tuple[str, ...]:
    """Move labels of one shortest Pennant solution (2*2 block top-left to bottom-left)."""
    _, path = bfs_shortest(klotski_problem(PENNANT_START),
                           lambda b: PENNANT_GOAL_BLOCK in b.blocks)
    return tuple(path)


@lru_cache(maxsize=1)
def pennant_states() -> tuple[KlotskiBoard, ...]:
    states = [PENNANT_START]
    for label in pennant_optimal():
        states.append(states[-1].apply(label))
    return tuple(states)


def gen_wood_slide(rng: Rng) -> WoodSlideInstance:
    states = pennant_states()
    gap = rng.randint(1, 5)
    i = rng.randint(0, len(states) - 1 - gap)
    return WoodSlideInstance(states[i], states[i + gap])
