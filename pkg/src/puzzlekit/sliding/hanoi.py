"""Tower of Hanoi with three rods."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..core import InvalidInstanceError, Rng
from ..search import SearchProblem, bfs_shortest

RODS = 3


@dataclass(frozen=True)
class HanoiState:
    n: int
    peg_of: tuple[int, ...]  # peg_of[d] is the rod holding disk d; disk 0 is the smallest

    def validate(self) -> None:
        if not 3 <= self.n <= 6 or len(self.peg_of) != self.n:
            raise InvalidInstanceError("between 3 and 6 disks expected")
        if any(p not in range(RODS) for p in self.peg_of):
            raise InvalidInstanceError("rods are numbered 0, 1, 2")

    def stacks(self) -> list[list[int]]:
        """Disks per rod from bottom to top."""
        out: list[list[int]] = [[] for _ in range(RODS)]
        for d in reversed(range(self.n)):
            out[self.peg_of[d]].append(d)
        return out

    def moves(self) -> list[tuple[str, "HanoiState"]]:
        tops = {}
        for d in reversed(range(self.n)):
            tops[self.peg_of[d]] = d  # ends as the smallest disk on each rod
        out = []
        for src, disk in sorted(tops.items()):
            for dst in range(RODS):
                if dst != src and (dst not in tops or tops[dst] > disk):
                    peg_of = list(self.peg_of)
                    peg_of[disk] = dst
                    out.append((f"{disk}:{src}->{dst}", HanoiState(self.n, tuple(peg_of))))
        return out


def hanoi_classic(n: int, src: int = 0, dst: int = 2) -> list[tuple[int, int, int]]:
    """Optimal (disk, from, to) moves taking the whole stack from ``src`` to ``dst``."""
    if n == 0:
        return []
    spare = 3 - src - dst
    return hanoi_classic(n - 1, src, spare) + [(n - 1, src, dst)] + hanoi_classic(n - 1, spare, dst)


@lru_cache(maxsize=None)
def classic_states(n: int) -> tuple[HanoiState, ...]:
    state = [0] * n
    states = [HanoiState(n, tuple(state))]
    for disk, _, to in hanoi_classic(n):
        state[disk] = to
        states.append(HanoiState(n, tuple(state)))
    return tuple(states)


@dataclass(frozen=True)
class HanoiInstance:
    start: HanoiState
    end: HanoiState


def solve_hanoi(start: HanoiState, end: HanoiState) -> int:
    start.validate()
    end.validate()
    if start.n != end.n:
        raise InvalidInstanceError("disk counts differ")
    problem = SearchProblem(start, HanoiState.moves, lambda s: bytes(s.peg_of))
    dist, _ = bfs_shortest(problem, lambda s: s.peg_of == end.peg_of)
    return dist


def gen_hanoi(rng: Rng) -> HanoiInstance:
    n = rng.randint(3, 6)
    states = classic_states(n)
    gap = rng.randint(1, 6)
    i = rng.randint(0, len(states) - 1 - gap)
    return HanoiInstance(states[i], states[i + gap])
