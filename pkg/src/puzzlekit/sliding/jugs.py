"""Water Jugs: pour between jugs until the source empties or the target fills."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import GeneratorError, InvalidInstanceError, Rng
from ..search import SearchProblem, UnreachableError, bfs_distances, bfs_shortest

MAX_GOAL_DISTANCE = 5


@dataclass(frozen=True)
class JugState:
    capacities: tuple[int, ...]
    amounts: tuple[int, ...]

    def validate(self) -> None:
        if not 3 <= len(self.capacities) <= 5 or len(self.amounts) != len(self.capacities):
            raise InvalidInstanceError("between 3 and 5 jugs expected")
        if any(not 0 <= a <= c for a, c in zip(self.amounts, self.capacities)):
            raise InvalidInstanceError("amounts must lie within capacities")


def pours(s: JugState) -> list[tuple[str, JugState]]:
    out = []
    n = len(s.amounts)
    for i in range(n):
        for j in range(n):
            if i == j or s.amounts[i] == 0 or s.amounts[j] == s.capacities[j]:
                continue
            moved = min(s.amounts[i], s.capacities[j] - s.amounts[j])
            amounts = list(s.amounts)
            amounts[i] -= moved
            amounts[j] += moved
            out.append((f"{i}->{j}", JugState(s.capacities, tuple(amounts))))
    return out


def jug_problem(start: JugState) -> SearchProblem:
    return SearchProblem(start, pours, lambda s: bytes(s.amounts))


@dataclass(frozen=True)
class JugsInstance:
    start: JugState
    goal: tuple[int, ...]


def solve_water_jugs(start: JugState, goal: tuple[int, ...]) -> int:
    start.validate()
    goal = tuple(goal)
    if len(goal) != len(start.amounts) or sum(goal) != sum(start.amounts):
        raise InvalidInstanceError("goal must keep the total amount of water")
    if any(not 0 <= g <= c for g, c in zip(goal, start.capacities)):
        raise InvalidInstanceError("goal amounts must lie within capacities")
    try:
        dist, _ = bfs_shortest(jug_problem(start), lambda s: s.amounts == goal)
    except UnreachableError:
        raise InvalidInstanceError("goal amounts are unreachable") from None
    return dist


def gen_water_jugs(rng: Rng) -> JugsInstance:
    for _ in range(1000):
        k = rng.randint(3, 5)
        amounts = tuple(rng.randint(1, 14) for _ in range(k))
        capacities = tuple(a + rng.randint(0, 6) for a in amounts)
        start = JugState(capacities, amounts)
        ball = bfs_distances(jug_problem(start), max_depth=MAX_GOAL_DISTANCE)
        candidates = sorted(key for key, d in ball.items() if d >= 1)
        if candidates:
            return JugsInstance(start, tuple(rng.choice(candidates)))
    raise GeneratorError("no jug configuration admits a pour")
