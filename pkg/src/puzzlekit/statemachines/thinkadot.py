"""Think-a-Dot: eight two-colour discs that route a dropped ball and flip as it passes."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import InvalidInstanceError, Rng

YELLOW, BLUE = False, True
HOLES = ("left", "center", "right")
SCOPES = ("top", "middle", "bottom", "all")
ROWS = {"top": (0, 1, 2), "middle": (3, 4), "bottom": (5, 6, 7), "all": tuple(range(8))}

# A disc showing yellow sends the ball left, blue sends it right; the colour
# read is the one shown before the disc flips.
DEFLECT = {YELLOW: "left", BLUE: "right"}

# disc -> (next disc or exit when deflected left, ... when deflected right)
ROUTES: dict[int, tuple[int | str, int | str]] = {
    0: (5, 3),
    1: (3, 4),
    2: (4, 7),
    3: (5, 6),
    4: (6, 7),
    5: ("left", "right"),
    6: ("left", "right"),
    7: ("left", "right"),
}
ENTRY = {"left": 0, "center": 1, "right": 2}


@dataclass(frozen=True)
class TadConfig:
    discs: tuple[bool, ...]  # True = blue face showing
    drops: tuple[str, ...]

    def validate(self) -> None:
        if len(self.discs) != 8:
            raise InvalidInstanceError("eight discs expected")
        if not 1 <= len(self.drops) <= 4 or any(h not in HOLES for h in self.drops):
            raise InvalidInstanceError("between 1 and 4 drops through left/center/right")


def tad_drop(discs: tuple[bool, ...], hole: str) -> tuple[tuple[bool, ...], str, tuple[int, ...]]:
    """Drop one ball; returns (new discs, exit side, discs visited)."""
    state = list(discs)
    node: int | str = ENTRY[hole]
    visited = []
    while isinstance(node, int):
        visited.append(node)
        side = DEFLECT[state[node]]
        state[node] = not state[node]
        node = ROUTES[node][0 if side == "left" else 1]
    return tuple(state), node, tuple(visited)


def tad_run(discs: tuple[bool, ...], drops: tuple[str, ...]) -> tuple[bool, ...]:
    for hole in drops:
        discs, _, _ = tad_drop(discs, hole)
    return discs


@dataclass(frozen=True)
class TadInstance:
    config: TadConfig
    colour: str  # "yellow" | "blue"
    scope: str


def tad_solve(inst: TadInstance) -> int:
    inst.config.validate()
    if inst.colour not in ("yellow", "blue") or inst.scope not in SCOPES:
        raise InvalidInstanceError("unknown colour or row scope")
    final = tad_run(inst.config.discs, inst.config.drops)
    want = BLUE if inst.colour == "blue" else YELLOW
    return sum(final[i] == want for i in ROWS[inst.scope])


def gen_tad(rng: Rng) -> TadInstance:
    discs = tuple(rng.coin() for _ in range(8))
    drops = tuple(rng.choice(HOLES) for _ in range(rng.randint(1, 4)))
    return TadInstance(TadConfig(discs, drops), rng.choice(("yellow", "blue")), rng.choice(SCOPES))
