"""Per-kind generator, solver and payload type, keyed by puzzle kind."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from ..core import AnswerValue, Integer, PuzzleKind, Rng
from ..gridlogic import (HueBoard, QueensInstance, RottingGrid, TilingInstance, gen_colour_hue,
                         gen_nqueens, gen_rotting, gen_tiling, solve_colour_hue, solve_nqueens,
                         solve_rotting, solve_tiling)
from ..mapcolour import ColouringInstance, count_completions, gen_mapcolour
from ..maze import MazeInstance, gen_maze_instance, solve_maze
from ..mechanics import (ChainSpec, WheelInstance, gen_chain, gen_wheel, solve_chain,
                         solve_wheel)
from ..sliding import (CheckerInstance, HanoiInstance, JugsInstance, NumberSlideInstance,
                       Warehouse, WoodSlideInstance, gen_checker_move, gen_hanoi, gen_move_box,
                       gen_number_slide, gen_water_jugs, gen_wood_slide, solve_checker_move,
                       solve_hanoi, solve_move_box, solve_number_slide, solve_water_jugs,
                       solve_wood_slide)
from ..statemachines import CubeInstance, TadInstance, gen_cube, gen_tad, solve_cube, tad_solve
from ..temporal import (CalendarInstance, ClockInstance, gen_calendar, gen_clock,
                        solve_calendar, solve_clock)


@dataclass(frozen=True)
class PuzzleEntry:
    payload_type: type
    generate: Callable[[Rng], Any]
    solve: Callable[[Any], AnswerValue]


def _wheel(rng: Rng) -> WheelInstance:
    spec, query, _ = gen_wheel(rng)
    return WheelInstance(spec, query)


def _count(fn: Callable[[Any], int]) -> Callable[[Any], AnswerValue]:
    return lambda p: Integer(fn(p))


REGISTRY: dict[PuzzleKind, PuzzleEntry] = {
    PuzzleKind.BOARD_TILING: PuzzleEntry(TilingInstance, gen_tiling, solve_tiling),
    PuzzleKind.CALENDAR: PuzzleEntry(CalendarInstance, gen_calendar, solve_calendar),
    PuzzleKind.CHAIN_LINK: PuzzleEntry(ChainSpec, gen_chain,
                                       _count(lambda p: solve_chain(p).minutes)),
    PuzzleKind.CHECKER_MOVE: PuzzleEntry(CheckerInstance, gen_checker_move,
                                         _count(lambda p: solve_checker_move(p.start, p.end))),
    PuzzleKind.CLOCK: PuzzleEntry(ClockInstance, gen_clock, solve_clock),
    PuzzleKind.COLOUR_HUE: PuzzleEntry(HueBoard, gen_colour_hue, _count(solve_colour_hue)),
    PuzzleKind.MAP_COLOUR: PuzzleEntry(ColouringInstance, gen_mapcolour,
                                       _count(count_completions)),
    PuzzleKind.MAZE_SOLVE: PuzzleEntry(MazeInstance, gen_maze_instance,
                                       _count(lambda p: solve_maze(p.maze, p.question))),
    PuzzleKind.MOVE_BOX: PuzzleEntry(Warehouse, gen_move_box, _count(solve_move_box)),
    PuzzleKind.N_QUEENS: PuzzleEntry(QueensInstance, gen_nqueens, _count(solve_nqueens)),
    PuzzleKind.NUMBER_SLIDE: PuzzleEntry(
        NumberSlideInstance, gen_number_slide,
        _count(lambda p: solve_number_slide(p.board, p.question))),
    PuzzleKind.ROTTING_FRUIT: PuzzleEntry(RottingGrid, gen_rotting, _count(solve_rotting)),
    PuzzleKind.RUBIKS_CUBE: PuzzleEntry(CubeInstance, gen_cube, _count(solve_cube)),
    PuzzleKind.THINK_A_DOT: PuzzleEntry(TadInstance, gen_tad, _count(tad_solve)),
    PuzzleKind.TOWER_OF_HANOI: PuzzleEntry(HanoiInstance, gen_hanoi,
                                           _count(lambda p: solve_hanoi(p.start, p.end))),
    PuzzleKind.WATER_JUGS: PuzzleEntry(JugsInstance, gen_water_jugs,
                                       _count(lambda p: solve_water_jugs(p.start, p.goal))),
    PuzzleKind.WHEEL_OF_FORTUNE: PuzzleEntry(WheelInstance, _wheel,
                                             lambda p: solve_wheel(p.spec, p.query)),
    PuzzleKind.WOOD_SLIDE: PuzzleEntry(WoodSlideInstance, gen_wood_slide,
                                       _count(lambda p: solve_wood_slide(p.start, p.end))),
}


def entry(kind: PuzzleKind | str) -> PuzzleEntry:
    return REGISTRY[PuzzleKind(kind)]


def wheel_prizes(payload: Any) -> tuple[str, ...] | None:
    """Distractor pool for wheel answers: the labels printed on that wheel."""
    if isinstance(payload, WheelInstance):
        return tuple(seg.label for seg in payload.spec.segments)
    return None
