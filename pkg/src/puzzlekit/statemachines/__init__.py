"""Cube move engine and Think-a-Dot automaton."""

from .cube import (CubeInstance, CubeState, cube_apply, cube_count, gen_cube, parse_moves,
                   solve_cube, solved_cube)
from .thinkadot import TadConfig, TadInstance, gen_tad, tad_drop, tad_run, tad_solve

__all__ = [
    "CubeInstance", "CubeState", "cube_apply", "cube_count", "gen_cube", "parse_moves",
    "solve_cube", "solved_cube",
    "TadConfig", "TadInstance", "gen_tad", "tad_drop", "tad_run", "tad_solve",
]
