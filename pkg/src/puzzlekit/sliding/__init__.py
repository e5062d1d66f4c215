"""State-space puzzles solved by breadth-first search."""

from .checkers import CheckerInstance, CheckerLine, gen_checker_move, solve_checker_move
from .hanoi import HanoiInstance, HanoiState, classic_states, gen_hanoi, hanoi_classic, solve_hanoi
from .jugs import JugsInstance, JugState, gen_water_jugs, solve_water_jugs
from .klotski import (PENNANT_START, KlotskiBoard, WoodSlideInstance, gen_wood_slide,
                      pennant_optimal, pennant_states, solve_wood_slide)
from .movebox import Warehouse, gen_move_box, solve_move_box
from .numberslide import (NumberSlideInstance, SlideBoard, SlideQuestion, gen_number_slide,
                          solve_number_slide)

__all__ = [
    "CheckerInstance", "CheckerLine", "gen_checker_move", "solve_checker_move",
    "HanoiInstance", "HanoiState", "classic_states", "gen_hanoi", "hanoi_classic", "solve_hanoi",
    "JugsInstance", "JugState", "gen_water_jugs", "solve_water_jugs",
    "PENNANT_START", "KlotskiBoard", "WoodSlideInstance", "gen_wood_slide", "pennant_optimal",
    "pennant_states", "solve_wood_slide",
    "Warehouse", "gen_move_box", "solve_move_box",
    "NumberSlideInstance", "SlideBoard", "SlideQuestion", "gen_number_slide", "solve_number_slide",
]
