"""Question text for every puzzle kind, filled from instance parameters."""

from __future__ import annotations

from typing import Any, Callable

from ..core import PuzzleKind
from ..mechanics import wheel_rotation_label
from ..statemachines.cube import FACE_NAMES, format_moves
from ..temporal import MONTH_NAMES

_NUMBER_WORDS = ("zero", "one", "two", "three", "four", "five", "six")
_ORDINALS = ("first", "second", "third", "fourth", "fifth")


def _plural(n: int, word: str) -> str:
    return f"{n} {word}" + ("" if n == 1 else "s")


def _duration(minutes: int) -> str:
    h, m = divmod(abs(minutes), 60)
    return f"{_plural(h, 'hour')} and {_plural(m, 'minute')}" if h else _plural(m, "minute")


def _join(values) -> str:
    return ", ".join(str(v) for v in values)


def q_tiling(p) -> str:
    total = p.rows * p.cols
    k = len(p.removed)
    removed = "Two of the squares have" if k == 2 else "One of the squares has"
    cells = "cells" if k == 2 else "cell"
    left = total - k
    return (f"The checkerboard shown in the image was originally of {p.rows} * {p.cols} in dimension "
            f"having a total of {total} squares. It uses two colours of squares, one light yellow and "
            f"one dark yellow, in a chequered pattern. {removed} been removed from the board in the "
            f"position of the white coloured {cells}, as shown in the image. You have {p.dominoes} "
            f"dominoes of size 2 * 1. You can use them as is or you can rotate them to use as a 1 * 2 "
            f"domino. Is it possible to place all the {p.dominoes} dominoes in the checkerboard to "
            f"exactly cover all the remaining {left} squares? Answer Yes or No.")


def q_calendar(p) -> str:
    kind = "leap" if p.shown_year_leap else "non-leap"
    date = f"{MONTH_NAMES[p.query_month - 1]} {p.query_day}"
    other = "leap" if p.query_year_leap else "non-leap"
    head = f"The image shows the calendar of a month of a particular {kind} year."
    if p.query_year_offset == 0:
        return f"{head} Which day of the week was on {date} of that year?"
    if p.query_year_offset == -1:
        return (f"{head} The previous year was a {other} year. "
                f"Which day of the week was on {date} of the previous year?")
    return (f"{head} The next year will be a {other} year. "
            f"Which day of the week will be on {date} of the next year?")


def q_chain(p) -> str:
    who = p.owner
    if p.open_singletons == 0:
        opening = "Initially, all the pieces are closed."
    else:
        segs = "1 segment" if p.open_singletons == 1 else f"{p.open_singletons} segments each"
        opening = (f"Initially, {who} has {segs} with 1 open piece as shown in the image. "
                   f"All the other pieces are closed.")
    return (f"{who} has {p.segment_count} segments of chains of different lengths as shown in the "
            f"image. The total length of all the segments combined is {p.total_pieces} pieces. {who} "
            f"has a saw machine with which a closed piece can be cut opened, and a welding machine "
            f"with which an open piece can be closed. Each cut takes {p.cut_minutes} minutes and each "
            f"welding takes {p.weld_minutes} minutes. {opening} {who} now wants to make the longest "
            f"possible necklace using all the available {p.total_pieces} pieces. Each piece in the "
            f"necklace would be connected to exactly two other pieces. This would require cutting "
            f"open some pieces and then joining all the resulting segments together. What is the "
            f"minimum time in which {who} can create the necklace?")


def q_checkers(p) -> str:
    n = len(p.start.cells)
    g, r = p.start.greens, p.start.reds
    return (f"A checker game is being played on a grid of {n} squares with {g} green and {r} red "
            f"checkers. Initially, the checkers are arranged as shown in the starting configuration "
            f"with the {n - 1} checkers occupying {n - 1} squares and one unoccupied square. Green "
            f"checkers only move rightward and red checkers only move leftward. Every move is either "
            f"i) a slide to the adjacent empty square, or ii) a jump over one position to an empty "
            f"square, provided the checker being jumped over is of a different colour. Each square "
            f"can accommodate a maximum of one checker at any time. How many moves are required to "
            f"reach the ending configuration from the starting configuration following the "
            f"specified rules?")


def q_clock(p) -> str:
    who, span = p.subject, _duration(p.delta_minutes)
    tail = "The current time is shown on the clock. The clock is a standard analog clock without the seconds hand."
    if p.delta_minutes < 0:
        return f"{who} came to an event {span} ago. {tail} What was the time when {who} came to the event?"
    return f"{who} will come to an event in {span}. {tail} What will be the time when {who} comes to the event?"


def q_colour_hue(p) -> str:
    return (f"A {p.rows} * {p.cols} board consists of {p.rows * p.cols} different coloured tiles. "
            f"A random state of the board is shown in (A). The ideal state of the board is shown in "
            f"(B). A swap consists of selecting any two tiles in the board and switching their "
            f"positions. What is the minimum number of swaps required to restore the ideal state of "
            f"the board from (A)?")


def q_map(p) -> str:
    n = p.map.size
    fixed = n - len(p.masked)
    return (f"You are given an incomplete map of a country having {n} different regions. The "
            f"objective is to colour the regions of the map using only the four available colours: "
            f"red, green, blue and yellow, such that no two adjacent regions have the same colour. "
            f"Adjacent regions are defined as two regions that share a common boundary of non-zero "
            f"length. The regions indicated by numbers 1 to {fixed} have already been coloured, as "
            f"shown in the image. The regions indicated by numbers {fixed + 1} to {n} are shown in "
            f"white as they are yet to be coloured. You need to assign colours to these regions in "
            f"a way such that it doesn't violate the objective. Each unique colour combination of "
            f"the regions would result in a unique complete map. How many unique complete maps can "
            f"be created by colouring all the white regions starting from the given incomplete map?")


_MAZE_ASKS = {
    "left_turns": "What is the total number of left turns do you need to make in this optimal path?",
    "right_turns": "What is the total number of right turns do you need to make in this optimal path?",
    "total_turns": ("What is the combined number of left and right turns do you need to make in "
                    "this optimal path?"),
    "cells_visited": ("How many cells do you need to visit in this optimal path including the "
                      "entrance and exit cells?"),
}


def q_maze(p) -> str:
    n = p.maze.size
    return (f"This is maze having {n} * {n} cells. The empty cells are coloured white and the "
            f"obstacle cells are coloured black. From an empty cell, you can only move up, down, "
            f"left, or right to another adjacent empty cell. You cannot move diagonally between two "
            f"empty cells and cannot step into a cell with an obstacle. The entry cell of the maze "
            f"is shown with the green arrow, and you enter it moving rightward. The exit cell of the "
            f"maze is shown with the blue arrow. Suppose you have found the most optimal path in the "
            f"maze between the entrance and exit, where you need to go through the least number of "
            f"empty cells and you need to make the least number of left and right turns. "
            + _MAZE_ASKS[p.question])


def q_move_box(p) -> str:
    return (f"A storekeeper is a puzzle in which the player pushes boxes around in a warehouse "
            f"trying to get them to target locations. The game is represented by a {p.board.rows} x "
            f"{p.board.cols} grid where each element is a wall, floor, or box. The player is the "
            f"blue circle, the box is the brown square and the end flag is the red flag. Your task "
            f"is to move the box to the end flag under the following rules: 1. The box can be moved "
            f"to an adjacent free cell by standing next to the box and then moving in the direction "
            f"of the box by 1 grid. This is a push. 2. The player cannot walk through the box. What "
            f"is the minimum number of pushes to move the box to the end flag?")


def q_queens(p) -> str:
    n = p.n
    article = "an" if n in (8, 11, 18) else "a"
    return (f"You are given {article} {n} * {n} chessboard. The Manhattan distance between two squares in a "
            f"chessboard is equal to the minimal number of orthogonal King moves between these "
            f"squares on the otherwise empty board. The objective is to place {n} chess queens on "
            f"this board so that no two queens threaten each other; i.e. no two queens share the "
            f"same row, column, or diagonal. {n - 2} queens have already been placed in some of the "
            f"squares of the board, as shown in the image. Suppose you pick two squares to place the "
            f"two remaining queen pieces in a way that fulfills the objective. What is the Manhattan "
            f"distance between these two squares?")


def q_number_slide(p) -> str:
    b, q = p.board, p.question
    n = b.n
    head = (f"The board shown in the image is a sliding puzzle of {n} * {n} tile dimensions. It has "
            f"{n * n - 1} numbered tiles and one unoccupied (open) position. Tiles in the same row or "
            f"column of the open position can be moved by sliding them horizontally or vertically, "
            f"respectively. All tiles always stay and move inside the red boundary wall, as shown in "
            f"the image. A move is defined as moving the open position by one tile unit in any "
            f"available direction.")
    moves = _plural(q.n_moves, "move")
    if q.style == "count":
        return (f"{head} You start from the board position shown in the image and perform exactly "
                f"{moves}. How many unique board positions can be reached after performing exactly "
                f"{moves}?")
    if q.style == "extremal":
        where = (f"the {_ORDINALS[q.index]} row from the top" if q.axis == "row"
                 else f"the {_ORDINALS[q.index]} column from the left")
        word = "maximum" if q.stat == "max" else "minimum"
        return (f"{head} You start from the board position shown in the image and perform exactly "
                f"{moves}. What is the {word} sum that you can achieve across {where} in the final "
                f"board position?")
    line = "row" if q.axis == "row" else "column"
    ask = {"max": "the maximum", "min": "the minimum", "sum": "the sum"}[q.stat]
    return (f"{head} You start from the board position shown in the image and perform {moves} where "
            f"the open position is seen to be moved in the following way: {_join(q.moves)}. What is "
            f"{ask} of numbers in the {line} that now has the open position?")


def q_rotting(p) -> str:
    f = p.fruit
    return (f"You are given a {p.board.rows} x {p.board.cols} grid in which each cell can contain "
            f"either no {f}, one fresh {f}, or one rotten {f}. Every minute, any fresh {f} that is "
            f"4-directionally adjacent to a rotten {f} also becomes rotten. What is the minimum "
            f"number of minutes that must elapse until no cell has a fresh {f}?")


def q_cube(p) -> str:
    return (f"A 3 * 3 Rubik's Cube has six different coloured panels: red, green, blue, yellow, "
            f"orange, and grey. The initial state of the cube in terms of the different colour "
            f"positions in its six faces is shown in the image. To represent the movements of the "
            f"cube we use six letters: U for Up, D for Down, L for Left, R for Right, F for Front, B "
            f"for Back. These letters are used in sequence where you need to perform each letter in "
            f"the sequence from left to right. Each letter tells you to move that face clockwise by "
            f"90 degrees. A number 'n' immediately after a letter denotes that you need to move that "
            f"face clockwise by 90 * n degrees. For example, 'U R3' would mean rotating the up face "
            f"90 degrees clockwise and then rotating the right face 270 degrees clockwise. You "
            f"perform the move sequence '{format_moves(p.moves)}' starting from the state shown in "
            f"the image. What would be the number of small 1 * 1 {p.colour} squares in the "
            f"{FACE_NAMES[p.face]} face after completing the move sequence?")


_SCOPE_TEXT = {"top": "the top row", "middle": "the middle row", "bottom": "the bottom row",
               "all": "all the rows"}


def q_tad(p) -> str:
    drops = p.config.drops
    k = len(drops)
    if k == 1:
        dropped = f"One ball is dropped through the following hole: {drops[0]}."
    else:
        dropped = (f"{_NUMBER_WORDS[k].capitalize()} balls are dropped in sequence through the "
                   f"following holes: {_join(drops)}.")
    return (f"The toy shown in the figure has eight coloured disks on its front, and three holes on "
            f"its top - left, right, and center - through which a ball bearing could be dropped. "
            f"Each disk would display either a yellow or blue face. When a ball passes through a "
            f"disc it tips the disk mechanism which flips the face colour. A disc showing yellow "
            f"before the ball arrives deflects it to the left, and a disc showing blue deflects it "
            f"to the right. The vertical walls between the discs would then determine the path of "
            f"motion of the ball. A dropped ball always passes through exactly one disc in each of "
            f"the top and the bottom row. Depending on the configuration of the top three discs it "
            f"may or may not pass through the middle row. Finally, when the ball falls to the bottom "
            f"it would exit either to a hole on the left or the right of the device. {dropped} "
            f"Consider the toy configuration after all the balls have been dropped and they have "
            f"exited from the bottom. How many {p.colour} faces can be seen in total in "
            f"{_SCOPE_TEXT[p.scope]} now?")


def q_hanoi(p) -> str:
    return (f"You are playing a Tower of Hanoi game with 3 rods and {p.start.n} disks of various "
            f"diameters, which can slide onto any rod. You are given the starting and ending "
            f"configuration of the game as shown in the top and the bottom of the image, "
            f"respectively. The game has the following rules: i) Only one disk may be moved at a "
            f"time; ii) Each move consists of taking the upper disk from one of the stacks and "
            f"placing it on top of another stack or on an empty rod; and iii) No disk can be placed "
            f"on top of a disk that is smaller than it. What is the minimum number of moves required "
            f"to go from the starting to the ending configuration?")


def q_jugs(p) -> str:
    k = len(p.start.capacities)
    return (f"You are given {k} jugs of capacities {_join(p.start.capacities)} litres. Initially, "
            f"the amount of water that is contained in each jar is shown in the image. A single step "
            f"of water pouring from one jug to another is constrained by the following rules: i) "
            f"take a non-empty jug and pour water from it to another non-full jug until the first "
            f"one becomes empty or the second one becomes full, and ii) no water can be spilt while "
            f"pouring. The objective is to reach the amounts of {_join(p.goal)} litres of water in "
            f"the jugs from left to right, respectively. What is the minimum number of water "
            f"pouring steps required to achieve the objective?")


def q_wheel(p) -> str:
    n = len(p.spec.segments)
    return (f"A fortune wheel has {n} segments of different colour. The initial position of the "
            f"wheel is shown in the figure. Each segment is associated with a prize as shown in the "
            f"embedded text within the segment. The axis of rotation of the wheel passes through its "
            f"center and is perpendicular to the surface of the wheel. You spin the wheel "
            f"{p.query.direction} and it rotates {wheel_rotation_label(p.query)} before stopping. "
            f"You are going to win the prize for the segment that now falls in front of the brown "
            f"arrow. What is your prize?")


def q_wood_slide(p) -> str:
    return ("Consider a sliding block puzzle of grid size 5 * 4 units. It has 9 wooden blocks of "
            "varying sizes: one 2 * 2, four 1 * 2, two 2 * 1, and two 1 * 1. The grid also has two "
            "empty 1 * 1 spaces. The blocks cannot be removed from the grid, and may only be slid "
            "horizontally and vertically within its boundary. A move is defined as selecting a "
            "block that is slideable, and moving it by 1 unit either horizontally or vertically, "
            "whichever is possible. The image shows the starting and ending configurations of the "
            "puzzle grid. The wooden blocks are shown in various shades of brown and the empty "
            "spaces are shown in white. What is the minimum number of moves required to reach the "
            "ending configuration from the starting configuration?")


TEMPLATES: dict[PuzzleKind, Callable[[Any], str]] = {
    PuzzleKind.BOARD_TILING: q_tiling,
    PuzzleKind.CALENDAR: q_calendar,
    PuzzleKind.CHAIN_LINK: q_chain,
    PuzzleKind.CHECKER_MOVE: q_checkers,
    PuzzleKind.CLOCK: q_clock,
    PuzzleKind.COLOUR_HUE: q_colour_hue,
    PuzzleKind.MAP_COLOUR: q_map,
    PuzzleKind.MAZE_SOLVE: q_maze,
    PuzzleKind.MOVE_BOX: q_move_box,
    PuzzleKind.N_QUEENS: q_queens,
    PuzzleKind.NUMBER_SLIDE: q_number_slide,
    PuzzleKind.ROTTING_FRUIT: q_rotting,
    PuzzleKind.RUBIKS_CUBE: q_cube,
    PuzzleKind.THINK_A_DOT: q_tad,
    PuzzleKind.TOWER_OF_HANOI: q_hanoi,
    PuzzleKind.WATER_JUGS: q_jugs,
    PuzzleKind.WHEEL_OF_FORTUNE: q_wheel,
    PuzzleKind.WOOD_SLIDE: q_wood_slide,
}


def format_question(kind: PuzzleKind | str, payload: Any) -> str:
    return TEMPLATES[PuzzleKind(kind)](payload)
