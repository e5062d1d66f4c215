"""Per-kind SVG drawings of puzzle payloads."""

from __future__ import annotations

import math
from typing import Any, Callable

from ..core import PuzzleKind
from ..gridlogic import FRESH, ROTTEN, chequer_colour
from ..mapcolour import PALETTE, polygon_centroid
from ..maze import PATH
from ..mechanics import ARROW_ANGLE
from ..sliding.klotski import COLS as K_COLS, ROWS as K_ROWS
from ..sliding.movebox import WALL
from ..statemachines.cube import FACES
from ..statemachines.thinkadot import BLUE
from ..temporal import MONTH_NAMES
from .svg import RenderSpec, Svg, num

CELL = 40
MARGIN = 20

COLOUR_HEX = {
    "red": "#d62728", "green": "#2ca02c", "blue": "#1f77b4", "yellow": "#ffd700",
    "orange": "#ff7f0e", "grey": "#9e9e9e", "white": "#ffffff",
}


def _hex(rgb) -> str:
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def _arrow(svg: Svg, x1, y1, x2, y2, colour: str, width: float = 4) -> None:
    svg.line(x1, y1, x2, y2, stroke=colour, stroke_width=width)
    ang = math.atan2(y2 - y1, x2 - x1)
    head = 10
    pts = [(x2, y2),
           (x2 - head * math.cos(ang - 0.45), y2 - head * math.sin(ang - 0.45)),
           (x2 - head * math.cos(ang + 0.45), y2 - head * math.sin(ang + 0.45))]
    svg.polygon(pts, fill=colour)


def render_tiling(p, spec: RenderSpec) -> str:
    svg = Svg(2 * MARGIN + p.cols * CELL, 2 * MARGIN + p.rows * CELL, spec)
    removed = set(map(tuple, p.removed))
    for r in range(p.rows):
        for c in range(p.cols):
            if (r, c) in removed:
                fill = "#ffffff"
            else:
                fill = "#c9a227" if chequer_colour(r, c) == 0 else "#f5e6a8"
            svg.rect(MARGIN + c * CELL, MARGIN + r * CELL, CELL, CELL, fill=fill,
                     stroke="#7a6a3a", stroke_width=1)
    return svg.to_string()


def render_calendar(p, spec: RenderSpec) -> str:
    width = 2 * MARGIN + 7 * 50
    first_col = (p.weekday_of_first + 1) % 7  # Sunday-first columns
    weeks = (first_col + p.days_in_month + 6) // 7
    svg = Svg(width, 2 * MARGIN + 70 + weeks * 40, spec)
    svg.text(width / 2, MARGIN + 15, MONTH_NAMES[p.shown_month - 1], size=22, weight="bold")
    for k, name in enumerate(("Sun", "Mon", "Tue", "Wed", "Thu", "Fri", "Sat")):
        svg.text(MARGIN + 25 + 50 * k, MARGIN + 50, name, size=14, weight="bold")
    for day in range(1, p.days_in_month + 1):
        slot = first_col + day - 1
        row, col = divmod(slot, 7)
        x, y = MARGIN + 50 * col, MARGIN + 70 + 40 * row
        svg.rect(x, y, 50, 40, fill="#ffffff", stroke="#888888")
        svg.text(x + 25, y + 20, str(day), size=15)
    return svg.to_string()


def _ring(svg: Svg, cx, cy, closed: bool) -> None:
    if closed:
        svg.add("ellipse", cx=cx, cy=cy, rx=14, ry=9, fill="none", stroke="#555555", stroke_width=4)
    else:
        # An open link is drawn as a ring with a visible gap.
        r = 11
        x0, y0 = cx + r * math.cos(math.radians(40)), cy - r * math.sin(math.radians(40))
        x1, y1 = cx + r * math.cos(math.radians(320)), cy - r * math.sin(math.radians(320))
        svg.path(f"M {num(x0)} {num(y0)} A {r} {r} 0 1 0 {num(x1)} {num(y1)}",
                 stroke="#b03a2e", stroke_width=4)


def render_chain(p, spec: RenderSpec) -> str:
    segments = [(k, True) for k in p.closed_segments] + [(1, False)] * p.open_singletons
    longest = max(k for k, _ in segments)
    svg = Svg(2 * MARGIN + 40 + 22 * longest, 2 * MARGIN + 36 * len(segments), spec)
    for i, (length, closed) in enumerate(segments):
        y = MARGIN + 18 + 36 * i
        for j in range(length):
            _ring(svg, MARGIN + 20 + 22 * j, y, closed)
    return svg.to_string()


def render_checkers(p, spec: RenderSpec) -> str:
    n = len(p.start.cells)
    svg = Svg(2 * MARGIN + 80 + n * CELL, 2 * MARGIN + 2 * CELL + 30, spec)
    for row, (label, line) in enumerate((("Start", p.start), ("End", p.end))):
        y = MARGIN + row * (CELL + 30)
        svg.text(MARGIN + 30, y + CELL / 2, label, size=14, weight="bold")
        for k, ch in enumerate(line.cells):
            x = MARGIN + 80 + k * CELL
            svg.rect(x, y, CELL, CELL, fill="#f0f0f0", stroke="#333333")
            if ch != ".":
                svg.circle(x + CELL / 2, y + CELL / 2, CELL * 0.38,
                           fill=COLOUR_HEX["green" if ch == "G" else "red"], stroke="#222222")
    return svg.to_string()


def render_clock(p, spec: RenderSpec) -> str:
    size = 300
    c, r = size / 2, 130
    svg = Svg(size, size, spec)
    svg.circle(c, c, r, fill="#ffffff", stroke="#000000", stroke_width=4)
    for k in range(60):
        ang = math.radians(90 - 6 * k)
        inner = r - (14 if k % 5 == 0 else 7)
        svg.line(c + inner * math.cos(ang), c - inner * math.sin(ang),
                 c + r * math.cos(ang), c - r * math.sin(ang),
                 stroke_width=3 if k % 5 == 0 else 1)
    for h in range(1, 13):
        ang = math.radians(90 - 30 * h)
        svg.text(c + (r - 30) * math.cos(ang), c - (r - 30) * math.sin(ang), str(h), size=20)
    t = p.current
    minute_ang = math.radians(90 - 6 * t.minute)
    hour_ang = math.radians(90 - (30 * (t.hour % 12) + 0.5 * t.minute))
    svg.line(c, c, c + 70 * math.cos(hour_ang), c - 70 * math.sin(hour_ang), stroke_width=7)
    svg.line(c, c, c + 105 * math.cos(minute_ang), c - 105 * math.sin(minute_ang), stroke_width=4)
    svg.circle(c, c, 6, fill="#000000")
    return svg.to_string()


def render_colour_hue(p, spec: RenderSpec) -> str:
    panel = p.cols * CELL
    svg = Svg(3 * MARGIN + 2 * panel, 2 * MARGIN + 30 + p.rows * CELL, spec)
    for k, (label, tiles) in enumerate((("(A)", p.displayed()), ("(B)", p.ideal))):
        x0 = MARGIN + k * (panel + MARGIN)
        svg.text(x0 + panel / 2, MARGIN + 10, label, size=16, weight="bold")
        for i, rgb in enumerate(tiles):
            r, c = divmod(i, p.cols)
            svg.rect(x0 + c * CELL, MARGIN + 30 + r * CELL, CELL, CELL, fill=_hex(rgb),
                     stroke="#ffffff", stroke_width=1)
    return svg.to_string()


def render_map(p, spec: RenderSpec) -> str:
    size = 480
    svg = Svg(size + 2 * MARGIN, size + 2 * MARGIN, spec)

    def at(pt):
        return MARGIN + pt[0] * size, MARGIN + (1 - pt[1]) * size

    for v, poly in enumerate(p.map.polygons):
        colour = p.fixed[v]
        fill = "#ffffff" if colour is None else COLOUR_HEX[PALETTE[colour]]
        svg.polygon([at(q) for q in poly], fill=fill, stroke="#000000", stroke_width=2)
    for v, poly in enumerate(p.map.polygons):
        x, y = at(polygon_centroid(poly))
        svg.text(x, y, str(v + 1), size=16, weight="bold")
    return svg.to_string()


def render_maze(p, spec: RenderSpec) -> str:
    maze = p.maze
    n = maze.size
    cell = 30
    svg = Svg(2 * MARGIN + 2 * cell + n * cell, 2 * MARGIN + 2 * cell + n * cell, spec)
    off = MARGIN + cell
    for r in range(n):
        for c in range(n):
            fill = "#ffffff" if maze.board.at(r, c) == PATH else "#000000"
            svg.rect(off + c * cell, off + r * cell, cell, cell, fill=fill)
    er, ec = maze.entrance
    y = off + er * cell + cell / 2
    _arrow(svg, off - cell + 2, y, off + cell * 0.6, y, "#2ca02c")
    xr, xc = maze.exit
    cx, cy = off + xc * cell + cell / 2, off + xr * cell + cell / 2
    if xr == n - 1:
        _arrow(svg, cx, cy - cell * 0.3, cx, cy + cell * 1.2, "#1f77b4")
    else:
        _arrow(svg, cx - cell * 0.3, cy, cx + cell * 1.2, cy, "#1f77b4")
    return svg.to_string()


def render_move_box(p, spec: RenderSpec) -> str:
    b = p.board
    svg = Svg(2 * MARGIN + b.cols * CELL, 2 * MARGIN + b.rows * CELL, spec)
    for r in range(b.rows):
        for c in range(b.cols):
            fill = "#5d5d5d" if b.at(r, c) == WALL else "#eeeeee"
            svg.rect(MARGIN + c * CELL, MARGIN + r * CELL, CELL, CELL, fill=fill, stroke="#999999")

    def centre(cell):
        return MARGIN + cell[1] * CELL + CELL / 2, MARGIN + cell[0] * CELL + CELL / 2

    fx, fy = centre(p.flag)
    svg.line(fx - 8, fy + 14, fx - 8, fy - 14, stroke_width=2)
    svg.polygon([(fx - 8, fy - 14), (fx + 12, fy - 7), (fx - 8, fy)], fill="#d62728")
    bx, by = centre(p.box)
    svg.rect(bx - 15, by - 15, 30, 30, fill="#a0522d", stroke="#5a2d0c", stroke_width=2)
    px, py = centre(p.player)
    svg.circle(px, py, 13, fill="#1f77b4", stroke="#0b3a5e", stroke_width=2)
    return svg.to_string()


def render_queens(p, spec: RenderSpec) -> str:
    svg = Svg(2 * MARGIN + p.n * CELL, 2 * MARGIN + p.n * CELL, spec)
    for r in range(p.n):
        for c in range(p.n):
            fill = "#f0d9b5" if (r + c) % 2 == 0 else "#b58863"
            svg.rect(MARGIN + c * CELL, MARGIN + r * CELL, CELL, CELL, fill=fill)
    for r, c in p.shown():
        svg.text(MARGIN + c * CELL + CELL / 2, MARGIN + r * CELL + CELL / 2, "♛", size=30)
    return svg.to_string()


def render_number_slide(p, spec: RenderSpec) -> str:
    b = p.board
    cell = 60
    svg = Svg(2 * MARGIN + b.n * cell + 12, 2 * MARGIN + b.n * cell + 12, spec)
    svg.rect(MARGIN, MARGIN, b.n * cell + 12, b.n * cell + 12, fill="#ffffff",
             stroke="#d62728", stroke_width=6)
    for i, t in enumerate(b.tiles):
        if t == 0:
            continue
        r, c = divmod(i, b.n)
        x, y = MARGIN + 6 + c * cell, MARGIN + 6 + r * cell
        svg.rect(x + 2, y + 2, cell - 4, cell - 4, fill="#fbe7c6", stroke="#8d6e63", stroke_width=2)
        svg.text(x + cell / 2, y + cell / 2, str(t), size=24, weight="bold")
    return svg.to_string()


def render_rotting(p, spec: RenderSpec) -> str:
    b = p.board
    svg = Svg(2 * MARGIN + b.cols * CELL, 2 * MARGIN + b.rows * CELL + 40, spec)
    for r in range(b.rows):
        for c in range(b.cols):
            x, y = MARGIN + c * CELL, MARGIN + r * CELL
            svg.rect(x, y, CELL, CELL, fill="#ffffff", stroke="#444444")
            v = b.at(r, c)
            if v == FRESH:
                svg.circle(x + CELL / 2, y + CELL / 2, 14, fill="#7cb342", stroke="#33691e")
            elif v == ROTTEN:
                svg.circle(x + CELL / 2, y + CELL / 2, 14, fill="#5d4037", stroke="#3e2723")
    ly = MARGIN + b.rows * CELL + 20
    svg.circle(MARGIN + 8, ly, 7, fill="#7cb342")
    svg.text(MARGIN + 20, ly, f"fresh {p.fruit}", size=12, anchor="start")
    svg.circle(MARGIN + 108, ly, 7, fill="#5d4037")
    svg.text(MARGIN + 120, ly, f"rotten {p.fruit}", size=12, anchor="start")
    return svg.to_string()


_NET = {"U": (1, 0), "L": (0, 1), "F": (1, 1), "R": (2, 1), "B": (3, 1), "D": (1, 2)}


def render_cube(p, spec: RenderSpec) -> str:
    s = 24
    block = 3 * s + 6
    svg = Svg(2 * MARGIN + 4 * block, 2 * MARGIN + 3 * block, spec)
    for face in FACES:
        gx, gy = _NET[face]
        x0, y0 = MARGIN + gx * block, MARGIN + gy * block
        for k, colour in enumerate(p.initial.face(face)):
            r, c = divmod(k, 3)
            svg.rect(x0 + c * s, y0 + r * s, s, s, fill=COLOUR_HEX[colour], stroke="#000000",
                     stroke_width=1.5)
        svg.text(x0 + 1.5 * s, y0 + 1.5 * s, face, size=11, fill="#000000")
    return svg.to_string()


_TAD_POS = {0: (60, 80), 1: (160, 80), 2: (260, 80), 3: (110, 170), 4: (210, 170),
            5: (60, 260), 6: (160, 260), 7: (260, 260)}


def render_tad(p, spec: RenderSpec) -> str:
    svg = Svg(320, 330, spec)
    svg.rect(10, 10, 300, 310, fill="#f4f4f4", stroke="#333333", stroke_width=3)
    for x, name in ((60, "L"), (160, "C"), (260, "R")):
        svg.circle(x, 28, 9, fill="#333333")
        svg.text(x + 20, 28, name, size=12)
    # Walls between discs, following the routing table.
    for x1, y1, x2, y2 in ((110, 50, 110, 120), (210, 50, 210, 120), (60, 130, 60, 215),
                           (260, 130, 260, 215), (160, 130, 160, 215), (110, 220, 110, 300),
                           (210, 220, 210, 300)):
        svg.line(x1, y1, x2, y2, stroke="#333333", stroke_width=3)
    for k, (x, y) in _TAD_POS.items():
        svg.circle(x, y, 26, fill=COLOUR_HEX["blue" if p.config.discs[k] == BLUE else "yellow"],
                   stroke="#222222", stroke_width=2)
    svg.text(30, 310, "exit", size=10)
    svg.text(290, 310, "exit", size=10)
    return svg.to_string()


def _hanoi_panel(svg: Svg, state, y0: float, label: str) -> None:
    n = state.n
    svg.text(MARGIN, y0 + 10, label, size=14, anchor="start", weight="bold")
    base = y0 + 30 + (n + 1) * 16
    svg.rect(MARGIN, base, 3 * 160, 8, fill="#6d4c41")
    for rod, stack in enumerate(state.stacks()):
        cx = MARGIN + 80 + 160 * rod
        svg.rect(cx - 3, base - (n + 1) * 16, 6, (n + 1) * 16, fill="#6d4c41")
        for level, disk in enumerate(stack):
            w = 30 + 20 * disk
            svg.rect(cx - w / 2, base - 16 * (level + 1), w, 14,
                     fill=["#e57373", "#ffb74d", "#fff176", "#81c784", "#64b5f6", "#ba68c8"][disk],
                     stroke="#333333")


def render_hanoi(p, spec: RenderSpec) -> str:
    panel = 30 + (p.start.n + 1) * 16 + 30
    svg = Svg(2 * MARGIN + 480, 2 * MARGIN + 2 * panel, spec)
    _hanoi_panel(svg, p.start, MARGIN, "Start")
    _hanoi_panel(svg, p.end, MARGIN + panel, "End")
    return svg.to_string()


def render_jugs(p, spec: RenderSpec) -> str:
    s = p.start
    unit = 14
    tallest = max(s.capacities)
    width = 2 * MARGIN + 90 * len(s.capacities)
    svg = Svg(width, 2 * MARGIN + tallest * unit + 50, spec)
    floor = MARGIN + tallest * unit + 10
    for k, (cap, amt) in enumerate(zip(s.capacities, s.amounts)):
        x = MARGIN + 90 * k + 15
        svg.rect(x, floor - amt * unit, 60, amt * unit, fill="#64b5f6")
        svg.rect(x, floor - cap * unit, 60, cap * unit, fill="none", stroke="#333333", stroke_width=2)
        for level in range(1, cap):
            svg.line(x, floor - level * unit, x + 8, floor - level * unit, stroke_width=1)
        svg.text(x + 30, floor + 20, f"{amt} L", size=14, weight="bold")
    return svg.to_string()


def render_wheel(p, spec: RenderSpec) -> str:
    size = 420
    c, r = size / 2, 170
    svg = Svg(size, size, spec)
    wheel = p.spec

    def point(deg: float, radius: float):
        a = math.radians(deg)
        return c + radius * math.cos(a), c - radius * math.sin(a)

    for seg, edge in zip(wheel.segments, wheel.leading_edges()):
        x0, y0 = point(edge, r)
        x1, y1 = point(edge + seg.span_degrees, r)
        large = 1 if seg.span_degrees > 180 else 0
        # Counterclockwise on screen is sweep-flag 0 with y pointing down.
        svg.path(f"M {num(c)} {num(c)} L {num(x0)} {num(y0)} A {r} {r} 0 {large} 0 {num(x1)} {num(y1)} Z",
                 fill=seg.colour, stroke="#ffffff", stroke_width=2)
        tx, ty = point(edge + seg.span_degrees / 2, r * 0.62)
        svg.text(tx, ty, seg.label, size=12, weight="bold")
    ax, ay = point(ARROW_ANGLE, r + 4)
    svg.polygon([(ax, ay), (ax - 12, ay - 28), (ax + 12, ay - 28)], fill="#8b4513")
    svg.circle(c, c, 8, fill="#333333")
    return svg.to_string()


_BROWNS = {(2, 2): "#8b5a2b", (1, 2): "#a0522d", (2, 1): "#cd853f", (1, 1): "#deb887"}


def _klotski_panel(svg: Svg, board, x0: float, y0: float, label: str) -> None:
    s = 36
    svg.text(x0 + K_COLS * s / 2, y0 - 12, label, size=14, weight="bold")
    svg.rect(x0, y0, K_COLS * s, K_ROWS * s, fill="#ffffff", stroke="#333333", stroke_width=3)
    for h, w, r, c in board.blocks:
        svg.rect(x0 + c * s + 2, y0 + r * s + 2, w * s - 4, h * s - 4, fill=_BROWNS[(h, w)],
                 stroke="#4e342e", stroke_width=2)


def render_wood_slide(p, spec: RenderSpec) -> str:
    svg = Svg(3 * MARGIN + 2 * K_COLS * 36, 2 * MARGIN + 30 + K_ROWS * 36, spec)
    _klotski_panel(svg, p.start, MARGIN, MARGIN + 30, "Start")
    _klotski_panel(svg, p.end, 2 * MARGIN + K_COLS * 36, MARGIN + 30, "End")
    return svg.to_string()


RENDERERS: dict[PuzzleKind, Callable[[Any, RenderSpec], str]] = {
    PuzzleKind.BOARD_TILING: render_tiling,
    PuzzleKind.CALENDAR: render_calendar,
    PuzzleKind.CHAIN_LINK: render_chain,
    PuzzleKind.CHECKER_MOVE: render_checkers,
    PuzzleKind.CLOCK: render_clock,
    PuzzleKind.COLOUR_HUE: render_colour_hue,
    PuzzleKind.MAP_COLOUR: render_map,
    PuzzleKind.MAZE_SOLVE: render_maze,
    PuzzleKind.MOVE_BOX: render_move_box,
    PuzzleKind.N_QUEENS: render_queens,
    PuzzleKind.NUMBER_SLIDE: render_number_slide,
    PuzzleKind.ROTTING_FRUIT: render_rotting,
    PuzzleKind.RUBIKS_CUBE: render_cube,
    PuzzleKind.THINK_A_DOT: render_tad,
    PuzzleKind.TOWER_OF_HANOI: render_hanoi,
    PuzzleKind.WATER_JUGS: render_jugs,
    PuzzleKind.WHEEL_OF_FORTUNE: render_wheel,
    PuzzleKind.WOOD_SLIDE: render_wood_slide,
}


def render_svg(kind: PuzzleKind | str, payload: Any, spec: RenderSpec = RenderSpec()) -> str:
    try:
        renderer = RENDERERS[PuzzleKind(kind)]
    except (KeyError, ValueError):
        raise RuntimeError(f"no renderer for puzzle kind {kind!r}") from None
    return renderer(payload, spec)
