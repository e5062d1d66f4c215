import heapq
from collections import deque
from itertools import product

import pytest
from hypothesis import given, strategies as st

from puzzlekit.core import GridBoard, InvalidInstanceError, Rng
from puzzlekit.search import bfs_shortest
from puzzlekit.sliding import (PENNANT_START, CheckerLine, HanoiState, JugState, KlotskiBoard,
                               SlideBoard, SlideQuestion, Warehouse, classic_states,
                               gen_checker_move, gen_hanoi, gen_move_box, gen_number_slide,
                               gen_water_jugs, gen_wood_slide, hanoi_classic, pennant_optimal,
                               pennant_states, solve_checker_move, solve_hanoi, solve_move_box,
                               solve_number_slide, solve_water_jugs, solve_wood_slide)
from puzzlekit.sliding.jugs import pours
from puzzlekit.sliding.klotski import PENNANT_GOAL_BLOCK
from puzzlekit.sliding.movebox import FLOOR, WALL
from puzzlekit.sliding.numberslide import inversions, is_solvable

# ---------------------------------------------------------------- number slide

STEP = {"up": (-1, 0), "down": (1, 0), "left": (0, -1), "right": (0, 1)}


def slide(tiles, n, direction):
    z = tiles.index(0)
    r, c = divmod(z, n)
    dr, dc = STEP[direction]
    if not (0 <= r + dr < n and 0 <= c + dc < n):
        return None
    t = list(tiles)
    j = (r + dr) * n + c + dc
    t[z], t[j] = t[j], 0
    return tuple(t)


def boards_after(tiles, n, k):
    """Every board reached by some string of exactly k legal moves."""
    out = set()
    for seq in product(STEP, repeat=k):
        t = tiles
        for d in seq:
            t = slide(t, n, d)
            if t is None:
                break
        else:
            out.add(t)
    return out


def test_zero_moves_and_corner_count():
    b = SlideBoard(3, (0, 1, 2, 3, 4, 5, 6, 7, 8))
    assert solve_number_slide(b, SlideQuestion("count", 0)) == 1
    assert solve_number_slide(b, SlideQuestion("count", 1)) == 2


def test_directed_walk_off_the_board_is_invalid():
    b = SlideBoard(3, (0, 1, 2, 3, 4, 5, 6, 7, 8))
    with pytest.raises(InvalidInstanceError):
        solve_number_slide(b, SlideQuestion("directed", 1, moves=("up",)))


def test_generated_slide_questions_match_move_strings():
    for seed in range(60):
        inst = gen_number_slide(Rng(seed))
        b, q = inst.board, inst.question
        gold = solve_number_slide(b, q)
        if q.style == "count":
            assert gold == len(boards_after(b.tiles, b.n, q.n_moves))
        elif q.style == "extremal":
            idx = q.index
            sums = []
            for t in boards_after(b.tiles, b.n, q.n_moves):
                line = t[idx * b.n:(idx + 1) * b.n] if q.axis == "row" else t[idx::b.n]
                sums.append(sum(line))
            assert gold == (max(sums) if q.stat == "max" else min(sums))
        else:
            t = b.tiles
            for d in q.moves:
                t = slide(t, b.n, d)
            r, c = divmod(t.index(0), b.n)
            line = t[r * b.n:(r + 1) * b.n] if q.axis == "row" else t[c::b.n]
            vals = [v for v in line if v]
            assert gold == {"max": max, "min": min, "sum": sum}[q.stat](vals)


def test_solvability_rule_against_full_three_by_three_bfs():
    goal = (1, 2, 3, 4, 5, 6, 7, 8, 0)
    seen = {goal}
    queue = deque([goal])
    while queue:
        t = queue.popleft()
        for d in STEP:
            u = slide(t, 3, d)
            if u is not None and u not in seen:
                seen.add(u)
                queue.append(u)
    assert len(seen) == 181440
    rng = Rng(4)
    for _ in range(2000):
        tiles = list(range(9))
        rng.shuffle(tiles)
        assert is_solvable(SlideBoard(3, tuple(tiles))) == (tuple(tiles) in seen)


def test_inversions_small():
    assert inversions((1, 2, 3, 0)) == 0
    assert inversions((3, 2, 1, 0)) == 3


# ---------------------------------------------------------------- wood slide

def test_wood_slide_trivial_distances():
    assert solve_wood_slide(PENNANT_START, PENNANT_START) == 0
    label, nxt = PENNANT_START.moves()[0]
    assert solve_wood_slide(PENNANT_START, nxt) == 1


def test_census_is_enforced():
    with pytest.raises(InvalidInstanceError):
        KlotskiBoard.from_rows(["AABB", "AACC", "D...", "FGHH", "FGII"]).validate()


def test_same_shape_blocks_are_interchangeable():
    blocks = list(PENNANT_START.blocks)
    assert KlotskiBoard.of(reversed(blocks)).key() == PENNANT_START.key()


def test_pennant_path_is_optimal_and_geodesic():
    path = pennant_optimal()
    states = pennant_states()
    assert len(path) == 83
    assert PENNANT_GOAL_BLOCK in states[-1].blocks
    for a, b in zip(states, states[1:]):
        assert solve_wood_slide(a, b) == 1
    rng = Rng(6)
    for _ in range(20):
        i = rng.randint(0, len(states) - 1)
        j = min(len(states) - 1, i + rng.randint(0, 5))
        assert solve_wood_slide(states[i], states[j]) == j - i


def test_wood_slide_generator():
    golds = [solve_wood_slide(g.start, g.end) for g in (gen_wood_slide(Rng(s)) for s in range(200))]
    assert all(1 <= d <= 5 for d in golds)
    assert gen_wood_slide(Rng(2)) == gen_wood_slide(Rng(2))


# ---------------------------------------------------------------- checkers

def toad_moves(cells):
    out = []
    for i, ch in enumerate(cells):
        for step in ((1, 2) if ch == "G" else (-1, -2) if ch == "R" else ()):
            j = i + step
            if not 0 <= j < len(cells) or cells[j] != ".":
                continue
            if abs(step) == 2 and cells[i + step // 2] in (".", ch):
                continue
            t = list(cells)
            t[i], t[j] = ".", ch
            out.append("".join(t))
    return out


def all_path_depths(start):
    """Depth-first walk over every move sequence; minimum depth per reached line."""
    best = {}

    def walk(cells, depth):
        if cells in best and best[cells] <= depth:
            return
        best[cells] = depth
        for nxt in toad_moves(cells):
            walk(nxt, depth + 1)

    walk(start, 0)
    return best


def test_checker_examples():
    assert solve_checker_move(CheckerLine("GG.RR"), CheckerLine("GG.RR")) == 0
    assert solve_checker_move(CheckerLine("GG.RR"), CheckerLine("RR.GG")) == 8
    assert solve_checker_move(CheckerLine("G.R"), CheckerLine("R.G")) == 3
    with pytest.raises(InvalidInstanceError):
        solve_checker_move(CheckerLine("R.G"), CheckerLine("G.R"))


@pytest.mark.parametrize("g,r", [(g, r) for g in range(1, 5) for r in range(1, 5)])
def test_swap_length_formula(g, r):
    start = CheckerLine("G" * g + "." + "R" * r)
    end = CheckerLine("R" * r + "." + "G" * g)
    assert solve_checker_move(start, end) == g * r + g + r


def test_checker_generator():
    for seed in range(200):
        inst = gen_checker_move(Rng(seed))
        assert 5 <= len(inst.start.cells) <= 9
        assert solve_checker_move(inst.start, inst.end) == all_path_depths(inst.start.cells)[
            inst.end.cells]


# ---------------------------------------------------------------- move box

def warehouse(rows, box, player, flag):
    return Warehouse(GridBoard.from_rows([[WALL if ch == "#" else FLOOR for ch in row]
                                          for row in rows]), box, player, flag)


def push_oracle(w):
    """0-1 BFS over (box, player): walking costs nothing, pushing costs one."""
    b = w.board
    start = (w.box, w.player)
    dist = {start: 0}
    dq = deque([start])
    while dq:
        box, pl = state = dq.popleft()
        d = dist[state]
        if box == w.flag:
            return d
        for dr, dc in STEP.values():
            nxt = (pl[0] + dr, pl[1] + dc)
            if not b.inside(*nxt) or b.at(*nxt) != FLOOR:
                continue
            if nxt == box:
                ahead = (box[0] + dr, box[1] + dc)
                if b.inside(*ahead) and b.at(*ahead) == FLOOR:
                    cand, cost = (ahead, box), 1
                else:
                    continue
            else:
                cand, cost = (box, nxt), 0
            if cand not in dist or dist[cand] > d + cost:
                dist[cand] = d + cost
                (dq.appendleft if cost == 0 else dq.append)(cand)
    return None


def test_move_box_examples():
    corridor = ["######", "#....#", "######"]
    assert solve_move_box(warehouse(corridor, (1, 2), (1, 1), (1, 2))) == 0
    assert solve_move_box(warehouse(corridor, (1, 2), (1, 1), (1, 4))) == 2
    with pytest.raises(InvalidInstanceError):
        solve_move_box(warehouse(corridor, (1, 2), (1, 1), (1, 1)))


def test_move_box_generator_matches_full_state_bfs():
    for seed in range(150):
        w = gen_move_box(Rng(seed))
        assert solve_move_box(w) == push_oracle(w)


# ---------------------------------------------------------------- water jugs

def test_jug_examples():
    s = JugState((6, 5, 1), (4, 2, 1))
    assert solve_water_jugs(s, (4, 2, 1)) == 0
    assert solve_water_jugs(s, (4, 3, 0)) == 1
    with pytest.raises(InvalidInstanceError):
        solve_water_jugs(s, (4, 3, 1))


@given(st.lists(st.integers(1, 9), min_size=3, max_size=5), st.data())
def test_pours_conserve_water(caps, data):
    amounts = tuple(data.draw(st.integers(0, c)) for c in caps)
    s = JugState(tuple(caps), amounts)
    for _, t in pours(s):
        assert sum(t.amounts) == sum(amounts)
        assert all(0 <= a <= c for a, c in zip(t.amounts, caps))


def jug_oracle(start, goal):
    seen, frontier, d = {start.amounts}, [start.amounts], 0
    while frontier:
        if goal in frontier:
            return d
        nxt = []
        for a in frontier:
            for i, j in product(range(len(a)), repeat=2):
                if i == j:
                    continue
                m = min(a[i], start.capacities[j] - a[j])
                b = list(a)
                b[i] -= m
                b[j] += m
                b = tuple(b)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier, d = nxt, d + 1
    return None


def test_jug_generator_within_five_pours():
    for seed in range(500):
        inst = gen_water_jugs(Rng(seed))
        d = solve_water_jugs(inst.start, inst.goal)
        assert 1 <= d <= 5
        if seed < 100:
            assert d == jug_oracle(inst.start, inst.goal)


# ---------------------------------------------------------------- hanoi

@pytest.mark.parametrize("n", range(3, 7))
def test_classic_length_and_legality(n):
    moves = hanoi_classic(n)
    assert len(moves) == 2 ** n - 1
    rods = [list(range(n - 1, -1, -1)), [], []]
    for disk, src, dst in moves:
        assert rods[src] and rods[src][-1] == disk
        assert not rods[dst] or rods[dst][-1] > disk
        rods[dst].append(rods[src].pop())
    assert rods == [[], [], list(range(n - 1, -1, -1))]


def test_hanoi_distances_on_classic_path():
    states = classic_states(5)
    assert solve_hanoi(states[3], states[3]) == 0
    rng = Rng(8)
    for _ in range(40):
        i = rng.randint(0, len(states) - 1)
        j = min(len(states) - 1, i + rng.randint(0, 6))
        assert solve_hanoi(states[i], states[j]) == j - i


def test_hanoi_moves_stay_legal():
    s = HanoiState(4, (0, 1, 0, 2))
    for _, t in s.moves():
        moved = [d for d in range(4) if s.peg_of[d] != t.peg_of[d]]
        assert len(moved) == 1
        d = moved[0]
        assert all(s.peg_of[e] != s.peg_of[d] and s.peg_of[e] != t.peg_of[d] for e in range(d))


def test_hanoi_generator():
    for seed in range(200):
        inst = gen_hanoi(Rng(seed))
        assert 3 <= inst.start.n <= 6
        assert 1 <= solve_hanoi(inst.start, inst.end) <= 6
