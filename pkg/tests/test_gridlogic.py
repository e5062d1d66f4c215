from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from puzzlekit.core import GridBoard, InvalidInstanceError, Rng, YesNo
from puzzlekit.gridlogic import (CELL, EMPTY, FRESH, HOLE, ROTTEN, HueBoard, QueensInstance,
                                 RottingGrid, TilingInstance, brute_force_tileable,
                                 enumerate_nqueens, gen_colour_hue, gen_nqueens, gen_rotting,
                                 gen_tiling, solve_colour_hue, solve_nqueens, solve_rotting,
                                 solve_tiling)
from puzzlekit.search import SearchLimitError


def holes(rows, cols, removed):
    return TilingInstance(rows, cols, tuple(removed)).board()


def test_six_by_nine_opposite_colours_tiles():
    assert solve_tiling(TilingInstance(6, 9, ((0, 0), (2, 5)))) == YesNo(True)


def test_mutilated_chessboard():
    assert solve_tiling(TilingInstance(8, 8, ((0, 0), (7, 7)))) == YesNo(False)


def test_brute_force_examples():
    assert brute_force_tileable(GridBoard(2, 2, (CELL,) * 4)) == YesNo(True)
    assert brute_force_tileable(holes(2, 2, [(0, 0), (1, 1)])) == YesNo(False)
    assert brute_force_tileable(holes(4, 4, [(1, 1), (1, 2)])) == YesNo(True)
    with pytest.raises(SearchLimitError):
        brute_force_tileable(GridBoard(5, 5, (CELL,) * 25))


def test_tiling_rejects_bad_removals():
    with pytest.raises(InvalidInstanceError):
        solve_tiling(TilingInstance(4, 4, ((0, 0),)))
    with pytest.raises(InvalidInstanceError):
        solve_tiling(TilingInstance(3, 3, ((0, 0), (0, 1))))


def test_theorem_matches_brute_force_up_to_four_by_five():
    cases = 0
    for rows in range(2, 5):
        for cols in range(2, 6):
            cells = [(r, c) for r in range(rows) for c in range(cols)]
            k = 2 if rows * cols % 2 == 0 else 1
            for removed in combinations(cells, k):
                inst = TilingInstance(rows, cols, removed)
                assert solve_tiling(inst) == brute_force_tileable(inst.board()), inst
                cases += 1
    assert cases > 500


def test_generated_tilings_hit_both_answers():
    answers = {solve_tiling(gen_tiling(Rng(s))) for s in range(500)}
    assert answers == {YesNo(True), YesNo(False)}
    assert gen_tiling(Rng(1)) == gen_tiling(Rng(1))


def cycle_oracle(perm):
    """Displaced tiles minus the cycles among them."""
    seen, cycles = set(), 0
    displaced = sum(1 for i, p in enumerate(perm) if i != p)
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cycles += 1
        j = i
        while j not in seen:
            seen.add(j)
            j = perm[j]
    return displaced - cycles


def hue(perm, rows=None, cols=None):
    n = len(perm)
    rows = rows or 1
    cols = cols or n
    ideal = tuple((i, 255 - i, (7 * i) % 256) for i in range(n))
    return HueBoard(rows, cols, ideal, tuple(perm))


def test_colour_hue_examples():
    assert solve_colour_hue(hue([0, 1, 2, 3])) == 0
    assert solve_colour_hue(hue([1, 0, 3, 2])) == 2 == cycle_oracle([1, 0, 3, 2])


def test_colour_hue_rejects_duplicates():
    with pytest.raises(InvalidInstanceError):
        solve_colour_hue(HueBoard(1, 2, ((1, 1, 1), (1, 1, 1)), (1, 0)))


@given(st.permutations(range(30)))
def test_colour_hue_equals_cycle_identity(perm):
    assert solve_colour_hue(hue(perm)) == cycle_oracle(perm)


def test_generated_hue_boards_are_valid():
    for seed in range(200):
        b = gen_colour_hue(Rng(seed))
        b.validate()
        assert solve_colour_hue(b) == cycle_oracle(b.shuffled) >= 1
        assert all(0 <= ch <= 255 for rgb in b.ideal for ch in rgb)


def test_nqueens_small_and_eight():
    assert len(enumerate_nqueens(4)) == 2
    assert len(enumerate_nqueens(8)) == 92


def test_hidden_queen_distance_formula():
    sol = next(s for s in enumerate_nqueens(8) if s[0] == 1 and s[3] == 5)
    inst = QueensInstance(8, sol, (0, 3))
    assert scan_oracle(inst) == {7}
    assert solve_nqueens(inst) == 3 + 4


def scan_oracle(inst):
    """Place two queens on every pair of free squares; collect the distances that work."""
    shown = inst.shown()
    taken = {(r, c) for r, c in shown}

    def attacks(a, b):
        return a[0] == b[0] or a[1] == b[1] or abs(a[0] - b[0]) == abs(a[1] - b[1])

    dists = set()
    free = [(r, c) for r in range(inst.n) for c in range(inst.n) if (r, c) not in taken]
    for a, b in combinations(free, 2):
        if attacks(a, b) or any(attacks(a, q) or attacks(b, q) for q in shown):
            continue
        dists.add(abs(a[0] - b[0]) + abs(a[1] - b[1]))
    return dists


def test_generated_queens_match_placement_scan():
    for seed in range(1000):
        inst = gen_nqueens(Rng(seed))
        assert scan_oracle(inst) == {solve_nqueens(inst)}


def naive_rot(grid):
    """Minute-by-minute simulation; None when fresh fruit is left forever."""
    cells = [list(row) for row in grid.board.as_rows()]
    minutes = 0
    while True:
        fresh = [(r, c) for r, row in enumerate(cells) for c, v in enumerate(row) if v == FRESH]
        if not fresh:
            return minutes
        turning = [(r, c) for r, c in fresh
                   if any(0 <= r + dr < len(cells) and 0 <= c + dc < len(cells[0])
                          and cells[r + dr][c + dc] == ROTTEN
                          for dr, dc in ((1, 0), (-1, 0), (0, 1), (0, -1)))]
        if not turning:
            return None
        for r, c in turning:
            cells[r][c] = ROTTEN
        minutes += 1


def test_rotting_examples():
    assert solve_rotting(RottingGrid(GridBoard(1, 3, (ROTTEN, EMPTY, EMPTY)))) == 0
    assert solve_rotting(RottingGrid(GridBoard(1, 3, (ROTTEN, FRESH, FRESH)))) == 2
    with pytest.raises(InvalidInstanceError):
        solve_rotting(RottingGrid(GridBoard(1, 3, (ROTTEN, EMPTY, FRESH))))


def test_generated_rotting_matches_simulation():
    for seed in range(500):
        grid = gen_rotting(Rng(seed))
        assert solve_rotting(grid) == naive_rot(grid)
