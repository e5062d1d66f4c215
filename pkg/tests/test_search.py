from itertools import combinations, product

import pytest

from puzzlekit.search import (SearchLimitError, SearchLimits, SearchProblem, UnreachableError,
                              backtrack_enumerate, bfs_distances, bfs_layer_sets, bfs_shortest,
                              exact_cover_solutions)
from puzzlekit.sliding.checkers import CheckerLine, checker_problem
from puzzlekit.sliding.numberslide import SlideBoard, slide_problem


def line_graph(n):
    """States 0..n-1 on a path; moves step left or right."""
    def expand(s):
        return [(lbl, t) for lbl, t in (("-", s - 1), ("+", s + 1)) if 0 <= t < n]
    return SearchProblem(0, expand, lambda s: s.to_bytes(2, "big"))


def test_initial_goal_is_distance_zero():
    assert bfs_shortest(line_graph(5), lambda s: s == 0) == (0, [])


def test_shortest_on_a_path_graph():
    assert bfs_shortest(line_graph(10), lambda s: s == 7) == (7, ["+"] * 7)


def test_unreachable_and_limits():
    with pytest.raises(UnreachableError):
        bfs_shortest(line_graph(4), lambda s: s == 9)
    with pytest.raises(SearchLimitError):
        bfs_shortest(line_graph(100), lambda s: s == 99, SearchLimits(max_states=10))
    with pytest.raises(SearchLimitError):
        bfs_shortest(line_graph(100), lambda s: s == 99, SearchLimits(max_depth=5))


def test_three_cell_toads_and_frogs():
    # Hand enumeration of the 6-state graph: G.R -> .GR -> RG. -> R.G is forced.
    dist, path = bfs_shortest(checker_problem(CheckerLine("G.R")),
                              lambda s: s.cells == "R.G")
    assert dist == 3 and len(path) == 3


def test_bfs_distances_depth_bound():
    d = bfs_distances(line_graph(10), max_depth=3)
    assert sorted(d.values()) == [0, 1, 2, 3]


def _slide_by_hand(tiles, n, moves):
    tiles = list(tiles)
    for dr, dc in moves:
        z = tiles.index(0)
        r, c = divmod(z, n)
        nr, nc = r + dr, c + dc
        if not (0 <= nr < n and 0 <= nc < n):
            return None
        tiles[z], tiles[nr * n + nc] = tiles[nr * n + nc], 0
    return tuple(tiles)


def test_layer_sets_small_board():
    board = SlideBoard(3, (0, 1, 2, 3, 4, 5, 6, 7, 8))
    layers = bfs_layer_sets(slide_problem(board), 2)
    assert len(layers[0]) == 1
    assert len(layers[1]) == 2
    steps = [(-1, 0), (1, 0), (0, -1), (0, 1)]
    brute = {t for seq in product(steps, repeat=2)
             if (t := _slide_by_hand(board.tiles, 3, seq)) is not None}
    assert layers[2] == {bytes(t) for t in brute}


def test_layer_sets_alternate_on_a_bipartite_graph():
    board = SlideBoard(4, tuple(range(16)))
    layers = bfs_layer_sets(slide_problem(board), 5)
    assert all(layers[k] and not layers[k] & layers[k + 1] for k in range(5))


def test_backtracking_queens_and_unsat():
    def ok(partial):
        r, c = len(partial) - 1, partial[-1]
        return all(pc != c and abs(pc - c) != r - pr for pr, pc in enumerate(partial[:-1]))
    assert len(backtrack_enumerate(4, lambda slot, p: range(4), ok)) == 2
    assert backtrack_enumerate(3, lambda slot, p: range(2), lambda p: False) == []


def test_exact_cover_identity():
    assert exact_cover_solutions([{0}, {1}, {2}]) == [(0, 1, 2)]


KNUTH_ROWS = [{1, 4, 7}, {1, 4}, {4, 5, 7}, {3, 5, 6}, {2, 3, 6, 7}, {2, 7}]


def test_exact_cover_classic_universe_against_subset_scan():
    universe = set(range(1, 8))
    brute = []
    for k in range(len(KNUTH_ROWS) + 1):
        for subset in combinations(range(len(KNUTH_ROWS)), k):
            cols = [c for i in subset for c in KNUTH_ROWS[i]]
            if len(cols) == len(set(cols)) and set(cols) == universe:
                brute.append(subset)
    found = [tuple(sorted(s)) for s in exact_cover_solutions(KNUTH_ROWS)]
    assert found == brute == [(1, 3, 5)]


def test_exact_cover_empty_rows():
    assert exact_cover_solutions([], columns={1, 2}) == []


def test_exact_cover_secondary_columns_are_optional():
    rows = [{"a", "x"}, {"b", "x"}, {"a"}, {"b"}]
    sols = {tuple(sorted(s)) for s in exact_cover_solutions(rows, secondary={"x"})}
    assert sols == {(0, 3), (1, 2), (2, 3)}
