"""Exact search machinery shared by the puzzle modules.

Every state graph is described by a :class:`SearchProblem`: an initial state,
an ordered ``expand`` function, and a canonical byte key deciding when two
states count as the same position.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable, Sequence

DEFAULT_MAX_STATES = 5_000_000
DEFAULT_MAX_DEPTH = 10_000


class UnreachableError(Exception):
    """No goal state can be reached from the initial state."""


class SearchLimitError(Exception):
    """A search exceeded its state or depth budget."""


@dataclass(frozen=True)
class SearchLimits:
    max_states: int = DEFAULT_MAX_STATES
    max_depth: int = DEFAULT_MAX_DEPTH

    def __post_init__(self) -> None:
        if self.max_states <= 0 or self.max_depth <= 0:
            raise ValueError("search limits must be positive")


@dataclass(frozen=True)
class SearchProblem:
    initial: Any
    expand: Callable[[Any], Sequence[tuple[str, Any]]]
    canonical_key: Callable[[Any], bytes]


def bfs_shortest(problem: SearchProblem, is_goal: Callable[[Any], bool],
                 limits: SearchLimits = SearchLimits()) -> tuple[int, list[str]]:
    """Shortest move count to any goal state, and one path achieving it.

    Ties go to the first goal dequeued, so the returned path follows the
    problem's expansion order.
    """
    start = problem.initial
    if is_goal(start):
        return 0, []
    key = problem.canonical_key
    # parent[key] = (parent key, move label, depth)
    parent: dict[bytes, tuple[bytes | None, str | None, int]] = {key(start): (None, None, 0)}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        k = key(state)
        depth = parent[k][2]
        if depth >= limits.max_depth:
            raise SearchLimitError(f"depth limit {limits.max_depth} reached")
        for label, nxt in problem.expand(state):
            nk = key(nxt)
            if nk in parent:
                continue
            parent[nk] = (k, label, depth + 1)
            if is_goal(nxt):
                return depth + 1, _unwind(parent, nk)
            if len(parent) > limits.max_states:
                raise SearchLimitError(f"state limit {limits.max_states} exceeded")
            queue.append(nxt)
    raise UnreachableError("goal not reachable from the initial state")


def _unwind(parent, k) -> list[str]:
    path = []
    while True:
        prev, label, _ = parent[k]
        if prev is None:
            return path[::-1]
        path.append(label)
        k = prev


def bfs_distances(problem: SearchProblem, max_depth: int | None = None,
                  limits: SearchLimits = SearchLimits()) -> dict[bytes, int]:
    """Distance from the initial state to every reachable key (optionally depth-bounded)."""
    key = problem.canonical_key
    dist = {key(problem.initial): 0}
    queue = deque([problem.initial])
    while queue:
        state = queue.popleft()
        d = dist[key(state)]
        if max_depth is not None and d >= max_depth:
            continue
        for _, nxt in problem.expand(state):
            nk = key(nxt)
            if nk not in dist:
                dist[nk] = d + 1
                if len(dist) > limits.max_states:
                    raise SearchLimitError(f"state limit {limits.max_states} exceeded")
                queue.append(nxt)
    return dist


def bfs_layers(problem: SearchProblem, n: int,
               limits: SearchLimits = SearchLimits()) -> list[dict[bytes, Any]]:
    """Layered expansion keeping one representative state per key in each layer.

    Layer k+1 holds every successor of layer k; layers are not deduplicated
    against one another, so a position may appear in several layers.
    """
    if n < 0:
        raise ValueError("layer count must be non-negative")
    if n > limits.max_depth:
        raise SearchLimitError(f"depth {n} exceeds limit {limits.max_depth}")
    key = problem.canonical_key
    layer = {key(problem.initial): problem.initial}
    layers = [layer]
    for _ in range(n):
        nxt: dict[bytes, Any] = {}
        for state in layer.values():
            for _, succ in problem.expand(state):
                nxt.setdefault(key(succ), succ)
        if len(nxt) > limits.max_states:
            raise SearchLimitError(f"state limit {limits.max_states} exceeded")
        layer = nxt
        layers.append(layer)
    return layers


def bfs_layer_sets(problem: SearchProblem, n: int,
                   limits: SearchLimits = SearchLimits()) -> list[set[bytes]]:
    return [set(layer) for layer in bfs_layers(problem, n, limits)]


def backtrack_enumerate(slots: int,
                        choices: Callable[[int, tuple], Iterable[Hashable]],
                        constraint: Callable[[tuple], bool]) -> list[tuple]:
    """All complete assignments of ``slots`` values accepted by ``constraint``.

    ``choices(slot, partial)`` yields candidates for the next slot;
    ``constraint`` is checked on every partial assignment, so it must be
    prefix-closed. Candidates are tried in sorted order, which makes the
    output lexicographic.
    """
    results: list[tuple] = []

    def extend(partial: tuple) -> None:
        if len(partial) == slots:
            results.append(partial)
            return
        for value in sorted(choices(len(partial), partial)):
            candidate = partial + (value,)
            if constraint(candidate):
                extend(candidate)

    extend(())
    return results


def exact_cover_solutions(matrix: Sequence[Iterable[Hashable]],
                          secondary: Iterable[Hashable] = (),
                          columns: Iterable[Hashable] | None = None) -> list[tuple[int, ...]]:
    """Every set of rows covering each primary column exactly once.

    Columns listed in ``secondary`` may be covered at most once. ``columns``
    optionally names the full universe; by default it is the union of the
    rows. The result holds sorted row-index tuples in lexicographic order.
    Algorithm X on dictionaries of sets.
    """
    rows = [tuple(dict.fromkeys(r)) for r in matrix]
    secondary = frozenset(secondary)
    universe = list(dict.fromkeys(columns)) if columns is not None else []
    table: dict[Hashable, set[int]] = {c: set() for c in universe}
    for i, row in enumerate(rows):
        for col in row:
            table.setdefault(col, set()).add(i)
    columns = table
    primary = {c for c in columns if c not in secondary}
    if not primary or any(not columns[c] for c in primary):
        return []

    solutions: list[tuple[int, ...]] = []
    partial: list[int] = []

    def select(i: int) -> list[set[int]]:
        removed = []
        for col in rows[i]:
            for j in columns[col]:
                for other in rows[j]:
                    if other != col:
                        columns[other].discard(j)
            removed.append(columns.pop(col))
        return removed

    def deselect(i: int, removed: list[set[int]]) -> None:
        for col in reversed(rows[i]):
            columns[col] = removed.pop()
            for j in columns[col]:
                for other in rows[j]:
                    if other != col:
                        columns[other].add(j)

    def search() -> None:
        open_primary = [c for c in columns if c in primary]
        if not open_primary:
            solutions.append(tuple(sorted(partial)))
            return
        col = min(open_primary, key=lambda c: (len(columns[c]), repr(c)))
        for i in sorted(columns[col]):
            partial.append(i)
            removed = select(i)
            search()
            deselect(i, removed)
            partial.pop()

    search()
    return sorted(solutions)
