"""Voronoi maps of the unit square and their proper four-colourings."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .core import GeneratorError, InvalidInstanceError, Rng
from .search import exact_cover_solutions

PALETTE = ("red", "green", "blue", "yellow")

SNAP_DIGITS = 9
EDGE_THRESHOLD = 1e-6
ON_LINE_TOLERANCE = 1e-7
MIN_SITE_SEPARATION = 0.05

Point = tuple[float, float]
UNIT_SQUARE: tuple[Point, ...] = ((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0))


@dataclass(frozen=True)
class PlanarMap:
    sites: tuple[Point, ...]
    polygons: tuple[tuple[Point, ...], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.sites)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def relabel(self, order: list[int]) -> "PlanarMap":
        """New map whose region k is old region ``order[k]``."""
        new_of = {old: new for new, old in enumerate(order)}
        return PlanarMap(
            tuple(self.sites[o] for o in order),
            tuple(self.polygons[o] for o in order),
            tuple(tuple(sorted(new_of[v] for v in self.adjacency[o])) for o in order),
        )


def _snap(p: Point) -> Point:
    # "+ 0.0" folds negative zero so serialised coordinates stay stable.
    return (round(p[0], SNAP_DIGITS) + 0.0, round(p[1], SNAP_DIGITS) + 0.0)


def clip_halfplane(poly: list[Point], a: float, b: float, c: float) -> list[Point]:
    """Sutherland-Hodgman step keeping the part of ``poly`` where a*x + b*y <= c."""
    out: list[Point] = []
    n = len(poly)
    for k in range(n):
        p, q = poly[k], poly[(k + 1) % n]
        fp = a * p[0] + b * p[1] - c
        fq = a * q[0] + b * q[1] - c
        if fp <= 0:
            out.append(p)
        if (fp < 0 < fq) or (fq < 0 < fp):
            t = fp / (fp - fq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    snapped: list[Point] = []
    for p in map(_snap, out):
        if not snapped or snapped[-1] != p:
            snapped.append(p)
    if len(snapped) > 1 and snapped[0] == snapped[-1]:
        snapped.pop()
    return snapped


def _bisector(si: Point, sj: Point) -> tuple[float, float, float]:
    """Half-plane of points at least as close to ``si`` as to ``sj``."""
    a = 2 * (sj[0] - si[0])
    b = 2 * (sj[1] - si[1])
    c = sj[0] ** 2 + sj[1] ** 2 - si[0] ** 2 - si[1] ** 2
    return a, b, c


def voronoi_cells(sites: list[Point]) -> list[list[Point]]:
    cells = []
    for i, si in enumerate(sites):
        poly = list(UNIT_SQUARE)
        for j, sj in enumerate(sites):
            if i != j:
                poly = clip_halfplane(poly, *_bisector(si, sj))
        cells.append(poly)
    return cells


def polygon_area(poly: tuple[Point, ...] | list[Point]) -> float:
    n = len(poly)
    return 0.5 * abs(sum(poly[k][0] * poly[(k + 1) % n][1] - poly[(k + 1) % n][0] * poly[k][1]
                         for k in range(n)))


def polygon_centroid(poly: tuple[Point, ...] | list[Point]) -> Point:
    n = len(poly)
    area2 = cx = cy = 0.0
    for k in range(n):
        (x0, y0), (x1, y1) = poly[k], poly[(k + 1) % n]
        cross = x0 * y1 - x1 * y0
        area2 += cross
        cx += (x0 + x1) * cross
        cy += (y0 + y1) * cross
    if abs(area2) < 1e-15:
        return (sum(p[0] for p in poly) / n, sum(p[1] for p in poly) / n)
    return (cx / (3 * area2), cy / (3 * area2))


def shared_boundary_length(poly: list[Point] | tuple[Point, ...], si: Point, sj: Point) -> float:
    """Length of the edges of ``poly`` lying on the bisector of ``si`` and ``sj``."""
    a, b, c = _bisector(si, sj)
    norm = math.hypot(a, b)
    on_line = [abs(a * p[0] + b * p[1] - c) / norm < ON_LINE_TOLERANCE for p in poly]
    total = 0.0
    for k in range(len(poly)):
        nxt = (k + 1) % len(poly)
        if on_line[k] and on_line[nxt]:
            total += math.dist(poly[k], poly[nxt])
    return total


def voronoi_map(sites: list[Point]) -> PlanarMap:
    """Clipped Voronoi map of the given sites with shared-edge adjacency."""
    cells = voronoi_cells(sites)
    adjacency: list[list[int]] = [[] for _ in sites]
    for i in range(len(sites)):
        for j in range(i + 1, len(sites)):
            length = min(shared_boundary_length(cells[i], sites[i], sites[j]),
                         shared_boundary_length(cells[j], sites[j], sites[i]))
            if length > EDGE_THRESHOLD:
                adjacency[i].append(j)
                adjacency[j].append(i)
    return PlanarMap(tuple(sites), tuple(tuple(c) for c in cells),
                     tuple(tuple(sorted(a)) for a in adjacency))


def build_voronoi_map(rng: Rng, n_regions: int) -> PlanarMap:
    if not 12 <= n_regions <= 18:
        raise ValueError("maps have between 12 and 18 regions")
    for _ in range(100):
        sites = [(round(rng.random(), 6), round(rng.random(), 6)) for _ in range(n_regions)]
        if all(math.dist(p, q) >= MIN_SITE_SEPARATION
               for k, p in enumerate(sites) for q in sites[k + 1:]):
            return voronoi_map(sites)
    raise GeneratorError("could not place well-separated Voronoi sites")


def enumerate_colourings(pmap: PlanarMap) -> list[tuple[int, ...]]:
    """Every proper colouring with the four palette colours, sorted."""
    return list(_colourings(pmap.adjacency))


@lru_cache(maxsize=64)
def _colourings(adjacency: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    n = len(adjacency)
    # Highest degree first prunes earliest; ties broken by region id.
    order = sorted(range(n), key=lambda v: (-len(adjacency[v]), v))
    position = {v: k for k, v in enumerate(order)}
    earlier = [[position[u] for u in adjacency[v] if position[u] < k]
               for k, v in enumerate(order)]
    assigned = [0] * n
    result: list[tuple[int, ...]] = []

    def extend(k: int) -> None:
        if k == n:
            colouring = [0] * n
            for pos, v in enumerate(order):
                colouring[v] = assigned[pos]
            result.append(tuple(colouring))
            return
        used = {assigned[j] for j in earlier[k]}
        for colour in range(len(PALETTE)):
            if colour not in used:
                assigned[k] = colour
                extend(k + 1)

    extend(0)
    if not result:
        raise AssertionError("map has no proper four-colouring")
    return tuple(sorted(result))


def exact_cover_colourings(pmap: PlanarMap) -> list[tuple[int, ...]]:
    """Same enumeration phrased as exact cover.

    Primary columns force one colour per region; secondary (edge, colour)
    columns forbid both ends of an edge from taking the same colour.
    """
    n = pmap.size
    if n == 0:
        return [()]
    rows, meaning = [], []
    for v in range(n):
        for k in range(len(PALETTE)):
            cols = [("region", v)]
            cols += [("edge", min(u, v), max(u, v), k) for u in pmap.adjacency[v]]
            rows.append(cols)
            meaning.append((v, k))
    secondary = {("edge", u, v, k) for u, v in pmap.edges() for k in range(len(PALETTE))}
    result = []
    for chosen in exact_cover_solutions(rows, secondary=secondary):
        colouring = [0] * n
        for row in chosen:
            v, k = meaning[row]
            colouring[v] = k
        result.append(tuple(colouring))
    return sorted(result)


def is_proper(pmap: PlanarMap, colouring: tuple[int, ...]) -> bool:
    return all(colouring[u] != colouring[v] for u, v in pmap.edges())


@dataclass(frozen=True)
class ColouringInstance:
    map: PlanarMap
    fixed: tuple[int | None, ...]  # palette index per region, None where masked
    masked: tuple[int, ...]

    def validate(self) -> None:
        if len(self.fixed) != self.map.size:
            raise InvalidInstanceError("one entry per region expected")
        if any((self.fixed[v] is None) != (v in self.masked) for v in range(self.map.size)):
            raise InvalidInstanceError("exactly the masked regions must be uncoloured")
        for u, v in self.map.edges():
            if self.fixed[u] is not None and self.fixed[u] == self.fixed[v]:
                raise InvalidInstanceError(f"regions {u} and {v} clash")


def _agrees(colouring: tuple[int, ...], fixed: tuple[int | None, ...]) -> bool:
    return all(f is None or f == c for f, c in zip(fixed, colouring))


def count_completions(inst: ColouringInstance) -> int:
    """Number of full colourings that agree with every fixed region."""
    inst.validate()
    count = sum(_agrees(c, inst.fixed) for c in enumerate_colourings(inst.map))
    if count == 0:
        raise InvalidInstanceError("the fixed colours admit no completion")
    return count


def gen_mapcolour(rng: Rng) -> ColouringInstance:
    attempts = 0
    while attempts < 1000:
        pmap = build_voronoi_map(rng, rng.randint(12, 18))
        colourings = enumerate_colourings(pmap)
        base = rng.choice(colourings)
        for _ in range(50):
            attempts += 1
            masked = set(rng.sample(range(pmap.size), rng.randint(2, 6)))
            fixed = tuple(None if v in masked else base[v] for v in range(pmap.size))
            count = sum(_agrees(c, fixed) for c in colourings)
            if 1 <= count <= 8:
                # Number fixed regions first and masked regions last.
                order = [v for v in range(pmap.size) if v not in masked] + sorted(masked)
                relabelled = pmap.relabel(order)
                return ColouringInstance(
                    relabelled,
                    tuple(fixed[o] for o in order),
                    tuple(range(pmap.size - len(masked), pmap.size)),
                )
    raise GeneratorError("no mask with 1 to 8 completions found")
