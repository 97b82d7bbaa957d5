"""Hexagonal-grid geometry: cells, the shaded-vertex lattice, winding
numbers and boundary words.

Coordinates
-----------
* Cells carry axial coordinates (q, r); the six neighbors are offset by
  N = (0, 1), NE = (1, 0), SE = (1, -1) and their negatives.  Hexagons
  have horizontal top and bottom edges.
* Step endpoints (the shaded vertices) form a triangular lattice with
  displacements d(X) = (0, 1), d(Y) = (-1, 0), d(Z) = (1, -1).
* All plane geometry is done in integer half-units: x in units of s/2 and
  y in units of s*sqrt(3)/2 for hexagon side s.  The center of cell (q, r)
  sits at (3q, q + 2r); lattice point (u, v) sits at (1 + 3u, -1 + u + 2v).
  Grid vertices have x = 1 or 2 (mod 3); the shaded ones are x = 1 (mod 3).
* A written step word is traversed from its rightmost letter (see
  :mod:`hexsbs.words`), so boundary extraction records the
  counterclockwise walk and then reverses it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from random import Random

from .words import Word, WordError, step_word

Cell = tuple  # (q, r)
LatticePoint = tuple  # (u, v)

# neighbor offsets indexed like the cell's CCW boundary edges below
NEIGHBOR_OFFSETS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

STEP_DISPLACEMENTS = {"X": (0, 1), "Y": (-1, 0), "Z": (1, -1),
                      "x": (0, -1), "y": (1, 0), "z": (-1, 1)}


class RegionError(ValueError):
    """A cell set that is not a valid (simply connected) region."""


def cell_center_plane(cell: Cell) -> tuple:
    q, r = cell
    return (3 * q, q + 2 * r)


def lattice_to_plane(p: LatticePoint) -> tuple:
    u, v = p
    return (1 + 3 * u, -1 + u + 2 * v)


def plane_to_lattice(xy: tuple) -> LatticePoint:
    x, y = xy
    if x % 3 != 1:
        raise ValueError(f"{xy} is not a shaded vertex")
    u = (x - 1) // 3
    return (u, (y + 1 - u) // 2)


def cell_vertices_plane(cell: Cell):
    """The six corners in CCW order starting at the east vertex."""
    cx, cy = cell_center_plane(cell)
    return ((cx + 2, cy), (cx + 1, cy + 1), (cx - 1, cy + 1),
            (cx - 2, cy), (cx - 1, cy - 1), (cx + 1, cy - 1))


def path_endpoint(start: LatticePoint, w: Word) -> LatticePoint:
    u, v = start
    for ch in w.letters:
        du, dv = STEP_DISPLACEMENTS[ch]
        u, v = u + du, v + dv
    return (u, v)


def is_closed(w: Word) -> bool:
    return path_endpoint((0, 0), w) == (0, 0)


def path_plane_points(w: Word, start: LatticePoint = (0, 0)):
    """Chord polyline of the path, rightmost letter first."""
    u, v = start
    pts = [lattice_to_plane(start)]
    for ch in reversed(w.letters):
        du, dv = STEP_DISPLACEMENTS[ch]
        u, v = u + du, v + dv
        pts.append(lattice_to_plane((u, v)))
    return pts


def winding_cells(w: Word, start: LatticePoint = (0, 0)) -> dict:
    """Signed winding number of the closed path around each cell center.

    Computed by summing signed crossings of the eastward ray from each
    candidate center against the step-chord polygon; chords never pass
    through a cell center, so the count is exact.  Cells with winding 0
    are omitted.
    """
    if not is_closed(w):
        raise WordError(f"winding_cells requires a closed word, got {w}")
    pts = path_plane_points(w, start)
    if len(pts) == 1:
        return {}
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    out = {}
    for q in range(min(xs) // 3 - 1, max(xs) // 3 + 2):
        for r in range((min(ys) - q) // 2 - 1, (max(ys) - q) // 2 + 2):
            cx, cy = 3 * q, q + 2 * r
            wind = 0
            for (x1, y1), (x2, y2) in zip(pts, pts[1:]):
                if y1 <= cy < y2:
                    if (x2 - x1) * (cy - y1) > (y2 - y1) * (cx - x1):
                        wind += 1
                elif y2 <= cy < y1:
                    if (x2 - x1) * (cy - y1) < (y2 - y1) * (cx - x1):
                        wind -= 1
            if wind:
                out[(q, r)] = wind
    return out


@dataclass(frozen=True)
class Region:
    """A finite, edge-connected, simply connected set of cells."""

    cells: frozenset

    def __len__(self) -> int:
        return len(self.cells)

    def sorted_cells(self):
        return sorted(self.cells)

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in self.sorted_cells()]}


def neighbors(cell: Cell):
    q, r = cell
    return ((q + dq, r + dr) for dq, dr in NEIGHBOR_OFFSETS)


def is_edge_connected(cells) -> bool:
    cells = set(cells)
    if not cells:
        return True
    start = min(cells)
    seen = {start}
    stack = [start]
    while stack:
        for n in neighbors(stack.pop()):
            if n in cells and n not in seen:
                seen.add(n)
                stack.append(n)
    return len(seen) == len(cells)


def is_simply_connected(cells) -> bool:
    """No holes: the complement of the cells inside a one-cell margin of
    their bounding box is connected to the margin."""
    cells = set(cells)
    if not cells:
        return True
    qs = [q for q, _ in cells]
    rs = [r for _, r in cells]
    lo_q, hi_q = min(qs) - 1, max(qs) + 1
    lo_r, hi_r = min(rs) - 1, max(rs) + 1
    outside = {(q, r) for q in range(lo_q, hi_q + 1)
               for r in range(lo_r, hi_r + 1)} - cells
    start = (lo_q, lo_r)
    seen = {start}
    stack = [start]
    while stack:
        for n in neighbors(stack.pop()):
            if n in outside and n not in seen:
                seen.add(n)
                stack.append(n)
    return seen == outside


def region_validate(cells, allow_empty: bool = False) -> Region:
    cell_set = frozenset((int(q), int(r)) for q, r in cells)
    if not cell_set:
        if allow_empty:
            return Region(cell_set)
        raise RegionError("empty region")
    if not is_edge_connected(cell_set):
        raise RegionError("region is not edge-connected")
    if not is_simply_connected(cell_set):
        raise RegionError("region is not simply connected (hole detected)")
    return Region(cell_set)


@dataclass(frozen=True)
class BoundaryWord:
    """Closed CCW boundary: the region interior lies on the left of the
    walk, and the winding of `word` from `start` is +1 exactly on the
    region's cells."""

    start: LatticePoint
    word: Word

    def to_json(self) -> dict:
        return {"start": list(self.start), "word": self.word.letters}


_EDGE_LETTER_BY_DELTA = {(1, 1): "A", (-1, 1): "B", (-2, 0): "G",
                         (-1, -1): "a", (1, -1): "b", (2, 0): "g"}
# time-ordered edge pair (from a shaded vertex) -> step letter
_STEP_BY_EDGE_PAIR = {("A", "B"): "X", ("G", "a"): "Y", ("b", "g"): "Z",
                      ("b", "a"): "x", ("A", "g"): "y", ("G", "B"): "z"}


def boundary_edges(region: Region) -> dict:
    """Directed boundary edges (tail plane point -> head plane point),
    oriented CCW so the region is on the left."""
    out = {}
    for cell in region.sorted_cells():
        vs = cell_vertices_plane(cell)
        for k, (dq, dr) in enumerate(NEIGHBOR_OFFSETS):
            if (cell[0] + dq, cell[1] + dr) not in region.cells:
                tail, head = vs[k], vs[(k + 1) % 6]
                if tail in out:
                    raise RegionError("boundary touches itself at a vertex")
                out[tail] = (head, cell, k)
    return out


def region_boundary_word(region: Region,
                         start_choice: tuple | None = None) -> BoundaryWord:
    """Extract the CCW boundary as a step word.

    The walk starts at the lexicographically least boundary edge, keyed by
    (cell, edge index), unless `start_choice` picks another boundary edge;
    either way the walk is aligned to begin at a shaded vertex before step
    letters are read off, and the written word is the reversed walk.
    """
    if not region.cells:
        raise RegionError("empty region has no boundary word")
    edges = boundary_edges(region)
    if start_choice is None:
        cell, k = min((cell, k) for _, (h, cell, k) in edges.items())
    else:
        cell, k = start_choice
    start_tail = cell_vertices_plane(cell)[k]
    if start_tail not in edges:
        raise RegionError(f"({cell}, {k}) is not a boundary edge")
    walk = [start_tail]
    cur = edges[start_tail][0]
    while cur != start_tail:
        walk.append(cur)
        cur = edges[cur][0]
    if walk[0][0] % 3 != 1:  # align to a shaded tail
        walk = walk[1:] + walk[:1]
    letters = []
    for t, h in zip(walk, walk[1:] + walk[:1]):
        letters.append(_EDGE_LETTER_BY_DELTA[(h[0] - t[0], h[1] - t[1])])
    steps = [_STEP_BY_EDGE_PAIR[(letters[i], letters[i + 1])]
             for i in range(0, len(letters), 2)]
    word = step_word("".join(reversed(steps)))
    return BoundaryWord(plane_to_lattice(walk[0]), word)


def grow_random_region(rng: Random, n_cells: int, tries: int = 200) -> Region:
    """Random simply connected region grown by boundary accretion."""
    for _ in range(tries):
        cells = {(0, 0)}
        while len(cells) < n_cells:
            frontier = sorted({n for c in cells for n in neighbors(c)}
                              - cells)
            cells.add(frontier[rng.randrange(len(frontier))])
        if is_simply_connected(cells):
            return Region(frozenset(cells))
    raise RuntimeError(f"no simply connected region of {n_cells} cells "
                       f"found in {tries} tries")


# --- region file formats ---------------------------------------------------

def region_from_json(text: str, allow_empty: bool = False) -> Region:
    data = json.loads(text)
    if not isinstance(data, dict) or "cells" not in data:
        raise RegionError('region JSON must be {"cells": [[q, r], ...]}')
    return region_validate([tuple(c) for c in data["cells"]], allow_empty)


def region_from_ascii(text: str) -> Region:
    """Rows of '#' (cell) and '.' (empty): column j, row k maps to
    q = j, r = -k - (j + (j % 2)) // 2, so odd columns sit a half-step
    lower than their even neighbors."""
    cells = []
    for k, line in enumerate(text.splitlines()):
        for j, ch in enumerate(line):
            if ch == "#":
                cells.append((j, -k - (j + (j % 2)) // 2))
            elif ch not in ". \t":
                raise RegionError(
                    f"unexpected character {ch!r} at row {k}, column {j}")
    return region_validate(cells)
