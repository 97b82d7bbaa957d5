"""Stone/bone/snake tiles: catalog, signed-tiling lattice oracle, exact
cover, the boundary obstruction and boundary-constructible sequences.

A signed tiling assigns each placed tile a weight of +1 or -1 so that the
net coverage is 1 on the region and 0 elsewhere.  Tiles may stick out of
the region, which makes the search space unbounded in principle; the
solver therefore works inside the region padded by a configurable margin
and reports failure as window-relative, never as a global impossibility.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fixtures
from .cyclo import PMClass
from .hexgrid import (Region, is_edge_connected, is_simply_connected,
                      neighbors, region_boundary_word, winding_cells)
from .words import Word, classify_pm, eval_word, step_word

KINDS = ("bone", "stone", "snake")


@dataclass(frozen=True)
class TileShape:
    kind: str
    orientation: str
    index: int  # position in catalog order
    cells: frozenset  # cell offsets enclosed by boundary_word at the origin
    boundary_word: Word

    @property
    def name(self) -> str:
        return f"{self.kind}_{self.orientation}"


def _build_catalog() -> tuple:
    shapes = []
    for i, (name, letters) in enumerate(fixtures.TILE_WORDS.items()):
        kind, orientation = name.split("_", 1)
        word = step_word(letters)
        wind = winding_cells(word)
        assert set(wind.values()) == {1}
        shapes.append(TileShape(kind, orientation, i,
                                frozenset(wind), word))
    return tuple(shapes)


_CATALOG = _build_catalog()
_BY_NAME = {s.name: s for s in _CATALOG}


def tile_catalog() -> tuple:
    """The 11 shapes: 3 bones, 2 stones, 6 snakes, in fixed order."""
    return _CATALOG


def tile_shape(kind: str, orientation: str) -> TileShape:
    try:
        return _BY_NAME[f"{kind}_{orientation}"]
    except KeyError:
        raise ValueError(f"unknown tile {kind}_{orientation}") from None


@dataclass(frozen=True)
class Placement:
    shape: TileShape
    anchor: tuple

    def cells(self) -> frozenset:
        aq, ar = self.anchor
        return frozenset((q + aq, r + ar) for q, r in self.shape.cells)

    def sort_key(self):
        return (self.shape.index, self.anchor)

    def to_json(self) -> dict:
        return {"kind": self.shape.kind, "orientation": self.shape.orientation,
                "anchor": list(self.anchor)}


def placement_from_json(obj: dict) -> Placement:
    return Placement(tile_shape(obj["kind"], obj["orientation"]),
                     tuple(obj["anchor"]))


def pad_window(cells, padding: int) -> frozenset:
    window = set(cells)
    for _ in range(padding):
        window |= {n for c in window for n in neighbors(c)}
    return frozenset(window)


def enumerate_placements(window, kinds=KINDS) -> list:
    """All placements of the selected kinds lying entirely inside the
    window, in deterministic (catalog, anchor) order."""
    window = frozenset(window)
    out = []
    for shape in _CATALOG:
        if shape.kind not in kinds:
            continue
        anchors = set()
        for wq, wr in window:
            for oq, orr in shape.cells:
                anchors.add((wq - oq, wr - orr))
        for anchor in sorted(anchors):
            p = Placement(shape, anchor)
            if p.cells() <= window:
                out.append(p)
    return out


@dataclass(frozen=True)
class SignedTiling:
    """Multiset of placements with unit +-1 coefficients."""

    entries: tuple  # of (Placement, coeff)

    def to_json(self) -> list:
        return [{**p.to_json(), "coeff": c} for p, c in self.entries]

    @classmethod
    def from_json(cls, data) -> "SignedTiling":
        return cls(tuple((placement_from_json(e), int(e["coeff"]))
                         for e in data))

    def net_coverage(self) -> dict:
        cov = {}
        for placement, coeff in self.entries:
            for cell in placement.cells():
                cov[cell] = cov.get(cell, 0) + coeff
        return cov


def signed_tiling_verify(region: Region, tiling: SignedTiling):
    """None if the net coverage is exactly the region indicator, else the
    first offending (cell, net_coefficient) in sorted cell order."""
    cov = tiling.net_coverage()
    for cell in sorted(set(cov) | set(region.cells)):
        want = 1 if cell in region.cells else 0
        got = cov.get(cell, 0)
        if got != want:
            return (cell, got)
    return None


class IntegerLattice:
    """Row lattice of placement indicator vectors, in Hermite normal form
    with the transform kept so that particular solutions can be read off.

    Targets are integer vectors over the window cells; membership and a
    particular solution come from forward substitution along the HNF rows.
    Exact big-integer arithmetic throughout.
    """

    def __init__(self, placements, window):
        self.placements = list(placements)
        self.cells = sorted(window)
        self._cell_index = {c: i for i, c in enumerate(self.cells)}
        n, m = len(self.placements), len(self.cells)
        rows = []
        for p in self.placements:
            row = [0] * m
            for c in p.cells():
                row[self._cell_index[c]] = 1
            rows.append(row)
        transform = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        pivots = []
        piv = 0
        for col in range(m):
            if piv == n:
                break
            # gcd-eliminate column entries below the pivot row
            nz = [i for i in range(piv, n) if rows[i][col]]
            if not nz:
                continue
            while len(nz) > 1:
                nz.sort(key=lambda i: abs(rows[i][col]))
                base = nz[0]
                for i in nz[1:]:
                    q = rows[i][col] // rows[base][col]
                    if q:
                        rows[i] = [a - q * b for a, b in
                                   zip(rows[i], rows[base])]
                        transform[i] = [a - q * b for a, b in
                                        zip(transform[i], transform[base])]
                nz = [i for i in nz if rows[i][col]]
            src = nz[0]
            rows[piv], rows[src] = rows[src], rows[piv]
            transform[piv], transform[src] = transform[src], transform[piv]
            if rows[piv][col] < 0:
                rows[piv] = [-a for a in rows[piv]]
                transform[piv] = [-a for a in transform[piv]]
            pivots.append((piv, col))
            piv += 1
        self._rows = rows
        self._transform = transform
        self._pivots = pivots

    def solve(self, target: dict):
        """Integer coefficients x with sum x_i * placement_i = target, or
        None if the target is outside the lattice (window-relative)."""
        resid = [0] * len(self.cells)
        for cell, value in target.items():
            i = self._cell_index.get(cell)
            if i is None:
                if value:
                    return None
                continue
            resid[i] = value
        coeffs_rows = [0] * len(self.placements)
        for pr, pc in self._pivots:
            if resid[pc] == 0:
                continue
            if resid[pc] % self._rows[pr][pc]:
                return None
            t = resid[pc] // self._rows[pr][pc]
            coeffs_rows[pr] = t
            resid = [a - t * b for a, b in zip(resid, self._rows[pr])]
        if any(resid):
            return None
        x = [0] * len(self.placements)
        for i, t in enumerate(coeffs_rows):
            if t:
                for j, u in enumerate(self._transform[i]):
                    x[j] += t * u
        return x


def solve_cell_target(target: dict, kinds=KINDS, window=None,
                      padding: int = 2):
    """Signed tiling with the given net coverage, or None (window-relative).

    The low-level entry point: `target` may be any integer-valued cell map,
    not necessarily a valid region indicator.
    """
    if window is None:
        window = pad_window([c for c, v in target.items() if v], padding)
    placements = enumerate_placements(window, kinds)
    lattice = IntegerLattice(placements, window)
    x = lattice.solve(target)
    if x is None:
        return None
    entries = []
    for placement, coeff in zip(placements, x):
        sign = 1 if coeff > 0 else -1
        entries.extend((placement, sign) for _ in range(abs(coeff)))
    return SignedTiling(tuple(entries))


def signed_tiling_solve(region: Region, kinds=KINDS, padding: int = 2):
    """A verified signed tiling of the region using only the given kinds,
    with placements restricted to the region padded by `padding`; None
    means no solution exists in that window (not a global impossibility)."""
    target = {c: 1 for c in region.cells}
    if not target:
        return SignedTiling(())
    tiling = solve_cell_target(target, kinds,
                               pad_window(region.cells, padding))
    if tiling is not None:
        assert signed_tiling_verify(region, tiling) is None
    return tiling


@dataclass(frozen=True)
class TilingCount:
    count: int
    cap_exceeded: bool


def standard_tiling_solve(region: Region, kinds=KINDS, mode: str = "first",
                          cap: int = 10 ** 6):
    """Exact cover of the region by non-overlapping tiles inside it.

    mode "first": a placement list, or None.
    mode "count": TilingCount; exact when cap is not exceeded.
    """
    if mode not in ("first", "count"):
        raise ValueError(f"unknown mode {mode!r}")
    placements = enumerate_placements(region.cells, kinds)
    cover = {p: p.cells() for p in placements}
    by_cell = {}
    for p in placements:
        for c in cover[p]:
            by_cell.setdefault(c, []).append(p)
    uncovered = set(region.cells)
    chosen = []
    state = {"count": 0, "capped": False}

    def descend():
        if not uncovered:
            state["count"] += 1
            return mode == "first"
        if state["capped"]:
            return True
        # least-candidates cell first, ties by cell order
        cell = min(uncovered, key=lambda c: (
            sum(1 for p in by_cell.get(c, ()) if cover[p] <= uncovered), c))
        for p in by_cell.get(cell, ()):
            cells = cover[p]
            if cells <= uncovered:
                uncovered.difference_update(cells)
                chosen.append(p)
                if descend():
                    return True
                chosen.pop()
                uncovered.update(cells)
                if mode == "count" and state["count"] > cap:
                    state["capped"] = True
                    return True
        return False

    hit = descend()
    if mode == "first":
        return list(chosen) if hit else None
    return TilingCount(min(state["count"], cap), state["capped"])


def boundary_obstruction_check(region: Region) -> PMClass:
    """The necessary condition: a signed-tilable region's boundary word
    must evaluate to +I or -I; Other means obstructed."""
    return classify_pm(eval_word(region_boundary_word(region).word))


@dataclass(frozen=True)
class ConstructionStep:
    action: str  # "add" | "remove"
    placement: Placement

    def to_json(self) -> dict:
        return {"action": self.action, **self.placement.to_json()}


def construction_step_from_json(obj: dict) -> ConstructionStep:
    if obj.get("action") not in ("add", "remove"):
        raise ValueError(f"bad action {obj.get('action')!r}")
    return ConstructionStep(obj["action"], placement_from_json(obj))


@dataclass(frozen=True)
class StepRecord:
    index: int
    action: str
    kind: str
    support_size: int
    boundary_class: PMClass
    ledger_sign: int
    agrees: bool

    def to_json(self) -> dict:
        return {"index": self.index, "action": self.action, "kind": self.kind,
                "support_size": self.support_size,
                "class": self.boundary_class.value,
                "ledger_sign": self.ledger_sign, "agrees": self.agrees}


@dataclass(frozen=True)
class SequenceReport:
    valid: bool
    violation_index: int | None
    violation_reason: str | None
    records: tuple

    def to_json(self) -> dict:
        out = {"valid": self.valid,
               "steps": [r.to_json() for r in self.records]}
        if not self.valid:
            out["violation_index"] = self.violation_index
            out["violation_reason"] = self.violation_reason
        return out


def constructible_sequence_check(steps) -> SequenceReport:
    """Simulate adding/removing tiles along the boundary.

    After every step the coverage must stay 0/1 everywhere, the support
    must remain edge-connected and simply connected, and the tile must
    touch the support boundary (first step exempt).  Each step's directly
    evaluated boundary class must equal the stone-parity ledger
    (-1)^(#stone steps so far); removing a stone flips the sign, bones and
    snakes leave it unchanged.
    """
    support = set()
    stone_steps = 0
    records = []

    def fail(i, reason):
        return SequenceReport(False, i, reason, tuple(records))

    for i, step in enumerate(steps):
        cells = step.placement.cells()
        kind = step.placement.shape.kind
        if step.action == "add":
            if cells & support:
                return fail(i, "coverage conflict")
            if support and not any(n in support for c in cells
                                   for n in neighbors(c)):
                return fail(i, "interior placement")
        elif step.action == "remove":
            if not cells <= support:
                return fail(i, "coverage conflict")
            if not any(n not in support for c in cells for n in neighbors(c)):
                return fail(i, "interior placement")
        else:
            raise ValueError(f"bad action {step.action!r}")
        support = support | cells if step.action == "add" else support - cells
        if kind == "stone":
            stone_steps += 1
        if not is_edge_connected(support):
            return fail(i, "disconnected")
        if not is_simply_connected(support):
            return fail(i, "puncture")
        if support:
            klass = boundary_obstruction_check(Region(frozenset(support)))
        else:
            klass = PMClass.PLUS_IDENTITY
        sign = -1 if stone_steps % 2 else 1
        agrees = klass is (PMClass.MINUS_IDENTITY if sign < 0
                           else PMClass.PLUS_IDENTITY)
        records.append(StepRecord(i, step.action, kind, len(support),
                                  klass, sign, agrees))
        if not agrees:
            return fail(i, "sign ledger mismatch")
    return SequenceReport(True, None, None, tuple(records))


@dataclass(frozen=True)
class StoneProbe:
    """Window-relative minimum-stone probe, stopping at one stone.

    stones: 0, 1, or None for "at least 2 or unknown in this window".
    parity_consistent compares the probe parity against the boundary
    class; it is reported, never asserted, because the lattice oracle is
    weaker than boundary-constructibility.
    """

    stones: int | None
    boundary_class: PMClass
    parity_consistent: bool | None

    def to_json(self) -> dict:
        return {"stones": self.stones if self.stones is not None
                else "AtLeast2OrUnknown",
                "boundary_class": self.boundary_class.value,
                "parity_consistent": self.parity_consistent}


def min_stone_probe(region: Region, padding: int = 2) -> StoneProbe:
    klass = boundary_obstruction_check(region)
    window = pad_window(region.cells, padding)
    quiet = enumerate_placements(window, ("bone", "snake"))
    lattice = IntegerLattice(quiet, window)
    target = {c: 1 for c in region.cells}

    def consistency(parity):
        if klass is PMClass.OTHER:
            return None
        expected = PMClass.MINUS_IDENTITY if parity else PMClass.PLUS_IDENTITY
        return klass is expected

    if lattice.solve(target) is not None:
        return StoneProbe(0, klass, consistency(0))
    for stone in enumerate_placements(window, ("stone",)):
        for sign in (1, -1):
            shifted = dict(target)
            for c in stone.cells():
                shifted[c] = shifted.get(c, 0) - sign
            if lattice.solve(shifted) is not None:
                return StoneProbe(1, klass, consistency(1))
    return StoneProbe(None, klass, None)
