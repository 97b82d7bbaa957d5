"""Computer search for identity relations among the step generators.

The enumeration domain is the set of cyclically reduced step words ending
in the letter X.  Every closure class of cyclically reduced words has such
a member (rotate or invert until an uppercase X exists, then shift it to
the end), so appending X loses nothing while cutting the space sixfold;
this is checked against a naive oracle in the tests.

Words are evaluated through an interned state table: the subgroup
generated by the step matrices turns out to be a small finite group, so
evaluation reduces to walking a transition table after a cheap warmup.
The table is rebuilt per process; partitioned runs share nothing mutable.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cyclo import IDENTITY, PMClass, classify_pm
from .hexgrid import STEP_DISPLACEMENTS
from .words import (STEP_MATRICES, canonical_representative, closure_members,
                    eval_letters)

LETTERS = "XYZxyz"
_INVERSE = dict(zip("XYZxyz", "xyzXYZ"))
# cyclically reduced words ending in X cannot also start with x
START_LETTERS = "XYZyz"


class _StateTable:
    """Interned matrix values with memoized right-multiplication."""

    def __init__(self):
        self.mats = [IDENTITY]
        self.index = {IDENTITY: 0}
        self.trans = {}
        self.pm = {0: PMClass.PLUS_IDENTITY}

    def step(self, state: int, letter: str) -> int:
        key = (state, letter)
        t = self.trans.get(key)
        if t is None:
            m = self.mats[state] * STEP_MATRICES[letter]
            t = self.index.get(m)
            if t is None:
                t = len(self.mats)
                self.index[m] = t
                self.mats.append(m)
                k = classify_pm(m)
                if k is not PMClass.OTHER:
                    self.pm[t] = k
            self.trans[key] = t
        return t


@dataclass(frozen=True)
class RelationRecord:
    representative: str
    value: PMClass
    length: int
    closed: bool

    def to_json(self) -> dict:
        return {"length": self.length, "representative": self.representative,
                "value": self.value.value, "closed": self.closed}

    def jsonl(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class SearchConfig:
    max_word_length: int = 10
    partitions: int = 1

    def __post_init__(self):
        if self.max_word_length < 2:
            raise ValueError("max_word_length must be >= 2")
        if self.partitions < 1:
            raise ValueError("partitions must be >= 1")


def _word_is_closed(letters: str) -> bool:
    u = v = 0
    for ch in letters:
        du, dv = STEP_DISPLACEMENTS[ch]
        u += du
        v += dv
    return u == 0 and v == 0


def _enumerate_partition(args) -> dict:
    first_letters, max_word_length = args
    table = _StateTable()
    found = {}

    def visit(word: list, state: int):
        if word[-1] != "x":
            t = table.step(state, "X")
            k = table.pm.get(t)
            if k is not None:
                rep = canonical_representative("".join(word) + "X")
                if rep not in found:
                    found[rep] = (k, len(word) + 1)
        if len(word) < max_word_length - 1:
            last = word[-1]
            for ch in LETTERS:
                if _INVERSE[last] != ch:
                    word.append(ch)
                    visit(word, table.step(state, ch))
                    word.pop()

    for ch in first_letters:
        visit([ch], table.step(0, ch))
    return found


def enumerate_identity_words(cfg: SearchConfig = SearchConfig()) -> list:
    """Closure classes of cyclically reduced words w+X with value +-I and
    total length <= cfg.max_word_length, sorted by (length, representative).
    Partitioned runs split the space by first letter and merge to the same
    output as a single-threaded run.
    """
    groups = [START_LETTERS[i::cfg.partitions]
              for i in range(min(cfg.partitions, len(START_LETTERS)))]
    if cfg.partitions == 1:
        results = [_enumerate_partition((START_LETTERS, cfg.max_word_length))]
    else:
        with ProcessPoolExecutor(max_workers=len(groups)) as pool:
            results = list(pool.map(
                _enumerate_partition,
                [(g, cfg.max_word_length) for g in groups]))
    merged = {}
    for part in results:
        merged.update(part)
    records = [RelationRecord(rep, value, length, _word_is_closed(rep))
               for rep, (value, length) in merged.items()]
    records.sort(key=lambda r: (r.length, r.representative))
    return records


@dataclass(frozen=True)
class Reduction:
    """Outcome of shortening the relation list by earlier relations."""

    survivors: tuple
    casualties: tuple  # of (RelationRecord, factor, source_representative)

    def to_json(self) -> dict:
        return {
            "survivors": [r.to_json() for r in self.survivors],
            "casualties": [{**r.to_json(), "killed_by_factor": f,
                            "killed_by": src}
                           for r, f, src in self.casualties],
        }


def reduce_relation_list(records) -> Reduction:
    """Accept a record only if no member of its closure contains a factor
    longer than half the length of a previously accepted relation; records
    must be sorted shortest-first.  Each casualty reports the factor and
    the accepted relation that produced it."""
    records = list(records)
    if records != sorted(records, key=lambda r: (r.length, r.representative)):
        raise ValueError("records must be sorted shortest-first")
    factors = {}  # substring -> (accept_index, source_representative)
    max_factor_len = 0
    survivors = []
    casualties = []
    for record in records:
        members = closure_members(record.representative)
        hits = []
        for member in members:
            top = min(len(member), max_factor_len)
            for flen in range(2, top + 1):
                for i in range(len(member) - flen + 1):
                    hit = factors.get(member[i:i + flen])
                    if hit is not None:
                        hits.append((hit[0], member[i:i + flen], hit[1]))
        if hits:
            _, factor, src = min(hits)
            casualties.append((record, factor, src))
            continue
        survivors.append(record)
        accept_index = len(survivors) - 1
        half = record.length // 2 + 1
        for member in members:
            for flen in range(half, len(member) + 1):
                for i in range(len(member) - flen + 1):
                    factors.setdefault(member[i:i + flen],
                                       (accept_index, record.representative))
        max_factor_len = max(max_factor_len, record.length)
    return Reduction(tuple(survivors), tuple(casualties))


def verify_reduction_table() -> list:
    """Check the seven reduction identities eval(lhs) = -eval(rhs)."""
    from .fixtures import REDUCTION_IDENTITIES
    out = []
    for lhs, rhs in REDUCTION_IDENTITIES:
        holds = eval_letters(lhs) == -eval_letters(rhs)
        out.append({"lhs": lhs, "rhs": f"-{rhs}", "holds": holds})
    return out


@dataclass(frozen=True)
class GroupProbeResult:
    order: int | None  # None = bound exceeded
    bound: int
    element_orders: tuple  # of (order, count), when finite

    @property
    def bound_exceeded(self) -> bool:
        return self.order is None

    def to_json(self) -> dict:
        if self.bound_exceeded:
            return {"result": "BoundExceeded", "bound": self.bound}
        return {"result": "FiniteOrder", "order": self.order,
                "element_orders": [list(p) for p in self.element_orders]}


def group_closure_probe(generators, bound: int = 10 ** 6) -> GroupProbeResult:
    """Breadth-first closure of <generators> under multiplication by the
    generators and their inverses, using canonical matrix encodings for
    dedup; stops (BoundExceeded) once more than `bound` elements appear."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    gens = []
    for g in generators:
        gens.append(g)
        gens.append(g.inv())
    seen = {IDENTITY.encode(): IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                p = m * g
                key = p.encode()
                if key not in seen:
                    if len(seen) >= bound:
                        return GroupProbeResult(None, bound, ())
                    seen[key] = p
                    nxt.append(p)
        frontier = nxt
    orders = {}
    for m in seen.values():
        n = 1
        p = m
        while p != IDENTITY:
            p = p * m
            n += 1
        orders[n] = orders.get(n, 0) + 1
    return GroupProbeResult(len(seen), bound, tuple(sorted(orders.items())))


def identity_endpoint_lattice(max_length: int, sign: str = "both") -> list:
    """Endpoints (relative to the origin) of every word of length up to
    max_length whose value matches the sign filter ("+I", "-I", "both")."""
    if sign not in ("+I", "-I", "both"):
        raise ValueError(f"bad sign filter {sign!r}")
    wanted = {"+I": {PMClass.PLUS_IDENTITY},
              "-I": {PMClass.MINUS_IDENTITY},
              "both": {PMClass.PLUS_IDENTITY, PMClass.MINUS_IDENTITY}}[sign]
    table = _StateTable()
    out = set()
    disp = STEP_DISPLACEMENTS

    def visit(state, last, u, v, depth):
        if table.pm.get(state) in wanted:
            out.add((u, v))
        if depth < max_length:
            for ch in LETTERS:
                if last is None or _INVERSE[last] != ch:
                    du, dv = disp[ch]
                    visit(table.step(state, ch), ch, u + du, v + dv,
                          depth + 1)

    visit(0, None, 0, 0, 0)
    return sorted(out)


# --- meet-in-the-middle census ---------------------------------------------

@dataclass(frozen=True)
class CensusReport:
    """Per-length counts of cyclically reduced identity words ending in X,
    counted twice over (a direct scan of the transition table and a
    meet-in-the-middle join over the value index), plus the index of
    shortest words per reachable matrix value."""

    max_length: int
    counts: tuple  # of (length, plus_count, minus_count)
    group_size: int
    shortest_words: tuple  # of (word, pm_class_or_None)

    def to_json(self) -> dict:
        return {
            "max_length": self.max_length,
            "counts": [{"length": n, "plus": p, "minus": m}
                       for n, p, m in self.counts],
            "group_size": self.group_size,
            "shortest_words": [
                {"word": w, "class": k.value if k else "Other"}
                for w, k in self.shortest_words],
        }


def _half_tables(table, length, keyed_by_first):
    """Counts of freely reduced words of a given length, keyed by
    (state, first or last letter); first letter never 'x' when keyed by
    last (prefix side), last letter never 'x' when keyed by first."""
    # start: single letters
    if keyed_by_first:
        cur = {(table.step(0, ch), ch, ch): 1 for ch in LETTERS}
    else:
        cur = {(table.step(0, ch), ch, ch): 1 for ch in START_LETTERS}
    for _ in range(length - 1):
        nxt = {}
        for (state, keep, last), count in cur.items():
            for ch in LETTERS:
                if _INVERSE[last] != ch:
                    key = (table.step(state, ch), keep, ch)
                    nxt[key] = nxt.get(key, 0) + count
        cur = nxt
    out = {}
    for (state, keep, last), count in cur.items():
        if keyed_by_first:
            if last == "x":
                continue
            key = (state, keep)
        else:
            key = (state, last)
        out[key] = out.get(key, 0) + count
    return out


def identity_word_census(max_length: int = 16) -> CensusReport:
    """Count the identity words of each total length up to max_length.

    The direct count walks the (state, last letter) table; the
    meet-in-the-middle count joins two half-word tables through the group
    value needed to land on +-I.  Both must agree, which is asserted.
    """
    if max_length < 2:
        raise ValueError("max_length must be >= 2")
    table = _StateTable()
    # force the full group into the table (finite and tiny)
    frontier = [0]
    while frontier:
        nxt = []
        for s in frontier:
            for ch in LETTERS:
                before = len(table.mats)
                t = table.step(s, ch)
                if t >= before:
                    nxt.append(t)
        frontier = nxt
    group_size = len(table.mats)
    xstep = {s: table.step(s, "X") for s in range(group_size)}

    counts = []
    for total in range(2, max_length + 1):
        n = total - 1  # prefix length
        # direct: DP over (state, last), first letter != 'x'
        cur = {(table.step(0, ch), ch): 1 for ch in START_LETTERS}
        for _ in range(n - 1):
            nxt = {}
            for (state, last), count in cur.items():
                for ch in LETTERS:
                    if _INVERSE[last] != ch:
                        key = (table.step(state, ch), ch)
                        nxt[key] = nxt.get(key, 0) + count
            cur = nxt
        plus = minus = 0
        for (state, last), count in cur.items():
            if last == "x":
                continue
            k = table.pm.get(xstep[state])
            if k is PMClass.PLUS_IDENTITY:
                plus += count
            elif k is PMClass.MINUS_IDENTITY:
                minus += count
        if n >= 2:
            h1 = n // 2
            left = _half_tables(table, h1, keyed_by_first=False)
            right = _half_tables(table, n - h1, keyed_by_first=True)
            mplus = mminus = 0
            for (s1, last1), c1 in left.items():
                bad = _INVERSE[last1]
                for (s2, first2), c2 in right.items():
                    if first2 == bad:
                        continue
                    k = table.pm.get(xstep.get(_combine(table, s1, s2)))
                    if k is PMClass.PLUS_IDENTITY:
                        mplus += c1 * c2
                    elif k is PMClass.MINUS_IDENTITY:
                        mminus += c1 * c2
            assert (mplus, mminus) == (plus, minus), \
                f"meet-in-the-middle mismatch at length {total}"
        counts.append((total, plus, minus))

    shortest = _shortest_words(table, group_size)
    return CensusReport(max_length, tuple(counts), group_size,
                        tuple(shortest))


def _combine(table, s1: int, s2: int) -> int:
    key = ("combine", s1, s2)
    t = table.trans.get(key)
    if t is None:
        m = table.mats[s1] * table.mats[s2]
        t = table.index[m]
        table.trans[key] = t
    return t


def _shortest_words(table, group_size: int) -> list:
    """A shortest reduced word per group element, breadth-first with the
    letters in fixed order, so the choice is deterministic."""
    best = {0: ""}
    frontier = [(0, "", None)]
    while frontier and len(best) < group_size:
        nxt = []
        for state, word, last in frontier:
            for ch in LETTERS:
                if last is not None and _INVERSE[last] == ch:
                    continue
                t = table.step(state, ch)
                if t not in best:
                    best[t] = word + ch
                    nxt.append((t, word + ch, ch))
        frontier = nxt
    out = []
    for state in sorted(best, key=lambda s: (len(best[s]), best[s])):
        out.append((best[state], table.pm.get(state)))
    return out
