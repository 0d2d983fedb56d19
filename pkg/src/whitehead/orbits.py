"""Orbit level graphs, the equivalence decision, primitivity, and bounded
orbit enumeration.

Everything is decided for conjugacy classes: some automorphism maps u to v
exactly when one maps the cyclic word of u to that of v, since inner
automorphisms absorb the conjugator.  Witnesses are cyclic-level.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple

from .automorphisms import (AutWitness, apply_cyclic, enumerate_type_I, enumerate_type_II)
from .graph import ScanState
from .minimization import (Work, greedy_minimize, is_minimal, is_strictly_minimal, length_delta,
                           profiles)
from .words import (CyclicWord, Word, WordError, _canonical_letters, _trim_bounds,
                    canonical_cyclic, cyclic_equal, kmp_find, letter_key)

DEFAULT_CAP = 10**6


class BudgetExceeded(RuntimeError):
    def __init__(self, partial_count: int, budget: int):
        super().__init__(f"orbit enumeration exceeded {budget} words "
                         f"({partial_count} found so far)")
        self.partial_count = partial_count
        self.budget = budget


@dataclass
class OrbitLevelGraph:
    root: CyclicWord
    parent: dict  # vertex -> (previous vertex, move) ; root -> None
    exhausted: bool

    @property
    def vertices(self) -> set[CyclicWord]:
        return set(self.parent)

    @property
    def cap_hit(self) -> bool:
        return not self.exhausted

    def __len__(self) -> int:
        return len(self.parent)

    def __contains__(self, w) -> bool:
        return canonical_cyclic(w) in self.parent

    def path_to(self, w: Word) -> AutWitness:
        """Moves taking the root to w along BFS tree edges."""
        v = canonical_cyclic(w)
        moves = []
        while self.parent[v] is not None:
            v, move = self.parent[v]
            moves.append(move)
        return AutWitness(reversed(moves))


def _level_bfs(root: CyclicWord, cap: int, work: Work, target: CyclicWord | None = None):
    """BFS over equal-length images; returns (parent map, exhausted, found)."""
    parent = {root: None}
    if root == target:
        return parent, True, True
    queue = deque([root])
    type_II = enumerate_type_II(root.rank)
    type_I = enumerate_type_I(root.rank)[1:]
    while queue:
        y = queue.popleft()
        work.vertices += 1
        prof = profiles(y)
        work.letters += y.rank * len(y)
        candidates = []
        for move in type_II:
            work.moves += 1
            if not move.is_inner() and length_delta(move, prof) == 0:
                candidates.append(move)
        candidates.extend(type_I)
        for move in candidates:
            z = apply_cyclic(move, y)
            work.letters += len(y)
            if z in parent:
                continue
            if len(parent) >= cap:
                return parent, False, False
            parent[z] = (y, move)
            if z == target:
                return parent, False, True
            queue.append(z)
    return parent, True, False


def level_graph(w: Word, cap: int | None = DEFAULT_CAP) -> OrbitLevelGraph:
    """Equal-length part of the orbit of a minimal cyclic word.

    Edges are type II moves that keep the cyclic length and all letter
    permutations.  If more than ``cap`` vertices would be needed the result
    is returned with ``exhausted=False``.
    """
    w = canonical_cyclic(w)
    if not is_minimal(w):
        raise WordError(f"{w} is not minimal in its orbit")
    parent, exhausted, _ = _level_bfs(w, cap or float("inf"), Work())
    return OrbitLevelGraph(w, parent, exhausted)


class Stage(enum.Enum):
    FAST_SM = "FastSM"
    LENGTH_MISMATCH = "LengthMismatch"
    LEVEL_SEARCH = "LevelSearch"


@dataclass
class EquivVerdict:
    """``equivalent`` is None when the level search hit its vertex cap."""

    equivalent: bool | None
    witness: AutWitness | None
    path: Stage
    stats: Work = field(default_factory=Work)

    @property
    def decided(self) -> bool:
        return self.equivalent is not None


def _same_length_sm(cu: CyclicWord, cv: CyclicWord, work: Work) -> AutWitness | None:
    # u strictly minimal: v is equivalent iff it is a rotation of some sigma(u)
    for sigma in enumerate_type_I(cu.rank):
        su = apply_cyclic(sigma, cu)
        work.moves += 1
        work.letters += 3 * len(cu)
        if cyclic_equal(su, cv):
            return AutWitness([sigma])
    return None


def same_orbit(u: Word, v: Word, cap: int | None = DEFAULT_CAP) -> EquivVerdict:
    """Decide whether an automorphism takes the class of u to that of v.

    Stages: strict-minimality fast path, greedy minimisation of both sides,
    then breadth-first search of the level graph of the minimum of u.  A
    positive verdict carries a witness mapping the cyclic word of u onto the
    cyclic word of v.
    """
    if u.rank != v.rank:
        raise WordError("words of different rank")
    work = Work()
    work.letters += len(u) + len(v)
    cu, cv = canonical_cyclic(u), canonical_cyclic(v)
    sm_u = is_strictly_minimal(cu, work)
    sm_v = is_strictly_minimal(cv, work)

    if sm_u and sm_v:
        if len(cu) != len(cv):
            return EquivVerdict(False, None, Stage.FAST_SM, work)
        wit = _same_length_sm(cu, cv, work)
        return EquivVerdict(wit is not None, wit, Stage.FAST_SM, work)
    if sm_u != sm_v:
        # a minimal non-SM word cannot share an orbit with an SM word
        other = cv if sm_u else cu
        if is_minimal(other, work):
            return EquivVerdict(False, None, Stage.FAST_SM, work)

    ru = greedy_minimize(cu)
    rv = greedy_minimize(cv)
    work += ru.work
    work += rv.work
    if len(ru.minimal) != len(rv.minimal):
        return EquivVerdict(False, None, Stage.LENGTH_MISMATCH, work)

    parent, exhausted, found = _level_bfs(ru.minimal, cap or float("inf"), work,
                                          target=rv.minimal)
    if found:
        graph = OrbitLevelGraph(ru.minimal, parent, exhausted)
        wit = ru.witness + graph.path_to(rv.minimal) + rv.witness.inverse()
        return EquivVerdict(True, wit, Stage.LEVEL_SEARCH, work)
    if exhausted:
        return EquivVerdict(False, None, Stage.LEVEL_SEARCH, work)
    return EquivVerdict(None, None, Stage.LEVEL_SEARCH, work)


@dataclass
class PrimitivityStats:
    trim_steps: int = 0
    filter_letters: int = 0
    filter_conclusive: bool = False
    minimization: Work = field(default_factory=Work)

    @property
    def total_work(self) -> int:
        return self.trim_steps + self.filter_letters + self.minimization.total


class PrimitivityResult(NamedTuple):
    primitive: bool
    stats: PrimitivityStats


def is_primitive(u: Word) -> PrimitivityResult:
    """Primitivity test: completeness filter first, Whitehead minimisation
    only if the filter is inconclusive.

    The filter reads the cyclically reduced word one letter at a time and
    stops as soon as the Whitehead graph of the prefix is complete, which
    rules out primitivity.
    """
    stats = PrimitivityStats()
    letters = u.letters
    lo, hi, steps = _trim_bounds(letters)
    stats.trim_steps = steps
    if hi == lo:
        return PrimitivityResult(False, stats)
    state = ScanState(u.rank)
    for i in range(lo, hi):
        state.push(letters[i])
        if state.missing_pairs == 0:
            stats.filter_letters = state.letters_read
            stats.filter_conclusive = True
            return PrimitivityResult(False, stats)
    stats.filter_letters = state.letters_read
    cw = CyclicWord._trusted(_canonical_letters(letters[lo:hi]), u.rank)
    res = greedy_minimize(cw)
    stats.minimization = res.work
    return PrimitivityResult(len(res.minimal) == 1, stats)


def _sort_key(w: Word):
    return (len(w), [letter_key(c) for c in w.letters])


def bounded_orbit_enumerate(u: Word, max_len: int, budget: int = DEFAULT_CAP) -> set[CyclicWord]:
    """All cyclic words of length <= max_len in the orbit of u.

    Closure of the minimum under E and letter permutations, restricted to
    length <= max_len; by peak reduction nothing in range is missed.
    """
    root = greedy_minimize(u).minimal
    if max_len < len(root):
        raise WordError(f"bound {max_len} is below the minimal orbit length {len(root)}")
    seen = {root}
    queue = deque([root])
    type_I = enumerate_type_I(u.rank)[1:]
    while queue:
        y = queue.popleft()
        prof = profiles(y)
        moves = [m for m in enumerate_type_II(u.rank)
                 if not m.is_inner() and len(y) + length_delta(m, prof) <= max_len]
        for move in moves + list(type_I):
            z = apply_cyclic(move, y)
            if z not in seen:
                if len(seen) >= budget:
                    raise BudgetExceeded(len(seen), budget)
                seen.add(z)
                queue.append(z)
    return seen


def orbit_sorted(words) -> list[CyclicWord]:
    return sorted(words, key=_sort_key)


@dataclass
class BlockingVerdict:
    """Either an orbit member containing the pattern, or blocked up to ``bound``."""

    bound: int
    found: Word | None = None
    orbit_class: CyclicWord | None = None

    @property
    def blocked(self) -> bool:
        return self.found is None

    def __str__(self) -> str:
        if self.blocked:
            return f"BlockedUpTo({self.bound})"
        return f"FoundAsSubword({self.found})"


def contains_cyclically(w: Word, pattern: Word) -> int:
    """Start offset of pattern inside some rotation of w, or -1."""
    m = len(pattern)
    if m > len(w):
        return -1
    if m == 0:
        return 0
    text = (w.letters + w.letters)[:len(w) + m - 1]
    return kmp_find(pattern.letters, text)


def blocking_check(u: Word, pattern: Word, max_len: int,
                   budget: int = DEFAULT_CAP) -> BlockingVerdict:
    """Search the orbit of u up to length max_len for a cyclic word
    containing pattern; shortest, then least, member wins."""
    if pattern.rank != u.rank:
        raise WordError("pattern and word have different rank")
    for w in orbit_sorted(bounded_orbit_enumerate(u, max_len, budget)):
        k = contains_cyclically(w, pattern)
        if k >= 0:
            rot = Word._trusted(w.letters[k:] + w.letters[:k], w.rank)
            return BlockingVerdict(max_len, rot, w)
    return BlockingVerdict(max_len)
