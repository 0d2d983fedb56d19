"""Length minimisation over an automorphic orbit.

Cyclic length change of a type II move
--------------------------------------
Write a cyclic word as non-multiplier letters separated by (possibly empty)
runs ``a^k`` of the multiplier.  The move turns a gap ``p a^k q`` into
``p a^(k + [p in A] - [q^-1 in A]) q`` and never makes two non-multiplier
letters cancel, so the new cyclic length is a sum over gaps.  Grouping gaps
by (p, sign k, q) gives a profile with O(r^2) entries; every move in E is
then scored from the profile without being applied.

Strict minimality
-----------------
A minimal cyclic word w is strictly minimal when the only equal-length
images of w under single elementary moves are its images under letter
permutations.  Equal-length orbit members of a minimal word are connected
to it by single moves through equal-length words (Whitehead), and a
letter permutation conjugates E onto itself, so this single-step test is
equivalent to asking that the whole equal-length level set be the letter
permutation closure of w.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .automorphisms import (AutWitness, WhiteheadAut, apply_cyclic, enumerate_type_I,
                            enumerate_type_II)
from .words import CyclicWord, Word, canonical_cyclic


@dataclass
class Work:
    """Abstract work counters: letters read, moves scored, vertices visited."""

    letters: int = 0
    moves: int = 0
    vertices: int = 0

    @property
    def total(self) -> int:
        return self.letters + self.moves + self.vertices

    def __iadd__(self, other: Work) -> Work:
        self.letters += other.letters
        self.moves += other.moves
        self.vertices += other.vertices
        return self


def gap_profile(letters: tuple[int, ...], g: int) -> Counter | None:
    """Counts of gaps (p, s, q) between consecutive letters p, q not in {x_g, x_g^-1}.

    ``s`` is the sign of the exponent of x_g strictly between them (read
    cyclically).  Returns None when every letter is x_g^{+-1}.
    """
    n = len(letters)
    start = next((i for i, c in enumerate(letters) if c != g and c != -g), None)
    if start is None:
        return None
    prof: Counter = Counter()
    p = letters[start]
    k = 0
    for j in range(start + 1, start + n + 1):
        c = letters[j % n]
        if c == g:
            k += 1
        elif c == -g:
            k -= 1
        else:
            prof[(p, (k > 0) - (k < 0), c)] += 1
            p = c
            k = 0
    return prof


def profiles(w: Word) -> dict[int, Counter | None]:
    return {g: gap_profile(w.letters, g) for g in range(1, w.rank + 1)}


def length_delta(move: WhiteheadAut, prof: dict[int, Counter | None]) -> int:
    """Change of cyclic length under a type II move, from the gap profiles."""
    a = move.multiplier
    gp = prof[abs(a)]
    if gp is None:
        return 0
    sa = 1 if a > 0 else -1
    A = move.subset
    d = 0
    for (p, s, q), cnt in gp.items():
        e = (p in A) - (-q in A)
        if e:
            d += cnt * (e * s * sa if s else 1)
    return d


def cyclic_length_delta(move: WhiteheadAut, w: Word) -> int:
    return length_delta(move, profiles(canonical_cyclic(w)))


@dataclass
class MinimizationResult:
    minimal: CyclicWord
    witness: AutWitness
    rounds: int
    work: Work = field(default_factory=Work)


def _first_reducer(w: CyclicWord, work: Work):
    prof = profiles(w)
    work.letters += w.rank * len(w)
    for move in enumerate_type_II(w.rank):
        work.moves += 1
        if length_delta(move, prof) < 0:
            return move
    return None


def greedy_minimize(w: Word) -> MinimizationResult:
    """Apply the first strictly reducing move of E until none is left.

    By peak reduction the result has the minimum cyclic length in the orbit.
    """
    w = canonical_cyclic(w)
    work = Work()
    moves = []
    while True:
        move = _first_reducer(w, work)
        if move is None:
            break
        w = apply_cyclic(move, w)
        work.letters += len(w)
        moves.append(move)
    return MinimizationResult(w, AutWitness(moves), len(moves), work)


def is_minimal(w: Word, work: Work | None = None) -> bool:
    w = canonical_cyclic(w)
    return _first_reducer(w, work if work is not None else Work()) is None


def is_strictly_minimal(w: Word, work: Work | None = None) -> bool:
    """Minimal, and every type II move lengthens w or maps it into the
    letter-permutation closure of w."""
    work = work if work is not None else Work()
    w = canonical_cyclic(w)
    prof = profiles(w)
    work.letters += w.rank * len(w)
    closure = None
    for move in enumerate_type_II(w.rank):
        work.moves += 1
        if move.is_inner():
            continue
        d = length_delta(move, prof)
        if d < 0:
            return False
        if d == 0:
            img = apply_cyclic(move, w)
            work.letters += len(w)
            if img == w:
                continue
            if closure is None:
                closure = permutation_closure(w)
                work.letters += len(closure) * len(w)
            if img not in closure:
                return False
    return True


def permutation_closure(w: CyclicWord) -> set[CyclicWord]:
    return {apply_cyclic(s, w) for s in enumerate_type_I(w.rank)}
