"""Elementary Whitehead automorphisms.

Type I moves are signed permutations of the generators.  A type II move
is given by a multiplier letter ``a`` and a set ``A`` of letters with
``a in A`` and ``a^-1 not in A``; it fixes a and sends every other
generator-letter x to::

    x  -> x a        if x in A, x^-1 not in A
    x  -> a^-1 x     if x^-1 in A, x not in A
    x  -> a^-1 x a   if both are in A
    x  -> x          otherwise

Text forms: ``perm:bA`` lists the images of x_1..x_r, and
``mul:a;set:abB`` gives the multiplier and the set in letter order.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence, Union

from .words import (CyclicWord, Word, WordError, _reduce, check_rank, format_letters,
                    letter_key, letters_of, parse_letters)


class LetterPermutation:
    """Type I move, stored as the images of x_1, ..., x_r."""

    __slots__ = ("images", "rank")

    def __init__(self, images: Sequence[int], rank: int | None = None):
        images = tuple(int(c) for c in images)
        rank = check_rank(len(images) if rank is None else rank)
        if len(images) != rank or sorted(abs(c) for c in images) != list(range(1, rank + 1)):
            raise WordError(f"not a signed permutation of rank {rank}: {images}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, name, value):
        raise AttributeError("LetterPermutation is immutable")

    def image(self, c: int) -> int:
        x = self.images[abs(c) - 1]
        return x if c > 0 else -x

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.rank + 1))

    def __eq__(self, other):
        if not isinstance(other, LetterPermutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(("perm", self.images))

    def __str__(self) -> str:
        return "perm:" + format_letters(self.images)

    def __repr__(self) -> str:
        return f"LetterPermutation({str(self)!r})"


class WhiteheadAut:
    """Type II move (multiplier, set)."""

    __slots__ = ("multiplier", "subset", "rank")

    def __init__(self, multiplier: int, subset: Iterable[int], rank: int):
        rank = check_rank(rank)
        subset = frozenset(int(c) for c in subset)
        a = int(multiplier)
        if any(c == 0 or abs(c) > rank for c in subset | {a}):
            raise WordError("letter out of range for rank")
        if a not in subset or -a in subset:
            raise WordError("the set must contain the multiplier and not its inverse")
        object.__setattr__(self, "multiplier", a)
        object.__setattr__(self, "subset", subset)
        object.__setattr__(self, "rank", rank)

    def __setattr__(self, name, value):
        raise AttributeError("WhiteheadAut is immutable")

    def image(self, c: int) -> tuple[int, ...]:
        a = self.multiplier
        if c == a or c == -a:
            return (c,)
        pre = (-a,) if -c in self.subset else ()
        post = (a,) if c in self.subset else ()
        return pre + (c,) + post

    def is_identity(self) -> bool:
        return self.subset == {self.multiplier}

    def is_inner(self) -> bool:
        """Conjugation by the multiplier: the set is everything but a^-1."""
        return len(self.subset) == 2 * self.rank - 1

    def __eq__(self, other):
        if not isinstance(other, WhiteheadAut):
            return NotImplemented
        return (self.multiplier, self.subset, self.rank) == (other.multiplier, other.subset,
                                                            other.rank)

    def __hash__(self):
        return hash(("mul", self.multiplier, self.subset))

    def __str__(self) -> str:
        return (f"mul:{format_letters([self.multiplier])};"
                f"set:{format_letters(sorted(self.subset, key=letter_key))}")

    def __repr__(self) -> str:
        return f"WhiteheadAut({str(self)!r})"


ElementaryAut = Union[LetterPermutation, WhiteheadAut]


class AutWitness:
    """Sequence of elementary moves, applied left to right."""

    __slots__ = ("moves",)

    def __init__(self, moves: Iterable[ElementaryAut] = ()):
        object.__setattr__(self, "moves", tuple(moves))

    def __setattr__(self, name, value):
        raise AttributeError("AutWitness is immutable")

    def __add__(self, other: AutWitness) -> AutWitness:
        return AutWitness(self.moves + other.moves)

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def __eq__(self, other):
        if not isinstance(other, AutWitness):
            return NotImplemented
        return self.moves == other.moves

    def __hash__(self):
        return hash(self.moves)

    def inverse(self) -> AutWitness:
        return AutWitness(invert(m) for m in reversed(self.moves))

    def __str__(self) -> str:
        return " ".join(map(str, self.moves)) if self.moves else "id"

    def __repr__(self) -> str:
        return f"AutWitness({str(self)!r})"


@lru_cache(maxsize=None)
def enumerate_type_II(rank: int) -> tuple[WhiteheadAut, ...]:
    """All non-identity type II moves, 2r(2^(2r-2) - 1) of them.

    Order: multiplier in letter order, then the extra letters of the set by
    increasing bitmask over the remaining letters in letter order.
    """
    rank = check_rank(rank)
    out = []
    for a in letters_of(rank):
        others = [c for c in letters_of(rank) if c not in (a, -a)]
        for mask in range(1, 1 << len(others)):
            extra = [c for i, c in enumerate(others) if mask >> i & 1]
            out.append(WhiteheadAut(a, [a, *extra], rank))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_type_I(rank: int) -> tuple[LetterPermutation, ...]:
    """All 2^r r! signed permutations, identity first."""
    rank = check_rank(rank)
    out = []
    for perm in permutations(range(1, rank + 1)):
        for signs in product((1, -1), repeat=rank):
            out.append(LetterPermutation([s * p for s, p in zip(signs, perm)], rank))
    return tuple(out)


def _images(aut: ElementaryAut) -> dict[int, tuple[int, ...]]:
    if isinstance(aut, LetterPermutation):
        return {c: (aut.image(c),) for c in letters_of(aut.rank)}
    return {c: aut.image(c) for c in letters_of(aut.rank)}


def _check_rank_match(aut: ElementaryAut, w: Word) -> None:
    if aut.rank != w.rank:
        raise WordError(f"move of rank {aut.rank} applied to word of rank {w.rank}")


def apply(aut: ElementaryAut, w: Word) -> Word:
    """Image of a word, freely reduced."""
    _check_rank_match(aut, w)
    if isinstance(aut, LetterPermutation):
        img = aut.images
        return Word._trusted(tuple(img[c - 1] if c > 0 else -img[-c - 1] for c in w.letters),
                             w.rank)
    images = _images(aut)
    raw = []
    for c in w.letters:
        raw.extend(images[c])
    return Word._trusted(tuple(_reduce(raw)), w.rank)


def apply_cyclic(aut: ElementaryAut, w: Word) -> CyclicWord:
    """Image of a conjugacy class, as a canonical cyclic word."""
    return CyclicWord._from_reduced(apply(aut, w).letters, w.rank)


def invert(aut: ElementaryAut) -> ElementaryAut:
    if isinstance(aut, LetterPermutation):
        inv = [0] * aut.rank
        for i, c in enumerate(aut.images, start=1):
            inv[abs(c) - 1] = i if c > 0 else -i
        return LetterPermutation(inv, aut.rank)
    a = aut.multiplier
    return WhiteheadAut(-a, (aut.subset - {a}) | {-a}, aut.rank)


def apply_witness(wit: AutWitness | Iterable[ElementaryAut], w: Word) -> Word:
    """Apply the moves left to right; cyclic words stay cyclic."""
    cyclic = isinstance(w, CyclicWord)
    for m in wit:
        w = apply_cyclic(m, w) if cyclic else apply(m, w)
    return w


def parse_move(text: str, rank: int) -> ElementaryAut:
    text = text.strip()
    if text.startswith("perm:"):
        return LetterPermutation(parse_letters(text[5:], rank), rank)
    if text.startswith("mul:") and ";set:" in text:
        mul, subset = text[4:].split(";set:", 1)
        a = parse_letters(mul, rank)
        if len(a) != 1:
            raise WordError(f"multiplier must be a single letter: {mul!r}")
        return WhiteheadAut(a[0], parse_letters(subset, rank), rank)
    raise WordError(f"cannot parse move {text!r}")


def parse_witness(text: str, rank: int) -> AutWitness:
    text = text.strip()
    if text in ("", "id"):
        return AutWitness()
    return AutWitness(parse_move(t, rank) for t in text.split())
