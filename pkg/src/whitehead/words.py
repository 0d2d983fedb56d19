"""Letters, words and cyclic words of a free group F_r.

A letter is a nonzero integer code: ``i`` stands for the generator x_i and
``-i`` for its inverse.  Text form uses ``a`` for x_1, ``b`` for x_2, ...
and uppercase for inverses; the empty word prints as ``1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MIN_RANK = 2
MAX_RANK = 26


class WordError(ValueError):
    """Malformed input: bad letter, bad rank or an unreduced word."""


def check_rank(rank: int) -> int:
    if not isinstance(rank, (int, np.integer)) or not MIN_RANK <= rank <= MAX_RANK:
        raise WordError(f"rank must be an integer in [{MIN_RANK}, {MAX_RANK}], got {rank!r}")
    return int(rank)


def letters_of(rank: int) -> tuple[int, ...]:
    """All 2r letters in canonical order 1, -1, 2, -2, ..."""
    return tuple(c for i in range(1, rank + 1) for c in (i, -i))


def letter_key(c: int) -> int:
    # total order 1 < -1 < 2 < -2 < ...
    return 2 * abs(c) - (c > 0)


def letter_char(c: int) -> str:
    ch = chr(ord("a") + abs(c) - 1)
    return ch if c > 0 else ch.upper()


def format_letters(letters: Iterable[int]) -> str:
    s = "".join(letter_char(c) for c in letters)
    return s or "1"


def parse_letters(text: str, rank: int) -> list[int]:
    """Parse the text form into raw letter codes (no reduction)."""
    rank = check_rank(rank)
    text = text.strip()
    if text == "1":
        return []
    out = []
    for ch in text:
        if not ("a" <= ch.lower() <= "z") or not ch.isascii():
            raise WordError(f"invalid character {ch!r} in word {text!r}")
        i = ord(ch.lower()) - ord("a") + 1
        if i > rank:
            raise WordError(f"letter {ch!r} is beyond rank {rank}")
        out.append(i if ch.islower() else -i)
    return out


def _reduce(raw: Iterable[int]) -> list[int]:
    stack: list[int] = []
    for c in raw:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return stack


def _check_letters(raw: Sequence[int], rank: int) -> None:
    for c in raw:
        if c == 0 or abs(c) > rank:
            raise WordError(f"letter code {c} out of range for rank {rank}")


class Word:
    """Freely reduced word; immutable and hashable."""

    __slots__ = ("letters", "rank")

    def __init__(self, letters: Iterable[int], rank: int):
        rank = check_rank(rank)
        letters = tuple(int(c) for c in letters)
        _check_letters(letters, rank)
        for p, q in zip(letters, letters[1:]):
            if p == -q:
                raise WordError(f"word {format_letters(letters)} is not freely reduced")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "rank", rank)

    @classmethod
    def _trusted(cls, letters: tuple[int, ...], rank: int):
        # caller guarantees the class invariants
        obj = object.__new__(cls)
        object.__setattr__(obj, "letters", letters)
        object.__setattr__(obj, "rank", rank)
        return obj

    @classmethod
    def parse(cls, text: str, rank: int) -> Word:
        return free_reduce(parse_letters(text, rank), rank)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.rank, self.letters))

    def __mul__(self, other: Word) -> Word:
        if not isinstance(other, Word):
            return NotImplemented
        if other.rank != self.rank:
            raise WordError("cannot multiply words of different rank")
        return Word._trusted(tuple(_reduce(self.letters + other.letters)), self.rank)

    def inverse(self) -> Word:
        return Word._trusted(tuple(-c for c in reversed(self.letters)), self.rank)

    def is_cyclically_reduced(self) -> bool:
        return len(self.letters) <= 1 or self.letters[0] != -self.letters[-1]

    def __str__(self) -> str:
        return format_letters(self.letters)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r}, rank={self.rank})"


def least_rotation(keys: Sequence[int]) -> int:
    """Offset of the lexicographically least rotation (two-pointer, linear)."""
    n = len(keys)
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a = keys[(i + k) % n]
        b = keys[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j) if n else 0


def _canonical_letters(letters: tuple[int, ...]) -> tuple[int, ...]:
    # letters must already be cyclically reduced
    if len(letters) <= 1:
        return letters
    s = least_rotation([letter_key(c) for c in letters])
    return letters[s:] + letters[:s]


class CyclicWord(Word):
    """Conjugacy class of a word, stored as the least rotation of its
    cyclically reduced form.

    The constructor accepts any freely reduced letter sequence and
    normalises it, so conjugate inputs give equal objects.
    """

    __slots__ = ()

    def __init__(self, letters: Iterable[int], rank: int):
        w = Word(letters, rank)
        lo, hi, _ = _trim_bounds(w.letters)
        object.__setattr__(self, "letters", _canonical_letters(w.letters[lo:hi]))
        object.__setattr__(self, "rank", w.rank)

    @classmethod
    def _from_reduced(cls, letters: tuple[int, ...], rank: int) -> CyclicWord:
        # letters freely reduced; trims and canonicalises without validation
        lo, hi, _ = _trim_bounds(letters)
        return cls._trusted(_canonical_letters(letters[lo:hi]), rank)

    def as_word(self) -> Word:
        return Word._trusted(self.letters, self.rank)


def free_reduce(raw: Iterable[int], rank: int) -> Word:
    """Freely reduce a raw letter sequence."""
    rank = check_rank(rank)
    raw = [int(c) for c in raw]
    _check_letters(raw, rank)
    return Word._trusted(tuple(_reduce(raw)), rank)


@dataclass(frozen=True)
class TrimReport:
    """``input == conjugator * result * conjugator.inverse()``"""

    result: Word
    conjugator: Word
    steps: int


def _trim_bounds(letters: Sequence[int]) -> tuple[int, int, int]:
    # Only the two ends are ever inspected: indices into an immutable
    # sequence give constant-time access at both ends.
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
        lo += 1
        hi -= 1
    return lo, hi, lo


def cyclic_trim(w: Word) -> TrimReport:
    lo, hi, steps = _trim_bounds(w.letters)
    return TrimReport(
        result=Word._trusted(w.letters[lo:hi], w.rank),
        conjugator=Word._trusted(w.letters[:lo], w.rank),
        steps=steps,
    )


def canonical_cyclic(w: Word) -> CyclicWord:
    if isinstance(w, CyclicWord):
        return w
    return CyclicWord._from_reduced(w.letters, w.rank)


def rotate(w: Word, k: int) -> Word:
    """Rotation of a cyclically reduced word by k positions to the left."""
    if not w.letters:
        return w
    k %= len(w.letters)
    return Word._trusted(w.letters[k:] + w.letters[:k], w.rank)


def prefix_function(pattern: Sequence) -> list[int]:
    fail = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = fail[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        fail[i] = k
    return fail


def kmp_find(pattern: Sequence, text: Sequence) -> int:
    """Index of the first occurrence of pattern in text, or -1."""
    m = len(pattern)
    if m == 0:
        return 0
    fail = prefix_function(pattern)
    k = 0
    for i, c in enumerate(text):
        while k and c != pattern[k]:
            k = fail[k - 1]
        if c == pattern[k]:
            k += 1
            if k == m:
                return i - m + 1
    return -1


def cyclic_equal(u: Word, v: Word) -> bool:
    """True iff v is a rotation of u (both cyclically reduced)."""
    if len(u) != len(v):
        return False
    if not u.letters:
        return True
    return kmp_find(v.letters, u.letters + u.letters) >= 0


def count_freely_reduced(rank: int, n: int) -> int:
    """Number of freely reduced words of length n: 2r(2r-1)^(n-1), and 1 for n = 0."""
    rank = check_rank(rank)
    if n < 0:
        raise WordError("length must be nonnegative")
    if n == 0:
        return 1
    return 2 * rank * (2 * rank - 1) ** (n - 1)


def stream(seed: int, *counters: int) -> np.random.Generator:
    """Independent generator for one sample, keyed by (seed, counters...)."""
    return np.random.default_rng(np.random.SeedSequence([int(seed), *map(int, counters)]))


def _codes_from_indices(idx: np.ndarray, rank: int) -> tuple[int, ...]:
    # index i < r is x_{i+1}; index i >= r is its inverse, so inverse(i) = i + r mod 2r
    codes = np.where(idx < rank, idx + 1, rank - 1 - idx)
    return tuple(codes.tolist())


def sample_freely_reduced(rank: int, n: int, rng: np.random.Generator) -> Word:
    """Uniform freely reduced word of length n."""
    rank = check_rank(rank)
    if n < 0:
        raise WordError("length must be nonnegative")
    if n == 0:
        return Word._trusted((), rank)
    m = 2 * rank
    first = rng.integers(m)
    # next = inverse(prev) + 1 + k (mod 2r), k uniform on the 2r-1 allowed offsets
    steps = rng.integers(0, m - 1, size=n - 1) + (rank + 1)
    idx = np.empty(n, dtype=np.int64)
    idx[0] = first
    np.cumsum(steps, out=idx[1:])
    idx[1:] += first
    idx %= m
    return Word._trusted(_codes_from_indices(idx, rank), rank)


def sample_cyclically_reduced(rank: int, n: int, rng: np.random.Generator,
                              return_attempts: bool = False):
    """Uniform cyclically reduced word of length n, by rejection.

    The word itself is returned, not its canonical rotation.  With
    ``return_attempts`` the number of draws used is returned as well.
    """
    if n < 1:
        raise WordError("cyclically reduced samples need n >= 1")
    attempts = 0
    while True:
        attempts += 1
        w = sample_freely_reduced(rank, n, rng)
        if w.is_cyclically_reduced():
            return (w, attempts) if return_attempts else w


def _randbelow(rng: np.random.Generator, bound: int) -> int:
    nbits = bound.bit_length()
    nbytes = (nbits + 7) // 8
    while True:
        x = int.from_bytes(rng.bytes(nbytes), "little") >> (8 * nbytes - nbits)
        if x < bound:
            return x


def sample_ball(rank: int, n: int, rng: np.random.Generator) -> Word:
    """Uniform element of the ball of radius n (length <= n).

    The length m is drawn with exact integer weights count_freely_reduced(r, m).
    """
    counts = [count_freely_reduced(rank, m) for m in range(n + 1)]
    x = _randbelow(rng, sum(counts))
    for m, c in enumerate(counts):
        if x < c:
            return sample_freely_reduced(rank, m, rng)
        x -= c
    raise AssertionError("unreachable")
