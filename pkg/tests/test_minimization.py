import numpy as np
import pytest

from oracles import all_cyclically_reduced, bounded_closure
from whitehead.automorphisms import (apply_cyclic, apply_witness, enumerate_type_I,
                                     enumerate_type_II)
from whitehead.minimization import (cyclic_length_delta, greedy_minimize, is_minimal,
                                    is_strictly_minimal, length_delta, permutation_closure,
                                    profiles)
from whitehead.orbits import level_graph
from whitehead.words import Word, canonical_cyclic, sample_cyclically_reduced, sample_freely_reduced


def C(s, r=2):
    return canonical_cyclic(Word.parse(s, r))


def cyclic_words(r, max_n):
    seen = set()
    for n in range(1, max_n + 1):
        for s in all_cyclically_reduced(r, n):
            seen.add(C(s, r))
    return sorted(seen, key=lambda w: (len(w), str(w)))


@pytest.mark.parametrize("r", [2, 3, 4])
def test_length_delta_matches_application(r):
    rng = np.random.default_rng(100 + r)
    moves = enumerate_type_II(r)
    for _ in range(150):
        w = canonical_cyclic(sample_freely_reduced(r, int(rng.integers(0, 25)), rng))
        prof = profiles(w)
        for m in moves:
            assert length_delta(m, prof) == len(apply_cyclic(m, w)) - len(w)


def test_length_delta_single_generator_words():
    w = C("aaa")
    for m in enumerate_type_II(2):
        assert cyclic_length_delta(m, w) == len(apply_cyclic(m, w)) - 3


def test_greedy_examples():
    res = greedy_minimize(C("a"))
    assert res.minimal == C("a") and len(res.witness) == 0 and res.rounds == 0
    res = greedy_minimize(C("ab"))
    assert len(res.minimal) == 1 and res.rounds == 1
    res = greedy_minimize(C("ABab"))
    assert res.minimal == C("ABab") and res.rounds == 0


def test_greedy_fixed_point_and_witness():
    rng = np.random.default_rng(4)
    for r in (2, 3):
        for _ in range(150):
            w = sample_cyclically_reduced(r, int(rng.integers(1, 30)), rng)
            res = greedy_minimize(w)
            assert is_minimal(res.minimal)
            assert apply_witness(res.witness, canonical_cyclic(w)) == res.minimal
            assert res.rounds <= len(w) and len(res.minimal) <= len(w)


def test_greedy_monotone_progress():
    rng = np.random.default_rng(6)
    for _ in range(100):
        w = canonical_cyclic(sample_freely_reduced(2, 15, rng))
        lengths = [len(w)]
        for m in greedy_minimize(w).witness:
            w = apply_cyclic(m, w)
            lengths.append(len(w))
        assert all(a > b for a, b in zip(lengths, lengths[1:]))


def test_minimum_is_orbit_invariant():
    moves = enumerate_type_II(2) + enumerate_type_I(2)
    for w in cyclic_words(2, 6):
        m = len(greedy_minimize(w).minimal)
        for phi in moves:
            assert len(greedy_minimize(apply_cyclic(phi, w)).minimal) == m


def test_minimum_matches_bounded_closure():
    for w in cyclic_words(2, 5):
        closure = bounded_closure(str(w), 2, len(w))
        assert len(greedy_minimize(w).minimal) == min(len(s) for s in closure)


def test_is_minimal_examples():
    assert is_minimal(C("a")) and is_minimal(C("B"))
    assert not is_minimal(C("ab"))
    assert is_minimal(C("aa"))
    assert is_minimal(Word([], 2))


def test_is_minimal_agrees_with_greedy():
    rng = np.random.default_rng(8)
    for _ in range(300):
        w = sample_cyclically_reduced(2, int(rng.integers(1, 12)), rng)
        assert is_minimal(w) == (greedy_minimize(w).rounds == 0)


def test_sm_examples():
    assert is_strictly_minimal(C("a"))
    assert not is_strictly_minimal(C("ab"))
    assert is_strictly_minimal(C("ABab"))
    assert is_strictly_minimal(Word([], 2))


def test_sm_single_letter_exhaustive_over_E():
    # every type II move fixes or lengthens a single letter
    for m in enumerate_type_II(2):
        assert len(apply_cyclic(m, C("a"))) >= 1


def test_sm_brute_force_level_sets():
    for w in cyclic_words(2, 6):
        if not is_minimal(w):
            assert not is_strictly_minimal(w)
            continue
        level = level_graph(w).vertices
        assert is_strictly_minimal(w) == (level == permutation_closure(w)), str(w)


def test_sm_invariant_under_letter_permutations():
    rng = np.random.default_rng(12)
    for _ in range(60):
        w = sample_cyclically_reduced(3, 12, rng)
        sm = is_strictly_minimal(w)
        for p in enumerate_type_I(3)[:12]:
            assert is_strictly_minimal(apply_cyclic(p, w)) == sm


def test_sm_fraction_grows_with_length():
    def fraction(n, samples=300):
        rng = np.random.default_rng(n)
        return np.mean([is_strictly_minimal(sample_cyclically_reduced(2, n, rng))
                        for _ in range(samples)])

    short, long = fraction(20), fraction(200)
    assert long > short
