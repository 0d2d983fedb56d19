import numpy as np
import pytest

from oracles import all_freely_reduced, apply_type_I, apply_type_II, canon, type_I_moves, type_II_moves
from whitehead.automorphisms import (AutWitness, LetterPermutation, WhiteheadAut, apply, apply_cyclic,
                                     apply_witness, enumerate_type_I, enumerate_type_II, invert,
                                     parse_move, parse_witness)
from whitehead.words import (CyclicWord, Word, WordError, canonical_cyclic, format_letters, rotate,
                             sample_cyclically_reduced, sample_freely_reduced)


def W(s, r=2):
    return Word.parse(s, r)


def C(s, r=2):
    return canonical_cyclic(W(s, r))


def short_words(r=2, n=4):
    return [W(s, r) for k in range(n + 1) for s in all_freely_reduced(r, k)]


@pytest.mark.parametrize("r,count", [(2, 12), (3, 90), (4, 504)])
def test_type_II_count(r, count):
    moves = enumerate_type_II(r)
    assert len(moves) == count == 2 * r * (2 ** (2 * r - 2) - 1)
    assert len(set(moves)) == count
    for m in moves:
        assert m.multiplier in m.subset and -m.multiplier not in m.subset
        assert m.subset != {m.multiplier}


@pytest.mark.parametrize("r,count", [(2, 8), (3, 48)])
def test_type_I_count(r, count):
    perms = enumerate_type_I(r)
    assert len(perms) == len(set(perms)) == count
    assert perms[0].is_identity()


def test_invalid_moves_rejected():
    with pytest.raises(WordError):
        WhiteheadAut(1, {2}, 2)
    with pytest.raises(WordError):
        WhiteheadAut(1, {1, -1}, 2)
    with pytest.raises(WordError):
        LetterPermutation([1, 1])


def test_apply_examples():
    swap = LetterPermutation([2, 1])
    assert str(apply(swap, W("aB"))) == "bA"
    assert str(apply(WhiteheadAut(1, {1, 2}, 2), W("b"))) == "ba"
    assert str(apply(WhiteheadAut(1, {1, 2, -2}, 2), W("b"))) == "Aba"


def s_(w):
    return "".join(format_letters([c]) for c in w)


def test_apply_matches_string_oracle():
    words = short_words(2, 5)
    ours = enumerate_type_II(2)
    as_strings = [(s_([m.multiplier]), frozenset(s_([c]) for c in m.subset)) for m in ours]
    assert set(as_strings) == set(type_II_moves(2))
    for m, sm in zip(ours, as_strings):
        for w in words:
            assert s_(apply(m, w)) == apply_type_II(sm, s_(w))
    for p in enumerate_type_I(2):
        perm = {"a": s_([p.images[0]]), "b": s_([p.images[1]])}
        for w in words:
            assert s_(apply(p, w)) == apply_type_I(perm, s_(w))


def test_automorphism_property():
    rng = np.random.default_rng(5)
    for r in (2, 3):
        moves = enumerate_type_II(r) + enumerate_type_I(r)
        for _ in range(200):
            m = moves[int(rng.integers(len(moves)))]
            u = sample_freely_reduced(r, int(rng.integers(0, 10)), rng)
            v = sample_freely_reduced(r, int(rng.integers(0, 10)), rng)
            assert apply(m, u * v) == apply(m, u) * apply(m, v)
            assert apply(m, u.inverse()) == apply(m, u).inverse()
            assert len(apply(m, u)) <= 2 * len(u) + 1


def test_multiplier_fixed_and_type_I_preserves_length():
    for m in enumerate_type_II(3):
        assert apply(m, Word([m.multiplier], 3)).letters == (m.multiplier,)
    rng = np.random.default_rng(1)
    for p in enumerate_type_I(3):
        w = sample_cyclically_reduced(3, 9, rng)
        assert len(apply(p, w)) == 9
        assert len(apply_cyclic(p, w)) == 9


def test_apply_cyclic_examples():
    ident = enumerate_type_I(2)[0]
    assert apply_cyclic(ident, C("abAB")) == C("abAB")
    img = apply_cyclic(WhiteheadAut(-1, {-1, 2}, 2), C("ab"))
    assert len(img) == 1 and img == C("b")


def test_apply_cyclic_representative_independent():
    rng = np.random.default_rng(9)
    moves = enumerate_type_II(2) + enumerate_type_I(2)
    for _ in range(100):
        w = sample_cyclically_reduced(2, int(rng.integers(1, 10)), rng)
        for m in moves:
            imgs = {apply_cyclic(m, rotate(w, k)) for k in range(len(w))}
            assert len(imgs) == 1
            assert s_(imgs.pop()) == canon(s_(apply(m, w)), 2)


def test_invert_round_trip_exhaustive():
    words = short_words(2, 4)
    for m in enumerate_type_II(2) + enumerate_type_I(2):
        mi = invert(m)
        assert type(mi) is type(m)
        for w in words:
            assert apply(mi, apply(m, w)) == w
            assert apply(m, apply(mi, w)) == w
    m = WhiteheadAut(1, {1, 2}, 2)
    assert invert(m) == WhiteheadAut(-1, {-1, 2}, 2)


def test_invert_involution_on_action():
    words = short_words(3, 3)
    for m in enumerate_type_II(3)[:40] + enumerate_type_I(3)[:10]:
        mm = invert(invert(m))
        assert all(apply(mm, w) == apply(m, w) for w in words)


def test_type_I_invert_random():
    rng = np.random.default_rng(2)
    for p in enumerate_type_I(3):
        for _ in range(10):
            w = sample_freely_reduced(3, 12, rng)
            assert apply(invert(p), apply(p, w)) == w


def test_apply_witness():
    w = W("abAAb")
    assert apply_witness(AutWitness(), w) == w
    m = enumerate_type_II(2)[5]
    assert apply_witness(AutWitness([m, invert(m)]), w) == w
    c = canonical_cyclic(w)
    out = apply_witness([m, LetterPermutation([2, -1])], c)
    assert isinstance(out, CyclicWord)
    assert out == apply_cyclic(LetterPermutation([2, -1]), apply_cyclic(m, c))


def test_text_round_trip():
    assert str(LetterPermutation([2, -1])) == "perm:bA"
    assert str(WhiteheadAut(1, {1, 2, -2}, 2)) == "mul:a;set:abB"
    for r in (2, 3):
        for m in enumerate_type_II(r) + enumerate_type_I(r):
            assert parse_move(str(m), r) == m
    wit = AutWitness(enumerate_type_II(2)[:3] + enumerate_type_I(2)[2:4])
    assert parse_witness(str(wit), 2) == wit
    assert str(AutWitness()) == "id" and parse_witness("id", 2) == AutWitness()
    with pytest.raises(WordError):
        parse_move("mul:ab;set:a", 2)
    with pytest.raises(WordError):
        parse_move("swap:ab", 2)


def test_type_I_oracle_count():
    assert len(type_I_moves(2)) == 8 and len(type_II_moves(2)) == 12
