import pytest

from nonbond.words import (
    StateSpace,
    compatible,
    enumerate_states,
    expected_state_count,
    is_valid_word,
    is_valid_word_geometric,
    pack_word,
    successors,
    unpack_word,
    word_dominoes,
    word_weight,
)


def test_valid_words_width_2():
    assert sorted(enumerate_states(2).words) == \
        ["00", "0d", "0u", "d0", "hh", "u0"]


def test_invalid_words():
    # adjacent domino squares that are not one h-pair, or unpaired h
    for bad in ["uu", "ud", "du", "uh", "hu", "h", "uu0u", "ud0"]:
        assert not is_valid_word(bad)
    assert is_valid_word("u0d")


def test_alphabet_enforced():
    with pytest.raises(ValueError):
        is_valid_word("0x")


def test_horizontal_needs_exactly_two_cells():
    assert is_valid_word("hh")
    assert not is_valid_word("h0")
    assert not is_valid_word("0h")
    assert is_valid_word("hh0hh")
    assert not is_valid_word("hhh")
    assert not is_valid_word("hhhh")  # two adjacent h-pairs bond


def test_state_counts_match_closed_form():
    for c in range(1, 9):
        assert len(enumerate_states(c)) == expected_state_count(c)


def test_word_weight_counts_started_dominoes():
    assert word_weight("00") == 0
    assert word_weight("u0u") == 2
    assert word_weight("hh0u0") == 2
    assert word_weight("0d0") == 0  # continuation, not a start


def test_successors_are_valid_states():
    space = enumerate_states(4)
    for w in space.words:
        for nxt in successors(w):
            assert nxt in space.index
            assert compatible(w, nxt)


def test_successors_complete():
    # successors() constructs exactly the compatible valid words
    space = enumerate_states(3)
    for w in space.words:
        direct = {v for v in space.words if compatible(w, v)}
        assert set(successors(w)) == direct


def test_compatible_semantics():
    assert compatible("u0", "d0")
    assert not compatible("u0", "0d")  # u must continue straight down
    assert not compatible("u0", "00")
    assert compatible("00", "u0")
    assert compatible("hh", "00")
    assert not compatible("hh", "u0")  # square below an h stays empty
    assert compatible("d0", "0u")


def test_compatible_rejects_width_mismatch():
    with pytest.raises(ValueError):
        compatible("00", "000")


def test_pack_unpack_roundtrip():
    for c in range(1, 7):
        for w in enumerate_states(c).words:
            assert unpack_word(pack_word(w), c) == w


def test_geometric_validation_agrees():
    from itertools import product
    for c in range(1, 7):
        for letters in product("0hud", repeat=c):
            w = "".join(letters)
            assert is_valid_word(w) == is_valid_word_geometric(w)


def test_state_space_interface():
    space = enumerate_states(3)
    assert isinstance(space, StateSpace)
    assert len(space) == 13
    assert space.all_zero() == "000"
    assert list(space) == list(space.words)
    assert space.index[space.words[0]] == 0


def test_word_dominoes_positions():
    assert word_dominoes("hh0u0") == [((0, 0), (0, 1)), ((0, 3), (1, 3))]
    assert word_dominoes("d") == [((-1, 0), (0, 0))]
    assert word_dominoes("000") == []


def test_rejects_out_of_range_width():
    with pytest.raises(ValueError):
        enumerate_states(0)
    with pytest.raises(ValueError):
        enumerate_states(17)
