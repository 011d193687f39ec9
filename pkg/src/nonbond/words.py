"""Row states for boards of non-bonding dominoes.

A row of a width-c board is a word of c letters over {0, h, u, d}:

    0   empty square
    h   half of a horizontal domino lying in this row
    u   upper square of a vertical domino protruding into the row below
    d   lower square of a vertical domino shared with the row above

A word is valid when every maximal run of h has length exactly two (one
horizontal domino) and no two squares of distinct dominoes touch edge to
edge, i.e. any two of {h-pair, u, d} are separated by at least one 0.

>>> is_valid_word("u0d")
True
>>> is_valid_word("ud0")
False
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

ALPHABET = "0hud"

# Letter order used for the deterministic state ordering: 0 < h < u < d.
_RANK = {"0": 0, "h": 1, "u": 2, "d": 3}

# enumerate_states accepts widths up to this; packing uses 2 bits per letter.
STATE_COLS_LIMIT = 16
PACK_COLS_LIMIT = 31


def _check_letters(word):
    for ch in word:
        if ch not in _RANK:
            raise ValueError("letter %r not in alphabet %r" % (ch, ALPHABET))


def is_valid_word(word):
    """True iff `word` is a valid row state.

    Scans left to right: h must pair with the next letter, and any two
    domino letters that are not one h-pair need a 0 between them.
    """
    _check_letters(word)
    c = len(word)
    i = 0
    prev_occupied = False
    while i < c:
        ch = word[i]
        if ch == "0":
            prev_occupied = False
            i += 1
            continue
        if prev_occupied:
            return False
        if ch == "h":
            if i + 1 >= c or word[i + 1] != "h":
                return False
            i += 2
        else:
            i += 1
        prev_occupied = True
    return True


def word_weight(word):
    """Number of dominoes the row starts: one per h-pair, one per u."""
    return word.count("h") // 2 + word.count("u")


def compatible(src, dst):
    """True iff row state `dst` may directly follow row state `src`.

    A u in src forces a d in dst at the same position and is the only way
    a d can appear; squares of src's h-pairs and d's leave the square
    below empty.  Both words are assumed valid.
    """
    if len(src) != len(dst):
        raise ValueError("row widths differ: %d vs %d" % (len(src), len(dst)))
    for a, b in zip(src, dst):
        if (a == "u") != (b == "d"):
            return False
        if a in "hd" and b != "0":
            return False
    return True


def successors(word):
    """All valid row states compatible with `word`, in letter order.

    Constructive: forced letters (d below u, 0 below h/d) are fixed and
    the free squares are filled with every valid arrangement of 0, u and
    h-pairs.
    """
    c = len(word)
    out = []
    acc = []

    def go(i, prev_occupied):
        if i == c:
            out.append("".join(acc))
            return
        ch = word[i]
        if ch == "u":
            if not prev_occupied:
                acc.append("d")
                go(i + 1, True)
                acc.pop()
            return
        if ch != "0":
            acc.append("0")
            go(i + 1, False)
            acc.pop()
            return
        acc.append("0")
        go(i + 1, False)
        acc.pop()
        if not prev_occupied:
            acc.append("u")
            go(i + 1, True)
            acc.pop()
            if i + 1 < c and word[i + 1] == "0":
                acc.append("h")
                acc.append("h")
                go(i + 2, True)
                acc.pop()
                acc.pop()

    go(0, False)
    out.sort(key=word_sort_key)
    return out


def word_sort_key(word):
    return tuple(_RANK[ch] for ch in word)


def pack_word(word):
    """Pack a word into an int, 2 bits per letter, leftmost letter highest."""
    if len(word) > PACK_COLS_LIMIT:
        raise ValueError("packing supports widths up to %d" % PACK_COLS_LIMIT)
    value = 0
    for ch in word:
        value = (value << 2) | _RANK[ch]
    return value


def unpack_word(value, cols):
    letters = []
    for k in range(cols - 1, -1, -1):
        letters.append(ALPHABET[(value >> (2 * k)) & 3])
    return "".join(letters)


def expected_state_count(c):
    """State count from the recurrence s_c = s_{c-1} + 2 s_{c-2} + s_{c-3}."""
    if c < 0:
        raise ValueError("width must be nonnegative")
    a, b, d = 1, 3, 6  # s_0, s_1, s_2
    if c == 0:
        return a
    if c == 1:
        return b
    if c == 2:
        return d
    for _ in range(c - 2):
        a, b, d = b, d, d + 2 * b + a
    return d


def _words_of_width(c):
    """Generate every valid word of width c exactly once.

    A valid word ends in 0, in 0u, in 0d, or in 0hh (a lone trailing u/d
    when c is 1, lone hh when c is 2), so words of width c are built by
    appending those suffixes to shorter words.
    """
    if c == 0:
        return [""]
    if c == 1:
        return ["0", "u", "d"]
    if c == 2:
        return ["00", "0u", "0d", "u0", "d0", "hh"]
    words = []
    for w in _words_of_width(c - 1):
        words.append(w + "0")
    for w in _words_of_width(c - 2):
        words.append(w + "0u")
        words.append(w + "0d")
    for w in _words_of_width(c - 3):
        words.append(w + "0hh")
    return words


@dataclass(frozen=True)
class StateSpace:
    """All valid row states of one width, in deterministic letter order."""

    cols: int
    words: tuple
    index: dict

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def all_zero(self):
        return "0" * self.cols


@lru_cache(maxsize=None)
def enumerate_states(c):
    """StateSpace for width c (1 <= c <= STATE_COLS_LIMIT)."""
    if not 1 <= c <= STATE_COLS_LIMIT:
        raise ValueError("width %d outside supported range 1..%d" % (c, STATE_COLS_LIMIT))
    words = sorted(_words_of_width(c), key=word_sort_key)
    index = {w: k for k, w in enumerate(words)}
    assert len(words) == expected_state_count(c)
    return StateSpace(c, tuple(words), index)


def word_dominoes(word):
    """Dominoes of a word placed on a strip, rows -1..1 of a board.

    h-pairs lie in row 0, u reaches into row 1, d comes from row -1.
    Used by the geometric validity cross-check.
    """
    _check_letters(word)
    dominoes = []
    i = 0
    c = len(word)
    while i < c:
        ch = word[i]
        if ch == "h":
            if i + 1 >= c or word[i + 1] != "h":
                return None
            dominoes.append(((0, i), (0, i + 1)))
            i += 2
            continue
        if ch == "u":
            dominoes.append(((0, i), (1, i)))
        elif ch == "d":
            dominoes.append(((-1, i), (0, i)))
        i += 1
    return dominoes


def is_valid_word_geometric(word):
    """Validity by materializing the dominoes and testing L1 distances.

    Distinct dominoes must keep every pair of squares at L1 distance >= 2.
    Greedy left-to-right h-pairing means a run of four h splits into two
    adjacent dominoes, which this test then rejects.
    """
    dominoes = word_dominoes(word)
    if dominoes is None:
        return False
    for k in range(len(dominoes)):
        for m in range(k + 1, len(dominoes)):
            for (r1, c1) in dominoes[k]:
                for (r2, c2) in dominoes[m]:
                    if abs(r1 - r2) + abs(c1 - c2) < 2:
                        return False
    return True
