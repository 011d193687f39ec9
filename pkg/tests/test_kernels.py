import pytest

from nonbond._kernels import (
    available_backends,
    backend_name,
    get_backend,
    use_backend,
)
from nonbond.counting import _dp_arrays

pure = get_backend("pure")


def dp_args(c, rows):
    in_ptr, in_src, weights, terminal, start = _dp_arrays(c)
    bits = (3 ** c).bit_length() + 24
    shifts = [w * bits for w in weights]
    return (len(weights), in_ptr, in_src, shifts, start, terminal, rows)


def test_pure_backend_always_present():
    assert "pure" in available_backends()
    assert backend_name() in available_backends()


def test_backend_selection_roundtrip():
    current = backend_name()
    try:
        use_backend("pure")
        assert backend_name() == "pure"
    finally:
        use_backend(current)
    with pytest.raises(ValueError):
        use_backend("hand-cranked")
    with pytest.raises(ValueError):
        get_backend("hand-cranked")


def test_dp_rows_counts_width_1():
    # width-1 columns: entry r of the totals packs the counts for r rows
    totals = pure.dp_rows(*dp_args(1, 8))
    assert totals[0] == 1  # the zero-row board: one empty placement
    assert len(totals) == 9


def test_enumerate_counts_and_collection():
    counts, found = pure.enumerate_boards(3, 3, 2, True)
    assert counts[2] == 12 and len(found) == 12
    counts, found = pure.enumerate_boards(3, 3, -1, False)
    assert found is None
    assert counts[:3] == [1, 12, 12]


backends_beyond_pure = [n for n in available_backends() if n != "pure"]


@pytest.mark.parametrize("name", backends_beyond_pure)
def test_compiled_matches_pure_enumeration(name):
    other = get_backend(name)
    for r, c in [(1, 1), (2, 3), (4, 4), (5, 6), (6, 6)]:
        for want_d in (-1, 0, 2, r * c // 4):
            assert other.enumerate_boards(r, c, want_d, True) == \
                pure.enumerate_boards(r, c, want_d, True), (r, c, want_d)


@pytest.mark.parametrize("name", backends_beyond_pure)
def test_compiled_matches_pure_dp(name):
    other = get_backend(name)
    for c in (1, 3, 5, 7):
        args = dp_args(c, 15)
        assert other.dp_rows(*args) == pure.dp_rows(*args)


@pytest.mark.parametrize("name", backends_beyond_pure)
def test_compiled_large_board_fallback(name):
    # beyond 64 cells the compiled path must hand off, not overflow
    other = get_backend(name)
    assert other.enumerate_boards(9, 9, 1, True) == \
        pure.enumerate_boards(9, 9, 1, True)
