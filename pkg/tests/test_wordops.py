import pytest

from corpus import AB01, first_row_zeros, top_left_one, u_all_rows, u_one_row
from pictomata import (
    Alphabet,
    CapacityError,
    ConcatKind,
    DimBounds,
    DimensionError,
    col_concat,
    concat_membership,
    diag_concat_words,
    language_up_to,
    picture_of,
    row_concat,
    transpose,
    transpose_automaton,
)


def test_row_concat_stacking():
    w = row_concat(picture_of(["00"]), picture_of(["01"]))
    assert w.rows == ("00", "01")
    assert (w.m, w.n) == (2, 2)


def test_row_concat_dimension_arithmetic():
    w = row_concat(picture_of(["01", "10"]), picture_of(["11"]))
    assert (w.m, w.n) == (3, 2)
    with pytest.raises(DimensionError):
        row_concat(picture_of(["00"]), picture_of(["000"]))


def test_col_concat_and_duality():
    w, v = picture_of(["0", "1"]), picture_of(["01", "10"])
    joined = col_concat(w, v)
    assert (joined.m, joined.n) == (2, 3)
    assert joined == transpose(row_concat(transpose(w), transpose(v)))
    with pytest.raises(DimensionError):
        col_concat(picture_of(["0"]), picture_of(["0", "0"]))


def test_diag_concat_unary_singleton():
    u = Alphabet(("a",))
    out = diag_concat_words(picture_of(["a"]), picture_of(["a"]), u)
    assert out == {picture_of(["aa", "aa"])}


def test_diag_concat_binary_filler_count():
    out = diag_concat_words(picture_of(["0"]), picture_of(["0"]), AB01)
    assert len(out) == 4  # one free cell in each filler corner
    for w in out:
        assert w.cell(1, 1) == "0" and w.cell(2, 2) == "0"


def test_diag_concat_block_layout():
    w, v = picture_of(["01"]), picture_of(["1", "1"])
    out = diag_concat_words(w, v, AB01)
    assert len(out) == 2 ** (1 * 1 + 2 * 2)
    for p in out:
        assert (p.m, p.n) == (3, 3)
        assert p.rows[0][:2] == "01"
        assert p.rows[1][2] == "1" and p.rows[2][2] == "1"


def test_diag_concat_cap():
    with pytest.raises(CapacityError):
        diag_concat_words(picture_of(["00"]), picture_of(["00"]), AB01, cap=3)


def test_row_membership_witness_words():
    L = first_row_zeros()
    assert concat_membership(ConcatKind.ROW, L, L, picture_of(["00", "00"]))
    assert not concat_membership(ConcatKind.ROW, L, L, picture_of(["00", "01"]))
    # too small to split
    assert not concat_membership(ConcatKind.ROW, L, L, picture_of(["00"]))


def test_diag_membership_gadget_word():
    L = top_left_one()
    gadget = picture_of(["100", "000", "000"])
    assert not concat_membership(ConcatKind.DIAG, L, L, gadget)
    assert concat_membership(ConcatKind.DIAG, L, L, picture_of(["100", "000", "010"]))
    assert not concat_membership(ConcatKind.DIAG, L, L, picture_of(["1"]))


def test_col_membership_degenerate():
    L = first_row_zeros()
    assert not concat_membership(ConcatKind.COL, L, L, picture_of(["0", "0"]))


def test_membership_agrees_with_explicit_concatenation_row():
    # independent route: build the concatenation set from the enumerated
    # factor languages, then compare with the split oracle
    a, b = u_one_row(), u_all_rows()
    bounds = DimBounds(4, 4)
    la = language_up_to(a, bounds)
    lb = language_up_to(b, bounds)
    explicit = set()
    for wa in la:
        for wb in lb:
            if wa.n == wb.n and wa.m + wb.m <= 4:
                explicit.add(row_concat(wa, wb))
    from pictomata import enumerate_pictures

    for w in enumerate_pictures(a.alphabet, bounds):
        assert concat_membership(ConcatKind.ROW, a, b, w) == (w in explicit), w.rows


def test_membership_agrees_with_explicit_concatenation_diag():
    a = b = top_left_one()
    bounds = DimBounds(3, 3)
    la = language_up_to(a, bounds)
    lb = language_up_to(b, bounds)
    explicit = set()
    for wa in la:
        for wb in lb:
            if wa.m + wb.m <= 3 and wa.n + wb.n <= 3:
                explicit |= diag_concat_words(wa, wb, a.alphabet)
    from pictomata import enumerate_pictures

    for w in enumerate_pictures(a.alphabet, bounds):
        assert concat_membership(ConcatKind.DIAG, a, b, w) == (w in explicit), w.rows


def test_membership_transpose_duality():
    a, b = u_one_row(), u_all_rows()
    at, bt = transpose_automaton(a), transpose_automaton(b)
    from pictomata import enumerate_pictures

    for w in enumerate_pictures(a.alphabet, DimBounds(4, 4)):
        assert concat_membership(ConcatKind.COL, a, b, w) == concat_membership(
            ConcatKind.ROW, at, bt, transpose(w)
        )
