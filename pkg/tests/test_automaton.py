import pytest
from hypothesis import given, settings, strategies as st

from corpus import AB01, UNARY, corpus_2w, first_row_zeros, u_all_rows
from pictomata import (
    Automaton2D,
    DimBounds,
    VariantError,
    accepts,
    enumerate_pictures,
    make_delta,
    parse_automaton,
    serialize_automaton,
    transpose,
    transpose_automaton,
    validate,
)


def test_validate_illegal_direction_for_variant():
    a = Automaton2D(
        "bad2w", "2W", "det", AB01, ("q0", "acc"), "q0", "acc",
        make_delta([("q0", "0", "q0", "L")]),
    )
    assert any("illegal direction" in v for v in validate(a))


def test_validate_det_fanout():
    a = Automaton2D(
        "fan", "2W", "det", AB01, ("q0", "acc"), "q0", "acc",
        make_delta([("q0", "0", "q0", "R"), ("q0", "0", "acc", "D")]),
    )
    assert any("fan-out" in v for v in validate(a))


def test_validate_accept_source_and_unknowns():
    a = Automaton2D(
        "bad", "2W", "det", AB01, ("q0", "acc"), "q0", "acc",
        make_delta([("acc", "0", "q0", "R"), ("q0", "2", "ghost", "R")]),
    )
    msgs = validate(a)
    assert any("accepting state" in v for v in msgs)
    assert any("unknown symbol" in v for v in msgs)
    assert any("unknown target state" in v for v in msgs)


def test_witness_is_well_formed():
    assert validate(first_row_zeros()) == []


def test_corpus_is_well_formed():
    for a in corpus_2w():
        assert validate(a) == [], (a.name, validate(a))


def test_transpose_requires_two_or_four_way():
    a = Automaton2D("t3", "3W", "det", AB01, ("q0", "acc"), "q0", "acc", {})
    with pytest.raises(VariantError):
        transpose_automaton(a)


def test_transpose_involution():
    for a in corpus_2w():
        assert transpose_automaton(transpose_automaton(a)) == a


def test_transpose_of_one_row_accepts_one_column():
    rows1 = u_all_rows()
    # accepts every unary word at the bottom border; transpose accepts
    # every unary word at the right border: same language
    cols1 = transpose_automaton(rows1)
    for w in enumerate_pictures(UNARY, DimBounds(4, 4)):
        assert accepts(cols1, w) == accepts(rows1, transpose(w))


def test_transpose_duality_exhaustive():
    bounds = DimBounds(3, 3)
    for a in corpus_2w():
        at = transpose_automaton(a)
        for w in enumerate_pictures(a.alphabet, bounds):
            assert accepts(a, w) == accepts(at, transpose(w)), (a.name, w.rows)


def test_serialize_parse_round_trip_corpus():
    for a in corpus_2w():
        assert parse_automaton(serialize_automaton(a)) == a


def test_parse_accumulates_duplicate_lines():
    text = """automaton nd
variant 2W
mode nondet
alphabet 0 1
states q0 acc
initial q0
accept acc
q0 0 -> q0 R
q0 0 -> acc D ; fan out
"""
    a = parse_automaton(text)
    assert a.image("q0", "0") == frozenset({("q0", "R"), ("acc", "D")})
    assert validate(a) == []


@st.composite
def random_automata(draw):
    n_states = draw(st.integers(2, 4))
    states = tuple(f"s{i}" for i in range(n_states))
    syms = draw(st.sampled_from([("a",), ("0", "1")]))
    mode = draw(st.sampled_from(["det", "nondet"]))
    variant = draw(st.sampled_from(["2W", "3W", "4W"]))
    dirs = sorted({"2W": ["D", "R"], "3W": ["D", "L", "R"], "4W": ["U", "D", "L", "R"]}[variant])
    entries = []
    for q in states[:-1]:
        for sym in (*syms, "#"):
            fan = draw(st.integers(0, 1 if mode == "det" else 2))
            for _ in range(fan):
                entries.append((q, sym, draw(st.sampled_from(states)), draw(st.sampled_from(dirs))))
    from pictomata import Alphabet

    return Automaton2D(
        draw(st.sampled_from(["m1", "m2"])), variant, mode, Alphabet(syms),
        states, states[0], states[-1], make_delta(entries),
    )


@given(random_automata())
@settings(max_examples=60)
def test_round_trip_random(a):
    assert parse_automaton(serialize_automaton(a)) == a
