import pytest
from hypothesis import given, strategies as st

from oracles import all_words, height_profile, is_dyck, peak_count
from pathforge.errors import EmptyWord, IllegalCharacter, OddLength, UnbalancedWord
from pathforge.path import (
    Lattice,
    Step,
    Word,
    classify,
    heights,
    parse_word,
    path_from_text,
    render_word,
    turns,
)

U, D = Step.UP, Step.DOWN


@st.composite
def words(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    steps = draw(st.permutations(["U"] * n + ["D"] * n))
    return "".join(steps)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("UUDDDU", (U, U, D, D, D, U)),
        ("UD", (U, D)),
        ("110001", (U, U, D, D, D, U)),
        ("ud", (U, D)),
    ],
)
def test_parse_word(text, expected):
    assert parse_word(text).steps == expected


@pytest.mark.parametrize(
    "text, exc",
    [
        ("UUD", OddLength),
        ("UUDU", UnbalancedWord),
        ("", EmptyWord),
        ("UXDD", IllegalCharacter),
    ],
)
def test_parse_word_errors(text, exc):
    with pytest.raises(exc):
        parse_word(text)


def test_illegal_character_position_is_one_based():
    with pytest.raises(IllegalCharacter) as info:
        parse_word("UDU?")
    assert info.value.position == 4
    assert "position 4" in str(info.value)


@pytest.mark.parametrize(
    "text, hs",
    [
        ("UUDDDU", (0, 1, 2, 1, 0, -1, 0)),
        ("UD", (0, 1, 0)),
        ("DU", (0, -1, 0)),
    ],
)
def test_heights(text, hs):
    assert heights(parse_word(text)).heights == hs


@pytest.mark.parametrize(
    "text, dyck",
    [("UUDDDU", False), ("UUUDDD", True), ("UDUDUD", True)],
)
def test_classify(text, dyck):
    assert classify(path_from_text(text)) is dyck


@pytest.mark.parametrize(
    "text, peaks, valleys",
    [
        ("UDUDUD", (1, 3, 5), (2, 4)),
        ("DUDUDU", (0, 2, 4, 6), (1, 3, 5)),
        ("UUUDDD", (3,), ()),
        ("UUDDDU", (2, 6), (5,)),
    ],
)
def test_turns(text, peaks, valleys):
    tl = turns(path_from_text(text))
    assert tl.peaks == peaks
    assert tl.valleys == valleys


@given(words())
def test_round_trip_text(text):
    assert render_word(parse_word(text)) == text


@given(words())
def test_height_invariants(text):
    hs = path_from_text(text).heights
    assert hs[0] == 0 and hs[-1] == 0
    assert all(abs(b - a) == 1 for a, b in zip(hs, hs[1:]))
    assert all((h - i) % 2 == 0 for i, h in enumerate(hs))
    assert list(hs) == height_profile(text)


@given(words())
def test_turn_structure(text):
    p = path_from_text(text)
    tl = turns(p)
    hs = p.heights
    assert len(tl.peaks) == len(tl.valleys) + 1
    assert len(tl.peaks) == peak_count(text)
    merged = sorted([(i, "p") for i in tl.peaks] + [(i, "v") for i in tl.valleys])
    assert [k for _, k in merged] == ["p", "v"] * len(tl.valleys) + ["p"]
    diag = [i + hs[i] for i in tl.peaks]
    anti = [i - hs[i] for i in tl.valleys]
    assert diag == sorted(set(diag))
    assert anti == sorted(set(anti))


@pytest.mark.parametrize("n", range(1, 8))
def test_dyck_ends_are_never_peaks(n):
    for w in all_words(n):
        if is_dyck(w):
            tl = turns(path_from_text(w))
            assert 0 not in tl.peaks and 2 * n not in tl.peaks


def test_word_order_is_u_before_d():
    ws = [parse_word(t) for t in ("UDDU", "DUUD", "UUDD", "DDUU", "UDUD", "DUDU")]
    assert [str(w) for w in sorted(ws)] == ["UUDD", "UDUD", "UDDU", "DUUD", "DUDU", "DDUU"]


def test_word_is_immutable():
    w = parse_word("UD")
    with pytest.raises(AttributeError):
        w.steps = (D, U)


def test_path_json():
    assert path_from_text("UUDDDU").to_json() == {
        "word": "UUDDDU", "heights": [0, 1, 2, 1, 0, -1, 0], "dyck": False}


def test_lattice_parse():
    assert Lattice.parse("Dyck") is Lattice.DYCK
    assert Lattice.parse(Lattice.BILATERAL) is Lattice.BILATERAL
    with pytest.raises(ValueError):
        Lattice.parse("motzkin")


def test_word_constructor_validates():
    with pytest.raises(UnbalancedWord):
        Word((U, U))
