import pytest

from oracles import all_mark_pairs, all_words, binom, is_dyck, peak_count
from pathforge.checkmark import (
    CheckmarkPair,
    from_checkmarks,
    is_dyck_pair,
    parse_checkmarks,
    satisfies_condition_i,
    to_checkmarks,
    walk,
)
from pathforge.errors import MalformedPair, WalkError
from pathforge.path import path_from_text


@pytest.mark.parametrize(
    "word, nw, sw",
    [
        ("UDUDDU", (2, 3), (1,)),
        ("UUUDDD", (), ()),
        ("UDUDUD", (2, 3), (1, 2)),
        ("DU", (1,), ()),
    ],
)
def test_to_checkmarks(word, nw, sw):
    pair = to_checkmarks(path_from_text(word))
    assert pair.nw_labels == nw
    assert pair.sw_labels == sw


@pytest.mark.parametrize(
    "nw, sw, word",
    [
        ((2, 3), (1,), "UDUDDU"),
        ((), (), "UUUDDD"),
        ((2, 3), (1, 2), "UDUDUD"),
    ],
)
def test_from_checkmarks(nw, sw, word):
    assert str(from_checkmarks(CheckmarkPair.from_labels(3, nw, sw))) == word


@pytest.mark.parametrize(
    "nw, sw, dyck",
    [((2, 3), (1, 2), True), ((2, 3), (1,), False), ((), (), True)],
)
def test_is_dyck_pair(nw, sw, dyck):
    assert is_dyck_pair(CheckmarkPair.from_labels(3, nw, sw)) is dyck


def test_condition_i_enforced():
    with pytest.raises(MalformedPair):
        CheckmarkPair.from_labels(3, (), (1,))
    with pytest.raises(MalformedPair):
        CheckmarkPair.from_labels(3, (1, 2, 3), (1,))
    with pytest.raises(MalformedPair):
        CheckmarkPair(3, (True, False), (False, False))
    with pytest.raises(MalformedPair):
        CheckmarkPair.from_labels(3, (4,), ())


def test_walk_rejects_inconsistent_marks():
    with pytest.raises(WalkError):
        walk(2, (False, False), (True,))


def test_text_format():
    pair = parse_checkmarks("NW=.^^;SW=^.")
    assert pair.n == 3
    assert pair.nw_labels == (2, 3) and pair.sw_labels == (1,)
    assert pair.to_text() == "NW=.^^;SW=^."
    assert parse_checkmarks("NW=^;SW=").nw_labels == (1,)
    with pytest.raises(MalformedPair):
        parse_checkmarks("NW=.x;SW=.")


def test_json_format():
    pair = CheckmarkPair.from_labels(3, (2, 3), (1,))
    assert pair.to_json() == {"n": 3, "nw": [2, 3], "sw": [1]}
    assert CheckmarkPair.from_json(pair.to_json()) == pair


@pytest.mark.parametrize("n", range(1, 9))
def test_round_trip_paths(n):
    for w in all_words(n):
        p = path_from_text(w)
        pair = to_checkmarks(p)
        assert from_checkmarks(pair) == p
        # a peak for every north-west arrow plus one on the north-east wall
        assert pair.nw_arrows + 1 == peak_count(w)


@pytest.mark.parametrize("n", range(1, 7))
def test_round_trip_pairs(n):
    count = 0
    dyck_count = 0
    for nw, sw in all_mark_pairs(n):
        if not satisfies_condition_i(nw, sw):
            continue
        pair = CheckmarkPair(n, nw, sw)
        p = from_checkmarks(pair)
        assert to_checkmarks(p) == pair
        assert is_dyck_pair(pair) == is_dyck(str(p))
        count += 1
        dyck_count += is_dyck_pair(pair)
    assert count == binom(2 * n, n)
    assert dyck_count == binom(2 * n, n) // (n + 1)


@pytest.mark.parametrize("n", range(1, 13))
def test_pair_count_by_arrows(n):
    # v north-west arrows, v or v-1 south-west arrows
    total = sum(binom(n, v) * (binom(n - 1, v) + binom(n - 1, v - 1)) for v in range(n + 1))
    assert total == binom(2 * n, n)
