import json

import pytest
from hypothesis import given

from kshapes.moves import (
    Move,
    StringType,
    charge,
    classify_string,
    complete_move_from_initial_string,
    enumerate_moves,
    extend_string_below,
    string_info,
)
from kshapes.partitions import DomainError, boundary, boundary_size, diag, enumerate_kshapes, is_kcore, is_kshape, transpose
from kshapes.poset import build_poset

import oracles
from strategies import kshapes


def test_degenerate_rank_three_move():
    lam = (9, 5, 4, 4, 2, 1, 1, 1)
    assert classify_string(lam, ((3, 5),), 5) is StringType.ROW
    m = complete_move_from_initial_string(lam, ((3, 5),), 5)
    assert (m.rank, m.length) == (3, 1)
    assert m.degenerate
    assert m.target == (9, 7, 5, 4, 2, 1, 1, 1)


def test_length_two_rank_two_move():
    lam = (4, 2, 2)
    assert classify_string(lam, ((2, 3), (1, 5)), 3) is StringType.ROW
    m = complete_move_from_initial_string(lam, ((2, 3), (1, 5)), 3)
    assert (m.rank, m.length) == (2, 2)
    assert not m.degenerate
    assert m.target == (6, 4, 2)


def test_cover_string_on_a_core():
    # both addable corners of the 3-core (2) share a residue mod 3
    assert is_kcore((2,), 3)
    assert classify_string((2,), ((2, 1), (1, 3)), 2) is StringType.COVER


def test_invalid_string_rejected():
    with pytest.raises(DomainError):
        classify_string((2, 1), ((1, 1),), 2)
    with pytest.raises(DomainError):
        classify_string((2, 1), ((1, 3), (3, 1)), 2)


def test_row_string_changes():
    info = string_info((4, 2, 2), ((2, 3), (1, 5)), 3)
    assert info.kind is StringType.ROW
    assert sorted(info.delta_cs.items()) == [(1, -1), (5, 1)]


def test_completion_that_breaks_the_shape_is_refused():
    # every addable single cell of (1) is a string, but none yields a 2-shape move
    assert complete_move_from_initial_string((1,), ((1, 2),), 2) is None


def test_bottom_string_has_no_extension():
    assert extend_string_below((2,), ((1, 3),), 3) is None


def test_cores_have_no_moves():
    for k in (2, 3, 4):
        for n in range(7):
            for lam in enumerate_kshapes(k, n):
                if is_kcore(lam, k):
                    assert enumerate_moves(lam, k) == ()


def test_small_poset_out_degrees():
    g = build_poset(2, 4)
    kinds = {v: sorted(m.kind for m in g.succ[v].values()) for v in g.vertices}
    assert kinds[(3, 1, 1)] == ["column", "row"]
    assert sum(1 for v in kinds.values() if len(v) == 2) == 1
    assert kinds[(3, 2, 1, 1)] == ["row"]


def test_charges():
    row = Move("row", 3, (4, 2, 2), (6, 4, 2), (((2, 3), (1, 5)), ((2, 4), (1, 6))))
    assert row.charge == 0
    col = Move("column", 3, (), (1, 1), (((2, 1), (1, 1)),))
    assert col.charge == 2
    assert charge(None) == 0


def test_json_form():
    m = complete_move_from_initial_string((4, 2, 2), ((2, 3), (1, 5)), 3)
    doc = json.loads(json.dumps(m.to_json()))
    assert doc["kind"] == "row" and doc["rank"] == 2 and doc["length"] == 2
    assert doc["source"] == "4,2,2" and doc["target"] == "6,4,2"
    assert len(doc["cells"]) == 4


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("n", range(6))
def test_moves_match_brute_force(k, n):
    for lam in enumerate_kshapes(k, n):
        got = {(m.target, m.kind) for m in enumerate_moves(lam, k)}
        assert got == oracles.naive_moves(lam, k), lam


@given(kshapes(max_n=8))
def test_moves_preserve_counts(case):
    k, lam = case
    before = boundary(lam, k)
    for m in enumerate_moves(lam, k):
        after = boundary(m.target, k)
        assert is_kshape(m.target, k)
        assert boundary_size(m.target, k) == boundary_size(lam, k)
        if m.kind == "row":
            assert after.rs == before.rs
        else:
            assert after.cs == before.cs


@given(kshapes(max_n=8))
def test_translates_are_close(case):
    k, lam = case
    for m in enumerate_moves(lam, k):
        for s, t in zip(m.strings, m.strings[1:]):
            for a, b in zip(s, t):
                assert abs(diag(a) - diag(b)) < k - 1
        if m.degenerate:
            assert m.length == 1


@given(kshapes(max_n=8))
def test_row_moves_shift_whole_column_groups(case):
    k, lam = case
    cs = boundary(lam, k).cs
    size = lambda c: cs[c - 1] if c <= len(cs) else 0
    for m in enumerate_moves(lam, k):
        if m.kind != "row":
            continue
        delta = m.delta_cs()
        assert all(v in (-1, 1) for v in delta.values())
        for c, v in delta.items():
            if v < 0:
                assert all(delta.get(j) == -1 for j in range(c + 1, len(cs) + 1) if size(j) == size(c))
            else:
                assert all(delta.get(j) == 1 for j in range(1, c) if size(j) == size(c))


@given(kshapes(max_n=8))
def test_moves_commute_with_transpose(case):
    k, lam = case
    here = {(m.kind, transpose(m.target)) for m in enumerate_moves(lam, k)}
    there = {("row" if m.kind == "column" else "column", m.target) for m in enumerate_moves(transpose(lam), k)}
    assert here == there
