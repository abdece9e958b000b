from collections import deque

import pytest
from hypothesis import given

from kshapes.partitions import DomainError, boundary, boundary_size, enumerate_kshapes, is_kcore
from kshapes.poset import build_poset
from kshapes.strips import (
    augmentable_corners,
    augmentation_moves,
    enumerate_strips,
    is_maximal,
    is_reverse_maximal,
    is_strip,
    make_strip,
    maximize_strip,
    reverse_augmentable_corners,
    reverse_augmentation_moves,
    reverse_maximize_strip,
    strips_above,
    strips_inside,
)

import oracles
from strategies import kshapes

LAM = (6, 6, 4, 4, 2, 2, 1)
MU0 = (7, 6, 4, 4, 2, 2, 2)
MU1 = (7, 6, 5, 4, 3, 2, 2, 1)
MU2 = (8, 6, 6, 4, 4, 2, 2, 1)


def test_rank_zero_and_one():
    assert is_strip((3, 1), (3, 1), 3) == 0
    assert strips_above((), 3, 1) == ((1,),)


def test_worked_strip_rank():
    assert is_strip(LAM, MU0, 4) == 2


def test_not_a_strip():
    with pytest.raises(DomainError):
        make_strip((1,), (1, 1, 1), 3)
    with pytest.raises(DomainError):
        enumerate_strips((1,), 3, 1, direction="sideways")


def test_maximization_replay():
    corners = augmentable_corners(LAM, MU0, 4)
    assert [c.kind for c in corners] == ["upper"]
    assert [c.kind for c in augmentable_corners(LAM, MU1, 4)] == ["lower"]
    assert augmentable_corners(LAM, MU2, 4) == []
    path, end = maximize_strip(LAM, MU0, 4)
    assert [m.kind for m in path] == ["column", "row"]
    assert [m.target for m in path] == [MU1, MU2]
    assert end == MU2 and is_maximal(LAM, MU2, 4)


def test_maximal_input_is_left_alone():
    assert maximize_strip(LAM, MU2, 4) == ([], MU2)


def test_reverse_maximal_input_is_left_alone():
    for k in (2, 3):
        for n in range(1, 6):
            for mu in enumerate_kshapes(k, n):
                for r in range(1, k):
                    for lam in strips_inside(mu, k, r):
                        if is_reverse_maximal(lam, mu, k):
                            assert reverse_maximize_strip(lam, mu, k) == ([], lam)


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("n", range(6))
def test_strip_test_matches_oracle(k, n):
    inner_shapes = enumerate_kshapes(k, n)
    for lam in inner_shapes:
        for mu in enumerate_kshapes(k, n) + enumerate_kshapes(k, n + 1) + enumerate_kshapes(k, n + 2):
            assert is_strip(lam, mu, k) == oracles.naive_strip_rank(lam, mu, k)


def _cases(ks=(2, 3), max_n=6):
    for k in ks:
        for n in range(max_n + 1):
            for lam in enumerate_kshapes(k, n):
                for r in range(1, k):
                    for mu in strips_above(lam, k, r):
                        yield k, r, lam, mu


def _augmentation_ends(lam, mu, k):
    """Every end of an augmentation path from mu/lam, by exhaustive search."""
    seen, ends = {mu}, set()
    queue = deque([mu])
    while queue:
        cur = queue.popleft()
        nxt = [m.target for m in augmentation_moves(lam, cur, k)]
        if not nxt:
            ends.add(cur)
        for t in nxt:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return ends


def _reverse_ends(lam, mu, k):
    seen, ends = {lam}, set()
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        nxt = [m.source for m in reverse_augmentation_moves(cur, mu, k)]
        if not nxt:
            ends.add(cur)
        for t in nxt:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return ends


def test_maximization_is_the_unique_maximal_augmentation():
    for k, r, lam, mu in _cases():
        path, end = maximize_strip(lam, mu, k)
        assert _augmentation_ends(lam, mu, k) == {end}
        for m in path:
            assert is_strip(lam, m.target, k) == r


def test_reverse_maximization_end_is_unique():
    for k, r, lam, mu in _cases():
        _, end = reverse_maximize_strip(lam, mu, k)
        assert _reverse_ends(lam, mu, k) == {end}
        assert is_strip(end, mu, k) == r


def test_maximal_means_no_corners():
    for k, _, lam, mu in _cases():
        assert is_maximal(lam, mu, k) == (not augmentable_corners(lam, mu, k))
        assert is_reverse_maximal(lam, mu, k) == (not reverse_augmentable_corners(lam, mu, k))


def test_augmentation_moves_shape():
    for k, _, lam, mu in _cases():
        up_cols = {c for c, v in _delta(boundary(lam, k).cs, boundary(mu, k).cs).items() if v > 0}
        up_rows = {c for c, v in _delta(boundary(lam, k).rs, boundary(mu, k).rs).items() if v > 0}
        for m in augmentation_moves(lam, mu, k):
            if m.kind == "column":
                assert m.rank == 1
                assert {r for r, v in m.delta_rs().items() if v < 0} <= up_rows
            else:
                assert {c for c, v in m.delta_cs().items() if v < 0} <= up_cols


def _delta(a, b):
    n = max(len(a), len(b))
    a, b = a + (0,) * (n - len(a)), b + (0,) * (n - len(b))
    return {i + 1: y - x for i, (x, y) in enumerate(zip(a, b)) if x != y}


@pytest.mark.parametrize("k", [2, 3])
def test_reverse_maximal_strips_under_top_cores(k):
    for n in range(1, 7):
        for mu in build_poset(k, n).maxima():
            for r in range(1, k):
                for lam in strips_inside(mu, k, r):
                    if is_reverse_maximal(lam, mu, k):
                        assert is_kcore(lam, k + 1)


@given(kshapes(max_n=8))
def test_surface_strip(case):
    k, mu = case
    if not mu:
        return
    r = boundary(mu, k).rs[0]
    found = [lam for lam in strips_inside(mu, k, r, True) if is_reverse_maximal(lam, mu, k, True)]
    assert found == [mu[1:]]
    assert boundary_size(mu, k) - boundary_size(mu[1:], k) == r
