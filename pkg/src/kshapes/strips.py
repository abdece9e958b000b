"""Strips of k-shapes, augmentation, and maximal / reverse-maximal strips."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .moves import Move, StringType, enumerate_moves, extend_string_above, move_between, move_completions, maximal_string_below, string_info
from .partitions import (
    Cell,
    DomainError,
    Partition,
    addable_cells,
    add_cells,
    boundary,
    boundary_size,
    col_shape,
    enumerate_kshapes,
    is_horizontal_strip,
    is_kshape,
    is_vertical_strip,
    removable_cells,
    remove_cells,
    row_shape,
    skew_cells,
)
from .poset import build_poset


@dataclass(frozen=True)
class Strip:
    inner: Partition
    outer: Partition
    k: int
    rank: int

    @property
    def cells(self) -> frozenset[Cell]:
        return skew_cells(self.outer, self.inner)


@dataclass(frozen=True)
class AugmentableCorner:
    cell: Cell
    kind: str  # "lower" or "upper"
    associated: int  # a column for lower corners, a row for upper ones


def is_strip(inner: Partition, outer: Partition, k: int, allow_rank_k: bool = False) -> int | None:
    """Rank of the strip ``outer/inner``, or None when it is not a strip."""
    if not (is_kshape(inner, k) and is_kshape(outer, k)):
        return None
    if not is_horizontal_strip(outer, inner):
        return None
    if not is_horizontal_strip(row_shape(outer, k), row_shape(inner, k)):
        return None
    if not is_vertical_strip(col_shape(outer, k), col_shape(inner, k)):
        return None
    rank = boundary_size(outer, k) - boundary_size(inner, k)
    if rank > k or (rank == k and not allow_rank_k):
        return None
    return rank


def make_strip(inner: Partition, outer: Partition, k: int, allow_rank_k: bool = False) -> Strip:
    rank = is_strip(inner, outer, k, allow_rank_k)
    if rank is None:
        raise DomainError(f"{outer}/{inner} is not a strip for k={k}")
    return Strip(inner, outer, k, rank)


@lru_cache(maxsize=None)
def strips_above(inner: Partition, k: int, r: int, allow_rank_k: bool = False) -> tuple[Partition, ...]:
    """Outer shapes of the rank-``r`` strips on ``inner``."""
    n = boundary_size(inner, k) + r
    return tuple(mu for mu in enumerate_kshapes(k, n) if is_strip(inner, mu, k, allow_rank_k) == r)


@lru_cache(maxsize=None)
def strips_inside(outer: Partition, k: int, r: int, allow_rank_k: bool = False) -> tuple[Partition, ...]:
    """Inner shapes of the rank-``r`` strips inside ``outer``."""
    n = boundary_size(outer, k) - r
    if n < 0:
        return ()
    return tuple(lam for lam in enumerate_kshapes(k, n) if is_strip(lam, outer, k, allow_rank_k) == r)


def enumerate_strips(shape: Partition, k: int, r: int, direction: str = "above", allow_rank_k: bool = False) -> list[Strip]:
    if direction == "above":
        return [Strip(shape, mu, k, r) for mu in strips_above(shape, k, r, allow_rank_k)]
    if direction == "inside":
        return [Strip(lam, shape, k, r) for lam in strips_inside(shape, k, r, allow_rank_k)]
    raise DomainError(f"unknown direction {direction!r}")


def _modified(inner_counts: tuple[int, ...], outer_counts: tuple[int, ...]) -> set[int]:
    n = max(len(inner_counts), len(outer_counts))
    pad_in = inner_counts + (0,) * (n - len(inner_counts))
    pad_out = outer_counts + (0,) * (n - len(outer_counts))
    return {i + 1 for i in range(n) if pad_in[i] != pad_out[i]}


def modified_rows(inner: Partition, outer: Partition, k: int) -> set[int]:
    return _modified(boundary(inner, k).rs, boundary(outer, k).rs)


def modified_cols(inner: Partition, outer: Partition, k: int) -> set[int]:
    return _modified(boundary(inner, k).cs, boundary(outer, k).cs)


def augmentation_moves(inner: Partition, outer: Partition, k: int, allow_rank_k: bool = False) -> list[Move]:
    """Moves from ``outer`` that keep a strip over ``inner``."""
    return [m for m in enumerate_moves(outer, k) if is_strip(inner, m.target, k, allow_rank_k) is not None]


def reverse_augmentation_moves(inner: Partition, outer: Partition, k: int, allow_rank_k: bool = False) -> list[Move]:
    """Moves into ``inner`` from shapes that still lie under a strip of ``outer``."""
    g = build_poset(k, boundary_size(inner, k))
    return [m for kappa, m in g.pred[inner].items() if is_strip(kappa, outer, k, allow_rank_k) is not None]


def is_maximal(inner: Partition, outer: Partition, k: int, allow_rank_k: bool = False) -> bool:
    return not augmentation_moves(inner, outer, k, allow_rank_k)


def is_reverse_maximal(inner: Partition, outer: Partition, k: int, allow_rank_k: bool = False) -> bool:
    return not reverse_augmentation_moves(inner, outer, k, allow_rank_k)


def augmentable_corners(inner: Partition, outer: Partition, k: int, allow_rank_k: bool = False) -> list[AugmentableCorner]:
    """Lower and upper augmentable corners of the strip ``outer/inner``."""
    strip_cells = skew_cells(outer, inner)
    mcols = modified_cols(inner, outer, k)
    mrows = modified_rows(inner, outer, k)
    before = boundary(outer, k).cells
    out = []
    for a in addable_cells(outer):
        gone = before - boundary(add_cells(outer, [a]), k).cells
        for b in gone:
            if b[0] == a[0] and b[1] in mcols:
                if allow_rank_k and sum(1 for c in strip_cells if c[0] == a[0]) >= k:
                    continue
                out.append(AugmentableCorner(a, "lower", b[1]))
            on_top = (a[0] - 1, a[1]) in strip_cells
            if b[1] == a[1] and b[0] in mrows and not on_top:
                out.append(AugmentableCorner(a, "upper", b[0]))
    return sorted(set(out), key=lambda x: (x.kind, x.cell))


def reverse_augmentable_corners(inner: Partition, outer: Partition, k: int) -> list[AugmentableCorner]:
    """Removable corners of ``inner`` whose removal adds a boundary cell in a
    modified column (lower) or, away from the strip, in a modified row (upper)."""
    strip_cells = skew_cells(outer, inner)
    mcols = modified_cols(inner, outer, k)
    mrows = modified_rows(inner, outer, k)
    before = boundary(inner, k).cells
    out = []
    for a in removable_cells(inner):
        smaller = remove_cells(inner, [a])
        appeared = boundary(smaller, k).cells - before
        below_strip = (a[0] + 1, a[1]) in strip_cells
        for b in appeared:
            if b[1] in mcols:
                out.append(AugmentableCorner(a, "lower", b[1]))
            if b[0] in mrows and not below_strip:
                out.append(AugmentableCorner(a, "upper", b[0]))
    return sorted(set(out), key=lambda x: (x.kind, x.cell))


class StripError(RuntimeError):
    """A construction that should always succeed did not; indicates a bug."""


def _completion_row_move(inner: Partition, outer: Partition, corner: AugmentableCorner, k: int) -> Move:
    strip_cells = skew_cells(outer, inner)
    col_cell = next(c for c in strip_cells if c[1] == corner.associated)
    rank = sum(1 for c in strip_cells if c[0] == col_cell[0])
    t1 = maximal_string_below(outer, corner.cell, k)
    for m in move_completions(outer, t1, k, "row"):
        if m.rank == rank:
            return m
    raise StripError(f"no completion row move of rank {rank} from {t1} on {outer}")


def _completion_column_move(inner: Partition, outer: Partition, corner: AugmentableCorner, k: int) -> Move:
    strip_cells = skew_cells(outer, inner)
    s = (corner.cell,)
    while (longer := extend_string_above(outer, s, k)) is not None:
        top = longer[0]
        if (top[0] - 1, top[1]) in strip_cells:
            break
        s = longer
    info = string_info(outer, s, k)
    if info.kind is not StringType.COLUMN:
        raise StripError(f"{s} is not a column-type string on {outer}")
    return Move("column", k, outer, info.result, (s,))


def maximize_strip(inner: Partition, outer: Partition, k: int, allow_rank_k: bool = False) -> tuple[list[Move], Partition]:
    """Augment ``outer/inner`` to its maximal strip.

    While a lower augmentable corner exists, the rightmost one is extended
    below to a completion row move; otherwise the rightmost upper corner is
    extended above (never over a strip cell) to a column move.  Returns the
    moves applied and the final outer shape.
    """
    rank = is_strip(inner, outer, k, allow_rank_k)
    if rank is None:
        raise DomainError(f"{outer}/{inner} is not a strip")
    path: list[Move] = []
    current = outer
    while True:
        corners = augmentable_corners(inner, current, k, allow_rank_k)
        lower = [c for c in corners if c.kind == "lower"]
        upper = [c for c in corners if c.kind == "upper"]
        if lower:
            m = _completion_row_move(inner, current, max(lower, key=lambda c: c.cell[1]), k)
        elif upper:
            m = _completion_column_move(inner, current, max(upper, key=lambda c: c.cell[1]), k)
        else:
            return path, current
        if not is_kshape(m.target, k) or is_strip(inner, m.target, k, allow_rank_k) != rank:
            raise StripError(f"completion {m} does not give a strip over {inner}")
        found = move_between(current, m.target, k)
        if found is None:
            raise StripError(f"completion {m} is not a move")
        path.append(found)
        current = m.target


def reverse_maximize_strip(inner: Partition, outer: Partition, k: int, allow_rank_k: bool = False) -> tuple[list[Move], Partition]:
    """Shrink ``inner`` by reverse augmentation moves until none is left.

    Each step takes the first available reverse augmentation move in a fixed
    order (row moves before column moves, then by source shape).  Returns the
    moves in the order they were found (each ends at the previous inner shape)
    and the final inner shape.
    """
    if is_strip(inner, outer, k, allow_rank_k) is None:
        raise DomainError(f"{outer}/{inner} is not a strip")
    found: list[Move] = []
    current = inner
    while True:
        options = reverse_augmentation_moves(current, outer, k, allow_rank_k)
        if not options:
            return found, current
        m = min(options, key=lambda m: (m.kind != "row", m.source))
        found.append(m)
        current = m.source

