"""Strings of addable cells, their four types, and row/column moves."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache

from .partitions import (
    Cell,
    DomainError,
    Partition,
    add_cells,
    addable_cells,
    boundary,
    diag,
    is_kshape,
    transpose,
)

CellString = tuple[Cell, ...]


class StringType(str, Enum):
    COVER = "cover"
    ROW = "row"
    COLUMN = "column"
    COCOVER = "cocover"


def contiguous(a: Cell, b: Cell, k: int) -> bool:
    return abs(diag(a) - diag(b)) in (k, k + 1)


def _check_string(shape: Partition, s: CellString, k: int) -> None:
    addable = set(addable_cells(shape))
    if not s:
        raise DomainError("empty string")
    for a in s:
        if a not in addable:
            raise DomainError(f"{a} is not an addable corner of {shape}")
    for a, b in zip(s, s[1:]):
        if not (b[0] < a[0] and contiguous(a, b, k)):
            raise DomainError(f"{b} is not below and contiguous to {a}")


def _left_of_row(cells: frozenset[Cell], row: int) -> Cell | None:
    found = [c for c in cells if c[0] == row]
    return min(found, key=lambda c: c[1]) if found else None


def _bottom_of_col(cells: frozenset[Cell], col: int) -> Cell | None:
    found = [c for c in cells if c[1] == col]
    return min(found) if found else None


@dataclass(frozen=True)
class StringInfo:
    """Everything about adding one string to a shape."""

    base: Partition
    cells: CellString
    k: int
    result: Partition
    kind: StringType
    removed: frozenset[Cell]
    delta_rs: dict[int, int]
    delta_cs: dict[int, int]

    @property
    def col_up(self) -> int | None:
        return next((c for c, v in self.delta_cs.items() if v < 0), None)

    @property
    def col_down(self) -> int | None:
        return next((c for c, v in self.delta_cs.items() if v > 0), None)

    @property
    def row_up(self) -> int | None:
        return next((r for r, v in self.delta_rs.items() if v > 0), None)

    @property
    def row_down(self) -> int | None:
        return next((r for r, v in self.delta_rs.items() if v < 0), None)

    def diagram(self) -> tuple:
        """Translation-invariant picture of the string.

        Added and removed cells relative to the top cell, together with the
        number of untouched boundary cells in every row and column that the
        picture meets (the segment lengths).
        """
        r0, c0 = self.cells[0]
        kept = boundary(self.base, self.k).cells - self.removed
        rows = sorted({r for r, _ in self.cells} | {r for r, _ in self.removed})
        cols = sorted({c for _, c in self.cells} | {c for _, c in self.removed})
        return (
            tuple((r - r0, c - c0) for r, c in self.cells),
            tuple(sorted((r - r0, c - c0) for r, c in self.removed)),
            tuple(sum(1 for x in kept if x[0] == r) for r in rows),
            tuple(sum(1 for x in kept if x[1] == c) for c in cols),
        )


def _delta(old: tuple[int, ...], new: tuple[int, ...]) -> dict[int, int]:
    n = max(len(old), len(new))
    out = {}
    for i in range(n):
        d = (new[i] if i < len(new) else 0) - (old[i] if i < len(old) else 0)
        if d:
            out[i + 1] = d
    return out


@lru_cache(maxsize=None)
def string_info(shape: Partition, s: CellString, k: int) -> StringInfo:
    _check_string(shape, s, k)
    result = add_cells(shape, s)
    before, after = boundary(shape, k), boundary(result, k)
    removed = before.cells - after.cells
    b0 = _left_of_row(before.cells, s[0][0])
    bl = _bottom_of_col(before.cells, s[-1][1])
    top_gone = b0 is not None and b0 in removed
    bottom_gone = bl is not None and bl in removed
    kind = {
        (False, False): StringType.COVER,
        (True, False): StringType.ROW,
        (False, True): StringType.COLUMN,
        (True, True): StringType.COCOVER,
    }[(top_gone, bottom_gone)]
    return StringInfo(
        base=shape,
        cells=s,
        k=k,
        result=result,
        kind=kind,
        removed=frozenset(removed),
        delta_rs=_delta(before.rs, after.rs),
        delta_cs=_delta(before.cs, after.cs),
    )


def classify_string(shape: Partition, s: CellString, k: int) -> StringType:
    return string_info(shape, tuple(s), k).kind


def modified_rows_cols(shape: Partition, s: CellString, k: int) -> tuple[dict[int, int], dict[int, int]]:
    info = string_info(shape, tuple(s), k)
    return dict(info.delta_rs), dict(info.delta_cs)


def _contiguous_addable(shape: Partition, cell: Cell, k: int, below: bool) -> Cell | None:
    found = [
        a
        for a in addable_cells(shape)
        if (a[0] < cell[0] if below else a[0] > cell[0]) and contiguous(a, cell, k)
    ]
    if len(found) > 1:
        raise AssertionError(f"{cell} has several contiguous addable corners")  # pragma: no cover
    return found[0] if found else None


def extend_string_below(shape: Partition, s: CellString, k: int) -> CellString | None:
    nxt = _contiguous_addable(shape, s[-1], k, below=True)
    return None if nxt is None else tuple(s) + (nxt,)


def extend_string_above(shape: Partition, s: CellString, k: int) -> CellString | None:
    nxt = _contiguous_addable(shape, s[0], k, below=False)
    return None if nxt is None else (nxt,) + tuple(s)


def maximal_string_below(shape: Partition, top: Cell, k: int) -> CellString:
    s: CellString = (top,)
    while (longer := extend_string_below(shape, s, k)) is not None:
        s = longer
    return s


def _t(cell: Cell) -> Cell:
    return (cell[1], cell[0])


def _transpose_string(s: CellString) -> CellString:
    # transposing reverses the top-to-bottom order
    return tuple(_t(c) for c in reversed(s))


@dataclass(frozen=True)
class Move:
    """A row or column move: translate strings ``strings[0], strings[1], ...``
    added in order to ``source``.

    For a row move ``strings[0]`` is the leftmost string; for a column move it
    is the lowest one (the transpose of the leftmost string of the transposed
    row move).
    """

    kind: str
    k: int
    source: Partition
    target: Partition
    strings: tuple[CellString, ...]

    @property
    def rank(self) -> int:
        return len(self.strings)

    @property
    def length(self) -> int:
        return len(self.strings[0])

    @cached_property
    def cells(self) -> frozenset[Cell]:
        return frozenset(c for s in self.strings for c in s)

    @property
    def charge(self) -> int:
        return 0 if self.kind == "row" else self.rank * self.length

    def string_infos(self) -> list[StringInfo]:
        """Infos of the strings, each on its own intermediate shape."""
        out = []
        shape = self.source
        for s in self.strings:
            info = string_info(shape, s, self.k)
            out.append(info)
            shape = info.result
        return out

    def transpose(self) -> "Move":
        return Move(
            kind="column" if self.kind == "row" else "row",
            k=self.k,
            source=transpose(self.source),
            target=transpose(self.target),
            strings=tuple(_transpose_string(s) for s in self.strings),
        )

    @property
    def degenerate(self) -> bool:
        m = self if self.kind == "row" else self.transpose()
        infos = m.string_infos()
        return infos[-1].col_up + 1 == infos[0].col_down

    def delta_rs(self) -> Counter:
        d: Counter = Counter()
        for info in self.string_infos():
            d.update(info.delta_rs)
        return d

    def delta_cs(self) -> Counter:
        d: Counter = Counter()
        for info in self.string_infos():
            d.update(info.delta_cs)
        return d

    def to_json(self) -> dict:
        from .partitions import format_partition

        return {
            "kind": self.kind,
            "rank": self.rank,
            "length": self.length,
            "cells": [list(c) for s in self.strings for c in s],
            "source": format_partition(self.source),
            "target": format_partition(self.target),
        }


def charge(m: Move | None) -> int:
    return 0 if m is None else m.charge


def _addable_in_column(shape: Partition, col: int) -> Cell | None:
    for a in addable_cells(shape):
        if a[1] == col:
            return a
    return None


def _row_move_completions(shape: Partition, s1: CellString, k: int) -> list[Move]:
    first = string_info(shape, s1, k)
    if first.kind is not StringType.ROW:
        return []
    pattern = first.diagram()
    strings = [s1]
    current = first.result
    out = []
    for _ in range(k - 1):
        if is_kshape(current, k):
            out.append(Move("row", k, shape, current, tuple(strings)))
        top = _addable_in_column(current, strings[-1][0][1] + 1)
        if top is None:
            break
        s = (top,)
        while len(s) < len(s1):
            longer = extend_string_below(current, s, k)
            if longer is None:
                break
            s = longer
        if len(s) < len(s1):
            break
        info = string_info(current, s, k)
        if info.kind is not StringType.ROW or info.diagram() != pattern:
            break
        strings.append(s)
        current = info.result
    return out


def move_completions(shape: Partition, s1: CellString, k: int, kind: str = "row") -> list[Move]:
    """All moves of the given kind whose initial string is ``s1``.

    Translates are placed greedily: each new string starts at the addable
    corner one column right of the previous top cell and follows forced
    contiguity.  Every rank at which the shape reached is a k-shape gives a
    move; in practice there is at most one.
    """
    s1 = tuple(s1)
    if kind == "row":
        return _row_move_completions(shape, s1, k)
    return [m.transpose() for m in _row_move_completions(transpose(shape), _transpose_string(s1), k)]


def complete_move_from_initial_string(shape: Partition, s1: CellString, k: int, kind: str = "row") -> Move | None:
    found = move_completions(shape, s1, k, kind)
    return found[0] if found else None


def _row_moves(shape: Partition, k: int) -> list[Move]:
    out = []
    for a1 in addable_cells(shape):
        full = maximal_string_below(shape, a1, k)
        for length in range(1, len(full) + 1):
            out.extend(_row_move_completions(shape, full[:length], k))
    return out


@lru_cache(maxsize=None)
def enumerate_moves(shape: Partition, k: int) -> tuple[Move, ...]:
    """All row and column moves from the k-shape ``shape``."""
    if not is_kshape(shape, k):
        raise DomainError(f"{shape} is not a {k}-shape")
    rows = _row_moves(shape, k)
    cols = [m.transpose() for m in _row_moves(transpose(shape), k)]
    return tuple(sorted(rows + cols, key=lambda m: (m.target, m.kind)))


def move_between(source: Partition, target: Partition, k: int) -> Move | None:
    """The move from ``source`` to ``target``, if there is one."""
    for m in enumerate_moves(source, k):
        if m.target == target:
            return m
    return None
