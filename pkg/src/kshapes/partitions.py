"""Partitions, hooks, k-boundaries, k-shapes and cores.

Partitions are plain tuples of positive integers in weakly decreasing order.
Cells are ``(row, col)`` pairs, 1-based, with row 1 the longest row.  "Below"
means a smaller row index and "left" a smaller column index, so the bottom
cell of a column is the one in the lowest-numbered row.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

Partition = tuple[int, ...]
Cell = tuple[int, int]


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of an operation."""


def make_partition(parts: Iterable[int]) -> Partition:
    p = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise DomainError(f"not a partition: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse ``"8,4,3,2,1,1,1"``; ``"-"`` or the empty string is the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return ()
    return make_partition(int(x) for x in text.split(","))


def format_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "-"


def is_partition(seq: Iterable[int]) -> bool:
    """True when ``seq`` is weakly decreasing and nonnegative (trailing zeros allowed)."""
    s = list(seq)
    return all(x >= 0 for x in s) and all(s[i] >= s[i + 1] for i in range(len(s) - 1))


def strip_zeros(seq: Iterable[int]) -> Partition:
    s = list(seq)
    while s and s[-1] == 0:
        s.pop()
    return tuple(s)


@lru_cache(maxsize=None)
def transpose(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def size(p: Partition) -> int:
    return sum(p)


def cells(p: Partition) -> Iterator[Cell]:
    for i, row in enumerate(p, start=1):
        for j in range(1, row + 1):
            yield (i, j)


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def skew_cells(outer: Partition, inner: Partition) -> frozenset[Cell]:
    if not contains(outer, inner):
        raise DomainError(f"{inner} is not contained in {outer}")
    out = set()
    for i, row in enumerate(outer, start=1):
        start = inner[i - 1] if i <= len(inner) else 0
        for j in range(start + 1, row + 1):
            out.add((i, j))
    return frozenset(out)


def diag(cell: Cell) -> int:
    return cell[1] - cell[0]


def in_shape(p: Partition, cell: Cell) -> bool:
    r, c = cell
    return 1 <= r <= len(p) and 1 <= c <= p[r - 1]


def hook_length(p: Partition, cell: Cell) -> int:
    """Arm plus leg plus one."""
    if not in_shape(p, cell):
        raise DomainError(f"cell {cell} is not in {p}")
    r, c = cell
    return p[r - 1] - c + transpose(p)[c - 1] - r + 1


def addable_cells(p: Partition) -> list[Cell]:
    """Addable corners, listed from the top row down (largest row index first)."""
    out = [(len(p) + 1, 1)]
    for i in range(len(p), 0, -1):
        if i == 1 or p[i - 2] > p[i - 1]:
            out.append((i, p[i - 1] + 1))
    return out


def removable_cells(p: Partition) -> list[Cell]:
    out = []
    for i in range(len(p), 0, -1):
        if i == len(p) or p[i] < p[i - 1]:
            out.append((i, p[i - 1]))
    return out


def add_cells(p: Partition, new: Iterable[Cell]) -> Partition:
    """Add cells to ``p``; the result must again be a partition."""
    rows = list(p)
    for r, c in sorted(new):
        while len(rows) < r:
            rows.append(0)
        if rows[r - 1] != c - 1:
            raise DomainError(f"cell {(r, c)} cannot be added to {p}")
        rows[r - 1] = c
    if not is_partition(rows):
        raise DomainError(f"adding {sorted(new)} to {p} is not a partition")
    return strip_zeros(rows)


def remove_cells(p: Partition, old: Iterable[Cell]) -> Partition:
    rows = list(p)
    for r, c in sorted(old, key=lambda x: (x[0], -x[1])):
        if r > len(rows) or rows[r - 1] != c:
            raise DomainError(f"cell {(r, c)} cannot be removed from {p}")
        rows[r - 1] = c - 1
    if not is_partition(rows):
        raise DomainError(f"removing {sorted(old)} from {p} is not a partition")
    return strip_zeros(rows)


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    if not contains(outer, inner):
        return False
    return all(outer[i] <= (inner[i - 1] if i - 1 < len(inner) else 0) for i in range(1, len(outer)))


def is_vertical_strip(outer: Partition, inner: Partition) -> bool:
    return is_horizontal_strip(transpose(outer), transpose(inner))


def dominates(a: Partition, b: Partition) -> bool:
    """True when ``a`` dominates ``b`` (same size assumed)."""
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


@dataclass(frozen=True)
class Boundary:
    """The k-boundary of a partition with its row and column counts.

    ``rs[i-1]`` counts boundary cells in row ``i`` for every row of the shape
    and ``cs[j-1]`` those in column ``j``; neither need be a partition.
    """

    cells: frozenset[Cell]
    rs: tuple[int, ...]
    cs: tuple[int, ...]


@lru_cache(maxsize=None)
def boundary(p: Partition, k: int) -> Boundary:
    conj = transpose(p)
    rs = [0] * len(p)
    cs = [0] * (p[0] if p else 0)
    found = []
    for i, row in enumerate(p, start=1):
        for j in range(1, row + 1):
            if row - j + conj[j - 1] - i + 1 <= k:
                found.append((i, j))
                rs[i - 1] += 1
                cs[j - 1] += 1
    return Boundary(frozenset(found), tuple(rs), tuple(cs))


def boundary_shapes(p: Partition, k: int) -> tuple[frozenset[Cell], tuple[int, ...], tuple[int, ...]]:
    b = boundary(p, k)
    return b.cells, b.rs, b.cs


def boundary_size(p: Partition, k: int) -> int:
    return len(boundary(p, k).cells)


def row_shape(p: Partition, k: int) -> Partition:
    """rs^k as a partition (only meaningful for k-shapes)."""
    return strip_zeros(boundary(p, k).rs)


def col_shape(p: Partition, k: int) -> Partition:
    return strip_zeros(boundary(p, k).cs)


@lru_cache(maxsize=None)
def is_kshape(p: Partition, k: int) -> bool:
    b = boundary(p, k)
    return is_partition(b.rs) and is_partition(b.cs)


@lru_cache(maxsize=None)
def is_kcore(p: Partition, k: int) -> bool:
    """No cell has hook length exactly ``k``."""
    conj = transpose(p)
    for i, row in enumerate(p, start=1):
        for j in range(1, row + 1):
            if row - j + conj[j - 1] - i + 1 == k:
                return False
    return True


def _kshapes_from_bottom(k: int, n: int) -> Iterator[Partition]:
    # Rows are placed shortest first.  A newly placed row sits above (smaller
    # index than) everything placed so far, so the legs of its cells and hence
    # its boundary count are already final when it is placed.
    def grow(rows: list[int], heights: list[int], last_rs: int, total: int) -> Iterator[Partition]:
        if total == n:
            # rs is a partition by construction; the columns remain to be checked
            shape = tuple(reversed(rows))
            if is_partition(boundary(shape, k).cs):
                yield shape
        prev = rows[-1] if rows else 0
        for length in range(max(prev, 1), prev + k + 1):
            count = 0
            for j in range(1, length + 1):
                leg = heights[j - 1] if j <= len(heights) else 0
                if length - j + leg + 1 <= k:
                    count += 1
            if count < max(last_rs, 1) or total + count > n:
                continue
            new_heights = [h + 1 for h in heights[:length]] + [1] * (length - len(heights))
            new_heights += heights[length:]
            yield from grow(rows + [length], new_heights, count, total + count)

    yield from grow([], [], 0, 0)


@lru_cache(maxsize=None)
def enumerate_kshapes(k: int, n: int) -> tuple[Partition, ...]:
    """All k-shapes whose k-boundary has ``n`` cells, sorted lexicographically."""
    if k < 2:
        raise DomainError("k must be at least 2")
    return tuple(sorted(set(_kshapes_from_bottom(k, n))))


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    def rec(prefix: list[int], bound: int) -> Iterator[Partition]:
        yield tuple(prefix)
        if len(prefix) < rows:
            for x in range(1, bound + 1):
                yield from rec(prefix + [x], x)

    yield from rec([], cols)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def core_from_bounded(mu: Partition, k: int) -> Partition:
    """The (k+1)-core whose k-boundary has row counts ``mu`` (parts at most k).

    Rows are placed from the shortest up; each is pushed right just far enough
    that its leftmost cell has hook at most k.
    """
    mu = make_partition(mu)
    if any(x > k for x in mu):
        raise DomainError(f"{mu} has a part larger than {k}")
    placed: list[int] = []  # placed[j] is the length of the j-th placed row
    for part in reversed(mu):
        shift = 0
        while True:
            col = shift + 1
            leg = sum(1 for x in placed if x >= col)
            if part + leg <= k:
                break
            shift += 1
        placed.append(part + shift)
    lam = tuple(reversed(placed))
    if not is_partition(lam) or row_shape(lam, k) != mu or not is_kcore(lam, k + 1):
        raise DomainError(f"no (k+1)-core with row shape {mu}")  # pragma: no cover
    return lam


def bounded_from_core(lam: Partition, k: int) -> Partition:
    """rs^k of a (k+1)-core: the inverse of :func:`core_from_bounded`."""
    if not is_kcore(lam, k + 1):
        raise DomainError(f"{lam} is not a {k + 1}-core")
    return row_shape(lam, k)


@lru_cache(maxsize=None)
def cores_with_boundary(kk: int, n: int) -> tuple[Partition, ...]:
    """All kk-cores whose (kk-1)-boundary has ``n`` cells, sorted."""
    return tuple(sorted(core_from_bounded(mu, kk - 1) for mu in partitions_of(n, kk - 1)))


@lru_cache(maxsize=None)
def shape_index(k: int, n: int) -> dict[tuple[Partition, Partition], Partition]:
    """Map ``(rs, cs)`` to the unique k-shape in Ksh^k_n with those counts."""
    table: dict[tuple[Partition, Partition], Partition] = {}
    for lam in enumerate_kshapes(k, n):
        key = (row_shape(lam, k), col_shape(lam, k))
        if key in table:
            raise AssertionError(f"two k-shapes share row/column shapes {key}")  # pragma: no cover
        table[key] = lam
    return table


def kshape_from_shapes(rs: Iterable[int], cs: Iterable[int], k: int) -> Partition | None:
    rs_p, cs_p = strip_zeros(rs), strip_zeros(cs)
    return shape_index(k, sum(rs_p)).get((rs_p, cs_p))
