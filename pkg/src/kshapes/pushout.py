"""Pushouts and pullbacks of (strip, move) pairs, pushout sequences, and the
bijection from reverse-maximal tableaux to (weak tableau, path class) pairs.

Squares are written with ``lam`` in the corner, the strip ``mu/lam`` going
down and the move ``nu/lam`` going right; the opposite corner is ``eta``.

Push is computed from the expected row/column shape by searching the moves
out of ``mu``.  Pull is computed by shifting the unmatched strings of the move
through the strip and removing them, so the two are independent routes.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .moves import CellString, Move, enumerate_moves, move_between
from .partitions import (
    Cell,
    DomainError,
    Partition,
    boundary,
    contains,
    is_horizontal_strip,
    is_kshape,
    is_partition,
    remove_cells,
    skew_cells,
    strip_zeros,
)
from .poset import Path, build_poset, path_classes
from .strips import Strip, is_strip, maximize_strip, modified_cols, modified_rows, reverse_maximize_strip
from .tableaux import REVERSE_MAXIMAL, WEAK, Tableau


class CompatibilityError(ValueError):
    """The pair is not compatible, so its pushout or pullback is undefined."""


class PushoutError(RuntimeError):
    """A uniqueness or existence guarantee failed; indicates a bug."""


@dataclass(frozen=True)
class CompatibilityReport:
    reasonable: bool
    contiguous: bool
    normal: bool
    interfering: bool
    special_interference: bool
    m_prime: tuple[CellString, ...]
    m_shifted: frozenset[Cell]
    expected_shape: tuple[int, ...]

    @property
    def compatible_so_far(self) -> bool:
        """Reasonable, non-contiguous and normal; perfectibility is decided by search."""
        return self.reasonable and not self.contiguous and self.normal


@dataclass(frozen=True)
class PushoutResult:
    out_strip: Strip
    out_move: Move | None


def _union(a: Partition, b: Partition) -> Partition:
    n = max(len(a), len(b))
    return tuple(max(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n))


def _intersection(a: Partition, b: Partition) -> Partition:
    return strip_zeros(min(x, y) for x, y in zip(a, b))


def _as_vector(counts: tuple[int, ...], delta: Counter, length: int) -> list[int]:
    v = list(counts) + [0] * (length - len(counts))
    for i, d in delta.items():
        v[i - 1] += d
    return v


def _vector_length(k: int, *sizes: int) -> int:
    # room for entries moved right by a perfection
    return max(sizes) + 2 * k + 2


def _shift(cells: Iterable[Cell], by: Iterable[Cell], axis: str, sign: int) -> frozenset[Cell]:
    """Shift each column (axis "col") or row (axis "row") of ``cells`` by the
    number of cells of ``by`` in it, up/right for sign +1 and down/left for -1."""
    by = list(by)
    out = set()
    for r, c in cells:
        if axis == "col":
            out.add((r + sign * sum(1 for x in by if x[1] == c), c))
        else:
            out.add((r, c + sign * sum(1 for x in by if x[0] == r)))
    return frozenset(out)


def _reasonable(strings: Iterable[CellString], strip_cells: frozenset[Cell]) -> bool:
    for s in strings:
        inside = sum(1 for c in s if c in strip_cells)
        if inside not in (0, len(s)):
            return False
    return True


def _first_diagram(m: Move) -> tuple:
    return m.string_infos()[0].diagram()


def _perfect_row(alpha: list[int], d: int) -> list[int]:
    for i in range(len(alpha) - 1):
        if alpha[i] < alpha[i + 1]:
            # alpha[i] + 1 = alpha[i+1] = ... = alpha[i+a] > alpha[i+a+1] (0-based here)
            a = 1
            while i + a + 1 < len(alpha) and alpha[i + a + 1] == alpha[i + 1]:
                a += 1
            out = list(alpha)
            for j in range(1, a + 1):
                out[i + j] -= 1
                out[i + j + d] += 1
            return out
    return list(alpha)


def analyze(strip: Strip, m: Move) -> CompatibilityReport:
    """Compatibility data of the initial pair (``strip``, ``m``)."""
    if strip.inner != m.source:
        raise DomainError("the strip and the move must start at the same shape")
    lam, mu, nu, k = m.source, strip.outer, m.target, m.k
    s_cells = strip.cells
    infos = m.string_infos()
    reasonable = _reasonable(m.strings, s_cells)

    joint = boundary(mu, k).cells & boundary(nu, k).cells
    contiguous = bool(joint - boundary(_union(mu, nu), k).cells)

    length = _vector_length(k, len(mu), mu[0] if mu else 0, len(nu), nu[0] if nu else 0)
    if m.kind == "row":
        mcols = modified_cols(lam, mu, k)
        kept = [i for i, info in enumerate(infos) if info.col_down not in mcols]
        delta: Counter = Counter()
        for i in kept:
            delta.update(infos[i].delta_cs)
        alpha = _as_vector(boundary(mu, k).cs, delta, length)
        interfering = not is_partition(alpha)
        d = infos[0].col_down - infos[0].col_up
        expected = _perfect_row(alpha, d)
        special = False
        normal = True
        prime = tuple(m.strings[i] for i in kept)
        shifted = _shift((c for s in prime for c in s), s_cells, "col", +1)
    else:
        mrows = modified_rows(lam, mu, k)
        kept = [i for i, info in enumerate(infos) if info.row_up not in mrows]
        delta = Counter()
        for i in kept:
            delta.update(infos[i].delta_rs)
        alpha = _as_vector(boundary(mu, k).rs, delta, length)
        first = infos[0]
        c = first.row_down
        # With every string matched above, interference means rs(mu)/rs(nu) is
        # not a horizontal strip.  Comparing alpha at rows c and c+1 alone
        # misses cases where row c is itself modified by the strip.
        special = not kept and not is_horizontal_strip(strip_zeros(boundary(mu, k).rs), strip_zeros(boundary(nu, k).rs))
        interfering = not is_partition(alpha) or special
        d = first.row_up - first.row_down
        expected = list(alpha)
        if interfering:
            if special:
                i = c
            else:
                i = next(j + 1 for j in range(len(alpha) - 1) if alpha[j] < alpha[j + 1])
            expected[i] -= 1  # e_{i+1}, 1-based
            expected[i + d] += 1  # e_{i+d+1}
        s1 = m.strings[0]
        s1_inside = all(x in s_cells for x in s1)
        continues_above = not (s1_inside and first.row_up in mrows)
        normal = reasonable and (
            not continues_above
            or (not any(x[0] in mrows for x in s1) and first.row_down not in mrows)
        )
        prime = tuple(m.strings[i] for i in kept)
        shifted = _shift((c for s in prime for c in s), s_cells, "row", +1)
    return CompatibilityReport(
        reasonable=reasonable,
        contiguous=contiguous,
        normal=normal,
        interfering=interfering,
        special_interference=special,
        m_prime=prime,
        m_shifted=shifted,
        expected_shape=tuple(expected),
    )


def expected_column_shape(strip: Strip, m: Move) -> tuple[int, ...]:
    if m.kind != "row":
        raise DomainError("expected column shape is defined for row moves")
    return strip_zeros(analyze(strip, m).expected_shape)


def expected_row_shape(strip: Strip, m: Move) -> tuple[int, ...]:
    if m.kind != "column":
        raise DomainError("expected row shape is defined for column moves")
    return strip_zeros(analyze(strip, m).expected_shape)


def push(strip: Strip, m: Move) -> PushoutResult:
    """Pushout of a compatible initial pair.

    The output shape ``eta`` is the unique k-shape whose column shape (row
    moves) or row shape (column moves) is the expected one, such that
    ``eta/mu`` is empty or a move of the same kind with the same string
    diagram as ``m`` and ``nu`` lies inside ``eta``.
    """
    report = analyze(strip, m)
    if not report.compatible_so_far:
        raise CompatibilityError(f"pair is not compatible: {report}")
    k, mu, nu = m.k, strip.outer, m.target
    want = strip_zeros(report.expected_shape)
    pattern = _first_diagram(m)

    def shape_of(p: Partition) -> Partition:
        b = boundary(p, k)
        return strip_zeros(b.cs if m.kind == "row" else b.rs)

    found: list[tuple[Partition, Move | None]] = []
    if shape_of(mu) == want and contains(mu, nu):
        found.append((mu, None))
    for move in enumerate_moves(mu, k):
        eta = move.target
        if move.kind == m.kind and shape_of(eta) == want and contains(eta, nu) and _first_diagram(move) == pattern:
            found.append((eta, move))
    if not found:
        raise CompatibilityError(f"pair {strip}, {m} is not pushout-perfectible")
    if len(found) > 1:
        raise PushoutError(f"several pushout candidates for {strip}, {m}")
    eta, move = found[0]
    if is_strip(nu, eta, k, allow_rank_k=True) != strip.rank:
        raise PushoutError(f"{eta}/{nu} is not a strip of rank {strip.rank}")
    return PushoutResult(Strip(nu, eta, k, strip.rank), move)


def pull(strip: Strip, m: Move) -> tuple[Strip, Move | None]:
    """Pullback of a final pair: ``strip = eta/nu`` and ``m = eta/mu``.

    Strings of ``m`` not matched by the strip are shifted down (row moves) or
    left (column moves) through the strip and removed from ``nu``.  When the
    result is not a valid pullback (interference) the move into ``nu`` that
    contains the shifted strings, with the same string diagram, and leaves a
    strip under ``mu`` is looked up instead.
    """
    if strip.outer != m.target:
        raise DomainError("the strip and the move must end at the same shape")
    eta, nu, mu, k = m.target, strip.inner, m.source, m.k
    s_cells = strip.cells
    if not _reasonable(m.strings, s_cells):
        raise CompatibilityError("final pair is not reasonable")
    if boundary(_intersection(mu, nu), k).cells - boundary(mu, k).cells - boundary(nu, k).cells:
        raise CompatibilityError("final pair is contiguous")
    infos = m.string_infos()
    length = _vector_length(k, len(eta), eta[0] if eta else 0)
    if m.kind == "row":
        mcols = modified_cols(nu, eta, k)
        kept = [
            i for i, info in enumerate(infos)
            if not (all(x in s_cells for x in m.strings[i]) and info.col_down in mcols)
        ]
        delta: Counter = Counter()
        for i in kept:
            delta.update(infos[i].delta_cs)
        beta = _as_vector(boundary(nu, k).cs, Counter({c: -v for c, v in delta.items()}), length)
        interfering = not (is_partition(beta) and min(beta) >= 0)
        shifted = _shift((c for i in kept for c in m.strings[i]), s_cells, "col", -1)
    else:
        mrows = modified_rows(nu, eta, k)
        kept = [
            i for i, info in enumerate(infos)
            if not (all(x in s_cells for x in m.strings[i]) and info.row_up in mrows)
        ]
        delta = Counter()
        for i in kept:
            delta.update(infos[i].delta_rs)
        if kept:
            beta = _as_vector(boundary(nu, k).rs, Counter({r: -v for r, v in delta.items()}), length)
            interfering = not (is_partition(beta) and min(beta) >= 0)
        else:
            interfering = not is_horizontal_strip(strip_zeros(boundary(mu, k).rs), strip_zeros(boundary(nu, k).rs))
        shifted = _shift((c for i in kept for c in m.strings[i]), s_cells, "row", -1)

    try:
        base = remove_cells(nu, shifted)
    except DomainError as exc:
        raise CompatibilityError(f"shifted strings cannot be removed from {nu}") from exc
    pattern = _first_diagram(m)

    def valid(lam: Partition, move: Move | None) -> bool:
        if move is not None and (move.kind != m.kind or _first_diagram(move) != pattern):
            return False
        return is_strip(lam, mu, k, allow_rank_k=True) == strip.rank

    if not interfering:
        if base == nu:
            move = None
        else:
            move = move_between(base, nu, k) if is_kshape(base, k) else None
            if move is None:
                raise PushoutError(f"{nu}/{base} is not a move")
        if not valid(base, move):
            raise PushoutError(f"non-interfering pullback {base} is invalid")
        return Strip(base, mu, k, strip.rank), move

    g = build_poset(k, sum(boundary(nu, k).rs))
    found = [
        (lam, move)
        for lam, move in g.pred[nu].items()
        if contains(base, lam) and shifted <= move.cells and valid(lam, move)
    ]
    if not found:
        raise CompatibilityError(f"final pair {strip}, {m} is not pullback-perfectible")
    if len(found) > 1:
        raise PushoutError(f"several pullback candidates for {strip}, {m}")
    lam, move = found[0]
    return Strip(lam, mu, k, strip.rank), move


def _path_from(g, p: Path) -> list[Move]:
    return [g.succ[a][b] for a, b in zip(p, p[1:])]


def pushout_sequence(strip: Strip, p: Path) -> tuple[Strip, Path]:
    """Canonical pushout sequence of a strip along a path.

    Returns the final maximal strip over the end of ``p`` and the output path
    from ``strip.outer`` (augmentation moves and nonempty pushed moves).
    """
    p = tuple(p)
    if not p or p[0] != strip.inner:
        raise DomainError("the path must start at the inner shape of the strip")
    k = strip.k
    g = build_poset(k, sum(boundary(p[0], k).rs))
    rho = strip.outer
    q = [rho]
    for lam_prev, m in zip(p, _path_from(g, p)):
        moves, rho = maximize_strip(lam_prev, rho, k)
        q.extend(x.target for x in moves)
        result = push(Strip(lam_prev, rho, k, strip.rank), m)
        rho = result.out_strip.outer
        if result.out_move is not None:
            q.append(rho)
    moves, rho = maximize_strip(p[-1], rho, k)
    q.extend(x.target for x in moves)
    return Strip(p[-1], rho, k, strip.rank), tuple(q)


def pullback_sequence(strip: Strip, q: Path) -> tuple[Strip, Path]:
    """Mirror of :func:`pushout_sequence`.

    ``strip = eta/nu`` and ``q`` runs from some ``mu`` to ``eta``.  Returns the
    reverse-maximal strip ``mu/lam`` and a path from ``lam`` to ``nu``.
    """
    q = tuple(q)
    if not q or q[-1] != strip.outer:
        raise DomainError("the path must end at the outer shape of the strip")
    k = strip.k
    g = build_poset(k, sum(boundary(q[0], k).rs))
    inner = strip.inner
    backwards = [inner]
    for i in range(len(q) - 1, 0, -1):
        moves, inner = reverse_maximize_strip(inner, q[i], k)
        backwards.extend(x.source for x in moves)
        s, m = pull(Strip(inner, q[i], k, strip.rank), g.succ[q[i - 1]][q[i]])
        inner = s.inner
        if m is not None:
            backwards.append(inner)
    moves, inner = reverse_maximize_strip(inner, q[0], k)
    backwards.extend(x.source for x in moves)
    return Strip(inner, q[0], k, strip.rank), tuple(reversed(backwards))


@dataclass(frozen=True)
class BijectionImage:
    weak: Tableau
    path: Path
    class_id: int

    @property
    def core(self) -> Partition:
        return self.weak.shape


def weak_bijection(t: Tableau) -> BijectionImage:
    """Image of a reverse-maximal tableau: a weak tableau of k-cores and the
    class of the accumulated path from the shape of ``t`` to the final core."""
    if t.flavor != REVERSE_MAXIMAL:
        raise DomainError("weak_bijection expects a reverse-maximal tableau")
    k = t.k
    cores: list[Partition] = [()]
    path: Path = ((),)
    for lam_prev, lam in zip(t.chain, t.chain[1:]):
        rank = is_strip(lam_prev, lam, k)
        if rank is None:
            raise DomainError(f"{lam}/{lam_prev} is not a strip")
        out, path = pushout_sequence(Strip(lam_prev, lam, k, rank), path)
        cores.append(out.outer)
    shape = t.shape
    g = build_poset(k, sum(boundary(shape, k).rs))
    cls = path_classes(g, shape, cores[-1]).locate(path)
    return BijectionImage(Tableau(tuple(cores), WEAK, k), path, cls)


def inverse_weak_bijection(weak: Tableau, path: Path) -> Tableau:
    """Recover the reverse-maximal tableau from a weak tableau and any path
    from the tableau's shape to the weak tableau's final core."""
    if weak.flavor != WEAK:
        raise DomainError("expected a weak tableau")
    k = weak.k
    path = tuple(path)
    if path[-1] != weak.shape:
        raise DomainError("the path must end at the shape of the weak tableau")
    chain = [path[0]]
    for i in range(len(weak.chain) - 1, 0, -1):
        inner, outer = weak.chain[i - 1], weak.chain[i]
        rank = sum(boundary(outer, k).rs) - sum(boundary(inner, k).rs)
        s, path = pullback_sequence(Strip(inner, outer, k, rank), path)
        chain.append(s.inner)
    if chain[-1] != ():
        raise PushoutError(f"pullback did not reach the empty shape: {chain}")
    return Tableau(tuple(reversed(chain)), REVERSE_MAXIMAL, k)


def strip_cells(strip: Strip) -> frozenset[Cell]:
    return skew_cells(strip.outer, strip.inner)
