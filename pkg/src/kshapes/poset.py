"""The k-shape poset, its paths, and diamond-equivalence classes of paths."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .moves import Move, enumerate_moves
from .partitions import (
    DomainError,
    Partition,
    boundary_size,
    core_from_bounded,
    enumerate_kshapes,
    is_kcore,
    partitions_of,
)

Path = tuple[Partition, ...]
"""A path is the sequence of its vertices; an edge is determined by its endpoints."""


@dataclass(frozen=True, eq=False)
class PosetGraph:
    k: int
    n: int
    vertices: tuple[Partition, ...]
    succ: dict[Partition, dict[Partition, Move]] = field(repr=False)
    pred: dict[Partition, dict[Partition, Move]] = field(repr=False)

    @property
    def edges(self) -> list[Move]:
        return [m for v in self.vertices for m in self.succ[v].values()]

    def move(self, a: Partition, b: Partition) -> Move:
        return self.succ[a][b]

    def maxima(self) -> list[Partition]:
        return [v for v in self.vertices if not self.pred[v]]

    def minima(self) -> list[Partition]:
        return [v for v in self.vertices if not self.succ[v]]


@lru_cache(maxsize=None)
def build_poset(k: int, n: int) -> PosetGraph:
    vertices = enumerate_kshapes(k, n)
    succ: dict[Partition, dict[Partition, Move]] = {v: {} for v in vertices}
    pred: dict[Partition, dict[Partition, Move]] = {v: {} for v in vertices}
    for v in vertices:
        for m in enumerate_moves(v, k):
            if m.target in succ[v]:
                raise AssertionError(f"two moves from {v} to {m.target}")  # pragma: no cover
            succ[v][m.target] = m
            pred[m.target][v] = m
    return PosetGraph(k, n, vertices, succ, pred)


def poset_for(shape: Partition, k: int) -> PosetGraph:
    return build_poset(k, boundary_size(shape, k))


def path_charge(g: PosetGraph, p: Path) -> int:
    return sum(g.succ[a][b].charge for a, b in zip(p, p[1:]))


def path_moves(g: PosetGraph, p: Path) -> list[Move]:
    return [g.succ[a][b] for a, b in zip(p, p[1:])]


@lru_cache(maxsize=None)
def _reaches(g: PosetGraph, target: Partition) -> frozenset[Partition]:
    seen = {target}
    stack = [target]
    while stack:
        v = stack.pop()
        for u in g.pred[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return frozenset(seen)


def all_paths(g: PosetGraph, start: Partition, end: Partition) -> list[Path]:
    """Every directed path from ``start`` to ``end``, sorted."""
    if start not in g.succ or end not in g.succ:
        raise DomainError("endpoints must be vertices of the poset")
    ok = _reaches(g, end)
    out: list[Path] = []

    def walk(p: list[Partition]) -> None:
        v = p[-1]
        if v == end:
            out.append(tuple(p))
            return
        for w in g.succ[v]:
            if w in ok:
                p.append(w)
                walk(p)
                p.pop()

    if start in ok:
        walk([start])
    return sorted(out)


def diamond_window_equal(g: PosetGraph, p1: Path, p2: Path) -> bool:
    """Whether two short paths with common endpoints form an allowed window swap."""
    if p1[0] != p2[0] or p1[-1] != p2[-1]:
        raise DomainError("paths must share endpoints")
    lengths = (len(p1) - 1, len(p2) - 1)
    if p1 == p2:
        return True
    if lengths not in ((2, 2), (2, 1), (1, 2)):
        return False
    return path_charge(g, p1) == path_charge(g, p2)


@dataclass(frozen=True)
class PathClassSet:
    source: Partition
    target: Partition
    paths: tuple[Path, ...]
    class_of: tuple[int, ...]
    class_charge: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.class_charge)

    def locate(self, p: Path) -> int:
        """Class id of the path ``p``."""
        return self.class_of[self.paths.index(tuple(p))]

    def representatives(self) -> list[Path]:
        reps: dict[int, Path] = {}
        for p, c in zip(self.paths, self.class_of):
            reps.setdefault(c, p)
        return [reps[c] for c in range(len(self.class_charge))]

    def members(self, cls: int) -> list[Path]:
        return [p for p, c in zip(self.paths, self.class_of) if c == cls]

    def polynomial(self) -> Counter:
        return Counter(self.class_charge)


def _short_paths(g: PosetGraph, u: Partition, v: Partition) -> list[Path]:
    out: list[Path] = []
    if v in g.succ[u]:
        out.append((u, v))
    for w in g.succ[u]:
        if v in g.succ[w]:
            out.append((u, w, v))
    return out


@lru_cache(maxsize=None)
def path_classes(g: PosetGraph, start: Partition, end: Partition) -> PathClassSet:
    """Union-find over all paths, joining paths related by one window swap."""
    paths = all_paths(g, start, end)
    index = {p: i for i, p in enumerate(paths)}
    parent = list(range(len(paths)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    short: dict[tuple[Partition, Partition], list[tuple[Path, int]]] = {}

    def windows(u: Partition, v: Partition) -> list[tuple[Path, int]]:
        key = (u, v)
        if key not in short:
            short[key] = [(q, path_charge(g, q)) for q in _short_paths(g, u, v)]
        return short[key]

    for i, p in enumerate(paths):
        for width in (1, 2):
            for a in range(len(p) - width):
                b = a + width
                here = p[a : b + 1]
                here_charge = path_charge(g, here)
                for q, q_charge in windows(p[a], p[b]):
                    if q == here or q_charge != here_charge:
                        continue
                    if width == 1 and len(q) == 2:
                        continue
                    j = index[p[:a] + q + p[b + 1 :]]
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj

    roots: dict[int, int] = {}
    class_of = []
    charges: list[int] = []
    for i, p in enumerate(paths):
        r = find(i)
        if r not in roots:
            roots[r] = len(roots)
            charges.append(path_charge(g, p))
        c = roots[r]
        if charges[c] != path_charge(g, p):
            raise AssertionError("charge is not constant on a path class")  # pragma: no cover
        class_of.append(c)
    return PathClassSet(start, end, tuple(paths), tuple(class_of), tuple(charges))


def class_count(k: int, start: Partition, end: Partition) -> int:
    n = boundary_size(start, k)
    if boundary_size(end, k) != n:
        return 0
    return len(path_classes(build_poset(k, n), start, end))


def branching_polynomial(k: int, mu_core: Partition, lam_core: Partition) -> Counter:
    """Sum of t^charge over path classes from the (k+1)-core to the k-core.

    Returned as a Counter mapping exponent to coefficient.
    """
    if not is_kcore(lam_core, k + 1):
        raise DomainError(f"{lam_core} is not a {k + 1}-core")
    if not is_kcore(mu_core, k):
        raise DomainError(f"{mu_core} is not a {k}-core")
    n = boundary_size(lam_core, k)
    if boundary_size(mu_core, k) != n:
        raise DomainError("cores have different boundary sizes")
    return path_classes(build_poset(k, n), lam_core, mu_core).polynomial()


def format_poly(poly: Counter) -> str:
    """Render like ``t^2+t^3``; zero is the empty string."""
    terms = []
    for e in sorted(e for e, c in poly.items() if c):
        c = poly[e]
        mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
        if c != 1:
            mono = str(c) if e == 0 else f"{c}{mono}"
        terms.append(mono)
    return "+".join(terms)


def parse_poly(text: str) -> Counter:
    out: Counter = Counter()
    text = text.strip()
    if not text:
        return out
    for term in text.split("+"):
        if "t" not in term:
            out[0] += int(term)
            continue
        coeff, _, rest = term.partition("t")
        exp = int(rest[1:]) if rest.startswith("^") else 1
        out[exp] += int(coeff) if coeff else 1
    return out


def branching_table(k: int, degree: int) -> dict[tuple[Partition, Partition], Counter]:
    """Nonzero graded branching polynomials keyed by (mu, lambda) bounded labels.

    ``mu`` runs over (k-1)-bounded and ``lambda`` over k-bounded partitions of
    ``degree``; labels are translated to cores before counting classes.
    """
    g = build_poset(k, degree)
    out = {}
    for lam in partitions_of(degree, k):
        top = core_from_bounded(lam, k)
        for mu in partitions_of(degree, k - 1):
            bottom = core_from_bounded(mu, k - 1)
            poly = path_classes(g, top, bottom).polynomial()
            if poly:
                out[(mu, lam)] = poly
    return out
