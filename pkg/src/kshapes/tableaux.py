"""Tableaux of k-shapes, weak tableaux of cores, and their generating functions.

Symmetric functions are kept as monomial expansions: a Counter from weight
compositions (tuples of positive ranks, innermost strip first) to counts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .partitions import (
    DomainError,
    Partition,
    addable_cells,
    add_cells,
    boundary_size,
    cores_with_boundary,
    dominates,
    is_horizontal_strip,
    is_kcore,
    is_kshape,
    removable_cells,
    row_shape,
    transpose,
)
from .poset import build_poset, class_count, path_classes
from .strips import is_maximal, is_reverse_maximal, strips_above, strips_inside

MAXIMAL = "maximal"
REVERSE_MAXIMAL = "reverse-maximal"
WEAK = "weak"


@dataclass(frozen=True)
class Tableau:
    chain: tuple[Partition, ...]
    flavor: str
    k: int

    @property
    def weight(self) -> tuple[int, ...]:
        return tuple(
            boundary_size(b, self.k) - boundary_size(a, self.k) for a, b in zip(self.chain, self.chain[1:])
        )

    @property
    def shape(self) -> Partition:
        return self.chain[-1]


def _max_rank(k: int, allow_rank_k: bool) -> int:
    return k if allow_rank_k else k - 1


@lru_cache(maxsize=None)
def _inner_steps(shape: Partition, k: int, flavor: str, allow_rank_k: bool) -> tuple[Partition, ...]:
    out = []
    for r in range(1, _max_rank(k, allow_rank_k) + 1):
        for lam in strips_inside(shape, k, r, allow_rank_k):
            if flavor == REVERSE_MAXIMAL and is_reverse_maximal(lam, shape, k, allow_rank_k):
                out.append(lam)
            elif flavor == MAXIMAL and is_maximal(lam, shape, k, allow_rank_k):
                out.append(lam)
    return tuple(out)


# Weak strips on cores are computed from residues alone, without reference to
# k-shape strips, so that the two descriptions can be compared.


def residue(cell: tuple[int, int], modulus: int) -> int:
    return (cell[1] - cell[0]) % modulus


def apply_residue(core: Partition, i: int, modulus: int) -> Partition | None:
    """Add every addable cell of residue ``i``; None if there is none."""
    cells = [a for a in addable_cells(core) if residue(a, modulus) == i]
    if not cells:
        return None
    if any(residue(b, modulus) == i for b in removable_cells(core)):
        return None
    return add_cells(core, cells)


@lru_cache(maxsize=None)
def weak_strips_above(core: Partition, modulus: int, r: int) -> tuple[Partition, ...]:
    """Cores obtained from a modulus-core by a weak strip of rank ``r``.

    A weak strip adds cells of ``r`` distinct residues, one residue class at a
    time, and the total addition is a horizontal strip.
    """
    if not is_kcore(core, modulus):
        raise DomainError(f"{core} is not a {modulus}-core")
    found = set()
    for residues in combinations(range(modulus), r):
        for order in permutations(residues):
            shape: Partition | None = core
            for i in order:
                shape = apply_residue(shape, i, modulus)
                if shape is None:
                    break
            if shape is not None and is_horizontal_strip(shape, core):
                found.add(shape)
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def weak_strips_inside(core: Partition, modulus: int, r: int) -> tuple[Partition, ...]:
    n = boundary_size(core, modulus - 1) - r
    if n < 0:
        return ()
    return tuple(c for c in cores_with_boundary(modulus, n) if core in weak_strips_above(c, modulus, r))


def _chains(shape: Partition, inner_steps) -> list[tuple[Partition, ...]]:
    if not shape:
        return [((),)]
    out = []
    for lam in inner_steps(shape):
        for chain in _chains(lam, inner_steps):
            out.append(chain + (shape,))
    return out


def enumerate_tableaux(shape: Partition, k: int, flavor: str, allow_rank_k: bool = False) -> list[Tableau]:
    """All tableaux of the given flavor from the empty shape to ``shape``.

    For the weak flavor ``shape`` must be a k-core and strips are weak strips
    of k-cores (residues mod k) of rank at most k-1.
    """
    if flavor == WEAK:
        if not is_kcore(shape, k):
            raise DomainError(f"{shape} is not a {k}-core")

        def steps(s: Partition):
            return [c for r in range(1, k) for c in weak_strips_inside(s, k, r)]

    else:
        if not is_kshape(shape, k):
            raise DomainError(f"{shape} is not a {k}-shape")

        def steps(s: Partition):
            return _inner_steps(s, k, flavor, allow_rank_k)

    return [Tableau(chain, flavor, k) for chain in _chains(shape, steps)]


@lru_cache(maxsize=None)
def generating_function(shape: Partition, k: int, flavor: str, allow_rank_k: bool = False) -> Counter:
    """Monomial expansion of the tableau generating function of ``shape``."""
    if not shape:
        return Counter({(): 1})
    out: Counter = Counter()
    if flavor == WEAK:
        inner = [(c, r) for r in range(1, k) for c in weak_strips_inside(shape, k, r)]
    else:
        inner = [(lam, boundary_size(shape, k) - boundary_size(lam, k)) for lam in _inner_steps(shape, k, flavor, allow_rank_k)]
    for lam, r in inner:
        for w, c in generating_function(lam, k, flavor, allow_rank_k).items():
            out[w + (r,)] += c
    return out


def dkr(shape: Partition, k: int, allow_rank_k: bool = False) -> Counter:
    """Reverse-maximal tableau generating function of a k-shape."""
    return generating_function(shape, k, REVERSE_MAXIMAL, allow_rank_k)


def weak_function(core: Partition, kk: int) -> Counter:
    """Weak tableau generating function of a kk-core (weights at most kk-1)."""
    return generating_function(core, kk, WEAK)


def decompose_into_weak(shape: Partition, k: int) -> dict[Partition, int]:
    """{k-core rho: number of path classes from ``shape`` to rho}, zeros dropped."""
    n = boundary_size(shape, k)
    g = build_poset(k, n)
    out = {}
    for rho in g.minima():
        c = len(path_classes(g, shape, rho))
        if c:
            out[rho] = c
    return out


def weak_expansion(shape: Partition, k: int) -> Counter:
    """Sum over k-cores rho of (class count) times the weak function of rho."""
    total: Counter = Counter()
    for rho, c in decompose_into_weak(shape, k).items():
        for w, x in weak_function(rho, k).items():
            total[w] += c * x
    return total


def is_symmetric(series: Counter) -> bool:
    for w, c in series.items():
        for p in set(permutations(w)):
            if series.get(p, 0) != c:
                return False
    return True


def dominance_triangular(series: Counter, top: Partition) -> bool:
    """Every weight with nonzero coefficient, sorted, is dominated by ``top``."""
    return all(dominates(top, tuple(sorted(w, reverse=True))) for w, c in series.items() if c)


def leading_coefficient(series: Counter, top: Partition) -> int:
    return sum(c for w, c in series.items() if tuple(sorted(w, reverse=True)) == top and w == top)


def pieri_sides(k: int, lam: Partition, r: int) -> dict[Partition, tuple[int, int]]:
    """Both sides of the Pieri identity for every (k+1)-core rho of the right size.

    Left: sum over rank-r reverse-maximal strips rho/mu of classes(mu, lam).
    Right: sum over rank-r maximal strips nu/lam of classes(rho, nu).
    """
    n = boundary_size(lam, k)
    maximal_above = [nu for nu in strips_above(lam, k, r) if is_maximal(lam, nu, k)]
    out = {}
    for rho in build_poset(k, n + r).maxima():
        left = sum(
            class_count(k, mu, lam)
            for mu in strips_inside(rho, k, r)
            if is_reverse_maximal(mu, rho, k)
        )
        right = sum(class_count(k, rho, nu) for nu in maximal_above)
        out[rho] = (left, right)
    return out


def pieri_identity_check(k: int, lam: Partition, r: int) -> bool:
    return all(a == b for a, b in pieri_sides(k, lam, r).values())


def homology_coefficient_vector(shape: Partition, k: int, graded: bool = True) -> dict[Partition, Counter]:
    """{(k+1)-core lam: sum over classes from lam to ``shape`` of t^charge}.

    With ``graded`` false every class contributes 1 (the t=1 value).
    """
    g = build_poset(k, boundary_size(shape, k))
    out = {}
    for top in g.maxima():
        classes = path_classes(g, top, shape)
        if len(classes):
            out[top] = classes.polynomial() if graded else Counter({0: len(classes)})
    return out


def transpose_counter(series: dict[Partition, Counter]) -> dict[Partition, Counter]:
    return {transpose(p): v for p, v in series.items()}


def row_shape_of(shape: Partition, k: int) -> Partition:
    return row_shape(shape, k)
