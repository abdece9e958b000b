"""Exhaustive verification suites shared by the command line and the tests.

Each suite returns a :class:`Report`; ``lines`` is human-readable progress and
``failures`` lists every counterexample found.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable

from .partitions import (
    bounded_from_core,
    core_from_bounded,
    enumerate_kshapes,
    format_partition,
    is_kcore,
    parse_partition,
    partitions_of,
    row_shape,
    transpose,
)
from .poset import branching_table, build_poset, format_poly, parse_poly, path_charge, path_classes
from .pushout import inverse_weak_bijection, pull, push, pushout_sequence, weak_bijection
from .strips import Strip, is_maximal, is_reverse_maximal, is_strip, strips_above, strips_inside
from .tableaux import (
    REVERSE_MAXIMAL,
    WEAK,
    decompose_into_weak,
    dkr,
    dominance_triangular,
    enumerate_tableaux,
    is_symmetric,
    pieri_sides,
    weak_expansion,
)


@dataclass
class Report:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failures"


# -- branching tables ------------------------------------------------------


def load_golden_tables() -> dict[tuple[int, int, str, str], str]:
    text = resources.files("kshapes").joinpath("data/branching_tables.csv").read_text()
    out = {}
    for row in csv.DictReader(io.StringIO(text)):
        key = (int(row["k"]), int(row["degree"]), row["mu"], row["lambda"])
        out[key] = row["poly"]
    return out


def table_rows(k: int, degree: int, graded: bool = True) -> list[tuple[int, int, str, str, str]]:
    """Rows (k, degree, mu, lambda, poly) in deterministic order."""
    rows = []
    for (mu, lam), poly in branching_table(k, degree).items():
        value = format_poly(poly) if graded else str(sum(poly.values()))
        rows.append((k, degree, format_partition(mu), format_partition(lam), value))
    return sorted(rows, key=lambda r: (parse_partition(r[2]), parse_partition(r[3])))


def tables_csv(rows: Iterable[tuple]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "degree", "mu", "lambda", "poly"])
    w.writerows(rows)
    return buf.getvalue()


def verify_tables(degrees: Iterable[int] = range(2, 7)) -> Report:
    report = Report("branching tables")
    golden = load_golden_tables()
    degrees = list(degrees)
    computed = {}
    for degree in degrees:
        for k in range(2, degree + 1):
            for row in table_rows(k, degree):
                computed[row[:4]] = row[4]
    wanted = {key: v for key, v in golden.items() if key[1] in degrees}
    for key in sorted(set(wanted) | set(computed)):
        got, want = computed.get(key, ""), wanted.get(key, "")
        report.checked += 1
        if parse_poly(got) != parse_poly(want):
            report.fail(f"k={key[0]} degree={key[1]} mu={key[2]} lambda={key[3]}: got {got!r}, want {want!r}")
    report.lines.append(f"{len(computed)} nonzero entries computed, {len(wanted)} in golden file")
    return report


# -- tableaux identities ---------------------------------------------------


def verify_decomposition(ks: Iterable[int], max_n: int) -> Report:
    """dkr of every k-shape equals its weak-function expansion over path classes."""
    report = Report("tableau decomposition")
    for k in ks:
        for n in range(max_n + 1):
            for mu in enumerate_kshapes(k, n):
                report.checked += 1
                lhs, rhs = +dkr(mu, k), +weak_expansion(mu, k)
                if lhs != rhs:
                    report.fail(f"k={k} shape={format_partition(mu)}: {dict(lhs)} != {dict(rhs)}")
    return report


def verify_pieri(ks: Iterable[int], max_n: int, ranks: Iterable[int] | None = None) -> Report:
    report = Report("pieri identity")
    for k in ks:
        rs = list(ranks) if ranks is not None else list(range(1, k))
        for n in range(max_n + 1):
            for lam in enumerate_kshapes(k, n):
                for r in rs:
                    for rho, (left, right) in pieri_sides(k, lam, r).items():
                        report.checked += 1
                        if left != right:
                            report.fail(
                                f"k={k} lambda={format_partition(lam)} r={r} rho={format_partition(rho)}: {left} != {right}"
                            )
    return report


def verify_structure(ks: Iterable[int], max_n: int) -> Report:
    """Extremal elements, constant charge on path classes, transpose symmetry
    of class counts, symmetry and triangularity of dkr, and the bounded-partition/core round trip."""
    report = Report("structural properties")
    for k in ks:
        for n in range(max_n + 1):
            g = build_poset(k, n)
            cores_k = {v for v in g.vertices if is_kcore(v, k)}
            cores_k1 = {v for v in g.vertices if is_kcore(v, k + 1)}
            report.checked += 2
            if set(g.minima()) != cores_k:
                report.fail(f"k={k} n={n}: minima are not the {k}-cores")
            if set(g.maxima()) != cores_k1:
                report.fail(f"k={k} n={n}: maxima are not the {k + 1}-cores")
            for start in g.vertices:
                for end in g.vertices:
                    classes = path_classes(g, start, end)
                    if not classes.paths:
                        continue
                    report.checked += 1
                    for path, c in zip(classes.paths, classes.class_of):
                        if path_charge(g, path) != classes.class_charge[c]:
                            report.fail(f"k={k} {format_partition(start)}->{format_partition(end)}: charge varies in class {c}")
            for top in g.maxima():
                for bottom in g.minima():
                    report.checked += 1
                    a = len(path_classes(g, top, bottom))
                    b = len(path_classes(g, transpose(top), transpose(bottom)))
                    if a != b:
                        report.fail(f"k={k} {format_partition(top)}->{format_partition(bottom)}: {a} classes, transpose {b}")
            for v in g.vertices:
                report.checked += 1
                series = dkr(v, k)
                if not is_symmetric(series):
                    report.fail(f"k={k} dkr({format_partition(v)}) is not symmetric")
                if not dominance_triangular(series, row_shape(v, k)):
                    report.fail(f"k={k} dkr({format_partition(v)}) is not triangular")
            for mu in partitions_of(n, k):
                report.checked += 1
                if bounded_from_core(core_from_bounded(mu, k), k) != mu:
                    report.fail(f"k={k} bounded {format_partition(mu)} does not round trip")
    return report


# -- pushout / pullback ----------------------------------------------------


def verify_roundtrip(ks: Iterable[int], max_n: int) -> Report:
    """pull(push(S, m)) = (S, m) for maximal S and push(pull(T, n)) = (T, n)
    for reverse-maximal T, with the empty-move cases checked separately."""
    report = Report("push/pull round trip")
    tally: Counter = Counter()
    for k in ks:
        for n in range(max_n + 1):
            g = build_poset(k, n)
            for lam in g.vertices:
                for r in range(1, k):
                    for mu in strips_above(lam, k, r):
                        if not is_maximal(lam, mu, k):
                            continue
                        strip = Strip(lam, mu, k, r)
                        for nu, m in g.succ[lam].items():
                            report.checked += 1
                            tag = f"k={k} S={format_partition(mu)}/{format_partition(lam)} m->{format_partition(nu)}"
                            try:
                                res = push(strip, m)
                                if res.out_move is None:
                                    tally["push empty"] += 1
                                    # m must be a reverse augmentation move of the output strip
                                    if res.out_strip.outer != mu or is_strip(lam, mu, k) is None:
                                        report.fail(f"{tag}: empty pushout is not a reverse augmentation")
                                    continue
                                back = pull(res.out_strip, res.out_move)
                            except Exception as exc:  # reported, not raised
                                report.fail(f"{tag}: {type(exc).__name__}: {exc}")
                                continue
                            tally["pull∘push"] += 1
                            if back != (strip, m):
                                report.fail(f"{tag}: pull(push) = {back}")
            for eta in g.vertices:
                for r in range(1, k):
                    for nu in strips_inside(eta, k, r):
                        if not is_reverse_maximal(nu, eta, k):
                            continue
                        strip = Strip(nu, eta, k, r)
                        for mu, m in g.pred[eta].items():
                            report.checked += 1
                            tag = f"k={k} S~={format_partition(eta)}/{format_partition(nu)} m~<-{format_partition(mu)}"
                            try:
                                s, back = pull(strip, m)
                                if back is None:
                                    tally["pull empty"] += 1
                                    # m~ must be an augmentation move of the recovered strip
                                    if s.inner != nu or is_strip(nu, mu, k) is None:
                                        report.fail(f"{tag}: empty pullback is not an augmentation")
                                    continue
                                res = push(s, back)
                            except Exception as exc:
                                report.fail(f"{tag}: {type(exc).__name__}: {exc}")
                                continue
                            tally["push∘pull"] += 1
                            if (res.out_strip, res.out_move) != (strip, m):
                                report.fail(f"{tag}: push(pull) = {res}")
    report.lines.append(", ".join(f"{key}: {v}" for key, v in sorted(tally.items())))
    return report


def verify_bijection(ks: Iterable[int], max_n: int) -> Report:
    """Injectivity, weight preservation and image size of the bijection, plus
    recovery of every tableau from each representative path of its class."""
    report = Report("weak bijection")
    for k in ks:
        for n in range(max_n + 1):
            g = build_poset(k, n)
            for lam in enumerate_kshapes(k, n):
                tabs = enumerate_tableaux(lam, k, REVERSE_MAXIMAL)
                images = set()
                left_weights: Counter = Counter()
                for t in tabs:
                    report.checked += 1
                    try:
                        im = weak_bijection(t)
                    except Exception as exc:
                        report.fail(f"k={k} T={t.chain}: {type(exc).__name__}: {exc}")
                        continue
                    if im.weak.weight != t.weight:
                        report.fail(f"k={k} T={t.chain}: weight {t.weight} -> {im.weak.weight}")
                    key = (im.weak.chain, im.class_id)
                    if key in images:
                        report.fail(f"k={k} T={t.chain}: image {key} hit twice")
                    images.add(key)
                    left_weights[t.weight] += 1
                    for rep in path_classes(g, lam, im.core).members(im.class_id):
                        if inverse_weak_bijection(im.weak, rep) != t:
                            report.fail(f"k={k} T={t.chain}: inverse via {rep} differs")
                right_weights: Counter = Counter()
                total = 0
                for rho, count in decompose_into_weak(lam, k).items():
                    for u in enumerate_tableaux(rho, k, WEAK):
                        right_weights[u.weight] += count
                        total += count
                if len(tabs) != total or +left_weights != +right_weights:
                    report.fail(f"k={k} shape={format_partition(lam)}: {len(tabs)} tableaux vs {total} pairs")
                report.lines.append(
                    f"k={k} shape={format_partition(lam)}: tableaux={len(tabs)} pairs={total} "
                    f"weights_equal={+left_weights == +right_weights}"
                )
    return report


def verify_equivalence(ks: Iterable[int], max_n: int) -> Report:
    """Equivalent input paths give the same final strip and equivalent output paths."""
    report = Report("pushout of equivalent paths")
    for k in ks:
        for n in range(max_n + 1):
            g = build_poset(k, n)
            for a in g.vertices:
                for b in g.vertices:
                    classes = path_classes(g, a, b)
                    if not classes.paths:
                        continue
                    for r in range(1, k):
                        for mu in strips_above(a, k, r):
                            if not is_maximal(a, mu, k):
                                continue
                            outs: dict[int, list] = {}
                            for p, c in zip(classes.paths, classes.class_of):
                                outs.setdefault(c, []).append(pushout_sequence(Strip(a, mu, k, r), p))
                            for c, results in outs.items():
                                report.checked += 1
                                strips = {s for s, _ in results}
                                if len(strips) != 1:
                                    report.fail(f"k={k} {a}->{b} class {c}: final strips differ {strips}")
                                    continue
                                (s,) = strips
                                out_classes = path_classes(build_poset(k, n + r), mu, s.outer)
                                if len({out_classes.locate(q) for _, q in results}) != 1:
                                    report.fail(f"k={k} {a}->{b} class {c}: output paths not equivalent")
    return report
