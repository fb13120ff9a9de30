"""Independent brute-force cross-check of the decomposition.

Nothing here goes through the complex or equivalence modules' own reasoning:
cliques come from plain ``itertools`` scans, one-class faces are re-derived
from the raw relation table, and clusters are rebuilt with a small union-find.
The decomposition under test is only read, never consulted for answers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .diskcomplex import ClusterSet, cluster_decomposition
from .equivalence import ghs_equal_exact
from .model import Side, SplittingModel, synthesize_meridians
from .reduction import CleaningMismatch, preweak_reduce, thin_genus_formula, weak_reduce
from .surfaces import closed, euler_char


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def groups(self) -> list[tuple]:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return sorted(tuple(sorted(g)) for g in out.values())


@dataclass
class OracleReport:
    failures: list[str] = field(default_factory=list)
    checked_pairs: int = 0
    checked_simplices: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)


def _disjoint(m: SplittingModel, a: str, b: str) -> bool:
    return frozenset((a, b)) in m.relations.disjoint


def brute_cliques(m: SplittingModel) -> set[tuple[str, ...]]:
    ids = sorted(d.id for d in m.disks)
    out = set()
    k = 1
    layer = [(x,) for x in ids]
    while layer:
        out.update(layer)
        k += 1
        layer = [s for s in combinations(ids, k) if all(_disjoint(m, a, b) for a, b in combinations(s, 2))]
    return out


def raw_pairs(m: SplittingModel) -> list[tuple[str, str]]:
    side = {d.id: d.side for d in m.disks}
    out = []
    for p in m.relations.disjoint:
        a, b = sorted(p)
        if side[a] is not side[b]:
            out.append((a, b) if side[a] is Side.V else (b, a))
    return sorted(out)


def _raw_torus_cutoff(m: SplittingModel, d: str, partner: str) -> str | None:
    """Label of the torus piece if d cuts off a solid torus away from partner."""
    disk = next(x for x in m.disks if x.id == d)
    if disk.sep is None:
        return None
    near = m.relations.locate[(d, partner)]
    far = "B" if near == "A" else "A"
    g = disk.sep.ga if far == "A" else disk.sep.gb
    minus = disk.sep.minus_a if far == "A" else disk.sep.minus_b
    return far if g == 1 and not minus else None


def raw_one_class(m: SplittingModel, same: tuple[str, str], cross: str) -> bool:
    kinds = {d.id: d.sep for d in m.disks}
    for d, e in (same, same[::-1]):
        if kinds[d] is None or kinds[e] is not None:
            continue
        t = _raw_torus_cutoff(m, d, cross)
        if t is not None and m.relations.locate.get((d, e)) == t:
            return True
    return False


def oracle_clusters(m: SplittingModel) -> list[tuple[tuple[str, str], ...]]:
    """Weak reducing pairs grouped by one-class-face closure, then split by
    pairwise GHS equality."""
    pairs = raw_pairs(m)
    side = {d.id: d.side for d in m.disks}
    uf = UnionFind(pairs)
    ids = sorted(side)
    for a, b, c in combinations(ids, 3):
        if not (_disjoint(m, a, b) and _disjoint(m, a, c) and _disjoint(m, b, c)):
            continue
        tri = (a, b, c)
        for x in tri:
            rest = tuple(y for y in tri if y != x)
            if side[rest[0]] is side[rest[1]] and side[x] is not side[rest[0]]:
                if raw_one_class(m, rest, x):
                    p1 = tuple(sorted((rest[0], x), key=lambda z: side[z].value))
                    p2 = tuple(sorted((rest[1], x), key=lambda z: side[z].value))
                    uf.union(p1, p2)
    out = []
    for g in uf.groups():
        # refine: a closure class may only hold pairwise-equal reductions
        buckets: list[list] = []
        for p in g:
            for b in buckets:
                if ghs_equal_exact(m, b[0], p):
                    b.append(p)
                    break
            else:
                buckets.append([p])
        out.extend(tuple(b) for b in buckets)
    # classes that the closure split but GHS equality joins
    merged = UnionFind(range(len(out)))
    for i, j in combinations(range(len(out)), 2):
        if ghs_equal_exact(m, out[i][0], out[j][0]):
            merged.union(i, j)
    final = [tuple(sorted(p for i in grp for p in out[i])) for grp in merged.groups()]
    return sorted(final)


def _check_pair(m: SplittingModel, v: str, w: str, rep: OracleReport) -> None:
    raw = preweak_reduce(m, v, w)
    if euler_char(raw.thin) != euler_char(closed(m.n)) + 4:
        rep.fail(f"({v},{w}): chi(F_VW)={euler_char(raw.thin)}, expected {euler_char(closed(m.n)) + 4}")
    try:
        g = weak_reduce(m, v, w)
    except CleaningMismatch as e:
        rep.fail(str(e))
        return
    got = sorted(p.genus for p in g.thin)
    want = thin_genus_formula(m, v, w)
    if got != want:
        rep.fail(f"({v},{w}): thin genera {got}, formula {want}")


def oracle_check(m: SplittingModel, cs: ClusterSet | None = None, synthesize: bool = False) -> OracleReport:
    if synthesize:
        m = synthesize_meridians(m)
    if cs is None:
        cs = cluster_decomposition(m)
    rep = OracleReport()

    brute = brute_cliques(m)
    got = set(cs.complex.simplices)
    rep.checked_simplices = len(brute)
    for s in sorted(brute - got):
        rep.fail(f"simplex {s} missing from the complex")
    for s in sorted(got - brute):
        rep.fail(f"simplex {s} is not a clique")

    pairs = raw_pairs(m)
    rep.checked_pairs = len(pairs)
    if sorted(cs.membership) != pairs:
        rep.fail(f"membership covers {sorted(cs.membership)}, expected {pairs}")

    expected = oracle_clusters(m)
    actual: dict[int, list] = {}
    for p, i in cs.membership.items():
        actual.setdefault(i, []).append(p)
    actual_groups = sorted(tuple(sorted(g)) for g in actual.values())
    if actual_groups != expected:
        rep.fail(f"clusters {actual_groups} differ from oracle {expected}")

    for p, q in combinations(pairs, 2):
        same = cs.membership.get(p) == cs.membership.get(q)
        if same != ghs_equal_exact(m, p, q):
            rep.fail(f"{p} and {q}: membership says {same}, GHS equality disagrees")

    for i, cl in enumerate(cs.clusters):
        members = [p for p, j in cs.membership.items() if j == i]
        for v, w in members:
            if v not in cl.vertices or w not in cl.vertices:
                rep.fail(f"pair ({v},{w}) not inside its cluster's vertex set {cl.vertices}")

    for v, w in pairs:
        _check_pair(m, v, w, rep)
    return rep


__all__ = ["UnionFind", "OracleReport", "brute_cliques", "raw_pairs", "raw_one_class",
           "oracle_clusters", "oracle_check"]
