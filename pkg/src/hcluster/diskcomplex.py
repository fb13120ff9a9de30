"""The disk complex of a model and its equivalent-cluster decomposition.

The complex is the flag complex of the disjointness graph.  Only the declared
disks are vertices, so every cluster computed here is the restriction of the
true (infinite) cluster to the model.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import networkx as nx

from .equivalence import (
    CenterPair,
    FaceRef,
    center_of,
    face_one_class,
    faces,
    is_center,
)
from .model import ModelError, Side, SplittingModel, synthesize_meridians
from .reduction import TenType, classify_ten

Simplex = tuple[str, ...]

# default cap on the number of enumerated simplices
MAX_SIMPLICES = 200_000

BARE_TYPES = {TenType.A_III, TenType.B_W_II, TenType.B_V_II, TenType.C, TenType.D}


class ComplexTooLarge(RuntimeError):
    pass


class NotACenter(ModelError):
    pass


def _skey(s: Simplex):
    return (len(s), s)


@dataclass(frozen=True)
class DiskComplex:
    vertices: tuple[str, ...]
    sides: dict[str, Side]
    simplices: tuple[Simplex, ...]

    @property
    def dimension(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    def crossing(self, s: Simplex) -> bool:
        return len({self.sides[x] for x in s}) == 2


def disjointness_graph(m: SplittingModel) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(m.ids())
    for p in m.relations.disjoint:
        g.add_edge(*sorted(p))
    return g


def build_complex(m: SplittingModel, max_simplices: int = MAX_SIMPLICES) -> DiskComplex:
    g = disjointness_graph(m)
    out = []
    for clique in nx.enumerate_all_cliques(g):
        out.append(tuple(sorted(clique)))
        if len(out) > max_simplices:
            raise ComplexTooLarge(
                f"more than {max_simplices} simplices on {g.number_of_nodes()} disks; "
                "reduce the disk count or raise the cap"
            )
    return DiskComplex(
        tuple(m.ids()),
        {d.id: d.side for d in m.disks},
        tuple(sorted(out, key=_skey)),
    )


@dataclass(frozen=True)
class DvwSubset:
    simplices: tuple[Simplex, ...]
    vertices: tuple[str, ...]
    components: tuple[tuple[str, ...], ...]

    def component_of(self, disk_id: str) -> int:
        for i, comp in enumerate(self.components):
            if disk_id in comp:
                return i
        raise KeyError(disk_id)


def dvw(m: SplittingModel, c: DiskComplex) -> DvwSubset:
    """Simplices lying in some simplex that meets both sides."""
    keep = []
    for s in c.simplices:
        if c.crossing(s):
            keep.append(s)
            continue
        other = c.sides[s[0]].other
        common = set.intersection(*(m.neighbours(x) for x in s))
        if any(c.sides[x] is other for x in common):
            keep.append(s)
    g = nx.Graph()
    for s in keep:
        g.add_nodes_from(s)
        if len(s) == 2:
            g.add_edge(*s)
    comps = sorted(tuple(sorted(cc)) for cc in nx.connected_components(g))
    return DvwSubset(tuple(keep), tuple(sorted(g.nodes)), tuple(comps))


@dataclass(frozen=True)
class Star:
    hub: str
    leaves: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.hub}[{','.join(self.leaves)}]"


@dataclass(frozen=True)
class EquivCluster:
    center: CenterPair
    cluster_type: TenType
    vertices: tuple[str, ...]
    simplices: tuple[Simplex, ...]
    v_star: Star
    w_star: Star

    @property
    def dimension(self) -> int:
        return max(len(s) for s in self.simplices) - 1

    def contains(self, simplex) -> bool:
        return tuple(sorted(simplex)) in set(self.simplices)


def _leaves(m: SplittingModel, hub: str, partner: str) -> tuple[str, ...]:
    side = m.disk(hub).side
    if m.disk(hub).is_sep:
        return ()
    out = []
    for d in m.side_disks(side):
        if d.is_sep and m.meridian_of(d.id) == hub and m.is_disjoint(d.id, partner):
            out.append(d.id)
    return tuple(out)


def induced(m: SplittingModel, vertices) -> tuple[Simplex, ...]:
    g = disjointness_graph(m).subgraph(vertices)
    return tuple(sorted((tuple(sorted(c)) for c in nx.enumerate_all_cliques(g)), key=_skey))


def equivalent_cluster(m: SplittingModel, center: CenterPair) -> EquivCluster:
    if not is_center(m, center):
        raise NotACenter(f"{center} is not a center")
    v, w = center.v_id, center.w_id
    kind = classify_ten(m, v, w)
    if kind in BARE_TYPES:
        v_leaves = w_leaves = ()
    else:
        v_leaves = _leaves(m, v, w)
        w_leaves = _leaves(m, w, v)
    verts = tuple(sorted({v, w, *v_leaves, *w_leaves}))
    return EquivCluster(center, kind, verts, induced(m, verts), Star(v, v_leaves), Star(w, w_leaves))


@dataclass(frozen=True)
class ClusterSet:
    model: SplittingModel
    complex: DiskComplex
    dvw: DvwSubset
    clusters: tuple[EquivCluster, ...]
    membership: dict[tuple[str, str], int]
    nonequivalent: tuple[Simplex, ...]
    orphans: tuple[Simplex, ...] = field(default=())

    def cluster_of(self, v: str, w: str) -> EquivCluster:
        return self.clusters[self.membership[(v, w)]]


def _pairs_in(m: SplittingModel, s: Simplex) -> list[tuple[str, str]]:
    vs = [x for x in s if m.disk(x).side is Side.V]
    ws = [x for x in s if m.disk(x).side is Side.W]
    return [(a, b) for a in vs for b in ws]


def cluster_decomposition(m: SplittingModel, synthesize: bool = False,
                          max_simplices: int = MAX_SIMPLICES) -> ClusterSet:
    if synthesize:
        m = synthesize_meridians(m)
    c = build_complex(m, max_simplices)
    d = dvw(m, c)
    centers = {p: center_of(m, *p) for p in m.weak_reducing_pairs()}
    clusters = tuple(equivalent_cluster(m, k) for k in sorted(set(centers.values())))
    index = {cl.center: i for i, cl in enumerate(clusters)}
    membership = {p: index[k] for p, k in sorted(centers.items())}

    nonequiv = []
    for s in d.simplices:
        if len({centers[p] for p in _pairs_in(m, s)}) > 1:
            nonequiv.append(s)
    covered = set()
    for cl in clusters:
        covered.update(cl.simplices)
    for s in nonequiv:
        for k in range(1, len(s) + 1):
            covered.update(combinations(s, k))
    orphans = tuple(s for s in d.simplices if s not in covered)
    return ClusterSet(m, c, d, clusters, membership, tuple(nonequiv), orphans)


# structural checks


@dataclass(frozen=True, order=True)
class StructureViolation:
    rule: str
    msg: str

    def __str__(self) -> str:
        return f"{self.rule}: {self.msg}"


def equivalent_simplices(cs: ClusterSet) -> list[Simplex]:
    """D_VW simplices whose weak reducing pairs share a single center."""
    m = cs.model
    out = []
    for s in cs.dvw.simplices:
        pairs = _pairs_in(m, s)
        if pairs and len({cs.membership[p] for p in pairs}) == 1:
            out.append(s)
    return out


def three_simplex_form(m: SplittingModel, s: Simplex) -> bool:
    vs = [x for x in s if m.disk(x).side is Side.V]
    ws = [x for x in s if m.disk(x).side is Side.W]
    if len(vs) != 2 or len(ws) != 2:
        return False

    def torus_meridian(pair):
        a, b = pair
        return any(m.disk(x).is_sep and m.meridian_of(x) == y for x, y in ((a, b), (b, a)))

    return torus_meridian(vs) and torus_meridian(ws)


def check_structure(m: SplittingModel, cs: ClusterSet) -> list[StructureViolation]:
    m = cs.model
    out: list[StructureViolation] = []
    eq = equivalent_simplices(cs)

    # S1 dimension bound
    for s in eq:
        if len(s) >= 5:
            out.append(StructureViolation("S1", f"equivalent simplex {s} has dimension {len(s) - 1}"))
        elif len(s) == 4 and not three_simplex_form(m, s):
            out.append(StructureViolation("S1", f"equivalent 3-simplex {s} is not torus/meridian on both sides"))

    # S2 unique membership
    pairs = m.weak_reducing_pairs()
    for p in pairs:
        if p not in cs.membership:
            out.append(StructureViolation("S2", f"pair {p} has no cluster"))
            continue
        holders = [i for i, cl in enumerate(cs.clusters) if cl.contains(p)]
        if holders != [cs.membership[p]]:
            out.append(StructureViolation("S2", f"pair {p} lies in clusters {holders}, map says {cs.membership[p]}"))
    extra = set(cs.membership) - set(pairs)
    for p in sorted(extra):
        out.append(StructureViolation("S2", f"membership lists non-pair {p}"))

    # S3 intersections
    for (i, c1), (j, c2) in combinations(enumerate(cs.clusters), 2):
        shared = set(c1.vertices) & set(c2.vertices)
        if not shared:
            continue
        sides = {m.disk(x).side for x in shared}
        k1, k2 = c1.center, c2.center
        common = {k1.v_id, k1.w_id} & {k2.v_id, k2.w_id}
        if len(sides) != 1 or len(common) != 1:
            out.append(StructureViolation("S3", f"clusters {k1} and {k2} meet in {sorted(shared)}"))
            continue
        side = sides.pop()
        a = k1.v_id if side is Side.V else k1.w_id
        b = k2.v_id if side is Side.V else k2.w_id
        if a != b:
            out.append(StructureViolation("S3", f"clusters {k1} and {k2} meet on {side} with different hubs"))

    # S4 three-simplices sit in A_I clusters
    for s in eq:
        if len(s) == 4:
            home = cs.clusters[cs.membership[_pairs_in(m, s)[0]]]
            if home.cluster_type is not TenType.A_I or not home.contains(s):
                out.append(StructureViolation("S4", f"3-simplex {s} is not inside an A_I cluster"))

    # S5 per-cluster shape
    for cl in cs.clusters:
        out.extend(_cluster_shape(m, cl))
    return sorted(out)


def _cluster_shape(m: SplittingModel, cl: EquivCluster) -> list[StructureViolation]:
    out = []
    k = cl.center
    tag = str(k)
    if set(cl.simplices) != set(induced(m, cl.vertices)):
        out.append(StructureViolation("S5", f"{tag}: simplices are not the induced subcomplex"))
    if k.v_id not in cl.vertices or k.w_id not in cl.vertices:
        out.append(StructureViolation("S5", f"{tag}: center missing from vertex set"))
    for side, star in ((Side.V, cl.v_star), (Side.W, cl.w_star)):
        verts = [x for x in cl.vertices if m.disk(x).side is side]
        if sorted(verts) != sorted({star.hub, *star.leaves}):
            out.append(StructureViolation("S5", f"{tag}: {side} vertices do not form the declared star"))
        for leaf in star.leaves:
            if not m.is_disjoint(star.hub, leaf):
                out.append(StructureViolation("S5", f"{tag}: leaf {leaf} misses the hub"))
        for a, b in combinations(star.leaves, 2):
            if m.is_disjoint(a, b):
                out.append(StructureViolation("S5", f"{tag}: leaves {a} and {b} are joined"))
    kinds = {classify_ten(m, *p) for p in _pairs_in(m, cl.vertices) if m.is_disjoint(*p)}
    if kinds != {cl.cluster_type}:
        out.append(StructureViolation("S5", f"{tag}: pairs have types {sorted(t.value for t in kinds)}"))
    return out


def export_graph(m: SplittingModel) -> str:
    lines = [f"node {d.id} side={d.side} kind={d.kind}" for d in sorted(m.disks, key=lambda d: d.id)]
    lines += [f"edge {a} {b}" for a, b in sorted(tuple(sorted(p)) for p in m.relations.disjoint)]
    for f in faces(m):
        lines.append(f"face {' '.join(f.disks)} oneclass={str(face_one_class(m, f)).lower()}")
    return "\n".join(lines) + "\n"


__all__ = [
    "DiskComplex", "DvwSubset", "EquivCluster", "ClusterSet", "Star", "StructureViolation",
    "ComplexTooLarge", "NotACenter", "FaceRef",
    "build_complex", "dvw", "equivalent_cluster", "cluster_decomposition", "check_structure",
    "equivalent_simplices", "three_simplex_form", "export_graph", "induced",
]
