"""Criticality verdicts and the genus-3 cluster/class tables.

Every verdict is model-level: the model is a finite piece of the disk
complex, so the conclusions hold only if it captures all relevant disks.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .diskcomplex import ClusterSet, EquivCluster
from .equivalence import (
    DescriptorKey,
    FaceRef,
    face_one_class,
    faces,
    ghs_descriptor,
)
from .model import ModelError, SplittingModel, other_label
from .reduction import TenType, weak_reduce

PROXY_CAVEAT = (
    "omega groups use the structural descriptor as a stand-in for isotopy; "
    "descriptor-equal clusters may still be non-isotopic"
)
MODEL_LEVEL_NOTE = "verdict holds for the declared disks only"


class Genus3Only(ModelError):
    pass


class Verdict(enum.Enum):
    CRITICAL_INDEX_TWO_WITNESS = "CRITICAL_INDEX_TWO_WITNESS"
    NOT_TOPOLOGICALLY_MINIMAL_MODEL_LEVEL = "NOT_TOPOLOGICALLY_MINIMAL_MODEL_LEVEL"
    HAS_NONEQUIVALENT_FACE = "HAS_NONEQUIVALENT_FACE"
    INCONCLUSIVE = "INCONCLUSIVE"


class Rigidity(enum.Enum):
    MUST_BE_EQUAL = "MUST_BE_EQUAL"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class CriticalityReport:
    verdict: Verdict
    partition: tuple[tuple[str, ...], tuple[str, ...]] | None = None
    witness_face: FaceRef | None = None
    notes: tuple[str, ...] = ()


def find_nonequivalent_face(m: SplittingModel) -> FaceRef | None:
    for f in faces(m):
        if not face_one_class(m, f):
            return f
    return None


def analyze_criticality(m: SplittingModel, cs: ClusterSet) -> CriticalityReport:
    m = cs.model
    if not m.weak_reducing_pairs():
        return CriticalityReport(Verdict.INCONCLUSIVE, notes=("no weak reducing pairs",))
    bad = find_nonequivalent_face(m)
    if bad is not None:
        return CriticalityReport(
            Verdict.HAS_NONEQUIVALENT_FACE,
            witness_face=bad,
            notes=(f"the two weak reductions inside {bad} are not equivalent",),
        )
    comps = cs.dvw.components
    if len(comps) >= 2:
        c0 = comps[0]
        c1 = tuple(x for x in m.ids() if x not in c0)
        return CriticalityReport(
            Verdict.CRITICAL_INDEX_TWO_WITNESS,
            partition=(c0, c1),
            notes=(MODEL_LEVEL_NOTE, f"{len(comps)} components of D_VW"),
        )
    return CriticalityReport(
        Verdict.NOT_TOPOLOGICALLY_MINIMAL_MODEL_LEVEL,
        notes=(MODEL_LEVEL_NOTE, "D_VW is a single equivalent cluster"),
    )


def cross_pairs(m: SplittingModel, partition) -> list[tuple[str, str]]:
    """Weak reducing pairs with one disk in each part."""
    c0 = set(partition[0])
    return [p for p in m.weak_reducing_pairs() if (p[0] in c0) != (p[1] in c0)]


@dataclass(frozen=True)
class PhiRow:
    component: int
    center: object
    cluster_type: TenType
    key: DescriptorKey


@dataclass(frozen=True)
class PhiTable:
    rows: tuple[PhiRow, ...]
    omega_groups: dict[DescriptorKey, tuple[int, ...]]
    violations: tuple[str, ...] = ()
    caveat: str = PROXY_CAVEAT
    undecided: tuple[tuple[int, int], ...] = field(default=())


def cluster_key(m: SplittingModel, cl: EquivCluster) -> DescriptorKey:
    return ghs_descriptor(weak_reduce(m, cl.center.v_id, cl.center.w_id))


def phi_omega(m: SplittingModel, cs: ClusterSet) -> PhiTable:
    m = cs.model
    if m.n != 3:
        raise Genus3Only(f"phi/omega analysis needs genus 3, model has genus {m.n}")
    rows: list[PhiRow] = []
    problems: list[str] = []
    for i, comp in enumerate(cs.dvw.components):
        comp_set = set(comp)
        inside = [cl for cl in cs.clusters if set(cl.vertices) <= comp_set]
        comp_simplices = {s for s in cs.dvw.simplices if set(s) <= comp_set}
        exact = [cl for cl in inside if set(cl.vertices) == comp_set and set(cl.simplices) == comp_simplices]
        if len(inside) != 1 or len(exact) != 1:
            problems.append(f"component {i} {list(comp)} holds {len(inside)} clusters")
            if not inside:
                continue
        cl = inside[0]
        rows.append(PhiRow(i, cl.center, cl.cluster_type, cluster_key(m, cl)))
    centers = [r.center for r in rows]
    if len(set(centers)) != len(centers):
        problems.append("two components share a center")
    groups: dict[DescriptorKey, list[int]] = {}
    for r in rows:
        groups.setdefault(r.key, []).append(r.component)
    by_comp = {r.component: cs.clusters[_idx(cs, r.center)] for r in rows}
    undecided = [
        (a, b)
        for comps in groups.values()
        for a in comps
        for b in comps
        if a < b and product_rigidity_check(m, by_comp[a], by_comp[b]) is Rigidity.NOT_APPLICABLE
    ]
    return PhiTable(
        tuple(rows),
        {k: tuple(v) for k, v in sorted(groups.items())},
        tuple(problems),
        undecided=tuple(undecided),
    )


def _idx(cs: ClusterSet, center) -> int:
    return next(i for i, cl in enumerate(cs.clusters) if cl.center == center)


def _product_cutoffs(m: SplittingModel, cl: EquivCluster) -> bool:
    k = cl.center
    for x, y in ((k.v_id, k.w_id), (k.w_id, k.v_id)):
        if not m.disk(x).is_sep:
            continue
        label = other_label(m.locate(x, y))
        minus = m.piece_minus(x, label)
        if len(minus) != 1 or minus[0].genus != m.piece_genus(x, label):
            return False
    return True


def product_rigidity_check(m: SplittingModel, cl1: EquivCluster, cl2: EquivCluster) -> Rigidity:
    """MUST_BE_EQUAL when every separating center disk of both clusters cuts
    off a product S x I; then equivalent weak reductions force equal
    clusters."""
    if cluster_key(m, cl1) != cluster_key(m, cl2):
        return Rigidity.NOT_APPLICABLE
    if _product_cutoffs(m, cl1) and _product_cutoffs(m, cl2):
        return Rigidity.MUST_BE_EQUAL
    return Rigidity.NOT_APPLICABLE


def rigidity_alarm(m: SplittingModel, cl1: EquivCluster, cl2: EquivCluster) -> bool:
    """True when the clusters have equivalent weak reductions and satisfy the
    product hypothesis, yet differ.  Never true on a consistent model."""
    if cl1.center != cl2.center:
        return False
    return product_rigidity_check(m, cl1, cl2) is Rigidity.MUST_BE_EQUAL and cl1 != cl2


__all__ = [
    "Verdict", "Rigidity", "CriticalityReport", "PhiRow", "PhiTable", "Genus3Only",
    "PROXY_CAVEAT", "analyze_criticality", "find_nonequivalent_face", "cross_pairs",
    "phi_omega", "product_rigidity_check", "rigidity_alarm", "cluster_key",
]
