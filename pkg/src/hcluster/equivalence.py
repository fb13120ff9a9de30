"""Equivalence of weak reductions, decided through centers.

Two weak reducing pairs give equivalent GHSs exactly when they canonicalize
to the same center: every disk that cuts off a solid torus (relative to its
partner) is traded for the meridian of that torus.
"""
from __future__ import annotations

from dataclasses import dataclass

from .model import (
    Cutoff,
    ModelError,
    Side,
    SplittingModel,
    cutoff_category,
    synthesize_meridians,
)
from .reduction import GhsResult, oriented


class NotAFace(ModelError):
    pass


class MissingMeridian(ModelError):
    pass


@dataclass(frozen=True, order=True)
class FaceRef:
    disks: tuple[str, str, str]
    orientation: Side

    def __str__(self) -> str:
        return f"{self.orientation}-face {{{','.join(self.disks)}}}"


@dataclass(frozen=True, order=True)
class CenterPair:
    v_id: str
    w_id: str

    def __str__(self) -> str:
        return f"({self.v_id},{self.w_id})"


DescriptorKey = tuple[int, int, tuple[int, ...], tuple[str, ...], tuple[str, ...]]


def make_face(m: SplittingModel, *ids: str) -> FaceRef:
    if len(set(ids)) != 3 or not all(m.has_disk(x) for x in ids):
        raise NotAFace(f"{ids} is not three distinct declared disks")
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            if not m.is_disjoint(a, b):
                raise NotAFace(f"{a} and {b} are not disjoint")
    sides = [m.disk(x).side for x in ids]
    n_v = sides.count(Side.V)
    if n_v not in (1, 2):
        raise NotAFace(f"{ids} lies on one side only")
    return FaceRef(tuple(sorted(ids)), Side.V if n_v == 2 else Side.W)


def split_face(m: SplittingModel, f: FaceRef) -> tuple[str, str, str]:
    """(same-side disk, same-side disk, cross disk)."""
    same = [x for x in f.disks if m.disk(x).side is f.orientation]
    cross = [x for x in f.disks if m.disk(x).side is not f.orientation]
    if len(same) != 2 or len(cross) != 1:
        raise NotAFace(str(f))
    return same[0], same[1], cross[0]


def _torus_and_meridian(m: SplittingModel, d: str, e: str, cross: str) -> bool:
    if not m.disk(d).is_sep or m.disk(e).is_sep:
        return False
    if cutoff_category(m, d, cross) is not Cutoff.TORUS:
        return False
    return m.locate(d, e) == m.torus_label(d)


def face_one_class(m: SplittingModel, f: FaceRef) -> bool:
    d1, d2, c = split_face(m, f)
    for x in f.disks:
        for y in f.disks:
            if x < y and not m.is_disjoint(x, y):
                raise NotAFace(f"{x} and {y} are not disjoint")
    return _torus_and_meridian(m, d1, d2, c) or _torus_and_meridian(m, d2, d1, c)


def faces(m: SplittingModel) -> list[FaceRef]:
    """All V- and W-faces of the model, in sorted order."""
    out = []
    for side in Side:
        same = [d.id for d in m.side_disks(side)]
        for i, a in enumerate(same):
            for b in same[i + 1:]:
                if not m.is_disjoint(a, b):
                    continue
                for c in sorted(m.neighbours(a) & m.neighbours(b)):
                    if m.disk(c).side is not side:
                        out.append(FaceRef(tuple(sorted((a, b, c))), side))
    return sorted(out)


def _canon(m: SplittingModel, x: str, partner: str) -> str:
    if cutoff_category(m, x, partner) is not Cutoff.TORUS:
        return x
    mu = m.meridian_of(x)
    if mu is None:
        raise MissingMeridian(f"no meridian declared for the solid torus cut off by {x}")
    return mu


def center_of(m: SplittingModel, v_id: str, w_id: str, synthesize: bool = False) -> CenterPair:
    if synthesize:
        m = synthesize_meridians(m)
    v_id, w_id = oriented(m, v_id, w_id)
    return CenterPair(_canon(m, v_id, w_id), _canon(m, w_id, v_id))


def is_center(m: SplittingModel, c: CenterPair) -> bool:
    if not m.is_wrp(c.v_id, c.w_id):
        return False
    if m.disk(c.v_id).side is not Side.V:
        return False
    return all(
        cutoff_category(m, x, y) is not Cutoff.TORUS for x, y in ((c.v_id, c.w_id), (c.w_id, c.v_id))
    )


def ghs_equal_exact(m: SplittingModel, p1: tuple[str, str], p2: tuple[str, str], synthesize: bool = False) -> bool:
    if synthesize:
        m = synthesize_meridians(m)
    return center_of(m, *p1) == center_of(m, *p2)


def ghs_descriptor(g: GhsResult) -> DescriptorKey:
    return (
        g.thick_v.genus,
        g.thick_w.genus,
        tuple(sorted(p.genus for p in g.thin)),
        tuple(sorted(b.id for b in g.v2_extra_minus)),
        tuple(sorted(b.id for b in g.w1_extra_minus)),
    )
