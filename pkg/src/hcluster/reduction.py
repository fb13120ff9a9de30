"""Weak reduction along a weak reducing pair.

Preweak reduction compresses the splitting surface F along V, along W and
along both, giving thick levels F_V, F_W and the thin level F_VW.  Cleaning
then discards the product regions: a thin piece carrying scars of only one
side is parallel to a thick piece with the same data, and both go.

The closed-form answer for each case is computed separately and the two are
required to agree.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass

from .model import (
    BoundaryComponent,
    CompressionBodyDescriptor,
    Cutoff,
    ModelError,
    NotAWeakReducingPair,
    Side,
    SplittingModel,
    cutoff_category,
    other_label,
)
from .surfaces import (
    ScarTag,
    Surface,
    SurfacePiece,
    closed,
    compress_nonsep,
    compress_sep,
)


class CleaningMismatch(AssertionError):
    pass


class FiveType(enum.Enum):
    A = "A"
    B_W = "B_W"
    B_V = "B_V"
    C = "C"
    D = "D"


class TenType(enum.Enum):
    A_I = "A_I"
    A_II_W = "A_II_W"
    A_II_V = "A_II_V"
    A_III = "A_III"
    B_W_I = "B_W_I"
    B_W_II = "B_W_II"
    B_V_I = "B_V_I"
    B_V_II = "B_V_II"
    C = "C"
    D = "D"

    @property
    def coarse(self) -> FiveType:
        name = self.value
        if name.startswith("A_"):
            return FiveType.A
        if name.startswith("B_W"):
            return FiveType.B_W
        if name.startswith("B_V"):
            return FiveType.B_V
        return FiveType(name)


@dataclass(frozen=True)
class RawGhs:
    thick: Surface
    thin: Surface


@dataclass(frozen=True)
class GhsResult:
    thick_v: SurfacePiece
    thick_w: SurfacePiece
    thin: Surface
    body_v1: CompressionBodyDescriptor
    body_v2: CompressionBodyDescriptor
    body_w1: CompressionBodyDescriptor
    body_w2: CompressionBodyDescriptor
    v2_minus_connected: bool
    w1_minus_connected: bool
    v2_extra_minus: tuple[BoundaryComponent, ...]
    w1_extra_minus: tuple[BoundaryComponent, ...]


def oriented(m: SplittingModel, a: str, b: str) -> tuple[str, str]:
    """Put a weak reducing pair in (V, W) order, or raise."""
    if not m.is_wrp(a, b):
        raise NotAWeakReducingPair(f"({a}, {b}) is not a weak reducing pair")
    return (a, b) if m.disk(a).side is Side.V else (b, a)


def _compress_one(m: SplittingModel, d_id: str) -> Surface:
    d = m.disk(d_id)
    f = closed(m.n)
    if d.sep is None:
        return compress_nonsep(f, 0, d_id)
    return compress_sep(f, 0, d_id, (d.sep.ga, (), d.sep.gb, ()))


def _index(label: str) -> int:
    # compress_sep lists piece A first
    return 0 if label == "A" else 1


def preweak_reduce(m: SplittingModel, v_id: str, w_id: str) -> RawGhs:
    v_id, w_id = oriented(m, v_id, w_id)
    dv, dw = m.disk(v_id), m.disk(w_id)
    f_v = _compress_one(m, v_id)
    f_w = _compress_one(m, w_id)
    v_scar = ScarTag(v_id)

    if dw.sep is None:
        if dv.sep is None:
            u = m.union(v_id, w_id)
            if u.separating:
                g1, g2 = u.parts
                f_vw = compress_sep(f_v, 0, w_id, (g1, (v_scar,), g2, (v_scar,)))
            else:
                f_vw = compress_nonsep(f_v, 0, w_id)
        else:
            f_vw = compress_nonsep(f_v, _index(m.locate(v_id, w_id)), w_id)
    else:
        # W's cutoff piece lies wholly on one side of everything V touches
        m_w = m.piece_genus(w_id, m.locate(w_id, v_id))
        cut = m.n - m_w
        if dv.sep is None:
            f_vw = compress_sep(f_v, 0, w_id, (m_w - 1, (v_scar, v_scar), cut, ()))
        else:
            label = m.locate(v_id, w_id)
            m_v = m.piece_genus(v_id, label)
            f_vw = compress_sep(f_v, _index(label), w_id, (m_v + m_w - m.n, (v_scar,), cut, ()))
    return RawGhs(Surface(f_v.pieces + f_w.pieces), f_vw)


def _sides(m: SplittingModel, piece: SurfacePiece) -> set[Side]:
    return {m.disk(s.disk_id).side for s in piece.scars}


def product_clean(raw: RawGhs, m: SplittingModel) -> RawGhs:
    """Generic cleaning: repeatedly delete a thin piece with one-sided scars
    together with a thick piece carrying identical data."""
    thick = list(raw.thick.pieces)
    thin = list(raw.thin.pieces)
    changed = True
    while changed:
        changed = False
        for t in sorted(thin):
            if len(_sides(m, t)) != 1 or t not in thick:
                continue
            thin.remove(t)
            thick.remove(t)
            changed = True
            break
    return RawGhs(Surface(tuple(thick)), Surface(tuple(thin)))


def _located(m: SplittingModel, d_id: str, partner: str) -> tuple[str | None, int]:
    d = m.disk(d_id)
    if d.sep is None:
        return None, m.n - 1
    label = m.locate(d_id, partner)
    return label, m.piece_genus(d_id, label)


def closed_form(m: SplittingModel, v_id: str, w_id: str) -> tuple[SurfacePiece, SurfacePiece, Surface]:
    """Thick levels and inner thin level straight from the case formulas."""
    v_id, w_id = oriented(m, v_id, w_id)
    lv, gv = _located(m, v_id, w_id)
    lw, gw = _located(m, w_id, v_id)
    vs = (v_id,) if lv else (v_id, v_id)
    ws = (w_id,) if lw else (w_id, w_id)
    thick_v = SurfacePiece.of(gv, *vs)
    thick_w = SurfacePiece.of(gw, *ws)
    if lv is None and lw is None:
        u = m.union(v_id, w_id)
        if u.separating:
            thin = [SurfacePiece.of(g, v_id, w_id) for g in u.parts]
        else:
            thin = [SurfacePiece.of(m.n - 2, *vs, *ws)]
    else:
        # each compression removes one handle from the surviving piece
        g = gv + gw - m.n
        thin = [SurfacePiece.of(g, *vs, *ws)]
    return thick_v, thick_w, Surface(tuple(thin))


def _cutoff_minus(m: SplittingModel, d_id: str, partner: str) -> tuple[BoundaryComponent, ...]:
    d = m.disk(d_id)
    if d.sep is None:
        return ()
    return m.piece_minus(d_id, other_label(m.locate(d_id, partner)))


def _located_minus(m: SplittingModel, d_id: str, partner: str) -> tuple[BoundaryComponent, ...]:
    d = m.disk(d_id)
    if d.sep is None:
        return m.body(d.side).minus
    return m.piece_minus(d_id, m.locate(d_id, partner))


def clean(raw: RawGhs, m: SplittingModel, v_id: str, w_id: str) -> GhsResult:
    v_id, w_id = oriented(m, v_id, w_id)
    thick_v, thick_w, thin = closed_form(m, v_id, w_id)

    generic = product_clean(raw, m)
    expect_thick = Surface((thick_v, thick_w))
    if generic.thick != expect_thick or generic.thin != thin:
        raise CleaningMismatch(
            f"({v_id}, {w_id}): product cleaning gave {generic.thick} / {generic.thin}, "
            f"closed form {expect_thick} / {thin}"
        )

    suffix = len(thin) > 1
    inner = tuple(
        BoundaryComponent(f"F_VW.{i}" if suffix else "F_VW", p.genus, inner=True)
        for i, p in enumerate(sorted(thin.pieces), 1)
    )
    v2_extra = _cutoff_minus(m, w_id, v_id)
    w1_extra = _cutoff_minus(m, v_id, w_id)
    body_v2 = CompressionBodyDescriptor(thick_v.genus, inner + v2_extra)
    body_w1 = CompressionBodyDescriptor(thick_w.genus, inner + w1_extra)
    return GhsResult(
        thick_v=thick_v,
        thick_w=thick_w,
        thin=thin,
        body_v1=CompressionBodyDescriptor(thick_v.genus, _located_minus(m, v_id, w_id)),
        body_v2=body_v2,
        body_w1=body_w1,
        body_w2=CompressionBodyDescriptor(thick_w.genus, _located_minus(m, w_id, v_id)),
        v2_minus_connected=len(body_v2.minus) == 1,
        w1_minus_connected=len(body_w1.minus) == 1,
        v2_extra_minus=tuple(sorted(v2_extra)),
        w1_extra_minus=tuple(sorted(w1_extra)),
    )


def weak_reduce(m: SplittingModel, v_id: str, w_id: str) -> GhsResult:
    return clean(preweak_reduce(m, v_id, w_id), m, v_id, w_id)


def classify_five(g: GhsResult) -> FiveType:
    if len(g.thin) == 2:
        return FiveType.D
    if g.v2_minus_connected and g.w1_minus_connected:
        return FiveType.A
    if g.v2_minus_connected:
        return FiveType.B_W
    if g.w1_minus_connected:
        return FiveType.B_V
    return FiveType.C


_SMALL_TABLE = {
    # (V cutoff kind, W cutoff kind) with "S" for NONSEP/TORUS
    ("S", "S"): TenType.A_I,
    ("H", "S"): TenType.A_II_W,
    ("S", "H"): TenType.A_II_V,
    ("H", "H"): TenType.A_III,
    ("C", "S"): TenType.B_W_I,
    ("C", "H"): TenType.B_W_II,
    ("S", "C"): TenType.B_V_I,
    ("H", "C"): TenType.B_V_II,
    ("C", "C"): TenType.C,
}


def _letter(c: Cutoff) -> str:
    if c.small:
        return "S"
    return "H" if c is Cutoff.HBODY else "C"


def classify_ten(m: SplittingModel, v_id: str, w_id: str) -> TenType:
    v_id, w_id = oriented(m, v_id, w_id)
    cv = cutoff_category(m, v_id, w_id)
    cw = cutoff_category(m, w_id, v_id)
    if cv is Cutoff.NONSEP and cw is Cutoff.NONSEP and m.union(v_id, w_id).separating:
        return TenType.D
    return _SMALL_TABLE[(_letter(cv), _letter(cw))]


def thin_genus_formula(m: SplittingModel, v_id: str, w_id: str) -> list[int]:
    """Expected inner thin genera, case by case."""
    v_id, w_id = oriented(m, v_id, w_id)
    dv, dw = m.disk(v_id), m.disk(w_id)
    if dv.sep is None and dw.sep is None:
        u = m.union(v_id, w_id)
        return sorted(u.parts) if u.separating else [m.n - 2]
    if dv.sep is not None and dw.sep is not None:
        mv = m.piece_genus(v_id, m.locate(v_id, w_id))
        mw = m.piece_genus(w_id, m.locate(w_id, v_id))
        return [mv + mw - m.n]
    s, o = (v_id, w_id) if dv.sep else (w_id, v_id)
    return [m.piece_genus(s, m.locate(s, o)) - 1]


__all__ = [
    "CleaningMismatch", "FiveType", "TenType", "RawGhs", "GhsResult", "ModelError",
    "preweak_reduce", "product_clean", "closed_form", "clean", "weak_reduce",
    "classify_five", "classify_ten", "thin_genus_formula", "oriented",
]
