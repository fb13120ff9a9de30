"""Annotated disk models of weakly reducible Heegaard splittings.

A model is a finite fragment of the disk complex: a handful of compressing
disks on either side of the splitting surface, each described only by its
boundary data, plus declared pairwise relations.  Nothing here is computed
from geometry.  ``validate`` rejects declarations that the theory rules out,
but a model passing it is not certified to be geometrically realizable.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Iterator, Mapping


class ModelError(ValueError):
    pass


class NotAWeakReducingPair(ModelError):
    pass


class Side(enum.Enum):
    V = "V"
    W = "W"

    @property
    def other(self) -> "Side":
        return Side.W if self is Side.V else Side.V

    def __str__(self) -> str:
        return self.value


class Cutoff(enum.Enum):
    NONSEP = "NONSEP"
    TORUS = "TORUS"
    HBODY = "HBODY"
    CBODY = "CBODY"

    @property
    def small(self) -> bool:
        return self in (Cutoff.NONSEP, Cutoff.TORUS)


@dataclass(frozen=True, order=True)
class BoundaryComponent:
    id: str
    genus: int
    inner: bool = False

    def __str__(self) -> str:
        return f"{self.id}:{self.genus}"


@dataclass(frozen=True)
class CompressionBodyDescriptor:
    plus_genus: int
    minus: tuple[BoundaryComponent, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "minus", tuple(sorted(self.minus)))

    @property
    def minus_genus(self) -> int:
        return sum(b.genus for b in self.minus)

    @property
    def is_handlebody(self) -> bool:
        return not self.minus

    @property
    def trivial(self) -> bool:
        return len(self.minus) == 1 and self.minus[0].genus == self.plus_genus

    def ids(self) -> tuple[str, ...]:
        return tuple(b.id for b in self.minus)


@dataclass(frozen=True)
class Sep:
    ga: int
    minus_a: tuple[str, ...]
    gb: int
    minus_b: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "minus_a", tuple(sorted(self.minus_a)))
        object.__setattr__(self, "minus_b", tuple(sorted(self.minus_b)))

    def piece(self, label: str) -> tuple[int, tuple[str, ...]]:
        if label == "A":
            return self.ga, self.minus_a
        if label == "B":
            return self.gb, self.minus_b
        raise ModelError(f"bad piece label {label!r}")


def other_label(label: str) -> str:
    return "B" if label == "A" else "A"


@dataclass(frozen=True)
class DiskModel:
    id: str
    side: Side
    sep: Sep | None = None

    @property
    def is_sep(self) -> bool:
        return self.sep is not None

    @property
    def kind(self) -> str:
        return "sep" if self.sep else "nonsep"


@dataclass(frozen=True)
class UnionSplit:
    """Separation data for the union of two disjoint cross-side nonseparating
    boundaries.  Empty ``parts`` means the union does not separate."""

    parts: tuple[int, ...] = ()

    @property
    def separating(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return "yes:" + ",".join(map(str, self.parts)) if self.parts else "no"


NOT_SEPARATING = UnionSplit()


def pair_key(a: str, b: str) -> frozenset[str]:
    return frozenset((a, b))


@dataclass(frozen=True)
class RelationTable:
    disjoint: frozenset[frozenset[str]] = frozenset()
    locate: Mapping[tuple[str, str], str] = field(default_factory=dict)
    unionsep: Mapping[tuple[str, str], UnionSplit] = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class SplittingModel:
    n: int
    v_body: CompressionBodyDescriptor
    w_body: CompressionBodyDescriptor
    disks: tuple[DiskModel, ...]
    relations: RelationTable = field(default_factory=RelationTable)

    def __post_init__(self):
        object.__setattr__(self, "disks", tuple(self.disks))
        object.__setattr__(self, "_index", {d.id: d for d in self.disks})
        adj: dict[str, set[str]] = {d.id: set() for d in self.disks}
        for p in self.relations.disjoint:
            a, b = tuple(p) if len(p) == 2 else (next(iter(p)),) * 2
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        object.__setattr__(self, "_adj", adj)

    def __eq__(self, other):
        if not isinstance(other, SplittingModel):
            return NotImplemented
        return (
            self.n == other.n
            and self.v_body == other.v_body
            and self.w_body == other.w_body
            and sorted(self.disks, key=lambda d: d.id) == sorted(other.disks, key=lambda d: d.id)
            and self.relations.disjoint == other.relations.disjoint
            and dict(self.relations.locate) == dict(other.relations.locate)
            and dict(self.relations.unionsep) == dict(other.relations.unionsep)
        )

    __hash__ = None

    # lookups

    def disk(self, disk_id: str) -> DiskModel:
        try:
            return self._index[disk_id]
        except KeyError:
            raise ModelError(f"unknown disk {disk_id!r}") from None

    def has_disk(self, disk_id: str) -> bool:
        return disk_id in self._index

    def ids(self) -> list[str]:
        return sorted(self._index)

    def side_disks(self, side: Side) -> list[DiskModel]:
        return sorted((d for d in self.disks if d.side is side), key=lambda d: d.id)

    def body(self, side: Side) -> CompressionBodyDescriptor:
        return self.v_body if side is Side.V else self.w_body

    def boundary(self, bid: str) -> BoundaryComponent:
        for b in self.v_body.minus + self.w_body.minus:
            if b.id == bid:
                return b
        raise ModelError(f"unknown boundary component {bid!r}")

    def neighbours(self, disk_id: str) -> set[str]:
        return self._adj.get(disk_id, set())

    def is_disjoint(self, a: str, b: str) -> bool:
        return b in self._adj.get(a, ())

    def locate(self, sep_id: str, other_id: str) -> str:
        try:
            return self.relations.locate[(sep_id, other_id)]
        except KeyError:
            raise ModelError(f"no locate entry for ({sep_id}, {other_id})") from None

    def union(self, a: str, b: str) -> UnionSplit:
        key = (a, b) if self.disk(a).side is Side.V else (b, a)
        try:
            return self.relations.unionsep[key]
        except KeyError:
            raise ModelError(f"no unionsep entry for {key}") from None

    def is_wrp(self, a: str, b: str) -> bool:
        return (
            self.has_disk(a)
            and self.has_disk(b)
            and self.disk(a).side is not self.disk(b).side
            and self.is_disjoint(a, b)
        )

    def weak_reducing_pairs(self) -> list[tuple[str, str]]:
        """All disjoint cross-side pairs, as (V id, W id), sorted."""
        out = []
        for v in self.side_disks(Side.V):
            for w in sorted(self.neighbours(v.id)):
                if self.disk(w).side is Side.W:
                    out.append((v.id, w))
        return sorted(out)

    # piece data

    def piece_genus(self, disk_id: str, label: str) -> int:
        return self.disk(disk_id).sep.piece(label)[0]

    def piece_minus(self, disk_id: str, label: str) -> tuple[BoundaryComponent, ...]:
        return tuple(self.boundary(b) for b in self.disk(disk_id).sep.piece(label)[1])

    def torus_label(self, disk_id: str) -> str | None:
        """Label of the solid-torus piece cut off by a Sep disk, if any."""
        d = self.disk(disk_id)
        if d.sep is None:
            return None
        for label in ("A", "B"):
            g, minus = d.sep.piece(label)
            if g == 1 and not minus:
                return label
        return None

    def meridian_of(self, disk_id: str) -> str | None:
        """The declared Nonsep same-side disk lying in this disk's torus piece."""
        label = self.torus_label(disk_id)
        if label is None:
            return None
        side = self.disk(disk_id).side
        for other in sorted(self.neighbours(disk_id)):
            e = self.disk(other)
            if e.side is side and not e.is_sep and self.relations.locate.get((disk_id, other)) == label:
                return other
        return None

    def with_changes(self, disks: Iterable[DiskModel] | None = None, relations: RelationTable | None = None):
        return replace(
            self,
            disks=tuple(self.disks if disks is None else disks),
            relations=self.relations if relations is None else relations,
        )


def cutoff_category(m: SplittingModel, disk_id: str, partner_id: str) -> Cutoff:
    if not m.is_wrp(disk_id, partner_id):
        raise NotAWeakReducingPair(f"({disk_id}, {partner_id}) is not a weak reducing pair")
    d = m.disk(disk_id)
    if d.sep is None:
        return Cutoff.NONSEP
    # the cutoff is the piece away from the partner
    g, minus = d.sep.piece(other_label(m.locate(disk_id, partner_id)))
    if minus:
        return Cutoff.CBODY
    return Cutoff.TORUS if g == 1 else Cutoff.HBODY


# validation


@dataclass(frozen=True, order=True)
class Violation:
    rule: str
    msg: str
    disks: tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.rule}: {self.msg}"


def _structural(m: SplittingModel) -> Iterator[Violation]:
    n = m.n
    if n < 3:
        yield Violation("R0", f"ambient genus {n} < 3")
    seen_b: set[str] = set()
    for side in Side:
        body = m.body(side)
        if body.plus_genus != n:
            yield Violation("R0", f"{side} body has plus genus {body.plus_genus} != {n}")
        for b in body.minus:
            if b.genus < 1:
                yield Violation("R0", f"boundary {b.id} has genus {b.genus} < 1")
            if b.id in seen_b:
                yield Violation("R0", f"boundary id {b.id} declared twice")
            seen_b.add(b.id)
        if body.minus_genus > n:
            yield Violation("R0", f"{side} minus genus {body.minus_genus} exceeds {n}")

    seen: set[str] = set()
    for d in m.disks:
        if d.id in seen:
            yield Violation("R0", f"disk id {d.id} declared twice", (d.id,))
        seen.add(d.id)
        side_ids = set(m.body(d.side).ids())
        if d.sep is None:
            if m.body(d.side).minus_genus > n - 1:
                yield Violation("R0", f"{d.id}: no room for a nonseparating disk", (d.id,))
            continue
        s = d.sep
        if s.ga < 1 or s.gb < 1 or s.ga + s.gb != n:
            yield Violation("R0", f"{d.id}: split {s.ga}+{s.gb} is not a positive split of {n}", (d.id,))
        listed = list(s.minus_a) + list(s.minus_b)
        if sorted(listed) != sorted(side_ids) or len(set(listed)) != len(listed):
            yield Violation("R0", f"{d.id}: minus partition does not match the {d.side} boundary", (d.id,))
            continue
        for label in ("A", "B"):
            g, ids = s.piece(label)
            if sum(m.boundary(b).genus for b in ids) > g:
                yield Violation("R0", f"{d.id}: piece {label} too small for its boundary", (d.id,))

    rel = m.relations
    for p in rel.disjoint:
        ids = sorted(p)
        if len(ids) != 2:
            yield Violation("R0", f"disk {ids[0]} declared disjoint from itself", tuple(ids))
            continue
        for x in ids:
            if not m.has_disk(x):
                yield Violation("R0", f"disjoint references unknown disk {x}", tuple(ids))
    for (a, b), label in sorted(rel.locate.items()):
        if not (m.has_disk(a) and m.has_disk(b)):
            yield Violation("R0", f"locate references unknown disk", (a, b))
        elif not m.disk(a).is_sep:
            yield Violation("R0", f"locate({a}, {b}) on a nonseparating disk", (a, b))
        elif not m.is_disjoint(a, b):
            yield Violation("R0", f"locate({a}, {b}) on a non-disjoint pair", (a, b))
        elif label not in ("A", "B"):
            yield Violation("R0", f"locate({a}, {b}) has bad label {label!r}", (a, b))
    for (a, b) in sorted(rel.unionsep):
        if not (m.has_disk(a) and m.has_disk(b)):
            yield Violation("R0", "unionsep references unknown disk", (a, b))
            continue
        da, db = m.disk(a), m.disk(b)
        if da.side is not Side.V or db.side is not Side.W or da.is_sep or db.is_sep:
            yield Violation("R0", f"unionsep({a}, {b}) is not a V/W nonseparating pair", (a, b))
        elif not m.is_disjoint(a, b):
            yield Violation("R0", f"unionsep({a}, {b}) on a non-disjoint pair", (a, b))
    # completeness of the tables over disjoint pairs
    for p in sorted(rel.disjoint, key=sorted):
        ids = sorted(p)
        if len(ids) != 2 or not all(m.has_disk(x) for x in ids):
            continue
        for a, b in (ids, ids[::-1]):
            if m.disk(a).is_sep and (a, b) not in rel.locate:
                yield Violation("R0", f"missing locate({a}, {b})", (a, b))
        da, db = (m.disk(x) for x in ids)
        if da.side is not db.side and not da.is_sep and not db.is_sep:
            key = (da.id, db.id) if da.side is Side.V else (db.id, da.id)
            if key not in rel.unionsep:
                yield Violation("R0", f"missing unionsep{key}", key)


def _pairs(m: SplittingModel) -> Iterator[tuple[DiskModel, DiskModel]]:
    for p in sorted(m.relations.disjoint, key=sorted):
        a, b = sorted(p)
        yield m.disk(a), m.disk(b)


def _semantic(m: SplittingModel) -> Iterator[Violation]:
    n = m.n
    for a, b in _pairs(m):
        cross = a.side is not b.side
        if cross:
            for d, e in ((a, b), (b, a)):
                if not d.is_sep:
                    continue
                label = m.locate(d.id, e.id)
                if label == m.torus_label(d.id):
                    yield Violation("R2", f"{e.id} lies in the solid torus cut off by {d.id}", (d.id, e.id))
                elif m.piece_genus(d.id, label) < 2:
                    yield Violation("R1", f"{e.id} lies in a genus-1 piece of {d.id}", (d.id, e.id))
            if a.is_sep and b.is_sep:
                ma = m.piece_genus(a.id, m.locate(a.id, b.id))
                mb = m.piece_genus(b.id, m.locate(b.id, a.id))
                if ma + mb < n + 1:
                    yield Violation("R3", f"{a.id}/{b.id}: located genera {ma}+{mb} leave no thin level", (a.id, b.id))
            if not a.is_sep and not b.is_sep:
                u = m.union(a.id, b.id)
                if u.separating:
                    # two closed pieces after two compressions: g1 + g2 = n - 1
                    if len(u.parts) != 2 or min(u.parts) < 1 or sum(u.parts) != n - 1:
                        yield Violation("R4", f"{a.id}/{b.id}: separating union {u} would leave a scarred sphere", (a.id, b.id))
                    elif n == 3:
                        yield Violation("R4", f"{a.id}/{b.id}: no separating union at genus 3", (a.id, b.id))
        else:
            for d, e in ((a, b), (b, a)):
                t = m.torus_label(d.id)
                if t is None or m.locate(d.id, e.id) != t:
                    continue
                if e.is_sep:
                    yield Violation("R5b", f"{e.id} is isotopic to {d.id} (sep disk inside its solid torus)", (d.id, e.id))
    # two meridians of one solid torus
    for d in m.disks:
        t = m.torus_label(d.id)
        if t is None:
            continue
        mer = [
            e for e in sorted(m.neighbours(d.id))
            if m.disk(e).side is d.side and not m.disk(e).is_sep and m.locate(d.id, e) == t
        ]
        if len(mer) > 1:
            yield Violation("R5a", f"{d.id} has several meridians {mer}; merge them", (d.id, *mer))
    yield from _unique_disk_rule(m)
    yield from _meridian_consistency(m)
    if n == 3:
        yield from _genus3_faces(m)
        yield from _genus3_centers(m)


def _unique_disk_rule(m: SplittingModel) -> Iterator[Violation]:
    for side in Side:
        body = m.body(side)
        if len(body.minus) != 2 or body.minus_genus != m.n:
            continue
        disks = m.side_disks(side)
        if len(disks) > 1:
            yield Violation("R6", f"{side} side admits a unique disk, found {len(disks)}", tuple(d.id for d in disks))
        for d in disks:
            if not d.is_sep or not all(
                m.piece_genus(d.id, lab) == sum(b.genus for b in m.piece_minus(d.id, lab)) for lab in "AB"
            ):
                yield Violation("R6", f"{d.id} must be the separating disk splitting the boundary", (d.id,))


def _meridian_consistency(m: SplittingModel) -> Iterator[Violation]:
    for d in m.disks:
        mu = m.meridian_of(d.id)
        if mu is None:
            continue
        t = m.torus_label(d.id)
        for e_id in sorted(m.neighbours(d.id)):
            if e_id == mu or m.locate(d.id, e_id) == t:
                continue
            e = m.disk(e_id)
            if not m.is_disjoint(mu, e_id):
                yield Violation("R8", f"meridian {mu} of {d.id} must miss {e_id}", (d.id, mu, e_id))
                continue
            if e.is_sep and m.locate(e_id, mu) != m.locate(e_id, d.id):
                yield Violation("R8", f"{e_id} separates {mu} from {d.id}", (d.id, mu, e_id))
            if e.side is not d.side and not e.is_sep and m.union(mu, e_id).separating:
                yield Violation("R8", f"meridian {mu} with {e_id} cannot separate", (d.id, mu, e_id))


def _genus3_faces(m: SplittingModel) -> Iterator[Violation]:
    for side in Side:
        disks = m.side_disks(side)
        for d1, d2 in combinations(disks, 2):
            if not m.is_disjoint(d1.id, d2.id):
                continue
            partners = m.neighbours(d1.id) & m.neighbours(d2.id)
            if not any(m.disk(p).side is not side for p in partners):
                continue
            if not _torus_meridian(m, d1, d2) and not _torus_meridian(m, d2, d1):
                yield Violation("R7", f"genus-3 face on {d1.id},{d2.id} is not torus plus meridian", (d1.id, d2.id))


def _torus_meridian(m: SplittingModel, d: DiskModel, e: DiskModel) -> bool:
    t = m.torus_label(d.id)
    return t is not None and not e.is_sep and m.locate(d.id, e.id) == t


def center_key(m: SplittingModel, v: str, w: str) -> tuple[str, str]:
    """Center of a weak reducing pair, naming missing meridians virtually."""

    def canon(x: str, y: str) -> str:
        if cutoff_category(m, x, y) is Cutoff.TORUS:
            return m.meridian_of(x) or f"{x}.m"
        return x

    return canon(v, w), canon(w, v)


def _genus3_centers(m: SplittingModel) -> Iterator[Violation]:
    groups: dict[tuple[str, str], set[str]] = {}
    for v, w in m.weak_reducing_pairs():
        try:
            key = center_key(m, v, w)
        except ModelError:
            continue
        groups.setdefault(key, set()).update((v, w, *key))
    keys = sorted(groups)
    for k1, k2 in combinations(keys, 2):
        shared = groups[k1] & groups[k2]
        if shared:
            yield Violation(
                "R9",
                f"genus-3 clusters at {k1} and {k2} share {sorted(shared)}",
                tuple(sorted(shared)),
            )


def validate(m: SplittingModel) -> list[Violation]:
    out = list(_structural(m))
    if not out:
        out = list(_semantic(m))
    return sorted(set(out))


def is_valid(m: SplittingModel) -> bool:
    return not validate(m)


# meridian synthesis


def _fresh_id(m: SplittingModel, base: str) -> str:
    cand, k = base, 1
    while m.has_disk(cand):
        k += 1
        cand = f"{base}{k}"
    return cand


def synthesize_meridians(m: SplittingModel) -> SplittingModel:
    """Add the meridian disk of every solid torus cut off by a Sep disk that
    does not already have one declared."""
    for d in sorted(m.disks, key=lambda x: x.id):
        t = m.torus_label(d.id)
        if t is None or m.meridian_of(d.id) is not None:
            continue
        mu = _fresh_id(m, f"{d.id}.m")
        disjoint = set(m.relations.disjoint)
        locate = dict(m.relations.locate)
        unionsep = dict(m.relations.unionsep)
        disjoint.add(pair_key(d.id, mu))
        locate[(d.id, mu)] = t
        for e_id in sorted(m.neighbours(d.id)):
            if locate.get((d.id, e_id)) == t:
                continue
            e = m.disk(e_id)
            disjoint.add(pair_key(e_id, mu))
            if e.is_sep:
                locate[(e_id, mu)] = locate[(e_id, d.id)]
            elif e.side is not d.side:
                key = (mu, e_id) if d.side is Side.V else (e_id, mu)
                unionsep[key] = NOT_SEPARATING
        m = m.with_changes(
            disks=m.disks + (DiskModel(mu, d.side),),
            relations=RelationTable(frozenset(disjoint), locate, unionsep),
        )
    return m
