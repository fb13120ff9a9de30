"""Seeded random models.

Disks are drawn first, then relations are proposed pair by pair.  A proposal
declares one disjoint pair together with its locate/unionsep annotations and
whatever meridian relations the new pair forces; it is kept only if the
whole model still validates.  Identical specs give identical models.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .model import (
    NOT_SEPARATING,
    BoundaryComponent,
    CompressionBodyDescriptor,
    DiskModel,
    RelationTable,
    Sep,
    Side,
    SplittingModel,
    UnionSplit,
    pair_key,
    synthesize_meridians,
    validate,
)

MAX_DISKS = 12


class GeneratorError(RuntimeError):
    pass


class GeneratorRefused(GeneratorError):
    pass


class GeneratorExhausted(GeneratorError):
    pass


@dataclass(frozen=True)
class GenWeights:
    minus: float = 0.35  # chance a side gets negative boundary
    sep: float = 0.5  # chance a disk is separating
    torus: float = 0.55  # chance a separating disk cuts off a solid torus
    disjoint: float = 0.75  # chance a pair is proposed disjoint
    meridian: float = 0.7  # chance a torus disk grabs a same-side nonsep disk
    sep_union: float = 0.15  # chance a V/W nonsep union is proposed separating


@dataclass(frozen=True)
class GenSpec:
    genus: int
    disk_count: int
    seed: int = 0
    max_minus_components: int = 2
    weights: GenWeights = field(default_factory=GenWeights)
    want_type_d: bool = False
    want_sep_pair: bool = False
    complete_meridians: bool = False  # add missing meridians; total stays <= max_total
    max_total: int = MAX_DISKS
    max_tries: int = 200


def _boundary(rng: random.Random, n: int, side: Side, spec: GenSpec) -> tuple[BoundaryComponent, ...]:
    if rng.random() >= spec.weights.minus:
        return ()
    k = rng.randint(1, spec.max_minus_components)
    budget = n - 1
    out = []
    for i in range(k):
        if budget < 1:
            break
        g = rng.randint(1, min(budget, 2))
        budget -= g
        out.append(BoundaryComponent(f"{side.value.lower()}b{i + 1}", g))
    return tuple(out)


def _sep(rng: random.Random, n: int, minus: tuple[BoundaryComponent, ...], spec: GenSpec,
         torus: bool | None = None) -> Sep | None:
    if torus is None:
        torus = rng.random() < spec.weights.torus
    if torus:
        return Sep(1, (), n - 1, tuple(b.id for b in minus)) if rng.random() < 0.5 else \
            Sep(n - 1, tuple(b.id for b in minus), 1, ())
    for _ in range(10):
        ga = rng.randint(1, n - 1)
        a, b = [], []
        for comp in minus:
            (a if rng.random() < 0.5 else b).append(comp)
        if sum(c.genus for c in a) <= ga and sum(c.genus for c in b) <= n - ga:
            return Sep(ga, tuple(c.id for c in a), n - ga, tuple(c.id for c in b))
    return None


def _disk(rng: random.Random, m_n: int, bodies, i: int, side: Side, spec: GenSpec,
          sep: bool | None = None) -> DiskModel:
    if sep is None:
        sep = rng.random() < spec.weights.sep
    did = f"{side.value}{i}"
    if sep:
        s = _sep(rng, m_n, bodies[side].minus, spec)
        if s is not None:
            return DiskModel(did, side, s)
    return DiskModel(did, side)


class _Builder:
    def __init__(self, n, v_body, w_body, disks):
        self.n = n
        self.bodies = {Side.V: v_body, Side.W: w_body}
        self.disks = list(disks)
        self.disjoint: set[frozenset] = set()
        self.locate: dict[tuple[str, str], str] = {}
        self.unionsep: dict[tuple[str, str], UnionSplit] = {}

    def model(self, disjoint=None, locate=None, unionsep=None) -> SplittingModel:
        return SplittingModel(
            self.n,
            self.bodies[Side.V],
            self.bodies[Side.W],
            tuple(self.disks),
            RelationTable(
                frozenset(self.disjoint if disjoint is None else disjoint),
                dict(self.locate if locate is None else locate),
                dict(self.unionsep if unionsep is None else unionsep),
            ),
        )

    def propose(self, a: DiskModel, b: DiskModel, rng: random.Random, w: GenWeights,
                union: UnionSplit | None = None) -> bool:
        dj = set(self.disjoint)
        loc = dict(self.locate)
        uni = dict(self.unionsep)
        dj.add(pair_key(a.id, b.id))
        for x, y in ((a, b), (b, a)):
            if x.sep is None:
                continue
            t = _torus(x)
            if t and x.side is y.side and y.sep is None and rng.random() < w.meridian:
                loc[(x.id, y.id)] = t
            elif t and x.side is not y.side:
                loc[(x.id, y.id)] = "B" if t == "A" else "A"
            else:
                loc[(x.id, y.id)] = rng.choice("AB")
        if a.side is not b.side and a.sep is None and b.sep is None:
            key = (a.id, b.id) if a.side is Side.V else (b.id, a.id)
            if union is None:
                union = NOT_SEPARATING
                if self.n >= 4 and rng.random() < w.sep_union:
                    g1 = rng.randint(1, self.n - 2)
                    union = UnionSplit((g1, self.n - 1 - g1))
            uni[key] = union
        _close_meridians(self, dj, loc, uni)
        m = self.model(dj, loc, uni)
        if validate(m):
            return False
        self.disjoint, self.locate, self.unionsep = dj, loc, uni
        return True


def _torus(d: DiskModel) -> str | None:
    if d.sep is None:
        return None
    if d.sep.ga == 1 and not d.sep.minus_a:
        return "A"
    if d.sep.gb == 1 and not d.sep.minus_b:
        return "B"
    return None


def _close_meridians(b: _Builder, dj, loc, uni) -> None:
    """Add the relations a declared meridian is forced to have."""
    by_id = {d.id: d for d in b.disks}
    changed = True
    while changed:
        changed = False
        nb: dict[str, set[str]] = {d: set() for d in by_id}
        for p in dj:
            x, y = tuple(p)
            nb[x].add(y)
            nb[y].add(x)
        for d in b.disks:
            t = _torus(d)
            if t is None:
                continue
            mers = sorted(e for e in nb[d.id] if by_id[e].side is d.side and by_id[e].sep is None
                          and loc.get((d.id, e)) == t)
            if len(mers) != 1:
                continue
            mu = mers[0]
            for e_id in sorted(nb[d.id]):
                if e_id == mu or loc.get((d.id, e_id)) == t or e_id in nb[mu]:
                    continue
                e = by_id[e_id]
                dj.add(pair_key(mu, e_id))
                if e.sep is not None and (e_id, d.id) in loc:
                    loc[(e_id, mu)] = loc[(e_id, d.id)]
                elif e.side is not d.side and e.sep is None:
                    key = (mu, e_id) if d.side is Side.V else (e_id, mu)
                    uni[key] = NOT_SEPARATING
                changed = True
            if changed:
                break


def _attempt(rng: random.Random, spec: GenSpec) -> SplittingModel | None:
    n = spec.genus
    w = spec.weights
    bodies = {s: CompressionBodyDescriptor(n, _boundary(rng, n, s, spec)) for s in Side}
    counts = {Side.V: 0, Side.W: 0}
    disks: list[DiskModel] = []

    def add(side: Side, sep: bool | None = None) -> DiskModel:
        counts[side] += 1
        d = _disk(rng, n, bodies, counts[side], side, spec, sep)
        disks.append(d)
        return d

    seeded: list[tuple[DiskModel, DiskModel, UnionSplit | None]] = []
    if spec.want_type_d:
        g1 = rng.randint(1, n - 2)
        seeded.append((add(Side.V, False), add(Side.W, False), UnionSplit((g1, n - 1 - g1))))
    if spec.want_sep_pair:
        v, wd = add(Side.V, True), add(Side.W, True)
        if not (v.sep and wd.sep):
            return None
        seeded.append((v, wd, None))
    while len(disks) < spec.disk_count:
        add(rng.choice((Side.V, Side.W)))

    b = _Builder(n, bodies[Side.V], bodies[Side.W], disks)
    if validate(b.model()):
        return None
    for x, y, u in seeded:
        ok = False
        for _ in range(8):
            if b.propose(x, y, rng, w, u):
                ok = True
                break
        if not ok:
            return None
    pairs = list(combinations(disks, 2))
    rng.shuffle(pairs)
    for x, y in pairs:
        if pair_key(x.id, y.id) in b.disjoint or rng.random() >= w.disjoint:
            continue
        b.propose(x, y, rng, w)
    m = b.model()
    if spec.complete_meridians:
        m = synthesize_meridians(m)
        if len(m.disks) > spec.max_total:
            return None
    if not m.weak_reducing_pairs():
        return None
    return m


def generate(spec: GenSpec) -> SplittingModel:
    if spec.genus < 3:
        raise GeneratorRefused(f"genus {spec.genus} < 3")
    if spec.disk_count > MAX_DISKS:
        raise GeneratorRefused(f"{spec.disk_count} disks exceeds the cap of {MAX_DISKS}")
    if spec.disk_count < 2:
        raise GeneratorRefused("need at least two disks for a weak reducing pair")
    if spec.want_type_d and spec.genus == 3:
        raise GeneratorRefused("no separating union is allowed at genus 3 (rule R4)")
    rng = random.Random(spec.seed)
    for _ in range(spec.max_tries):
        m = _attempt(rng, spec)
        if m is not None:
            return m
    raise GeneratorExhausted(f"no valid model after {spec.max_tries} attempts for {spec}")


def corpus(count: int, seed: int = 0, genera=(3, 4, 5, 6), disks=(3, 10), **kw) -> list[SplittingModel]:
    """A reproducible batch of models with varied genus and disk count."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        spec = GenSpec(
            genus=genera[i % len(genera)],
            disk_count=rng.randint(*disks),
            seed=rng.getrandbits(64),
            **kw,
        )
        out.append(generate(spec))
    return out
