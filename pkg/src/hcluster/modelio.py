"""Line-oriented text format for splitting models.

    manifold genus=4 vminus=[b1:2] wminus=[]
    disk id=V2 side=V kind=sep ga=2 gb=2 minusa=[b1] minusb=[]
    disk id=W1 side=W kind=nonsep
    disjoint V2 W1
    locate V2 W1 B
    unionsep V1 W1 no            # or yes:g1,g2

Boundary lists take ``id:genus`` entries; a bare genus gets an automatic id
(``vb1``, ``vb2``, ... on the V side).  Everything after ``#`` is ignored.
"""
from __future__ import annotations

import os
import re
from importlib import resources

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
)


class ModelParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line
        self.msg = msg


_ID = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-']*$")


def _int(tok: str, lineno: int, what: str) -> int:
    if not re.fullmatch(r"-?\d+", tok):
        raise ModelParseError(lineno, f"malformed number {tok!r} for {what}")
    return int(tok)


def _list(tok: str, lineno: int, what: str) -> list[str]:
    if not (tok.startswith("[") and tok.endswith("]")):
        raise ModelParseError(lineno, f"{what} must be a bracketed list")
    body = tok[1:-1].strip()
    return [x.strip() for x in body.split(",")] if body else []


def _kv(tokens: list[str], lineno: int, allowed: set[str]) -> dict[str, str]:
    out: dict[str, str] = {}
    for tok in tokens:
        if "=" not in tok:
            raise ModelParseError(lineno, f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        if k not in allowed:
            raise ModelParseError(lineno, f"unknown key {k!r}")
        if k in out:
            raise ModelParseError(lineno, f"key {k!r} given twice")
        out[k] = v
    return out


def _boundary(items: list[str], prefix: str, lineno: int) -> list[BoundaryComponent]:
    out = []
    for i, item in enumerate(items, 1):
        if ":" in item:
            bid, g = item.split(":", 1)
            if not _ID.match(bid):
                raise ModelParseError(lineno, f"bad boundary id {bid!r}")
        else:
            bid, g = f"{prefix}{i}", item
        out.append(BoundaryComponent(bid, _int(g, lineno, "boundary genus")))
    return out


def _check_id(tok: str, lineno: int) -> str:
    if not _ID.match(tok):
        raise ModelParseError(lineno, f"bad identifier {tok!r}")
    return tok


def parse_model(text: str) -> SplittingModel:
    manifold = None
    disks: dict[str, tuple[int, DiskModel]] = {}
    relations: list[tuple[int, list[str]]] = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "manifold":
            if manifold is not None:
                raise ModelParseError(lineno, f"second manifold line (first at line {manifold[0]})")
            kv = _kv(rest, lineno, {"genus", "vminus", "wminus"})
            if "genus" not in kv:
                raise ModelParseError(lineno, "manifold needs genus=")
            n = _int(kv["genus"], lineno, "genus")
            vm = _boundary(_list(kv.get("vminus", "[]"), lineno, "vminus"), "vb", lineno)
            wm = _boundary(_list(kv.get("wminus", "[]"), lineno, "wminus"), "wb", lineno)
            manifold = (lineno, n, vm, wm)
        elif head == "disk":
            kv = _kv(rest, lineno, {"id", "side", "kind", "ga", "gb", "minusa", "minusb"})
            for k in ("id", "side", "kind"):
                if k not in kv:
                    raise ModelParseError(lineno, f"disk needs {k}=")
            did = _check_id(kv["id"], lineno)
            if did in disks:
                raise ModelParseError(lineno, f"duplicate disk id {did!r} (first at line {disks[did][0]})")
            if kv["side"] not in ("V", "W"):
                raise ModelParseError(lineno, f"side must be V or W, got {kv['side']!r}")
            side = Side(kv["side"])
            if kv["kind"] == "nonsep":
                extra = set(kv) - {"id", "side", "kind"}
                if extra:
                    raise ModelParseError(lineno, f"nonsep disk takes no {sorted(extra)}")
                disk = DiskModel(did, side)
            elif kv["kind"] == "sep":
                for k in ("ga", "gb"):
                    if k not in kv:
                        raise ModelParseError(lineno, f"sep disk needs {k}=")
                sep = Sep(
                    _int(kv["ga"], lineno, "ga"),
                    tuple(_list(kv.get("minusa", "[]"), lineno, "minusa")),
                    _int(kv["gb"], lineno, "gb"),
                    tuple(_list(kv.get("minusb", "[]"), lineno, "minusb")),
                )
                disk = DiskModel(did, side, sep)
            else:
                raise ModelParseError(lineno, f"kind must be sep or nonsep, got {kv['kind']!r}")
            disks[did] = (lineno, disk)
        elif head in ("disjoint", "locate", "unionsep"):
            relations.append((lineno, [head, *rest]))
        else:
            raise ModelParseError(lineno, f"unknown declaration {head!r}")

    if manifold is None:
        raise ModelParseError(0, "missing manifold line")
    mline, n, vm, wm = manifold
    bids = {b.id: side for side, bs in ((Side.V, vm), (Side.W, wm)) for b in bs}
    if len(bids) != len(vm) + len(wm):
        raise ModelParseError(mline, "duplicate boundary id")
    for did, (lineno, d) in disks.items():
        if d.sep:
            for bid in d.sep.minus_a + d.sep.minus_b:
                if bids.get(bid) is not d.side:
                    raise ModelParseError(lineno, f"{did} references unknown {d.side} boundary {bid!r}")

    def ref(tok: str, lineno: int) -> DiskModel:
        if tok not in disks:
            raise ModelParseError(lineno, f"dangling reference to disk {tok!r}")
        return disks[tok][1]

    disjoint: dict[frozenset, int] = {}
    locate: dict[tuple[str, str], str] = {}
    unionsep: dict[tuple[str, str], UnionSplit] = {}
    for lineno, toks in relations:
        head, args = toks[0], toks[1:]
        want = 2 if head == "disjoint" else 3
        if len(args) != want:
            raise ModelParseError(lineno, f"{head} takes {want} arguments")
        a, b = ref(args[0], lineno), ref(args[1], lineno)
        if a.id == b.id:
            raise ModelParseError(lineno, f"{head} of {a.id} with itself")
        if head == "disjoint":
            key = pair_key(a.id, b.id)
            if key in disjoint:
                raise ModelParseError(lineno, f"duplicate disjoint (first at line {disjoint[key]})")
            disjoint[key] = lineno
        elif head == "locate":
            if not a.is_sep:
                raise ModelParseError(lineno, "locate requires sep disk")
            if args[2] not in ("A", "B"):
                raise ModelParseError(lineno, f"piece label must be A or B, got {args[2]!r}")
            if (a.id, b.id) in locate:
                raise ModelParseError(lineno, f"duplicate locate {a.id} {b.id}")
            locate[(a.id, b.id)] = args[2]
        else:
            if a.side is b.side or a.is_sep or b.is_sep:
                raise ModelParseError(lineno, "unionsep requires a V/W pair of nonsep disks")
            key = (a.id, b.id) if a.side is Side.V else (b.id, a.id)
            if key in unionsep:
                raise ModelParseError(lineno, f"duplicate unionsep {key[0]} {key[1]}")
            unionsep[key] = _union(args[2], lineno)

    return SplittingModel(
        n,
        CompressionBodyDescriptor(n, tuple(vm)),
        CompressionBodyDescriptor(n, tuple(wm)),
        tuple(d for _, d in disks.values()),
        RelationTable(frozenset(disjoint), locate, unionsep),
    )


def _union(tok: str, lineno: int) -> UnionSplit:
    if tok == "no":
        return NOT_SEPARATING
    if tok.startswith("yes:"):
        parts = tok[4:].split(",")
        return UnionSplit(tuple(_int(p, lineno, "union split") for p in parts))
    raise ModelParseError(lineno, f"union must be 'no' or 'yes:g1,g2', got {tok!r}")


def _ids(xs) -> str:
    return "[" + ",".join(xs) + "]"


def serialize(m: SplittingModel) -> str:
    """Canonical text form: disks and relations sorted by id."""
    lines = [
        f"manifold genus={m.n} vminus={_ids(map(str, m.v_body.minus))} wminus={_ids(map(str, m.w_body.minus))}"
    ]
    for d in sorted(m.disks, key=lambda d: d.id):
        if d.sep:
            s = d.sep
            lines.append(
                f"disk id={d.id} side={d.side} kind=sep ga={s.ga} gb={s.gb} "
                f"minusa={_ids(s.minus_a)} minusb={_ids(s.minus_b)}"
            )
        else:
            lines.append(f"disk id={d.id} side={d.side} kind=nonsep")
    for p in sorted(sorted(p) for p in m.relations.disjoint):
        lines.append("disjoint " + " ".join(p))
    for (a, b), label in sorted(m.relations.locate.items()):
        lines.append(f"locate {a} {b} {label}")
    for (a, b), u in sorted(m.relations.unionsep.items()):
        lines.append(f"unionsep {a} {b} {u}")
    return "\n".join(lines) + "\n"


FIXTURES = ("GX3", "GX3V3", "GD4", "GB4", "GC6", "GH4", "TWO_ISLAND", "GXD4", "G5",
            "BAD_R4", "BAD_R2", "GX3_NOMER")


def fixture_text(name: str) -> str:
    return resources.files("hcluster.fixtures").joinpath(f"{name}.model").read_text()


def load_fixture(name: str) -> SplittingModel:
    return parse_model(fixture_text(name))


def load(path_or_name: str) -> SplittingModel:
    """Read a model from a file path, or a built-in fixture by name."""
    if os.path.exists(path_or_name):
        with open(path_or_name) as fh:
            return parse_model(fh.read())
    stem = os.path.basename(path_or_name)
    for suffix in (".model",):
        if stem.endswith(suffix):
            stem = stem[: -len(suffix)]
    norm = stem.upper().replace("-", "_")
    if norm in FIXTURES:
        return load_fixture(norm)
    raise FileNotFoundError(path_or_name)
