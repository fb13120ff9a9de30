"""Bookkeeping for closed orientable surfaces carrying compression scars.

A surface is a finite collection of closed pieces.  Each piece knows only its
genus and the multiset of scars left behind by the disks it was compressed
along, which is all the weak reduction machinery needs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


class SurfaceError(ValueError):
    pass


class CannotCompressSphere(SurfaceError):
    pass


class BadSplit(SurfaceError):
    pass


@dataclass(frozen=True, order=True)
class ScarTag:
    disk_id: str

    def __str__(self) -> str:
        return self.disk_id


def _tags(scars: Iterable[ScarTag | str]) -> tuple[ScarTag, ...]:
    return tuple(sorted(s if isinstance(s, ScarTag) else ScarTag(s) for s in scars))


@dataclass(frozen=True, order=True)
class SurfacePiece:
    genus: int
    scars: tuple[ScarTag, ...] = ()

    def __post_init__(self):
        if self.genus < 0:
            raise SurfaceError(f"negative genus {self.genus}")
        object.__setattr__(self, "scars", _tags(self.scars))

    @classmethod
    def of(cls, genus: int, *scars: str) -> "SurfacePiece":
        return cls(genus, _tags(scars))

    @property
    def euler_char(self) -> int:
        return 2 - 2 * self.genus

    def scar_ids(self) -> set[str]:
        return {s.disk_id for s in self.scars}

    def __str__(self) -> str:
        return f"genus {self.genus} {{{','.join(map(str, self.scars))}}}"


@dataclass(frozen=True)
class Surface:
    """Unordered collection of pieces; equality is multiset equality."""

    pieces: tuple[SurfacePiece, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))

    def __eq__(self, other):
        if not isinstance(other, Surface):
            return NotImplemented
        return sorted(self.pieces) == sorted(other.pieces)

    def __hash__(self):
        return hash(tuple(sorted(self.pieces)))

    def __len__(self):
        return len(self.pieces)

    def __iter__(self):
        return iter(self.pieces)

    def __getitem__(self, i: int) -> SurfacePiece:
        return self.pieces[i]

    def canonical(self) -> tuple[SurfacePiece, ...]:
        return tuple(sorted(self.pieces))

    def genera(self) -> list[int]:
        return sorted(p.genus for p in self.pieces)

    def __str__(self) -> str:
        return "[" + "; ".join(str(p) for p in self.pieces) + "]"


def euler_char(s: Surface) -> int:
    return sum(p.euler_char for p in s.pieces)


def _replace(s: Surface, index: int, new: Sequence[SurfacePiece]) -> Surface:
    if not 0 <= index < len(s.pieces):
        raise IndexError(f"no piece at index {index}")
    pieces = list(s.pieces)
    pieces[index : index + 1] = new
    return Surface(tuple(pieces))


def compress_nonsep(s: Surface, piece_index: int, tag: ScarTag | str) -> Surface:
    """Compress a piece along a disk whose boundary does not separate it.

    The piece loses one handle and gains two scars of ``tag``.
    """
    piece = s.pieces[piece_index]
    if piece.genus == 0:
        raise CannotCompressSphere(f"piece {piece_index} is a sphere")
    tag = tag if isinstance(tag, ScarTag) else ScarTag(tag)
    new = SurfacePiece(piece.genus - 1, piece.scars + (tag, tag))
    return _replace(s, piece_index, [new])


def compress_sep(
    s: Surface,
    piece_index: int,
    tag: ScarTag | str,
    split: tuple[int, Iterable, int, Iterable],
) -> Surface:
    """Compress a piece along a separating disk.

    ``split`` is ``(gA, scarsA, gB, scarsB)``: the genera and the scars that
    end up on either side of the disk boundary.  Side A comes first in the
    resulting piece list.
    """
    piece = s.pieces[piece_index]
    ga, scars_a, gb, scars_b = split
    scars_a, scars_b = _tags(scars_a), _tags(scars_b)
    if ga < 0 or gb < 0 or ga + gb != piece.genus:
        raise BadSplit(f"genera {ga}+{gb} do not add up to {piece.genus}")
    if Counter(scars_a) + Counter(scars_b) != Counter(piece.scars):
        raise BadSplit("scar partition does not match the piece")
    tag = tag if isinstance(tag, ScarTag) else ScarTag(tag)
    new = [SurfacePiece(ga, scars_a + (tag,)), SurfacePiece(gb, scars_b + (tag,))]
    return _replace(s, piece_index, new)


def closed(genus: int) -> Surface:
    """A single unscarred closed surface."""
    return Surface((SurfacePiece(genus),))
