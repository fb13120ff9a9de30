import pytest
from hypothesis import given, strategies as st

from hcluster.surfaces import (
    BadSplit,
    CannotCompressSphere,
    Surface,
    SurfacePiece,
    closed,
    compress_nonsep,
    compress_sep,
    euler_char,
)


def S(*pieces):
    return Surface(tuple(pieces))


P = SurfacePiece.of


@pytest.mark.parametrize("surface, chi", [
    (closed(3), -4),
    (S(P(1), P(1)), 0),
    (S(), 0),
])
def test_euler_char(surface, chi):
    assert euler_char(surface) == chi


def test_nonsep_compression():
    assert compress_nonsep(closed(3), 0, "V1") == S(P(2, "V1", "V1"))
    assert compress_nonsep(S(P(2, "V2")), 0, "W1") == S(P(1, "V2", "W1", "W1"))
    assert compress_nonsep(S(P(1)), 0, "V1") == S(P(0, "V1", "V1"))


def test_sphere_cannot_compress():
    with pytest.raises(CannotCompressSphere):
        compress_nonsep(S(P(0, "V1", "V1")), 0, "W1")


def test_sep_compression():
    assert compress_sep(closed(3), 0, "V2", (1, (), 2, ())) == S(P(1, "V2"), P(2, "V2"))
    got = compress_sep(S(P(5, "W1", "W1")), 0, "V2", (3, ("W1", "W1"), 2, ()))
    assert got == S(P(3, "W1", "W1", "V2"), P(2, "V2"))
    assert compress_sep(S(P(2)), 0, "V", (1, (), 1, ())) == S(P(1, "V"), P(1, "V"))


@pytest.mark.parametrize("split", [(1, (), 0, ()), (2, (), 1, ()), (1, ("X",), 1, ())])
def test_bad_split(split):
    with pytest.raises(BadSplit):
        compress_sep(S(P(2)), 0, "V", split)


def test_multiset_equality_ignores_order():
    assert S(P(1, "a"), P(2, "b")) == S(P(2, "b"), P(1, "a"))
    assert hash(S(P(1, "a"), P(2, "b"))) == hash(S(P(2, "b"), P(1, "a")))


@given(st.integers(1, 12), st.data())
def test_compression_raises_chi_by_two(g, data):
    s = closed(g)
    if data.draw(st.booleans()) and g >= 2:
        ga = data.draw(st.integers(1, g - 1))
        t = compress_sep(s, 0, "D", (ga, (), g - ga, ()))
    else:
        t = compress_nonsep(s, 0, "D")
    assert euler_char(t) == euler_char(s) + 2
    assert all(p.scar_ids() == {"D"} for p in t)
