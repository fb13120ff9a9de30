from dataclasses import replace
from itertools import combinations

import pytest

from hcluster.diskcomplex import (
    ComplexTooLarge,
    NotACenter,
    build_complex,
    check_structure,
    cluster_decomposition,
    dvw,
    equivalent_cluster,
    export_graph,
)
from hcluster.equivalence import CenterPair, face_one_class, faces
from hcluster.modelio import FIXTURES, load_fixture, parse_model
from hcluster.reduction import TenType

GOOD = [f for f in FIXTURES if not f.startswith("BAD_") and f != "GX3_NOMER"]


def test_gx3_complex(fx):
    c = build_complex(fx("GX3"))
    assert ("V1", "V2", "W1") in c.simplices
    for k in (1, 2):
        for face in combinations(("V1", "V2", "W1"), k):
            assert face in c.simplices
    assert c.dimension == 2


def test_gd4_complex(fx):
    assert build_complex(fx("GD4")).simplices == (("V1",), ("W1",), ("V1", "W1"))


def test_no_disjoint_pairs():
    m = parse_model("manifold genus=3\ndisk id=V1 side=V kind=nonsep\ndisk id=W1 side=W kind=nonsep\n")
    assert build_complex(m).dimension == 0


def test_simplex_cap(fx):
    with pytest.raises(ComplexTooLarge):
        build_complex(fx("GX3"), max_simplices=3)


def test_dvw_excludes_isolated_disk():
    text = ("manifold genus=4\ndisk id=V1 side=V kind=nonsep\ndisk id=W1 side=W kind=nonsep\n"
            "disk id=V9 side=V kind=nonsep\ndisjoint V1 W1\nunionsep V1 W1 no\n")
    m = parse_model(text)
    d = dvw(m, build_complex(m))
    assert "V9" not in d.vertices and d.components == (("V1", "W1"),)


def test_dvw_components(fx):
    m = fx("GX3")
    assert dvw(m, build_complex(m)).components == (("V1", "V2", "W1"),)
    m = fx("TWO_ISLAND")
    assert len(dvw(m, build_complex(m)).components) == 2


def test_clusters_of_fixtures(fx):
    cl = equivalent_cluster(fx("GX3"), CenterPair("V1", "W1"))
    assert cl.vertices == ("V1", "V2", "W1") and cl.cluster_type is TenType.A_I
    assert ("V1", "V2", "W1") in cl.simplices
    cl = equivalent_cluster(fx("GB4"), CenterPair("V2", "W1"))
    assert cl.vertices == ("V2", "W1") and cl.cluster_type is TenType.B_W_I
    cl = equivalent_cluster(fx("GD4"), CenterPair("V1", "W1"))
    assert cl.vertices == ("V1", "W1") and cl.cluster_type is TenType.D


def test_not_a_center(fx):
    with pytest.raises(NotACenter):
        equivalent_cluster(fx("GX3"), CenterPair("V2", "W1"))


def test_decompositions(fx):
    cs = cluster_decomposition(fx("GX3"))
    assert len(cs.clusters) == 1 and not cs.nonequivalent and not cs.orphans
    cs = cluster_decomposition(fx("TWO_ISLAND"))
    assert len(cs.clusters) == 2 and not cs.nonequivalent and not cs.orphans
    cs = cluster_decomposition(fx("GH4"))
    assert ("Vn", "Vs", "W") in cs.nonequivalent


@pytest.mark.parametrize("name", GOOD)
def test_structure_passes_on_fixtures(name):
    m = load_fixture(name)
    assert check_structure(m, cluster_decomposition(m)) == []


def test_clusters_meeting_in_a_vertex(fx):
    m = fx("GXD4")
    cs = cluster_decomposition(m)
    a, b = cs.clusters
    assert set(a.vertices) & set(b.vertices) == {"V1"}
    assert check_structure(m, cs) == []


def test_corrupted_membership_is_reported(fx):
    m = fx("GXD4")
    cs = cluster_decomposition(m)
    broken = dict(cs.membership)
    broken[("V1", "W1")] = 1
    bad = check_structure(m, replace(cs, membership=broken))
    assert any(v.rule == "S2" for v in bad)


def test_export_graph(fx):
    out = export_graph(fx("GH4")).splitlines()
    assert "node Vs side=V kind=sep" in out
    assert "edge Vn Vs" in out
    assert "face Vn Vs W oneclass=false" in out


def test_decomposition_laws(fuzz500):
    for m in fuzz500[:200]:
        cs = cluster_decomposition(m)
        # no leaf-leaf edges; the hub joins every leaf
        for cl in cs.clusters:
            for star in (cl.v_star, cl.w_star):
                assert all(m.is_disjoint(star.hub, x) for x in star.leaves)
                assert not any(m.is_disjoint(a, b) for a, b in combinations(star.leaves, 2))
        # one-class faces lie in exactly one cluster
        for f in faces(m):
            if face_one_class(m, f):
                assert sum(cl.contains(f.disks) for cl in cs.clusters) == 1
        assert cs.orphans == ()
