from dataclasses import replace

from hcluster.diskcomplex import DiskComplex, cluster_decomposition
from hcluster.modelio import load_fixture
from hcluster.oracle import UnionFind, brute_cliques, oracle_check, oracle_clusters, raw_pairs


def test_union_find():
    uf = UnionFind("abcde")
    uf.union("a", "c")
    uf.union("e", "d")
    uf.union("c", "e")
    assert uf.groups() == [("a", "c", "d", "e"), ("b",)]


def test_gx3_passes():
    assert oracle_check(load_fixture("GX3")).ok


def test_fixtures_pass():
    for name in ("GX3V3", "GD4", "GB4", "GC6", "GH4", "TWO_ISLAND", "GXD4", "G5"):
        rep = oracle_check(load_fixture(name))
        assert rep.ok, (name, rep.failures)


def test_synthesized_missing_meridian():
    assert oracle_check(load_fixture("GX3_NOMER"), synthesize=True).ok


def test_oracle_clusters_gx3v3():
    m = load_fixture("GX3V3")
    assert oracle_clusters(m) == [(("V1", "W1"), ("V2", "W1"), ("V3", "W1"))]
    assert raw_pairs(m) == m.weak_reducing_pairs()


def test_corrupted_membership_fails():
    m = load_fixture("GXD4")
    cs = cluster_decomposition(m)
    broken = {p: 0 for p in cs.membership}
    rep = oracle_check(m, replace(cs, membership=broken))
    assert not rep.ok
    assert any("differ from oracle" in f for f in rep.failures)


def test_corrupted_complex_fails():
    m = load_fixture("GX3")
    cs = cluster_decomposition(m)
    c = cs.complex
    short = DiskComplex(c.vertices, c.sides, tuple(s for s in c.simplices if len(s) < 3))
    rep = oracle_check(m, replace(cs, complex=short))
    assert any("missing from the complex" in f for f in rep.failures)


def test_brute_cliques_match_on_gd4():
    assert brute_cliques(load_fixture("GD4")) == {("V1",), ("W1",), ("V1", "W1")}
