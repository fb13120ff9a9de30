import pytest

from hcluster.model import (
    Cutoff,
    NotAWeakReducingPair,
    cutoff_category,
    is_valid,
    synthesize_meridians,
    validate,
)
from hcluster.modelio import FIXTURES, load_fixture, parse_model

GOOD = [f for f in FIXTURES if not f.startswith("BAD_")]


def rules(text):
    return sorted({v.rule for v in validate(parse_model(text))})


@pytest.mark.parametrize("name", GOOD)
def test_good_fixtures_validate(name):
    assert validate(load_fixture(name)) == []


def test_negative_fixtures():
    assert {v.rule for v in validate(load_fixture("BAD_R4"))} == {"R4"}
    assert {v.rule for v in validate(load_fixture("BAD_R2"))} == {"R2"}


HEAD3 = "manifold genus=3\n"
HEAD4 = "manifold genus=4\n"


@pytest.mark.parametrize("text, rule", [
    # cross disk in the genus-1 non-torus piece
    ("manifold genus=4 vminus=[b:1]\n"
     "disk id=V side=V kind=sep ga=1 gb=3 minusa=[b] minusb=[]\n"
     "disk id=W side=W kind=nonsep\ndisjoint V W\nlocate V W A\n", "R1"),
    (HEAD4 + "disk id=V side=V kind=sep ga=1 gb=3\ndisk id=W side=W kind=nonsep\n"
     "disjoint V W\nlocate V W A\n", "R2"),
    (HEAD4 + "disk id=V side=V kind=sep ga=2 gb=2\ndisk id=W side=W kind=sep ga=2 gb=2\n"
     "disjoint V W\nlocate V W A\nlocate W V A\n", "R3"),
    (HEAD4 + "disk id=V side=V kind=nonsep\ndisk id=W side=W kind=nonsep\n"
     "disjoint V W\nunionsep V W yes:1,1\n", "R4"),
    (HEAD3 + "disk id=V side=V kind=nonsep\ndisk id=W side=W kind=nonsep\n"
     "disjoint V W\nunionsep V W yes:1,1\n", "R4"),
    (HEAD4 + "disk id=T side=V kind=sep ga=1 gb=3\ndisk id=M1 side=V kind=nonsep\n"
     "disk id=M2 side=V kind=nonsep\ndisjoint T M1\ndisjoint T M2\nlocate T M1 A\nlocate T M2 A\n", "R5a"),
    (HEAD4 + "disk id=T side=V kind=sep ga=1 gb=3\ndisk id=S side=V kind=sep ga=2 gb=2\n"
     "disjoint T S\nlocate T S A\nlocate S T A\n", "R5b"),
    ("manifold genus=3 vminus=[a:1,b:2]\n"
     "disk id=S1 side=V kind=sep ga=1 gb=2 minusa=[a] minusb=[b]\n"
     "disk id=S2 side=V kind=sep ga=1 gb=2 minusa=[a] minusb=[b]\n", "R6"),
    (HEAD3 + "disk id=V1 side=V kind=nonsep\ndisk id=V2 side=V kind=nonsep\ndisk id=W side=W kind=nonsep\n"
     "disjoint V1 V2\ndisjoint V1 W\ndisjoint V2 W\nunionsep V1 W no\nunionsep V2 W no\n", "R7"),
    # meridian M of T must miss every disk outside the torus
    (HEAD4 + "disk id=T side=V kind=sep ga=1 gb=3\ndisk id=M side=V kind=nonsep\ndisk id=W side=W kind=nonsep\n"
     "disjoint T M\ndisjoint T W\nlocate T M A\nlocate T W B\n", "R8"),
])
def test_each_rule_fires(text, rule):
    assert rule in rules(text)


def test_r9_two_genus3_clusters_sharing_a_disk():
    text = (HEAD3 + "disk id=V side=V kind=nonsep\ndisk id=W1 side=W kind=nonsep\n"
            "disk id=W2 side=W kind=nonsep\ndisjoint V W1\ndisjoint V W2\n"
            "unionsep V W1 no\nunionsep V W2 no\n")
    assert rules(text) == ["R9"]


def test_structural_errors_suppress_semantic_ones():
    bad = parse_model("manifold genus=2\ndisk id=V side=V kind=nonsep\n")
    assert {v.rule for v in validate(bad)} == {"R0"}


def test_missing_locate_is_structural():
    text = HEAD4 + "disk id=V side=V kind=sep ga=2 gb=2\ndisk id=W side=W kind=nonsep\ndisjoint V W\n"
    assert rules(text) == ["R0"]


def test_cutoff_categories(fx):
    gx3 = fx("GX3")
    assert cutoff_category(gx3, "V2", "W1") is Cutoff.TORUS
    assert cutoff_category(gx3, "V1", "W1") is Cutoff.NONSEP
    assert cutoff_category(fx("GB4"), "V2", "W1") is Cutoff.CBODY
    assert cutoff_category(fx("GH4"), "Vs", "W") is Cutoff.HBODY
    with pytest.raises(NotAWeakReducingPair):
        cutoff_category(gx3, "V1", "V2")


def test_weak_reducing_pairs_sorted(fx):
    assert fx("GX3").weak_reducing_pairs() == [("V1", "W1"), ("V2", "W1")]


def test_synthesis_restores_gx3(fx):
    out = synthesize_meridians(fx("GX3_NOMER"))
    assert is_valid(out)
    (mu,) = [d.id for d in out.disks if d.id not in ("V2", "W1")]
    assert not out.disk(mu).is_sep
    assert out.is_disjoint(mu, "V2") and out.is_disjoint(mu, "W1")
    assert not out.union(mu, "W1").separating
    assert out.meridian_of("V2") == mu


@pytest.mark.parametrize("name", ["GX3", "GD4", "GX3V3"])
def test_synthesis_is_identity_when_complete(fx, name):
    m = fx(name)
    assert synthesize_meridians(m) == m


def test_synthesis_idempotent(fuzz500):
    for m in fuzz500[:100]:
        once = synthesize_meridians(m)
        assert synthesize_meridians(once) == once
