import io
import shutil
import subprocess

import pytest

from hcluster.cli import main
from hcluster.modelio import fixture_text


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def test_classify_pair():
    assert run("classify", "GX3", "--pair", "V2,W1") == (0, "type=A_I\n")


def test_classify_all():
    code, out = run("classify", "GB4", "--all")
    assert code == 0 and out == "five=B_W pair=[V2,W1] type=B_W_I\n"


def test_criticality_two_island(tmp_path):
    p = tmp_path / "two-island.model"
    p.write_text(fixture_text("TWO_ISLAND"))
    code, out = run("criticality", str(p))
    assert code == 0
    assert "verdict=CRITICAL_INDEX_TWO_WITNESS" in out.splitlines()[0]
    assert "c0=[V1,W1] c1=[V2,W2]" in out


def test_phi_genus3_only():
    code, out = run("phi", "GB4.model")
    assert code == 1 and out.startswith("error=Genus3Only")


def test_validate_exit_codes():
    assert run("validate", "GX3")[0] == 0
    code, out = run("validate", "BAD_R4")
    assert code == 1 and "violation=R4" in out and out.endswith("valid=false\n")


def test_parse_error_exit_2(tmp_path):
    p = tmp_path / "bad.model"
    p.write_text("manifold genus=3\ndisk id=V1 side=V kind=nonsep\ndisk id=V1 side=V kind=nonsep\n")
    code, out = run("validate", str(p))
    assert code == 2 and "error=ModelParseError line=3" in out


def test_usage_errors():
    assert run("reduce", "GX3")[0] == 2
    assert run("bogus")[0] == 2
    assert run("validate", "nowhere.model")[0] == 2
    assert run("classify", "GX3")[0] == 2


def test_reduce_and_raw():
    code, out = run("reduce", "GC6", "--pair", "V,W")
    assert code == 0 and "thin=[4]" in out and "five=C" in out
    code, out = run("reduce", "GX3", "--pair", "W1,V1", "--raw")
    assert out == "pair=[V1,W1] thick=[genus 2 {V1,V1}; genus 2 {W1,W1}] thin=[genus 1 {V1,V1,W1,W1}]\n"


def test_not_a_pair_exit_1():
    code, out = run("reduce", "GX3", "--pair", "V1,V2")
    assert code == 1 and out.startswith("error=NotAWeakReducingPair")


def test_clusters_and_components():
    code, out = run("clusters", "GXD4")
    assert code == 0 and out.endswith("clusters=2 structure=pass\n")
    code, out = run("components", "TWO_ISLAND")
    assert out.endswith("components=2\n")


def test_synthesize_flag():
    assert run("clusters", "GX3_NOMER")[1].startswith("error=MissingMeridian")
    assert run("--synthesize-meridians", "clusters", "GX3_NOMER")[0] == 0
    assert run("clusters", "GX3_NOMER", "--synthesize-meridians")[0] == 0


def test_oracle_check_and_export():
    assert run("oracle-check", "GX3") == (0, "oracle=pass pairs=2 simplices=7\n")
    code, out = run("export-graph", "GX3")
    assert "face V1 V2 W1 oneclass=true" in out


def test_gen_matches_golden(tmp_path):
    from pathlib import Path
    golden = (Path(__file__).parent / "golden" / "gen_s1_g3_d4.model").read_text()
    assert run("gen", "--seed", "1", "--genus", "3", "--disks", "4")[1] == golden
    out = tmp_path / "g.model"
    run("gen", "--seed", "1", "--genus", "3", "--disks", "4", "--out", str(out))
    assert out.read_text() == golden
    assert run("gen", "--genus", "2")[0] == 1


def test_reports_are_stable():
    for argv in (("clusters", "GX3V3"), ("phi", "TWO_ISLAND"), ("criticality", "GH4")):
        assert run(*argv) == run(*argv)


def test_color(monkeypatch):
    monkeypatch.setenv("HC_COLOR", "1")
    assert "\x1b[31m" in run("phi", "GB4")[1]
    monkeypatch.setenv("HC_COLOR", "0")
    assert "\x1b[" not in run("phi", "GB4")[1]


@pytest.mark.skipif(shutil.which("hc") is None, reason="console script not installed")
def test_console_script():
    p = subprocess.run(["hc", "classify", "GX3", "--pair", "V2,W1"], capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "type=A_I\n"
