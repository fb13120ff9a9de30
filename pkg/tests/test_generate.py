from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from hcluster.generate import GeneratorExhausted, GeneratorRefused, GenSpec, generate
from hcluster.model import validate
from hcluster.modelio import serialize

GOLDEN = Path(__file__).parent / "golden" / "gen_s1_g3_d4.model"


def test_golden_snapshot():
    assert serialize(generate(GenSpec(genus=3, disk_count=4, seed=1))) == GOLDEN.read_text()


def test_deterministic():
    spec = GenSpec(genus=5, disk_count=8, seed=2**63 + 17)
    assert serialize(generate(spec)) == serialize(generate(spec))


def test_refuses_type_d_at_genus_3():
    with pytest.raises(GeneratorRefused, match="R4"):
        generate(GenSpec(genus=3, disk_count=4, seed=0, want_type_d=True))


def test_type_d_at_genus_4():
    m = generate(GenSpec(genus=4, disk_count=4, seed=5, want_type_d=True))
    assert any(u.separating for u in m.relations.unionsep.values())


@pytest.mark.parametrize("spec", [
    GenSpec(genus=2, disk_count=4),
    GenSpec(genus=3, disk_count=13),
    GenSpec(genus=3, disk_count=1),
])
def test_refusals(spec):
    with pytest.raises(GeneratorRefused):
        generate(spec)


def test_exhaustion_has_diagnostic():
    with pytest.raises(GeneratorExhausted, match="attempts"):
        generate(GenSpec(genus=3, disk_count=12, seed=0, complete_meridians=True, max_total=2, max_tries=3))


@settings(max_examples=80, deadline=None)
@given(st.integers(3, 6), st.integers(2, 10), st.integers(0, 2**64 - 1), st.booleans())
def test_generated_models_are_valid(genus, disks, seed, complete):
    m = generate(GenSpec(genus=genus, disk_count=disks, seed=seed, complete_meridians=complete))
    assert validate(m) == []
    assert m.weak_reducing_pairs()
    if complete:
        assert all(m.meridian_of(d.id) for d in m.disks if m.torus_label(d.id))
