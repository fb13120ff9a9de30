import pytest

from hcluster.generate import GenSpec, corpus, generate
from hcluster.modelio import load_fixture


@pytest.fixture
def fx():
    return load_fixture


@pytest.fixture(scope="session")
def fuzz500():
    """Genus 3..6, at most 10 disks, meridians completed."""
    return corpus(500, seed=2024, genera=(3, 4, 5, 6), disks=(3, 10), complete_meridians=True, max_total=10)


@pytest.fixture(scope="session")
def genus3_200():
    return corpus(200, seed=33, genera=(3,), disks=(3, 10), complete_meridians=True, max_total=10)


@pytest.fixture(scope="session")
def sep_pairs200():
    """Models seeded with a separating V disk and a separating W disk that
    the generator tried to make disjoint."""
    return [
        generate(GenSpec(genus=3 + i % 4, disk_count=2 + i % 5, seed=9000 + i, want_sep_pair=True,
                         complete_meridians=True, max_total=10))
        for i in range(200)
    ]


_ACCEPTANCE = "acceptance_lines"


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.__dict__.setdefault(_ACCEPTANCE, {})

    def record(num, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {title}" + (f" ({detail})" if detail else "")
        lines[num] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.__dict__.get(_ACCEPTANCE)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(lines):
        terminalreporter.write_line(lines[num])
