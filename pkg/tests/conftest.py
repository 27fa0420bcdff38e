from __future__ import annotations

import pytest

from branchlab.embedding import load_embedding

ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("BRANCHLAB_CACHE", str(tmp_path / "cache"))


@pytest.fixture(scope="session")
def diag_a1():
    return load_embedding("diag:A1")


@pytest.fixture(scope="session")
def diag_a2():
    return load_embedding("diag:A2")


@pytest.fixture(scope="session")
def principal_a2():
    return load_embedding("principal-a1:A2")


@pytest.fixture(scope="session")
def id_b2():
    return load_embedding("id:B2")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        name, ok, detail = ACCEPTANCE_RESULTS[num]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {num:2d}. {name}{'  ' + detail if detail else ''}")
