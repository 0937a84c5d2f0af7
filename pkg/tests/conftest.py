from pathlib import Path

import pytest

from necklace.quiver import load_quiver

QUIVERS = Path(__file__).resolve().parent.parent / "quivers"


def quiver_path(name: str) -> str:
    return str(QUIVERS / f"{name}.qv")


@pytest.fixture(scope="session")
def loop():
    return load_quiver(quiver_path("loop"))


@pytest.fixture(scope="session")
def two_loop():
    return load_quiver(quiver_path("two_loop"))


@pytest.fixture(scope="session")
def uv():
    return load_quiver(quiver_path("two_vertex"))


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance") or __import__("sys").modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
