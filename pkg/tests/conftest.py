import math

import numpy as np
import pytest

from laqc.states import BDTriple


def h_oracle(c: float) -> float:
    """Binary correlation entropy straight from its definition, scalar only."""
    total = 0.0
    for x in (1 + c, 1 - c):
        if x > 0:
            total += x / 2 * math.log2(x)
    return total


def tetra_ok(c) -> bool:
    c1, c2, c3 = c
    return min(1 - c1 - c2 - c3, 1 - c1 + c2 + c3, 1 + c1 - c2 + c3, 1 + c1 + c2 - c3) >= 0


def sample_states(seed: int, count: int, accept=lambda c: True) -> list[BDTriple]:
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        c = rng.uniform(-1, 1, 3)
        if tetra_ok(c) and accept(c):
            out.append(BDTriple(*c))
    return out


def same_sign(c) -> bool:
    c = np.asarray(c)
    return bool(np.all(c > 0) or np.all(c < 0))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def acceptance_report():
    def record(name: str, passed: bool, detail: str) -> None:
        _ACCEPTANCE.append((name, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
