import pytest

from core.config import reset_config
from graphs import new_graph


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Every test starts from the default settings with no KDEFECT_* overrides."""
    for name in ("KDEFECT_LOG_LEVEL", "KDEFECT_LOG_FILE", "KDEFECT_CACHE", "KDEFECT_WORKERS",
                 "KDEFECT_MAX_COLORINGS"):
        monkeypatch.delenv(name, raising=False)
    reset_config()
    yield
    reset_config()


@pytest.fixture
def k2():
    return new_graph(2, [(0, 1)])


@pytest.fixture
def c3():
    return new_graph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def c4():
    return new_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def c5():
    return new_graph(5, [(i, (i + 1) % 5) for i in range(5)])


@pytest.fixture
def k4():
    return new_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def path4():
    return new_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def two_k2():
    """Two disjoint edges."""
    return new_graph(4, [(0, 1), (2, 3)])


@pytest.fixture
def single_loop():
    return new_graph(1, [(0, 0)])
