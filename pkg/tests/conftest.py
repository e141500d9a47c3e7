import json
import os

import numpy as np
import pytest

# Neutralize terminal-color env before hsx.cli is imported. The CLI builds a
# module-level Rich Console at import time; a developer terminal that exports
# FORCE_COLOR (or COLORTERM) makes Rich emit ANSI escapes even into captured,
# non-TTY test output, which breaks plain-text `in result.output` assertions.
for _color_var in ("FORCE_COLOR", "CLICOLOR_FORCE", "COLORTERM"):
    os.environ.pop(_color_var, None)
os.environ["NO_COLOR"] = "1"

from hsx import Hypergraph, induce_complex, sunflower_hypergraph  # noqa: E402
from hsx.testing import random_hypergraph  # noqa: E402


@pytest.fixture(autouse=True)
def isolated_settings(tmp_path, monkeypatch):
    """Keep a developer's ~/.molcrafts/hsx/config.toml and env out of every test."""
    home = tmp_path / "molcrafts_home"
    home.mkdir()
    monkeypatch.setenv("MOLCRAFTS_HOME", str(home))
    monkeypatch.delenv("HSX_FACE_BUDGET", raising=False)
    return home


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def two_petals():
    """sunflower(2, 3): edges {0,1,2} and {0,3,4}, weight 1/2 each."""
    return sunflower_hypergraph(2, 3)


@pytest.fixture
def two_petals_complex(two_petals):
    return induce_complex(two_petals)


@pytest.fixture
def single_edge():
    return Hypergraph.from_edges(3, 3, [[0, 1, 2]])


@pytest.fixture
def disjoint_edges():
    return Hypergraph.from_edges(3, 6, [[0, 1, 2], [3, 4, 5]])


@pytest.fixture
def complete_four():
    """All four triples on four vertices."""
    return Hypergraph.uniform(3, 4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])


@pytest.fixture
def random_hypergraphs(rng):
    """A spread of small random instances, half of them non-uniformly weighted."""
    instances = []
    for index in range(12):
        k = int(rng.integers(2, 5))
        n = int(rng.integers(k + 1, 9))
        instances.append(
            random_hypergraph(
                rng, n, k, int(rng.integers(1, 8)), weighted=bool(index % 2)
            )
        )
    return instances


@pytest.fixture
def many_random_hypergraphs():
    """Fifty instances up to k = 5 from their own seed, for the cheap checks."""
    rng = np.random.default_rng(20240918)
    instances = []
    for index in range(50):
        k = int(rng.integers(2, 6))
        n = int(rng.integers(k + 1, 10))
        instances.append(
            random_hypergraph(
                rng, n, k, int(rng.integers(1, 12)), weighted=bool(index % 2)
            )
        )
    return instances


@pytest.fixture
def write_hypergraph(tmp_path):
    """Write a hypergraph dict (or raw text) to a JSON file and return its path."""

    def write(data, name: str = "h.json"):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data))
        return path

    return write
