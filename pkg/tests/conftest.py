import random
import sys
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from exactlearn import ConceptTable  # noqa: E402

CORPUS_SEED = 20240531


def cube3_tables():
    rows = list(product((0, 1), repeat=3))
    return [ConceptTable(3, None, tuple(r for k, r in enumerate(rows) if mask >> k & 1))
            for mask in range(1, 256)]


def random_tables(count=200, seed=CORPUS_SEED):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 5)
        cube = list(product((0, 1), repeat=n))
        size = rng.randint(1, min(12, len(cube)))
        out.append(ConceptTable(n, None, tuple(rng.sample(cube, size))))
    return out


def build_corpus():
    return cube3_tables() + random_tables()


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


def chain(n):
    return ConceptTable.from_bitstrings(["1" * k + "0" * (n - k) for k in range(n + 1)])


def cube(n):
    return ConceptTable(n, None, tuple(product((0, 1), repeat=n)))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
