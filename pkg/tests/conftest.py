import os
from dataclasses import dataclass

import pytest
from hypothesis import HealthCheck, settings

from squarekit import generators as gen
from squarekit.graph import Graph
from squarekit.recognition import is_two_connected

settings.register_profile(
    "default",
    deadline=None,
    max_examples=int(os.environ.get("SQUAREKIT_EXAMPLES", "40")),
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

CORPUS_SIZE = 500
MAX_STEPS = 30


@dataclass(frozen=True)
class Instance:
    seed: int
    steps: int
    connected_flag: bool
    graph: Graph

    @property
    def two_connected(self) -> bool:
        return is_two_connected(self.graph)

    def __repr__(self) -> str:
        return f"Instance(seed={self.seed}, steps={self.steps}, n={len(self.graph)})"


def build_corpus(size=CORPUS_SIZE):
    out = []
    for seed in range(size):
        steps = seed % (MAX_STEPS + 1)
        flag = seed % 2 == 0
        out.append(Instance(seed, steps, flag, gen.random_squaregraph(seed, steps, flag)))
    return out


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    return build_corpus(60)


NAMED = {
    "c4": lambda: gen.cycle(4),
    "domino": gen.domino,
    "grid33": lambda: gen.grid(3, 3),
    "grid34": lambda: gen.grid(3, 4),
    "ladder": lambda: gen.grid(2, 4),
    "cog4": lambda: gen.cogwheel(4),
    "cog5": lambda: gen.cogwheel(5),
    "cog6": lambda: gen.cogwheel(6),
    "star3": lambda: gen.star(3),
    "path5": lambda: gen.path(5),
    "k2": lambda: gen.path(2),
    "point": lambda: gen.path(1),
    "L-tromino": lambda: gen.polyomino([(0, 0), (1, 0), (0, 1)]),
    "S-tetromino": lambda: gen.polyomino([(0, 0), (1, 0), (1, 1), (2, 1)]),
}


@pytest.fixture(params=sorted(NAMED))
def named(request):
    return request.param, NAMED[request.param]()


# acceptance summary, one line per criterion
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0][2:])):
        ok, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {detail}")
