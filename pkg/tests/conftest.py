import pytest
from hypothesis import settings

from klrcell.combinatorics import RootVector

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def A(text: str) -> RootVector:
    return RootVector.parse(text)


@pytest.fixture
def alpha():
    return A


def random_generators(R, rnd, max_len):
    """A random generator word of length 1..max_len for ``R`` (idempotents, dots, crossings)."""
    from klrcell.engine import Generator

    out = []
    for _ in range(rnd.randint(1, max_len)):
        kind = rnd.choice(("e", "y", "psi", "psi"))
        if kind == "e":
            out.append(Generator("e", rnd.choice(R.words)))
        elif kind == "y":
            out.append(Generator("y", rnd.randint(1, R.d)))
        elif R.d > 1:
            out.append(Generator("psi", rnd.randint(1, R.d - 1)))
    return out or [Generator("e", R.words[0])]


def random_element(R, rnd, max_len=4, terms=2):
    x = R.zero()
    for _ in range(terms):
        x = x + R.from_generators(random_generators(R, rnd, max_len)) * rnd.choice((-2, -1, 1, 3))
    return x


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
