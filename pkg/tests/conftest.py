import pytest
from hypothesis import strategies as st

from dyckpairs.dyckpath import DyckPath
from dyckpairs.permutation import Permutation

ACCEPTANCE_KEY = pytest.StashKey[list]()


@st.composite
def dyck_paths(draw, max_n=8):
    """Uniform-ish Dyck paths via the cycle lemma on n U's and n + 1 D's."""
    n = draw(st.integers(0, max_n))
    word = draw(st.permutations("U" * n + "D" * (n + 1)))
    height, low, cut = 0, 0, 0
    for i, s in enumerate(word):
        height += 1 if s == "U" else -1
        if height < low:
            low, cut = height, i + 1
    rotated = word[cut:] + word[:cut]
    return DyckPath("".join(rotated[:-1]))


@st.composite
def perms(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    return Permutation(draw(st.permutations(range(1, n + 1))))


def P(text):
    return Permutation.parse(text)


@pytest.fixture
def report(request):
    lines = request.config.stash.setdefault(ACCEPTANCE_KEY, [])

    def add(criterion, passed, detail=""):
        lines.append(f"criterion {criterion}: {'PASS' if passed else 'FAIL'} {detail}".rstrip())

    return add


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
