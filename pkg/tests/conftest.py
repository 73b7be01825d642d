import pytest
from hypothesis import strategies as st

from dungsolve import build_framework
from dungsolve.framework import Framework

F0 = build_framework([], [])
F3 = build_framework(["a", "b", "c"], [("a", "b"), ("b", "c")])
F4 = build_framework(["a", "b"], [("a", "b"), ("b", "a")])
F5 = build_framework(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
F6 = build_framework(["a"], [("a", "a")])

FIXTURES = {"F0": F0, "F3": F3, "F4": F4, "F5": F5, "F6": F6}


@pytest.fixture(params=sorted(FIXTURES))
def fixture_af(request):
    return FIXTURES[request.param]


@st.composite
def frameworks(draw, max_arguments=8):
    n = draw(st.integers(0, max_arguments))
    pairs = [(i, j) for i in range(n) for j in range(n)]
    attacks = draw(st.sets(st.sampled_from(pairs), max_size=len(pairs))) if pairs else set()
    return Framework([f"x{i}" for i in range(n)], attacks)


@st.composite
def framework_and_subsets(draw, max_arguments=8):
    f = draw(frameworks(max_arguments))
    n = len(f)
    s = draw(st.integers(0, (1 << n) - 1)) if n else 0
    t = draw(st.integers(0, (1 << n) - 1)) if n else 0
    return f, s, t


ACCEPTANCE_RESULTS: dict[int, tuple[str, bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        title, ok, detail = ACCEPTANCE_RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num}. {title}: {detail}")
