import pytest
from hypothesis import settings, strategies as st

from phasecat.matcat import Matrix
from phasecat.quotient import QuotCategory
from phasecat.gp import GPCategory
from phasecat.scalars import Gaussian, gaussian, prime_field, validate_phase_group

settings.register_profile("phasecat", max_examples=60, deadline=None)
settings.load_profile("phasecat")

QI = gaussian()
P4 = validate_phase_group(QI, ["1", "i", "-1", "-i"])


@pytest.fixture
def ring():
    return QI


@pytest.fixture
def group():
    return P4


@pytest.fixture
def quot():
    return QuotCategory(P4)


@pytest.fixture
def gp():
    return GPCategory(P4)


@pytest.fixture
def f3():
    return prime_field(3)


def gaussians(height=3):
    return st.builds(Gaussian, st.integers(-height, height), st.integers(-height, height),
                     st.integers(1, height))


def matrices(rows, cols, ring=QI, height=3):
    return st.lists(gaussians(height), min_size=rows * cols, max_size=rows * cols).map(
        lambda xs: Matrix(ring, rows, cols, xs))


@st.composite
def sized_matrices(draw, max_dim=3, ring=QI, min_dim=0):
    rows = draw(st.integers(min_dim, max_dim))
    cols = draw(st.integers(min_dim, max_dim))
    return draw(matrices(rows, cols, ring))


@st.composite
def composable(draw, max_dim=3):
    a, b, c = (draw(st.integers(0, max_dim)) for _ in range(3))
    return draw(matrices(b, a)), draw(matrices(c, b))


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line; the lines are repeated in the terminal summary."""
    lines = request.config.stash.setdefault(ACCEPTANCE, [])

    def record(number: int, name: str, ok: bool, detail: str = ""):
        line = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
        print(line)
        lines.append((number, line))
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
