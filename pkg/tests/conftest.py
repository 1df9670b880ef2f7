import random
from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from symplie.exterior import KForm, basis
from symplie.linalg import det

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_ints = st.integers(min_value=-5, max_value=5)
rationals = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 9))


@st.composite
def forms(draw, dim, degree):
    idx = basis(dim, degree)
    coeffs = draw(st.lists(small_ints, min_size=len(idx), max_size=len(idx)))
    return KForm(dim, degree, {i: c for i, c in zip(idx, coeffs) if c})


@st.composite
def invertible_matrices(draw, n):
    rng = random.Random(draw(st.integers(0, 2**32)))
    while True:
        m = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if det(m) != 0:
            return m


# one line per acceptance criterion, printed after the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
