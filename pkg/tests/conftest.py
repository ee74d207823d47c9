import pytest

from oddunitary.matrix import Matrix
from oddunitary.rings import make_ring
from oddunitary.space import SpaceConfig, standard_phi

# lines collected by test_acceptance.py, echoed at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(':'))):
            terminalreporter.write_line(line)


def phi_for(ring, n):
    """An anti-Hermitian invertible ``(phi, phi_inv)`` of size n, or None if none is at hand."""
    if n == 0:
        return None, None
    if n % 2 == 0:
        return standard_phi(ring, n, "skew")
    if ring.involution == "negation":
        eye = Matrix.identity(ring, n)
        return eye, eye
    if ring.involution == "twist_i" and ring.finite and ring.k % 2:
        # 1 - i satisfies x = -bar(x) and is a unit when k is odd
        x = ring((1, -1))
        return Matrix.diagonal(ring, [x] * n), Matrix.diagonal(ring, [x.inv()] * n)
    return None


def space(ring, m, n):
    phis = phi_for(ring, n)
    if phis is None:
        return None
    return SpaceConfig(ring, m, n, *phis)


@pytest.fixture
def z5():
    return make_ring("mod", "negation", 5)


@pytest.fixture
def demo_cfg(z5):
    return SpaceConfig.standard(z5, 1, 2, "identity")
