import numpy as np
import pytest

from pharmonic.harmonic import HarmonicSeries, PHarmonicMap

ACCEPTANCE_LINES = []


def random_series(rng, deg, scale=1.0, c0=True):
    c = rng.uniform(-scale, scale, deg) + 1j * rng.uniform(-scale, scale, deg)
    d = rng.uniform(-scale, scale, deg) + 1j * rng.uniform(-scale, scale, deg)
    const = complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale)) if c0 else 0j
    return HarmonicSeries(const, c, d)


def normalized_series(rng, deg, budget=0.95):
    """``z`` plus a perturbation with ``|d_1| + sum_{n>=2} (|c_n| + |d_n|) < budget``.

    Such a series vanishes only at the origin, so ``DG/G`` stays bounded.
    """
    s = random_series(rng, deg, c0=False)
    c, d = np.array(s.c), np.array(s.d)
    c[0] = 0
    total = np.abs(c).sum() + np.abs(d).sum()
    if total > 0:
        scale = rng.uniform(0, budget) / total
        c, d = c * scale, d * scale
    c[0] = 1
    return HarmonicSeries(0j, c, d)


def random_map(rng, p, deg, scale=1.0):
    return PHarmonicMap(tuple(random_series(rng, deg, scale) for _ in range(p)))


def random_disk_points(rng, n, r_max=0.95):
    r = r_max * np.sqrt(rng.uniform(0, 1, n))
    return r * np.exp(2j * np.pi * rng.uniform(0, 1, n))


def identity_series():
    return HarmonicSeries.from_dicts(c={1: 1})


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
