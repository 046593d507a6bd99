import random
import subprocess
import sys
from pathlib import Path

import pytest

import tis

DATA = Path(__file__).parent / "data"


def load(name: str) -> tis.TemporalIntervalInstance:
    return tis.parse_instance((DATA / name).read_text())


@pytest.fixture(scope="session")
def windows_triangle():
    """Five vertices, three edge layers, delta 2: the worked example whose
    conflict graph is known edge for edge."""
    return load("windows_triangle.tis")


@pytest.fixture(scope="session")
def two_layer_path():
    """Six unit vertices over two layers, not order preserving; one deletion
    fixes it."""
    return load("two_layer_path.tis")


@pytest.fixture(scope="session")
def pooled_trap():
    """Regression instance: the pooled clique matrix's minimal column
    witness induces an order-preserving sub-instance, and a vertex outside
    the witness is a valid deletion set."""
    return load("pooled_trap.tis")


@pytest.fixture(scope="session")
def single_vertex():
    return load("single.tis")


@pytest.fixture(scope="session")
def weighted_corpus():
    """500 seeded random unit instances, n in [4,10], tau in [2,4], delta in
    [1,2], random weights in [1,5]. Shared by the approximation-bound and
    neighborhood-bound suites."""
    out = []
    for seed in range(500):
        n = 4 + seed % 7
        tau = 2 + seed % 3
        delta = 1 + seed % 2
        spread = 2 if (seed // 7) % 2 == 0 else 3
        out.append(
            tis.gen_random_unit(
                n, tau, delta, 0, seed=seed, spread=spread, max_weight=5
            )
        )
    return out


@pytest.fixture(scope="session")
def op_corpus():
    """200 order-preserving instances, n in [4,12]."""
    out = []
    for seed in range(200):
        n = 4 + seed % 9
        tau = 2 + seed % 3
        delta = 1 + seed % 2
        out.append(tis.gen_order_preserving(n, tau, delta, 0, seed=12000 + seed))
    return out


@pytest.fixture(scope="session")
def small_corpus():
    """200 instances with n <= 7, half random (dense, mostly not order
    preserving), half order preserving by construction."""
    out = []
    for seed in range(200):
        n = 3 + seed % 5
        tau = 2 + seed % 2
        if seed % 2 == 0:
            out.append(tis.gen_random_unit(n, tau, 1, 0, seed=8000 + seed, spread=2))
        else:
            out.append(tis.gen_order_preserving(n, tau, 1, 0, seed=8000 + seed))
    return out


@pytest.fixture(scope="session")
def opvd_corpus():
    """100 instances with n <= 12 for deletion-set minimality checks."""
    out = []
    for seed in range(100):
        n = 4 + seed % 9
        out.append(tis.gen_random_unit(n, 2, 1, 0, seed=3000 + seed, spread=2))
    return out


@pytest.fixture(scope="session")
def fpt_corpus():
    """200 instances with n <= 14 for the parameterized-solver equivalence."""
    out = []
    for seed in range(200):
        n = 4 + seed % 11
        tau = 2 + seed % 2
        delta = 1 + (seed // 3) % 2
        spread = 3 if seed % 2 == 0 else 4
        out.append(
            tis.gen_random_unit(
                n, tau, delta, 0, seed=4000 + seed, spread=spread, max_weight=4
            )
        )
    return out


@pytest.fixture(scope="session")
def gadget_cases():
    """Permutation families for the reduction-law suite: exhaustive over the
    alphabet-2 families with up to three strings, sampled for alphabets 3
    and 4. 56 cases total."""
    import itertools

    rng = random.Random(99)
    cases = []
    perms2 = [list(p) for p in itertools.permutations([1, 2])]
    for tau in (1, 2, 3):
        for combo in itertools.product(perms2, repeat=tau):
            cases.append([list(p) for p in combo])
    for n, count in ((3, 24), (4, 18)):
        allp = [list(p) for p in itertools.permutations(range(1, n + 1))]
        for _ in range(count):
            tau = rng.randint(1, 3)
            cases.append([rng.choice(allp) for _ in range(tau)])
    return cases


def invoke_cli(*argv: str, cwd=None) -> subprocess.CompletedProcess:
    """Run the command line front end in a fresh interpreter."""
    return subprocess.run(
        [sys.executable, "-c", "from tis.cli import main; main()", *argv],
        capture_output=True,
        text=True,
        cwd=cwd,
        timeout=120,
    )


@pytest.fixture(scope="session")
def run_cli():
    return invoke_cli
