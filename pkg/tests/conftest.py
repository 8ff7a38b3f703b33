import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from schunck import catalog, groups  # noqa: E402
from schunck.formats import load_file  # noqa: E402

ROOT = Path(__file__).resolve().parents[1]


def algebra(name):
    return load_file(ROOT / "algebras" / name)


@pytest.fixture(scope="session")
def root():
    return ROOT


@pytest.fixture(scope="session")
def l_aff():
    return algebra("l_aff_3.lie")


@pytest.fixture(scope="session")
def h3():
    return algebra("h3_3.lie")


@pytest.fixture(scope="session")
def s3():
    return groups.symmetric(3)


@pytest.fixture(scope="session")
def lie_f2():
    return catalog.generate_lie_catalog(2, 4)


@pytest.fixture(scope="session")
def lie_f3():
    return catalog.generate_lie_catalog(3, 4)


@pytest.fixture(scope="session")
def lie_f5():
    return catalog.generate_lie_catalog(5, 4)


@pytest.fixture(scope="session")
def group_cat():
    return catalog.builtin_group_catalog()


@pytest.fixture(scope="session")
def full_catalog(lie_f2, lie_f3, group_cat):
    return lie_f2 + lie_f3 + group_cat


@pytest.fixture(scope="session")
def small_lie(lie_f2, lie_f3):
    """The exhaustive part: every solvable Lie algebra of dim <= 3 over F_2 and F_3."""
    return catalog.Catalog([e for e in lie_f2 + lie_f3 if e.size <= 3])
