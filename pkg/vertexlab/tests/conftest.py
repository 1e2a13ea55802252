from pathlib import Path

import pytest

from vertexlab.lattice.context import LatticeContext


@pytest.fixture(scope="session")
def package_path() -> Path:
    """Fixture that returns the path to the repository root directory.

    Returns
    -------
    Path
    """
    return Path(__file__).parent.parent.parent


@pytest.fixture(scope="session")
def tests_path(package_path: Path) -> Path:
    """Fixture that returns the path to the directory containing vertexlab tests.

    Returns
    -------
    Path
    """
    return package_path / "vertexlab" / "tests"


@pytest.fixture(scope="session")
def z1() -> LatticeContext:
    """The rank-one lattice ℤα with (α|α) = 1 carrying the boson-fermion correspondence."""
    return LatticeContext([[1]])


@pytest.fixture(scope="session")
def a1() -> LatticeContext:
    """The root lattice of sl2, (α|α) = 2."""
    return LatticeContext([[2]])


@pytest.fixture(scope="session")
def a2() -> LatticeContext:
    """The A2 root lattice in the basis of simple roots."""
    return LatticeContext([[2, -1], [-1, 2]])
