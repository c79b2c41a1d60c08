import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polybetti import DualTriangulation, bigraded_betti, enumerate_triangulations
from polybetti.catalog import load_table2, table2_row
from polybetti.verify import octahedron, tetrahedron


@pytest.fixture(scope="session")
def P():
    return table2_row(12)


@pytest.fixture(scope="session")
def Q():
    return table2_row(24)


@pytest.fixture(scope="session")
def tet():
    return tetrahedron()


@pytest.fixture(scope="session")
def octa():
    return octahedron()


@pytest.fixture(scope="session")
def stacked():
    """K4 with an extra vertex inside the face abc."""
    faces = [(0, 1, 3), (1, 2, 3), (0, 2, 3), (0, 1, 4), (1, 2, 4), (0, 2, 4)]
    return DualTriangulation.from_faces(5, faces)


@pytest.fixture(scope="session")
def table2():
    return load_table2()


@pytest.fixture(scope="session")
def table2_betti(table2):
    return {e.id: bigraded_betti(e.triangulation) for e in table2}


@pytest.fixture(scope="session")
def small_triangulations():
    """All triangulation classes with 4 to 9 vertices."""
    return {n: enumerate_triangulations(n) for n in range(4, 10)}


@pytest.fixture(scope="session")
def eleven():
    return enumerate_triangulations(11)
