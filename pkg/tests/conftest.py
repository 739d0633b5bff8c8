from fractions import Fraction as F

import pytest

from volring.rootdata import build_root_system


@pytest.fixture(scope="session")
def A1():
    return build_root_system("A", 1)


@pytest.fixture(scope="session")
def A2():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def B2():
    return build_root_system("B", 2)


def verts(p):
    """Vertices as tuples of strings, convenient for frozen comparisons."""
    from volring.polykernel import vertices_of

    return [tuple(str(x) for x in v) for v in vertices_of(p)]


__all__ = ["F", "verts"]
