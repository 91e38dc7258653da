import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from habw import PolyRing, PrimeField, RingPresentation

F = PrimeField(32003)


@pytest.fixture(scope="session")
def gf():
    return F


@pytest.fixture(scope="session")
def ring1():
    """k[x]"""
    return RingPresentation(PolyRing(F, ["x"]), [])


@pytest.fixture(scope="session")
def ring2():
    """k[x,y]"""
    return RingPresentation(PolyRing(F, ["x", "y"]), [])


@pytest.fixture(scope="session")
def ring3():
    """k[x,y,z]"""
    return RingPresentation(PolyRing(F, ["x", "y", "z"]), [])


@pytest.fixture(scope="session")
def dual_numbers():
    """k[x]/(x^2)"""
    amb = PolyRing(F, ["x"])
    return RingPresentation(amb, [amb.var(0) ** 2])


@pytest.fixture(scope="session")
def fat_point():
    """k[x,y]/(x^2, xy, y^2)"""
    amb = PolyRing(F, ["x", "y"])
    x, y = amb.gens()
    return RingPresentation(amb, [x**2, x * y, y**2])


@pytest.fixture(scope="session")
def ci_point():
    """k[x,y]/(x^2, y^2)"""
    amb = PolyRing(F, ["x", "y"])
    x, y = amb.gens()
    return RingPresentation(amb, [x**2, y**2])


@pytest.fixture(scope="session")
def node_curve():
    """k[x,y]/(xy)"""
    amb = PolyRing(F, ["x", "y"])
    x, y = amb.gens()
    return RingPresentation(amb, [x * y])


def corpus_dir() -> Path:
    import habw

    return Path(habw.__file__).parent / "corpus"
