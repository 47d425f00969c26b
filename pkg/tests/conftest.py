import pytest

from drinfeld_j.function_field import load_curve
from drinfeld_j.ideals import class_group, ideal_from_generators


@pytest.fixture(scope="session")
def rational():
    return load_curve("rational")


@pytest.fixture(scope="session")
def elliptic():
    return load_curve("elliptic")


@pytest.fixture(scope="session")
def inert():
    return load_curve("inert")


@pytest.fixture(scope="session")
def elliptic_classes(elliptic):
    return class_group(elliptic)


@pytest.fixture(scope="session")
def inert_classes(inert):
    return class_group(inert)


@pytest.fixture(scope="session")
def p0(elliptic):
    """The degree-one prime (x, y - 1) above the point (0, 1)."""
    return ideal_from_generators([elliptic.x(), elliptic.y() - elliptic.one()])


@pytest.fixture(scope="session")
def elliptic_jtable(elliptic, elliptic_classes):
    from drinfeld_j.zeta import j_table
    return j_table(elliptic, 30, table=elliptic_classes)
