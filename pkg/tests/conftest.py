import pytest

from app.models import fixtures
from app.models.generator import enumerate_hemirings
from app.services.hemiring_service import HemiringService
from app.utils.config import WorkbenchConfig


@pytest.fixture
def ex66():
    return fixtures.ex66()


@pytest.fixture
def ex67():
    return fixtures.ex67()


@pytest.fixture
def z2_field():
    return fixtures.z2_field()


@pytest.fixture
def z2_null():
    return fixtures.z2_null()


@pytest.fixture
def trivial():
    return fixtures.trivial()


@pytest.fixture
def small_config():
    return WorkbenchConfig(denominator=4)


@pytest.fixture(scope="session")
def corpus_up_to_2():
    return enumerate_hemirings(1) + enumerate_hemirings(2)


@pytest.fixture(scope="session")
def corpus_3():
    return enumerate_hemirings(3)


@pytest.fixture
def write_structure(tmp_path):
    service = HemiringService()

    def write(hemiring, name=None):
        return service.save(hemiring, tmp_path / f"{name or hemiring.name}.json")

    return write
