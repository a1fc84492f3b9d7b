import mpmath as mp
import pytest

from rhv.hpmath import PrecisionSpec


@pytest.fixture
def prec30():
    return PrecisionSpec(working_digits=30)


@pytest.fixture
def prec40():
    return PrecisionSpec(working_digits=40)


@pytest.fixture
def prec50():
    return PrecisionSpec(working_digits=50)


@pytest.fixture(autouse=True)
def _restore_dps():
    # kernels must not leak precision into the ambient context
    saved = mp.mp.dps
    yield
    mp.mp.dps = saved
