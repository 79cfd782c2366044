import pytest

from tmseq import tm_prefix_flip
from tmseq._kernels import warmup


@pytest.fixture(scope="session", autouse=True)
def _compiled_kernels():
    # pay the JIT cost once, outside any timed test
    warmup()


@pytest.fixture(scope="session")
def m_64k():
    return tm_prefix_flip(1 << 16)


@pytest.fixture(scope="session")
def m_16():
    return tm_prefix_flip(16)
